#pragma once

// JSON and CSV encodings. JSON output is canonical: object keys sorted,
// numbers printed with 17 significant digits, fixed layout, so identical
// values serialize to identical bytes.

#include "fuzzvec/fuzzy.hpp"
#include "fuzzvec/mares.hpp"
#include "fuzzvec/oracles.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace fuzzvec::io {

using json = nlohmann::json;

std::string format_double(double v);
std::string dump_canonical(const json& value);
/// Throws InvalidArgument on malformed text.
json parse_json(const std::string& text);
json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

json to_json(const geometry::Vector& v);
json to_json(const geometry::ConvexBody& body);
json to_json(const fuzzy::FuzzyVector& u);
json to_json(const fuzzy::RadiusProfile& p);
json to_json(const mares::CoreDecomposition& c);
json to_json(const fuzzy::ValidationReport& r);
json to_json(const mares::EquivalenceReport& r);
json to_json(const oracles::RasterReport& r);
json to_json(const oracles::SearchResult& r);

/// Parsers canonicalize bodies and validate fuzzy vectors; malformed
/// documents raise InvalidArgument, invalid content ValidationError.
geometry::Vector vector_from_json(const json& j);
geometry::ConvexBody body_from_json(const json& j);
fuzzy::FuzzyVector fuzzy_from_json(const json& j);
fuzzy::RadiusProfile profile_from_json(const json& j);
/// Level data of a fuzzy document without validation (for reports).
void fuzzy_parts_from_json(const json& j, fuzzy::AlphaGrid& grid, std::vector<geometry::ConvexBody>& levels,
                           fuzzy::Mode& mode);

/// Header direction_0..direction_{n-1},value; one row per direction.
std::string support_csv(const geometry::SupportSampleTable& table);
/// Long format: alpha,direction_0..direction_{n-1},value; rows ordered by
/// knot, then direction.
std::string support_csv(const fuzzy::FuzzySupportTable& table);

}  // namespace fuzzvec::io
