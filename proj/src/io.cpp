#include "fuzzvec/io.hpp"

#include "fuzzvec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fuzzvec::io {

namespace g = geometry;

std::string format_double(double v) {
  if (!std::isfinite(v)) throw InvalidArgument("cannot serialize a non-finite number");
  if (v == 0.0) return "0";  // also folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

bool is_scalar(const json& j) { return !j.is_object() && !j.is_array(); }

void dump_scalar(const json& j, std::string& out) {
  if (j.is_number_float()) out += format_double(j.get<double>());
  else out += j.dump();
}

void dump(const json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {  // std::map: sorted keys
      if (!first) out += ",\n";
      first = false;
      out += pad + json(key).dump() + ": ";
      dump(value, out, indent + 2);
    }
    out += "\n" + close + "}";
  } else if (j.is_array()) {
    if (std::all_of(j.begin(), j.end(), is_scalar)) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ", ";
        dump_scalar(j[i], out);
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      dump(j[i], out, indent + 2);
    }
    out += "\n" + close + "]";
  } else {
    dump_scalar(j, out);
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw InvalidArgument(std::string(what) + " must be a number");
  return j.get<double>();
}

}  // namespace

std::string dump_canonical(const json& value) {
  std::string out;
  dump(value, out, 0);
  out += "\n";
  return out;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_json(os.str());
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path.string() + "'");
  out << text;
}

// ---------------------------------------------------------------------------
// Encoders

json to_json(const g::Vector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

json to_json(const g::ConvexBody& body) {
  json gens = json::array();
  for (const auto& p : body.generators()) gens.push_back(to_json(p));
  return json{{"dim", body.dim()}, {"generators", gens}, {"radius", body.radius()}};
}

json to_json(const fuzzy::FuzzyVector& u) {
  json levels = json::array();
  for (const auto& l : u.levels()) levels.push_back(to_json(l));
  return json{{"dim", u.dim()}, {"mode", fuzzy::mode_name(u.mode())}, {"knots", u.grid().knots()}, {"levels", levels}};
}

json to_json(const fuzzy::RadiusProfile& p) {
  return json{{"knots", p.grid.knots()}, {"values", p.values}, {"mode", fuzzy::mode_name(p.mode)}};
}

json to_json(const mares::CoreDecomposition& c) {
  return json{{"core", to_json(c.core)}, {"profile", to_json(c.profile)}, {"residual", c.residual}};
}

json to_json(const fuzzy::ValidationReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    json e{{"condition", v.condition}, {"message", v.message}, {"knots", v.knots}, {"amount", v.amount}};
    if (v.direction) e["direction"] = to_json(*v.direction);
    violations.push_back(e);
  }
  return json{{"valid", r.valid()}, {"violations", violations}, {"notes", r.notes}};
}

json to_json(const mares::EquivalenceReport& r) {
  json j{{"equivalent", r.equivalent}};
  if (r.alpha) j["alpha"] = *r.alpha;
  if (r.direction) j["direction"] = to_json(*r.direction);
  if (!r.equivalent) j["amount"] = r.amount;
  return j;
}

json to_json(const oracles::RasterReport& r) {
  return json{{"max_discrepancy", r.max_discrepancy},
              {"pitch", r.pitch},
              {"points", r.points},
              {"worst_point", to_json(r.worst_point)}};
}

json to_json(const oracles::SearchResult& r) {
  json cands = json::array();
  for (const auto& c : r.admissible)
    cands.push_back(json{{"profile", c.profile.values}, {"core_shift", c.core_shift}, {"skew", c.skew}});
  return json{{"delta", r.delta},
              {"enumerated", r.enumerated},
              {"budget_exceeded", r.budget_exceeded},
              {"exact_domain", r.exact_domain},
              {"admissible", cands}};
}

// ---------------------------------------------------------------------------
// Decoders

g::Vector vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("a point must be a nonempty array of numbers");
  g::Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = number(j[i], "coordinate");
  return v;
}

g::ConvexBody body_from_json(const json& j) {
  const json& dim = field(j, "dim");
  if (!dim.is_number_integer() || dim.get<long>() < 1) throw InvalidArgument("'dim' must be a positive integer");
  const int n = dim.get<int>();
  const json& gens = field(j, "generators");
  if (!gens.is_array()) throw InvalidArgument("'generators' must be an array");
  std::vector<g::Vector> pts;
  for (const auto& p : gens) pts.push_back(vector_from_json(p));
  const double r = j.contains("radius") ? number(j.at("radius"), "radius") : 0.0;
  return g::make_body(n, std::move(pts), r);
}

void fuzzy_parts_from_json(const json& j, fuzzy::AlphaGrid& grid, std::vector<g::ConvexBody>& levels,
                           fuzzy::Mode& mode) {
  const json& m = field(j, "mode");
  if (!m.is_string()) throw InvalidArgument("'mode' must be a string");
  mode = fuzzy::parse_mode(m.get<std::string>());
  const json& k = field(j, "knots");
  if (!k.is_array()) throw InvalidArgument("'knots' must be an array");
  std::vector<double> knots;
  for (const auto& x : k) knots.push_back(number(x, "knot"));
  grid = fuzzy::AlphaGrid(std::move(knots));
  const json& ls = field(j, "levels");
  if (!ls.is_array()) throw InvalidArgument("'levels' must be an array");
  levels.clear();
  for (const auto& l : ls) levels.push_back(body_from_json(l));
  if (j.contains("dim")) {
    const int n = field(j, "dim").get<int>();
    for (const auto& l : levels)
      if (l.dim() != n) throw InvalidArgument("level dimension differs from 'dim'");
  }
}

fuzzy::FuzzyVector fuzzy_from_json(const json& j) {
  fuzzy::AlphaGrid grid;
  std::vector<g::ConvexBody> levels;
  fuzzy::Mode mode{};
  fuzzy_parts_from_json(j, grid, levels, mode);
  return fuzzy::make_fuzzy(std::move(grid), std::move(levels), mode);
}

fuzzy::RadiusProfile profile_from_json(const json& j) {
  fuzzy::RadiusProfile p;
  std::vector<double> knots;
  for (const auto& x : field(j, "knots")) knots.push_back(number(x, "knot"));
  p.grid = fuzzy::AlphaGrid(std::move(knots));
  for (const auto& x : field(j, "values")) p.values.push_back(number(x, "profile value"));
  p.mode = fuzzy::parse_mode(field(j, "mode").get<std::string>());
  if (p.values.size() != p.grid.size()) throw InvalidArgument("profile: one value per knot is required");
  return p;
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::string csv_header(int n, bool with_alpha) {
  std::string h = with_alpha ? "alpha," : "";
  for (int i = 0; i < n; ++i) h += "direction_" + std::to_string(i) + ",";
  return h + "value\n";
}

void csv_direction(std::string& out, const g::Direction& d) {
  for (int i = 0; i < d.dim(); ++i) out += format_double(d[i]) + ",";
}

}  // namespace

std::string support_csv(const g::SupportSampleTable& table) {
  std::string out = csv_header(table.dim(), false);
  for (std::size_t i = 0; i < table.directions.size(); ++i) {
    csv_direction(out, table.directions[i]);
    out += format_double(table.values[i]) + "\n";
  }
  return out;
}

std::string support_csv(const fuzzy::FuzzySupportTable& table) {
  const int n = table.directions.empty() ? 0 : table.directions.front().dim();
  std::string out = csv_header(n, true);
  for (std::size_t k = 0; k < table.values.size(); ++k) {
    for (std::size_t i = 0; i < table.directions.size(); ++i) {
      out += format_double(table.grid[k]) + ",";
      csv_direction(out, table.directions[i]);
      out += format_double(table.values[k][i]) + "\n";
    }
  }
  return out;
}

}  // namespace fuzzvec::io
