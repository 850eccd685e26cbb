#include "fuzzvec/cli.hpp"

#include "fuzzvec/errors.hpp"
#include "fuzzvec/io.hpp"
#include "fuzzvec/mares.hpp"
#include "fuzzvec/oracles.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <numbers>
#include <optional>

namespace fuzzvec::cli {

namespace {

namespace g = geometry;
using io::json;

constexpr double kArcStep = 5.0 * std::numbers::pi / 180.0;

struct Options {
  std::vector<std::string> inputs;
  std::string output;
  std::optional<double> tol;
  std::string mode;
  int dirs = 72;
  std::uint64_t seed = 1;
  std::string alphas;
};

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.output.empty()) out << text;
  else io::write_text_file(opt.output, text);
}

fuzzy::FuzzyVector load_fuzzy(const std::string& path, const Options& opt) {
  auto u = io::fuzzy_from_json(io::read_json_file(path));
  if (!opt.mode.empty()) {
    const auto m = fuzzy::parse_mode(opt.mode);
    if (m != u.mode()) u = fuzzy::resample(u, u.grid(), m);
  }
  return u;
}

std::vector<double> parse_alphas(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw InvalidArgument("--alphas: '" + item + "' is not a number");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

/// Boundary of P + B(r) for a planar body: ring vertices with the corner
/// arcs sampled at no more than 5 degree steps.
json rounded_boundary(const g::ConvexBody& body) {
  const auto ring = g::polygon_ring(body);
  const double r = body.radius();
  json pts = json::array();
  if (r == 0.0) {
    for (const auto& p : ring) pts.push_back(io::to_json(p));
    return pts;
  }
  const std::size_t m = ring.size();
  auto arc = [&](const g::Vector& c, double from, double to) {
    const int steps = std::max(1, static_cast<int>(std::ceil((to - from) / kArcStep)));
    for (int s = 0; s <= steps; ++s) {
      const double t = from + (to - from) * s / steps;
      pts.push_back(io::to_json(g::Vector(c + r * g::Direction::from_angle(t).vec())));
    }
  };
  if (m == 1) {
    arc(ring[0], 0.0, 2.0 * std::numbers::pi);
    pts.erase(pts.end() - 1);
    return pts;
  }
  std::vector<double> normal_angle(m);
  for (std::size_t i = 0; i < m; ++i) {
    const g::Vector e = ring[(i + 1) % m] - ring[i];
    normal_angle[i] = std::atan2(-e[0], e[1]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    double from = normal_angle[(i + m - 1) % m];
    double to = normal_angle[i];
    while (to < from) to += 2.0 * std::numbers::pi;
    arc(ring[i], from, to);
  }
  return pts;
}

int cmd_validate(const Options& opt, std::ostream& out, std::ostream& err) {
  fuzzy::AlphaGrid grid;
  std::vector<g::ConvexBody> levels;
  fuzzy::Mode mode{};
  io::fuzzy_parts_from_json(io::read_json_file(opt.inputs.at(0)), grid, levels, mode);
  if (!opt.mode.empty()) mode = fuzzy::parse_mode(opt.mode);
  const double tol = opt.tol.value_or(g::kEps);

  json result;
  const auto level_report = fuzzy::validate_levels(grid, levels, mode, tol);
  result["levels"] = io::to_json(level_report);
  bool valid = level_report.valid();
  std::optional<fuzzy::Violation> first;
  if (!valid) first = level_report.violations.front();

  if (valid) {
    const auto u = fuzzy::make_fuzzy(grid, levels, mode);
    std::vector<g::Direction> extra;
    if (u.dim() == 2)
      for (const auto& l : u.levels())
        for (const auto& d : g::edge_normals(l)) extra.push_back(d);
    const auto sample = oracles::direction_sample(u.dim(), static_cast<std::size_t>(opt.dirs), opt.seed, extra);
    const auto table_report = fuzzy::validate_support_table(fuzzy::support_table(u, sample.directions), tol);
    result["support"] = io::to_json(table_report);
    if (!table_report.valid()) {
      valid = false;
      first = table_report.violations.front();
    }
  }
  result["valid"] = valid;
  emit(opt, io::dump_canonical(result), out);
  if (!valid) {
    err << json{{"code", kInvalid}, {"condition", first->condition}, {"message", first->message},
                {"witness", first->witness()}}
               .dump()
        << "\n";
    return kInvalid;
  }
  return kOk;
}

int cmd_add(const Options& opt, std::ostream& out) {
  const auto u = load_fuzzy(opt.inputs.at(0), opt);
  const auto v = load_fuzzy(opt.inputs.at(1), opt);
  emit(opt, io::dump_canonical(io::to_json(fuzzy::add(u, v))), out);
  return kOk;
}

int cmd_core(const Options& opt, std::ostream& out) {
  const auto u = load_fuzzy(opt.inputs.at(0), opt);
  emit(opt, io::dump_canonical(io::to_json(mares::mares_core(u))), out);
  return kOk;
}

int cmd_skew(const Options& opt, std::ostream& out) {
  const auto u = load_fuzzy(opt.inputs.at(0), opt);
  const double tol = opt.tol.value_or(mares::kSkewTol);
  const double s0 = mares::skewness(u);
  emit(opt, io::dump_canonical(json{{"sigma0", s0}, {"skew", s0 <= tol}, {"tol", tol}}), out);
  return kOk;
}

int cmd_equiv(const Options& opt, std::ostream& out) {
  const auto u = load_fuzzy(opt.inputs.at(0), opt);
  const auto v = load_fuzzy(opt.inputs.at(1), opt);
  const auto report = mares::mares_equivalence(u, v, opt.tol.value_or(g::kEps));
  emit(opt, io::dump_canonical(io::to_json(report)), out);
  return kOk;
}

int cmd_kmin(const Options& opt, std::ostream& out) {
  const auto u = load_fuzzy(opt.inputs.at(0), opt);
  emit(opt, io::dump_canonical(io::to_json(mares::class_minimum(u))), out);
  return kOk;
}

int cmd_decompose_body(const Options& opt, std::ostream& out) {
  const auto body = io::body_from_json(io::read_json_file(opt.inputs.at(0)));
  const auto d = g::canonical_decompose(body);
  emit(opt, io::dump_canonical(json{{"irreducible", io::to_json(d.irreducible)}, {"lambda", d.lambda}}), out);
  return kOk;
}

int cmd_export_support(const Options& opt, std::ostream& out) {
  const auto u = load_fuzzy(opt.inputs.at(0), opt);
  if (opt.dirs < 1) throw InvalidArgument("--dirs must be positive");
  const auto sample = oracles::direction_sample(u.dim(), static_cast<std::size_t>(opt.dirs), opt.seed);
  emit(opt, io::support_csv(fuzzy::support_table(u, sample.directions)), out);
  return kOk;
}

int cmd_export_levels(const Options& opt, std::ostream& out) {
  const auto u = load_fuzzy(opt.inputs.at(0), opt);
  const auto alphas = opt.alphas.empty() ? u.grid().knots() : parse_alphas(opt.alphas);
  if (u.dim() > 2) throw Unsupported("export-levels: dimension >= 3");
  json levels = json::array();
  for (double a : alphas) {
    const auto l = fuzzy::level_set(u, a);
    json e{{"alpha", a}};
    if (u.dim() == 1) {
      const double c = l.generators().front()[0];
      e["interval"] = json::array({c - l.radius(), c + l.radius()});
    } else {
      json ring = json::array();
      for (const auto& p : g::polygon_ring(l)) ring.push_back(io::to_json(p));
      e["vertices"] = ring;
      e["radius"] = l.radius();
      e["boundary"] = rounded_boundary(l);
    }
    levels.push_back(e);
  }
  emit(opt, io::dump_canonical(json{{"dim", u.dim()}, {"levels", levels}}), out);
  return kOk;
}

void error_line(std::ostream& err, int code, const std::string& message, const std::string& condition = {},
                const std::string& witness = {}) {
  json j{{"code", code}, {"message", message}};
  if (!condition.empty()) j["condition"] = condition;
  if (!witness.empty()) j["witness"] = witness;
  err << j.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy vectors as nested convex bodies: validation, Zadeh sums, Mares cores."};
  app.name(args.empty() ? "fuzzvec" : args.front());
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub, int inputs, const std::string& what) {
    sub->add_option("inputs", opt.inputs, what)->required()->expected(inputs)->check(CLI::ExistingFile);
    sub->add_option("-o,--output", opt.output, "Output file (default: standard output)");
    sub->add_option("--mode", opt.mode, "Re-interpret inputs in this mode (step|linear)")
        ->check(CLI::IsMember({"step", "linear"}));
    sub->add_option("--tol", opt.tol, "Tolerance override");
    sub->add_option("--seed", opt.seed, "Seed for sampled directions (dimension >= 3)");
  };

  auto* validate = app.add_subcommand("validate", "Check the level-set and support-function conditions");
  common(validate, 1, "Fuzzy vector JSON");
  validate->add_option("--dirs", opt.dirs, "Sampled directions for the support checks");
  auto* add = app.add_subcommand("add", "Zadeh sum of two fuzzy vectors");
  common(add, 2, "Two fuzzy vector JSON files");
  auto* core = app.add_subcommand("core", "Mares core and maximal symmetric profile");
  common(core, 1, "Fuzzy vector JSON");
  auto* skew = app.add_subcommand("skew", "Skewness certificate");
  common(skew, 1, "Fuzzy vector JSON");
  auto* equiv = app.add_subcommand("equiv", "Mares equivalence with witness");
  common(equiv, 2, "Two fuzzy vector JSON files");
  auto* kmin = app.add_subcommand("kmin", "Class minimum");
  common(kmin, 1, "Fuzzy vector JSON");
  auto* decompose = app.add_subcommand("decompose-body", "Irreducible part and largest regular erosion distance");
  common(decompose, 1, "Body JSON");
  auto* support = app.add_subcommand("export-support", "Support table as CSV (alpha, direction, value)");
  common(support, 1, "Fuzzy vector JSON");
  support->add_option("--dirs", opt.dirs, "Number of directions");
  auto* levels = app.add_subcommand("export-levels", "Level sets for plotting");
  common(levels, 1, "Fuzzy vector JSON");
  levels->add_option("--alphas", opt.alphas, "Comma-separated alpha values (default: the knots)");

  std::vector<std::string> rev(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    error_line(err, kUsage, e.what());
    return kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(opt, out, err);
    if (add->parsed()) return cmd_add(opt, out);
    if (core->parsed()) return cmd_core(opt, out);
    if (skew->parsed()) return cmd_skew(opt, out);
    if (equiv->parsed()) return cmd_equiv(opt, out);
    if (kmin->parsed()) return cmd_kmin(opt, out);
    if (decompose->parsed()) return cmd_decompose_body(opt, out);
    if (support->parsed()) return cmd_export_support(opt, out);
    if (levels->parsed()) return cmd_export_levels(opt, out);
  } catch (const ValidationError& e) {
    error_line(err, kInvalid, e.what(), e.condition(), e.witness());
    return kInvalid;
  } catch (const InvalidArgument& e) {
    error_line(err, kUsage, e.what());
    return kUsage;
  } catch (const NumericalFailure& e) {
    error_line(err, kNumerical, e.what());
    return kNumerical;
  } catch (const Unsupported& e) {
    error_line(err, kNumerical, e.what());
    return kNumerical;
  }
  error_line(err, kUsage, "no subcommand");
  return kUsage;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace fuzzvec::cli
