// Writes the reference fixtures, or compares them byte for byte (--check).

#include "fuzzvec/examples.hpp"
#include "fuzzvec/io.hpp"
#include "fuzzvec/mares.hpp"
#include "fuzzvec/oracles.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace fuzzvec;
using io::json;

namespace {

std::string lambda_tag(double lambda) {
  std::ostringstream os;
  os << lambda;
  return os.str();
}

std::vector<std::pair<std::string, std::string>> build() {
  std::vector<std::pair<std::string, json>> docs;

  const auto u = examples::family_u();
  docs.emplace_back("family_u.json", io::to_json(u));
  for (double lambda : {0.0, 0.5, 1.0}) {
    docs.emplace_back("family_v_" + lambda_tag(lambda) + ".json", io::to_json(examples::family_v(lambda)));
    docs.emplace_back("family_w_" + lambda_tag(lambda) + ".json", io::to_json(examples::family_w(lambda)));
  }
  docs.emplace_back("triangular_number.json", io::to_json(examples::triangular_number()));
  docs.emplace_back("unit_ball.json", io::to_json(examples::unit_ball_vector()));
  docs.emplace_back("shrinking_ball.json", io::to_json(examples::shrinking_ball_vector()));

  json singleton{{"dim", 1}, {"mode", "linear"}, {"knots", examples::singleton_grid().knots()}};
  singleton["levels"] = json::array();
  for (const auto& l : examples::singleton_levels()) singleton["levels"].push_back(io::to_json(l));
  docs.emplace_back("singleton_family.json", singleton);

  docs.emplace_back("square_b2.json",
                    io::to_json(geometry::minkowski_sum(examples::square(), geometry::ball(2, 2))));
  docs.emplace_back("hypercube_side4.json", io::to_json(examples::square(2.0)));

  docs.emplace_back("core_family_u.json", io::to_json(mares::mares_core(u)));
  docs.emplace_back("kmin_family_u.json", io::to_json(mares::class_minimum(u)));
  docs.emplace_back("core_triangular_number.json", io::to_json(mares::mares_core(examples::triangular_number())));

  // Oracle reports; names carry the resolution, quantum and budget.
  docs.emplace_back("raster_family_v0_w0_res101.json",
                    io::to_json(oracles::raster_membership_oracle(examples::family_v(0.0), examples::family_w(0.0),
                                                                  3.5, 101)));
  docs.emplace_back("raster_triangular_res401.json",
                    io::to_json(oracles::raster_membership_oracle(examples::triangular_number(),
                                                                  examples::triangular_number(), 2.0, 401)));
  const fuzzy::AlphaGrid half({0.0, 0.5, 1.0});
  docs.emplace_back("search_family_u_half_delta0.25_budget100000.json",
                    io::to_json(oracles::decomposition_search_oracle(fuzzy::resample(u, half, fuzzy::Mode::Linear),
                                                                     {0.25, 100000})));
  docs.emplace_back("search_triangular_delta0.05_budget100000.json",
                    io::to_json(oracles::decomposition_search_oracle(examples::triangular_number(), {0.05, 100000})));
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto r = oracles::random_fuzzy(1, 4, fuzzy::Mode::Step, seed, {0.2, 1.0, 0.1, false});
    const std::string tag = "seed" + std::to_string(seed);
    docs.emplace_back("random_number_step_" + tag + ".json", io::to_json(r));
    docs.emplace_back("search_random_number_step_" + tag + "_delta0.05_budget1000000.json",
                      io::to_json(oracles::decomposition_search_oracle(r, {0.05, 1000000})));
  }

  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [name, doc] : docs) out.emplace_back(name, io::dump_canonical(doc));
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return {};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Write or check the reference fixtures"};
  std::string dir = "fixtures";
  bool check = false;
  app.add_option("dir", dir, "Fixture directory");
  app.add_flag("--check", check, "Compare instead of writing");
  CLI11_PARSE(app, argc, argv);

  try {
    const auto files = build();
    if (check) {
      int bad = 0;
      for (const auto& [name, text] : files) {
        if (slurp(std::filesystem::path(dir) / name) != text) {
          std::cerr << "fixture differs: " << name << "\n";
          ++bad;
        }
      }
      std::cout << files.size() - static_cast<std::size_t>(bad) << "/" << files.size() << " fixtures match\n";
      return bad == 0 ? 0 : 1;
    }
    std::filesystem::create_directories(dir);
    for (const auto& [name, text] : files) io::write_text_file(std::filesystem::path(dir) / name, text);
    std::cout << "wrote " << files.size() << " fixtures to " << dir << "\n";
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
