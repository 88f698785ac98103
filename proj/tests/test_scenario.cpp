#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cosserat/scenario.hpp"

using namespace cosserat;

namespace {

std::filesystem::path writeConfig(const std::string& name,
                                  const std::string& body) {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "cosserat_scenarios";
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = dir / name;
  std::ofstream out(path);
  out << body;
  return path;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t lineCount(const std::string& text) {
  std::size_t n = 0;
  for (const char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("energy scenario on the reference flat plate") {
  const auto config = writeConfig("energy_flat.toml",
                                  "[scenario]\n"
                                  "mode = energy\n"
                                  "[patch]\n"
                                  "name = plane\n"
                                  "[field]\n"
                                  "name = identity\n"
                                  "[material]\n"
                                  "h = 0.01\n"
                                  "[quadrature]\n"
                                  "surface_order = 4\n"
                                  "cells_x = 1\n"
                                  "cells_y = 1\n");
  const Scenario sc = parseScenario(config.string());
  const auto outDir = std::filesystem::temp_directory_path() / "cosserat_out1";
  CHECK(runScenario(sc, outDir.string(), false) == 0);

  const std::string totals = slurp(outDir / "energy_total.csv");
  const auto lastComma = totals.find_last_of(',');
  const double total = std::stod(totals.substr(lastComma + 1));
  CHECK(std::abs(total) <= 1e-18);
  CHECK(lineCount(slurp(outDir / "energy_breakdown.csv")) == 17);  // header + 4x4
}

TEST_CASE("energy scenario output is bit-identical across runs") {
  const auto config = writeConfig("energy_torus.toml",
                                  "[scenario]\n"
                                  "mode = energy\n"
                                  "[patch]\n"
                                  "name = torus\n"
                                  "major_radius = 2.0\n"
                                  "minor_radius = 0.5\n"
                                  "[field]\n"
                                  "name = composed\n"
                                  "amp_u = 0.2\n"
                                  "amp_w = 0.3\n"
                                  "[material]\n"
                                  "h = 0.02\n"
                                  "[quadrature]\n"
                                  "surface_order = 4\n"
                                  "cells_x = 2\n"
                                  "cells_y = 2\n");
  const Scenario sc = parseScenario(config.string());
  const auto dirA = std::filesystem::temp_directory_path() / "cosserat_outA";
  const auto dirB = std::filesystem::temp_directory_path() / "cosserat_outB";
  CHECK(runScenario(sc, dirA.string(), false) == 0);
  CHECK(runScenario(sc, dirB.string(), false) == 0);
  CHECK(slurp(dirA / "energy_breakdown.csv") ==
        slurp(dirB / "energy_breakdown.csv"));
  CHECK(slurp(dirA / "energy_total.csv") == slurp(dirB / "energy_total.csv"));
}

TEST_CASE("validate scenario writes the convergence tables") {
  const auto config = writeConfig("validate_torus.toml",
                                  "[scenario]\n"
                                  "mode = validate\n"
                                  "[patch]\n"
                                  "name = torus\n"
                                  "major_radius = 2.0\n"
                                  "minor_radius = 0.5\n"
                                  "[field]\n"
                                  "name = composed\n"
                                  "[material]\n"
                                  "h_list = 0.04, 0.02, 0.01\n"
                                  "[quadrature]\n"
                                  "surface_order = 6\n"
                                  "cells_x = 2\n"
                                  "cells_y = 2\n");
  const Scenario sc = parseScenario(config.string());
  const auto outDir = std::filesystem::temp_directory_path() / "cosserat_out2";
  CHECK(runScenario(sc, outDir.string(), false) == 0);

  for (const char* file : {"validate_membrane.csv", "validate_curvature.csv"}) {
    const std::string text = slurp(outDir / file);
    CHECK(lineCount(text) == 4);  // header + three thicknesses

    // parse the abs_error column and confirm the seventh-order band
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);  // header
    double previous = 0.0;
    int row = 0;
    while (std::getline(in, line)) {
      std::istringstream cells(line);
      std::string cell;
      double absError = 0.0;
      for (int c = 0; c < 4 && std::getline(cells, cell, ','); ++c)
        if (c == 3) absError = std::stod(cell);
      if (row > 0) {
        const double ratio = previous / absError;
        CHECK(ratio >= 100.0);
        CHECK(ratio <= 160.0);
      }
      previous = absError;
      ++row;
    }
  }
}

TEST_CASE("minimize scenario produces trace and grid exports") {
  const auto config = writeConfig("minimize_plate.toml",
                                  "[scenario]\n"
                                  "mode = minimize\n"
                                  "[patch]\n"
                                  "name = plane\n"
                                  "[material]\n"
                                  "h = 0.01\n"
                                  "[grid]\n"
                                  "n1 = 6\n"
                                  "n2 = 6\n"
                                  "clamp = x1min\n"
                                  "perturb_amplitude = 1e-5\n"
                                  "perturb_seed = 3\n"
                                  "[solver]\n"
                                  "max_iterations = 40\n"
                                  "gradient_tolerance = 1e-10\n");
  const Scenario sc = parseScenario(config.string());
  const auto outDir = std::filesystem::temp_directory_path() / "cosserat_out3";
  CHECK(runScenario(sc, outDir.string(), false) == 0);
  CHECK(std::filesystem::exists(outDir / "energy_trace.csv"));
  CHECK(std::filesystem::exists(outDir / "grid_final.csv"));
  CHECK(std::filesystem::exists(outDir / "grid_final.obj"));
  CHECK(lineCount(slurp(outDir / "grid_final.csv")) == 37);  // header + 36 nodes

  // energy column decreases monotonically
  std::istringstream in(slurp(outDir / "energy_trace.csv"));
  std::string line;
  std::getline(in, line);
  double prev = 0.0;
  int row = 0;
  while (std::getline(in, line)) {
    const auto first = line.find(',');
    const auto second = line.find(',', first + 1);
    const double energy = std::stod(line.substr(first + 1, second - first - 1));
    if (row > 0) CHECK(energy <= prev);
    prev = energy;
    ++row;
  }
  CHECK(row >= 2);
}

TEST_CASE("identities scenario passes") {
  const auto config = writeConfig("identities.toml",
                                  "[scenario]\n"
                                  "mode = identities\n");
  const Scenario sc = parseScenario(config.string());
  CHECK(runScenario(sc, ".", false) == 0);
}

TEST_CASE("malformed configurations are rejected") {
  CHECK_THROWS_AS(parseScenario("/nonexistent/path.toml"), ConfigError);
  CHECK_THROWS_AS(
      parseScenario(writeConfig("bad_mode.toml",
                                "[scenario]\nmode = explode\n")
                        .string()),
      ConfigError);
  CHECK_THROWS_AS(
      parseScenario(
          writeConfig("no_hlist.toml",
                      "[scenario]\nmode = validate\n[patch]\nname = sphere\n"
                      "radius = 1.0\n")
              .string()),
      ConfigError);
  CHECK_THROWS_AS(
      parseScenario(writeConfig("bad_number.toml",
                                "[scenario]\nmode = energy\n[material]\n"
                                "mu = fast\n")
                        .string()),
      ConfigError);
  CHECK_THROWS_AS(
      parseScenario(writeConfig("no_section.toml", "mode = energy\n").string()),
      ConfigError);
  CHECK_THROWS_AS(
      parseScenario(writeConfig("no_clamp.toml",
                                "[scenario]\nmode = minimize\n[patch]\n"
                                "name = plane\n")
                        .string()),
      ConfigError);
}

TEST_CASE("domain errors surface from the scenario runner") {
  // tube radius 0.5 and half-thickness 0.6 exceed the curvature bound
  const auto config = writeConfig("too_thick.toml",
                                  "[scenario]\n"
                                  "mode = validate\n"
                                  "[patch]\n"
                                  "name = torus\n"
                                  "major_radius = 2.0\n"
                                  "minor_radius = 0.5\n"
                                  "[field]\n"
                                  "name = composed\n"
                                  "[material]\n"
                                  "h_list = 1.2, 0.01\n"
                                  "[quadrature]\n"
                                  "surface_order = 2\n"
                                  "cells_x = 1\n"
                                  "cells_y = 1\n");
  const Scenario sc = parseScenario(config.string());
  CHECK_THROWS_AS(runScenario(sc, ".", false), DomainError);
}
