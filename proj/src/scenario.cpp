#include "cosserat/scenario.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cosserat/checks.hpp"
#include "cosserat/csv.hpp"

namespace cosserat {

namespace {

using Section = std::map<std::string, std::string>;
using Config = std::map<std::string, Section>;

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

Config parseConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  Config config;
  std::string line, section;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) line.erase(comment);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("config: malformed section at line " +
                          std::to_string(lineNo));
      section = trim(line.substr(1, line.size() - 2));
      config.try_emplace(section);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos || section.empty())
      throw ConfigError("config: expected 'key = value' at line " +
                        std::to_string(lineNo));
    config[section][trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return config;
}

double toDouble(const std::string& value, const std::string& where) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    throw ConfigError("config: '" + where + "' is not a number: " + value);
  }
  if (used != value.size())
    throw ConfigError("config: trailing characters in '" + where + "'");
  return v;
}

struct SectionView {
  const Section* section = nullptr;
  std::string name;

  std::optional<std::string> get(const std::string& key) const {
    if (!section) return std::nullopt;
    const auto it = section->find(key);
    if (it == section->end()) return std::nullopt;
    return it->second;
  }
  double number(const std::string& key, double fallback) const {
    const auto v = get(key);
    return v ? toDouble(*v, name + "." + key) : fallback;
  }
  int integer(const std::string& key, int fallback) const {
    return static_cast<int>(number(key, fallback));
  }
  std::string text(const std::string& key, const std::string& fallback) const {
    return get(key).value_or(fallback);
  }
  std::vector<double> numberList(const std::string& key) const {
    const auto v = get(key);
    std::vector<double> out;
    if (!v) return out;
    std::string item;
    std::istringstream ss(*v);
    while (std::getline(ss, item, ',')) {
      std::istringstream words(item);
      std::string word;
      while (words >> word) out.push_back(toDouble(word, name + "." + key));
    }
    return out;
  }
  std::vector<std::string> wordList(const std::string& key) const {
    const auto v = get(key);
    std::vector<std::string> out;
    if (!v) return out;
    std::istringstream ss(*v);
    std::string word;
    while (ss >> word) out.push_back(word);
    return out;
  }
};

SectionView view(const Config& config, const std::string& name) {
  const auto it = config.find(name);
  return {it == config.end() ? nullptr : &it->second, name};
}

const char* kKnownPatchParams[] = {"radius", "major_radius", "minor_radius",
                                   "amp", "kx", "ky"};
const char* kKnownFieldParams[] = {"alpha", "amp", "amp_u", "amp_w"};

}  // namespace

Scenario parseScenario(const std::string& path) {
  const Config config = parseConfigFile(path);
  Scenario sc;

  const SectionView scenario = view(config, "scenario");
  const std::string mode = scenario.text("mode", "");
  if (mode == "energy")
    sc.mode = Mode::Energy;
  else if (mode == "validate")
    sc.mode = Mode::Validate;
  else if (mode == "minimize")
    sc.mode = Mode::Minimize;
  else if (mode == "identities")
    sc.mode = Mode::Identities;
  else
    throw ConfigError("config: scenario.mode must be one of "
                      "energy|validate|minimize|identities");

  const SectionView patch = view(config, "patch");
  sc.patchName = patch.text("name", "plane");
  for (const char* key : kKnownPatchParams)
    if (const auto v = patch.get(key))
      sc.patchParams[key] = toDouble(*v, std::string("patch.") + key);
  if (patch.get("x1_min") || patch.get("x1_max") || patch.get("x2_min") ||
      patch.get("x2_max")) {
    Domain d;
    d.x1min = patch.number("x1_min", 0.0);
    d.x1max = patch.number("x1_max", 1.0);
    d.x2min = patch.number("x2_min", 0.0);
    d.x2max = patch.number("x2_max", 1.0);
    if (!(d.x1max > d.x1min) || !(d.x2max > d.x2min))
      throw ConfigError("config: patch domain bounds are not increasing");
    sc.domainOverride = d;
  }

  const SectionView field = view(config, "field");
  sc.fieldName = field.text("name", "identity");
  for (const char* key : kKnownFieldParams)
    if (const auto v = field.get(key))
      sc.fieldParams[key] = toDouble(*v, std::string("field.") + key);

  const SectionView material = view(config, "material");
  sc.material = MaterialParams::make(
      material.number("mu", 1.0), material.number("lambda", 1.0),
      material.number("mu_c", 0.5), material.number("L_c", 0.2),
      material.number("b1", 1.0), material.number("b2", 1.0),
      material.number("b3", 1.0), material.number("h", 0.01));
  sc.hList = material.numberList("h_list");

  const SectionView quad = view(config, "quadrature");
  sc.quadrature.surfaceOrder = quad.integer("surface_order", 8);
  sc.quadrature.cellsX = quad.integer("cells_x", 2);
  sc.quadrature.cellsY = quad.integer("cells_y", 2);
  sc.quadrature.thicknessOrder = quad.integer("thickness_order", 12);
  if (sc.quadrature.surfaceOrder < 2)
    throw ConfigError("config: quadrature.surface_order must be >= 2");

  const SectionView grid = view(config, "grid");
  sc.gridN1 = grid.integer("n1", 12);
  sc.gridN2 = grid.integer("n2", 12);
  sc.clampEdges = grid.wordList("clamp");
  sc.perturbAmplitude = grid.number("perturb_amplitude", 0.0);
  sc.perturbSeed =
      static_cast<std::uint64_t>(grid.number("perturb_seed", 1.0));
  sc.displaceEdge = grid.text("displace_edge", "");
  sc.displaceNormal = grid.number("displace_normal", 0.0);

  const SectionView solver = view(config, "solver");
  sc.solver.maxIterations = solver.integer("max_iterations", 500);
  sc.solver.gradientTolerance = solver.number("gradient_tolerance", 1e-8);
  sc.solver.initialStep = solver.number("initial_step", 1.0);
  sc.solver.backtrackingFactor = solver.number("backtracking_factor", 0.5);
  sc.solver.fdStep = solver.number("fd_step", 1e-6);
  if (!(sc.solver.maxIterations > 0) || !(sc.solver.gradientTolerance > 0) ||
      !(sc.solver.initialStep > 0) ||
      !(sc.solver.backtrackingFactor > 0 && sc.solver.backtrackingFactor < 1) ||
      !(sc.solver.fdStep > 0))
    throw ConfigError("config: invalid solver settings");

  if (sc.mode == Mode::Validate && sc.hList.empty())
    throw ConfigError("config: validate mode requires material.h_list");
  if (sc.mode == Mode::Minimize && sc.clampEdges.empty())
    throw ConfigError("config: minimize mode requires grid.clamp");
  return sc;
}

namespace {

std::string joinPath(const std::string& dir, const std::string& file) {
  return (std::filesystem::path(dir) / file).string();
}

int runEnergy(const Scenario& sc, const std::string& outputDir, bool verbose) {
  const auto patch =
      makePatch(sc.patchName, sc.patchParams, sc.domainOverride);
  const auto field = makeStateField(sc.fieldName, sc.fieldParams);
  const Domain& dom = patch->domain();
  const SurfaceQuadrature quad = surfaceQuadrature(
      dom.x1min, dom.x1max, dom.x2min, dom.x2max, sc.quadrature.surfaceOrder,
      sc.quadrature.cellsX, sc.quadrature.cellsY);

  CsvWriter perPoint(joinPath(outputDir, "energy_breakdown.csv"));
  perPoint.row("x1", "x2", "memb_h", "memb_h3", "memb_h5", "bend_h", "bend_h3",
               "bend_h5", "total");
  for (std::size_t i = 0; i < quad.size(); ++i) {
    const PointGeometry pg = pointGeometry(*patch, quad.x1[i], quad.x2[i]);
    const ShellState st = field->evaluate(*patch, quad.x1[i], quad.x2[i]);
    const Mat3 Ee = shellStrain(st, pg);
    const Mat3 Ke = bendingCurvature(st, pg);
    const EnergyBreakdown e = shellEnergyDensity(Ee, Ke, pg, sc.material);
    perPoint.row(quad.x1[i], quad.x2[i], e.membH, e.membH3, e.membH5, e.bendH,
                 e.bendH3, e.bendH5, e.total);
  }

  const EnergyBreakdown total = integrateEnergyBreakdown(
      *patch, *field, sc.material, sc.quadrature.surfaceOrder,
      sc.quadrature.cellsX, sc.quadrature.cellsY);
  CsvWriter totals(joinPath(outputDir, "energy_total.csv"));
  totals.row("memb_h", "memb_h3", "memb_h5", "bend_h", "bend_h3", "bend_h5",
             "total");
  totals.row(total.membH, total.membH3, total.membH5, total.bendH,
             total.bendH3, total.bendH5, total.total);

  std::cout << "total shell energy = " << formatDouble(total.total) << "\n";
  if (verbose)
    std::cout << "  membrane h/h3/h5 = " << formatDouble(total.membH) << " "
              << formatDouble(total.membH3) << " " << formatDouble(total.membH5)
              << "\n  bending  h/h3/h5 = " << formatDouble(total.bendH) << " "
              << formatDouble(total.bendH3) << " " << formatDouble(total.bendH5)
              << "\n";
  return 0;
}

int runValidate(const Scenario& sc, const std::string& outputDir,
                bool verbose) {
  const auto patch =
      makePatch(sc.patchName, sc.patchParams, sc.domainOverride);
  const auto field = makeStateField(sc.fieldName, sc.fieldParams);
  const auto membrane =
      convergenceStudy(*patch, *field, sc.material, EnergyPart::Membrane,
                       sc.hList, sc.quadrature);
  const auto curvature =
      convergenceStudy(*patch, *field, sc.material, EnergyPart::Curvature,
                       sc.hList, sc.quadrature);
  writeConvergenceCsv(membrane, joinPath(outputDir, "validate_membrane.csv"));
  writeConvergenceCsv(curvature,
                      joinPath(outputDir, "validate_curvature.csv"));
  for (const char* part : {"membrane", "curvature"}) {
    const auto& reports = part == std::string("membrane") ? membrane : curvature;
    std::cout << part << ":\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      std::cout << "  h = " << formatDouble(reports[i].h)
                << "  abs_error = " << formatDouble(reports[i].absError);
      if (i > 0 && reports[i].absError > 0.0)
        std::cout << "  ratio = "
                  << formatDouble(reports[i - 1].absError /
                                  reports[i].absError);
      std::cout << "\n";
    }
  }
  (void)verbose;
  return 0;
}

int runMinimize(const Scenario& sc, const std::string& outputDir,
                bool verbose) {
  const auto patch =
      makePatch(sc.patchName, sc.patchParams, sc.domainOverride);
  GridDiscretization grid =
      GridDiscretization::reference(*patch, sc.gridN1, sc.gridN2);
  for (const std::string& edge : sc.clampEdges) clampEdge(grid, edge);
  if (!sc.displaceEdge.empty())
    displaceEdgeAlongNormal(grid, *patch, sc.displaceEdge, sc.displaceNormal);
  if (sc.perturbAmplitude > 0.0)
    perturbInterior(grid, sc.perturbAmplitude, sc.perturbSeed);

  const MinimizeResult result = minimize(grid, *patch, sc.material, sc.solver);
  writeTraceCsv(result.trace, joinPath(outputDir, "energy_trace.csv"));
  writeGridCsv(result.grid, joinPath(outputDir, "grid_final.csv"));
  writeGridObj(result.grid, joinPath(outputDir, "grid_final.obj"));

  const EnergyTracePoint& first = result.trace.front();
  const EnergyTracePoint& last = result.trace.back();
  std::cout << "minimize: " << last.iteration << " iterations, energy "
            << formatDouble(first.energy) << " -> "
            << formatDouble(last.energy) << ", |grad| "
            << formatDouble(last.gradNorm)
            << (result.converged ? " (converged)" : " (iteration cap)")
            << "\n";
  if (verbose)
    for (const EnergyTracePoint& t : result.trace)
      std::cout << "  iter " << t.iteration << "  E = "
                << formatDouble(t.energy) << "  |g| = "
                << formatDouble(t.gradNorm) << "\n";
  return 0;
}

int runIdentities(bool verbose) {
  const std::vector<SuiteReport> reports = runAllSuites();
  bool allPass = true;
  for (const SuiteReport& suite : reports) {
    const bool pass = suite.pass();
    allPass = allPass && pass;
    std::printf("%-14s %s\n", suite.suite.c_str(), pass ? "PASS" : "FAIL");
    for (const CheckResult& c : suite.checks) {
      if (verbose || !c.pass())
        std::printf("  %-36s %-4s  residual %.3e  tolerance %.1e\n",
                    c.name.c_str(), c.pass() ? "ok" : "FAIL", c.residual,
                    c.tolerance);
    }
  }
  return allPass ? 0 : 1;
}

}  // namespace

int runScenario(const Scenario& scenario, const std::string& outputDir,
                bool verbose) {
  std::filesystem::create_directories(outputDir);
  switch (scenario.mode) {
    case Mode::Energy:
      return runEnergy(scenario, outputDir, verbose);
    case Mode::Validate:
      return runValidate(scenario, outputDir, verbose);
    case Mode::Minimize:
      return runMinimize(scenario, outputDir, verbose);
    case Mode::Identities:
      return runIdentities(verbose);
  }
  throw ConfigError("runScenario: unknown mode");
}

}  // namespace cosserat
