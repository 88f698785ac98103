#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cosserat/material.hpp"
#include "cosserat/oracle.hpp"
#include "cosserat/solver.hpp"

namespace cosserat {

enum class Mode { Energy, Validate, Minimize, Identities };

/// A batch scenario loaded from a sectioned key = value config file.
struct Scenario {
  Mode mode = Mode::Energy;

  std::string patchName = "plane";
  std::map<std::string, double> patchParams;
  std::optional<Domain> domainOverride;

  std::string fieldName = "identity";
  std::map<std::string, double> fieldParams;

  MaterialParams material =
      MaterialParams::make(1.0, 1.0, 0.5, 0.2, 1.0, 1.0, 1.0, 0.01);
  std::vector<double> hList;  // validate mode

  OracleQuadrature quadrature;

  int gridN1 = 12, gridN2 = 12;
  std::vector<std::string> clampEdges;
  double perturbAmplitude = 0.0;
  std::uint64_t perturbSeed = 1;
  std::string displaceEdge;
  double displaceNormal = 0.0;

  SolverConfig solver;
};

Scenario parseScenario(const std::string& path);

/// Runs one scenario, writing CSV/OBJ outputs into outputDir. Returns 0 on
/// success and 1 when an identity suite fails; configuration, domain and
/// numerical errors propagate as exceptions.
int runScenario(const Scenario& scenario, const std::string& outputDir,
                bool verbose);

}  // namespace cosserat
