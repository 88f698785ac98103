#pragma once

#include <string>
#include <vector>

#include "cosserat/energy.hpp"

namespace cosserat {

struct OracleReport {
  double h = 0.0;
  double analyticValue = 0.0;
  double oracleValue = 0.0;
  double absError = 0.0;
  double errorOverH7 = 0.0;
};

struct OracleQuadrature {
  int surfaceOrder = 8;
  int cellsX = 2;
  int cellsY = 2;
  int thicknessOrder = 12;
};

enum class EnergyPart { Membrane, Curvature };

/// One pass over a shared surface rule that evaluates, per point, both the
/// reduced densities and the exact-shifter thickness integrals of the
/// reconstructed strain energy. Sharing the surface rule and the strain
/// measures between the two routes isolates the thickness-truncation error.
struct OracleScan {
  double analyticMembrane = 0.0;
  double oracleMembrane = 0.0;
  double analyticCurvature = 0.0;
  double oracleCurvature = 0.0;
};

OracleScan oracleScan(const SurfacePatch& patch, const StateField& field,
                      const MaterialParams& mat,
                      const OracleQuadrature& quad = {},
                      Exec exec = Exec::OpenMP);

/// Thickness-by-surface integral of wMp(EsTilde) a shifter (exact shifter,
/// no series truncation).
double integrateMembrane3D(const SurfacePatch& patch, const StateField& field,
                           const MaterialParams& mat,
                           const OracleQuadrature& quad = {},
                           Exec exec = Exec::OpenMP);

/// Same for wCurv(GammaS).
double integrateCurvature3D(const SurfacePatch& patch, const StateField& field,
                            const MaterialParams& mat,
                            const OracleQuadrature& quad = {},
                            Exec exec = Exec::OpenMP);

/// Secondary mode integrating the full-ansatz strain (with the coefficient
/// gradients); quantifies the gradient-neglect approximation. No accuracy
/// bound is attached to it.
double integrateMembrane3DFull(const SurfacePatch& patch,
                               const StateField& field,
                               const MaterialParams& mat,
                               const OracleQuadrature& quad = {},
                               Exec exec = Exec::OpenMP);

/// One report per thickness in hList (strictly decreasing) for the chosen
/// energy part.
std::vector<OracleReport> convergenceStudy(const SurfacePatch& patch,
                                           const StateField& field,
                                           MaterialParams mat, EnergyPart part,
                                           const std::vector<double>& hList,
                                           const OracleQuadrature& quad = {},
                                           Exec exec = Exec::OpenMP);

void writeConvergenceCsv(const std::vector<OracleReport>& reports,
                         const std::string& path);

}  // namespace cosserat
