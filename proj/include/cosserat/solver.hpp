#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cosserat/energy.hpp"

namespace cosserat {

/// Uniform n1 x n2 node grid over the parameter domain. Each node carries a
/// midsurface position m and a rotation R applied on top of the initial
/// rotation, Rbar = R * Q0. Clamped nodes are never updated.
struct GridDiscretization {
  int n1 = 0, n2 = 0;
  Domain domain;
  std::vector<Vec3> m;
  std::vector<Mat3> rot;  // Rbar = rot * Q0
  std::vector<std::uint8_t> clamped;

  int index(int i, int j) const { return j * n1 + i; }
  int size() const { return n1 * n2; }
  double dx1() const { return (domain.x1max - domain.x1min) / (n1 - 1); }
  double dx2() const { return (domain.x2max - domain.x2min) / (n2 - 1); }
  double x1At(int i) const { return domain.x1min + i * dx1(); }
  double x2At(int j) const { return domain.x2min + j * dx2(); }

  /// Rotation vector of the accumulated node rotation (for export).
  Vec3 theta(int k) const;

  static GridDiscretization reference(const SurfacePatch& patch, int n1,
                                      int n2);
};

struct SolverConfig {
  int maxIterations = 500;
  double gradientTolerance = 1e-8;
  double initialStep = 1.0;
  double backtrackingFactor = 0.5;
  double fdStep = 1e-6;      // objective-gradient probe
  double minStep = 1e-14;    // line search gives up below this
  double armijo = 1e-4;
  Exec exec = Exec::OpenMP;
};

struct EnergyTracePoint {
  int iteration = 0;
  double energy = 0.0;
  double gradNorm = 0.0;
  double step = 0.0;
};

struct MinimizeResult {
  GridDiscretization grid;
  std::vector<EnergyTracePoint> trace;
  bool converged = false;
};

/// Composite trapezoid sum of the reduced density times the area factor,
/// with grid derivatives by central differences (one-sided at the boundary).
double assembleEnergy(const GridDiscretization& grid, const SurfacePatch& patch,
                      const MaterialParams& mat, Exec exec = Exec::OpenMP);

/// Gradient descent with backtracking line search on the stacked (m, theta)
/// unknowns of the free nodes; rotations are updated multiplicatively via
/// the exponential map. Requires at least one clamped node. Warns (but
/// proceeds) when muC = 0, where the descent problem loses coercivity.
MinimizeResult minimize(const GridDiscretization& grid,
                        const SurfacePatch& patch, const MaterialParams& mat,
                        const SolverConfig& cfg);

// grid helpers used by the scenario driver and tests

void clampEdge(GridDiscretization& grid, const std::string& edge);
void perturbInterior(GridDiscretization& grid, double amplitude,
                     std::uint64_t seed);
void displaceEdgeAlongNormal(GridDiscretization& grid,
                             const SurfacePatch& patch,
                             const std::string& edge, double amount);

void writeGridCsv(const GridDiscretization& grid, const std::string& path);
void writeGridObj(const GridDiscretization& grid, const std::string& path);
void writeTraceCsv(const std::vector<EnergyTracePoint>& trace,
                   const std::string& path);

}  // namespace cosserat
