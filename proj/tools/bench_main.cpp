// Compares the serial reference against the OpenMP kernels on the three
// data-parallel hot paths: surface integration of the reduced energy, the
// 3D oracle scan and the solver's finite-difference gradient. Both paths
// share per-point code and a fixed reduction order, so the results must
// match bit for bit.

#include <chrono>
#include <cstdio>

#include "cosserat/oracle.hpp"
#include "cosserat/solver.hpp"

using namespace cosserat;

namespace {

template <typename F>
double timeMs(F&& fn, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best,
                    std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void report(const char* name, double serialMs, double openmpMs, bool match) {
  std::printf("%-22s serial %8.1f ms   openmp %8.1f ms   speedup %5.2fx   %s\n",
              name, serialMs, openmpMs, serialMs / openmpMs,
              match ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("openmp compiled in: %s\n", openmpEnabled() ? "yes" : "no");

  const SpherePatch sphere(1.0);
  const ComposedField field(0.2, 0.3);
  const MaterialParams mat =
      MaterialParams::make(1.0, 1.0, 0.5, 0.2, 1.0, 1.0, 1.0, 0.02);

  {
    double serialValue = 0.0, openmpValue = 0.0;
    const double s = timeMs([&] {
      serialValue = totalShellEnergy(sphere, field, mat, 8, 12, 12, Exec::Serial);
    });
    const double p = timeMs([&] {
      openmpValue = totalShellEnergy(sphere, field, mat, 8, 12, 12, Exec::OpenMP);
    });
    report("shell energy", s, p, serialValue == openmpValue);
  }

  {
    OracleQuadrature quad;
    quad.cellsX = quad.cellsY = 6;
    OracleScan serialScan, openmpScan;
    const double s =
        timeMs([&] { serialScan = oracleScan(sphere, field, mat, quad, Exec::Serial); });
    const double p =
        timeMs([&] { openmpScan = oracleScan(sphere, field, mat, quad, Exec::OpenMP); });
    report("oracle scan", s, p,
           serialScan.oracleMembrane == openmpScan.oracleMembrane &&
               serialScan.oracleCurvature == openmpScan.oracleCurvature);
  }

  {
    const PlanePatch plane;
    GridDiscretization grid = GridDiscretization::reference(plane, 16, 16);
    clampEdge(grid, "x1min");
    perturbInterior(grid, 1e-4, 3);
    SolverConfig cfg;
    cfg.maxIterations = 3;
    cfg.gradientTolerance = 1e-300;

    double serialValue = 0.0, openmpValue = 0.0;
    cfg.exec = Exec::Serial;
    const double s = timeMs(
        [&] { serialValue = minimize(grid, plane, mat, cfg).trace.back().energy; }, 1);
    cfg.exec = Exec::OpenMP;
    const double p = timeMs(
        [&] { openmpValue = minimize(grid, plane, mat, cfg).trace.back().energy; }, 1);
    report("solver descent", s, p, serialValue == openmpValue);
  }
  return 0;
}
