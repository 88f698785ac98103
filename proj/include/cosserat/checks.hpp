#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "cosserat/energy.hpp"
#include "cosserat/kinematics.hpp"

namespace cosserat {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass() const { return residual <= tolerance; }
};

/// The default patch set used by the identity suites: plane, cylinder(2),
/// sphere(1), torus(2, 0.5), graph.
std::vector<std::unique_ptr<SurfacePatch>> defaultPatchSet();

/// Random tensor with the tangential column structure sum_{i,g} S_ig
/// d_i0 (x) a^g at the given point.
Mat3 randomAdmissibleTensor(const PointGeometry& pg, std::mt19937_64& rng,
                            double scale = 1.0);

/// Midsurface geometry identities sampled at random points and thickness
/// coordinates across the default patch set: Cayley-Hamilton, alternator
/// algebra, director reconstruction, chart determinant / inverse / cofactor,
/// the chart Gram block structure and the polar-factor block structure.
std::vector<CheckResult> geometrySuite(int points = 200,
                                       std::uint64_t seed = 11);

/// Quadratic/bilinear form identities on random tensors: the dual writings
/// of the stretch and mixed forms, the trace-coupling split, the
/// normal-shift identities, the closed membrane coefficients against the
/// raw polynomial ones, and the h^3/h^5 bracket reductions.
std::vector<CheckResult> algebraicSuite(int samples = 1000,
                                        std::uint64_t seed = 13,
                                        double tolerance = 1e-11);

/// Flat-shell degeneration: on the plane the fifth-order membrane terms and
/// all curvature-tensor bending terms vanish identically and the membrane
/// density reduces to h wM(Ee) + h^3/12 wM(c Ke).
std::vector<CheckResult> flatLimitSuite(int samples = 100,
                                        std::uint64_t seed = 17);

/// Plane-stress residuals: both residuals vanish with the exact thickness
/// slope on curved patches; with the linearized slope the residual of the
/// derivative condition scales quadratically with the strain amplitude on
/// the flat patch.
std::vector<CheckResult> planeStressSuite(int samples = 100,
                                          std::uint64_t seed = 19);

/// Kinematic identities on the closed-form fields: the drilling/bending
/// relation between Grad_s d3 and c Ke - b, frame indifference of the
/// strain measures, the wryness dual formulas, the strain column structure
/// and the reconstructed-strain expansions.
std::vector<CheckResult> kinematicsSuite(std::uint64_t seed = 23);

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const {
    for (const CheckResult& c : checks)
      if (!c.pass()) return false;
    return true;
  }
};

std::vector<SuiteReport> runAllSuites();

}  // namespace cosserat
