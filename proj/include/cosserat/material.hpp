#pragma once

#include <utility>

#include "cosserat/surface.hpp"
#include "cosserat/tensor.hpp"

namespace cosserat {

/// Isotropic Cosserat material. Stresses are in arbitrary consistent units;
/// Lc and h carry length units, b1..b3 are dimensionless.
struct MaterialParams {
  double mu = 1.0;      // shear modulus, > 0
  double lambda = 1.0;  // Lame parameter
  double muC = 0.5;     // Cosserat couple modulus, >= 0
  double kappa = 0.0;   // bulk modulus, (3 lambda + 2 mu) / 3
  double Lc = 0.2;      // internal length, > 0
  double b1 = 1.0, b2 = 1.0, b3 = 1.0;
  double h = 0.01;      // shell thickness, > 0

  static MaterialParams make(double mu, double lambda, double muC, double Lc,
                             double b1, double b2, double b3, double h);
  void validate() const;  // throws ConfigError
};

// Bilinear forms of the stored energy. All take full ambient tensors.

double wMp3(const Mat3& s, const Mat3& t, const MaterialParams& m);
double wMp(const Mat3& s, const MaterialParams& m);

/// Equivalent deviator/bulk writing of wMp3; kept as an independent route
/// for the identity checks.
double wMp3Dev(const Mat3& s, const Mat3& t, const MaterialParams& m);

double wCurv3(const Mat3& s, const Mat3& t, const MaterialParams& m);
double wCurv(const Mat3& s, const MaterialParams& m);

/// Mixed form absorbing the plane-stress trace reduction:
/// mu <sym,sym> + muC <skew,skew> + lambda mu / (lambda + 2 mu) tr tr.
double wMixt(const Mat3& s, const Mat3& t, const MaterialParams& m);
double wM(const Mat3& s, const MaterialParams& m);
double wMixtDev(const Mat3& s, const Mat3& t, const MaterialParams& m);

/// Second Piola-Kirchhoff-type stress 2 mu sym E + 2 muC skew E + lambda tr(E) I.
Mat3 stressS2(const Mat3& e, const MaterialParams& m);

/// Residuals of the two normal-shift identities of wMp3 for tensors with a
/// zero normal column (S n0 = 0):
///   res1: wMp3(S + a N, T + b N) - wMp3(S, T) - lambda/2 (a trT + b trS)
///         - (lambda + 2 mu)/2 a b,   with N = n0 (x) n0
///   res2: wMp3(S - lambda/(lambda+2mu) trS N, T + b N) - wMixt(S, T)
/// Throws StructureViolation when S or T has a nonzero normal column.
std::pair<double, double> appendixIdentities(const Mat3& s, const Mat3& t,
                                             double alpha, double beta,
                                             const PointGeometry& pg,
                                             const MaterialParams& m);

}  // namespace cosserat
