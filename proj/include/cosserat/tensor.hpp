#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "cosserat/errors.hpp"

namespace cosserat {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

inline Mat3 sym(const Mat3& x) { return 0.5 * (x + x.transpose()); }

inline Mat3 skew(const Mat3& x) { return 0.5 * (x - x.transpose()); }

inline double tr(const Mat3& x) { return x.trace(); }

inline Mat3 dev3(const Mat3& x) { return x - (x.trace() / 3.0) * Mat3::Identity(); }

/// Frobenius inner product <X, Y>.
inline double inner(const Mat3& x, const Mat3& y) { return (x.array() * y.array()).sum(); }

/// Skew tensor of a vector: hat(w) v = w x v.
inline Mat3 hat(const Vec3& w) {
  Mat3 a;
  a << 0.0, -w.z(), w.y(),
       w.z(), 0.0, -w.x(),
      -w.y(), w.x(), 0.0;
  return a;
}

/// Axial vector of a skew tensor: A v = axl(A) x v for all v.
/// Throws NotSkew when the symmetric part is not negligible.
inline Vec3 axl(const Mat3& a) {
  const double symNorm = sym(a).norm();
  if (symNorm > 1e-10 * std::max(1.0, a.norm()))
    throw NotSkew("axl: symmetric part has norm " + std::to_string(symNorm));
  return Vec3(0.5 * (a(2, 1) - a(1, 2)),
              0.5 * (a(0, 2) - a(2, 0)),
              0.5 * (a(1, 0) - a(0, 1)));
}

/// Rotation exp(hat(w)) by the Rodrigues formula.
inline Mat3 rotationExp(const Vec3& w) {
  const double t = w.norm();
  const Mat3 k = hat(w);
  if (t < 1e-12) return Mat3::Identity() + k + 0.5 * k * k;
  return Mat3::Identity() + (std::sin(t) / t) * k +
         ((1.0 - std::cos(t)) / (t * t)) * k * k;
}

/// Rotation vector of a proper orthogonal tensor (inverse of rotationExp).
inline Vec3 rotationLog(const Mat3& r) {
  const double c = std::clamp(0.5 * (r.trace() - 1.0), -1.0, 1.0);
  const double t = std::acos(c);
  const Vec3 v(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
  if (t < 1e-7) return 0.5 * v;
  if (t > M_PI - 1e-5) {
    // near half-turn the off-diagonal route degenerates; use the diagonal
    Vec3 axis;
    const Mat3 m = 0.5 * (r + Mat3::Identity());
    int k = 0;
    m.diagonal().maxCoeff(&k);
    axis = m.col(k) / std::sqrt(std::max(m(k, k), 1e-300));
    axis.normalize();
    if (v.dot(axis) < 0.0) axis = -axis;
    return t * axis;
  }
  return (0.5 * t / std::sin(t)) * v;
}

struct PolarFactors {
  Mat3 rotation;  // proper orthogonal
  Mat3 stretch;   // symmetric positive definite
};

/// Polar decomposition F = rotation * stretch with stretch = sqrt(F^T F)
/// obtained from the symmetric eigendecomposition of F^T F.
inline PolarFactors polar(const Mat3& f) {
  if (f.determinant() <= 1e-14)
    throw Singular("polar: determinant is not positive");
  Eigen::SelfAdjointEigenSolver<Mat3> eig(f.transpose() * f);
  const Vec3 lam = eig.eigenvalues();
  const Mat3 v = eig.eigenvectors();
  const Vec3 s = lam.cwiseMax(0.0).cwiseSqrt();
  PolarFactors p;
  p.stretch = v * s.asDiagonal() * v.transpose();
  p.rotation = f * (v * s.cwiseInverse().asDiagonal() * v.transpose());
  return p;
}

}  // namespace cosserat
