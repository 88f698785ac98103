#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "cosserat/tensor.hpp"

namespace cosserat {

struct Domain {
  double x1min = 0.0, x1max = 1.0;
  double x2min = 0.0, x2max = 1.0;
  double diameter() const { return std::hypot(x1max - x1min, x2max - x2min); }
};

/// Twice-differentiable parametrization y0(x1, x2) of the reference
/// midsurface over a rectangular parameter domain. Built-in patches supply
/// analytic derivatives; the base class falls back to central differences.
class SurfacePatch {
 public:
  explicit SurfacePatch(Domain d) : domain_(d) {}
  virtual ~SurfacePatch() = default;

  const Domain& domain() const { return domain_; }

  virtual Vec3 position(double x1, double x2) const = 0;

  virtual Vec3 d1(double x1, double x2) const;
  virtual Vec3 d2(double x1, double x2) const;
  virtual Vec3 d11(double x1, double x2) const;
  virtual Vec3 d12(double x1, double x2) const;
  virtual Vec3 d22(double x1, double x2) const;

  double fdFirstStep() const { return 1e-5 * domain_.diameter(); }
  double fdSecondStep() const { return 1e-4 * domain_.diameter(); }

 private:
  Domain domain_;
};

/// Per-point midsurface data: bases, fundamental tensors, curvatures and the
/// polar rotation of the midsurface chart. Planar tensors are stored as full
/// ambient 3x3 tensors built from dyads of ambient vectors.
struct PointGeometry {
  double x1 = 0.0, x2 = 0.0;
  Vec3 a1, a2;        // covariant tangent base
  Vec3 acon1, acon2;  // contravariant tangent base
  Vec3 n0;            // unit normal, right-handed with (a1, a2)
  Vec3 dn0_1, dn0_2;  // normal partials
  Mat3 a;             // first fundamental tensor
  Mat3 b;             // second fundamental tensor
  Mat3 c;             // alternator tensor, c^2 = -a
  Mat2 aCov, bCov, bMixed;
  double H = 0.0;           // mean curvature (1/length)
  double K = 0.0;           // Gauss curvature (1/length^2)
  double areaFactor = 1.0;  // sqrt(det a_cov) > 0
  Mat3 Q0;                  // polar rotation of the chart gradient at x3 = 0
  Mat3 dQ01, dQ02;          // central differences of the polar factor
  Vec3 d10, d20, d30;       // initial directors, d30 = n0
};

/// Offset data at thickness coordinate x3 for the map y0 + x3 n0.
struct ThicknessGeometry {
  double x3 = 0.0;
  double bX3 = 1.0;  // shifter 1 - 2H x3 + K x3^2
  double detGradTheta = 1.0;
  Mat3 gradTheta;
  Mat3 gradThetaInv;
  Mat3 cofGradTheta;
};

inline double shifter(double H, double K, double x3) {
  return 1.0 - 2.0 * H * x3 + K * x3 * x3;
}

PointGeometry pointGeometry(const SurfacePatch& patch, double x1, double x2);

ThicknessGeometry thicknessGeometry(const PointGeometry& pg, double x3);

/// Polar rotation factor of the full chart gradient at the given thickness.
Mat3 initialRotation(const PointGeometry& pg, const ThicknessGeometry& tg);

/// Midsurface-only rotation: polar factor of [a1 | a2 | n0].
Mat3 midsurfaceRotation(const SurfacePatch& patch, double x1, double x2);

/// Surface gradient f,_alpha (x) a^alpha of a field with the given partials.
Mat3 surfaceGradient(const PointGeometry& pg, const Vec3& f1, const Vec3& f2);

Vec3 unitNormal(const SurfacePatch& patch, double x1, double x2);

// ---- built-in patches ------------------------------------------------

class PlanePatch final : public SurfacePatch {
 public:
  explicit PlanePatch(Domain d = {}) : SurfacePatch(d) {}
  Vec3 position(double x1, double x2) const override { return {x1, x2, 0.0}; }
  Vec3 d1(double, double) const override { return {1.0, 0.0, 0.0}; }
  Vec3 d2(double, double) const override { return {0.0, 1.0, 0.0}; }
  Vec3 d11(double, double) const override { return Vec3::Zero(); }
  Vec3 d12(double, double) const override { return Vec3::Zero(); }
  Vec3 d22(double, double) const override { return Vec3::Zero(); }
};

/// x1 is the angular coordinate, x2 the axial one; the normal points outward.
class CylinderPatch final : public SurfacePatch {
 public:
  explicit CylinderPatch(double radius, Domain d = {0.0, 1.2, 0.0, 1.0});
  Vec3 position(double x1, double x2) const override;
  Vec3 d1(double x1, double x2) const override;
  Vec3 d2(double x1, double x2) const override;
  Vec3 d11(double x1, double x2) const override;
  Vec3 d12(double x1, double x2) const override;
  Vec3 d22(double x1, double x2) const override;
  double radius() const { return radius_; }

 private:
  double radius_;
};

/// y0 = R (cos x1 cos x2, sin x1 cos x2, sin x2); outward normal, so the
/// curvature tensor is -a/R and H = -1/R.
class SpherePatch final : public SurfacePatch {
 public:
  explicit SpherePatch(double radius, Domain d = {0.0, 1.0, -0.5, 0.5});
  Vec3 position(double x1, double x2) const override;
  Vec3 d1(double x1, double x2) const override;
  Vec3 d2(double x1, double x2) const override;
  Vec3 d11(double x1, double x2) const override;
  Vec3 d12(double x1, double x2) const override;
  Vec3 d22(double x1, double x2) const override;
  double radius() const { return radius_; }

 private:
  double radius_;
};

class TorusPatch final : public SurfacePatch {
 public:
  TorusPatch(double majorRadius, double minorRadius,
             Domain d = {0.0, 1.2, 0.0, 1.2});
  Vec3 position(double x1, double x2) const override;
  Vec3 d1(double x1, double x2) const override;
  Vec3 d2(double x1, double x2) const override;
  Vec3 d11(double x1, double x2) const override;
  Vec3 d12(double x1, double x2) const override;
  Vec3 d22(double x1, double x2) const override;

 private:
  double R_, r_;
};

/// Graph patch z = amp sin(kx x1) sin(ky x2).
class GraphPatch final : public SurfacePatch {
 public:
  GraphPatch(double amp, double kx, double ky, Domain d = {});
  Vec3 position(double x1, double x2) const override;
  Vec3 d1(double x1, double x2) const override;
  Vec3 d2(double x1, double x2) const override;
  Vec3 d11(double x1, double x2) const override;
  Vec3 d12(double x1, double x2) const override;
  Vec3 d22(double x1, double x2) const override;

 private:
  double amp_, kx_, ky_;
};

/// Patch defined by a position callback only; derivatives fall back to
/// finite differences. Intended for custom surfaces and tests.
class FunctionPatch final : public SurfacePatch {
 public:
  FunctionPatch(std::function<Vec3(double, double)> fn, Domain d)
      : SurfacePatch(d), fn_(std::move(fn)) {}
  Vec3 position(double x1, double x2) const override { return fn_(x1, x2); }

 private:
  std::function<Vec3(double, double)> fn_;
};

/// Named patch factory used by the scenario loader. Throws ConfigError for
/// unknown names or missing parameters.
std::unique_ptr<SurfacePatch> makePatch(
    const std::string& name, const std::map<std::string, double>& params,
    const std::optional<Domain>& domainOverride = std::nullopt);

}  // namespace cosserat
