#include "cosserat/surface.hpp"

namespace cosserat {

Vec3 SurfacePatch::d1(double x1, double x2) const {
  const double d = fdFirstStep();
  return (position(x1 + d, x2) - position(x1 - d, x2)) / (2.0 * d);
}

Vec3 SurfacePatch::d2(double x1, double x2) const {
  const double d = fdFirstStep();
  return (position(x1, x2 + d) - position(x1, x2 - d)) / (2.0 * d);
}

Vec3 SurfacePatch::d11(double x1, double x2) const {
  const double d = fdSecondStep();
  return (position(x1 + d, x2) - 2.0 * position(x1, x2) +
          position(x1 - d, x2)) /
         (d * d);
}

Vec3 SurfacePatch::d22(double x1, double x2) const {
  const double d = fdSecondStep();
  return (position(x1, x2 + d) - 2.0 * position(x1, x2) +
          position(x1, x2 - d)) /
         (d * d);
}

Vec3 SurfacePatch::d12(double x1, double x2) const {
  const double d = fdSecondStep();
  return (position(x1 + d, x2 + d) - position(x1 + d, x2 - d) -
          position(x1 - d, x2 + d) + position(x1 - d, x2 - d)) /
         (4.0 * d * d);
}

namespace {

Mat3 chartColumns(const Vec3& a1, const Vec3& a2, const Vec3& n0) {
  Mat3 g;
  g.col(0) = a1;
  g.col(1) = a2;
  g.col(2) = n0;
  return g;
}

}  // namespace

Vec3 unitNormal(const SurfacePatch& patch, double x1, double x2) {
  const Vec3 w = patch.d1(x1, x2).cross(patch.d2(x1, x2));
  const double wn = w.norm();
  if (wn <= 1e-10)
    throw DegenerateParametrization("unitNormal: tangents are parallel");
  return w / wn;
}

Mat3 midsurfaceRotation(const SurfacePatch& patch, double x1, double x2) {
  const Vec3 a1 = patch.d1(x1, x2);
  const Vec3 a2 = patch.d2(x1, x2);
  const Vec3 w = a1.cross(a2);
  const double wn = w.norm();
  if (wn <= 1e-10)
    throw DegenerateParametrization("midsurfaceRotation: tangents are parallel");
  return polar(chartColumns(a1, a2, w / wn)).rotation;
}

PointGeometry pointGeometry(const SurfacePatch& patch, double x1, double x2) {
  PointGeometry pg;
  pg.x1 = x1;
  pg.x2 = x2;
  pg.a1 = patch.d1(x1, x2);
  pg.a2 = patch.d2(x1, x2);
  const Vec3 w = pg.a1.cross(pg.a2);
  const double wn = w.norm();
  if (wn <= 1e-10)
    throw DegenerateParametrization(
        "pointGeometry: |y0,1 x y0,2| <= 1e-10 at (" + std::to_string(x1) +
        ", " + std::to_string(x2) + ")");
  pg.n0 = w / wn;
  pg.areaFactor = wn;

  pg.aCov << pg.a1.dot(pg.a1), pg.a1.dot(pg.a2),
             pg.a2.dot(pg.a1), pg.a2.dot(pg.a2);
  const Mat2 aInv = pg.aCov.inverse();
  pg.acon1 = aInv(0, 0) * pg.a1 + aInv(0, 1) * pg.a2;
  pg.acon2 = aInv(1, 0) * pg.a1 + aInv(1, 1) * pg.a2;
  pg.a = pg.a1 * pg.acon1.transpose() + pg.a2 * pg.acon2.transpose();

  const Vec3 y11 = patch.d11(x1, x2);
  const Vec3 y12 = patch.d12(x1, x2);
  const Vec3 y22 = patch.d22(x1, x2);
  const Vec3 w1 = y11.cross(pg.a2) + pg.a1.cross(y12);
  const Vec3 w2 = y12.cross(pg.a2) + pg.a1.cross(y22);
  const Mat3 proj = Mat3::Identity() - pg.n0 * pg.n0.transpose();
  pg.dn0_1 = proj * w1 / wn;
  pg.dn0_2 = proj * w2 / wn;

  pg.b = -(pg.dn0_1 * pg.acon1.transpose() + pg.dn0_2 * pg.acon2.transpose());
  pg.bCov << -pg.dn0_1.dot(pg.a1), -pg.dn0_2.dot(pg.a1),
             -pg.dn0_1.dot(pg.a2), -pg.dn0_2.dot(pg.a2);
  pg.bMixed = aInv * pg.bCov;
  pg.H = 0.5 * pg.bMixed.trace();
  // Gauss curvature from the mixed 2x2 components; the ambient 3x3
  // determinant of b is identically zero and must not be used here.
  pg.K = pg.bMixed.determinant();

  pg.c = (pg.a1 * pg.a2.transpose() - pg.a2 * pg.a1.transpose()) / wn;

  pg.Q0 = polar(chartColumns(pg.a1, pg.a2, pg.n0)).rotation;
  pg.d10 = pg.Q0.col(0);
  pg.d20 = pg.Q0.col(1);
  pg.d30 = pg.Q0.col(2);

  const double delta = 1e-5 * patch.domain().diameter();
  pg.dQ01 = (midsurfaceRotation(patch, x1 + delta, x2) -
             midsurfaceRotation(patch, x1 - delta, x2)) /
            (2.0 * delta);
  pg.dQ02 = (midsurfaceRotation(patch, x1, x2 + delta) -
             midsurfaceRotation(patch, x1, x2 - delta)) /
            (2.0 * delta);
  return pg;
}

ThicknessGeometry thicknessGeometry(const PointGeometry& pg, double x3) {
  ThicknessGeometry tg;
  tg.x3 = x3;
  tg.bX3 = shifter(pg.H, pg.K, x3);
  if (tg.bX3 <= 0.0)
    throw ThicknessExceedsCurvature(
        "thicknessGeometry: shifter " + std::to_string(tg.bX3) +
        " <= 0 at x3 = " + std::to_string(x3));

  const Mat3 shiftedDown = pg.a - x3 * pg.b;
  const Mat3 shiftedUp = pg.a + x3 * (pg.b - 2.0 * pg.H * pg.a);

  tg.gradTheta.col(0) = shiftedDown * pg.a1;
  tg.gradTheta.col(1) = shiftedDown * pg.a2;
  tg.gradTheta.col(2) = pg.n0;

  tg.gradThetaInv.row(0) = (shiftedUp * pg.acon1).transpose() / tg.bX3;
  tg.gradThetaInv.row(1) = (shiftedUp * pg.acon2).transpose() / tg.bX3;
  tg.gradThetaInv.row(2) = pg.n0.transpose();

  tg.detGradTheta = pg.areaFactor * tg.bX3;

  tg.cofGradTheta.col(0) = pg.areaFactor * (shiftedUp * pg.acon1);
  tg.cofGradTheta.col(1) = pg.areaFactor * (shiftedUp * pg.acon2);
  tg.cofGradTheta.col(2) = pg.areaFactor * tg.bX3 * pg.n0;
  return tg;
}

Mat3 initialRotation(const PointGeometry&, const ThicknessGeometry& tg) {
  return polar(tg.gradTheta).rotation;
}

Mat3 surfaceGradient(const PointGeometry& pg, const Vec3& f1, const Vec3& f2) {
  return f1 * pg.acon1.transpose() + f2 * pg.acon2.transpose();
}

// ---- built-in patches ------------------------------------------------

CylinderPatch::CylinderPatch(double radius, Domain d)
    : SurfacePatch(d), radius_(radius) {
  if (radius <= 0.0) throw ConfigError("cylinder: radius must be positive");
}

Vec3 CylinderPatch::position(double x1, double x2) const {
  return {radius_ * std::cos(x1), radius_ * std::sin(x1), x2};
}
Vec3 CylinderPatch::d1(double x1, double) const {
  return {-radius_ * std::sin(x1), radius_ * std::cos(x1), 0.0};
}
Vec3 CylinderPatch::d2(double, double) const { return {0.0, 0.0, 1.0}; }
Vec3 CylinderPatch::d11(double x1, double) const {
  return {-radius_ * std::cos(x1), -radius_ * std::sin(x1), 0.0};
}
Vec3 CylinderPatch::d12(double, double) const { return Vec3::Zero(); }
Vec3 CylinderPatch::d22(double, double) const { return Vec3::Zero(); }

SpherePatch::SpherePatch(double radius, Domain d)
    : SurfacePatch(d), radius_(radius) {
  if (radius <= 0.0) throw ConfigError("sphere: radius must be positive");
}

Vec3 SpherePatch::position(double x1, double x2) const {
  return radius_ * Vec3(std::cos(x1) * std::cos(x2),
                        std::sin(x1) * std::cos(x2), std::sin(x2));
}
Vec3 SpherePatch::d1(double x1, double x2) const {
  return radius_ * Vec3(-std::sin(x1) * std::cos(x2),
                        std::cos(x1) * std::cos(x2), 0.0);
}
Vec3 SpherePatch::d2(double x1, double x2) const {
  return radius_ * Vec3(-std::cos(x1) * std::sin(x2),
                        -std::sin(x1) * std::sin(x2), std::cos(x2));
}
Vec3 SpherePatch::d11(double x1, double x2) const {
  return radius_ * Vec3(-std::cos(x1) * std::cos(x2),
                        -std::sin(x1) * std::cos(x2), 0.0);
}
Vec3 SpherePatch::d12(double x1, double x2) const {
  return radius_ * Vec3(std::sin(x1) * std::sin(x2),
                        -std::cos(x1) * std::sin(x2), 0.0);
}
Vec3 SpherePatch::d22(double x1, double x2) const {
  return radius_ * Vec3(-std::cos(x1) * std::cos(x2),
                        -std::sin(x1) * std::cos(x2), -std::sin(x2));
}

TorusPatch::TorusPatch(double majorRadius, double minorRadius, Domain d)
    : SurfacePatch(d), R_(majorRadius), r_(minorRadius) {
  if (minorRadius <= 0.0 || majorRadius <= minorRadius)
    throw ConfigError("torus: need major_radius > minor_radius > 0");
}

Vec3 TorusPatch::position(double x1, double x2) const {
  const double rad = R_ + r_ * std::cos(x2);
  return {rad * std::cos(x1), rad * std::sin(x1), r_ * std::sin(x2)};
}
Vec3 TorusPatch::d1(double x1, double x2) const {
  const double rad = R_ + r_ * std::cos(x2);
  return {-rad * std::sin(x1), rad * std::cos(x1), 0.0};
}
Vec3 TorusPatch::d2(double x1, double x2) const {
  return {-r_ * std::sin(x2) * std::cos(x1), -r_ * std::sin(x2) * std::sin(x1),
          r_ * std::cos(x2)};
}
Vec3 TorusPatch::d11(double x1, double x2) const {
  const double rad = R_ + r_ * std::cos(x2);
  return {-rad * std::cos(x1), -rad * std::sin(x1), 0.0};
}
Vec3 TorusPatch::d12(double x1, double x2) const {
  return {r_ * std::sin(x2) * std::sin(x1), -r_ * std::sin(x2) * std::cos(x1),
          0.0};
}
Vec3 TorusPatch::d22(double x1, double x2) const {
  return {-r_ * std::cos(x2) * std::cos(x1), -r_ * std::cos(x2) * std::sin(x1),
          -r_ * std::sin(x2)};
}

GraphPatch::GraphPatch(double amp, double kx, double ky, Domain d)
    : SurfacePatch(d), amp_(amp), kx_(kx), ky_(ky) {}

Vec3 GraphPatch::position(double x1, double x2) const {
  return {x1, x2, amp_ * std::sin(kx_ * x1) * std::sin(ky_ * x2)};
}
Vec3 GraphPatch::d1(double x1, double x2) const {
  return {1.0, 0.0, amp_ * kx_ * std::cos(kx_ * x1) * std::sin(ky_ * x2)};
}
Vec3 GraphPatch::d2(double x1, double x2) const {
  return {0.0, 1.0, amp_ * ky_ * std::sin(kx_ * x1) * std::cos(ky_ * x2)};
}
Vec3 GraphPatch::d11(double x1, double x2) const {
  return {0.0, 0.0, -amp_ * kx_ * kx_ * std::sin(kx_ * x1) * std::sin(ky_ * x2)};
}
Vec3 GraphPatch::d12(double x1, double x2) const {
  return {0.0, 0.0, amp_ * kx_ * ky_ * std::cos(kx_ * x1) * std::cos(ky_ * x2)};
}
Vec3 GraphPatch::d22(double x1, double x2) const {
  return {0.0, 0.0, -amp_ * ky_ * ky_ * std::sin(kx_ * x1) * std::sin(ky_ * x2)};
}

namespace {

double param(const std::map<std::string, double>& params,
             const std::string& key, std::optional<double> fallback = {}) {
  const auto it = params.find(key);
  if (it != params.end()) return it->second;
  if (fallback) return *fallback;
  throw ConfigError("patch: missing parameter '" + key + "'");
}

}  // namespace

std::unique_ptr<SurfacePatch> makePatch(
    const std::string& name, const std::map<std::string, double>& params,
    const std::optional<Domain>& domainOverride) {
  std::unique_ptr<SurfacePatch> patch;
  if (name == "plane") {
    patch = std::make_unique<PlanePatch>(domainOverride.value_or(Domain{}));
  } else if (name == "cylinder") {
    const double r = param(params, "radius");
    patch = std::make_unique<CylinderPatch>(
        r, domainOverride.value_or(Domain{0.0, 1.2, 0.0, 1.0}));
  } else if (name == "sphere") {
    const double r = param(params, "radius");
    patch = std::make_unique<SpherePatch>(
        r, domainOverride.value_or(Domain{0.0, 1.0, -0.5, 0.5}));
  } else if (name == "torus") {
    const double R = param(params, "major_radius");
    const double r = param(params, "minor_radius");
    patch = std::make_unique<TorusPatch>(
        R, r, domainOverride.value_or(Domain{0.0, 1.2, 0.0, 1.2}));
  } else if (name == "graph") {
    const double amp = param(params, "amp", 0.1);
    const double kx = param(params, "kx", 1.3);
    const double ky = param(params, "ky", 0.9);
    patch = std::make_unique<GraphPatch>(amp, kx, ky,
                                         domainOverride.value_or(Domain{}));
  } else {
    throw ConfigError("patch: unknown name '" + name + "'");
  }
  return patch;
}

}  // namespace cosserat
