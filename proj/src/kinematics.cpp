#include "cosserat/kinematics.hpp"

namespace cosserat {

void validateShellState(const ShellState& state) {
  const Mat3 gram = state.Rbar.transpose() * state.Rbar;
  if ((gram - Mat3::Identity()).norm() > 1e-10 ||
      state.Rbar.determinant() < 0.0)
    throw InconsistentRotationDerivative(
        "shell state: Rbar is not proper orthogonal");
  for (const Mat3* d : {&state.Rbar1, &state.Rbar2}) {
    const Mat3 omega = state.Rbar.transpose() * (*d);
    if (sym(omega).norm() > 1e-8 * std::max(1.0, d->norm()))
      throw InconsistentRotationDerivative(
          "shell state: Rbar^T Rbar,_a is not skew");
  }
}

ShellState projectRotationDerivatives(ShellState state) {
  state.Rbar1 = state.Rbar * skew(state.Rbar.transpose() * state.Rbar1);
  state.Rbar2 = state.Rbar * skew(state.Rbar.transpose() * state.Rbar2);
  return state;
}

Mat3 elasticRotation(const ShellState& state, const PointGeometry& pg) {
  return state.Rbar * pg.Q0.transpose();
}

Mat3 shellStrain(const ShellState& state, const PointGeometry& pg) {
  const Mat3 qe = elasticRotation(state, pg);
  return qe.transpose() * surfaceGradient(pg, state.m1, state.m2) - pg.a;
}

Mat3 bendingCurvature(const ShellState& state, const PointGeometry& pg) {
  validateShellState(state);
  const Mat3 qe = elasticRotation(state, pg);
  const Mat3 q0t = pg.Q0.transpose();
  Mat3 ke = Mat3::Zero();
  for (int alpha = 0; alpha < 2; ++alpha) {
    const Mat3& dRbar = (alpha == 0) ? state.Rbar1 : state.Rbar2;
    const Mat3& dQ0 = (alpha == 0) ? pg.dQ01 : pg.dQ02;
    const Mat3 dQe = dRbar * q0t + state.Rbar * dQ0.transpose();
    const Mat3 omega = qe.transpose() * dQe;
    if (sym(omega).norm() > 1e-8 * std::max(1.0, omega.norm()))
      throw InconsistentRotationDerivative(
          "bendingCurvature: Q_e^T Q_e,_a is not skew");
    const Vec3 k = axl(skew(omega));
    ke += k * ((alpha == 0) ? pg.acon1 : pg.acon2).transpose();
  }
  return ke;
}

ThicknessCoeffs thicknessCoefficients(const Mat3& Ee, const Mat3& Ke,
                                      const PointGeometry& pg,
                                      const MaterialParams& mat,
                                      bool exactRhoB) {
  const double ratio = mat.lambda / (mat.lambda + 2.0 * mat.mu);
  const double trEe = tr(Ee);
  const double trEeB = tr(Ee * pg.b);
  const double trCKe = tr(pg.c * Ke);

  ThicknessCoeffs out;
  out.rhoM = 1.0 - ratio * trEe;
  if (exactRhoB)
    out.rhoB = -ratio * (trEeB + out.rhoM * trCKe + 2.0 * pg.H * (1.0 - out.rhoM));
  else
    out.rhoB = -ratio * (trEeB + trCKe);
  out.A1 = 2.0 * pg.H * (1.0 - out.rhoM) + out.rhoB;
  out.A2 = pg.K * (out.rhoM - 1.0) - 2.0 * pg.H * out.rhoB;
  return out;
}

StrainMeasures strainMeasures(const ShellState& state, const PointGeometry& pg,
                              const MaterialParams& mat, bool exactRhoB) {
  StrainMeasures sm;
  sm.Ee = shellStrain(state, pg);
  sm.Ke = bendingCurvature(state, pg);
  sm.coeffs = thicknessCoefficients(sm.Ee, sm.Ke, pg, mat, exactRhoB);
  return sm;
}

ReconstructedStrain reconstructedStrain(const Mat3& Ee, const Mat3& Ke,
                                        const ThicknessCoeffs& coeffs,
                                        const PointGeometry& pg, double x3,
                                        bool wantFull) {
  const double bx3 = shifter(pg.H, pg.K, x3);
  if (bx3 <= 0.0)
    throw ThicknessExceedsCurvature(
        "reconstructedStrain: shifter <= 0 at x3 = " + std::to_string(x3));

  const Mat3 nn = pg.n0 * pg.n0.transpose();
  const Mat3 shiftedUp = pg.b - 2.0 * pg.H * pg.a;
  const Mat3 cKe = pg.c * Ke;

  const Mat3 m0 = Ee + (coeffs.rhoM - 1.0) * nn;
  const Mat3 m1 = Ee * shiftedUp + cKe + coeffs.A1 * nn;
  const Mat3 m2 = cKe * shiftedUp + coeffs.A2 * nn;
  const Mat3 m3 = pg.K * coeffs.rhoB * nn;

  ReconstructedStrain out;
  out.EsTilde = (m0 + x3 * (m1 + x3 * (m2 + x3 * m3))) / bx3;
  out.GammaS = Ke * (pg.a + x3 * shiftedUp) / bx3;

  if (wantFull) {
    const Mat3 gradM = pg.n0 * (coeffs.rhoMGrad(0) * pg.acon1 +
                                coeffs.rhoMGrad(1) * pg.acon2)
                                   .transpose();
    const Mat3 gradB = pg.n0 * (coeffs.rhoBGrad(0) * pg.acon1 +
                                coeffs.rhoBGrad(1) * pg.acon2)
                                   .transpose();
    const Mat3 p1 =
        Ee * shiftedUp + pg.b + coeffs.rhoM * (cKe - pg.b) + gradM;
    const Mat3 p2 = coeffs.rhoM * cKe * shiftedUp +
                    0.5 * coeffs.rhoB * (cKe - pg.b) + gradM * shiftedUp +
                    0.5 * gradB;
    const Mat3 p3 = 0.5 * (coeffs.rhoB * cKe * shiftedUp +
                           coeffs.rhoB * pg.K * pg.a + gradB * shiftedUp);
    out.EsFull = (Ee + x3 * (p1 + x3 * (p2 + x3 * p3))) / bx3 +
                 ((coeffs.rhoM - 1.0) + x3 * coeffs.rhoB) * nn;
  }
  return out;
}

std::pair<double, double> planeStressResidual(const Mat3& Ee, const Mat3& Ke,
                                              const ThicknessCoeffs& coeffs,
                                              const PointGeometry& pg,
                                              const MaterialParams& mat) {
  const Mat3 nn = pg.n0 * pg.n0.transpose();
  const Mat3 es0 = Ee + (coeffs.rhoM - 1.0) * nn;
  const double f0 = pg.n0.dot(stressS2(es0, mat) * pg.n0);

  // thickness derivative of the full reconstructed strain at x3 = 0; the
  // in-plane coefficient gradients have no normal-normal component
  const Mat3 gradM = pg.n0 * (coeffs.rhoMGrad(0) * pg.acon1 +
                              coeffs.rhoMGrad(1) * pg.acon2)
                                 .transpose();
  const Mat3 dEs0 = (Ee + pg.a) * pg.b +
                    coeffs.rhoM * (pg.c * Ke - pg.b) + gradM +
                    coeffs.rhoB * nn;
  const Mat3 dS2 = 2.0 * mat.mu * dEs0 +
                   2.0 * (mat.muC - mat.mu) * skew(dEs0) +
                   mat.lambda * tr(dEs0) * Mat3::Identity();
  const double f1 = pg.n0.dot(dS2 * pg.n0);
  return {f0, f1};
}

double wrynessEquivalence(const ShellState& state, const PointGeometry& pg,
                          const ThicknessGeometry& tg) {
  validateShellState(state);
  const Mat3 qe = elasticRotation(state, pg);
  const Mat3 q0t = pg.Q0.transpose();

  Mat3 direct = Mat3::Zero();
  Mat3 split = Mat3::Zero();
  for (int alpha = 0; alpha < 2; ++alpha) {
    const Mat3& dRbar = (alpha == 0) ? state.Rbar1 : state.Rbar2;
    const Mat3& dQ0 = (alpha == 0) ? pg.dQ01 : pg.dQ02;
    const Vec3 gcon = tg.gradThetaInv.row(alpha).transpose();

    const Mat3 dQe = dRbar * q0t + state.Rbar * dQ0.transpose();
    direct += axl(skew(qe.transpose() * dQe)) * gcon.transpose();

    const Vec3 axlRbar = axl(skew(state.Rbar.transpose() * dRbar));
    const Vec3 axlQ0 = axl(skew(pg.Q0.transpose() * dQ0));
    split += (pg.Q0 * (axlRbar - axlQ0)) * gcon.transpose();
  }
  return (direct - split).norm();
}

ShellState rotateState(const ShellState& state, const Mat3& q) {
  ShellState out;
  out.m = q * state.m;
  out.m1 = q * state.m1;
  out.m2 = q * state.m2;
  out.Rbar = q * state.Rbar;
  out.Rbar1 = q * state.Rbar1;
  out.Rbar2 = q * state.Rbar2;
  return out;
}

// ---- state fields ------------------------------------------------------

Vec3 StateField::positionPartial(const SurfacePatch& p, double x1, double x2,
                                 int alpha) const {
  const double d = 1e-6 * p.domain().diameter();
  if (alpha == 0)
    return (position(p, x1 + d, x2) - position(p, x1 - d, x2)) / (2.0 * d);
  return (position(p, x1, x2 + d) - position(p, x1, x2 - d)) / (2.0 * d);
}

ShellState StateField::evaluate(const SurfacePatch& p, double x1,
                                double x2) const {
  ShellState s;
  s.m = position(p, x1, x2);
  s.m1 = positionPartial(p, x1, x2, 0);
  s.m2 = positionPartial(p, x1, x2, 1);
  s.Rbar = rotation(p, x1, x2);
  const double d = 1e-5 * p.domain().diameter();
  s.Rbar1 = (rotation(p, x1 + d, x2) - rotation(p, x1 - d, x2)) / (2.0 * d);
  s.Rbar2 = (rotation(p, x1, x2 + d) - rotation(p, x1, x2 - d)) / (2.0 * d);
  return s;
}

Vec3 IdentityField::position(const SurfacePatch& p, double x1, double x2) const {
  return p.position(x1, x2);
}
Vec3 IdentityField::positionPartial(const SurfacePatch& p, double x1,
                                    double x2, int alpha) const {
  return alpha == 0 ? p.d1(x1, x2) : p.d2(x1, x2);
}
Mat3 IdentityField::rotation(const SurfacePatch& p, double x1, double x2) const {
  return midsurfaceRotation(p, x1, x2);
}

Vec3 StretchField::position(const SurfacePatch& p, double x1, double x2) const {
  return alpha_ * p.position(x1, x2);
}
Vec3 StretchField::positionPartial(const SurfacePatch& p, double x1, double x2,
                                   int alpha) const {
  return alpha_ * (alpha == 0 ? p.d1(x1, x2) : p.d2(x1, x2));
}
Mat3 StretchField::rotation(const SurfacePatch& p, double x1, double x2) const {
  return midsurfaceRotation(p, x1, x2);
}

Vec3 DrillingField::position(const SurfacePatch& p, double x1, double x2) const {
  return p.position(x1, x2);
}
Vec3 DrillingField::positionPartial(const SurfacePatch& p, double x1,
                                    double x2, int alpha) const {
  return alpha == 0 ? p.d1(x1, x2) : p.d2(x1, x2);
}
Mat3 DrillingField::rotation(const SurfacePatch& p, double x1, double x2) const {
  return rotationExp(amp_ * x1 * unitNormal(p, x1, x2)) *
         midsurfaceRotation(p, x1, x2);
}

Vec3 BendingField::position(const SurfacePatch& p, double x1, double x2) const {
  return p.position(x1, x2);
}
Vec3 BendingField::positionPartial(const SurfacePatch& p, double x1, double x2,
                                   int alpha) const {
  return alpha == 0 ? p.d1(x1, x2) : p.d2(x1, x2);
}
Mat3 BendingField::rotation(const SurfacePatch& p, double x1, double x2) const {
  return rotationExp(amp_ * x1 * Vec3::UnitY()) * midsurfaceRotation(p, x1, x2);
}

namespace {

Vec3 composedDisplacement(double ampU, double x1, double x2) {
  return ampU * Vec3(std::sin(1.3 * x1 + 0.4 * x2),
                     std::cos(-0.2 * x1 + 0.8 * x2),
                     std::sin(0.9 * x1) * std::cos(1.1 * x2));
}

Vec3 composedDisplacementPartial(double ampU, double x1, double x2, int alpha) {
  if (alpha == 0)
    return ampU * Vec3(1.3 * std::cos(1.3 * x1 + 0.4 * x2),
                       0.2 * std::sin(-0.2 * x1 + 0.8 * x2),
                       0.9 * std::cos(0.9 * x1) * std::cos(1.1 * x2));
  return ampU * Vec3(0.4 * std::cos(1.3 * x1 + 0.4 * x2),
                     -0.8 * std::sin(-0.2 * x1 + 0.8 * x2),
                     -1.1 * std::sin(0.9 * x1) * std::sin(1.1 * x2));
}

Vec3 composedRotationVector(double ampW, double x1, double x2) {
  return ampW * Vec3(std::sin(1.1 * x2 + 0.3), std::cos(0.9 * x1 - 0.2),
                     std::sin(0.7 * x1 + 0.5 * x2));
}

}  // namespace

Vec3 ComposedField::position(const SurfacePatch& p, double x1, double x2) const {
  return (1.0 + 0.3 * ampU_) * p.position(x1, x2) +
         composedDisplacement(ampU_, x1, x2);
}
Vec3 ComposedField::positionPartial(const SurfacePatch& p, double x1, double x2,
                                    int alpha) const {
  return (1.0 + 0.3 * ampU_) * (alpha == 0 ? p.d1(x1, x2) : p.d2(x1, x2)) +
         composedDisplacementPartial(ampU_, x1, x2, alpha);
}
Mat3 ComposedField::rotation(const SurfacePatch& p, double x1, double x2) const {
  return rotationExp(composedRotationVector(ampW_, x1, x2)) *
         midsurfaceRotation(p, x1, x2);
}

namespace {

double fieldParam(const std::map<std::string, double>& params,
                  const std::string& key, double fallback) {
  const auto it = params.find(key);
  return it != params.end() ? it->second : fallback;
}

}  // namespace

std::unique_ptr<StateField> makeStateField(
    const std::string& name, const std::map<std::string, double>& params) {
  if (name == "identity") return std::make_unique<IdentityField>();
  if (name == "stretch")
    return std::make_unique<StretchField>(fieldParam(params, "alpha", 1.05));
  if (name == "drilling")
    return std::make_unique<DrillingField>(fieldParam(params, "amp", 0.3));
  if (name == "bending")
    return std::make_unique<BendingField>(fieldParam(params, "amp", 0.3));
  if (name == "composed")
    return std::make_unique<ComposedField>(fieldParam(params, "amp_u", 0.2),
                                           fieldParam(params, "amp_w", 0.3));
  throw ConfigError("state field: unknown name '" + name + "'");
}

ThicknessCoeffs thicknessCoefficientsWithGradients(
    const SurfacePatch& patch, const StateField& field,
    const MaterialParams& mat, double x1, double x2, bool exactRhoB) {
  const auto at = [&](double u, double v) {
    const PointGeometry pg = pointGeometry(patch, u, v);
    const ShellState st = field.evaluate(patch, u, v);
    return thicknessCoefficients(shellStrain(st, pg),
                                 bendingCurvature(st, pg), pg, mat, exactRhoB);
  };
  ThicknessCoeffs out = at(x1, x2);
  const double d = 1e-5 * patch.domain().diameter();
  const ThicknessCoeffs px = at(x1 + d, x2), mx = at(x1 - d, x2);
  const ThicknessCoeffs py = at(x1, x2 + d), my = at(x1, x2 - d);
  out.rhoMGrad = Vec2((px.rhoM - mx.rhoM) / (2.0 * d),
                      (py.rhoM - my.rhoM) / (2.0 * d));
  out.rhoBGrad = Vec2((px.rhoB - mx.rhoB) / (2.0 * d),
                      (py.rhoB - my.rhoB) / (2.0 * d));
  return out;
}

}  // namespace cosserat
