#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cosserat/checks.hpp"
#include "cosserat/kinematics.hpp"

using namespace cosserat;

namespace {

const MaterialParams kMat =
    MaterialParams::make(1.0, 1.0, 0.5, 0.2, 1.0, 1.0, 1.0, 0.02);

}  // namespace

TEST_CASE("reference configuration has vanishing strain measures") {
  const SpherePatch sphere(1.0);
  const IdentityField field;
  const PointGeometry pg = pointGeometry(sphere, 0.4, 0.2);
  const ShellState st = field.evaluate(sphere, 0.4, 0.2);
  CHECK((elasticRotation(st, pg) - Mat3::Identity()).norm() <= 1e-12);
  CHECK(shellStrain(st, pg).norm() <= 1e-12);
  CHECK(bendingCurvature(st, pg).norm() <= 1e-9);  // limited by the FD step
}

TEST_CASE("homogeneous stretch of a flat plate") {
  const PlanePatch plane;
  const StretchField field(1.07);
  const PointGeometry pg = pointGeometry(plane, 0.3, 0.6);
  const ShellState st = field.evaluate(plane, 0.3, 0.6);
  Mat3 expected = Mat3::Zero();
  expected(0, 0) = expected(1, 1) = 0.07;
  CHECK((shellStrain(st, pg) - expected).norm() <= 1e-12);
  CHECK(tr(shellStrain(st, pg)) == doctest::Approx(0.14).epsilon(1e-12));
}

TEST_CASE("flat drilling rotation produces a pure drilling curvature") {
  const PlanePatch plane;
  const DrillingField field(0.25);
  const PointGeometry pg = pointGeometry(plane, 0.5, 0.5);
  const ShellState st = field.evaluate(plane, 0.5, 0.5);
  const Mat3 ke = bendingCurvature(st, pg);
  const Mat3 expected = 0.25 * Vec3::UnitZ() * Vec3::UnitX().transpose();
  CHECK((ke - expected).norm() <= 1e-8);
}

TEST_CASE("elastic rotation is orthogonal for generic fields") {
  const TorusPatch torus(2.0, 0.5);
  const ComposedField field(0.2, 0.3);
  const PointGeometry pg = pointGeometry(torus, 0.6, 0.8);
  const ShellState st = field.evaluate(torus, 0.6, 0.8);
  const Mat3 qe = elasticRotation(st, pg);
  CHECK((qe.transpose() * qe - Mat3::Identity()).norm() <= 1e-12);
}

TEST_CASE("strain components match the director products") {
  const SpherePatch sphere(1.0);
  const ComposedField field(0.25, 0.35);
  const PointGeometry pg = pointGeometry(sphere, 0.7, -0.1);
  const ShellState st = field.evaluate(sphere, 0.7, -0.1);

  const Mat3 Ee = shellStrain(st, pg);
  Mat3 componentForm = Mat3::Zero();
  const Vec3 dirs0[3] = {pg.d10, pg.d20, pg.d30};
  const Vec3 cols[2] = {pg.acon1, pg.acon2};
  const Vec3 tangents[2] = {pg.a1, pg.a2};
  const Vec3 partials[2] = {st.m1, st.m2};
  for (int i = 0; i < 3; ++i) {
    const Vec3 di = st.Rbar * Vec3::Unit(i);  // current director
    for (int alpha = 0; alpha < 2; ++alpha)
      componentForm += (partials[alpha].dot(di) - tangents[alpha].dot(dirs0[i])) *
                       dirs0[i] * cols[alpha].transpose();
  }
  CHECK((Ee - componentForm).norm() <= 1e-12);
}

TEST_CASE("bending curvature matches the director product form") {
  const SpherePatch sphere(1.0);
  const ComposedField field(0.2, 0.4);
  const PointGeometry pg = pointGeometry(sphere, 0.3, 0.25);
  const ShellState st = field.evaluate(sphere, 0.3, 0.25);
  const Mat3 ke = bendingCurvature(st, pg);

  // rows: (d2,a . d3 - d2,a0 . d30) d10 + (d3,a . d1 - ...) d20 + ...
  Mat3 directorForm = Mat3::Zero();
  const Vec3 cols[2] = {pg.acon1, pg.acon2};
  const Mat3 dQ0[2] = {pg.dQ01, pg.dQ02};
  const Mat3 dR[2] = {st.Rbar1, st.Rbar2};
  for (int alpha = 0; alpha < 2; ++alpha) {
    const Vec3 d1 = st.Rbar * Vec3::UnitX(), d2 = st.Rbar * Vec3::UnitY(),
               d3 = st.Rbar * Vec3::UnitZ();
    const Vec3 d1a = dR[alpha] * Vec3::UnitX(), d2a = dR[alpha] * Vec3::UnitY(),
               d3a = dR[alpha] * Vec3::UnitZ();
    const Vec3 d10a = dQ0[alpha] * Vec3::UnitX(),
               d20a = dQ0[alpha] * Vec3::UnitY(),
               d30a = dQ0[alpha] * Vec3::UnitZ();
    directorForm +=
        ((d2a.dot(d3) - d20a.dot(pg.d30)) * pg.d10 +
         (d3a.dot(d1) - d30a.dot(pg.d10)) * pg.d20 +
         (d1a.dot(d2) - d10a.dot(pg.d20)) * pg.d30) *
        cols[alpha].transpose();
  }
  CHECK((ke - directorForm).norm() <= 1e-10);
}

TEST_CASE("inconsistent rotation derivatives are rejected") {
  const PlanePatch plane;
  const IdentityField field;
  ShellState st = field.evaluate(plane, 0.5, 0.5);
  st.Rbar1 = Mat3::Identity();  // symmetric, not a rotation rate
  const PointGeometry pg = pointGeometry(plane, 0.5, 0.5);
  CHECK_THROWS_AS(bendingCurvature(st, pg), InconsistentRotationDerivative);

  ShellState bad = field.evaluate(plane, 0.5, 0.5);
  bad.Rbar *= 1.5;  // not orthogonal
  CHECK_THROWS_AS(validateShellState(bad), InconsistentRotationDerivative);
}

TEST_CASE("thickness coefficients at the reference state") {
  const SpherePatch sphere(1.0);
  const PointGeometry pg = pointGeometry(sphere, 0.5, 0.0);
  const ThicknessCoeffs c =
      thicknessCoefficients(Mat3::Zero(), Mat3::Zero(), pg, kMat);
  CHECK(c.rhoM == 1.0);
  CHECK(c.rhoB == 0.0);
  CHECK(c.A1 == 0.0);
  CHECK(c.A2 == 0.0);
}

TEST_CASE("thickness coefficients on a flat plate") {
  const PlanePatch plane;
  const PointGeometry pg = pointGeometry(plane, 0.5, 0.5);
  const double eps = 0.03;
  Mat3 Ee = Mat3::Zero();
  Ee(0, 0) = Ee(1, 1) = eps;
  std::mt19937_64 rng(3);
  const Mat3 Ke = randomAdmissibleTensor(pg, rng);
  const ThicknessCoeffs c = thicknessCoefficients(Ee, Ke, pg, kMat);
  const double ratio = kMat.lambda / (kMat.lambda + 2.0 * kMat.mu);
  CHECK(c.rhoM == doctest::Approx(1.0 - 2.0 * eps * ratio).epsilon(1e-14));
  CHECK(c.rhoB == doctest::Approx(-ratio * tr(pg.c * Ke)).epsilon(1e-13));
}

TEST_CASE("normal coefficients equal their closed forms") {
  const TorusPatch torus(2.0, 0.5);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const PointGeometry pg = pointGeometry(torus, 0.1 + 0.03 * t, 0.9);
    const Mat3 Ee = randomAdmissibleTensor(pg, rng);
    const Mat3 Ke = randomAdmissibleTensor(pg, rng);
    const ThicknessCoeffs c = thicknessCoefficients(Ee, Ke, pg, kMat);
    const double ratio = kMat.lambda / (kMat.lambda + 2.0 * kMat.mu);
    const double a1Closed =
        -ratio * tr(Ee * (pg.b - 2.0 * pg.H * pg.a) + pg.c * Ke);
    const double a2Closed =
        ratio * (2.0 * pg.H * tr(Ee * pg.b + pg.c * Ke) - pg.K * tr(Ee));
    CHECK(std::abs(c.A1 - a1Closed) <= 1e-13 * std::max(1.0, std::abs(a1Closed)));
    CHECK(std::abs(c.A2 - a2Closed) <= 1e-13 * std::max(1.0, std::abs(a2Closed)));
  }
}

TEST_CASE("reconstructed strain at the midsurface") {
  const SpherePatch sphere(1.0);
  const PointGeometry pg = pointGeometry(sphere, 0.2, 0.1);
  std::mt19937_64 rng(5);
  const Mat3 Ee = randomAdmissibleTensor(pg, rng);
  const Mat3 Ke = randomAdmissibleTensor(pg, rng);
  const ThicknessCoeffs c = thicknessCoefficients(Ee, Ke, pg, kMat);
  const ReconstructedStrain rs = reconstructedStrain(Ee, Ke, c, pg, 0.0);
  const Mat3 nn = pg.n0 * pg.n0.transpose();
  CHECK((rs.EsTilde - Ee - (c.rhoM - 1.0) * nn).norm() <= 1e-14);
  CHECK((rs.GammaS - Ke).norm() <= 1e-14);
}

TEST_CASE("flat reconstruction reduces to the linear profile") {
  const PlanePatch plane;
  const PointGeometry pg = pointGeometry(plane, 0.4, 0.4);
  std::mt19937_64 rng(6);
  const Mat3 Ee = randomAdmissibleTensor(pg, rng);
  const Mat3 Ke = randomAdmissibleTensor(pg, rng);
  const ThicknessCoeffs c = thicknessCoefficients(Ee, Ke, pg, kMat);
  const double x3 = 0.007;
  const ReconstructedStrain rs = reconstructedStrain(Ee, Ke, c, pg, x3);
  const Mat3 nn = pg.n0 * pg.n0.transpose();
  const Mat3 expected =
      Ee + x3 * pg.c * Ke + ((c.rhoM - 1.0) + x3 * c.rhoB) * nn;
  CHECK((rs.EsTilde - expected).norm() <= 1e-14);
}

TEST_CASE("shifted strain times the shifter is cubic in the thickness") {
  const SpherePatch sphere(1.0);
  const PointGeometry pg = pointGeometry(sphere, 0.6, 0.3);
  std::mt19937_64 rng(7);
  const Mat3 Ee = randomAdmissibleTensor(pg, rng);
  const Mat3 Ke = randomAdmissibleTensor(pg, rng);
  const ThicknessCoeffs c = thicknessCoefficients(Ee, Ke, pg, kMat);

  // sample at four normalized abscissae and recover the matrix
  // coefficients; the polynomial identity holds wherever the shifter is
  // positive, so a wide spread keeps the solve well conditioned
  const double halfWidth = 0.3;
  const double ts[4] = {-1.0, -1.0 / 3.0, 1.0 / 3.0, 1.0};
  Eigen::Matrix4d vander;
  for (int q = 0; q < 4; ++q)
    for (int j = 0; j < 4; ++j) vander(q, j) = std::pow(ts[q], j);
  const Eigen::Matrix4d inv = vander.inverse();

  Mat3 samples[4];
  for (int q = 0; q < 4; ++q) {
    const double x3 = halfWidth * ts[q];
    samples[q] = reconstructedStrain(Ee, Ke, c, pg, x3).EsTilde *
                 shifter(pg.H, pg.K, x3);
  }
  Mat3 recovered[4];
  for (int j = 0; j < 4; ++j) {
    recovered[j] = Mat3::Zero();
    for (int q = 0; q < 4; ++q) recovered[j] += inv(j, q) * samples[q];
    recovered[j] /= std::pow(halfWidth, j);
  }

  const Mat3 nn = pg.n0 * pg.n0.transpose();
  const Mat3 up = pg.b - 2.0 * pg.H * pg.a;
  const Mat3 m0 = Ee + (c.rhoM - 1.0) * nn;
  const Mat3 m1 = Ee * up + pg.c * Ke + c.A1 * nn;
  const Mat3 m2 = pg.c * Ke * up + c.A2 * nn;
  const Mat3 m3 = pg.K * c.rhoB * nn;
  CHECK((recovered[0] - m0).norm() <= 1e-10);
  CHECK((recovered[1] - m1).norm() <= 1e-10);
  CHECK((recovered[2] - m2).norm() <= 1e-10);
  CHECK((recovered[3] - m3).norm() <= 1e-10);
}

TEST_CASE("plane stress residuals vanish at the reference state") {
  const SpherePatch sphere(1.0);
  const PointGeometry pg = pointGeometry(sphere, 0.5, 0.2);
  const ThicknessCoeffs c =
      thicknessCoefficients(Mat3::Zero(), Mat3::Zero(), pg, kMat, true);
  const auto [f0, f1] =
      planeStressResidual(Mat3::Zero(), Mat3::Zero(), c, pg, kMat);
  CHECK(f0 == 0.0);
  CHECK(std::abs(f1) <= 1e-15);  // a b - b cancels to rounding
}

TEST_CASE("plane stress residuals vanish with the exact slope") {
  const TorusPatch torus(2.0, 0.5);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    const PointGeometry pg = pointGeometry(torus, 0.2 + 0.015 * t, 0.5);
    const Mat3 Ee = randomAdmissibleTensor(pg, rng, 0.5);
    const Mat3 Ke = randomAdmissibleTensor(pg, rng, 0.5);
    const ThicknessCoeffs c = thicknessCoefficients(Ee, Ke, pg, kMat, true);
    const auto [f0, f1] = planeStressResidual(Ee, Ke, c, pg, kMat);
    const double stress = kMat.mu + std::abs(kMat.lambda);
    CHECK(std::abs(f0) <= 1e-12 * stress * Ee.norm());
    CHECK(std::abs(f1) <= 1e-12 * stress * (Ee.norm() + Ke.norm()) * pg.b.norm());
  }
}

TEST_CASE("linearized slope leaves a quadratic residual on a flat plate") {
  const PlanePatch plane;
  const PointGeometry pg = pointGeometry(plane, 0.5, 0.5);
  std::mt19937_64 rng(9);
  Mat3 Ee0 = randomAdmissibleTensor(pg, rng) + 0.5 * pg.a;
  Mat3 Ke0 = randomAdmissibleTensor(pg, rng) +
             0.5 * (pg.d20 * pg.acon1.transpose() -
                    pg.d10 * pg.acon2.transpose());
  double prev = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double s = 1e-2 / (1 << k);
    const ThicknessCoeffs c =
        thicknessCoefficients(s * Ee0, s * Ke0, pg, kMat, false);
    const double f1 = planeStressResidual(s * Ee0, s * Ke0, c, pg, kMat).second;
    const double ratio = f1 / (s * s);
    if (k > 0) CHECK(std::abs(ratio / prev - 1.0) <= 0.05);
    prev = ratio;
  }
  CHECK(std::abs(prev) > 0.0);
}

TEST_CASE("wryness forms agree") {
  const PlanePatch plane;
  const IdentityField identity;
  const PointGeometry pgPlane = pointGeometry(plane, 0.5, 0.5);
  const ThicknessGeometry tgPlane = thicknessGeometry(pgPlane, 0.003);
  CHECK(wrynessEquivalence(identity.evaluate(plane, 0.5, 0.5), pgPlane,
                           tgPlane) <= 1e-12);

  const DrillingField drilling(0.4);
  CHECK(wrynessEquivalence(drilling.evaluate(plane, 0.5, 0.5), pgPlane,
                           tgPlane) <= 1e-9);

  const SpherePatch sphere(1.0);
  const ComposedField composed(0.2, 0.4);
  const PointGeometry pg = pointGeometry(sphere, 0.4, 0.1);
  const ThicknessGeometry tg = thicknessGeometry(pg, -0.004);
  CHECK(wrynessEquivalence(composed.evaluate(sphere, 0.4, 0.1), pg, tg) <=
        1e-8);
}

TEST_CASE("state field factory resolves names") {
  CHECK_NOTHROW(makeStateField("identity", {}));
  CHECK_NOTHROW(makeStateField("composed", {{"amp_u", 0.1}}));
  CHECK_THROWS_AS(makeStateField("vortex", {}), ConfigError);
}

TEST_CASE("kinematics identity suite passes") {
  for (const CheckResult& c : kinematicsSuite(29)) {
    INFO(c.name, " residual ", c.residual);
    CHECK(c.pass());
  }
}
