#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cosserat/checks.hpp"
#include "cosserat/energy.hpp"

using namespace cosserat;

namespace {

std::mt19937_64 rng(77);

Mat3 randomMat3(double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Mat3 x;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) x(i, j) = u(rng);
  return x;
}

const MaterialParams kMat =
    MaterialParams::make(1.0, 2.0, 0.5, 0.2, 1.0, 1.0, 1.0, 0.02);

}  // namespace

TEST_CASE("material parameters are validated") {
  const MaterialParams m = MaterialParams::make(1.0, 2.0, 0.5, 0.2, 1, 1, 1, 0.01);
  CHECK(m.kappa == doctest::Approx((3.0 * 2.0 + 2.0) / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(MaterialParams::make(-1.0, 2.0, 0.5, 0.2, 1, 1, 1, 0.01),
                  ConfigError);
  CHECK_THROWS_AS(MaterialParams::make(1.0, 2.0, -0.5, 0.2, 1, 1, 1, 0.01),
                  ConfigError);
  CHECK_THROWS_AS(MaterialParams::make(1.0, 2.0, 0.5, 0.2, 1, 0, 1, 0.01),
                  ConfigError);
  CHECK_THROWS_AS(MaterialParams::make(1.0, 2.0, 0.5, 0.2, 1, 1, 1, 0.0),
                  ConfigError);
  MaterialParams bad = m;
  bad.kappa = 1.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("stretch form on simple tensors") {
  CHECK(wMp(Mat3::Zero(), kMat) == 0.0);
  // mu |sym|^2 + lambda/2 tr^2 on a unit diagonal dyad: 1 + 2 = 3... with
  // mu = 1, lambda = 2: 1 * 1 + (2/2) * 1 = 2
  const Mat3 dyad = Vec3::UnitX() * Vec3::UnitX().transpose();
  CHECK(wMp(dyad, kMat) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("stretch form dual writing agrees") {
  for (int t = 0; t < 100; ++t) {
    const Mat3 s = randomMat3(), u = randomMat3();
    const double a = wMp3(s, u, kMat), b = wMp3Dev(s, u, kMat);
    CHECK(std::abs(a - b) <= 1e-13 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("curvature form on simple tensors") {
  const double scale = kMat.mu * kMat.Lc * kMat.Lc;
  CHECK(wCurv(Mat3::Identity(), kMat) ==
        doctest::Approx(scale * kMat.b3 * 9.0).epsilon(1e-14));
  const Mat3 s = skew(randomMat3());
  CHECK(wCurv(s, kMat) ==
        doctest::Approx(scale * kMat.b2 * s.squaredNorm()).epsilon(1e-13));
}

TEST_CASE("curvature form is bilinear") {
  for (int t = 0; t < 30; ++t) {
    const Mat3 s1 = randomMat3(), s2 = randomMat3(), u = randomMat3();
    const double alpha = 0.37;
    const double lhs = wCurv3(alpha * s1 + s2, u, kMat);
    const double rhs = alpha * wCurv3(s1, u, kMat) + wCurv3(s2, u, kMat);
    CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("mixed form drops to the stretch form on trace-free input") {
  for (int t = 0; t < 30; ++t) {
    const Mat3 s = dev3(randomMat3());
    const Mat3 u = randomMat3();
    CHECK(std::abs(wMixt(s, u, kMat) - wMp3(s, u, kMat)) <= 1e-14);
  }
}

TEST_CASE("mixed form against the stretch form on the identity") {
  const MaterialParams m = MaterialParams::make(1.0, 1.0, 0.5, 0.2, 1, 1, 1, 0.01);
  const Mat3 id = Mat3::Identity();
  CHECK(wMixt(id, id, m) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(wMp3(id, id, m) == doctest::Approx(7.5).epsilon(1e-14));
  // the difference is the trace coupling lambda^2 / (2 (lambda + 2 mu)) * 9
  CHECK(wMp3(id, id, m) - wMixt(id, id, m) ==
        doctest::Approx(1.5).epsilon(1e-13));
}

TEST_CASE("trace coupling split holds for random tensors") {
  for (int t = 0; t < 100; ++t) {
    const Mat3 s = randomMat3(), u = randomMat3();
    const double expected =
        wMp3(s, u, kMat) - kMat.lambda * kMat.lambda /
                               (2.0 * (kMat.lambda + 2.0 * kMat.mu)) * tr(s) *
                               tr(u);
    CHECK(std::abs(wMixt(s, u, kMat) - expected) <=
          1e-13 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("stress tensor examples and energy consistency") {
  CHECK(stressS2(Mat3::Zero(), kMat).norm() == 0.0);
  const Mat3 dyad = Vec3::UnitX() * Vec3::UnitX().transpose();
  const Mat3 s2 = stressS2(dyad, kMat);
  CHECK((s2 - 2.0 * dyad - 2.0 * Mat3::Identity()).norm() <= 1e-15);
  for (int t = 0; t < 30; ++t) {
    const Mat3 e = randomMat3();
    CHECK(std::abs(inner(stressS2(e, kMat), e) - 2.0 * wMp(e, kMat)) <=
          1e-13 * std::max(1.0, wMp(e, kMat)));
  }
}

TEST_CASE("normal shift identities") {
  const SpherePatch sphere(1.0);
  const PointGeometry pg = pointGeometry(sphere, 0.3, 0.2);
  std::mt19937_64 arng(4);

  // pure normal dyad: wMp(alpha n (x) n) = (lambda + 2 mu)/2 alpha^2
  const double alpha = 0.37;
  const Mat3 nn = pg.n0 * pg.n0.transpose();
  CHECK(wMp(alpha * nn, kMat) ==
        doctest::Approx(0.5 * (kMat.lambda + 2.0 * kMat.mu) * alpha * alpha)
            .epsilon(1e-13));
  const auto [z1, z2] =
      appendixIdentities(Mat3::Zero(), Mat3::Zero(), alpha, -0.7, pg, kMat);
  CHECK(z1 <= 1e-15);
  CHECK(z2 <= 1e-15);

  for (int t = 0; t < 50; ++t) {
    const Mat3 s = randomAdmissibleTensor(pg, arng);
    const Mat3 u = randomAdmissibleTensor(pg, arng);
    const double a = -1.0 + 0.04 * t, b = 0.8 - 0.03 * t;
    const auto [r1, r2] = appendixIdentities(s, u, a, b, pg, kMat);
    const double scale = (kMat.mu + kMat.lambda) *
                         std::max({1.0, s.norm() * u.norm(), s.norm(), u.norm()});
    CHECK(r1 <= 1e-13 * scale);
    CHECK(r2 <= 1e-13 * scale);

    // choosing the shift as the trace elimination reproduces the mixed form
    const double shift = -kMat.lambda / (kMat.lambda + 2.0 * kMat.mu) * tr(s);
    const auto [r1b, unused] = appendixIdentities(s, u, shift, b, pg, kMat);
    (void)unused;
    const double direct = wMp3(s + shift * nn, u + b * nn, kMat);
    CHECK(std::abs(direct - wMixt(s, u, kMat)) <= 1e-13 * scale);
    CHECK(r1b <= 1e-13 * scale);
  }

  Mat3 offStructure = randomAdmissibleTensor(pg, arng);
  offStructure += 0.1 * pg.a1 * pg.n0.transpose();
  CHECK_THROWS_AS(
      appendixIdentities(offStructure, Mat3::Zero(), 0.0, 0.0, pg, kMat),
      StructureViolation);
}

TEST_CASE("membrane coefficients vanish at the reference state") {
  const TorusPatch torus(2.0, 0.5);
  const PointGeometry pg = pointGeometry(torus, 0.4, 0.6);
  const ThicknessCoeffs c =
      thicknessCoefficients(Mat3::Zero(), Mat3::Zero(), pg, kMat);
  for (const double ck :
       membraneCoefficients(Mat3::Zero(), Mat3::Zero(), c, pg, kMat))
    CHECK(ck == 0.0);
  for (const double dk : curvatureCoefficients(Mat3::Zero(), pg, kMat))
    CHECK(dk == 0.0);
}

TEST_CASE("flat plate kills the two highest membrane coefficients") {
  const PlanePatch plane;
  const PointGeometry pg = pointGeometry(plane, 0.5, 0.5);
  std::mt19937_64 arng(11);
  const Mat3 Ee = randomAdmissibleTensor(pg, arng);
  const Mat3 Ke = randomAdmissibleTensor(pg, arng);
  const ThicknessCoeffs c = thicknessCoefficients(Ee, Ke, pg, kMat);
  const auto coeffs = membraneCoefficients(Ee, Ke, c, pg, kMat);
  CHECK(coeffs[5] == 0.0);
  CHECK(coeffs[6] == 0.0);
  CHECK(coeffs[0] == doctest::Approx(wM(Ee, kMat)).epsilon(1e-13));

  const auto reduced = reducedMembraneCoefficients(Ee, Ke, pg, kMat);
  CHECK(reduced[1] ==
        doctest::Approx(2.0 * wMixt(Ee, pg.c * Ke, kMat)).epsilon(1e-13));
  CHECK(reduced[2] == doctest::Approx(wM(pg.c * Ke, kMat)).epsilon(1e-13));

  const auto d = curvatureCoefficients(Ke, pg, kMat);
  CHECK(d[1] == 0.0);
  CHECK(d[2] == 0.0);
}

TEST_CASE("membrane polynomial matches the reconstructed strain energy") {
  const TorusPatch torus(2.0, 0.5);
  const PointGeometry pg = pointGeometry(torus, 0.8, 1.0);
  std::mt19937_64 arng(13);
  const Mat3 Ee = randomAdmissibleTensor(pg, arng, 0.5);
  const Mat3 Ke = randomAdmissibleTensor(pg, arng, 0.5);
  const ThicknessCoeffs c = thicknessCoefficients(Ee, Ke, pg, kMat);
  const auto coeffs = membraneCoefficients(Ee, Ke, c, pg, kMat);
  for (int q = 0; q < 7; ++q) {
    const double x3 = -0.01 + q * (0.02 / 6.0);
    double poly = 0.0;
    for (int k = 6; k >= 0; --k) poly = poly * x3 + coeffs[k];
    const double bx3 = shifter(pg.H, pg.K, x3);
    const double direct =
        wMp(reconstructedStrain(Ee, Ke, c, pg, x3).EsTilde, kMat) * bx3 * bx3;
    CHECK(std::abs(poly - direct) <= 1e-10 * std::max(1.0, std::abs(direct)));
  }
}

TEST_CASE("curvature coefficients sample their polynomial") {
  const SpherePatch sphere(1.0);
  const PointGeometry pg = pointGeometry(sphere, 0.4, -0.3);
  std::mt19937_64 arng(15);
  const Mat3 Ke = randomAdmissibleTensor(pg, arng);
  const auto d = curvatureCoefficients(Ke, pg, kMat);
  const Mat3 up = Ke * pg.b - 2.0 * pg.H * Ke;
  for (const double x3 : {-0.01, 0.004, 0.009}) {
    const double direct = wCurv(Ke + x3 * up, kMat);
    const double poly = d[0] + d[1] * x3 + d[2] * x3 * x3;
    CHECK(std::abs(poly - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));
  }
}

TEST_CASE("reduced coefficients equal the raw ones on admissible states") {
  const auto patches = defaultPatchSet();
  std::mt19937_64 arng(21);
  for (const auto& patch : patches) {
    const Domain& d = patch->domain();
    const PointGeometry pg = pointGeometry(*patch, 0.5 * (d.x1min + d.x1max),
                                           0.5 * (d.x2min + d.x2max));
    const Mat3 Ee = randomAdmissibleTensor(pg, arng, 0.4);
    const Mat3 Ke = randomAdmissibleTensor(pg, arng, 0.4);
    const ThicknessCoeffs c = thicknessCoefficients(Ee, Ke, pg, kMat);
    const auto raw = membraneCoefficients(Ee, Ke, c, pg, kMat);
    const auto reduced = reducedMembraneCoefficients(Ee, Ke, pg, kMat);
    for (int k = 0; k < 5; ++k)
      CHECK(std::abs(raw[k] - reduced[k]) <=
            1e-12 * std::max(1.0, std::abs(raw[k])));
  }
}

TEST_CASE("flat densities reduce to the flat shell forms") {
  const PlanePatch plane;
  const PointGeometry pg = pointGeometry(plane, 0.2, 0.9);
  std::mt19937_64 arng(23);
  const Mat3 Ee = randomAdmissibleTensor(pg, arng);
  const Mat3 Ke = randomAdmissibleTensor(pg, arng);
  const DensitySplit memb = membraneDensity(Ee, Ke, pg, kMat);
  const DensitySplit bend = bendingDensity(Ke, pg, kMat);
  const double h = kMat.h;
  CHECK(memb.h5 == 0.0);
  CHECK(memb.value == doctest::Approx(h * wM(Ee, kMat) +
                                      h * h * h / 12.0 * wM(pg.c * Ke, kMat))
                          .epsilon(1e-14));
  CHECK(bend.h3 == 0.0);
  CHECK(bend.h5 == 0.0);
  CHECK(bend.value == doctest::Approx(h * wCurv(Ke, kMat)).epsilon(1e-14));
}

TEST_CASE("energy breakdown sums exactly") {
  const TorusPatch torus(2.0, 0.5);
  const PointGeometry pg = pointGeometry(torus, 0.7, 0.4);
  std::mt19937_64 arng(25);
  const Mat3 Ee = randomAdmissibleTensor(pg, arng);
  const Mat3 Ke = randomAdmissibleTensor(pg, arng);
  const EnergyBreakdown e = shellEnergyDensity(Ee, Ke, pg, kMat);
  CHECK(e.total ==
        e.membH + e.membH3 + e.membH5 + e.bendH + e.bendH3 + e.bendH5);
}

TEST_CASE("quadratic forms are positive for admissible nonzero input") {
  const SpherePatch sphere(1.0);
  const PointGeometry pg = pointGeometry(sphere, 0.1, 0.4);
  std::mt19937_64 arng(27);
  for (int t = 0; t < 30; ++t) {
    const Mat3 s = randomAdmissibleTensor(pg, arng);
    if (s.norm() < 1e-8) continue;
    CHECK(wMp(s, kMat) > 0.0);
    CHECK(wCurv(s, kMat) > 0.0);
    CHECK(wM(s, kMat) > 0.0);
  }
}

TEST_CASE("total energy of the reference configuration vanishes") {
  const SpherePatch sphere(1.0);
  const IdentityField identity;
  CHECK(std::abs(totalShellEnergy(sphere, identity, kMat, 4, 1, 1)) <= 1e-18);
}

TEST_CASE("flat homogeneous stretch has a closed-form energy") {
  const PlanePatch plane;
  const double alpha = 1.04;
  const StretchField field(alpha);
  const MaterialParams m = MaterialParams::make(1.3, 0.9, 0.4, 0.2, 1, 1, 1, 0.01);
  const double value = totalShellEnergy(plane, field, m, 6, 2, 2);
  const double strain = alpha - 1.0;
  const double expected =
      m.h * strain * strain *
      (2.0 * m.mu + 4.0 * m.lambda * m.mu / (m.lambda + 2.0 * m.mu));
  CHECK(std::abs(value - expected) <= 1e-12 * expected);
}

TEST_CASE("energy integration is bit-identical across execution policies") {
  const TorusPatch torus(2.0, 0.5);
  const ComposedField field(0.2, 0.3);
  const double serial = totalShellEnergy(torus, field, kMat, 6, 2, 2, Exec::Serial);
  const double parallel = totalShellEnergy(torus, field, kMat, 6, 2, 2, Exec::OpenMP);
  CHECK(serial == parallel);
}

TEST_CASE("algebraic and flat-limit suites pass") {
  for (const CheckResult& c : algebraicSuite(200, 31)) {
    INFO(c.name, " residual ", c.residual);
    CHECK(c.pass());
  }
  for (const CheckResult& c : flatLimitSuite(50, 33)) {
    INFO(c.name, " residual ", c.residual);
    CHECK(c.pass());
  }
  for (const CheckResult& c : planeStressSuite(50, 35)) {
    INFO(c.name, " residual ", c.residual);
    CHECK(c.pass());
  }
}
