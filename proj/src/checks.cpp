#include "cosserat/checks.hpp"

#include <cmath>

namespace cosserat {

namespace {

struct Tracker {
  std::vector<CheckResult>* results;

  void update(const std::string& name, double residual, double tolerance) {
    for (CheckResult& c : *results) {
      if (c.name == name) {
        c.residual = std::max(c.residual, residual);
        return;
      }
    }
    results->push_back({name, residual, tolerance});
  }
};

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Mat3 randomMat3(std::mt19937_64& rng, double scale = 1.0) {
  Mat3 x;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) x(i, j) = uniform(rng, -scale, scale);
  return x;
}

Vec3 randomVec3(std::mt19937_64& rng, double scale = 1.0) {
  return Vec3(uniform(rng, -scale, scale), uniform(rng, -scale, scale),
              uniform(rng, -scale, scale));
}

PointGeometry randomPoint(const SurfacePatch& patch, std::mt19937_64& rng) {
  const Domain& d = patch.domain();
  const double u = uniform(rng, 0.02, 0.98);
  const double v = uniform(rng, 0.02, 0.98);
  return pointGeometry(patch, d.x1min + u * (d.x1max - d.x1min),
                       d.x2min + v * (d.x2max - d.x2min));
}

double rel(double residual, double scale) {
  return residual / std::max(1.0, scale);
}

}  // namespace

std::vector<std::unique_ptr<SurfacePatch>> defaultPatchSet() {
  std::vector<std::unique_ptr<SurfacePatch>> patches;
  patches.push_back(std::make_unique<PlanePatch>());
  patches.push_back(std::make_unique<CylinderPatch>(2.0));
  patches.push_back(std::make_unique<SpherePatch>(1.0));
  patches.push_back(std::make_unique<TorusPatch>(2.0, 0.5));
  patches.push_back(std::make_unique<GraphPatch>(0.1, 1.3, 0.9));
  return patches;
}

Mat3 randomAdmissibleTensor(const PointGeometry& pg, std::mt19937_64& rng,
                            double scale) {
  const Vec3 rows[3] = {pg.d10, pg.d20, pg.d30};
  const Vec3 cols[2] = {pg.acon1, pg.acon2};
  Mat3 s = Mat3::Zero();
  for (const Vec3& di : rows)
    for (const Vec3& ag : cols)
      s += uniform(rng, -scale, scale) * di * ag.transpose();
  return s;
}

std::vector<CheckResult> geometrySuite(int points, std::uint64_t seed) {
  std::vector<CheckResult> results;
  Tracker tk{&results};
  std::mt19937_64 rng(seed);
  const auto patches = defaultPatchSet();
  const double h = 0.02;

  for (int t = 0; t < points; ++t) {
    const SurfacePatch& patch = *patches[t % patches.size()];
    const PointGeometry pg = randomPoint(patch, rng);
    const double x3 = uniform(rng, -0.5 * h, 0.5 * h);
    const ThicknessGeometry tg = thicknessGeometry(pg, x3);

    const double bScale = std::max(1.0, pg.b.norm() * pg.b.norm());
    tk.update("cayley_hamilton",
              (pg.b * pg.b - 2.0 * pg.H * pg.b + pg.K * pg.a).norm() / bScale,
              1e-10);
    tk.update("alternator_square", (pg.c * pg.c + pg.a).norm(), 1e-10);
    tk.update("alternator_skew", (pg.c + pg.c.transpose()).norm(), 1e-10);
    tk.update("alternator_gram", (pg.c.transpose() * pg.c - pg.a).norm(),
              1e-10);
    tk.update("dual_basis",
              std::max({std::abs(pg.acon1.dot(pg.a1) - 1.0),
                        std::abs(pg.acon2.dot(pg.a2) - 1.0),
                        std::abs(pg.acon1.dot(pg.a2)),
                        std::abs(pg.acon2.dot(pg.a1)),
                        std::abs(pg.n0.dot(pg.a1)),
                        std::abs(pg.n0.dot(pg.a2))}),
              1e-10);
    tk.update("normal_director", (pg.d30 - pg.n0).norm(), 1e-10);
    tk.update("rotation_orthogonal",
              (pg.Q0.transpose() * pg.Q0 - Mat3::Identity()).norm() +
                  std::abs(pg.Q0.determinant() - 1.0),
              1e-10);
    tk.update("director_metric",
              (pg.d10 * pg.d10.transpose() + pg.d20 * pg.d20.transpose() -
               pg.a)
                  .norm(),
              1e-10);
    tk.update("director_alternator",
              (pg.d10 * pg.d20.transpose() - pg.d20 * pg.d10.transpose() -
               pg.c)
                  .norm(),
              1e-10);

    tk.update("chart_determinant",
              std::abs(tg.gradTheta.determinant() - tg.detGradTheta) /
                  std::abs(tg.detGradTheta),
              1e-12);
    tk.update("chart_inverse",
              (tg.gradTheta * tg.gradThetaInv - Mat3::Identity()).norm(),
              1e-10);
    tk.update("chart_cofactor",
              (tg.cofGradTheta -
               tg.detGradTheta * tg.gradThetaInv.transpose())
                  .norm() /
                  std::max(1.0, tg.cofGradTheta.norm()),
              1e-10);

    // shifter factorization through the principal curvatures
    const double disc = std::sqrt(std::max(pg.H * pg.H - pg.K, 0.0));
    const double k1 = pg.H + disc, k2 = pg.H - disc;
    tk.update("shifter_factorization",
              std::abs(tg.bX3 - (1.0 - x3 * k1) * (1.0 - x3 * k2)), 1e-10);

    // Gram block structure of the chart gradient:
    // (delta - x3 b)_{a g} (delta - x3 b)^g_b in covariant/mixed components
    const Mat2 covBlock =
        (pg.aCov - x3 * pg.bCov) * (Mat2::Identity() - x3 * pg.bMixed);
    Mat3 gram = Mat3::Zero();
    gram.topLeftCorner<2, 2>() = covBlock;
    gram(2, 2) = 1.0;
    tk.update("chart_gram_block",
              (tg.gradTheta.transpose() * tg.gradTheta - gram).norm(), 1e-10);

    // polar stretch keeps the normal direction untouched
    const PolarFactors pf = polar(tg.gradTheta);
    tk.update("stretch_block",
              std::max({(pf.stretch * Vec3::UnitZ() - Vec3::UnitZ()).norm(),
                        std::abs(pf.stretch(2, 0)), std::abs(pf.stretch(2, 1))}),
              1e-10);
    tk.update("offset_normal_director",
              (pf.rotation * Vec3::UnitZ() - pg.n0).norm(), 1e-10);
  }
  return results;
}

std::vector<CheckResult> algebraicSuite(int samples, std::uint64_t seed,
                                        double tolerance) {
  std::vector<CheckResult> results;
  Tracker tk{&results};
  std::mt19937_64 rng(seed);
  const auto patches = defaultPatchSet();
  const MaterialParams mats[2] = {
      MaterialParams::make(1.0, 1.0, 0.5, 0.2, 1.0, 1.0, 1.0, 0.01),
      MaterialParams::make(2.0, 0.7, 0.0, 0.4, 1.3, 0.6, 2.0, 0.01)};

  for (int t = 0; t < samples; ++t) {
    const MaterialParams& mat = mats[t % 2];
    const Mat3 s = randomMat3(rng);
    const Mat3 tt = randomMat3(rng);

    tk.update("stretch_form_dual",
              rel(std::abs(wMp3(s, tt, mat) - wMp3Dev(s, tt, mat)),
                  std::abs(wMp3(s, tt, mat))),
              tolerance);
    tk.update("mixed_form_dual",
              rel(std::abs(wMixt(s, tt, mat) - wMixtDev(s, tt, mat)),
                  std::abs(wMixt(s, tt, mat))),
              tolerance);
    const double split =
        wMp3(s, tt, mat) - mat.lambda * mat.lambda /
                               (2.0 * (mat.lambda + 2.0 * mat.mu)) * tr(s) *
                               tr(tt);
    tk.update("trace_coupling_split",
              rel(std::abs(wMixt(s, tt, mat) - split), std::abs(split)),
              tolerance);
    tk.update("stress_energy_consistency",
              rel(std::abs(inner(stressS2(s, mat), s) - 2.0 * wMp(s, mat)),
                  std::abs(2.0 * wMp(s, mat))),
              tolerance);

    // structured identities on a random curved point
    const SurfacePatch& patch = *patches[1 + t % (patches.size() - 1)];
    const PointGeometry pg = randomPoint(patch, rng);
    const Mat3 sa = randomAdmissibleTensor(pg, rng);
    const Mat3 ta = randomAdmissibleTensor(pg, rng);
    const double alpha = uniform(rng, -1.0, 1.0);
    const double beta = uniform(rng, -1.0, 1.0);
    const auto [res1, res2] = appendixIdentities(sa, ta, alpha, beta, pg, mat);
    const double scale =
        (mat.mu + std::abs(mat.lambda)) *
        std::max({1.0, sa.norm() * ta.norm(), sa.norm(), ta.norm()});
    tk.update("normal_shift_identity", res1 / scale, tolerance);
    tk.update("normal_elimination_identity", res2 / scale, tolerance);

    const Mat3 Ee = randomAdmissibleTensor(pg, rng, 0.5);
    const Mat3 Ke = randomAdmissibleTensor(pg, rng, 0.5);
    const ThicknessCoeffs coeffs = thicknessCoefficients(Ee, Ke, pg, mat);
    const auto c = membraneCoefficients(Ee, Ke, coeffs, pg, mat);
    const auto cr = reducedMembraneCoefficients(Ee, Ke, pg, mat);
    double worst = 0.0;
    for (int k = 0; k < 5; ++k)
      worst = std::max(worst, rel(std::abs(c[k] - cr[k]), std::abs(c[k])));
    tk.update("membrane_coefficient_reduction", worst, tolerance);

    const double H = pg.H, K = pg.K;
    const Mat3 cKe = pg.c * Ke;
    const Mat3 g = Ee * pg.b + cKe;
    const Mat3 p = cKe * pg.b - 2.0 * H * cKe;
    const double br3 = (4.0 * H * H - K) * c[0] + 2.0 * H * c[1] + c[2];
    const double br3Closed =
        -K * wM(Ee, mat) + wM(g, mat) + 2.0 * wMixt(Ee, p, mat);
    tk.update("membrane_bracket_h3",
              rel(std::abs(br3 - br3Closed), std::abs(br3Closed)), tolerance);
    const double br5 = (K * K - 12.0 * H * H * K + 16.0 * H * H * H * H) * c[0] +
                       (8.0 * H * H * H - 4.0 * H * K) * c[1] +
                       (4.0 * H * H - K) * c[2] + 2.0 * H * c[3] + c[4];
    const double br5Closed = -K * wM(g, mat) + wMp(g * pg.b, mat);
    tk.update("membrane_bracket_h5",
              rel(std::abs(br5 - br5Closed), std::abs(br5Closed)), tolerance);

    const auto d = curvatureCoefficients(Ke, pg, mat);
    const double cb3 = (4.0 * H * H - K) * d[0] + 2.0 * H * d[1] + d[2];
    const double cb3Closed = -K * wCurv(Ke, mat) + wCurv(Ke * pg.b, mat);
    tk.update("curvature_bracket_h3",
              rel(std::abs(cb3 - cb3Closed), std::abs(cb3Closed)), tolerance);
    const double cb5 = (K * K - 12.0 * H * H * K + 16.0 * H * H * H * H) * d[0] +
                       (8.0 * H * H * H - 4.0 * H * K) * d[1] +
                       (4.0 * H * H - K) * d[2];
    const double cb5Closed =
        -K * wCurv(Ke * pg.b, mat) + wCurv(Ke * pg.b * pg.b, mat);
    tk.update("curvature_bracket_h5",
              rel(std::abs(cb5 - cb5Closed), std::abs(cb5Closed)), tolerance);
  }
  return results;
}

std::vector<CheckResult> flatLimitSuite(int samples, std::uint64_t seed) {
  std::vector<CheckResult> results;
  Tracker tk{&results};
  std::mt19937_64 rng(seed);
  const PlanePatch plane;
  const MaterialParams mat =
      MaterialParams::make(1.0, 1.0, 0.5, 0.2, 1.0, 1.0, 1.0, 0.02);
  const PointGeometry pg = pointGeometry(plane, 0.4, 0.6);

  for (int t = 0; t < samples; ++t) {
    const Mat3 Ee = randomAdmissibleTensor(pg, rng);
    const Mat3 Ke = randomAdmissibleTensor(pg, rng);
    const DensitySplit memb = membraneDensity(Ee, Ke, pg, mat);
    const DensitySplit bend = bendingDensity(Ke, pg, mat);
    const double scale = std::max(
        {1e-300, std::abs(memb.value), std::abs(bend.value)});

    tk.update("flat_membrane_h5", std::abs(memb.h5) / scale, 1e-13);
    tk.update("flat_bending_h3", std::abs(bend.h3) / scale, 1e-13);
    tk.update("flat_bending_h5", std::abs(bend.h5) / scale, 1e-13);
    const double flatForm =
        mat.h * wM(Ee, mat) +
        mat.h * mat.h * mat.h / 12.0 * wM(pg.c * Ke, mat);
    tk.update("flat_membrane_form",
              std::abs(memb.value - flatForm) / std::max(1e-300, flatForm),
              1e-13);
  }
  return results;
}

std::vector<CheckResult> planeStressSuite(int samples, std::uint64_t seed) {
  std::vector<CheckResult> results;
  Tracker tk{&results};
  std::mt19937_64 rng(seed);
  const MaterialParams mat =
      MaterialParams::make(1.0, 1.0, 0.5, 0.2, 1.0, 1.0, 1.0, 0.01);

  // both residuals vanish with the exact thickness slope (curved patches;
  // the derivative residual scales with |b|)
  const SpherePatch sphere(1.0);
  const TorusPatch torus(2.0, 0.5);
  for (int t = 0; t < samples; ++t) {
    const SurfacePatch& patch = (t % 2 == 0)
                                    ? static_cast<const SurfacePatch&>(sphere)
                                    : static_cast<const SurfacePatch&>(torus);
    const PointGeometry pg = randomPoint(patch, rng);
    const Mat3 Ee = randomAdmissibleTensor(pg, rng, 0.5);
    const Mat3 Ke = randomAdmissibleTensor(pg, rng, 0.5);
    const ThicknessCoeffs coeffs =
        thicknessCoefficients(Ee, Ke, pg, mat, true);
    const auto [f0, f1] = planeStressResidual(Ee, Ke, coeffs, pg, mat);
    const double stress = mat.mu + std::abs(mat.lambda);
    tk.update("plane_stress_f0",
              std::abs(f0) / (stress * std::max(1e-300, Ee.norm())), 1e-12);
    tk.update("plane_stress_f1",
              std::abs(f1) / (stress * std::max(1e-300, Ee.norm() + Ke.norm()) *
                              std::max(1e-300, pg.b.norm())),
              1e-12);
  }

  // linearized slope: the derivative residual is quadratic in the strain
  // amplitude; on the flat patch the ratio f1/s^2 is constant in s
  const PlanePatch plane;
  const PointGeometry pg = pointGeometry(plane, 0.3, 0.7);
  double worstRatio = 0.0;
  for (int t = 0; t < 8; ++t) {
    Mat3 Ee0 = randomAdmissibleTensor(pg, rng);
    Mat3 Ke0 = randomAdmissibleTensor(pg, rng);
    if (std::abs(tr(Ee0)) < 0.1) Ee0 += 0.5 * pg.a;
    if (std::abs(tr(pg.c * Ke0)) < 0.1)
      Ke0 += 0.5 * (pg.d20 * pg.acon1.transpose() -
                    pg.d10 * pg.acon2.transpose());
    double prev = 0.0;
    for (int k = 0; k < 4; ++k) {
      const double s = 1e-2 / (1 << k);
      const Mat3 Ee = s * Ee0;
      const Mat3 Ke = s * Ke0;
      const ThicknessCoeffs coeffs =
          thicknessCoefficients(Ee, Ke, pg, mat, false);
      const double f1 = planeStressResidual(Ee, Ke, coeffs, pg, mat).second;
      const double ratio = f1 / (s * s);
      if (k > 0)
        worstRatio = std::max(worstRatio, std::abs(ratio / prev - 1.0));
      prev = ratio;
    }
  }
  tk.update("plane_stress_quadratic_residual", worstRatio, 0.05);
  return results;
}

std::vector<CheckResult> kinematicsSuite(std::uint64_t seed) {
  std::vector<CheckResult> results;
  Tracker tk{&results};
  std::mt19937_64 rng(seed);
  const auto patches = defaultPatchSet();
  const MaterialParams mat =
      MaterialParams::make(1.0, 1.0, 0.5, 0.2, 1.0, 1.0, 1.0, 0.01);

  std::vector<std::unique_ptr<StateField>> fields;
  fields.push_back(std::make_unique<IdentityField>());
  fields.push_back(std::make_unique<StretchField>(1.08));
  fields.push_back(std::make_unique<DrillingField>(0.4));
  fields.push_back(std::make_unique<BendingField>(0.4));
  fields.push_back(std::make_unique<ComposedField>(0.2, 0.3));

  for (const auto& patch : patches) {
    for (const auto& field : fields) {
      const PointGeometry pg = randomPoint(*patch, rng);
      const ShellState st = field->evaluate(*patch, pg.x1, pg.x2);
      const Mat3 qe = elasticRotation(st, pg);
      const Mat3 Ee = shellStrain(st, pg);
      const Mat3 Ke = bendingCurvature(st, pg);

      // Grad_s d3 routed through the rotation field equals c Ke - b
      const Vec3 d3_1 = st.Rbar1 * Vec3::UnitZ();
      const Vec3 d3_2 = st.Rbar2 * Vec3::UnitZ();
      tk.update("grad_d3_identity",
                (qe.transpose() * surfaceGradient(pg, d3_1, d3_2) -
                 (pg.c * Ke - pg.b))
                    .norm(),
                1e-9);

      // frame indifference under a constant left rotation
      const Mat3 q = rotationExp(randomVec3(rng));
      const ShellState str = rotateState(st, q);
      tk.update("frame_indifference_strain",
                (shellStrain(str, pg) - Ee).norm(), 1e-12);
      tk.update("frame_indifference_bending",
                (bendingCurvature(str, pg) - Ke).norm(), 1e-12);

      // tangential column structure
      tk.update("strain_normal_column",
                std::max((Ee * pg.n0).norm(), (Ke * pg.n0).norm()), 1e-12);

      // wryness dual formulas at a random thickness coordinate
      const ThicknessGeometry tg =
          thicknessGeometry(pg, uniform(rng, -0.01, 0.01));
      tk.update("wryness_dual", wrynessEquivalence(st, pg, tg), 1e-8);

      // reconstructed strain at the midsurface and its thickness slope
      const ThicknessCoeffs coeffs =
          thicknessCoefficientsWithGradients(*patch, *field, mat, pg.x1, pg.x2);
      const Mat3 nn = pg.n0 * pg.n0.transpose();
      const ReconstructedStrain rs0 =
          reconstructedStrain(Ee, Ke, coeffs, pg, 0.0, true);
      tk.update("reconstruction_midsurface",
                std::max((rs0.EsTilde - Ee - (coeffs.rhoM - 1.0) * nn).norm(),
                         (rs0.GammaS - Ke).norm()),
                1e-12);
      tk.update("reconstruction_full_midsurface",
                (*rs0.EsFull - Ee - (coeffs.rhoM - 1.0) * nn).norm(), 1e-12);

      // five-point thickness derivative of the full strain vs the direct
      // expansion
      const double dz = 5e-4;
      const auto esFullAt = [&](double z) {
        return *reconstructedStrain(Ee, Ke, coeffs, pg, z, true).EsFull;
      };
      const Mat3 dEs = (-esFullAt(2 * dz) + 8.0 * esFullAt(dz) -
                        8.0 * esFullAt(-dz) + esFullAt(-2 * dz)) /
                       (12.0 * dz);
      const Mat3 gradM = pg.n0 * (coeffs.rhoMGrad(0) * pg.acon1 +
                                  coeffs.rhoMGrad(1) * pg.acon2)
                                     .transpose();
      const Mat3 dEsExpected = (Ee + pg.a) * pg.b +
                               coeffs.rhoM * (pg.c * Ke - pg.b) + gradM +
                               coeffs.rhoB * nn;
      tk.update("reconstruction_thickness_slope", (dEs - dEsExpected).norm(),
                1e-10);
    }
  }
  return results;
}

std::vector<SuiteReport> runAllSuites() {
  std::vector<SuiteReport> reports;
  reports.push_back({"geometry", geometrySuite()});
  reports.push_back({"algebraic", algebraicSuite()});
  reports.push_back({"flat_limit", flatLimitSuite()});
  reports.push_back({"plane_stress", planeStressSuite()});
  reports.push_back({"kinematics", kinematicsSuite()});
  return reports;
}

}  // namespace cosserat
