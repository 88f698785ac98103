#include "cosserat/material.hpp"

namespace cosserat {

MaterialParams MaterialParams::make(double mu, double lambda, double muC,
                                    double Lc, double b1, double b2, double b3,
                                    double h) {
  MaterialParams m;
  m.mu = mu;
  m.lambda = lambda;
  m.muC = muC;
  m.kappa = (3.0 * lambda + 2.0 * mu) / 3.0;
  m.Lc = Lc;
  m.b1 = b1;
  m.b2 = b2;
  m.b3 = b3;
  m.h = h;
  m.validate();
  return m;
}

void MaterialParams::validate() const {
  if (!(mu > 0.0)) throw ConfigError("material: mu must be > 0");
  if (!(kappa > 0.0)) throw ConfigError("material: kappa must be > 0");
  if (!(muC >= 0.0)) throw ConfigError("material: mu_c must be >= 0");
  if (!(Lc > 0.0)) throw ConfigError("material: L_c must be > 0");
  if (!(b1 > 0.0 && b2 > 0.0 && b3 > 0.0))
    throw ConfigError("material: b1, b2, b3 must be > 0");
  if (!(h > 0.0)) throw ConfigError("material: h must be > 0");
  const double kappaRef = (3.0 * lambda + 2.0 * mu) / 3.0;
  if (std::abs(kappa - kappaRef) > 1e-12 * std::max(1.0, std::abs(kappaRef)))
    throw ConfigError("material: kappa inconsistent with (3 lambda + 2 mu)/3");
}

double wMp3(const Mat3& s, const Mat3& t, const MaterialParams& m) {
  return m.mu * inner(sym(s), sym(t)) + m.muC * inner(skew(s), skew(t)) +
         0.5 * m.lambda * tr(s) * tr(t);
}

double wMp(const Mat3& s, const MaterialParams& m) { return wMp3(s, s, m); }

double wMp3Dev(const Mat3& s, const Mat3& t, const MaterialParams& m) {
  return m.mu * inner(dev3(sym(s)), dev3(sym(t))) +
         m.muC * inner(skew(s), skew(t)) + 0.5 * m.kappa * tr(s) * tr(t);
}

double wCurv3(const Mat3& s, const Mat3& t, const MaterialParams& m) {
  return m.mu * m.Lc * m.Lc *
         (m.b1 * inner(dev3(sym(s)), dev3(sym(t))) +
          m.b2 * inner(skew(s), skew(t)) + m.b3 * tr(s) * tr(t));
}

double wCurv(const Mat3& s, const MaterialParams& m) { return wCurv3(s, s, m); }

double wMixt(const Mat3& s, const Mat3& t, const MaterialParams& m) {
  return m.mu * inner(sym(s), sym(t)) + m.muC * inner(skew(s), skew(t)) +
         (m.lambda * m.mu / (m.lambda + 2.0 * m.mu)) * tr(s) * tr(t);
}

double wM(const Mat3& s, const MaterialParams& m) { return wMixt(s, s, m); }

double wMixtDev(const Mat3& s, const Mat3& t, const MaterialParams& m) {
  return m.mu * inner(dev3(sym(s)), dev3(sym(t))) +
         m.muC * inner(skew(s), skew(t)) +
         (2.0 * m.mu * (2.0 * m.lambda + m.mu) /
          (3.0 * (m.lambda + 2.0 * m.mu))) *
             tr(s) * tr(t);
}

Mat3 stressS2(const Mat3& e, const MaterialParams& m) {
  return 2.0 * m.mu * sym(e) + 2.0 * m.muC * skew(e) +
         m.lambda * tr(e) * Mat3::Identity();
}

std::pair<double, double> appendixIdentities(const Mat3& s, const Mat3& t,
                                             double alpha, double beta,
                                             const PointGeometry& pg,
                                             const MaterialParams& m) {
  const double scaleS = std::max(1.0, s.norm());
  const double scaleT = std::max(1.0, t.norm());
  if ((s * pg.n0).norm() > 1e-10 * scaleS ||
      (t * pg.n0).norm() > 1e-10 * scaleT)
    throw StructureViolation("appendixIdentities: nonzero normal column");

  const Mat3 nn = pg.n0 * pg.n0.transpose();
  const double res1 =
      std::abs(wMp3(s + alpha * nn, t + beta * nn, m) - wMp3(s, t, m) -
               0.5 * m.lambda * (alpha * tr(t) + beta * tr(s)) -
               0.5 * (m.lambda + 2.0 * m.mu) * alpha * beta);
  const double shift = -m.lambda / (m.lambda + 2.0 * m.mu) * tr(s);
  const double res2 =
      std::abs(wMp3(s + shift * nn, t + beta * nn, m) - wMixt(s, t, m));
  return {res1, res2};
}

}  // namespace cosserat
