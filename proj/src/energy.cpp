#include "cosserat/energy.hpp"

namespace cosserat {

std::array<double, 7> membraneCoefficients(const Mat3& Ee, const Mat3& Ke,
                                           const ThicknessCoeffs& coeffs,
                                           const PointGeometry& pg,
                                           const MaterialParams& mat) {
  const Mat3 nn = pg.n0 * pg.n0.transpose();
  const Mat3 cKe = pg.c * Ke;
  const Mat3 m0 = Ee + (coeffs.rhoM - 1.0) * nn;
  const Mat3 m1 = (Ee * pg.b + cKe) - 2.0 * pg.H * Ee + coeffs.A1 * nn;
  const Mat3 m2 = cKe * pg.b - 2.0 * pg.H * cKe + coeffs.A2 * nn;
  const Mat3 m3 = pg.K * coeffs.rhoB * nn;

  return {wMp(m0, mat),
          2.0 * wMp3(m0, m1, mat),
          wMp(m1, mat) + 2.0 * wMp3(m0, m2, mat),
          2.0 * wMp3(m0, m3, mat) + 2.0 * wMp3(m1, m2, mat),
          wMp(m2, mat) + 2.0 * wMp3(m1, m3, mat),
          2.0 * wMp3(m2, m3, mat),
          wMp(m3, mat)};
}

std::array<double, 5> reducedMembraneCoefficients(const Mat3& Ee,
                                                  const Mat3& Ke,
                                                  const PointGeometry& pg,
                                                  const MaterialParams& mat) {
  const Mat3 cKe = pg.c * Ke;
  const Mat3 g = Ee * pg.b + cKe;
  const Mat3 gm = g - 2.0 * pg.H * Ee;
  const Mat3 p = cKe * pg.b - 2.0 * pg.H * cKe;
  const double trGB = tr(g * pg.b);
  return {wM(Ee, mat),
          2.0 * wMixt(Ee, gm, mat),
          wM(gm, mat) + 2.0 * wMixt(Ee, p, mat),
          2.0 * wMixt(gm, p, mat),
          wM(p, mat) + mat.lambda * mat.lambda /
                           (2.0 * (mat.lambda + 2.0 * mat.mu)) * trGB * trGB};
}

std::array<double, 3> curvatureCoefficients(const Mat3& Ke,
                                            const PointGeometry& pg,
                                            const MaterialParams& mat) {
  const Mat3 l = Ke * pg.b - 2.0 * pg.H * Ke;
  return {wCurv(Ke, mat), 2.0 * wCurv3(Ke, l, mat), wCurv(l, mat)};
}

DensitySplit membraneDensity(const Mat3& Ee, const Mat3& Ke,
                             const PointGeometry& pg,
                             const MaterialParams& mat) {
  const double h = mat.h;
  const double h3 = h * h * h / 12.0;
  const double h5 = h * h * h * h * h / 80.0;
  const Mat3 cKe = pg.c * Ke;
  const Mat3 g = Ee * pg.b + cKe;
  const Mat3 p = cKe * pg.b - 2.0 * pg.H * cKe;

  DensitySplit out;
  out.h1 = h * wM(Ee, mat);
  out.h3 = h3 * (-pg.K * wM(Ee, mat) + wM(g, mat) + 2.0 * wMixt(Ee, p, mat));
  out.h5 = h5 * (-pg.K * wM(g, mat) + wMp(g * pg.b, mat));
  out.value = out.h1 + out.h3 + out.h5;
  return out;
}

DensitySplit bendingDensity(const Mat3& Ke, const PointGeometry& pg,
                            const MaterialParams& mat) {
  const double h = mat.h;
  const double h3 = h * h * h / 12.0;
  const double h5 = h * h * h * h * h / 80.0;
  const Mat3 kb = Ke * pg.b;

  DensitySplit out;
  out.h1 = h * wCurv(Ke, mat);
  out.h3 = h3 * (-pg.K * wCurv(Ke, mat) + wCurv(kb, mat));
  out.h5 = h5 * (-pg.K * wCurv(kb, mat) + wCurv(kb * pg.b, mat));
  out.value = out.h1 + out.h3 + out.h5;
  return out;
}

EnergyBreakdown shellEnergyDensity(const Mat3& Ee, const Mat3& Ke,
                                   const PointGeometry& pg,
                                   const MaterialParams& mat) {
  const DensitySplit memb = membraneDensity(Ee, Ke, pg, mat);
  const DensitySplit bend = bendingDensity(Ke, pg, mat);
  EnergyBreakdown out;
  out.membH = memb.h1;
  out.membH3 = memb.h3;
  out.membH5 = memb.h5;
  out.bendH = bend.h1;
  out.bendH3 = bend.h3;
  out.bendH5 = bend.h5;
  out.total = out.membH + out.membH3 + out.membH5 + out.bendH + out.bendH3 +
              out.bendH5;
  return out;
}

namespace {

EnergyBreakdown scaled(const EnergyBreakdown& e, double s) {
  EnergyBreakdown out;
  out.membH = s * e.membH;
  out.membH3 = s * e.membH3;
  out.membH5 = s * e.membH5;
  out.bendH = s * e.bendH;
  out.bendH3 = s * e.bendH3;
  out.bendH5 = s * e.bendH5;
  out.total = out.membH + out.membH3 + out.membH5 + out.bendH + out.bendH3 +
              out.bendH5;
  return out;
}

}  // namespace

EnergyBreakdown integrateEnergyBreakdown(const SurfacePatch& patch,
                                         const StateField& field,
                                         const MaterialParams& mat,
                                         int quadOrder, int cellsX, int cellsY,
                                         Exec exec) {
  const Domain& dom = patch.domain();
  const SurfaceQuadrature quad = surfaceQuadrature(
      dom.x1min, dom.x1max, dom.x2min, dom.x2max, quadOrder, cellsX, cellsY);
  std::vector<EnergyBreakdown> values(quad.size());
  parallelFor(
      quad.size(),
      [&](std::size_t i) {
        const PointGeometry pg = pointGeometry(patch, quad.x1[i], quad.x2[i]);
        const ShellState st = field.evaluate(patch, quad.x1[i], quad.x2[i]);
        const Mat3 Ee = shellStrain(st, pg);
        const Mat3 Ke = bendingCurvature(st, pg);
        values[i] = scaled(shellEnergyDensity(Ee, Ke, pg, mat),
                           quad.w[i] * pg.areaFactor);
      },
      exec);
  EnergyBreakdown acc;
  for (const EnergyBreakdown& v : values) {
    acc.membH += v.membH;
    acc.membH3 += v.membH3;
    acc.membH5 += v.membH5;
    acc.bendH += v.bendH;
    acc.bendH3 += v.bendH3;
    acc.bendH5 += v.bendH5;
  }
  acc.total = acc.membH + acc.membH3 + acc.membH5 + acc.bendH + acc.bendH3 +
              acc.bendH5;
  return acc;
}

double totalShellEnergy(const SurfacePatch& patch, const StateField& field,
                        const MaterialParams& mat, int quadOrder, int cellsX,
                        int cellsY, Exec exec) {
  return integrateEnergyBreakdown(patch, field, mat, quadOrder, cellsX, cellsY,
                                  exec)
      .total;
}

}  // namespace cosserat
