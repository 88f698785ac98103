#include "cosserat/oracle.hpp"

#include <cstdio>
#include <fstream>

#include "cosserat/csv.hpp"

namespace cosserat {

namespace {

struct PointValues {
  double analyticMembrane = 0.0;
  double oracleMembrane = 0.0;
  double analyticCurvature = 0.0;
  double oracleCurvature = 0.0;
};

PointValues evaluatePoint(const SurfacePatch& patch, const StateField& field,
                          const MaterialParams& mat, double x1, double x2,
                          const GaussRule& thickRule) {
  const PointGeometry pg = pointGeometry(patch, x1, x2);
  const ShellState st = field.evaluate(patch, x1, x2);
  const Mat3 Ee = shellStrain(st, pg);
  const Mat3 Ke = bendingCurvature(st, pg);
  const ThicknessCoeffs coeffs = thicknessCoefficients(Ee, Ke, pg, mat);

  PointValues pv;
  pv.analyticMembrane = membraneDensity(Ee, Ke, pg, mat).value;
  pv.analyticCurvature = bendingDensity(Ke, pg, mat).value;
  for (std::size_t q = 0; q < thickRule.nodes.size(); ++q) {
    const double x3 = thickRule.nodes[q];
    const ReconstructedStrain rs = reconstructedStrain(Ee, Ke, coeffs, pg, x3);
    const double bx3 = shifter(pg.H, pg.K, x3);
    pv.oracleMembrane += thickRule.weights[q] * wMp(rs.EsTilde, mat) * bx3;
    pv.oracleCurvature += thickRule.weights[q] * wCurv(rs.GammaS, mat) * bx3;
  }
  return pv;
}

}  // namespace

OracleScan oracleScan(const SurfacePatch& patch, const StateField& field,
                      const MaterialParams& mat, const OracleQuadrature& quad,
                      Exec exec) {
  const Domain& dom = patch.domain();
  const SurfaceQuadrature surf =
      surfaceQuadrature(dom.x1min, dom.x1max, dom.x2min, dom.x2max,
                        quad.surfaceOrder, quad.cellsX, quad.cellsY);
  const GaussRule thick =
      gaussLegendre(quad.thicknessOrder, -0.5 * mat.h, 0.5 * mat.h);

  std::vector<PointValues> values(surf.size());
  parallelFor(
      surf.size(),
      [&](std::size_t i) {
        values[i] =
            evaluatePoint(patch, field, mat, surf.x1[i], surf.x2[i], thick);
      },
      exec);

  OracleScan out;
  for (std::size_t i = 0; i < surf.size(); ++i) {
    const double area =
        surf.w[i] * pointGeometry(patch, surf.x1[i], surf.x2[i]).areaFactor;
    out.analyticMembrane += area * values[i].analyticMembrane;
    out.oracleMembrane += area * values[i].oracleMembrane;
    out.analyticCurvature += area * values[i].analyticCurvature;
    out.oracleCurvature += area * values[i].oracleCurvature;
  }
  return out;
}

double integrateMembrane3D(const SurfacePatch& patch, const StateField& field,
                           const MaterialParams& mat,
                           const OracleQuadrature& quad, Exec exec) {
  return oracleScan(patch, field, mat, quad, exec).oracleMembrane;
}

double integrateCurvature3D(const SurfacePatch& patch, const StateField& field,
                            const MaterialParams& mat,
                            const OracleQuadrature& quad, Exec exec) {
  return oracleScan(patch, field, mat, quad, exec).oracleCurvature;
}

double integrateMembrane3DFull(const SurfacePatch& patch,
                               const StateField& field,
                               const MaterialParams& mat,
                               const OracleQuadrature& quad, Exec exec) {
  const Domain& dom = patch.domain();
  const SurfaceQuadrature surf =
      surfaceQuadrature(dom.x1min, dom.x1max, dom.x2min, dom.x2max,
                        quad.surfaceOrder, quad.cellsX, quad.cellsY);
  const GaussRule thick =
      gaussLegendre(quad.thicknessOrder, -0.5 * mat.h, 0.5 * mat.h);

  return mapReduce(
      surf.size(),
      [&](std::size_t i) {
        const double x1 = surf.x1[i], x2 = surf.x2[i];
        const PointGeometry pg = pointGeometry(patch, x1, x2);
        const ShellState st = field.evaluate(patch, x1, x2);
        const Mat3 Ee = shellStrain(st, pg);
        const Mat3 Ke = bendingCurvature(st, pg);
        const ThicknessCoeffs coeffs =
            thicknessCoefficientsWithGradients(patch, field, mat, x1, x2);
        double acc = 0.0;
        for (std::size_t q = 0; q < thick.nodes.size(); ++q) {
          const double x3 = thick.nodes[q];
          const ReconstructedStrain rs =
              reconstructedStrain(Ee, Ke, coeffs, pg, x3, true);
          acc += thick.weights[q] * wMp(*rs.EsFull, mat) *
                 shifter(pg.H, pg.K, x3);
        }
        return surf.w[i] * pg.areaFactor * acc;
      },
      exec);
}

std::vector<OracleReport> convergenceStudy(const SurfacePatch& patch,
                                           const StateField& field,
                                           MaterialParams mat, EnergyPart part,
                                           const std::vector<double>& hList,
                                           const OracleQuadrature& quad,
                                           Exec exec) {
  if (hList.empty()) throw ConfigError("convergenceStudy: empty h list");
  for (std::size_t i = 1; i < hList.size(); ++i)
    if (!(hList[i] < hList[i - 1]))
      throw ConfigError("convergenceStudy: h list must be strictly decreasing");

  std::vector<OracleReport> reports;
  reports.reserve(hList.size());
  for (const double h : hList) {
    mat.h = h;
    const OracleScan scan = oracleScan(patch, field, mat, quad, exec);
    OracleReport r;
    r.h = h;
    r.analyticValue =
        part == EnergyPart::Membrane ? scan.analyticMembrane : scan.analyticCurvature;
    r.oracleValue =
        part == EnergyPart::Membrane ? scan.oracleMembrane : scan.oracleCurvature;
    r.absError = std::abs(r.analyticValue - r.oracleValue);
    r.errorOverH7 = r.absError / std::pow(h, 7);
    reports.push_back(r);
  }
  return reports;
}

void writeConvergenceCsv(const std::vector<OracleReport>& reports,
                         const std::string& path) {
  CsvWriter csv(path);
  csv.row("h", "analytic", "oracle", "abs_error", "error_over_h7");
  for (const OracleReport& r : reports)
    csv.row(r.h, r.analyticValue, r.oracleValue, r.absError, r.errorOverH7);
}

}  // namespace cosserat
