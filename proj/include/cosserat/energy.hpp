#pragma once

#include <array>

#include "cosserat/kinematics.hpp"
#include "cosserat/material.hpp"
#include "cosserat/parallel.hpp"
#include "cosserat/quadrature.hpp"
#include "cosserat/surface.hpp"

namespace cosserat {

/// Coefficients C0..C6 of the degree-6 polynomial
/// wMp(EsTilde) * shifter(x3)^2, assembled from the reconstructed strain
/// brackets. C5 and C6 never enter the reduced energy; they exist for the
/// polynomial sampling checks.
std::array<double, 7> membraneCoefficients(const Mat3& Ee, const Mat3& Ke,
                                           const ThicknessCoeffs& coeffs,
                                           const PointGeometry& pg,
                                           const MaterialParams& mat);

/// Closed forms of C0..C4 in terms of the mixed forms; equal to the raw
/// coefficients whenever Ee and Ke carry the tangential column structure.
std::array<double, 5> reducedMembraneCoefficients(const Mat3& Ee,
                                                  const Mat3& Ke,
                                                  const PointGeometry& pg,
                                                  const MaterialParams& mat);

/// Coefficients D0..D2 of wCurv(Ke + x3 (Ke b - 2H Ke)).
std::array<double, 3> curvatureCoefficients(const Mat3& Ke,
                                            const PointGeometry& pg,
                                            const MaterialParams& mat);

struct DensitySplit {
  double value = 0.0;  // h1 + h3 + h5
  double h1 = 0.0, h3 = 0.0, h5 = 0.0;
};

/// Reduced membrane density:
///   (h - K h^3/12) wM(Ee) + (h^3/12 - K h^5/80) wM(Ee b + c Ke)
///   + (h^3/12) 2 wMixt(Ee, c Ke b - 2H c Ke) + (h^5/80) wMp((Ee b + c Ke) b)
DensitySplit membraneDensity(const Mat3& Ee, const Mat3& Ke,
                             const PointGeometry& pg,
                             const MaterialParams& mat);

/// Reduced bending-curvature density:
///   (h - K h^3/12) wCurv(Ke) + (h^3/12 - K h^5/80) wCurv(Ke b)
///   + (h^5/80) wCurv(Ke b^2)
DensitySplit bendingDensity(const Mat3& Ke, const PointGeometry& pg,
                            const MaterialParams& mat);

struct EnergyBreakdown {
  double membH = 0.0, membH3 = 0.0, membH5 = 0.0;
  double bendH = 0.0, bendH3 = 0.0, bendH5 = 0.0;
  double total = 0.0;  // sum of the six parts, set at construction
};

EnergyBreakdown shellEnergyDensity(const Mat3& Ee, const Mat3& Ke,
                                   const PointGeometry& pg,
                                   const MaterialParams& mat);

/// Reduced shell energy integrated over the parameter domain with a
/// tensor-product Gauss-Legendre rule (deterministic summation order).
double totalShellEnergy(const SurfacePatch& patch, const StateField& field,
                        const MaterialParams& mat, int quadOrder = 8,
                        int cellsX = 2, int cellsY = 2,
                        Exec exec = Exec::OpenMP);

/// Same integral with the per-point breakdown preserved.
EnergyBreakdown integrateEnergyBreakdown(const SurfacePatch& patch,
                                         const StateField& field,
                                         const MaterialParams& mat,
                                         int quadOrder = 8, int cellsX = 2,
                                         int cellsY = 2,
                                         Exec exec = Exec::OpenMP);

}  // namespace cosserat
