#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "cosserat/material.hpp"
#include "cosserat/surface.hpp"
#include "cosserat/tensor.hpp"

namespace cosserat {

/// Midsurface configuration at a point: deformation m with its surface
/// partials and the total microrotation Rbar with its partials.
struct ShellState {
  Vec3 m = Vec3::Zero();
  Vec3 m1 = Vec3::Zero(), m2 = Vec3::Zero();
  Mat3 Rbar = Mat3::Identity();
  Mat3 Rbar1 = Mat3::Zero(), Rbar2 = Mat3::Zero();
};

/// Throws when Rbar is not proper orthogonal (1e-10) or the supplied
/// derivatives are inconsistent: sym(Rbar^T Rbar,_a) must stay below
/// 1e-8 * max(1, |Rbar,_a|).
void validateShellState(const ShellState& state);

/// Replaces Rbar,_a by Rbar skew(Rbar^T Rbar,_a), which restores exact
/// derivative consistency for coarse finite-difference samples.
ShellState projectRotationDerivatives(ShellState state);

/// Elastic microrotation Q_e = Rbar Q0^T.
Mat3 elasticRotation(const ShellState& state, const PointGeometry& pg);

/// Elastic shell strain E^e = Q_e^T Grad_s m - a.
Mat3 shellStrain(const ShellState& state, const PointGeometry& pg);

/// Elastic shell bending-curvature tensor
/// K^e = axl(Q_e^T Q_e,_a) (x) a^a with Q0 differentiated by central
/// differences of the polar factor.
Mat3 bendingCurvature(const ShellState& state, const PointGeometry& pg);

/// Thickness stretch coefficients from the generalized plane-stress
/// conditions, plus the normal-coefficient combinations A1, A2 of the
/// reconstructed strain. Gradient entries are optional and default to zero.
struct ThicknessCoeffs {
  double rhoM = 1.0;  // midsurface thickness stretch
  double rhoB = 0.0;  // asymmetric stretch slope (1/length)
  double A1 = 0.0;    // 2H (1 - rhoM) + rhoB
  double A2 = 0.0;    // K (rhoM - 1) - 2H rhoB
  Vec2 rhoMGrad = Vec2::Zero();
  Vec2 rhoBGrad = Vec2::Zero();
};

/// exactRhoB = true evaluates the full plane-stress solution for rhoB;
/// false uses the linearization valid near the reference state (the
/// reduced energy is derived with the linearized form).
ThicknessCoeffs thicknessCoefficients(const Mat3& Ee, const Mat3& Ke,
                                      const PointGeometry& pg,
                                      const MaterialParams& mat,
                                      bool exactRhoB = false);

struct StrainMeasures {
  Mat3 Ee = Mat3::Zero();
  Mat3 Ke = Mat3::Zero();
  ThicknessCoeffs coeffs;
};

StrainMeasures strainMeasures(const ShellState& state, const PointGeometry& pg,
                              const MaterialParams& mat,
                              bool exactRhoB = false);

/// Reconstructed 3D strain at thickness coordinate x3. EsTilde drops the
/// in-plane gradients of the stretch coefficients (the form the reduced
/// energy integrates); EsFull keeps the complete quadratic ansatz and is
/// only filled on request.
struct ReconstructedStrain {
  Mat3 EsTilde = Mat3::Zero();
  Mat3 GammaS = Mat3::Zero();
  std::optional<Mat3> EsFull;
};

ReconstructedStrain reconstructedStrain(const Mat3& Ee, const Mat3& Ke,
                                        const ThicknessCoeffs& coeffs,
                                        const PointGeometry& pg, double x3,
                                        bool wantFull = false);

/// Normal-normal stress residuals of the plane-stress conditions at the
/// midsurface: f0 from S2 itself and f1 from its thickness derivative.
std::pair<double, double> planeStressResidual(const Mat3& Ee, const Mat3& Ke,
                                              const ThicknessCoeffs& coeffs,
                                              const PointGeometry& pg,
                                              const MaterialParams& mat);

/// Discrepancy between the direct wryness expression
/// axl(Q_e^T Q_e,_k) (x) g^k and the split form routed through Q0, both
/// assembled from the same state. Zero in exact arithmetic for rotation
/// fields independent of the thickness coordinate.
double wrynessEquivalence(const ShellState& state, const PointGeometry& pg,
                          const ThicknessGeometry& tg);

// ---- closed-form test fields -----------------------------------------

/// A midsurface configuration field; evaluate() assembles a ShellState with
/// analytic position partials where available and central differences of
/// the rotation field.
class StateField {
 public:
  virtual ~StateField() = default;
  virtual Vec3 position(const SurfacePatch& p, double x1, double x2) const = 0;
  virtual Vec3 positionPartial(const SurfacePatch& p, double x1, double x2,
                               int alpha) const;
  virtual Mat3 rotation(const SurfacePatch& p, double x1, double x2) const = 0;

  ShellState evaluate(const SurfacePatch& p, double x1, double x2) const;
};

/// m = y0, Rbar = Q0 (reference configuration).
class IdentityField final : public StateField {
 public:
  Vec3 position(const SurfacePatch& p, double x1, double x2) const override;
  Vec3 positionPartial(const SurfacePatch& p, double x1, double x2,
                       int alpha) const override;
  Mat3 rotation(const SurfacePatch& p, double x1, double x2) const override;
};

/// m = alpha y0, Rbar = Q0.
class StretchField final : public StateField {
 public:
  explicit StretchField(double alpha) : alpha_(alpha) {}
  Vec3 position(const SurfacePatch& p, double x1, double x2) const override;
  Vec3 positionPartial(const SurfacePatch& p, double x1, double x2,
                       int alpha) const override;
  Mat3 rotation(const SurfacePatch& p, double x1, double x2) const override;

 private:
  double alpha_;
};

/// Rotation about the surface normal growing linearly in x1.
class DrillingField final : public StateField {
 public:
  explicit DrillingField(double amp) : amp_(amp) {}
  Vec3 position(const SurfacePatch& p, double x1, double x2) const override;
  Vec3 positionPartial(const SurfacePatch& p, double x1, double x2,
                       int alpha) const override;
  Mat3 rotation(const SurfacePatch& p, double x1, double x2) const override;

 private:
  double amp_;
};

/// Rotation about a fixed in-plane axis growing linearly in x1; on a flat
/// patch this tilts the normal (pure bending).
class BendingField final : public StateField {
 public:
  explicit BendingField(double amp) : amp_(amp) {}
  Vec3 position(const SurfacePatch& p, double x1, double x2) const override;
  Vec3 positionPartial(const SurfacePatch& p, double x1, double x2,
                       int alpha) const override;
  Mat3 rotation(const SurfacePatch& p, double x1, double x2) const override;

 private:
  double amp_;
};

/// Smooth generic field: uniform stretch plus a trigonometric displacement
/// and a spatially varying rotation composed with Q0. Produces nontrivial
/// E^e (with trace) and K^e on every patch.
class ComposedField final : public StateField {
 public:
  ComposedField(double ampU, double ampW) : ampU_(ampU), ampW_(ampW) {}
  Vec3 position(const SurfacePatch& p, double x1, double x2) const override;
  Vec3 positionPartial(const SurfacePatch& p, double x1, double x2,
                       int alpha) const override;
  Mat3 rotation(const SurfacePatch& p, double x1, double x2) const override;

 private:
  double ampU_, ampW_;
};

/// Superposed rigid rotation: (m, Rbar) -> (Q m, Q Rbar) with the partials
/// rotated accordingly. Used by the frame indifference checks.
ShellState rotateState(const ShellState& state, const Mat3& q);

std::unique_ptr<StateField> makeStateField(
    const std::string& name, const std::map<std::string, double>& params);

/// Thickness coefficients including surface gradients of rhoM and rhoB,
/// obtained by central differences of the full pipeline over the surface
/// coordinates. Needed only for the full-ansatz strain.
ThicknessCoeffs thicknessCoefficientsWithGradients(
    const SurfacePatch& patch, const StateField& field,
    const MaterialParams& mat, double x1, double x2, bool exactRhoB = false);

}  // namespace cosserat
