#pragma once

#include <vector>

#include "cosserat/errors.hpp"

namespace cosserat {

/// Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree 2n-1.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gaussLegendre(int n);

/// Same rule mapped to [a, b].
GaussRule gaussLegendre(int n, double a, double b);

struct Domain;  // defined in surface.hpp

/// Tensor-product surface rule: cellsX x cellsY cells, order^2 points per
/// cell, stored in a fixed deterministic order.
struct SurfaceQuadrature {
  std::vector<double> x1, x2, w;
  std::size_t size() const { return w.size(); }
};

SurfaceQuadrature surfaceQuadrature(double x1min, double x1max, double x2min,
                                    double x2max, int order, int cellsX,
                                    int cellsY);

}  // namespace cosserat
