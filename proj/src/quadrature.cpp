#include "cosserat/quadrature.hpp"

#include <cmath>

namespace cosserat {

GaussRule gaussLegendre(int n) {
  if (n < 1) throw ConfigError("gaussLegendre: order must be >= 1");
  GaussRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration on P_n from the Chebyshev initial guess
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;  // ascending order, symmetric by construction
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

GaussRule gaussLegendre(int n, double a, double b) {
  GaussRule rule = gaussLegendre(n);
  const double mid = 0.5 * (a + b);
  const double hal = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = mid + hal * rule.nodes[i];
    rule.weights[i] *= hal;
  }
  return rule;
}

SurfaceQuadrature surfaceQuadrature(double x1min, double x1max, double x2min,
                                    double x2max, int order, int cellsX,
                                    int cellsY) {
  if (order < 2) throw ConfigError("surfaceQuadrature: order must be >= 2");
  if (cellsX < 1 || cellsY < 1)
    throw ConfigError("surfaceQuadrature: cell counts must be >= 1");
  const GaussRule base = gaussLegendre(order);
  const double dx1 = (x1max - x1min) / cellsX;
  const double dx2 = (x2max - x2min) / cellsY;
  SurfaceQuadrature q;
  q.x1.reserve(static_cast<std::size_t>(cellsX) * cellsY * order * order);
  q.x2.reserve(q.x1.capacity());
  q.w.reserve(q.x1.capacity());
  for (int cx = 0; cx < cellsX; ++cx) {
    for (int cy = 0; cy < cellsY; ++cy) {
      const double a1 = x1min + cx * dx1, a2 = x2min + cy * dx2;
      for (int i = 0; i < order; ++i) {
        for (int j = 0; j < order; ++j) {
          q.x1.push_back(a1 + 0.5 * dx1 * (1.0 + base.nodes[i]));
          q.x2.push_back(a2 + 0.5 * dx2 * (1.0 + base.nodes[j]));
          q.w.push_back(0.25 * dx1 * dx2 * base.weights[i] * base.weights[j]);
        }
      }
    }
  }
  return q;
}

}  // namespace cosserat
