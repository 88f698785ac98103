#include "cosserat/solver.hpp"

#include <array>
#include <cmath>
#include <iostream>
#include <random>

#include "cosserat/csv.hpp"

namespace cosserat {

Vec3 GridDiscretization::theta(int k) const { return rotationLog(rot[k]); }

GridDiscretization GridDiscretization::reference(const SurfacePatch& patch,
                                                 int n1, int n2) {
  if (n1 < 3 || n2 < 3)
    throw ConfigError("grid: need at least 3 nodes per direction");
  GridDiscretization g;
  g.n1 = n1;
  g.n2 = n2;
  g.domain = patch.domain();
  g.m.resize(g.size());
  g.rot.assign(g.size(), Mat3::Identity());
  g.clamped.assign(g.size(), 0);
  for (int j = 0; j < n2; ++j)
    for (int i = 0; i < n1; ++i)
      g.m[g.index(i, j)] = patch.position(g.x1At(i), g.x2At(j));
  return g;
}

namespace {

struct DerivTerm {
  int idx;
  double coef;
};

// up to three terms: central inside, second-order one-sided at the edges
using Stencil = std::array<DerivTerm, 3>;

Stencil lineStencil(int i, int n, int stride, int base, double dx) {
  if (i == 0)
    return {DerivTerm{base, -1.5 / dx}, DerivTerm{base + stride, 2.0 / dx},
            DerivTerm{base + 2 * stride, -0.5 / dx}};
  if (i == n - 1)
    return {DerivTerm{base, 1.5 / dx}, DerivTerm{base - stride, -2.0 / dx},
            DerivTerm{base - 2 * stride, 0.5 / dx}};
  return {DerivTerm{base - stride, -0.5 / dx}, DerivTerm{base + stride, 0.5 / dx},
          DerivTerm{0, 0.0}};
}

struct GridWorkspace {
  std::vector<PointGeometry> pg;
  std::vector<double> weight;  // trapezoid weight times cell area
  std::vector<Stencil> s1, s2;
  std::vector<std::vector<int>> affected;  // nodes whose density reads node k
  std::vector<int> freeNodes;

  GridWorkspace(const GridDiscretization& grid, const SurfacePatch& patch) {
    const int n = grid.size();
    pg.reserve(n);
    weight.resize(n);
    s1.resize(n);
    s2.resize(n);
    const double cell = grid.dx1() * grid.dx2();
    for (int j = 0; j < grid.n2; ++j) {
      for (int i = 0; i < grid.n1; ++i) {
        const int k = grid.index(i, j);
        pg.push_back(pointGeometry(patch, grid.x1At(i), grid.x2At(j)));
        const double wi = (i == 0 || i == grid.n1 - 1) ? 0.5 : 1.0;
        const double wj = (j == 0 || j == grid.n2 - 1) ? 0.5 : 1.0;
        weight[k] = cell * wi * wj;
        s1[k] = lineStencil(i, grid.n1, 1, k, grid.dx1());
        s2[k] = lineStencil(j, grid.n2, grid.n1, k, grid.dx2());
      }
    }
    affected.resize(n);
    for (int k = 0; k < n; ++k) affected[k].push_back(k);
    for (int j = 0; j < n; ++j) {
      for (const Stencil* s : {&s1[j], &s2[j]}) {
        for (const DerivTerm& t : *s) {
          if (t.coef == 0.0 || t.idx == j) continue;
          affected[t.idx].push_back(j);
        }
      }
    }
    for (int k = 0; k < n; ++k)
      if (!grid.clamped[k]) freeNodes.push_back(k);
  }
};

struct NodeOverride {
  int idx = -1;
  Vec3 m;
  Mat3 rot;
};

// Grid-state density without the consistency guards of the public
// kinematics path: the rotation differences are projected onto consistent
// derivatives right here, so the guarded checks cannot fire.
double nodeDensity(const GridDiscretization& grid, const GridWorkspace& ws,
                   const MaterialParams& mat, int k,
                   const NodeOverride& ov = {}) {
  const PointGeometry& pg = ws.pg[k];
  const auto getM = [&](int idx) -> const Vec3& {
    return idx == ov.idx ? ov.m : grid.m[idx];
  };
  const auto rotAt = [&](int idx) -> const Mat3& {
    return idx == ov.idx ? ov.rot : grid.rot[idx];
  };

  Vec3 m1 = Vec3::Zero(), m2 = Vec3::Zero();
  Mat3 dR1 = Mat3::Zero(), dR2 = Mat3::Zero();
  for (const DerivTerm& t : ws.s1[k]) {
    if (t.coef == 0.0) continue;
    m1 += t.coef * getM(t.idx);
    dR1 += t.coef * (rotAt(t.idx) * ws.pg[t.idx].Q0);
  }
  for (const DerivTerm& t : ws.s2[k]) {
    if (t.coef == 0.0) continue;
    m2 += t.coef * getM(t.idx);
    dR2 += t.coef * (rotAt(t.idx) * ws.pg[t.idx].Q0);
  }

  const Mat3 rbar = rotAt(k) * pg.Q0;
  dR1 = rbar * skew(rbar.transpose() * dR1);
  dR2 = rbar * skew(rbar.transpose() * dR2);

  const Mat3 qe = rbar * pg.Q0.transpose();
  const Mat3 Ee =
      qe.transpose() * (m1 * pg.acon1.transpose() + m2 * pg.acon2.transpose()) -
      pg.a;
  Mat3 ke;
  {
    const Mat3 a1 = qe.transpose() *
                    (dR1 * pg.Q0.transpose() + rbar * pg.dQ01.transpose());
    const Mat3 a2 = qe.transpose() *
                    (dR2 * pg.Q0.transpose() + rbar * pg.dQ02.transpose());
    const Vec3 k1(0.5 * (a1(2, 1) - a1(1, 2)), 0.5 * (a1(0, 2) - a1(2, 0)),
                  0.5 * (a1(1, 0) - a1(0, 1)));
    const Vec3 k2(0.5 * (a2(2, 1) - a2(1, 2)), 0.5 * (a2(0, 2) - a2(2, 0)),
                  0.5 * (a2(1, 0) - a2(0, 1)));
    ke = k1 * pg.acon1.transpose() + k2 * pg.acon2.transpose();
  }
  return shellEnergyDensity(Ee, ke, pg, mat).total * pg.areaFactor;
}

double assembleWith(const GridDiscretization& grid, const GridWorkspace& ws,
                    const MaterialParams& mat, Exec exec) {
  return mapReduce(
      static_cast<std::size_t>(grid.size()),
      [&](std::size_t k) {
        return ws.weight[k] * nodeDensity(grid, ws, mat, static_cast<int>(k));
      },
      exec);
}

// objective gradient by central differences; each component touches only
// the densities whose stencil contains the perturbed node. The same probes
// yield the diagonal curvature (delta+ + delta-)/eps^2, used to scale the
// descent direction.
void objectiveGradient(const GridDiscretization& grid, const GridWorkspace& ws,
                       const MaterialParams& mat, const SolverConfig& cfg,
                       const std::vector<double>& psi, std::vector<double>& g,
                       std::vector<double>& diag) {
  const std::size_t nf = ws.freeNodes.size();
  g.assign(6 * nf, 0.0);
  diag.assign(6 * nf, 0.0);
  parallelFor(
      6 * nf,
      [&](std::size_t comp) {
        const int k = ws.freeNodes[comp / 6];
        const int c = static_cast<int>(comp % 6);
        const double eps = cfg.fdStep;
        double delta[2];
        for (int sign = 0; sign < 2; ++sign) {
          NodeOverride ov;
          ov.idx = k;
          ov.m = grid.m[k];
          ov.rot = grid.rot[k];
          const double e = (sign == 0) ? eps : -eps;
          if (c < 3)
            ov.m(c) += e;
          else
            ov.rot = rotationExp(e * Vec3::Unit(c - 3)) * grid.rot[k];
          double d = 0.0;
          for (const int j : ws.affected[k])
            d += ws.weight[j] * (nodeDensity(grid, ws, mat, j, ov) - psi[j]);
          delta[sign] = d;
        }
        g[comp] = (delta[0] - delta[1]) / (2.0 * eps);
        diag[comp] = (delta[0] + delta[1]) / (eps * eps);
      },
      cfg.exec);
}

void applyStep(GridDiscretization& grid, const GridWorkspace& ws,
               const std::vector<double>& dir, double step) {
  for (std::size_t f = 0; f < ws.freeNodes.size(); ++f) {
    const int k = ws.freeNodes[f];
    const Vec3 dm(dir[6 * f], dir[6 * f + 1], dir[6 * f + 2]);
    const Vec3 dth(dir[6 * f + 3], dir[6 * f + 4], dir[6 * f + 5]);
    grid.m[k] += step * dm;
    grid.rot[k] = rotationExp(step * dth) * grid.rot[k];
    // keep the accumulated rotation exactly orthogonal
    grid.rot[k] = polar(grid.rot[k]).rotation;
  }
}

}  // namespace

double assembleEnergy(const GridDiscretization& grid, const SurfacePatch& patch,
                      const MaterialParams& mat, Exec exec) {
  const GridWorkspace ws(grid, patch);
  return assembleWith(grid, ws, mat, exec);
}

MinimizeResult minimize(const GridDiscretization& grid,
                        const SurfacePatch& patch, const MaterialParams& mat,
                        const SolverConfig& cfg) {
  if (mat.muC == 0.0)
    std::cerr << "minimize: warning: mu_c = 0, the energy is not coercive "
                 "in the rotations\n";
  MinimizeResult result;
  result.grid = grid;
  const GridWorkspace ws(result.grid, patch);
  if (ws.freeNodes.size() == static_cast<std::size_t>(grid.size()))
    throw ConfigError("minimize: at least one node must be clamped");

  std::vector<double> psi(grid.size());
  std::vector<double> g, diag, dir;
  double step = cfg.initialStep;

  double energy = assembleWith(result.grid, ws, mat, cfg.exec);
  for (int iter = 0; iter <= cfg.maxIterations; ++iter) {
    parallelFor(
        static_cast<std::size_t>(result.grid.size()),
        [&](std::size_t k) {
          psi[k] = nodeDensity(result.grid, ws, mat, static_cast<int>(k));
        },
        cfg.exec);
    objectiveGradient(result.grid, ws, mat, cfg, psi, g, diag);
    double gn2 = 0.0;
    for (const double v : g) gn2 += v * v;
    const double gradNorm = std::sqrt(gn2);
    result.trace.push_back({iter, energy, gradNorm, step});
    if (gradNorm <= cfg.gradientTolerance) {
      result.converged = true;
      break;
    }
    if (iter == cfg.maxIterations) break;

    // steepest descent in the diagonal metric; the floor keeps the
    // direction well defined where the probe curvature degenerates
    double maxDiag = 0.0;
    for (const double d : diag) maxDiag = std::max(maxDiag, d);
    const double floor = std::max(1e-8 * maxDiag, 1e-300);
    dir.resize(g.size());
    double dirDot = 0.0;  // -g . dir
    for (std::size_t i = 0; i < g.size(); ++i) {
      dir[i] = -g[i] / std::max(diag[i], floor);
      dirDot += g[i] * g[i] / std::max(diag[i], floor);
    }

    step = std::min(2.0 * step, cfg.initialStep);
    bool accepted = false;
    while (step >= cfg.minStep) {
      GridDiscretization trial = result.grid;
      applyStep(trial, ws, dir, step);
      const double trialEnergy = assembleWith(trial, ws, mat, cfg.exec);
      if (trialEnergy <= energy - cfg.armijo * step * dirDot) {
        // parabolic fit through (0, E), slope -dirDot and (step, trialEnergy)
        // locates the 1D minimizer; keep whichever point is lower
        const double curv =
            (trialEnergy - energy + step * dirDot) / (step * step);
        double bestStep = step, bestEnergy = trialEnergy;
        if (curv > 0.0) {
          const double vertex = 0.5 * dirDot / curv;
          if (vertex > cfg.minStep && std::abs(vertex - step) > 1e-3 * step) {
            GridDiscretization polished = result.grid;
            applyStep(polished, ws, dir, vertex);
            const double polishedEnergy = assembleWith(polished, ws, mat, cfg.exec);
            if (polishedEnergy < trialEnergy) {
              trial = std::move(polished);
              bestStep = vertex;
              bestEnergy = polishedEnergy;
            }
          }
        }
        result.grid = std::move(trial);
        energy = bestEnergy;
        step = bestStep;
        accepted = true;
        break;
      }
      step *= cfg.backtrackingFactor;
    }
    if (!accepted)
      throw LineSearchFailure("minimize: no decrease found at minimum step");
  }
  return result;
}

void clampEdge(GridDiscretization& grid, const std::string& edge) {
  for (int j = 0; j < grid.n2; ++j) {
    for (int i = 0; i < grid.n1; ++i) {
      const bool on = (edge == "x1min" && i == 0) ||
                      (edge == "x1max" && i == grid.n1 - 1) ||
                      (edge == "x2min" && j == 0) ||
                      (edge == "x2max" && j == grid.n2 - 1) ||
                      edge == "all";
      if (on) grid.clamped[grid.index(i, j)] = 1;
    }
  }
  if (edge != "x1min" && edge != "x1max" && edge != "x2min" &&
      edge != "x2max" && edge != "all")
    throw ConfigError("grid: unknown clamp edge '" + edge + "'");
}

void perturbInterior(GridDiscretization& grid, double amplitude,
                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-amplitude, amplitude);
  for (int k = 0; k < grid.size(); ++k) {
    if (grid.clamped[k]) continue;
    grid.m[k] += Vec3(u(rng), u(rng), u(rng));
  }
}

void displaceEdgeAlongNormal(GridDiscretization& grid,
                             const SurfacePatch& patch,
                             const std::string& edge, double amount) {
  for (int j = 0; j < grid.n2; ++j) {
    for (int i = 0; i < grid.n1; ++i) {
      const bool on = (edge == "x1min" && i == 0) ||
                      (edge == "x1max" && i == grid.n1 - 1) ||
                      (edge == "x2min" && j == 0) ||
                      (edge == "x2max" && j == grid.n2 - 1);
      if (!on) continue;
      const int k = grid.index(i, j);
      grid.m[k] += amount * unitNormal(patch, grid.x1At(i), grid.x2At(j));
    }
  }
}

void writeGridCsv(const GridDiscretization& grid, const std::string& path) {
  CsvWriter csv(path);
  csv.row("node", "i", "j", "x1", "x2", "m1", "m2", "m3", "theta1", "theta2",
          "theta3");
  for (int j = 0; j < grid.n2; ++j) {
    for (int i = 0; i < grid.n1; ++i) {
      const int k = grid.index(i, j);
      const Vec3 th = grid.theta(k);
      csv.row(k, i, j, grid.x1At(i), grid.x2At(j), grid.m[k].x(),
              grid.m[k].y(), grid.m[k].z(), th.x(), th.y(), th.z());
    }
  }
}

void writeGridObj(const GridDiscretization& grid, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("obj: cannot open '" + path + "'");
  for (int k = 0; k < grid.size(); ++k)
    out << "v " << formatDouble(grid.m[k].x()) << " "
        << formatDouble(grid.m[k].y()) << " " << formatDouble(grid.m[k].z())
        << "\n";
  for (int j = 0; j + 1 < grid.n2; ++j)
    for (int i = 0; i + 1 < grid.n1; ++i)
      out << "f " << grid.index(i, j) + 1 << " " << grid.index(i + 1, j) + 1
          << " " << grid.index(i + 1, j + 1) + 1 << " "
          << grid.index(i, j + 1) + 1 << "\n";
}

void writeTraceCsv(const std::vector<EnergyTracePoint>& trace,
                   const std::string& path) {
  CsvWriter csv(path);
  csv.row("iteration", "energy", "grad_norm", "step");
  for (const EnergyTracePoint& t : trace)
    csv.row(t.iteration, t.energy, t.gradNorm, t.step);
}

}  // namespace cosserat
