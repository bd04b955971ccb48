#include "nbody/jacobi.hpp"
#include "nbody/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

// The relative Hamiltonian in mass-weighted Jacobi coordinates
// eta_i = alpha_i xi_i is (hbar omega') sum_i (1/2)(-d^2/deta_i^2 + eta_i^2),
// so every axis carries the same 1D operator and the box [-L, L] is in units
// of the relative length scale.

namespace nbody::oracle {

namespace {

struct Tridiagonal {
  Eigen::VectorXd diag;
  Eigen::VectorXd sub;
};

double spacing(const GridSpec& g) { return 2.0 * g.half_width / (g.points_per_axis - 1); }

double node(const GridSpec& g, int j) { return -g.half_width + j * spacing(g); }

// Dirichlet central differences for (1/2)(-d^2 + eta^2) on all grid points.
Tridiagonal oscillator_matrix(const GridSpec& g) {
  const int p = g.points_per_axis;
  const double h = spacing(g);
  Tridiagonal t;
  t.diag.resize(p);
  t.sub.setConstant(p - 1, -0.5 / (h * h));
  for (int j = 0; j < p; ++j) {
    const double e = node(g, j);
    t.diag(j) = 1.0 / (h * h) + 0.5 * e * e;
  }
  return t;
}

Eigen::VectorXd tridiagonal_eigenvalues(const Tridiagonal& t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(t.diag, t.sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("grid_diagonalize: eigensolver failed");
  return solver.eigenvalues();
}

// Even (symmetric) or odd sector of the mirror-symmetric grid, folded onto
// the non-negative half.
Tridiagonal fold(const Tridiagonal& full, bool even) {
  const int p = static_cast<int>(full.diag.size());
  const double off = full.sub(0);
  Tridiagonal t;
  if (p % 2 == 0) {
    const int half = p / 2;
    t.diag = full.diag.tail(half);
    t.sub = full.sub.tail(half - 1);
    t.diag(0) += even ? off : -off;
  } else {
    const int mid = (p - 1) / 2;
    if (even) {
      t.diag = full.diag.tail(mid + 1);
      t.sub = full.sub.tail(mid);
      t.sub(0) *= std::sqrt(2.0);
    } else {
      t.diag = full.diag.tail(mid);
      t.sub = full.sub.tail(mid - 1);
    }
  }
  return t;
}

std::vector<double> two_body_levels(const GridSpec& g, Statistics stats, int n_levels) {
  const auto ev = tridiagonal_eigenvalues(fold(oscillator_matrix(g), stats == Statistics::Bose));
  if (ev.size() < n_levels) throw std::invalid_argument("grid_diagonalize: grid too small for level count");
  return {ev.data(), ev.data() + n_levels};
}

// -- N = 3 ------------------------------------------------------------------------------

struct PairState {
  int a = 0;
  int b = 0;
  double energy = 0.0;
};

std::vector<PairState> sorted_pairs(const Eigen::VectorXd& e, int max_index) {
  std::vector<PairState> out;
  for (int a = 0; a <= max_index; ++a)
    for (int b = 0; b <= max_index; ++b) out.push_back({a, b, e(a) + e(b)});
  std::sort(out.begin(), out.end(), [](const PairState& x, const PairState& y) { return x.energy < y.energy; });
  return out;
}

// The 2x2 orthogonal action of each particle permutation on (eta_1, eta_2):
// eta(P c) = M_P eta(c).
struct SectorAction {
  Eigen::Matrix2d m;
  double weight = 1.0;
};

std::vector<SectorAction> permutation_actions(const SystemParams& params, Statistics stats) {
  // A maps x to eta; columns from the Jacobi transform of unit vectors.
  Eigen::Matrix<double, 2, 3> a;
  for (int j = 0; j < 3; ++j) {
    Configuration e = Configuration::Zero(3, 1);
    e(j, 0) = 1.0;
    const auto xi = to_jacobi(e);
    for (int i = 0; i < 2; ++i) a(i, j) = mode_alpha(i + 1, params) * xi(i, 0);
  }
  const Eigen::Matrix<double, 3, 2> pinv = a.transpose() * (a * a.transpose()).inverse();
  std::vector<SectorAction> out;
  for (const auto& p : all_permutations(3)) {
    Eigen::Matrix3d pm = Eigen::Matrix3d::Zero();
    for (int i = 0; i < 3; ++i) pm(i, p(i)) = 1.0;
    SectorAction s;
    s.m = a * pm * pinv;
    s.weight = stats == Statistics::Fermi ? p.sign() : 1.0;
    out.push_back(s);
  }
  return out;
}

// Four-point Lagrange interpolation weights at an arbitrary coordinate;
// samples outside the grid count as zero.
struct Stencil {
  int first = 0;
  std::array<double, 4> w{};
};

Stencil stencil_at(const GridSpec& g, double q) {
  const double t = (q + g.half_width) / spacing(g);
  const int i0 = static_cast<int>(std::floor(t));
  const double s = t - i0;
  Stencil st;
  st.first = i0 - 1;
  st.w = {-s * (s - 1.0) * (s - 2.0) / 6.0, (s + 1.0) * (s - 1.0) * (s - 2.0) / 2.0,
          -(s + 1.0) * s * (s - 2.0) / 2.0, (s + 1.0) * s * (s - 1.0) / 6.0};
  return st;
}

double interpolate(const Eigen::VectorXd& v, const Stencil& st) {
  double r = 0.0;
  for (int k = 0; k < 4; ++k) {
    const int idx = st.first + k;
    if (idx >= 0 && idx < v.size()) r += st.w[static_cast<std::size_t>(k)] * v(idx);
  }
  return r;
}

// <s| (1/6) sum_P a(P) U_P |t> within a cluster of product states.
Eigen::MatrixXd cluster_projector(const std::vector<PairState>& cluster, const Eigen::MatrixXd& vecs,
                                  const GridSpec& g, const std::vector<SectorAction>& actions) {
  const int m = static_cast<int>(cluster.size());
  const int p = g.points_per_axis;
  Eigen::MatrixXd proj = Eigen::MatrixXd::Zero(m, m);
  std::vector<Eigen::VectorXd> cols;
  for (const auto& s : cluster) {
    cols.push_back(vecs.col(s.a));
    cols.push_back(vecs.col(s.b));
  }
  Eigen::VectorXd moved(m);
  for (const auto& act : actions) {
    if (act.m.isIdentity(1e-12)) {
      proj += act.weight * Eigen::MatrixXd::Identity(m, m);
      continue;
    }
    for (int i = 0; i < p; ++i) {
      const double e1 = node(g, i);
      for (int j = 0; j < p; ++j) {
        const double e2 = node(g, j);
        const Stencil s1 = stencil_at(g, act.m(0, 0) * e1 + act.m(0, 1) * e2);
        const Stencil s2 = stencil_at(g, act.m(1, 0) * e1 + act.m(1, 1) * e2);
        for (int t = 0; t < m; ++t) {
          moved(t) = interpolate(cols[static_cast<std::size_t>(2 * t)], s1) *
                     interpolate(cols[static_cast<std::size_t>(2 * t + 1)], s2);
        }
        for (int s = 0; s < m; ++s) {
          const double here = vecs(i, cluster[static_cast<std::size_t>(s)].a) *
                              vecs(j, cluster[static_cast<std::size_t>(s)].b);
          if (here != 0.0) proj.row(s) += act.weight * here * moved.transpose();
        }
      }
    }
  }
  proj /= static_cast<double>(actions.size());
  return 0.5 * (proj + proj.transpose());
}

std::vector<double> three_body_levels(const SystemParams& params, const GridSpec& g, Statistics stats,
                                      int n_levels) {
  const auto full = oscillator_matrix(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(full.diag, full.sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw std::runtime_error("grid_diagonalize: eigensolver failed");
  const Eigen::VectorXd& e = solver.eigenvalues();
  const Eigen::MatrixXd& vecs = solver.eigenvectors();

  // Sector states of the 2D oscillator first appear no higher than total
  // quantum number 3 n_levels + 3.
  const int max_index = std::min<int>(3 * n_levels + 4, static_cast<int>(e.size()) - 1);
  const auto pairs = sorted_pairs(e, max_index);
  const auto actions = permutation_actions(params, stats);

  std::vector<double> found;
  std::size_t start = 0;
  while (start < pairs.size() && static_cast<int>(found.size()) < n_levels) {
    std::size_t end = start + 1;
    while (end < pairs.size() && pairs[end].energy - pairs[end - 1].energy < 0.5) ++end;
    const int top = std::max(pairs[end - 1].a, pairs[end - 1].b);
    if (pairs[end - 1].a + pairs[end - 1].b >= max_index || top >= max_index) {
      throw std::runtime_error("grid_diagonalize: level search exceeded the product basis");
    }
    const std::vector<PairState> cluster(pairs.begin() + static_cast<std::ptrdiff_t>(start),
                                         pairs.begin() + static_cast<std::ptrdiff_t>(end));
    const Eigen::MatrixXd proj = cluster_projector(cluster, vecs, g, actions);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ps(proj);
    for (int k = 0; k < ps.eigenvalues().size(); ++k) {
      if (ps.eigenvalues()(k) < 0.5) continue;
      const Eigen::VectorXd coeff = ps.eigenvectors().col(k);
      double energy = 0.0;
      for (std::size_t s = 0; s < cluster.size(); ++s) energy += coeff(static_cast<Eigen::Index>(s)) *
                                                                  coeff(static_cast<Eigen::Index>(s)) *
                                                                  cluster[s].energy;
      found.push_back(energy);
    }
    start = end;
  }
  if (static_cast<int>(found.size()) < n_levels) {
    throw std::runtime_error("grid_diagonalize: not enough sector states found");
  }
  std::sort(found.begin(), found.end());
  found.resize(static_cast<std::size_t>(n_levels));
  return found;
}

// Sorted lowest `count` product-state energies, used for the refinement check.
std::vector<double> lowest_pair_energies(const GridSpec& g, int count, int max_index) {
  const auto e = tridiagonal_eigenvalues(oscillator_matrix(g));
  std::vector<double> out;
  for (const auto& s : sorted_pairs(e, max_index)) out.push_back(s.energy);
  out.resize(static_cast<std::size_t>(count));
  return out;
}

void check_refinement(const std::vector<double>& coarse, const std::vector<double>& fine) {
  for (std::size_t k = 0; k < coarse.size(); ++k) {
    if (std::abs(coarse[k] - fine[k]) > 0.01 * std::abs(fine[k])) {
      throw std::runtime_error("grid_diagonalize: level " + std::to_string(k) +
                               " not converged (moved by more than 1% when the spacing was halved)");
    }
  }
}

}  // namespace

std::vector<double> grid_diagonalize(const SystemParams& params, Statistics stats, const GridSpec& grid,
                                     int n_levels) {
  params.validate();
  if (params.dimension != 1) throw std::invalid_argument("grid_diagonalize: requires dimension 1");
  if (params.n_particles != 2 && params.n_particles != 3) {
    throw std::invalid_argument("grid_diagonalize: supports N = 2 or 3, got " +
                                std::to_string(params.n_particles));
  }
  if (!(grid.half_width > 0.0)) throw std::invalid_argument("grid_diagonalize: half_width must be > 0");
  if (grid.points_per_axis < 64) throw std::invalid_argument("grid_diagonalize: need at least 64 points");
  if (n_levels < 0) throw std::invalid_argument("grid_diagonalize: negative level count");
  if (n_levels == 0) return {};

  GridSpec fine = grid;
  fine.points_per_axis = 2 * grid.points_per_axis - 1;

  std::vector<double> levels;
  if (params.n_particles == 2) {
    levels = two_body_levels(grid, stats, n_levels);
    check_refinement(levels, two_body_levels(fine, stats, n_levels));
  } else {
    levels = three_body_levels(params, grid, stats, n_levels);
    const int count = 3 * n_levels + 4;
    const int max_index = count;
    check_refinement(lowest_pair_energies(grid, count, max_index), lowest_pair_energies(fine, count, max_index));
  }
  const double scale = std::sqrt(static_cast<double>(params.n_particles));  // hbar omega' -> hbar omega
  for (auto& e : levels) e *= scale;
  return levels;
}

}  // namespace nbody::oracle
