#include "spectradom/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace spectradom {

SymMatrix::SymMatrix(int order) : order_(order) {
  if (order < 0 || order > kMaxVertices) throw std::invalid_argument("matrix order outside 0..64");
  entries_.assign(static_cast<std::size_t>(order) * order, 0.0);
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  SymMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.order_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.order_) throw std::invalid_argument("matrix is not square");
  }
  for (int i = 0; i < m.order_; ++i) {
    for (int j = 0; j < m.order_; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      }
      m.entries_[i * m.order_ + j] = rows[i][j];
    }
  }
  return m;
}

void SymMatrix::set(int i, int j, double value) {
  if (i < 0 || j < 0 || i >= order_ || j >= order_) throw std::out_of_range("matrix index out of range");
  entries_[i * order_ + j] = value;
  entries_[j * order_ + i] = value;
}

std::vector<double> eigenvalues(const SymMatrix& m) {
  const int n = m.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  }
  auto at = [&](int i, int j) -> double& { return a[i * n + j]; };

  auto off_max = [&] {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) worst = std::max(worst, std::abs(at(i, j)));
    }
    return worst;
  };

  int sweep = 0;
  while (off_max() >= kJacobiOffDiagonalTolerance) {
    if (sweep++ == kJacobiMaxSweeps) {
      throw ConvergenceError("Jacobi iteration did not converge in " +
                             std::to_string(kJacobiMaxSweeps) + " sweeps");
    }
    for (int p = 0; p < n; ++p) {
      for (int r = p + 1; r < n; ++r) {
        const double apr = at(p, r);
        if (apr == 0.0) continue;
        // rotation angle zeroing a(p, r)
        const double theta = (at(r, r) - at(p, p)) / (2.0 * apr);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        at(p, p) -= t * apr;
        at(r, r) += t * apr;
        at(p, r) = at(r, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == r) continue;
          const double akp = at(k, p);
          const double akr = at(k, r);
          at(k, p) = at(p, k) = c * akp - s * akr;
          at(k, r) = at(r, k) = s * akp + c * akr;
        }
      }
    }
  }

  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = at(i, i);
  std::sort(diag.begin(), diag.end());
  return diag;
}

double eigen_max(const SymMatrix& m) {
  if (m.order() == 0) throw std::invalid_argument("empty matrix has no eigenvalues");
  return eigenvalues(m).back();
}

namespace {

SymMatrix degree_plus(const Graph& g, double sign) {
  SymMatrix m(g.order());
  for (int v : g.vertices()) {
    m.set(v, v, g.degree(v));
    for (int u : g.neighbors(v)) m.set(v, u, sign);
  }
  return m;
}

}  // namespace

SymMatrix laplacian(const Graph& g) { return degree_plus(g, -1.0); }
SymMatrix signless_laplacian(const Graph& g) { return degree_plus(g, 1.0); }

double mu(const Graph& g) { return g.edge_count() == 0 ? 0.0 : eigen_max(laplacian(g)); }
double q(const Graph& g) { return g.edge_count() == 0 ? 0.0 : eigen_max(signless_laplacian(g)); }

SpectralSummary summary(const Graph& g) {
  SpectralSummary s;
  s.max_degree = g.max_degree();
  s.avg_degree = 2.0 * g.edge_count() / g.order();
  if (g.edge_count() == 0) {
    s.laplacian_spectrum.assign(g.order(), 0.0);
    s.signless_spectrum.assign(g.order(), 0.0);
  } else {
    s.laplacian_spectrum = eigenvalues(laplacian(g));
    s.signless_spectrum = eigenvalues(signless_laplacian(g));
  }
  s.mu = s.laplacian_spectrum.back();
  s.q = s.signless_spectrum.back();
  return s;
}

int neighborhood_union_bound(const Graph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("neighborhood union bound needs at least one edge");
  int best = 0;
  for (auto [u, v] : g.edges()) best = std::max(best, neighborhood_union(g, u, v).size());
  return best;
}

}  // namespace spectradom
