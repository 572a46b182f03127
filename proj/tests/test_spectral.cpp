#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "oracles.hpp"
#include "spectradom/harness.hpp"
#include "spectradom/spectral.hpp"
#include "spectradom/structure.hpp"

using namespace spectradom;
using doctest::Approx;

namespace {

std::vector<double> eigen_reference(const SymMatrix& m) {
  Eigen::MatrixXd a(m.order(), m.order());
  for (int i = 0; i < m.order(); ++i) {
    for (int j = 0; j < m.order(); ++j) a(i, j) = m(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd v = solver.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

double sum(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s;
}

}  // namespace

TEST_CASE("matrices of small graphs") {
  const SymMatrix l = laplacian(path(2));
  CHECK(l(0, 0) == 1);
  CHECK(l(0, 1) == -1);
  CHECK(l(1, 0) == -1);
  const SymMatrix q2 = signless_laplacian(path(2));
  CHECK(q2(0, 1) == 1);
  CHECK(q2(1, 1) == 1);

  const SymMatrix z = laplacian(empty_graph(3));
  const SymMatrix zq = signless_laplacian(empty_graph(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(z(i, j) == 0);
      CHECK(zq(i, j) == 0);
    }
  }
  const SymMatrix k3 = laplacian(complete(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(k3(i, j) == (i == j ? 2 : -1));
  }
}

TEST_CASE("eigen_max examples") {
  CHECK(std::abs(eigen_max(laplacian(complete(5))) - 5.0) < 1e-9);
  CHECK(std::abs(eigen_max(signless_laplacian(complete(4))) - 6.0) < 1e-9);
  CHECK(eigen_max(SymMatrix(4)) == 0.0);
  CHECK_THROWS_AS(eigen_max(SymMatrix(0)), std::invalid_argument);
}

TEST_CASE("from_rows rejects non-symmetric and ragged input") {
  CHECK_THROWS_AS(SymMatrix::from_rows({{1, 2}, {3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SymMatrix::from_rows({{1, 2}, {2}}), std::invalid_argument);
  const SymMatrix m = SymMatrix::from_rows({{2, 1}, {1, 2}});
  const auto ev = eigenvalues(m);
  CHECK(ev[0] == Approx(1.0).epsilon(1e-12));
  CHECK(ev[1] == Approx(3.0).epsilon(1e-12));
}

TEST_CASE("spectral radii of named graphs") {
  CHECK(mu(star(3)) == Approx(4.0).epsilon(1e-12));
  CHECK(mu(complete_bipartite(2, 2)) == Approx(4.0).epsilon(1e-12));
  CHECK(q(cocktail_party(3)) == Approx(8.0).epsilon(1e-12));
  CHECK(mu(path(4)) == Approx(2 + std::sqrt(2.0)).epsilon(1e-12));
  CHECK(mu(path(7)) == Approx(2 + 2 * std::cos(std::numbers::pi / 7)).epsilon(1e-12));
  CHECK(mu(cycle(9)) == Approx(2 + 2 * std::cos(std::numbers::pi / 9)).epsilon(1e-12));
  CHECK(mu(cycle(6)) == Approx(4.0).epsilon(1e-12));
  CHECK(mu(cycle(5)) == Approx(2 + 2 * std::cos(std::numbers::pi / 5)).epsilon(1e-12));
  CHECK(q(cycle(5)) == Approx(4.0).epsilon(1e-12));
  CHECK(mu(empty_graph(3)) == 0.0);
  CHECK(q(empty_graph(3)) == 0.0);
}

TEST_CASE("complete graph Laplacian matches its characteristic polynomial") {
  // det(L - x I) vanishes at 0 and n and nowhere else among the integers.
  for (int n = 2; n <= 6; ++n) {
    const auto l = oracle::dense_matrix(complete(n), -1.0);
    auto shifted = [&](double x) {
      auto m = l;
      for (int i = 0; i < n; ++i) m[i][i] -= x;
      return oracle::determinant(m);
    };
    CHECK(std::abs(shifted(0)) < 1e-9);
    CHECK(std::abs(shifted(n)) < 1e-9);
    CHECK(std::abs(shifted(n + 1)) > 0.5);
    CHECK(mu(complete(n)) == Approx(n).epsilon(1e-12));
  }
}

TEST_CASE("property: Jacobi agrees with Eigen on random symmetric matrices") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> entry(-10, 10);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) m.set(i, j, entry(rng));
    }
    const auto mine = eigenvalues(m);
    const auto ref = eigen_reference(m);
    REQUIRE(mine.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(std::abs(mine[i] - ref[i]) < 1e-9);
  }
}

TEST_CASE("property: Jacobi agrees with Eigen on graph matrices up to order 64") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 63);
    const Graph g = oracle::random_graph(rng, n, 0.1 + 0.2 * (trial % 4));
    const auto ref_l = eigen_reference(laplacian(g));
    const auto ref_q = eigen_reference(signless_laplacian(g));
    CHECK(std::abs(mu(g) - ref_l.back()) < 1e-9);
    CHECK(std::abs(q(g) - ref_q.back()) < 1e-9);
  }
}

TEST_CASE("spectral invariants on every graph with n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_nonisomorphic(n)) {
      const SpectralSummary s = summary(g);
      const double twice_edges = 2.0 * g.edge_count();
      CHECK(std::abs(sum(s.laplacian_spectrum) - twice_edges) < 1e-8);
      CHECK(std::abs(sum(s.signless_spectrum) - twice_edges) < 1e-8);
      CHECK(std::abs(s.laplacian_spectrum.front()) < 1e-9);
      CHECK(s.mu >= 0);
      CHECK(s.q >= 0);
      CHECK(s.mu <= s.q + 1e-9);
      CHECK(s.mu <= n + 1e-9);
      CHECK(s.max_degree == g.max_degree());
      CHECK(s.avg_degree == Approx(twice_edges / n));
      CHECK(2 * s.avg_degree - 1e-9 <= s.q);
      CHECK(s.q <= 2 * s.max_degree + 1e-9);
      if (bipartition_of(g)) CHECK(std::abs(s.mu - s.q) < 1e-8);
      if (g.edge_count() > 0 && is_connected(g)) CHECK(s.mu <= neighborhood_union_bound(g) + 1e-9);
    }
  }
}

TEST_CASE("property: adding an edge never lowers mu") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = oracle::random_graph(rng, n, 0.4);
    const int u = static_cast<int>(rng() % n);
    int v = static_cast<int>(rng() % (n - 1));
    if (v >= u) ++v;
    if (g.adjacent(u, v)) continue;
    CHECK(mu(g.with_edge(u, v)) >= mu(g) - 1e-9);
  }
}

TEST_CASE("neighbourhood union bound") {
  CHECK(neighborhood_union_bound(complete(4)) == 4);
  CHECK(neighborhood_union_bound(path(3)) == 3);
  CHECK(neighborhood_union_bound(complete_bipartite(2, 2)) == 4);
  CHECK_THROWS_AS(neighborhood_union_bound(empty_graph(3)), std::invalid_argument);
}
