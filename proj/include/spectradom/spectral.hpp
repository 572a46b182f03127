#ifndef SPECTRADOM_SPECTRAL_HPP
#define SPECTRADOM_SPECTRAL_HPP

#include <stdexcept>
#include <vector>

#include "spectradom/graph.hpp"

namespace spectradom {

/// Dense symmetric matrix of order <= 64, row-major storage.
class SymMatrix {
 public:
  explicit SymMatrix(int order);

  /// Throws std::invalid_argument unless rows form a square symmetric matrix.
  static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int order() const { return order_; }
  double operator()(int i, int j) const { return entries_[i * order_ + j]; }
  /// Sets both (i, j) and (j, i).
  void set(int i, int j, double value);

 private:
  int order_;
  std::vector<double> entries_;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kJacobiOffDiagonalTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

/// All eigenvalues in ascending order, by cyclic Jacobi rotations. Iterates
/// until every off-diagonal entry is below 1e-12 in magnitude; throws
/// ConvergenceError after 100 sweeps.
std::vector<double> eigenvalues(const SymMatrix& m);

/// Largest eigenvalue.
double eigen_max(const SymMatrix& m);

SymMatrix laplacian(const Graph& g);
SymMatrix signless_laplacian(const Graph& g);

/// Laplacian spectral radius; 0 for edgeless graphs.
double mu(const Graph& g);
/// Signless Laplacian spectral radius; 0 for edgeless graphs.
double q(const Graph& g);

struct SpectralSummary {
  double mu = 0.0;
  double q = 0.0;
  int max_degree = 0;
  double avg_degree = 0.0;
  std::vector<double> laplacian_spectrum;  // ascending
  std::vector<double> signless_spectrum;   // ascending
};

SpectralSummary summary(const Graph& g);

/// max over edges uv of |N(u) | N(v)|. Throws std::invalid_argument on an
/// edgeless graph.
int neighborhood_union_bound(const Graph& g);

}  // namespace spectradom

#endif
