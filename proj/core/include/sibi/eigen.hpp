#pragma once

#include <vector>

#include "sibi/hamiltonian.hpp"

namespace sibi {

/// Eigen-decomposition of a real symmetric matrix, values ascending.
/// Eigenvector k occupies vectors[k*n .. k*n+n-1].
struct EigenSystem {
  int n = 0;
  std::vector<double> values;
  std::vector<double> vectors;

  const double* vector(int k) const { return vectors.data() + static_cast<size_t>(k) * n; }
};

/// Cyclic Jacobi diagonalization of a dense symmetric matrix (row-major).
/// Deterministic; adequate up to the dimensions used here (<= 400).
/// Throws std::invalid_argument if the matrix is not symmetric to
/// 1e-12 * max|entry|.
EigenSystem jacobi_symmetric(const std::vector<double>& matrix, int n,
                             bool want_vectors = true);

/// One eigenpair of the full Hamiltonian, eigenvector in the full product
/// basis.
struct EigenPair {
  double energy_ghz = 0.0;
  std::vector<double> vector;
};

/// Diagonalizes H block by block (block sizes <= 2 for a single donor) and
/// returns all eigenpairs sorted by ascending energy.  Eigenvectors are
/// orthonormal to 1e-10.
std::vector<EigenPair> diagonalize_full(const FullHamiltonian& h);

} // namespace sibi
