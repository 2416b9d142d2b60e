#pragma once

#include <vector>

#include "sibi/params.hpp"

namespace sibi {

/// One product-basis state |ms, mI>.
struct ProductState {
  double ms = 0.0;
  double mi = 0.0;
  double total_m() const { return ms + mi; }
};

/// Indices of the basis states sharing one conserved m = ms + mI.
struct MBlock {
  double m = 0.0;
  std::vector<int> states;
};

/// Dense real-symmetric spin Hamiltonian in the |ms, mI> product basis,
/// entries in GHz, with its conserved-quantum-number block structure.
struct FullHamiltonian {
  int dim = 0;
  std::vector<ProductState> basis;
  std::vector<double> matrix; ///< row-major dim x dim
  std::vector<MBlock> blocks; ///< ascending in m

  double at(int i, int j) const { return matrix[static_cast<size_t>(i) * dim + j]; }
  double& at(int i, int j) { return matrix[static_cast<size_t>(i) * dim + j]; }
  bool is_symmetric(double tol = 1e-12) const;
};

/// Assembles H = omega0 Sz - omega0 delta Iz + A (Sz Iz + (S+I- + S-I+)/2).
FullHamiltonian build_full_hamiltonian(const SystemParams& p, const FieldPoint& field);

/// Electron operators in the same product basis, as dense dim x dim
/// matrices (row-major).  Used by the dimer assembly and the numeric
/// intensity route.
std::vector<double> electron_sz_matrix(const SystemParams& p);
std::vector<double> electron_sx_matrix(const SystemParams& p);
std::vector<double> electron_splus_matrix(const SystemParams& p);

/// The basis enumeration shared by all of the above: ms = -1/2 block first,
/// then ms = +1/2, mI ascending within each; kept stable because dimer
/// state labels index into it.
std::vector<ProductState> product_basis(const SystemParams& p);

} // namespace sibi
