#include "sibi/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace sibi {

std::vector<ProductState> product_basis(const SystemParams& p) {
  std::vector<ProductState> basis;
  basis.reserve(static_cast<size_t>(p.dimension()));
  for (double ms : {-0.5, 0.5})
    for (int k = 0; k <= p.two_i(); ++k)
      basis.push_back({ms, -p.nuclear_spin + k});
  return basis;
}

bool FullHamiltonian::is_symmetric(double tol) const {
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (std::abs(at(i, j) - at(j, i)) > tol) return false;
  return true;
}

namespace {

// <mI+1|I+|mI> for spin I.
double nuclear_raise(double i_spin, double mi) {
  return std::sqrt(i_spin * (i_spin + 1.0) - mi * (mi + 1.0));
}

std::vector<MBlock> group_blocks(const std::vector<ProductState>& basis) {
  std::map<long long, MBlock> by_m; // keyed by 2m for exactness
  for (size_t i = 0; i < basis.size(); ++i) {
    const long long key = std::llround(2.0 * basis[i].total_m());
    MBlock& block = by_m[key];
    block.m = basis[i].total_m();
    block.states.push_back(static_cast<int>(i));
  }
  std::vector<MBlock> blocks;
  for (auto& [key, block] : by_m) blocks.push_back(std::move(block));
  return blocks;
}

} // namespace

FullHamiltonian build_full_hamiltonian(const SystemParams& p, const FieldPoint& field) {
  FullHamiltonian h;
  h.dim = p.dimension();
  h.basis = product_basis(p);
  h.matrix.assign(static_cast<size_t>(h.dim) * h.dim, 0.0);

  const double a = p.hyperfine_ghz;
  for (int i = 0; i < h.dim; ++i) {
    const ProductState& s = h.basis[i];
    // omega0 Sz - omega0 delta Iz + A Sz Iz
    h.at(i, i) = field.omega0_ghz * s.ms - field.omega0_ghz * p.zeeman_ratio * s.mi +
                 a * s.ms * s.mi;
    // A (S+I- + S-I+)/2: S+ couples ms -1/2 -> +1/2 while mI drops by one.
    if (s.ms < 0.0 && s.mi - 1.0 >= -p.nuclear_spin - 1e-9) {
      for (int j = 0; j < h.dim; ++j) {
        const ProductState& t = h.basis[j];
        if (t.ms > 0.0 && std::abs(t.mi - (s.mi - 1.0)) < 1e-9) {
          const double v = 0.5 * a * nuclear_raise(p.nuclear_spin, s.mi - 1.0);
          h.at(i, j) = v;
          h.at(j, i) = v;
        }
      }
    }
  }
  h.blocks = group_blocks(h.basis);
  return h;
}

std::vector<double> electron_sz_matrix(const SystemParams& p) {
  const std::vector<ProductState> basis = product_basis(p);
  const int d = static_cast<int>(basis.size());
  std::vector<double> m(static_cast<size_t>(d) * d, 0.0);
  for (int i = 0; i < d; ++i) m[static_cast<size_t>(i) * d + i] = basis[i].ms;
  return m;
}

std::vector<double> electron_splus_matrix(const SystemParams& p) {
  const std::vector<ProductState> basis = product_basis(p);
  const int d = static_cast<int>(basis.size());
  std::vector<double> m(static_cast<size_t>(d) * d, 0.0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (basis[i].ms > 0.0 && basis[j].ms < 0.0 && std::abs(basis[i].mi - basis[j].mi) < 1e-9)
        m[static_cast<size_t>(i) * d + j] = 1.0; // <up|S+|down> = 1 for S = 1/2
  return m;
}

std::vector<double> electron_sx_matrix(const SystemParams& p) {
  const std::vector<ProductState> basis = product_basis(p);
  const int d = static_cast<int>(basis.size());
  std::vector<double> m(static_cast<size_t>(d) * d, 0.0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (basis[i].ms != basis[j].ms && std::abs(basis[i].mi - basis[j].mi) < 1e-9)
        m[static_cast<size_t>(i) * d + j] = 0.5;
  return m;
}

} // namespace sibi
