#include "sibi/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sibi {

EigenSystem jacobi_symmetric(const std::vector<double>& matrix, int n, bool want_vectors) {
  if (n <= 0 || matrix.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("jacobi_symmetric: bad dimensions");

  std::vector<double> a = matrix;
  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(a[size_t(i) * n + j]));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(a[size_t(i) * n + j] - a[size_t(j) * n + i]) > 1e-12 * std::max(1.0, scale))
        throw std::invalid_argument("jacobi_symmetric: matrix not symmetric");

  std::vector<double> v;
  if (want_vectors) {
    v.assign(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[size_t(i) * n + i] = 1.0;
  }

  auto off_norm = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += a[size_t(i) * n + j] * a[size_t(i) * n + j];
    return std::sqrt(2.0 * s);
  };

  const double stop = 1e-15 * std::max(1.0, scale) * n;
  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps && off_norm() > stop; ++sweep) {
    for (int pp = 0; pp < n - 1; ++pp) {
      for (int q = pp + 1; q < n; ++q) {
        const double apq = a[size_t(pp) * n + q];
        if (apq == 0.0) continue;
        const double app = a[size_t(pp) * n + pp];
        const double aqq = a[size_t(q) * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a[size_t(pp) * n + pp] = app - t * apq;
        a[size_t(q) * n + q] = aqq + t * apq;
        a[size_t(pp) * n + q] = 0.0;
        a[size_t(q) * n + pp] = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == pp || k == q) continue;
          const double akp = a[size_t(k) * n + pp];
          const double akq = a[size_t(k) * n + q];
          a[size_t(k) * n + pp] = akp - s * (akq + tau * akp);
          a[size_t(k) * n + q] = akq + s * (akp - tau * akq);
          a[size_t(pp) * n + k] = a[size_t(k) * n + pp];
          a[size_t(q) * n + k] = a[size_t(k) * n + q];
        }
        if (want_vectors) {
          for (int k = 0; k < n; ++k) {
            const double vkp = v[size_t(k) * n + pp];
            const double vkq = v[size_t(k) * n + q];
            v[size_t(k) * n + pp] = vkp - s * (vkq + tau * vkp);
            v[size_t(k) * n + q] = vkq + s * (vkp - tau * vkq);
          }
        }
      }
    }
  }

  EigenSystem out;
  out.n = n;
  out.values.resize(n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = a[size_t(i) * n + i];
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return diag[x] < diag[y]; });
  for (int k = 0; k < n; ++k) out.values[k] = diag[order[k]];
  if (want_vectors) {
    out.vectors.resize(static_cast<size_t>(n) * n);
    for (int k = 0; k < n; ++k)
      for (int r = 0; r < n; ++r)
        out.vectors[size_t(k) * n + r] = v[size_t(r) * n + order[k]];
  }
  return out;
}

std::vector<EigenPair> diagonalize_full(const FullHamiltonian& h) {
  if (!h.is_symmetric(1e-10))
    throw std::invalid_argument("diagonalize_full: Hamiltonian not symmetric");

  std::vector<EigenPair> pairs;
  pairs.reserve(static_cast<size_t>(h.dim));
  for (const MBlock& block : h.blocks) {
    const int bn = static_cast<int>(block.states.size());
    std::vector<double> sub(static_cast<size_t>(bn) * bn);
    for (int i = 0; i < bn; ++i)
      for (int j = 0; j < bn; ++j)
        sub[size_t(i) * bn + j] = h.at(block.states[i], block.states[j]);
    const EigenSystem es = jacobi_symmetric(sub, bn, true);
    for (int k = 0; k < bn; ++k) {
      EigenPair pair;
      pair.energy_ghz = es.values[k];
      pair.vector.assign(static_cast<size_t>(h.dim), 0.0);
      for (int r = 0; r < bn; ++r)
        pair.vector[static_cast<size_t>(block.states[r])] = es.vector(k)[r];
      pairs.push_back(std::move(pair));
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const EigenPair& a, const EigenPair& b) { return a.energy_ghz < b.energy_ghz; });
  return pairs;
}

} // namespace sibi
