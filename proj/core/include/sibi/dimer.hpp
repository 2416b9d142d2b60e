#pragma once

#include <vector>

#include "sibi/eigen.hpp"
#include "sibi/hamiltonian.hpp"
#include "sibi/params.hpp"
#include "sibi/spectrum.hpp"

namespace sibi {

/// One conserved-total-m block of the two-donor Hamiltonian.  The basis is
/// the list of product-pair indices (s1 * D + s2) into the single-donor
/// product basis; the matrix is split into the field-independent part and
/// the part linear in B so a field sweep only rescales.
struct DimerBlock {
  double total_m = 0.0;
  std::vector<int> pairs;          ///< s1 * D + s2
  std::vector<double> h_const;     ///< hyperfine + exchange, GHz
  std::vector<double> h_per_tesla; ///< Zeeman part, GHz per tesla
  int size() const { return static_cast<int>(pairs.size()); }
};

/// Two exchange-coupled donors sharing one parameter set:
/// H = H1 x 1 + 1 x H2 + J (S1z S2z + (S1+ S2- + S1- S2+)/2),
/// assembled directly in conserved-total-m blocks.
struct DimerSystem {
  SystemParams params;
  double j_ghz = 0.0;
  int dim = 0; ///< D^2
  std::vector<DimerBlock> blocks;

  /// Dense block matrix at a field value.
  std::vector<double> block_matrix(int block, double b_tesla) const;
};

DimerSystem build_dimer(const SystemParams& p, double j_ghz);

/// Eigensystems of every block at one field, in block order.
std::vector<EigenSystem> diagonalize_blocks(const DimerSystem& sys, double b_tesla,
                                            bool want_vectors = true);

/// Dense D^2 x D^2 dimer Hamiltonian, used as a one-shot oracle in tests.
std::vector<double> build_dimer_dense(const SystemParams& p, double j_ghz, double b_tesla);

/// One dimer resonance line.  States are named by their block total m and
/// the ascending-energy index inside the block at the resonance field.
struct DimerLine {
  double b_tesla = 0.0;
  double intensity = 0.0;
  double from_m = 0.0;
  int from_index = 0;
  double to_m = 0.0;
  int to_index = 0;
  bool tracking_flagged = false; ///< eigenvector overlap dropped below 0.7
};

struct DimerLineList {
  double f_mw_ghz = 0.0;
  double j_ghz = 0.0;
  std::vector<DimerLine> lines;
  int flagged_brackets = 0;
};

struct DimerSearchOptions {
  double grid_step_tesla = 5e-4;
  double b_tolerance_tesla = 1e-7;
  /// Lines weaker than this (relative to the unit high-field allowed line)
  /// are not refined.
  double intensity_floor = 1e-6;
  /// Coincident roots closer than this are merged, summing intensity.
  double merge_tolerance_tesla = 1e-6;
  double overlap_warn = 0.7;
};

/// Resonance fields of the dimer at fixed microwave frequency over
/// [b_lo, b_hi]: eigenvalues are tracked across a field grid per block,
/// every Delta(total m) = +-1 state pair crossing f_mw is refined by
/// bisection, and intensities are |<f|S1x + S2x|i>|^2 normalized per donor
/// (factor 4/D) so that J = 0 reproduces doubled single-donor intensities.
DimerLineList dimer_lines(const SystemParams& p, double j_ghz, double f_mw_ghz,
                          double b_lo, double b_hi, const DimerSearchOptions& opts = {});

/// Truncated-Gaussian distribution of the exchange coupling, J >= 0.
struct JDistribution {
  double mean_ghz = 0.3;
  double sigma_ghz = 0.3;
  int nodes = 33;
};

/// Deterministic Gauss-Legendre quadrature nodes/weights for the truncated
/// distribution, weights normalized to sum 1.
struct JQuadrature {
  std::vector<double> j_ghz;
  std::vector<double> weight;
};
JQuadrature j_quadrature(const JDistribution& dist);

/// Quadrature-averaged dimer spectrum over the J distribution.  Each node's
/// line list is synthesized on the axis and the spectra are averaged with
/// the node weights in fixed order (nodes run in parallel, reduction is
/// deterministic).
SpectrumGrid ensemble_spectrum(const SystemParams& p, const JDistribution& dist,
                               double f_mw_ghz, const std::vector<double>& axis,
                               const LineShape& shape, SpectrumMode mode,
                               const DimerSearchOptions& opts = {});

} // namespace sibi
