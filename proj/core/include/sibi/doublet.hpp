#pragma once

#include <string>
#include <vector>

#include "sibi/params.hpp"

namespace sibi {

/// Adiabatic branch of an eigenstate within its m-subspace.
enum class Branch { minus, plus, singlet };

/// Adiabatic label (branch, m) of one eigenstate.
struct LevelLabel {
  Branch branch = Branch::minus;
  double m = 0.0;

  bool operator==(const LevelLabel&) const = default;
};

/// High-field product-state label |ms, mI>.
struct AsymptoticLabel {
  double ms = 0.0;
  double mi = 0.0;
};

/// Analytic solution of one conserved-m subspace at a fixed field.
///
/// For |m| < I + 1/2 the subspace is a doublet mixed by the hyperfine
/// flip-flop terms; R, cos_theta and sin_theta parameterize the Bloch vector
/// of the reduced two-level Hamiltonian, and (a, b) are the real mixing
/// coefficients of the |+, m> / |-, m> eigenstates.  For |m| = I + 1/2 the
/// state is an unmixed singlet: sin_theta = 0, cos_theta = 1, b = 0, and
/// both energy slots hold the closed-form linear-in-B energy.
struct BlochDoublet {
  double m = 0.0;
  bool singlet = false;
  double r = 0.0;
  double cos_theta = 1.0;
  double sin_theta = 0.0;
  double a_plus = 1.0;
  double b_plus = 0.0;
  double a_minus = 1.0;
  double b_minus = 0.0;
  double e_plus_ghz = 0.0;
  double e_minus_ghz = 0.0;
};

/// Solves the m-subspace analytically.  Throws std::domain_error when m is
/// not a valid quantum number for p.
BlochDoublet build_doublet(const SystemParams& p, double m, const FieldPoint& field);

/// Energy of the labelled level in GHz.  Throws std::domain_error on an
/// invalid label (singlet labels must use Branch::singlet).
double eigenenergy(const SystemParams& p, const LevelLabel& level, const FieldPoint& field);

/// Analytic dE/dB of the labelled level, GHz per tesla.
double eigenenergy_derivative(const SystemParams& p, const LevelLabel& level,
                              const FieldPoint& field);

/// True when the label exists for these parameters.
bool level_exists(const SystemParams& p, const LevelLabel& level);

/// High-field product-state label of an adiabatic level.
AsymptoticLabel asymptotic_label(const LevelLabel& level);

/// All D adiabatic labels in the canonical high-field energy order:
/// (-, I-1/2) ... (-, -I+1/2), (singlet, -I-1/2), (+, -I+1/2) ... (+, I-1/2),
/// (singlet, +I+1/2).
std::vector<LevelLabel> enumerate_levels(const SystemParams& p);

/// One row of the level-ordering table.
struct OrderedLevel {
  int index = 0; ///< 1-based position by increasing energy
  LevelLabel label;
  AsymptoticLabel asymptotic;
  double energy_ghz = 0.0;
  bool degenerate = false; ///< ties with a neighbour at this field
};

/// All D levels sorted by increasing energy at the given field.  Exact
/// degeneracies are tie-broken by adiabatic label order (branch, then m)
/// and flagged.
std::vector<OrderedLevel> level_ordering(const SystemParams& p, const FieldPoint& field);

/// Level label for the 1-based high-field ordered index (the figure-style
/// |1> .. |D> naming, evaluated in the asymptotic ordering which for these
/// systems holds at every B > 0).
LevelLabel label_for_index(const SystemParams& p, int index);

/// Compact text forms: "+", "-", "s"; "p-4", "m3", "s-5"; half-integers as
/// "p-7/2".
std::string branch_token(Branch b);
std::string label_token(const LevelLabel& level);
std::string format_m(double m);

} // namespace sibi
