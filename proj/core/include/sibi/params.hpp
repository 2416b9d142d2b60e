#pragma once

#include <string>

namespace sibi {

/// Physical constants of a single donor: an electron spin S = 1/2 coupled to
/// a high-spin nucleus by an isotropic hyperfine contact term.  All energies
/// and frequencies are ordinary frequencies in GHz, fields in tesla.
struct SystemParams {
  double hyperfine_ghz = 1.4754;      ///< A, isotropic hyperfine constant
  double zeeman_ratio = 2.488e-4;     ///< delta, nuclear/electron Zeeman ratio
  double nuclear_spin = 4.5;          ///< I, half-integer nuclear spin
  double gamma_e_ghz_per_t = 28.0042; ///< electron gyromagnetic conversion

  /// Si:Bi defaults (the values above).
  static SystemParams si_bi();
  /// Si:P regression configuration: I = 1/2, A = 0.1175 GHz.
  static SystemParams si_p();

  /// Throws std::invalid_argument if any invariant is violated:
  /// A > 0, 0 <= delta < 1, 2I a positive integer, gamma_e > 0.
  void validate() const;

  int two_i() const;                        ///< 2I as an integer
  int multiplicity() const;                 ///< 2I + 1 nuclear levels
  int dimension() const;                    ///< D = 2(2I + 1)
  double max_m() const;                     ///< I + 1/2, the singlet |m|
  /// (I + 1/2)^2, the constant appearing in R_m^2 = z^2 + (I+1/2)^2 - m^2.
  double coupling_sq() const;

  /// Short hex digest of the parameter set, used in spectrum metadata.
  std::string digest() const;
};

/// One value of the applied magnetic field in its three equivalent
/// representations.  Constructed so that the representations are consistent
/// by definition.
struct FieldPoint {
  double b_tesla = 0.0;       ///< applied field B
  double omega0_ghz = 0.0;    ///< electron Zeeman frequency gamma_e * B
  double omega0_scaled = 0.0; ///< dimensionless rescaled field omega0 / A

  static FieldPoint from_tesla(const SystemParams& p, double b);
  static FieldPoint from_scaled(const SystemParams& p, double omega0_scaled);
};

/// True when m is a valid conserved quantum number for these parameters,
/// i.e. m = ms + mI for some basis state: |m| <= I + 1/2 and m - (I + 1/2)
/// integral.
bool valid_quantum_number(const SystemParams& p, double m);

/// True when |m| = I + 1/2 (the two unmixed states).
bool is_singlet_m(const SystemParams& p, double m);

} // namespace sibi
