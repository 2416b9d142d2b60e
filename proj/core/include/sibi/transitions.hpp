#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sibi/doublet.hpp"
#include "sibi/params.hpp"

namespace sibi {

enum class TransitionKind {
  allowed,         ///< (+, m) -> (-, m-1), dipole allowed at all fields
  forbidden_plus,  ///< (+, m) -> (+, m-1), EPR-forbidden at high field
  forbidden_minus, ///< (-, m-1) -> (-, m), EPR-forbidden at high field
  generic,         ///< any labelled pair
};

/// A labelled pair of levels.  The named kinds fix the labels from a single
/// m; generic transitions carry arbitrary labels.
struct Transition {
  LevelLabel from;
  LevelLabel to;
  TransitionKind kind = TransitionKind::generic;
  double m = 0.0; ///< the defining m for the named kinds

  static Transition allowed(const SystemParams& p, double m);
  static Transition forbidden_plus(const SystemParams& p, double m);
  static Transition forbidden_minus(const SystemParams& p, double m);
  static Transition generic_pair(const SystemParams& p, const LevelLabel& from,
                                 const LevelLabel& to);
};

std::string kind_token(TransitionKind kind);

/// |E_from - E_to| in GHz, all nuclear delta terms included.
double transition_frequency(const SystemParams& p, const Transition& t,
                            const FieldPoint& field);

/// Analytic d f / dB of the transition frequency, GHz per tesla.  Agrees
/// with central finite differences of transition_frequency.
double transition_dfdb(const SystemParams& p, const Transition& t, const FieldPoint& field);

/// cos(theta) entering the intensity formulas; +1 for singlet endpoints.
double endpoint_cos_theta(const SystemParams& p, double m, const FieldPoint& field);

/// (1/4)(1 + cos th_m)(1 + cos th_{m-1}); unity in the high-field limit.
double allowed_intensity(const SystemParams& p, double m, const FieldPoint& field);

/// (1/4)(1 +- cos th_m)(1 -+ cos th_{m-1}) for the +/- branch transitions.
double forbidden_intensity(const SystemParams& p, Branch branch, double m,
                           const FieldPoint& field);

/// Relative intensity of an arbitrary pair from the numeric eigenvectors:
/// |<j|Sx|i>|^2 normalized by the free-electron 1/4.  Zero unless the total
/// m differs by exactly +-1.  Independent of the closed-form coefficients.
double generic_intensity(const SystemParams& p, const LevelLabel& i, const LevelLabel& j,
                         const FieldPoint& field);

/// Intensity of t according to its kind (generic pairs use the numeric
/// route).
double transition_intensity(const SystemParams& p, const Transition& t,
                            const FieldPoint& field);

enum class ResonanceKind { cancellation, minimum, maximum };

/// A distinguished field point: a cancellation resonance of one doublet or
/// a df/dB = 0 extremum of one transition.
struct ResonancePoint {
  ResonanceKind kind = ResonanceKind::cancellation;
  int k = -1;                ///< cancellation index, B_k = k A / ((1+delta) gamma_e)
  double b_tesla = 0.0;
  double omega0_scaled = 0.0;
  std::optional<Transition> transition;
  /// Residual of the defining condition at the root: cos th_m for
  /// cancellations, cos th_m -+ cos th_{m-1} for extrema.
  double condition_residual = 0.0;
};

/// The cancellation resonances B_k = k A / ((1+delta) gamma_e),
/// k = 0 .. I + 1/2, where the doublet m = -k becomes a sigma_x eigenpair.
std::vector<ResonancePoint> cancellation_fields(const SystemParams& p);

struct ExtremumOptions {
  int scan_points = 20000;
  double b_tolerance_tesla = 1e-7;
};

/// Locates every frequency extremum of t in [b_lo, b_hi] by sign-change
/// bracketing plus bisection.  Doublet-doublet transitions are rooted on the
/// exact extremum conditions cos th_m = -+ cos th_{m-1}; singlet-endpoint
/// transitions on the full analytic derivative.  Empty result when no
/// extremum lies in range.
std::vector<ResonancePoint> find_extrema(const SystemParams& p, const Transition& t,
                                         double b_lo, double b_hi,
                                         const ExtremumOptions& opts = {});

/// One resonance-field entry of a line list.
struct Line {
  double b_tesla = 0.0;
  double intensity = 0.0;
  Transition transition;
  bool at_edge = false; ///< root bracketed against a range boundary
};

/// Resonance fields of a set of transitions at a fixed microwave frequency.
struct LineList {
  double f_mw_ghz = 0.0;
  std::vector<Line> lines;
};

struct LineSearchOptions {
  int scan_points = 20000;
  double b_tolerance_tesla = 1e-7;
};

/// The standard transition set: every allowed line, plus both forbidden
/// families when requested.
std::vector<Transition> standard_transitions(const SystemParams& p, bool include_forbidden);

/// Finds all roots of frequency(B) = f_mw for each transition over
/// (b_lo, b_hi) by dense pre-scan plus bisection; each root is refined to
/// the field tolerance and carries the intensity evaluated at the root.
/// Lines are ordered by transition, then field.
LineList resonance_fields(const SystemParams& p, double f_mw_ghz, double b_lo, double b_hi,
                          bool include_forbidden, const LineSearchOptions& opts = {});

/// Same root search restricted to an explicit transition set.
LineList resonance_fields_for(const SystemParams& p, double f_mw_ghz, double b_lo,
                              double b_hi, const std::vector<Transition>& transitions,
                              const LineSearchOptions& opts = {});

/// Strengths of the four transitions of the embedded 2-qubit system
/// (|10>, |9>, |11>, |12> in the high-field index naming).
struct QubitReport {
  double b_tesla = 0.0;
  double electronic_10_11 = 0.0; ///< allowed m = -4 line
  double electronic_12_9 = 0.0;  ///< allowed m = -3 line
  double nuclear_10_9 = 0.0;     ///< lower-branch m = -4 line
  double nuclear_12_11 = 0.0;    ///< upper-branch m = -3 line
  double theta_m4 = 0.0;         ///< Bloch angle of the m = -4 doublet
  double theta_m5 = 0.0;         ///< identically 0 for the unmixed singlet
  bool at_cancellation = false;  ///< theta_m4 = pi/2 within 1e-9
  /// Field where the 10-rooted electronic and nuclear strengths are equal
  /// (the m = -4 cancellation field), found by bisection.
  double equality_field_tesla = 0.0;
};

QubitReport qubit_report(const SystemParams& p, const FieldPoint& field);

} // namespace sibi
