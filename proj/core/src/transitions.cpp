#include "sibi/transitions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sibi/eigen.hpp"
#include "sibi/hamiltonian.hpp"

namespace sibi {

namespace {

LevelLabel upper_endpoint(const SystemParams& p, double m) {
  return is_singlet_m(p, m) ? LevelLabel{Branch::singlet, m} : LevelLabel{Branch::plus, m};
}

LevelLabel lower_endpoint(const SystemParams& p, double m) {
  return is_singlet_m(p, m) ? LevelLabel{Branch::singlet, m} : LevelLabel{Branch::minus, m};
}

void require_pair(const SystemParams& p, double m) {
  if (!valid_quantum_number(p, m) || !valid_quantum_number(p, m - 1.0))
    throw std::domain_error("transition m out of range");
}

} // namespace

Transition Transition::allowed(const SystemParams& p, double m) {
  require_pair(p, m);
  Transition t;
  t.from = upper_endpoint(p, m);
  t.to = lower_endpoint(p, m - 1.0);
  t.kind = TransitionKind::allowed;
  t.m = m;
  return t;
}

Transition Transition::forbidden_plus(const SystemParams& p, double m) {
  require_pair(p, m);
  if (is_singlet_m(p, m - 1.0))
    throw std::domain_error("no upper-branch state at m - 1");
  Transition t;
  t.from = upper_endpoint(p, m);
  t.to = {Branch::plus, m - 1.0};
  t.kind = TransitionKind::forbidden_plus;
  t.m = m;
  return t;
}

Transition Transition::forbidden_minus(const SystemParams& p, double m) {
  require_pair(p, m);
  if (is_singlet_m(p, m))
    throw std::domain_error("no lower-branch state at m");
  Transition t;
  t.from = lower_endpoint(p, m - 1.0);
  t.to = {Branch::minus, m};
  t.kind = TransitionKind::forbidden_minus;
  t.m = m;
  return t;
}

Transition Transition::generic_pair(const SystemParams& p, const LevelLabel& from,
                                    const LevelLabel& to) {
  if (!level_exists(p, from) || !level_exists(p, to))
    throw std::domain_error("invalid level label");
  Transition t;
  t.from = from;
  t.to = to;
  t.kind = TransitionKind::generic;
  t.m = from.m;
  return t;
}

std::string kind_token(TransitionKind kind) {
  switch (kind) {
    case TransitionKind::allowed: return "allowed";
    case TransitionKind::forbidden_plus: return "forbidden+";
    case TransitionKind::forbidden_minus: return "forbidden-";
    case TransitionKind::generic: return "generic";
  }
  return "?";
}

double transition_frequency(const SystemParams& p, const Transition& t,
                            const FieldPoint& field) {
  return std::abs(eigenenergy(p, t.from, field) - eigenenergy(p, t.to, field));
}

double transition_dfdb(const SystemParams& p, const Transition& t, const FieldPoint& field) {
  const double de = eigenenergy(p, t.from, field) - eigenenergy(p, t.to, field);
  const double slope = eigenenergy_derivative(p, t.from, field) -
                       eigenenergy_derivative(p, t.to, field);
  return de >= 0.0 ? slope : -slope;
}

double endpoint_cos_theta(const SystemParams& p, double m, const FieldPoint& field) {
  if (!valid_quantum_number(p, m)) throw std::domain_error("quantum number m out of range");
  if (is_singlet_m(p, m)) return 1.0;
  return build_doublet(p, m, field).cos_theta;
}

double allowed_intensity(const SystemParams& p, double m, const FieldPoint& field) {
  require_pair(p, m);
  const double c1 = endpoint_cos_theta(p, m, field);
  const double c2 = endpoint_cos_theta(p, m - 1.0, field);
  return 0.25 * (1.0 + c1) * (1.0 + c2);
}

double forbidden_intensity(const SystemParams& p, Branch branch, double m,
                           const FieldPoint& field) {
  require_pair(p, m);
  if (branch == Branch::singlet)
    throw std::domain_error("forbidden intensity needs branch + or -");
  const double sign = branch == Branch::plus ? 1.0 : -1.0;
  const double c1 = endpoint_cos_theta(p, m, field);
  const double c2 = endpoint_cos_theta(p, m - 1.0, field);
  return 0.25 * (1.0 + sign * c1) * (1.0 - sign * c2);
}

namespace {

// Picks the numeric eigenpair corresponding to an adiabatic label: singlets
// are the only member of their m-block, doublet branches are the lower and
// upper member.
const EigenPair* find_numeric_level(const std::vector<EigenPair>& pairs,
                                    const FullHamiltonian& h, const LevelLabel& label) {
  const EigenPair* lower = nullptr;
  const EigenPair* upper = nullptr;
  for (const EigenPair& pair : pairs) {
    double m = 0.0;
    for (int i = 0; i < h.dim; ++i)
      if (std::abs(pair.vector[static_cast<size_t>(i)]) > 0.5) m = h.basis[i].total_m();
    //总 m of the dominant component identifies the block even when mixed:
    // recompute from full weighting instead to stay robust.
    m = 0.0;
    for (int i = 0; i < h.dim; ++i) {
      const double w = pair.vector[static_cast<size_t>(i)];
      m += w * w * h.basis[i].total_m();
    }
    if (std::abs(m - label.m) > 1e-6) continue;
    if (!lower || pair.energy_ghz < lower->energy_ghz) lower = &pair;
    if (!upper || pair.energy_ghz > upper->energy_ghz) upper = &pair;
  }
  if (!lower) return nullptr;
  if (label.branch == Branch::minus) return lower;
  if (label.branch == Branch::plus) return upper;
  return lower; // singlet: one member
}

} // namespace

double generic_intensity(const SystemParams& p, const LevelLabel& i, const LevelLabel& j,
                         const FieldPoint& field) {
  if (!level_exists(p, i) || !level_exists(p, j))
    throw std::domain_error("invalid level label");
  if (std::abs(std::abs(i.m - j.m) - 1.0) > 1e-9) return 0.0;

  const FullHamiltonian h = build_full_hamiltonian(p, field);
  const std::vector<EigenPair> pairs = diagonalize_full(h);
  const EigenPair* vi = find_numeric_level(pairs, h, i);
  const EigenPair* vj = find_numeric_level(pairs, h, j);
  if (!vi || !vj) throw std::domain_error("level not found numerically");

  const std::vector<double> sx = electron_sx_matrix(p);
  double element = 0.0;
  for (int r = 0; r < h.dim; ++r)
    for (int c = 0; c < h.dim; ++c)
      element += vj->vector[static_cast<size_t>(r)] * sx[static_cast<size_t>(r) * h.dim + c] *
                 vi->vector[static_cast<size_t>(c)];
  // normalized by the free-electron |<1/2|Sx|-1/2>|^2 = 1/4
  return 4.0 * element * element;
}

double transition_intensity(const SystemParams& p, const Transition& t,
                            const FieldPoint& field) {
  switch (t.kind) {
    case TransitionKind::allowed: return allowed_intensity(p, t.m, field);
    case TransitionKind::forbidden_plus: return forbidden_intensity(p, Branch::plus, t.m, field);
    case TransitionKind::forbidden_minus:
      return forbidden_intensity(p, Branch::minus, t.m, field);
    case TransitionKind::generic: return generic_intensity(p, t.from, t.to, field);
  }
  return 0.0;
}

std::vector<ResonancePoint> cancellation_fields(const SystemParams& p) {
  std::vector<ResonancePoint> points;
  const int k_max = static_cast<int>(std::llround(p.max_m() + 0.5 - 0.5));
  for (int k = 0; k <= k_max; ++k) {
    ResonancePoint r;
    r.kind = ResonanceKind::cancellation;
    r.k = k;
    r.omega0_scaled = k / (1.0 + p.zeeman_ratio);
    r.b_tesla = k * p.hyperfine_ghz / ((1.0 + p.zeeman_ratio) * p.gamma_e_ghz_per_t);
    if (k > 0 && k < p.max_m() + 0.5) {
      const FieldPoint f = FieldPoint::from_tesla(p, r.b_tesla);
      r.condition_residual = endpoint_cos_theta(p, -static_cast<double>(k), f);
    }
    points.push_back(r);
  }
  return points;
}

namespace {

double branch_sign(Branch b, double m) {
  if (b == Branch::plus) return 1.0;
  if (b == Branch::minus) return -1.0;
  // singlet energies are linear in B; sign only used for doublet conditions
  return m > 0.0 ? 1.0 : -1.0;
}

bool doublet_doublet(const SystemParams& p, const Transition& t) {
  return !is_singlet_m(p, t.from.m) && !is_singlet_m(p, t.to.m);
}

// The function whose roots are the frequency extrema.  For doublet-doublet
// transitions this is the exact extremum condition b1 cos(th_m1) - b2
// cos(th_m2) (the paper's minimum/maximum conditions), signed so it is
// proportional to d|dE|/dB up to the tiny nuclear sliver; for transitions
// with a singlet endpoint it is the full analytic derivative.
double extremum_function(const SystemParams& p, const Transition& t, double b) {
  const FieldPoint field = FieldPoint::from_tesla(p, b);
  if (doublet_doublet(p, t)) {
    const double g = branch_sign(t.from.branch, t.from.m) *
                         endpoint_cos_theta(p, t.from.m, field) -
                     branch_sign(t.to.branch, t.to.m) * endpoint_cos_theta(p, t.to.m, field);
    const double de = eigenenergy(p, t.from, field) - eigenenergy(p, t.to, field);
    return de >= 0.0 ? g : -g;
  }
  return transition_dfdb(p, t, field);
}

double bisect(const std::function<double(double)>& fn, double lo, double hi, double f_lo,
              double tol) {
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = fn(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

} // namespace

std::vector<ResonancePoint> find_extrema(const SystemParams& p, const Transition& t,
                                         double b_lo, double b_hi,
                                         const ExtremumOptions& opts) {
  if (!(b_hi > b_lo) || !(b_lo >= 0.0))
    throw std::invalid_argument("find_extrema: invalid field range");

  auto g = [&](double b) { return extremum_function(p, t, b); };

  std::vector<ResonancePoint> found;
  const int n = std::max(opts.scan_points, 2);
  double prev_b = b_lo;
  double prev_g = g(prev_b);
  for (int i = 1; i < n; ++i) {
    const double b = b_lo + (b_hi - b_lo) * i / (n - 1);
    const double cur_g = g(b);
    if ((prev_g < 0.0 && cur_g >= 0.0) || (prev_g >= 0.0 && cur_g < 0.0)) {
      const double root = bisect(g, prev_b, b, prev_g, opts.b_tolerance_tesla);
      ResonancePoint r;
      // derivative goes negative -> positive at a minimum
      r.kind = prev_g < 0.0 ? ResonanceKind::minimum : ResonanceKind::maximum;
      r.b_tesla = root;
      r.omega0_scaled = FieldPoint::from_tesla(p, root).omega0_scaled;
      r.transition = t;
      if (doublet_doublet(p, t)) {
        const FieldPoint field = FieldPoint::from_tesla(p, root);
        r.condition_residual = branch_sign(t.from.branch, t.from.m) *
                                   endpoint_cos_theta(p, t.from.m, field) -
                               branch_sign(t.to.branch, t.to.m) *
                                   endpoint_cos_theta(p, t.to.m, field);
      } else {
        r.condition_residual =
            transition_dfdb(p, t, FieldPoint::from_tesla(p, root)) / p.gamma_e_ghz_per_t;
      }
      found.push_back(r);
    }
    prev_b = b;
    prev_g = cur_g;
  }
  return found;
}

std::vector<Transition> standard_transitions(const SystemParams& p, bool include_forbidden) {
  std::vector<Transition> ts;
  const double mm = p.max_m();
  for (double m = mm; m >= -mm + 1.0 - 1e-9; m -= 1.0) ts.push_back(Transition::allowed(p, m));
  if (include_forbidden) {
    for (double m = mm; m >= -mm + 2.0 - 1e-9; m -= 1.0)
      ts.push_back(Transition::forbidden_plus(p, m));
    for (double m = mm - 1.0; m >= -mm + 1.0 - 1e-9; m -= 1.0)
      ts.push_back(Transition::forbidden_minus(p, m));
  }
  return ts;
}

LineList resonance_fields_for(const SystemParams& p, double f_mw_ghz, double b_lo,
                              double b_hi, const std::vector<Transition>& transitions,
                              const LineSearchOptions& opts) {
  if (!(f_mw_ghz > 0.0)) throw std::invalid_argument("microwave frequency must be positive");
  if (!(b_hi > b_lo) || !(b_lo >= 0.0))
    throw std::invalid_argument("resonance_fields: invalid field range");

  LineList list;
  list.f_mw_ghz = f_mw_ghz;
  const int n = std::max(opts.scan_points, 2);
  const double step = (b_hi - b_lo) / (n - 1);

  for (const Transition& t : transitions) {
    auto h = [&](double b) {
      return transition_frequency(p, t, FieldPoint::from_tesla(p, b)) - f_mw_ghz;
    };
    double prev_b = b_lo;
    double prev_h = h(prev_b);
    for (int i = 1; i < n; ++i) {
      const double b = b_lo + (b_hi - b_lo) * i / (n - 1);
      const double cur_h = h(b);
      if ((prev_h < 0.0 && cur_h >= 0.0) || (prev_h >= 0.0 && cur_h < 0.0)) {
        const double root = bisect(h, prev_b, b, prev_h, opts.b_tolerance_tesla);
        Line line;
        line.b_tesla = root;
        line.transition = t;
        line.intensity = transition_intensity(p, t, FieldPoint::from_tesla(p, root));
        line.at_edge = root < b_lo + step || root > b_hi - step;
        list.lines.push_back(line);
      }
      prev_b = b;
      prev_h = cur_h;
    }
  }
  // deterministic merge order: transition enumeration order, then field
  std::stable_sort(list.lines.begin(), list.lines.end(), [&](const Line& a, const Line& b) {
    auto key = [&](const Line& l) {
      for (size_t k = 0; k < transitions.size(); ++k)
        if (transitions[k].from == l.transition.from && transitions[k].to == l.transition.to)
          return k;
      return transitions.size();
    };
    const size_t ka = key(a), kb = key(b);
    if (ka != kb) return ka < kb;
    return a.b_tesla < b.b_tesla;
  });
  return list;
}

LineList resonance_fields(const SystemParams& p, double f_mw_ghz, double b_lo, double b_hi,
                          bool include_forbidden, const LineSearchOptions& opts) {
  return resonance_fields_for(p, f_mw_ghz, b_lo, b_hi,
                              standard_transitions(p, include_forbidden), opts);
}

QubitReport qubit_report(const SystemParams& p, const FieldPoint& field) {
  const double m4 = -p.max_m() + 1.0; // -4 for Si:Bi

  QubitReport q;
  q.b_tesla = field.b_tesla;
  q.electronic_10_11 = allowed_intensity(p, m4, field);
  q.electronic_12_9 = allowed_intensity(p, m4 + 1.0, field);
  q.nuclear_10_9 = forbidden_intensity(p, Branch::minus, m4, field);
  q.nuclear_12_11 = forbidden_intensity(p, Branch::plus, m4 + 1.0, field);

  const double c4 = endpoint_cos_theta(p, m4, field);
  q.theta_m4 = std::acos(c4);
  q.theta_m5 = 0.0;
  q.at_cancellation = std::abs(c4) < 1e-9;

  // nuclear(10->9) = electronic(10->11) exactly where cos(theta_m4) = 0
  auto c = [&](double b) { return endpoint_cos_theta(p, m4, FieldPoint::from_tesla(p, b)); };
  const double b_hi = 2.0 * (-m4) * p.hyperfine_ghz / p.gamma_e_ghz_per_t;
  q.equality_field_tesla = bisect(c, 0.0, b_hi, c(0.0), 1e-13);
  return q;
}

} // namespace sibi
