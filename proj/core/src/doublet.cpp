#include "sibi/doublet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sibi {

namespace {

double singlet_energy(const SystemParams& p, double m, const FieldPoint& field) {
  // E = +-omega0/2 -+ I omega0 delta + I A / 2, upper signs for m = +(I+1/2).
  const double sign = m > 0.0 ? 1.0 : -1.0;
  return sign * field.omega0_ghz / 2.0 - sign * p.nuclear_spin * field.omega0_ghz * p.zeeman_ratio +
         p.nuclear_spin * p.hyperfine_ghz / 2.0;
}

} // namespace

BlochDoublet build_doublet(const SystemParams& p, double m, const FieldPoint& field) {
  if (!valid_quantum_number(p, m))
    throw std::domain_error("quantum number m out of range");

  BlochDoublet d;
  d.m = m;
  if (is_singlet_m(p, m)) {
    d.singlet = true;
    d.r = std::abs(m + field.omega0_scaled * (1.0 + p.zeeman_ratio));
    d.cos_theta = 1.0;
    d.sin_theta = 0.0;
    d.a_plus = d.a_minus = 1.0;
    d.b_plus = d.b_minus = 0.0;
    d.e_plus_ghz = d.e_minus_ghz = singlet_energy(p, m, field);
    return d;
  }

  const double z = m + field.omega0_scaled * (1.0 + p.zeeman_ratio);
  const double sx_sq = p.coupling_sq() - m * m; // (I+1/2)^2 - m^2, > 0 for doublets
  d.r = std::sqrt(z * z + sx_sq);
  d.cos_theta = z / d.r;
  d.sin_theta = std::sqrt(sx_sq) / d.r;

  // a = cos(theta/2), b = +-sin(theta/2); theta in (0, pi) strictly, so the
  // half-angle forms are well conditioned everywhere.
  d.a_plus = std::sqrt(0.5 * (1.0 + d.cos_theta));
  d.b_plus = std::sqrt(0.5 * (1.0 - d.cos_theta));
  d.a_minus = d.a_plus;
  d.b_minus = -d.b_plus;

  const double shift = -0.5 * (1.0 + 4.0 * field.omega0_scaled * m * p.zeeman_ratio);
  d.e_plus_ghz = 0.5 * p.hyperfine_ghz * (shift + d.r);
  d.e_minus_ghz = 0.5 * p.hyperfine_ghz * (shift - d.r);
  return d;
}

bool level_exists(const SystemParams& p, const LevelLabel& level) {
  if (!valid_quantum_number(p, level.m)) return false;
  const bool singlet = is_singlet_m(p, level.m);
  return singlet == (level.branch == Branch::singlet);
}

double eigenenergy(const SystemParams& p, const LevelLabel& level, const FieldPoint& field) {
  if (!level_exists(p, level)) throw std::domain_error("invalid level label");
  const BlochDoublet d = build_doublet(p, level.m, field);
  return level.branch == Branch::minus ? d.e_minus_ghz : d.e_plus_ghz;
}

double eigenenergy_derivative(const SystemParams& p, const LevelLabel& level,
                              const FieldPoint& field) {
  if (!level_exists(p, level)) throw std::domain_error("invalid level label");
  if (level.branch == Branch::singlet) {
    const double sign = level.m > 0.0 ? 1.0 : -1.0;
    return p.gamma_e_ghz_per_t * sign * (0.5 - p.nuclear_spin * p.zeeman_ratio);
  }
  // dE/domega0 = -m delta +- (1+delta) cos(theta) / 2, then omega0 = gamma B.
  const BlochDoublet d = build_doublet(p, level.m, field);
  const double branch = level.branch == Branch::plus ? 1.0 : -1.0;
  return p.gamma_e_ghz_per_t *
         (-level.m * p.zeeman_ratio + branch * 0.5 * (1.0 + p.zeeman_ratio) * d.cos_theta);
}

AsymptoticLabel asymptotic_label(const LevelLabel& level) {
  AsymptoticLabel a;
  switch (level.branch) {
    case Branch::plus: a.ms = 0.5; break;
    case Branch::minus: a.ms = -0.5; break;
    case Branch::singlet: a.ms = level.m > 0.0 ? 0.5 : -0.5; break;
  }
  a.mi = level.m - a.ms;
  return a;
}

std::vector<LevelLabel> enumerate_levels(const SystemParams& p) {
  std::vector<LevelLabel> levels;
  const double mm = p.max_m();
  for (double m = mm - 1.0; m >= -mm + 1.0 - 1e-9; m -= 1.0)
    levels.push_back({Branch::minus, m});
  levels.push_back({Branch::singlet, -mm});
  for (double m = -mm + 1.0; m <= mm - 1.0 + 1e-9; m += 1.0)
    levels.push_back({Branch::plus, m});
  levels.push_back({Branch::singlet, mm});
  return levels;
}

namespace {

int branch_rank(Branch b) {
  switch (b) {
    case Branch::minus: return 0;
    case Branch::singlet: return 1;
    case Branch::plus: return 2;
  }
  return 3;
}

} // namespace

std::vector<OrderedLevel> level_ordering(const SystemParams& p, const FieldPoint& field) {
  std::vector<OrderedLevel> rows;
  for (const LevelLabel& label : enumerate_levels(p)) {
    OrderedLevel row;
    row.label = label;
    row.asymptotic = asymptotic_label(label);
    row.energy_ghz = eigenenergy(p, label, field);
    rows.push_back(row);
  }
  const double tie_tol = 1e-12 * p.hyperfine_ghz;
  std::sort(rows.begin(), rows.end(), [&](const OrderedLevel& a, const OrderedLevel& b) {
    if (std::abs(a.energy_ghz - b.energy_ghz) > tie_tol)
      return a.energy_ghz < b.energy_ghz;
    if (branch_rank(a.label.branch) != branch_rank(b.label.branch))
      return branch_rank(a.label.branch) < branch_rank(b.label.branch);
    return a.label.m < b.label.m;
  });
  for (size_t i = 0; i < rows.size(); ++i) {
    rows[i].index = static_cast<int>(i) + 1;
    const bool deg_prev = i > 0 && std::abs(rows[i].energy_ghz - rows[i - 1].energy_ghz) <= tie_tol;
    const bool deg_next =
        i + 1 < rows.size() && std::abs(rows[i].energy_ghz - rows[i + 1].energy_ghz) <= tie_tol;
    rows[i].degenerate = deg_prev || deg_next;
  }
  return rows;
}

LevelLabel label_for_index(const SystemParams& p, int index) {
  const std::vector<LevelLabel> levels = enumerate_levels(p);
  if (index < 1 || index > static_cast<int>(levels.size()))
    throw std::domain_error("level index out of range");
  return levels[static_cast<size_t>(index) - 1];
}

std::string branch_token(Branch b) {
  switch (b) {
    case Branch::minus: return "-";
    case Branch::plus: return "+";
    case Branch::singlet: return "s";
  }
  return "?";
}

std::string format_m(double m) {
  const long long twice = std::llround(2.0 * m);
  char buf[32];
  if (twice % 2 == 0)
    std::snprintf(buf, sizeof(buf), "%lld", twice / 2);
  else
    std::snprintf(buf, sizeof(buf), "%lld/2", twice);
  return buf;
}

std::string label_token(const LevelLabel& level) {
  std::string b;
  switch (level.branch) {
    case Branch::minus: b = "m"; break;
    case Branch::plus: b = "p"; break;
    case Branch::singlet: b = "s"; break;
  }
  return b + format_m(level.m);
}

} // namespace sibi
