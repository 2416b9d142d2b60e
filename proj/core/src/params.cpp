#include "sibi/params.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace sibi {

SystemParams SystemParams::si_bi() { return SystemParams{}; }

SystemParams SystemParams::si_p() {
  SystemParams p;
  p.hyperfine_ghz = 0.1175;
  p.nuclear_spin = 0.5;
  // omega_I / omega_0 for 31P; only the order of magnitude matters for the
  // regression configuration.
  p.zeeman_ratio = 6.15e-4;
  return p;
}

void SystemParams::validate() const {
  if (!(hyperfine_ghz > 0.0))
    throw std::invalid_argument("hyperfine constant A must be positive");
  if (!(zeeman_ratio >= 0.0 && zeeman_ratio < 1.0))
    throw std::invalid_argument("Zeeman ratio delta must lie in [0, 1)");
  const double two_i_exact = 2.0 * nuclear_spin;
  if (!(two_i_exact > 0.0) || std::abs(two_i_exact - std::llround(two_i_exact)) > 1e-9)
    throw std::invalid_argument("2*I must be a positive integer");
  if (!(gamma_e_ghz_per_t > 0.0))
    throw std::invalid_argument("gamma_e must be positive");
}

int SystemParams::two_i() const { return static_cast<int>(std::llround(2.0 * nuclear_spin)); }

int SystemParams::multiplicity() const { return two_i() + 1; }

int SystemParams::dimension() const { return 2 * multiplicity(); }

double SystemParams::max_m() const { return nuclear_spin + 0.5; }

double SystemParams::coupling_sq() const { return max_m() * max_m(); }

std::string SystemParams::digest() const {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%.17g|%.17g|%d|%.17g", hyperfine_ghz, zeeman_ratio,
                two_i(), gamma_e_ghz_per_t);
  // FNV-1a, enough to tell parameter sets apart in metadata.
  uint64_t h = 1469598103934665603ull;
  for (const char* c = buf; *c; ++c) {
    h ^= static_cast<uint64_t>(static_cast<unsigned char>(*c));
    h *= 1099511628211ull;
  }
  char out[17];
  std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(h));
  return out;
}

FieldPoint FieldPoint::from_tesla(const SystemParams& p, double b) {
  if (!(b >= 0.0)) throw std::invalid_argument("magnetic field must be non-negative");
  FieldPoint f;
  f.b_tesla = b;
  f.omega0_ghz = p.gamma_e_ghz_per_t * b;
  f.omega0_scaled = f.omega0_ghz / p.hyperfine_ghz;
  return f;
}

FieldPoint FieldPoint::from_scaled(const SystemParams& p, double omega0_scaled) {
  if (!(omega0_scaled >= 0.0))
    throw std::invalid_argument("rescaled field must be non-negative");
  FieldPoint f;
  f.omega0_scaled = omega0_scaled;
  f.omega0_ghz = omega0_scaled * p.hyperfine_ghz;
  f.b_tesla = f.omega0_ghz / p.gamma_e_ghz_per_t;
  return f;
}

bool valid_quantum_number(const SystemParams& p, double m) {
  const double mm = p.max_m();
  if (std::abs(m) > mm + 1e-9) return false;
  const double offset = mm - m; // must be a non-negative integer
  return std::abs(offset - std::llround(offset)) < 1e-9;
}

bool is_singlet_m(const SystemParams& p, double m) {
  return valid_quantum_number(p, m) && std::abs(std::abs(m) - p.max_m()) < 1e-9;
}

} // namespace sibi
