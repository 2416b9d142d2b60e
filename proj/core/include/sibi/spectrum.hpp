#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sibi {

/// Gaussian lineshape, width given as full width at half maximum in mT.
struct LineShape {
  double fwhm_mt = 0.42;

  double sigma_tesla() const; ///< fwhm / (2 sqrt(2 ln 2)), in tesla
};

enum class SpectrumMode { absorption, derivative };

/// Everything needed to reproduce a spectrum, carried with the data.
struct SpectrumMeta {
  double f_mw_ghz = 0.0;
  LineShape shape;
  SpectrumMode mode = SpectrumMode::absorption;
  std::string params_digest;
  std::optional<double> j_ghz;      ///< exchange coupling, dimer spectra only
  std::optional<double> j_mean_ghz; ///< ensemble spectra only
  std::optional<double> j_sigma_ghz;
  int clipped_lines = 0; ///< lines whose centre fell outside the axis
};

/// A stick to be convolved: resonance field and relative intensity.
struct Peak {
  double b_tesla = 0.0;
  double intensity = 0.0;
};

/// Field-swept spectrum sampled on a uniform axis.
struct SpectrumGrid {
  std::vector<double> b_axis; ///< strictly increasing, uniform step, tesla
  std::vector<double> signal;
  SpectrumMeta meta;

  double step() const;
};

/// Uniform axis with n samples spanning [lo, hi] inclusive.
std::vector<double> make_axis(double b_lo, double b_hi, int n);

/// Sum of intensity-weighted unit-area Gaussians (absorption) or their
/// analytic first derivatives (derivative mode).  Each line is evaluated to
/// +-6 sigma.  Throws std::invalid_argument when the grid step is not finer
/// than fwhm/4; lines centred outside the axis are dropped and counted in
/// meta.clipped_lines.
SpectrumGrid synthesize(const std::vector<Peak>& lines, const std::vector<double>& axis,
                        const LineShape& shape, SpectrumMode mode,
                        const SpectrumMeta& meta = {});

/// Weighted mean of spectra sharing one axis; weights are normalized
/// internally.  Throws std::invalid_argument on axis mismatch or invalid
/// weights.
SpectrumGrid ensemble_average(const std::vector<SpectrumGrid>& spectra,
                              const std::vector<double>& weights);

enum class FeatureStatus { ok, no_feature, multiple_features };

struct FeatureMeasure {
  FeatureStatus status = FeatureStatus::no_feature;
  double fwhm_mt = 0.0;
  double peak_b_tesla = 0.0;
  double peak_height = 0.0;
};

/// FWHM of the single dominant feature inside [b_lo, b_hi] in absorption
/// mode, via linear interpolation of the half-maximum crossings.  Reports
/// no_feature when nothing rises above the noise floor and
/// multiple_features when the half-maximum level is crossed more than
/// twice (the window must isolate one feature).
FeatureMeasure feature_width(const SpectrumGrid& spectrum, double b_lo, double b_hi);

/// Local maxima inside the window with height >= rel_threshold times the
/// window maximum, in ascending field order.
std::vector<Peak> find_peaks(const SpectrumGrid& spectrum, double b_lo, double b_hi,
                             double rel_threshold);

/// Trapezoidal integral of the signal over the full axis.
double integrate(const SpectrumGrid& spectrum);

} // namespace sibi
