#pragma once

#include <string>
#include <vector>

#include "sibi/dimer.hpp"
#include "sibi/doublet.hpp"
#include "sibi/params.hpp"
#include "sibi/spectrum.hpp"
#include "sibi/transitions.hpp"

namespace sibi {

/// Thrown on filesystem failures; the CLI maps it to exit code 2.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Number formatted with 9 significant digits (the field-value convention
/// for CSV output).
std::string format_sig9(double x);

/// JSON document {"A_GHz":..., "delta":..., "I2":..., "gamma_e_GHz_per_T":...}.
std::string params_to_json(const SystemParams& p);
SystemParams params_from_json(const std::string& text);
SystemParams params_from_json_file(const std::string& path);

/// CSV with header B_T,intensity,from,to,kind.
std::string lines_to_csv(const LineList& list);
std::string lines_to_csv(const DimerLineList& list);
std::string lines_to_json(const LineList& list, const SystemParams& p);
std::string lines_to_json(const DimerLineList& list, const SystemParams& p);

/// CSV with header B_T,signal; JSON envelope carries the metadata.
std::string spectrum_to_csv(const SpectrumGrid& grid);
std::string spectrum_to_json(const SpectrumGrid& grid);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace sibi
