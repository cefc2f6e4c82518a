#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rnw/grid.hpp"

namespace rnw::cli {

enum class Family { massive_nw, moses_tuan, massless_even, massless_odd, classical_nw3d, classical_mt };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Family parse_family(const std::string& s);
std::string to_string(Family f);
bool is_massive(Family f);
bool is_massless(Family f);
bool is_classical(Family f);

struct RunConfig {
  std::string command;
  std::string family = "massive-nw";
  std::optional<double> mass;
  std::optional<double> nu;
  std::optional<std::string> L;  // "512", "256pi"
  std::optional<std::size_t> N;
  double eps_sin = 1e-3;
  std::string window = "50:400";
  std::string fit_model = "power";
  std::string out;     // CSV path, empty = stdout
  std::string report;  // JSON path, empty = stdout (or none for CSV commands)
  std::string input;   // CSV for decay-fit
  std::string column = "V";
  std::vector<double> c_values;
  std::vector<double> couplings{0.0, 0.5, 1.0, 1.5, 2.0};
  bool allow_uncertified = false;
};

// Checks that exactly the parameter the family needs is present.
void validate(const RunConfig& cfg);

// "512", "1e3", "256pi", "0.5pi"; throws ConfigError.
long double parse_length(const std::string& s);

// Grid from --L/--N when given, else the default.
GridSpec resolve_grid(const RunConfig& cfg, const GridSpec& fallback);

// 17 significant digits, locale independent.
std::string fmt(double v);

// temp file + rename; an empty path writes to stdout.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace rnw::cli
