#include "config.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <unistd.h>

#include "rnw/errors.hpp"

namespace rnw::cli {

Family parse_family(const std::string& s) {
  if (s == "massive-nw") return Family::massive_nw;
  if (s == "moses-tuan") return Family::moses_tuan;
  if (s == "massless-even") return Family::massless_even;
  if (s == "massless-odd") return Family::massless_odd;
  if (s == "classical-nw3d") return Family::classical_nw3d;
  if (s == "classical-mt") return Family::classical_mt;
  throw ConfigError("unknown family '" + s + "'");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::massive_nw: return "massive-nw";
    case Family::moses_tuan: return "moses-tuan";
    case Family::massless_even: return "massless-even";
    case Family::massless_odd: return "massless-odd";
    case Family::classical_nw3d: return "classical-nw3d";
    case Family::classical_mt: return "classical-mt";
  }
  return "?";
}

bool is_massive(Family f) { return f == Family::massive_nw || f == Family::moses_tuan; }
bool is_massless(Family f) { return f == Family::massless_even || f == Family::massless_odd; }
bool is_classical(Family f) { return f == Family::classical_nw3d || f == Family::classical_mt; }

void validate(const RunConfig& cfg) {
  const Family f = parse_family(cfg.family);
  // a decay fit of an existing CSV needs no model parameters
  const bool from_file = cfg.command == "decay-fit" && !cfg.input.empty();
  if (from_file) {
    if (cfg.column.empty()) throw ConfigError("--column is empty");
  } else if (is_massive(f)) {
    if (!cfg.mass) throw ConfigError(cfg.family + " needs --mass");
    if (cfg.nu) throw ConfigError(cfg.family + " takes --mass, not --nu");
    if (!(*cfg.mass > 0.0)) throw ConfigError("--mass must be > 0");
  } else if (is_massless(f)) {
    if (!cfg.nu) throw ConfigError(cfg.family + " needs --nu");
    if (cfg.mass) throw ConfigError(cfg.family + " takes --nu, not --mass");
  } else if (cfg.mass || cfg.nu) {
    throw ConfigError(cfg.family + " takes neither --mass nor --nu");
  }
  if (!(cfg.eps_sin > 0.0 && cfg.eps_sin < 0.5)) throw ConfigError("--eps-sin must be in (0, 0.5)");
  if (cfg.fit_model != "power" && cfg.fit_model != "power_log")
    throw ConfigError("--fit-model must be power or power_log");
}

long double parse_length(const std::string& s) {
  std::string num = s;
  long double scale = 1.0L;
  if (num.size() > 2 && num.compare(num.size() - 2, 2, "pi") == 0) {
    num.resize(num.size() - 2);
    scale = std::numbers::pi_v<long double>;
  }
  try {
    std::size_t used = 0;
    const long double v = std::stold(num, &used);
    if (used != num.size() || !(v > 0.0L)) throw ConfigError("bad length '" + s + "'");
    return v * scale;
  } catch (const std::logic_error&) {
    throw ConfigError("bad length '" + s + "'");
  }
}

GridSpec resolve_grid(const RunConfig& cfg, const GridSpec& fallback) {
  const long double L = cfg.L ? parse_length(*cfg.L) : fallback.half_width;
  const std::size_t N = cfg.N ? *cfg.N : fallback.N;
  return make_grid(L, N);
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, r.ptr);
}

void write_atomic(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  const std::filesystem::path target(path);
  const std::filesystem::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw ConfigError("cannot write '" + tmp.string() + "'");
    os << content;
    if (!os.flush()) throw ConfigError("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw ConfigError("cannot move output into '" + path + "': " + ec.message());
  }
}

}  // namespace rnw::cli
