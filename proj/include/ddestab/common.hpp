#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace ddestab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Margin reported by a passing verdict whose inequalities are all non-strict.
inline constexpr double kUnconstrainedMargin = std::numeric_limits<double>::max();

// Guard band applied when deciding strict inequalities from conservative
// (non-exact) bounds: a PASS must survive the bound's own slack.
inline constexpr double kSoundGuard = 1e-9;

enum class Soundness { Exact, ConservativeSound, Heuristic };

enum class BoundDirection { UpperBound, LowerBound };

inline const char* to_string(Soundness s) {
  switch (s) {
    case Soundness::Exact: return "Exact";
    case Soundness::ConservativeSound: return "ConservativeSound";
    default: return "Heuristic";
  }
}

inline Soundness weaker(Soundness a, Soundness b) {
  return static_cast<int>(a) >= static_cast<int>(b) ? a : b;
}

// Scan window over which halfline extremes of non-periodic descriptors are
// estimated. The defaults follow the host equation: t_scan = t0 + 10*tau_max,
// width = 100*tau_max.
struct ScanPolicy {
  double t0 = 0.0;
  double tau_max = 1.0;
  std::optional<double> t_scan_override;
  std::optional<double> width_override;
  int lattice = 2048;
  int refine_rounds = 48;

  double t_scan() const {
    if (t_scan_override) return *t_scan_override;
    return t0 + 10.0 * tau_max;
  }
  double width() const {
    if (width_override) return *width_override;
    return std::max(10.0, 100.0 * tau_max);
  }
  static ScanPolicy for_equation(double t0, double tau_max) {
    ScanPolicy p;
    p.t0 = t0;
    p.tau_max = std::max(tau_max, 0.0);
    return p;
  }
};

// Half-open evaluation window: [start, inf) or [start, *end].
struct Window {
  double start = 0.0;
  std::optional<double> end;

  static Window halfline(double from) { return Window{from, std::nullopt}; }
  static Window segment(double a, double b) { return Window{a, b}; }
  bool is_segment() const { return end.has_value(); }
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace ddestab
