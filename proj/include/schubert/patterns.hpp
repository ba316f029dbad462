#pragma once

// Vanishing patterns: one bit per Pluecker weight of the active group.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "schubert/plucker.hpp"

namespace schubert {

/// bits[k] refers to PluckerSystem::weight(k); 1 means "does not vanish".
struct VanishingPattern {
  std::vector<bool> bits;

  bool operator[](std::size_t k) const { return bits[k]; }
  friend bool operator==(const VanishingPattern&, const VanishingPattern&) = default;
};

enum class AcceptFailure { none, empty_level, no_unique_max, no_common_w };

std::string to_string(AcceptFailure failure);

struct AcceptabilityReport {
  bool accepted = false;
  /// Global weight index of the unique maximal 1-bit, per level (1-based
  /// position k - 1). Filled up to the first failing level.
  std::vector<std::optional<std::size_t>> per_level_max;
  std::optional<WeylElement> witness_w;
  AcceptFailure failure_reason = AcceptFailure::none;
  int failing_level = 0;
};

AcceptabilityReport check_acceptable(const PluckerSystem& ps, const VanishingPattern& b);

/// bit(gamma) = 1 iff gamma <= w.omega_i.
VanishingPattern generic_pattern(const PluckerSystem& ps, const WeylElement& w);

/// 1 at each w.omega_i, 0 wherever gamma is not below w.omega_i, and an
/// independent Bernoulli(p_one) bit strictly below.
VanishingPattern random_acceptable(const PluckerSystem& ps, const WeylElement& w,
                                   std::uint64_t seed, double p_one = 0.5);

/// Support of the pattern of the coordinate flag pi_w: exactly the weights
/// w.omega_i.
VanishingPattern coordinate_pattern(const PluckerSystem& ps, const WeylElement& w);

/// Restriction to an ordered list of weight indices, as a bit string
/// ("1011", first coordinate leftmost).
std::string restrict_pattern(const VanishingPattern& b, const std::vector<std::size_t>& coords);

struct RestrictedPattern {
  std::string bits;
  /// Cells (by witness) of the full patterns restricting to bits.
  std::vector<WeylElement> cells;
};

struct RealizableSet {
  std::vector<std::size_t> coords;
  std::vector<RestrictedPattern> patterns;  // sorted by bit string
  bool certified = false;                   // false: sampled lower bound
};

/// Restrictions of vanishing_pattern(x) over all flags x in C^n (type A,
/// n <= 4). Exact for n = 3; for n = 4 a sampled subset.
RealizableSet realizable_restricted_patterns(const PluckerSystem& ps,
                                             const std::vector<std::size_t>& coords,
                                             std::uint64_t seed = 1);

/// All full vanishing patterns of complete flags in C^3, each certified by
/// an explicit rational flag.
std::vector<VanishingPattern> realizable_full_patterns_n3(const PluckerSystem& ps);

struct PatternPoset {
  std::vector<std::string> vertices;  // bit strings, sorted
  std::vector<std::string> cell_labels;
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper)
  std::vector<std::string> coord_labels;

  std::string to_dot() const;
  std::string to_json() const;
};

/// Bitwise dominance on the realizable set, with Hasse covers.
PatternPoset pattern_poset(const PluckerSystem& ps, const RealizableSet& set);

}  // namespace schubert
