#pragma once

// Descriptions of Schubert cells and varieties by vanishing and
// non-vanishing of Pluecker coordinates. Weights are global indices into a
// PluckerSystem.

#include <string>
#include <utility>
#include <vector>

#include "schubert/patterns.hpp"

namespace schubert {

struct CellDescription {
  WeylElement w;
  std::vector<std::size_t> equalities;    // p = 0
  std::vector<std::size_t> inequalities;  // p != 0
  WeightOrdering ordering = WeightOrdering::identity(1);
  /// Candidate pairs (w.omega_i, gamma) that turned out incomparable (type D).
  std::vector<std::pair<std::size_t, std::size_t>> incomparable;
};

struct VarietyDescription {
  WeylElement w;
  std::vector<std::size_t> equalities;
};

/// gamma with gamma not <= w.omega_level(gamma).
VarietyDescription variety_equations(const PluckerSystem& ps, const WeylElement& w);

/// All r inequalities p_{w omega_i} != 0, and p_gamma = 0 for gamma in
/// w W_[k,r] omega_{node(k)} strictly above w omega_{node(k)}.
CellDescription cell_description_general(const PluckerSystem& ps, const WeylElement& w,
                                         const WeightOrdering& ordering);

/// Short description; throws std::invalid_argument unless the ordering is
/// economical.
CellDescription cell_description_economical(const PluckerSystem& ps, const WeylElement& w,
                                            const WeightOrdering& ordering);

/// Permutation form: p_{w([1,i-1] + j)} = 0 for i < j with w(i) < w(j), and
/// p_{w([1,i])} != 0 when some j > i has w(j) < w(i).
CellDescription cell_description_typeA(const PluckerSystem& ps, const WeylElement& w);

/// Type D_r under type_d_ordering(r), with the extra equations for
/// levels i <= r - 3.
CellDescription cell_description_typeD(const PluckerSystem& ps, const WeylElement& w);

/// Picks typeA, typeD or economical (standard ordering) by type.
CellDescription cell_description(const PluckerSystem& ps, const WeylElement& w);

bool verify_description(const CellDescription& d, const VanishingPattern& b);
bool verify_variety(const VarietyDescription& d, const VanishingPattern& b);

/// "zero: p13, p23; nonzero: p2"
std::string format_description(const PluckerSystem& ps, const CellDescription& d);
std::string description_to_json(const PluckerSystem& ps, const CellDescription& d);
std::string format_variety(const PluckerSystem& ps, const VarietyDescription& d);
std::string variety_to_json(const PluckerSystem& ps, const VarietyDescription& d);

}  // namespace schubert
