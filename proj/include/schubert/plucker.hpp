#pragma once

// Pluecker weights: the orbits W.omega_i, their Bruhat order, the root sets
// R(i), and economical indices and orderings of fundamental weights.

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "schubert/weyl.hpp"

namespace schubert {

struct PluckerWeight {
  int level = 0;
  WeightCoords coords;
  WeylElement min_rep;

  friend bool operator==(const PluckerWeight& a, const PluckerWeight& b) {
    return a.level == b.level && a.coords == b.coords;
  }
};

/// A linear order on the fundamental weights: position k (1-based) holds
/// node node_at(k).
class WeightOrdering {
 public:
  explicit WeightOrdering(std::vector<int> nodes);
  static WeightOrdering identity(int rank);

  int rank() const { return static_cast<int>(nodes_.size()); }
  int node_at(int position) const { return nodes_.at(position - 1); }
  int position_of(int node) const;
  /// Nodes at positions >= position; generates W_[position, r].
  NodeSet tail(int position) const;
  const std::vector<int>& nodes() const { return nodes_; }
  std::string to_string() const;

  friend bool operator==(const WeightOrdering&, const WeightOrdering&) = default;

 private:
  std::vector<int> nodes_;
};

/// Orbit of omega_i under a parabolic subgroup, with the minimal element of
/// W_J carrying omega_i to each weight.
struct CosetOrbitEntry {
  WeightCoords weight;
  WeylElement element;
};

class PluckerSystem {
 public:
  explicit PluckerSystem(std::shared_ptr<const WeylGroup> group);
  explicit PluckerSystem(const CartanDatum& datum);

  const WeylGroup& group() const { return *group_; }
  std::shared_ptr<const WeylGroup> group_ptr() const { return group_; }
  int rank() const { return group_->rank(); }

  /// Total number of Pluecker weights over all levels.
  std::size_t size() const { return weights_.size(); }
  const PluckerWeight& weight(std::size_t index) const { return weights_.at(index); }
  const std::vector<PluckerWeight>& all_weights() const { return weights_; }

  /// Global indices [first, first + count) of level i, sorted by length of
  /// the minimal representative and then by its word.
  std::size_t level_offset(int level) const { return offsets_.at(level - 1); }
  std::size_t level_size(int level) const { return offsets_.at(level) - offsets_.at(level - 1); }
  std::vector<PluckerWeight> orbit(int level) const;

  std::size_t index_of(const PluckerWeight& gamma) const;
  std::size_t index_of(int level, const WeightCoords& coords) const;
  std::optional<std::size_t> find(int level, const WeightCoords& coords) const;
  /// Index of w.omega_i.
  std::size_t index_of_image(const WeylElement& w, int level) const;

  /// Bruhat order on a single orbit (indices must share a level).
  bool leq(std::size_t a, std::size_t b) const;
  bool orbit_bruhat_leq(const PluckerWeight& gamma, const PluckerWeight& delta) const;

  CosetOrbitEntry fundamental(int level) const;
  std::vector<CosetOrbitEntry> coset_orbit(int level, const NodeSet& parabolic) const;

  // R(i) and mu.
  std::vector<Root> roots_R(int node) const;
  std::vector<Root> roots_R(int node, const NodeSet& parabolic) const;
  int mu(const Root& alpha, const WeightOrdering& ordering) const;
  /// alpha -> s_alpha omega_i on R(i), as global weight indices.
  std::vector<std::pair<Root, std::size_t>> reflection_weight_map(int node) const;

  bool is_economical_index(int node) const;
  bool is_economical_for(int node, const NodeSet& parabolic) const;
  bool is_economical_ordering(const WeightOrdering& ordering) const;
  bool linear_order_check(int level) const;
  WeightOrdering standard_ordering() const;

  // Type A: weights of level i are i-subsets of [1, n].
  std::vector<int> subset(std::size_t index) const;
  std::size_t index_of_subset(std::vector<int> subset) const;

  /// "13" for type A (comma-separated when n > 9), "(2|s1.s2)" otherwise.
  std::string label(std::size_t index) const;
  std::size_t parse_label(const std::string& text) const;

 private:
  void build();

  std::shared_ptr<const WeylGroup> group_;
  std::vector<PluckerWeight> weights_;
  std::vector<std::size_t> offsets_;
  std::vector<std::unordered_map<WeightCoords, std::size_t, VectorHash>> lookup_;
  std::vector<std::vector<std::vector<bool>>> leq_;  // per level, local indices
};

/// Ordering used for type D descriptions: 1, ..., r-3, r-1, r-2, r in
/// Bourbaki labels, so that position r-1 is the branch node.
WeightOrdering type_d_ordering(int rank);

}  // namespace schubert
