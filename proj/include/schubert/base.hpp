#pragma once

// Bases of finite posets and of Weyl groups under the Bruhat order, and the
// bigrassmannian Pluecker weights they index.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "schubert/patterns.hpp"

namespace schubert {

/// Finite poset given by its order relation. Validated on construction:
/// reflexive, antisymmetric, transitive, with unique minimum and maximum.
class FinitePoset {
 public:
  explicit FinitePoset(std::vector<std::vector<bool>> leq);

  std::size_t size() const { return leq_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  std::size_t minimum() const { return min_; }
  std::size_t maximum() const { return max_; }

  /// Least upper bound, if one exists.
  std::optional<std::size_t> supremum(const std::vector<std::size_t>& subset) const;

 private:
  std::vector<std::vector<bool>> leq_;
  std::size_t min_ = 0, max_ = 0;
};

/// Elements that are not the supremum of any subset avoiding them.
std::vector<std::size_t> poset_base(const FinitePoset& p);

/// a -> {b in base : b <= a} is injective and order-reflecting.
bool base_embeds(const FinitePoset& p, const std::vector<std::size_t>& base);

/// Bruhat order on W.elements().
FinitePoset bruhat_poset(const WeylGroup& W);

struct BaseElement {
  WeylElement w;
  int left_descent = 0;
  int right_descent = 0;
};

/// Throws std::logic_error if some base element has more than one left or
/// right descent.
std::vector<BaseElement> weyl_base(const WeylGroup& W);

struct Bigrassmannian {
  std::array<int, 3> triple;     // 0 <= a < b < c <= n
  std::vector<int> permutation;  // one-line notation
  std::vector<int> coordinate;   // [1,a] + [b+1,c]
};

std::vector<Bigrassmannian> bigrassmannian_typeA(int n);

/// One Pluecker weight u.omega_i per base element u with right descent i,
/// in the order of weyl_base.
std::vector<std::size_t> base_weights(const PluckerSystem& ps);

/// Inverts w -> restriction of generic_pattern(w) to base_weights.
class BaseRecognizer {
 public:
  explicit BaseRecognizer(const PluckerSystem& ps);

  const std::vector<std::size_t>& coords() const { return coords_; }
  /// bits[t] refers to coords()[t].
  std::optional<WeylElement> recognize(const std::vector<bool>& bits) const;
  std::optional<WeylElement> recognize(const std::string& bits) const;

 private:
  std::vector<std::size_t> coords_;
  std::map<std::vector<bool>, WeylElement> table_;
};

/// w -> restriction of generic_pattern(w) to coords is injective.
bool separates_generic(const PluckerSystem& ps, const std::vector<std::size_t>& coords);
/// The same map is an order embedding of W into subsets of coords.
bool embeds_generic(const PluckerSystem& ps, const std::vector<std::size_t>& coords);

/// base_weights gives an order embedding and no single deletion does.
/// Injectivity alone can survive a deletion (B2, G2).
bool minimality_check(const PluckerSystem& ps);

}  // namespace schubert
