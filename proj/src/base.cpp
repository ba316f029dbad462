#include "schubert/base.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

FinitePoset::FinitePoset(std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {
  const std::size_t n = leq_.size();
  if (n == 0) throw std::invalid_argument("empty poset");
  for (const auto& row : leq_)
    if (row.size() != n) throw std::invalid_argument("order relation is not square");
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq_[a][a]) throw std::invalid_argument("order relation is not reflexive");
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq_[a][b] && leq_[b][a]) throw std::invalid_argument("order relation is not antisymmetric");
      if (!leq_[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (leq_[b][c] && !leq_[a][c]) throw std::invalid_argument("order relation is not transitive");
    }
  }
  auto find_extreme = [&](bool lower) -> std::size_t {
    for (std::size_t a = 0; a < n; ++a) {
      bool ok = true;
      for (std::size_t b = 0; b < n && ok; ++b) ok = lower ? leq_[a][b] : leq_[b][a];
      if (ok) return a;
    }
    throw std::invalid_argument(lower ? "poset has no minimum" : "poset has no maximum");
  };
  min_ = find_extreme(true);
  max_ = find_extreme(false);
}

std::optional<std::size_t> FinitePoset::supremum(const std::vector<std::size_t>& subset) const {
  std::vector<std::size_t> upper;
  for (std::size_t a = 0; a < size(); ++a)
    if (std::all_of(subset.begin(), subset.end(), [&](std::size_t q) { return leq_[q][a]; })) upper.push_back(a);
  for (std::size_t a : upper)
    if (std::all_of(upper.begin(), upper.end(), [&](std::size_t b) { return leq_[a][b]; })) return a;
  return std::nullopt;
}

// a = sup Q with a not in Q forces Q below a, and then sup Q = a implies
// sup(strict lower set) = a. So testing the strict lower set suffices.
std::vector<std::size_t> poset_base(const FinitePoset& p) {
  std::vector<std::size_t> base;
  for (std::size_t a = 0; a < p.size(); ++a) {
    std::vector<std::size_t> below;
    for (std::size_t b = 0; b < p.size(); ++b)
      if (b != a && p.leq(b, a)) below.push_back(b);
    if (p.supremum(below) != a) base.push_back(a);
  }
  return base;
}

bool base_embeds(const FinitePoset& p, const std::vector<std::size_t>& base) {
  std::vector<std::vector<bool>> image(p.size());
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b : base) image[a].push_back(p.leq(b, a));
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t c = 0; c < p.size(); ++c) {
      bool contained = true;
      for (std::size_t t = 0; t < base.size(); ++t)
        if (image[a][t] && !image[c][t]) contained = false;
      if (contained != p.leq(a, c)) return false;
    }
  return true;
}

FinitePoset bruhat_poset(const WeylGroup& W) {
  const auto& el = W.elements();
  std::vector<std::vector<bool>> leq(el.size(), std::vector<bool>(el.size(), false));
  for (std::size_t a = 0; a < el.size(); ++a)
    for (std::size_t b = 0; b < el.size(); ++b)
      if (el[a].length() <= el[b].length()) leq[a][b] = W.bruhat_leq(el[a], el[b]);
  return FinitePoset(std::move(leq));
}

std::vector<BaseElement> weyl_base(const WeylGroup& W) {
  const auto& el = W.elements();
  std::vector<BaseElement> out;
  for (std::size_t a : poset_base(bruhat_poset(W))) {
    const auto left = W.left_descents(el[a]);
    const auto right = W.right_descents(el[a]);
    if (left.size() != 1 || right.size() != 1)
      throw std::logic_error("base element " + el[a].to_string() + " lacks unique descents");
    out.push_back({el[a], left.front(), right.front()});
  }
  return out;
}

std::vector<Bigrassmannian> bigrassmannian_typeA(int n) {
  if (n < 2) throw std::invalid_argument("bigrassmannian permutations need n >= 2");
  std::vector<Bigrassmannian> out;
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        Bigrassmannian entry{{a, b, c}, {}, {}};
        for (int v = 1; v <= a; ++v) entry.permutation.push_back(v);
        for (int v = b + 1; v <= c; ++v) entry.permutation.push_back(v);
        for (int v = a + 1; v <= b; ++v) entry.permutation.push_back(v);
        for (int v = c + 1; v <= n; ++v) entry.permutation.push_back(v);
        entry.coordinate.assign(entry.permutation.begin(), entry.permutation.begin() + (a + c - b));
        std::sort(entry.coordinate.begin(), entry.coordinate.end());
        out.push_back(std::move(entry));
      }
  return out;
}

std::vector<std::size_t> base_weights(const PluckerSystem& ps) {
  std::vector<std::size_t> out;
  for (const auto& u : weyl_base(ps.group())) out.push_back(ps.index_of_image(u.w, u.right_descent));
  return out;
}

namespace {

std::vector<bool> restrict_bits(const VanishingPattern& b, const std::vector<std::size_t>& coords) {
  std::vector<bool> out;
  for (std::size_t k : coords) out.push_back(b[k]);
  return out;
}

}  // namespace

BaseRecognizer::BaseRecognizer(const PluckerSystem& ps) : coords_(base_weights(ps)) {
  const auto& W = ps.group();
  const auto base = weyl_base(W);
  for (const auto& w : W.elements()) {
    // Lower set of w in the base, which is the generic restriction.
    std::vector<bool> key;
    for (const auto& u : base) key.push_back(W.bruhat_leq(u.w, w));
    if (!table_.emplace(key, w).second) throw std::logic_error("base does not separate the group");
  }
}

std::optional<WeylElement> BaseRecognizer::recognize(const std::vector<bool>& bits) const {
  if (bits.size() != coords_.size()) throw std::invalid_argument("bit vector length does not match the base");
  if (auto it = table_.find(bits); it != table_.end()) return it->second;
  return std::nullopt;
}

std::optional<WeylElement> BaseRecognizer::recognize(const std::string& bits) const {
  std::vector<bool> v;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit string must contain only 0 and 1");
    v.push_back(c == '1');
  }
  return recognize(v);
}

bool separates_generic(const PluckerSystem& ps, const std::vector<std::size_t>& coords) {
  std::set<std::vector<bool>> seen;
  for (const auto& w : ps.group().elements())
    if (!seen.insert(restrict_bits(generic_pattern(ps, w), coords)).second) return false;
  return true;
}

bool embeds_generic(const PluckerSystem& ps, const std::vector<std::size_t>& coords) {
  const auto& W = ps.group();
  const auto& els = W.elements();
  std::vector<std::vector<bool>> rows;
  for (const auto& w : els) rows.push_back(restrict_bits(generic_pattern(ps, w), coords));
  for (std::size_t a = 0; a < els.size(); ++a)
    for (std::size_t b = 0; b < els.size(); ++b) {
      bool subset = true;
      for (std::size_t t = 0; subset && t < coords.size(); ++t) subset = !rows[a][t] || rows[b][t];
      if (subset != W.bruhat_leq(els[a], els[b])) return false;
    }
  return true;
}

bool minimality_check(const PluckerSystem& ps) {
  const auto coords = base_weights(ps);
  if (!embeds_generic(ps, coords)) return false;
  for (std::size_t drop = 0; drop < coords.size(); ++drop) {
    auto fewer = coords;
    fewer.erase(fewer.begin() + drop);
    if (embeds_generic(ps, fewer)) return false;
  }
  return true;
}

}  // namespace schubert
