#include "schubert/cells.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace schubert {

namespace {

WeightCoords omega(int rank, int node) {
  WeightCoords v(rank, 0);
  v[node - 1] = 1;
  return v;
}

bool strictly_above(const PluckerSystem& ps, std::size_t gamma, std::size_t base) {
  return gamma != base && ps.leq(base, gamma);
}

void normalize(std::vector<std::size_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool is_positive(const std::vector<int>& expansion) {
  return std::any_of(expansion.begin(), expansion.end(), [](int c) { return c > 0; });
}

// Equalities w s_alpha omega_mu(alpha) for wα > 0 and inequalities w omega_i
// for levels hit by some alpha with wα < 0.
void reflection_sets(const PluckerSystem& ps, const WeylElement& w, const WeightOrdering& ordering,
                     CellDescription& d) {
  const auto& W = ps.group();
  std::vector<bool> needs_inequality(ps.rank() + 1, false);
  for (const auto& alpha : W.positive_roots()) {
    const int i = ps.mu(alpha, ordering);
    if (is_positive(W.act_on_root(w, alpha.expansion))) {
      const auto gamma = W.act(w, W.reflect_by_root(alpha, omega(ps.rank(), i)));
      const std::size_t idx = ps.index_of(i, gamma);
      if (std::find(d.equalities.begin(), d.equalities.end(), idx) != d.equalities.end())
        throw std::logic_error("economical description: repeated equation weight");
      d.equalities.push_back(idx);
    } else {
      needs_inequality[i] = true;
    }
  }
  for (int i = 1; i <= ps.rank(); ++i)
    if (needs_inequality[i]) d.inequalities.push_back(ps.index_of_image(w, i));
}

}  // namespace

VarietyDescription variety_equations(const PluckerSystem& ps, const WeylElement& w) {
  VarietyDescription d{w, {}};
  for (int i = 1; i <= ps.rank(); ++i) {
    const std::size_t top = ps.index_of_image(w, i);
    for (std::size_t k = ps.level_offset(i); k < ps.level_offset(i) + ps.level_size(i); ++k)
      if (!ps.leq(k, top)) d.equalities.push_back(k);
  }
  return d;
}

CellDescription cell_description_general(const PluckerSystem& ps, const WeylElement& w,
                                         const WeightOrdering& ordering) {
  if (ordering.rank() != ps.rank()) throw std::invalid_argument("ordering rank mismatch");
  const auto& W = ps.group();
  CellDescription d{w, {}, {}, ordering, {}};
  for (int pos = 1; pos <= ps.rank(); ++pos) {
    const int i = ordering.node_at(pos);
    const std::size_t base = ps.index_of_image(w, i);
    d.inequalities.push_back(base);
    for (const auto& entry : ps.coset_orbit(i, ordering.tail(pos))) {
      const std::size_t gamma = ps.index_of(i, W.act(w, entry.weight));
      if (strictly_above(ps, gamma, base)) d.equalities.push_back(gamma);
    }
  }
  normalize(d.equalities);
  normalize(d.inequalities);
  return d;
}

CellDescription cell_description_economical(const PluckerSystem& ps, const WeylElement& w,
                                            const WeightOrdering& ordering) {
  if (!ps.is_economical_ordering(ordering))
    throw std::invalid_argument("ordering " + ordering.to_string() + " is not economical for " +
                                ps.group().name());
  CellDescription d{w, {}, {}, ordering, {}};
  reflection_sets(ps, w, ordering, d);
  normalize(d.equalities);
  normalize(d.inequalities);
  return d;
}

CellDescription cell_description_typeA(const PluckerSystem& ps, const WeylElement& w) {
  const auto& W = ps.group();
  const auto perm = W.to_permutation(w);
  const int n = static_cast<int>(perm.size());
  CellDescription d{w, {}, {}, WeightOrdering::identity(ps.rank()), {}};
  for (int i = 1; i < n; ++i) {
    std::vector<int> prefix(perm.begin(), perm.begin() + (i - 1));
    bool descent_after = false;
    for (int j = i + 1; j <= n; ++j) {
      if (perm[j - 1] < perm[i - 1]) descent_after = true;
      if (perm[i - 1] < perm[j - 1]) {
        auto s = prefix;
        s.push_back(perm[j - 1]);
        d.equalities.push_back(ps.index_of_subset(s));
      }
    }
    if (descent_after) {
      std::vector<int> s(perm.begin(), perm.begin() + i);
      d.inequalities.push_back(ps.index_of_subset(s));
    }
  }
  normalize(d.equalities);
  normalize(d.inequalities);
  return d;
}

CellDescription cell_description_typeD(const PluckerSystem& ps, const WeylElement& w) {
  const auto& W = ps.group();
  if (W.type_letter() != 'D') throw std::invalid_argument("type D description requested for " + W.name());
  const int r = ps.rank();
  CellDescription d{w, {}, {}, type_d_ordering(r), {}};
  reflection_sets(ps, w, d.ordering, d);
  for (int i = 1; i <= r - 3; ++i) {
    AmbientVector v(W.datum().ambient_dimension, 0);
    for (int k = 0; k < i - 1; ++k) v[k] = 1;
    v[i - 1] = -1;
    const std::size_t gamma = ps.index_of(i, W.act(w, W.from_ambient(v)));
    const std::size_t base = ps.index_of_image(w, i);
    if (strictly_above(ps, gamma, base))
      d.equalities.push_back(gamma);
    else if (!ps.leq(gamma, base))
      d.incomparable.emplace_back(base, gamma);
  }
  normalize(d.equalities);
  normalize(d.inequalities);
  return d;
}

CellDescription cell_description(const PluckerSystem& ps, const WeylElement& w) {
  switch (ps.group().type_letter()) {
    case 'A': return cell_description_typeA(ps, w);
    case 'D': return cell_description_typeD(ps, w);
    default: return cell_description_economical(ps, w, ps.standard_ordering());
  }
}

bool verify_description(const CellDescription& d, const VanishingPattern& b) {
  for (std::size_t k : d.equalities)
    if (b[k]) return false;
  for (std::size_t k : d.inequalities)
    if (!b[k]) return false;
  return true;
}

bool verify_variety(const VarietyDescription& d, const VanishingPattern& b) {
  return std::none_of(d.equalities.begin(), d.equalities.end(), [&](std::size_t k) { return b[k]; });
}

namespace {

std::string joined(const PluckerSystem& ps, const std::vector<std::size_t>& idx) {
  if (idx.empty()) return "-";
  std::string s;
  for (std::size_t k : idx) {
    if (!s.empty()) s += ", ";
    s += "p" + ps.label(k);
  }
  return s;
}

nlohmann::json labels(const PluckerSystem& ps, const std::vector<std::size_t>& idx) {
  auto out = nlohmann::json::array();
  for (std::size_t k : idx) out.push_back("p" + ps.label(k));
  return out;
}

}  // namespace

std::string format_description(const PluckerSystem& ps, const CellDescription& d) {
  return "zero: " + joined(ps, d.equalities) + "; nonzero: " + joined(ps, d.inequalities);
}

std::string description_to_json(const PluckerSystem& ps, const CellDescription& d) {
  nlohmann::json doc{{"w", ps.group().format(d.w)},
                     {"zero", labels(ps, d.equalities)},
                     {"nonzero", labels(ps, d.inequalities)},
                     {"ordering", d.ordering.nodes()}};
  if (!d.incomparable.empty()) {
    auto pairs = nlohmann::json::array();
    for (auto [a, b] : d.incomparable) pairs.push_back({"p" + ps.label(a), "p" + ps.label(b)});
    doc["incomparable"] = pairs;
  }
  return doc.dump(2);
}

std::string format_variety(const PluckerSystem& ps, const VarietyDescription& d) {
  return "zero: " + joined(ps, d.equalities);
}

std::string variety_to_json(const PluckerSystem& ps, const VarietyDescription& d) {
  return nlohmann::json{{"w", ps.group().format(d.w)}, {"zero", labels(ps, d.equalities)}}.dump(2);
}

}  // namespace schubert
