#include "schubert/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "schubert/flags.hpp"

namespace schubert {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int t = 1; t <= k; ++t) r = r * static_cast<std::uint64_t>(n - k + t) / static_cast<std::uint64_t>(t);
  return r;
}

namespace {

Subset prefix_set(const Permutation& u, int i) {
  Subset s(u.begin(), u.begin() + i);
  std::sort(s.begin(), s.end());
  return s;
}

// Componentwise comparison of sorted subsets of equal size.
bool subset_leq(const Subset& a, const Subset& b) {
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t] > b[t]) return false;
  return true;
}

std::vector<Subset> k_subsets(const std::vector<int>& pool, int k) {
  std::vector<Subset> out;
  std::vector<bool> pick(pool.size(), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Subset s;
    for (std::size_t t = 0; t < pool.size(); ++t)
      if (pick[t]) s.push_back(pool[t]);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::string subset_label(const Subset& s) {
  std::string out;
  for (int v : s) out += std::to_string(v);
  return out;
}

}  // namespace

WitnessFamily construct_witness_family(int k) {
  if (k < 1 || 4 * k > 12) throw std::invalid_argument("witness family is built for 1 <= k <= 3");
  WitnessFamily f;
  f.k = k;
  f.n = 4 * k;
  for (int v = 2 * k; v >= 1; --v) f.w.push_back(v);
  for (int v = 4 * k; v > 2 * k; --v) f.w.push_back(v);
  std::vector<int> low(2 * k), high(2 * k);
  std::iota(low.begin(), low.end(), 1);
  std::iota(high.begin(), high.end(), 2 * k + 1);
  for (const auto& A : k_subsets(low, k))
    for (const auto& B : k_subsets(high, k)) {
      Permutation u(A.begin(), A.end());
      u.insert(u.end(), B.begin(), B.end());
      for (int v : low)
        if (!std::binary_search(A.begin(), A.end(), v)) u.push_back(v);
      for (int v : high)
        if (!std::binary_search(B.begin(), B.end(), v)) u.push_back(v);
      f.U.push_back(std::move(u));
    }
  return f;
}

WitnessReport verify_witness_family(const WitnessFamily& f) {
  WitnessReport r;
  r.family = f;
  const int k = f.k, n = f.n;
  r.bound = binomial(2 * k, k);
  r.codimension = static_cast<std::uint64_t>(n / 2) * static_cast<std::uint64_t>(n / 2);

  r.property1 = std::none_of(f.U.begin(), f.U.end(), [&](const Permutation& u) { return ehresmann_leq(u, f.w); });
  std::set<Permutation> distinct(f.U.begin(), f.U.end());
  r.property2 = distinct.size() == f.U.size() && f.U.size() == r.bound * r.bound;

  r.property3 = true;
  r.case_counts = true;
  for (int i = 1; i < n; ++i) {
    std::map<Subset, std::uint64_t> counts;
    for (const auto& u : f.U) ++counts[prefix_set(u, i)];
    const Subset top = prefix_set(f.w, i);
    for (const auto& [I, count] : counts) {
      if (subset_leq(I, top)) continue;
      if (i <= k || i >= 3 * k) r.case_counts = false;  // such prefixes are always below w
      r.max_per_subset = std::max(r.max_per_subset, count);
      if (count > r.bound) r.property3 = false;
      // Case 1 (l = i - k): B is fixed up to its k - l largest elements.
      // Case 2 (l = i - 2k): A lies inside the (k + l)-set I and [1,2k].
      const bool within = i <= 2 * k ? count == binomial(4 * k - I.back(), 2 * k - i)
                                     : count <= binomial(i - k, k);
      if (!within || count >= r.bound) r.case_counts = false;
    }
  }
  return r;
}

std::string WitnessReport::to_json() const {
  nlohmann::json doc{{"k", family.k},
                     {"n", family.n},
                     {"w", format_permutation(family.w)},
                     {"size_U", family.U.size()},
                     {"lower_bound", bound},
                     {"codimension", codimension},
                     {"max_members_per_subset", max_per_subset},
                     {"property1", property1},
                     {"property2", property2},
                     {"property3", property3},
                     {"case_counts", case_counts}};
  auto members = nlohmann::json::array();
  for (const auto& u : family.U) members.push_back(format_permutation(u));
  doc["U"] = members;
  return doc.dump(2);
}

HittingSetResult defining_set_lower_bound(const Permutation& w) {
  const int n = static_cast<int>(w.size());
  if (n < 2 || n > 7) throw std::invalid_argument("exact hitting-set search supports 2 <= n <= 7");
  auto sorted = w;
  std::sort(sorted.begin(), sorted.end());
  for (int v = 1; v <= n; ++v)
    if (sorted[v - 1] != v) throw std::invalid_argument("not a permutation of [1, n]");
  std::map<Subset, int> ids;
  std::vector<Subset> universe;
  std::vector<std::vector<int>> constraints;
  Permutation u(n);
  std::iota(u.begin(), u.end(), 1);
  do {
    std::vector<int> options;
    for (int i = 1; i < n; ++i) {
      auto I = prefix_set(u, i);
      if (subset_leq(I, prefix_set(w, i))) continue;
      auto [it, inserted] = ids.emplace(I, static_cast<int>(universe.size()));
      if (inserted) universe.push_back(I);
      options.push_back(it->second);
    }
    if (!options.empty()) {
      std::sort(options.begin(), options.end());
      constraints.push_back(std::move(options));
    }
  } while (std::next_permutation(u.begin(), u.end()));

  // Drop duplicates and constraints implied by a smaller one.
  std::sort(constraints.begin(), constraints.end(),
            [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  constraints.erase(std::unique(constraints.begin(), constraints.end()), constraints.end());
  std::vector<std::vector<int>> kept;
  for (const auto& c : constraints) {
    bool implied = std::any_of(kept.begin(), kept.end(), [&](const std::vector<int>& s) {
      return std::includes(c.begin(), c.end(), s.begin(), s.end());
    });
    if (!implied) kept.push_back(c);
  }

  std::vector<int> chosen, best;
  int best_size = static_cast<int>(universe.size()) + 1;
  std::vector<bool> in_choice(universe.size(), false);
  std::function<void()> branch = [&]() {
    if (static_cast<int>(chosen.size()) >= best_size) return;
    const std::vector<int>* open = nullptr;
    for (const auto& c : kept) {
      if (std::any_of(c.begin(), c.end(), [&](int e) { return in_choice[e]; })) continue;
      if (!open || c.size() < open->size()) open = &c;
    }
    if (!open) {
      best_size = static_cast<int>(chosen.size());
      best = chosen;
      return;
    }
    if (static_cast<int>(chosen.size()) + 1 >= best_size) return;
    for (int e : *open) {
      in_choice[e] = true;
      chosen.push_back(e);
      branch();
      chosen.pop_back();
      in_choice[e] = false;
    }
  };
  branch();
  HittingSetResult result;
  result.size = kept.empty() ? 0 : best_size;
  for (int e : best) result.example.push_back(universe[e]);
  std::sort(result.example.begin(), result.example.end());
  return result;
}

int variety_equation_count(const PluckerSystem& ps, const WeylElement& w) {
  int count = 0;
  for (int i = 1; i <= ps.rank(); ++i) {
    const std::size_t top = ps.index_of_image(w, i);
    for (std::size_t g = ps.level_offset(i); g < ps.level_offset(i) + ps.level_size(i); ++g)
      if (!ps.leq(g, top)) ++count;
  }
  return count;
}

std::uint64_t proportion_lower_bound(int n) {
  // (n-1)(2^n-1) / (n+1), rounded up
  const std::uint64_t num = static_cast<std::uint64_t>(n - 1) * ((std::uint64_t{1} << n) - 1);
  const std::uint64_t den = static_cast<std::uint64_t>(n + 1);
  return (num + den - 1) / den;
}

FeedbackFreeResult feedback_free_min_set(int n) {
  if (n < 2 || n > 4) throw std::invalid_argument("feedback-free search supports 2 <= n <= 4");
  PluckerSystem ps(make_cartan_datum('A', n - 1));
  const auto& W = ps.group();
  FeedbackFreeResult result;
  result.n = n;
  result.proportion_bound = proportion_lower_bound(n);

  // (pattern, cell index) pairs that must be told apart.
  std::vector<std::pair<VanishingPattern, std::size_t>> patterns;
  if (n <= 3) {
    std::vector<VanishingPattern> full;
    if (n == 3) {
      full = realizable_full_patterns_n3(ps);
    } else {
      for (const auto& w : W.elements()) {
        full.push_back(coordinate_pattern(ps, w));
        full.push_back(generic_pattern(ps, w));
      }
    }
    for (const auto& b : full) patterns.emplace_back(b, W.index_of(*check_acceptable(ps, b).witness_w));
    result.certified = true;
  } else {
    for (const auto& w : W.elements()) {
      patterns.emplace_back(coordinate_pattern(ps, w), W.index_of(w));
      patterns.emplace_back(generic_pattern(ps, w), W.index_of(w));
    }
  }

  const std::size_t m = ps.size();
  auto separates = [&](std::uint32_t mask) {
    std::map<std::uint32_t, std::size_t> cell_of;
    for (const auto& [b, cell] : patterns) {
      std::uint32_t key = 0;
      for (std::size_t t = 0; t < m; ++t)
        if ((mask >> t) & 1) key |= static_cast<std::uint32_t>(b[t]) << t;
      auto [it, inserted] = cell_of.emplace(key, cell);
      if (!inserted && it->second != cell) return false;
    }
    return true;
  };
  // Sizes below the coding bound cannot separate the coordinate flags.
  for (std::size_t size = std::min<std::size_t>(result.proportion_bound, m); size <= m; ++size) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != size || !separates(mask)) continue;
      std::vector<Subset> set;
      for (std::size_t t = 0; t < m; ++t)
        if ((mask >> t) & 1) set.push_back(ps.subset(t));
      std::sort(set.begin(), set.end(), [](const Subset& a, const Subset& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
      result.solutions.push_back(std::move(set));
    }
    if (!result.solutions.empty()) {
      result.size = static_cast<int>(size);
      std::sort(result.solutions.begin(), result.solutions.end());
      break;
    }
  }
  return result;
}

std::string FeedbackFreeResult::to_json() const {
  auto sets = nlohmann::json::array();
  for (const auto& s : solutions) {
    auto labels = nlohmann::json::array();
    for (const auto& I : s) labels.push_back("p" + subset_label(I));
    sets.push_back(labels);
  }
  return nlohmann::json{{"n", n},
                        {"size", size},
                        {"solutions", sets},
                        {"unique", solutions.size() == 1},
                        {"certified", certified},
                        {"proportion_bound", proportion_bound}}
      .dump(2);
}

bool code_bound_check(const CodeFamily& f) {
  if (f.i < 1 || f.i > f.n) throw std::invalid_argument("code weight must lie in [1, n]");
  for (const auto& s : f.subsets)
    if (static_cast<int>(s.size()) != f.i) throw std::invalid_argument("code member has the wrong weight");
  for (std::size_t a = 0; a < f.subsets.size(); ++a)
    for (std::size_t b = a + 1; b < f.subsets.size(); ++b) {
      Subset common;
      std::set_intersection(f.subsets[a].begin(), f.subsets[a].end(), f.subsets[b].begin(), f.subsets[b].end(),
                            std::back_inserter(common));
      if (static_cast<int>(common.size()) == f.i - 1)
        throw std::invalid_argument("code members " + subset_label(f.subsets[a]) + " and " +
                                    subset_label(f.subsets[b]) + " are at distance 2");
    }
  // Every (i-1)-subset lies in at most one member.
  std::set<Subset> faces;
  std::size_t total = 0;
  for (const auto& s : f.subsets)
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Subset face = s;
      face.erase(face.begin() + drop);
      faces.insert(face);
      ++total;
    }
  const bool distinct_faces = faces.size() == total;
  const bool inequality = static_cast<std::uint64_t>(f.i) * f.subsets.size() <= binomial(f.n, f.i - 1);
  return distinct_faces && inequality;
}

std::size_t max_code_size(int n, int i) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  const auto all = k_subsets(pool, i);
  if (all.size() > 24) throw std::invalid_argument("exhaustive code search limited to 24 candidate subsets");
  std::vector<std::uint32_t> conflicts(all.size(), 0);
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < all.size(); ++b) {
      Subset common;
      std::set_intersection(all[a].begin(), all[a].end(), all[b].begin(), all[b].end(), std::back_inserter(common));
      if (a != b && static_cast<int>(common.size()) == i - 1) conflicts[a] |= std::uint32_t{1} << b;
    }
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << all.size()); ++mask) {
    bool ok = true;
    for (std::size_t a = 0; a < all.size() && ok; ++a)
      if (((mask >> a) & 1) && (conflicts[a] & mask)) ok = false;
    if (ok) best = std::max<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

ChainReport chain_corollary_check(int k) {
  if (k < 1 || k > 2) throw std::invalid_argument("chain check is implemented for k = 1, 2");
  const auto family = construct_witness_family(k);
  const int n = family.n;
  WeylGroup W(make_cartan_datum('A', n - 1));
  WeylElement v = W.from_permutation(family.w);
  ChainReport r;
  r.k = k;
  r.chain.push_back(family.w);
  const int top = n * (n - 1) / 2;
  while (v.length() < top) {
    for (int i = 1; i < n; ++i)
      if (!W.has_right_descent(v, i)) {
        v = W.right_multiply(v, i);
        break;
      }
    r.chain.push_back(W.to_permutation(v));
  }
  r.N = static_cast<int>(r.chain.size()) - 1;
  r.saturated = true;
  for (std::size_t t = 0; t + 1 < r.chain.size(); ++t) {
    const auto a = W.from_permutation(r.chain[t]);
    const auto b = W.from_permutation(r.chain[t + 1]);
    if (b.length() != a.length() + 1 || !W.bruhat_leq(a, b)) r.saturated = false;
  }
  r.per_step_bound = static_cast<double>(binomial(2 * k, k)) / (4.0 * k * k);
  r.min_equations_some_step = static_cast<int>(std::ceil(r.per_step_bound));
  return r;
}

std::string ChainReport::to_json() const {
  auto c = nlohmann::json::array();
  for (const auto& p : chain) c.push_back(format_permutation(p));
  return nlohmann::json{{"k", k},
                        {"N", N},
                        {"chain", c},
                        {"saturated", saturated},
                        {"per_step_bound", per_step_bound},
                        {"min_equations_some_step", min_equations_some_step}}
      .dump(2);
}

bool adjacent_exchange_check(int n) {
  Permutation u(n);
  std::iota(u.begin(), u.end(), 1);
  do {
    for (int i = 1; i < n; ++i) {
      Permutation v = u;
      std::swap(v[i - 1], v[i]);
      const auto I = prefix_set(u, i), J = prefix_set(v, i);
      Subset expected = I;
      expected.erase(std::find(expected.begin(), expected.end(), u[i - 1]));
      expected.push_back(u[i]);
      std::sort(expected.begin(), expected.end());
      if (J != expected) return false;
      for (int j = 1; j < n; ++j)
        if (j != i && prefix_set(u, j) != prefix_set(v, j)) return false;
    }
  } while (std::next_permutation(u.begin(), u.end()));
  return true;
}

}  // namespace schubert
