#include "schubert/recognition.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <sstream>

namespace schubert {

bool CountingOracle::query(std::size_t weight) {
  if (auto it = memo_.find(weight); it != memo_.end()) return it->second;
  const bool bit = inner_.query(weight);
  memo_.emplace(weight, bit);
  log_.entries.emplace_back(weight, bit);
  return bit;
}

Recognizer::Recognizer(const PluckerSystem& ps, WeightOrdering ordering)
    : ps_(ps), ordering_(std::move(ordering)) {
  if (ordering_.rank() != ps.rank()) throw std::invalid_argument("ordering rank mismatch");
  economical_ = ps.is_economical_ordering(ordering_);
  for (int pos = 1; pos <= ps.rank(); ++pos)
    orbits_.push_back(ps.coset_orbit(ordering_.node_at(pos), ordering_.tail(pos)));
}

RecognitionResult Recognizer::run(Oracle& oracle, bool strict) const {
  const auto& W = ps_.group();
  CountingOracle counting(oracle);
  WeylElement v = W.identity();
  for (int pos = 1; pos <= ps_.rank(); ++pos) {
    const int i = ordering_.node_at(pos);
    const auto& orbit = orbits_[pos - 1];
    std::vector<std::pair<std::size_t, std::size_t>> candidates;  // (weight, orbit entry)
    candidates.reserve(orbit.size());
    for (std::size_t e = 0; e < orbit.size(); ++e)
      candidates.emplace_back(ps_.index_of(i, W.act(v, orbit[e].weight)), e);
    // Orbit indices are sorted by length of the minimal representative,
    // which refines the Bruhat order.
    std::sort(candidates.begin(), candidates.end(), std::greater<>());
    if (economical_) {
      for (std::size_t t = 0; t + 1 < candidates.size(); ++t)
        if (!ps_.leq(candidates[t + 1].first, candidates[t].first))
          throw std::logic_error("scanned orbit is not a chain under an economical ordering");
    }
    std::optional<std::size_t> chosen;
    for (std::size_t t = 0; t < candidates.size(); ++t) {
      if (t + 1 == candidates.size() && !strict) {
        chosen = t;
        break;
      }
      if (counting.query(candidates[t].first)) {
        chosen = t;
        break;
      }
    }
    if (!chosen)
      throw UnacceptableInput("no nonzero coordinate among the candidates of level " + std::to_string(i));
    v = W.multiply(v, orbit[candidates[*chosen].second].element);
  }
  return {v, counting.log()};
}

RecognitionResult recognize_general(const PluckerSystem& ps, Oracle& oracle, const WeightOrdering& ordering,
                                    bool strict) {
  return Recognizer(ps, ordering).run(oracle, strict);
}

PermutationResult recognize_typeA(const PluckerSystem& ps, Oracle& oracle, bool strict) {
  const int n = ps.group().type_a_n();
  CountingOracle counting(oracle);
  std::vector<bool> in_set(n + 1, false);
  std::vector<int> members;
  std::vector<int> perm;
  for (int i = 1; i <= n; ++i) {
    int smallest_free = 1;
    while (in_set[smallest_free]) ++smallest_free;
    int k = n;
    auto vanishes = [&](int value) {
      auto s = members;
      s.push_back(value);
      return !counting.query(ps.index_of_subset(s));
    };
    while (k > smallest_free && (in_set[k] || vanishes(k))) --k;
    if (strict && i < n && vanishes(k))
      throw UnacceptableInput("no nonzero coordinate among the candidates of step " + std::to_string(i));
    perm.push_back(k);
    in_set[k] = true;
    members.push_back(k);
  }
  return {perm, counting.log()};
}

// ---- decision trees ----

int DecisionTree::depth() const {
  std::function<int(int)> rec = [&](int node) -> int {
    const auto& nd = nodes[node];
    if (nd.leaf) return 0;
    return 1 + std::max(rec(nd.zero), rec(nd.one));
  };
  return root < 0 ? 0 : rec(root);
}

std::size_t DecisionTree::leaf_count() const {
  return std::count_if(nodes.begin(), nodes.end(), [](const Node& n) { return n.leaf; });
}

const WeylElement& DecisionTree::route(const VanishingPattern& b) const {
  int node = root;
  while (!nodes[node].leaf) node = b[nodes[node].weight] ? nodes[node].one : nodes[node].zero;
  return nodes[node].w;
}

std::vector<std::pair<WeylElement, QueryLog>> DecisionTree::paths() const {
  std::vector<std::pair<WeylElement, QueryLog>> out;
  QueryLog path;
  std::function<void(int)> rec = [&](int node) {
    const auto& nd = nodes[node];
    if (nd.leaf) {
      out.emplace_back(nd.w, path);
      return;
    }
    for (bool bit : {false, true}) {
      path.entries.emplace_back(nd.weight, bit);
      rec(bit ? nd.one : nd.zero);
      path.entries.pop_back();
    }
  };
  if (root >= 0) rec(root);
  return out;
}

std::string DecisionTree::to_dot(const PluckerSystem& ps) const {
  std::ostringstream out;
  out << "digraph recognition {\n";
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const auto& nd = nodes[k];
    if (nd.leaf)
      out << "  n" << k << " [shape=box,label=\"" << ps.group().format(nd.w) << "\"];\n";
    else
      out << "  n" << k << " [label=\"p" << ps.label(nd.weight) << "\"];\n";
  }
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const auto& nd = nodes[k];
    if (nd.leaf) continue;
    out << "  n" << k << " -> n" << nd.zero << " [label=\"=0\"];\n";
    out << "  n" << k << " -> n" << nd.one << " [label=\"!=0\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string DecisionTree::to_text(const PluckerSystem& ps) const {
  std::ostringstream out;
  std::function<void(int, int, const std::string&)> rec = [&](int node, int indent, const std::string& edge) {
    const auto& nd = nodes[node];
    out << std::string(2 * indent, ' ') << edge;
    if (nd.leaf) {
      out << ps.group().format(nd.w) << '\n';
      return;
    }
    out << "p" << ps.label(nd.weight) << "?\n";
    rec(nd.zero, indent + 1, "=0: ");
    rec(nd.one, indent + 1, "!=0: ");
  };
  if (root >= 0) rec(root, 0, "");
  return out.str();
}

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

DecisionTree algorithmic_tree(const PluckerSystem& ps, const WeightOrdering& ordering) {
  DecisionTree tree;
  tree.nodes.push_back({false, kUnset, -1, -1, {}});
  tree.root = 0;
  Recognizer rec(ps, ordering);
  for (const auto& w : ps.group().elements()) {
    PatternOracle oracle(generic_pattern(ps, w));
    const auto result = rec.run(oracle);
    if (!(result.w == w)) throw std::logic_error("recognition disagrees with the generic pattern");
    int node = tree.root;
    for (auto [weight, bit] : result.log.entries) {
      auto& nd = tree.nodes[node];
      if (nd.weight == kUnset) nd.weight = weight;
      if (nd.weight != weight) throw std::logic_error("inconsistent query order in recognition tree");
      int& child = bit ? nd.one : nd.zero;
      if (child < 0) {
        child = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back({false, kUnset, -1, -1, {}});
      }
      node = bit ? tree.nodes[node].one : tree.nodes[node].zero;
    }
    tree.nodes[node].leaf = true;
    tree.nodes[node].w = w;
  }
  for (const auto& nd : tree.nodes)
    if (!nd.leaf && (nd.zero < 0 || nd.one < 0)) throw std::logic_error("recognition tree has a dangling branch");
  return tree;
}

// Minimax over candidate sets. For each element w, bit gamma is forced to 1
// at w.omega_i, forced to 0 off the lower interval, and free below.
class OptimalSearch {
 public:
  using Mask = std::vector<std::uint64_t>;

  explicit OptimalSearch(const PluckerSystem& ps) : ps_(ps), elements_(ps.group().elements()) {
    words_ = (elements_.size() + 63) / 64;
    can_zero_.assign(ps.size(), Mask(words_, 0));
    can_one_.assign(ps.size(), Mask(words_, 0));
    for (std::size_t e = 0; e < elements_.size(); ++e) {
      const auto generic = generic_pattern(ps, elements_[e]);
      const auto tops = coordinate_pattern(ps, elements_[e]);
      for (std::size_t k = 0; k < ps.size(); ++k) {
        if (!tops[k]) set(can_zero_[k], e);
        if (generic[k]) set(can_one_[k], e);
      }
    }
  }

  DecisionTree solve() {
    Mask all(words_, 0);
    for (std::size_t e = 0; e < elements_.size(); ++e) set(all, e);
    search(all);
    DecisionTree tree;
    tree.root = build(all, tree);
    return tree;
  }

 private:
  static void set(Mask& m, std::size_t e) { m[e / 64] |= std::uint64_t{1} << (e % 64); }
  static std::size_t popcount(const Mask& m) {
    std::size_t c = 0;
    for (auto x : m) c += std::popcount(x);
    return c;
  }
  static int ceil_log2(std::size_t n) {
    int d = 0;
    while ((std::size_t{1} << d) < n) ++d;
    return d;
  }
  Mask meet(const Mask& a, const Mask& b) const {
    Mask out(words_);
    for (std::size_t t = 0; t < words_; ++t) out[t] = a[t] & b[t];
    return out;
  }

  int search(const Mask& s) {
    const std::size_t count = popcount(s);
    if (count <= 1) return 0;
    if (auto it = memo_.find(s); it != memo_.end()) return it->second.first;
    const int lower = ceil_log2(count);
    struct Split {
      std::size_t weight, c0, c1;
    };
    std::vector<Split> splits;
    for (std::size_t k = 0; k < ps_.size(); ++k) {
      const std::size_t c0 = popcount(meet(s, can_zero_[k])), c1 = popcount(meet(s, can_one_[k]));
      if (c0 == count || c1 == count) continue;
      splits.push_back({k, c0, c1});
    }
    std::sort(splits.begin(), splits.end(), [](const Split& a, const Split& b) {
      return std::max(a.c0, a.c1) != std::max(b.c0, b.c1) ? std::max(a.c0, a.c1) < std::max(b.c0, b.c1)
                                                          : a.weight < b.weight;
    });
    int best = std::numeric_limits<int>::max();
    std::size_t best_weight = kUnset;
    for (const auto& sp : splits) {
      if (1 + std::max(ceil_log2(sp.c0), ceil_log2(sp.c1)) >= best) continue;
      const int d0 = search(meet(s, can_zero_[sp.weight]));
      if (1 + d0 >= best) continue;
      const int d = 1 + std::max(d0, search(meet(s, can_one_[sp.weight])));
      if (d < best) {
        best = d;
        best_weight = sp.weight;
        if (best == lower) break;
      }
    }
    if (best_weight == kUnset) throw std::logic_error("no separating query for a candidate set");
    memo_.emplace(s, std::make_pair(best, best_weight));
    return best;
  }

  int build(const Mask& s, DecisionTree& tree) {
    const int id = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();
    if (popcount(s) == 1) {
      for (std::size_t e = 0; e < elements_.size(); ++e)
        if ((s[e / 64] >> (e % 64)) & 1) {
          tree.nodes[id].leaf = true;
          tree.nodes[id].w = elements_[e];
        }
      return id;
    }
    const std::size_t weight = memo_.at(s).second;
    tree.nodes[id].weight = weight;
    const int zero = build(meet(s, can_zero_[weight]), tree);
    const int one = build(meet(s, can_one_[weight]), tree);
    tree.nodes[id].zero = zero;
    tree.nodes[id].one = one;
    return id;
  }

  const PluckerSystem& ps_;
  const std::vector<WeylElement>& elements_;
  std::size_t words_ = 0;
  std::vector<Mask> can_zero_, can_one_;
  std::map<Mask, std::pair<int, std::size_t>> memo_;
};

}  // namespace

DecisionTree build_decision_tree(const PluckerSystem& ps, TreeStrategy strategy, const WeightOrdering& ordering) {
  if (strategy == TreeStrategy::algorithmic) return algorithmic_tree(ps, ordering);
  if (ps.group().order() > kOptimalTreeCap)
    throw std::invalid_argument("optimal tree search is limited to groups of order <= " +
                                std::to_string(kOptimalTreeCap));
  return OptimalSearch(ps).solve();
}

DecisionTree build_decision_tree(const PluckerSystem& ps, TreeStrategy strategy) {
  return build_decision_tree(ps, strategy, ps.standard_ordering());
}

int worst_case_queries(const PluckerSystem& ps, TreeStrategy strategy) {
  if (strategy == TreeStrategy::optimal) return build_decision_tree(ps, strategy).depth();
  Recognizer rec(ps, ps.standard_ordering());
  std::size_t worst = 0;
  for (const auto& w : ps.group().elements()) {
    PatternOracle oracle(generic_pattern(ps, w));
    worst = std::max(worst, rec.run(oracle).log.count());
  }
  return static_cast<int>(worst);
}

std::string format_log(const PluckerSystem& ps, const QueryLog& log) {
  std::string s;
  for (auto [weight, bit] : log.entries) {
    if (!s.empty()) s += ", ";
    (void)bit;
    s += "p" + ps.label(weight);
  }
  return s;
}

}  // namespace schubert
