#include "schubert/plucker.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace schubert {

WeightOrdering::WeightOrdering(std::vector<int> nodes) : nodes_(std::move(nodes)) {
  std::vector<int> sorted = nodes_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != static_cast<int>(k) + 1)
      throw std::invalid_argument("weight ordering is not a permutation of [1, r]");
}

WeightOrdering WeightOrdering::identity(int rank) {
  std::vector<int> nodes(rank);
  std::iota(nodes.begin(), nodes.end(), 1);
  return WeightOrdering(std::move(nodes));
}

int WeightOrdering::position_of(int node) const {
  auto it = std::find(nodes_.begin(), nodes_.end(), node);
  if (it == nodes_.end()) throw std::out_of_range("node not in ordering");
  return static_cast<int>(it - nodes_.begin()) + 1;
}

NodeSet WeightOrdering::tail(int position) const {
  return NodeSet(nodes_.begin() + (position - 1), nodes_.end());
}

std::string WeightOrdering::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(nodes_[k]);
  }
  return s;
}

WeightOrdering type_d_ordering(int rank) {
  if (rank < 4) throw std::invalid_argument("type D ordering needs rank >= 4");
  std::vector<int> nodes;
  for (int i = 1; i <= rank - 3; ++i) nodes.push_back(i);
  nodes.push_back(rank - 1);
  nodes.push_back(rank - 2);
  nodes.push_back(rank);
  return WeightOrdering(std::move(nodes));
}

PluckerSystem::PluckerSystem(std::shared_ptr<const WeylGroup> group) : group_(std::move(group)) {
  build();
}

PluckerSystem::PluckerSystem(const CartanDatum& datum)
    : group_(std::make_shared<const WeylGroup>(datum)) {
  build();
}

void PluckerSystem::build() {
  const auto& W = *group_;
  const int r = rank();
  offsets_.push_back(0);
  lookup_.resize(r);
  leq_.resize(r);
  for (int i = 1; i <= r; ++i) {
    WeightCoords start(r, 0);
    start[i - 1] = 1;
    std::vector<WeightCoords> orbit{start};
    std::unordered_set<WeightCoords, VectorHash> seen{start};
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (int j = 1; j <= r; ++j) {
        auto g = orbit[head];
        W.reflect(g, j);
        if (seen.insert(g).second) orbit.push_back(std::move(g));
      }
    }
    std::vector<PluckerWeight> level;
    for (auto& lambda : orbit) {
      // Reduce to the dominant chamber; the reflections used, read in
      // order, spell the minimal coset representative.
      std::vector<int> word;
      auto mu = lambda;
      for (;;) {
        int j = 0;
        for (int k = 0; k < r; ++k)
          if (mu[k] < 0) {
            j = k + 1;
            break;
          }
        if (j == 0) break;
        word.push_back(j);
        W.reflect(mu, j);
      }
      level.push_back(PluckerWeight{i, lambda, W.from_word(word)});
    }
    std::sort(level.begin(), level.end(), [](const PluckerWeight& a, const PluckerWeight& b) {
      if (a.min_rep.length() != b.min_rep.length()) return a.min_rep.length() < b.min_rep.length();
      return a.min_rep.word() < b.min_rep.word();
    });
    const std::size_t m = level.size();
    auto& table = leq_[i - 1];
    table.assign(m, std::vector<bool>(m, false));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        table[a][b] = (a == b) || (level[a].min_rep.length() < level[b].min_rep.length() &&
                                   W.bruhat_leq(level[a].min_rep, level[b].min_rep));
    for (std::size_t a = 0; a < m; ++a) lookup_[i - 1].emplace(level[a].coords, weights_.size() + a);
    for (auto& p : level) weights_.push_back(std::move(p));
    offsets_.push_back(weights_.size());
  }
}

std::vector<PluckerWeight> PluckerSystem::orbit(int level) const {
  auto first = weights_.begin() + static_cast<std::ptrdiff_t>(level_offset(level));
  return std::vector<PluckerWeight>(first, first + static_cast<std::ptrdiff_t>(level_size(level)));
}

std::optional<std::size_t> PluckerSystem::find(int level, const WeightCoords& coords) const {
  if (level < 1 || level > rank()) return std::nullopt;
  const auto& table = lookup_[level - 1];
  auto it = table.find(coords);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::size_t PluckerSystem::index_of(int level, const WeightCoords& coords) const {
  auto found = find(level, coords);
  if (!found) throw std::invalid_argument("not a Pluecker weight of level " + std::to_string(level));
  return *found;
}

std::size_t PluckerSystem::index_of(const PluckerWeight& gamma) const {
  return index_of(gamma.level, gamma.coords);
}

std::size_t PluckerSystem::index_of_image(const WeylElement& w, int level) const {
  WeightCoords omega(rank(), 0);
  omega[level - 1] = 1;
  return index_of(level, group_->act(w, std::move(omega)));
}

bool PluckerSystem::leq(std::size_t a, std::size_t b) const {
  const int la = weights_.at(a).level;
  if (la != weights_.at(b).level) throw std::invalid_argument("Pluecker weights of different levels");
  const std::size_t off = offsets_[la - 1];
  return leq_[la - 1][a - off][b - off];
}

bool PluckerSystem::orbit_bruhat_leq(const PluckerWeight& gamma, const PluckerWeight& delta) const {
  if (gamma.level != delta.level) throw std::invalid_argument("Pluecker weights of different levels");
  return leq(index_of(gamma), index_of(delta));
}

CosetOrbitEntry PluckerSystem::fundamental(int level) const {
  WeightCoords omega(rank(), 0);
  omega[level - 1] = 1;
  return {omega, group_->identity()};
}

std::vector<CosetOrbitEntry> PluckerSystem::coset_orbit(int level, const NodeSet& parabolic) const {
  const auto& W = *group_;
  std::vector<CosetOrbitEntry> out{fundamental(level)};
  std::unordered_set<WeightCoords, VectorHash> seen{out[0].weight};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int j : parabolic) {
      auto g = out[head].weight;
      if (g[j - 1] <= 0) continue;  // s_j either fixes g or moves it down
      W.reflect(g, j);
      if (seen.insert(g).second) {
        out.push_back({std::move(g), W.left_multiply(j, out[head].element)});
      }
    }
  }
  return out;
}

std::vector<Root> PluckerSystem::roots_R(int node) const {
  std::vector<Root> out;
  for (const auto& a : group_->positive_roots())
    if (a.expansion[node - 1] > 0) out.push_back(a);
  return out;
}

std::vector<Root> PluckerSystem::roots_R(int node, const NodeSet& parabolic) const {
  std::vector<Root> out;
  for (const auto& a : roots_R(node)) {
    bool inside = true;
    for (int k = 1; k <= rank(); ++k)
      if (a.expansion[k - 1] != 0 && std::find(parabolic.begin(), parabolic.end(), k) == parabolic.end())
        inside = false;
    if (inside) out.push_back(a);
  }
  return out;
}

int PluckerSystem::mu(const Root& alpha, const WeightOrdering& ordering) const {
  for (int pos = 1; pos <= ordering.rank(); ++pos) {
    const int node = ordering.node_at(pos);
    if (alpha.expansion[node - 1] != 0) return node;
  }
  throw std::invalid_argument("zero root");
}

std::vector<std::pair<Root, std::size_t>> PluckerSystem::reflection_weight_map(int node) const {
  std::vector<std::pair<Root, std::size_t>> out;
  WeightCoords omega(rank(), 0);
  omega[node - 1] = 1;
  for (const auto& a : roots_R(node))
    out.emplace_back(a, index_of(node, group_->reflect_by_root(a, omega)));
  return out;
}

bool PluckerSystem::is_economical_for(int node, const NodeSet& parabolic) const {
  return roots_R(node, parabolic).size() + 1 == coset_orbit(node, parabolic).size();
}

bool PluckerSystem::is_economical_index(int node) const {
  return roots_R(node).size() + 1 == level_size(node);
}

bool PluckerSystem::is_economical_ordering(const WeightOrdering& ordering) const {
  if (ordering.rank() != rank()) throw std::invalid_argument("ordering rank mismatch");
  for (int pos = 1; pos <= rank(); ++pos)
    if (!is_economical_for(ordering.node_at(pos), ordering.tail(pos))) return false;
  return true;
}

bool PluckerSystem::linear_order_check(int level) const {
  const std::size_t off = level_offset(level), m = level_size(level);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (!leq(off + a, off + b) && !leq(off + b, off + a)) return false;
  return true;
}

WeightOrdering PluckerSystem::standard_ordering() const {
  if (group_->type_letter() == 'D') return type_d_ordering(rank());
  return WeightOrdering::identity(rank());
}

std::vector<int> PluckerSystem::subset(std::size_t index) const {
  const auto& gamma = weights_.at(index);
  auto perm = group_->to_permutation(gamma.min_rep);
  std::vector<int> out(perm.begin(), perm.begin() + gamma.level);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t PluckerSystem::index_of_subset(std::vector<int> subset) const {
  const int n = group_->type_a_n();
  std::sort(subset.begin(), subset.end());
  if (subset.empty() || static_cast<int>(subset.size()) >= n ||
      std::adjacent_find(subset.begin(), subset.end()) != subset.end() || subset.front() < 1 ||
      subset.back() > n)
    throw std::invalid_argument("not a nonempty proper subset of [1, n]");
  std::vector<int> perm = subset;
  for (int v = 1; v <= n; ++v)
    if (!std::binary_search(subset.begin(), subset.end(), v)) perm.push_back(v);
  return index_of_image(group_->from_permutation(perm), static_cast<int>(subset.size()));
}

std::string PluckerSystem::label(std::size_t index) const {
  if (group_->type_letter() == 'A') return format_permutation(subset(index));
  const auto& gamma = weights_.at(index);
  return "(" + std::to_string(gamma.level) + "|" + gamma.min_rep.to_string() + ")";
}

std::size_t PluckerSystem::parse_label(const std::string& raw) const {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}') text += c;
  if (!text.empty() && text[0] == 'p') text = text.substr(1);
  if (!text.empty() && text.front() == '(' && text.back() == ')') {
    auto bar = text.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("malformed weight '" + raw + "'");
    const int level = std::stoi(text.substr(1, bar - 1));
    auto u = group_->parse_element(text.substr(bar + 1, text.size() - bar - 2));
    if (level < 1 || level > rank()) throw std::invalid_argument("level out of range in '" + raw + "'");
    return index_of_image(u, level);
  }
  if (group_->type_letter() != 'A') throw std::invalid_argument("malformed weight '" + raw + "'");
  return index_of_subset(parse_permutation(text));
}

}  // namespace schubert
