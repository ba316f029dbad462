#include "schubert/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <string_view>
#include <unordered_set>

namespace schubert {

namespace {

constexpr int kMaxRank = 8;

std::vector<int> unit(int dim, int i) {
  std::vector<int> v(dim, 0);
  v[i] = 1;
  return v;
}

int dot(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

// Solves M x = rhs over Q for square invertible M.
std::vector<mpq_class> solve(std::vector<std::vector<mpq_class>> m,
                             std::vector<mpq_class> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular Cartan matrix");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      mpq_class f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

}  // namespace

std::string CartanDatum::name() const {
  return std::string(1, type_letter) + std::to_string(rank);
}

CartanDatum make_cartan_datum(char type_letter, int rank) {
  type_letter = static_cast<char>(std::toupper(static_cast<unsigned char>(type_letter)));
  const std::string label = std::string(1, type_letter) + std::to_string(rank);
  if (rank < 1 || rank > kMaxRank)
    throw UnsupportedGroup("unsupported rank for " + label);

  CartanDatum d;
  d.type_letter = type_letter;
  d.rank = rank;
  auto& roots = d.simple_roots;

  switch (type_letter) {
    case 'A': {
      d.ambient_dimension = rank + 1;
      for (int i = 0; i < rank; ++i) {
        auto v = unit(rank + 1, i);
        v[i + 1] = -1;
        roots.push_back(v);
      }
      break;
    }
    case 'B':
    case 'C': {
      if (rank < 2) throw UnsupportedGroup("unsupported group " + label);
      d.ambient_dimension = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        auto v = unit(rank, i);
        v[i + 1] = -1;
        roots.push_back(v);
      }
      auto last = unit(rank, rank - 1);
      if (type_letter == 'C') last[rank - 1] = 2;
      roots.push_back(last);
      break;
    }
    case 'D': {
      if (rank < 4) throw UnsupportedGroup("unsupported group " + label);
      d.ambient_dimension = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        auto v = unit(rank, i);
        v[i + 1] = -1;
        roots.push_back(v);
      }
      auto last = unit(rank, rank - 1);
      last[rank - 2] = 1;
      roots.push_back(last);
      break;
    }
    case 'G': {
      if (rank != 2) throw UnsupportedGroup("unsupported group " + label);
      d.ambient_dimension = 3;
      roots.push_back({1, -1, 0});
      roots.push_back({-2, 1, 1});
      break;
    }
    default:
      throw UnsupportedGroup("unsupported group " + label);
  }

  d.cartan_matrix.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      d.cartan_matrix[i][j] = 2 * dot(roots[i], roots[j]) / dot(roots[i], roots[i]);

  // omega_i = sum_k c_ik alpha_k with sum_k c_ik A[j][k] = delta_ij.
  std::vector<std::vector<mpq_class>> system(rank, std::vector<mpq_class>(rank));
  for (int j = 0; j < rank; ++j)
    for (int k = 0; k < rank; ++k) system[j][k] = d.cartan_matrix[j][k];
  for (int i = 0; i < rank; ++i) {
    std::vector<mpq_class> rhs(rank, 0);
    rhs[i] = 1;
    auto c = solve(system, rhs);
    AmbientVector w(d.ambient_dimension, 0);
    for (int k = 0; k < rank; ++k)
      for (int t = 0; t < d.ambient_dimension; ++t) w[t] += c[k] * roots[k][t];
    d.fundamental_weights.push_back(std::move(w));
  }
  return d;
}

CartanDatum parse_group_spec(const std::string& spec) {
  if (spec.size() < 2 || std::string_view("ABCDEFGabcdefg").find(spec[0]) == std::string_view::npos)
    throw std::invalid_argument("malformed group spec '" + spec + "'");
  for (std::size_t i = 1; i < spec.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(spec[i])))
      throw std::invalid_argument("malformed group spec '" + spec + "'");
  return make_cartan_datum(spec[0], std::stoi(spec.substr(1)));
}

bool Root::positive() const {
  return std::all_of(expansion.begin(), expansion.end(), [](int c) { return c >= 0; });
}

std::string WeylElement::to_string() const {
  if (word_.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < word_.size(); ++k) {
    if (k) out += '.';
    out += 's' + std::to_string(word_[k]);
  }
  return out;
}

WeylGroup::WeylGroup(CartanDatum datum)
    : datum_(std::move(datum)), enumeration_(std::make_unique<Enumeration>()) {
  const int r = rank();
  simple_in_weights_.assign(r, std::vector<int>(r));
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) simple_in_weights_[j][i] = datum_.cartan_matrix[i][j];

  // Positive roots: closure of the simple roots under simple reflections,
  // restricted to the positive half.
  std::deque<std::vector<int>> queue;
  std::unordered_set<std::vector<int>, VectorHash> seen;
  for (int i = 0; i < r; ++i) {
    auto e = unit(r, i);
    seen.insert(e);
    queue.push_back(e);
  }
  std::vector<std::vector<int>> found;
  while (!queue.empty()) {
    auto beta = queue.front();
    queue.pop_front();
    found.push_back(beta);
    for (int j = 0; j < r; ++j) {
      int p = 0;
      for (int k = 0; k < r; ++k) p += beta[k] * datum_.cartan_matrix[j][k];
      auto image = beta;
      image[j] -= p;
      bool positive = std::all_of(image.begin(), image.end(), [](int c) { return c >= 0; });
      if (positive && seen.insert(image).second) queue.push_back(image);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    int ha = 0, hb = 0;
    for (int x : a) ha += x;
    for (int x : b) hb += x;
    if (ha != hb) return ha < hb;
    return a > b;
  });
  for (const auto& e : found) positive_roots_.push_back(root_from_expansion(e));
}

std::uint64_t WeylGroup::order() const {
  const int r = rank();
  std::uint64_t fact = 1;
  for (int k = 2; k <= r; ++k) fact *= k;
  switch (type_letter()) {
    case 'A': return fact * static_cast<std::uint64_t>(r + 1);
    case 'B':
    case 'C': return fact << r;
    case 'D': return fact << (r - 1);
    case 'G': return 12;
  }
  throw UnsupportedGroup("unsupported group " + name());
}

WeylElement WeylGroup::identity() const {
  WeylElement e;
  e.fingerprint_.assign(rank(), 1);
  return e;
}

WeylElement WeylGroup::generator(int i) const {
  const int one[] = {i};
  return from_word(one);
}

void WeylGroup::reflect(WeightCoords& weight, int i) const {
  const int c = weight[i - 1];
  if (c == 0) return;
  const auto& alpha = simple_in_weights_[i - 1];
  for (int k = 0; k < rank(); ++k) weight[k] -= c * alpha[k];
}

WeylElement WeylGroup::from_fingerprint(WeightCoords image) const {
  if (static_cast<int>(image.size()) != rank())
    throw std::invalid_argument("fingerprint has wrong dimension");
  WeylElement w;
  w.fingerprint_ = image;
  // Strip the smallest left descent repeatedly: this yields the shortlex
  // minimal reduced word.
  for (;;) {
    int j = 0;
    for (int k = 0; k < rank(); ++k) {
      if (image[k] == 0) throw std::invalid_argument("fingerprint is not regular");
      if (image[k] < 0) {
        j = k + 1;
        break;
      }
    }
    if (j == 0) break;
    w.word_.push_back(j);
    reflect(image, j);
  }
  for (int x : image)
    if (x != 1) throw std::invalid_argument("fingerprint is not in the orbit of rho");
  return w;
}

std::optional<WeylElement> WeylGroup::try_from_fingerprint(WeightCoords image) const {
  if (static_cast<int>(image.size()) != rank()) return std::nullopt;
  for (int x : image)
    if (x == 0) return std::nullopt;
  try {
    return from_fingerprint(std::move(image));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

WeylElement WeylGroup::from_word(std::span<const int> word) const {
  WeightCoords f(rank(), 1);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 1 || *it > rank())
      throw std::invalid_argument("generator index out of range: " + std::to_string(*it));
    reflect(f, *it);
  }
  return from_fingerprint(std::move(f));
}

WeylElement WeylGroup::multiply(const WeylElement& u, const WeylElement& v) const {
  WeightCoords f = v.fingerprint();
  for (auto it = u.word().rbegin(); it != u.word().rend(); ++it) reflect(f, *it);
  return from_fingerprint(std::move(f));
}

WeylElement WeylGroup::inverse(const WeylElement& w) const {
  std::vector<int> reversed(w.word().rbegin(), w.word().rend());
  return from_word(reversed);
}

WeylElement WeylGroup::left_multiply(int i, const WeylElement& w) const {
  WeightCoords f = w.fingerprint();
  reflect(f, i);
  return from_fingerprint(std::move(f));
}

WeylElement WeylGroup::right_multiply(const WeylElement& w, int i) const {
  return multiply(w, generator(i));
}

NodeSet WeylGroup::left_descents(const WeylElement& w) const {
  NodeSet out;
  for (int k = 0; k < rank(); ++k)
    if (w.fingerprint()[k] < 0) out.push_back(k + 1);
  return out;
}

NodeSet WeylGroup::right_descents(const WeylElement& w) const {
  return left_descents(inverse(w));
}

bool WeylGroup::has_right_descent(const WeylElement& w, int i) const {
  // w s_i < w iff w(alpha_i) is negative.
  std::vector<int> e = unit(rank(), i - 1);
  auto image = act_on_root(w, std::move(e));
  return std::any_of(image.begin(), image.end(), [](int c) { return c < 0; });
}

bool WeylGroup::bruhat_leq(const WeylElement& u, const WeylElement& v) const {
  // Descent recursion: pick s with sv < v; then u <= v iff
  // (su < u ? su <= sv : u <= sv). The recursion never branches.
  WeightCoords fu = u.fingerprint();
  WeightCoords fv = v.fingerprint();
  if (u.length() > v.length()) return false;
  for (;;) {
    int j = 0;
    for (int k = 0; k < rank(); ++k)
      if (fv[k] < 0) {
        j = k + 1;
        break;
      }
    if (j == 0) break;
    reflect(fv, j);
    if (fu[j - 1] < 0) reflect(fu, j);
  }
  return std::all_of(fu.begin(), fu.end(), [](int c) { return c > 0; });
}

WeylElement WeylGroup::min_coset_rep(const WeylElement& w, const NodeSet& parabolic) const {
  // Work with w^{-1} rho: right descents of w are its negative coordinates.
  WeylElement inv = inverse(w);
  WeightCoords g = inv.fingerprint();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j : parabolic) {
      if (g[j - 1] < 0) {
        reflect(g, j);
        changed = true;
      }
    }
  }
  return inverse(from_fingerprint(std::move(g)));
}

WeylElement WeylGroup::longest_element(const NodeSet& parabolic) const {
  WeightCoords g(rank(), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j : parabolic) {
      if (g[j - 1] > 0) {
        reflect(g, j);
        changed = true;
      }
    }
  }
  return inverse(from_fingerprint(std::move(g)));
}

WeylElement WeylGroup::longest_element() const {
  NodeSet all(rank());
  for (int i = 0; i < rank(); ++i) all[i] = i + 1;
  return longest_element(all);
}

bool WeylGroup::in_parabolic(const WeylElement& w, const NodeSet& parabolic) const {
  // The shortlex word of an element of W_J only uses letters from J.
  return std::all_of(w.word().begin(), w.word().end(), [&](int s) {
    return std::find(parabolic.begin(), parabolic.end(), s) != parabolic.end();
  });
}

WeightCoords WeylGroup::act(const WeylElement& w, WeightCoords weight) const {
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) reflect(weight, *it);
  return weight;
}

AmbientVector WeylGroup::act_on_weight(const WeylElement& w, AmbientVector v) const {
  const int dim = datum_.ambient_dimension;
  if (static_cast<int>(v.size()) != dim)
    throw std::invalid_argument("ambient vector has wrong dimension");
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) {
    const auto& alpha = datum_.simple_roots[*it - 1];
    mpq_class va = 0;
    int aa = 0;
    for (int t = 0; t < dim; ++t) {
      va += v[t] * alpha[t];
      aa += alpha[t] * alpha[t];
    }
    mpq_class c = 2 * va / aa;
    for (int t = 0; t < dim; ++t) v[t] -= c * alpha[t];
  }
  return v;
}

std::vector<int> WeylGroup::act_on_root(const WeylElement& w, std::vector<int> beta) const {
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) {
    const int j = *it - 1;
    int p = 0;
    for (int k = 0; k < rank(); ++k) p += beta[k] * datum_.cartan_matrix[j][k];
    beta[j] -= p;
  }
  return beta;
}

Root WeylGroup::root_from_expansion(const std::vector<int>& expansion) const {
  Root a;
  a.expansion = expansion;
  a.coords.assign(datum_.ambient_dimension, 0);
  for (int k = 0; k < rank(); ++k)
    for (int t = 0; t < datum_.ambient_dimension; ++t)
      a.coords[t] += expansion[k] * datum_.simple_roots[k][t];
  a.norm2 = dot(a.coords, a.coords);
  a.coroot.resize(rank());
  for (int k = 0; k < rank(); ++k) {
    const int nk = dot(datum_.simple_roots[k], datum_.simple_roots[k]);
    a.coroot[k] = expansion[k] * nk / a.norm2;
  }
  return a;
}

int WeylGroup::pairing(const WeightCoords& weight, const Root& alpha) const {
  int p = 0;
  for (int k = 0; k < rank(); ++k) p += weight[k] * alpha.coroot[k];
  return p;
}

WeightCoords WeylGroup::reflect_by_root(const Root& alpha, WeightCoords weight) const {
  const int c = pairing(weight, alpha);
  for (int k = 0; k < rank(); ++k) {
    int alpha_k = 0;
    for (int m = 0; m < rank(); ++m) alpha_k += alpha.expansion[m] * simple_in_weights_[m][k];
    weight[k] -= c * alpha_k;
  }
  return weight;
}

WeylElement WeylGroup::reflection(const Root& alpha) const {
  return from_fingerprint(reflect_by_root(alpha, WeightCoords(rank(), 1)));
}

AmbientVector WeylGroup::to_ambient(const WeightCoords& weight) const {
  AmbientVector v(datum_.ambient_dimension, 0);
  for (int k = 0; k < rank(); ++k)
    for (int t = 0; t < datum_.ambient_dimension; ++t)
      v[t] += weight[k] * datum_.fundamental_weights[k][t];
  return v;
}

mpq_class WeylGroup::inner_product(const AmbientVector& a, const AmbientVector& b) const {
  mpq_class s = 0;
  for (std::size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
  return s;
}

WeightCoords WeylGroup::from_ambient(const AmbientVector& v) const {
  WeightCoords out(rank());
  for (int k = 0; k < rank(); ++k) {
    const auto& alpha = datum_.simple_roots[k];
    mpq_class va = 0;
    int aa = 0;
    for (int t = 0; t < datum_.ambient_dimension; ++t) {
      va += v[t] * alpha[t];
      aa += alpha[t] * alpha[t];
    }
    mpq_class c = 2 * va / aa;
    if (c.get_den() != 1) throw std::invalid_argument("vector is not an integral weight");
    out[k] = static_cast<int>(c.get_num().get_si());
  }
  return out;
}

const std::vector<WeylElement>& WeylGroup::elements() const {
  auto& en = *enumeration_;
  std::call_once(en.once, [&] {
    if (order() > kEnumerationCap)
      throw UnsupportedGroup("group " + name() + " exceeds the enumeration cap");
    std::vector<WeightCoords> frontier{WeightCoords(rank(), 1)};
    std::unordered_set<WeightCoords, VectorHash> seen(frontier.begin(), frontier.end());
    std::vector<WeylElement> all;
    while (!frontier.empty()) {
      std::vector<WeightCoords> next;
      for (auto& f : frontier) {
        for (int j = 1; j <= rank(); ++j) {
          if (f[j - 1] < 0) continue;  // only go up in length
          auto g = f;
          reflect(g, j);
          if (seen.insert(g).second) next.push_back(g);
        }
        all.push_back(from_fingerprint(std::move(f)));
      }
      frontier = std::move(next);
    }
    std::sort(all.begin(), all.end(), [](const WeylElement& a, const WeylElement& b) {
      if (a.length() != b.length()) return a.length() < b.length();
      return a.word() < b.word();
    });
    for (std::size_t i = 0; i < all.size(); ++i) en.index.emplace(all[i].fingerprint(), i);
    en.elements = std::move(all);
  });
  return en.elements;
}

std::size_t WeylGroup::index_of(const WeylElement& w) const {
  elements();
  return enumeration_->index.at(w.fingerprint());
}

std::vector<WeylElement> WeylGroup::parabolic_elements(const NodeSet& parabolic) const {
  std::vector<WeylElement> out{identity()};
  std::unordered_set<WeightCoords, VectorHash> seen{identity().fingerprint()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int j : parabolic) {
      auto g = out[head].fingerprint();
      reflect(g, j);
      if (seen.insert(g).second) out.push_back(from_fingerprint(std::move(g)));
    }
  }
  std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.word() < b.word();
  });
  return out;
}

void WeylGroup::require_type_a() const {
  if (type_letter() != 'A')
    throw std::invalid_argument("operation requires a group of type A, got " + name());
}

int WeylGroup::type_a_n() const {
  require_type_a();
  return rank() + 1;
}

std::vector<int> WeylGroup::to_permutation(const WeylElement& w) const {
  const int n = type_a_n();
  std::vector<int> perm(n);
  for (int p = 0; p < n; ++p) perm[p] = p + 1;
  // Right multiplication by s_a swaps positions a and a+1.
  for (int a : w.word()) std::swap(perm[a - 1], perm[a]);
  return perm;
}

WeylElement WeylGroup::from_permutation(const std::vector<int>& perm) const {
  const int n = type_a_n();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permutation " + format_permutation(perm) +
                                " does not have length " + std::to_string(n));
  std::vector<int> x(n, -1);
  for (int p = 0; p < n; ++p) {
    const int v = perm[p];
    if (v < 1 || v > n || x[v - 1] != -1)
      throw std::invalid_argument("not a permutation: " + format_permutation(perm));
    x[v - 1] = n - 1 - p;  // w(rho) with rho = (n-1, ..., 0)
  }
  WeightCoords f(rank());
  for (int j = 0; j < rank(); ++j) f[j] = x[j] - x[j + 1];
  return from_fingerprint(std::move(f));
}

WeylElement WeylGroup::parse_element(const std::string& raw) const {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  if (text.empty() || text == "e" || text == "id") return identity();

  const bool reduced_word = text.find('s') != std::string::npos || text.find('.') != std::string::npos;
  if (reduced_word || type_letter() != 'A') {
    std::vector<int> word;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, '.')) {
      if (!tok.empty() && tok[0] == 's') tok = tok.substr(1);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("malformed reduced word '" + raw + "'");
      word.push_back(std::stoi(tok));
    }
    return from_word(word);
  }
  return from_permutation(parse_permutation(text));
}

std::string WeylGroup::format(const WeylElement& w) const {
  std::string s = w.to_string();
  if (type_letter() == 'A') s += " (" + format_permutation(to_permutation(w)) + ")";
  return s;
}

std::string format_permutation(const std::vector<int>& perm) {
  const bool wide = std::any_of(perm.begin(), perm.end(), [](int v) { return v > 9; });
  std::string out;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (wide && k) out += ',';
    out += std::to_string(perm[k]);
  }
  return out;
}

std::vector<int> parse_permutation(const std::string& text) {
  std::vector<int> perm;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) perm.push_back(std::stoi(tok));
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("malformed permutation '" + text + "'");
      perm.push_back(c - '0');
    }
  }
  return perm;
}

bool ehresmann_leq(const std::vector<int>& u, const std::vector<int>& v) {
  const std::size_t n = u.size();
  std::vector<int> a, b;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    a.assign(u.begin(), u.begin() + i + 1);
    b.assign(v.begin(), v.begin() + i + 1);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t k = 0; k <= i; ++k)
      if (a[k] > b[k]) return false;
  }
  return true;
}

}  // namespace schubert
