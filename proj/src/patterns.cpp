#include "schubert/patterns.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include <json.hpp>

#include "schubert/flags.hpp"

namespace schubert {

std::string to_string(AcceptFailure failure) {
  switch (failure) {
    case AcceptFailure::none: return "none";
    case AcceptFailure::empty_level: return "empty_level";
    case AcceptFailure::no_unique_max: return "no_unique_max";
    case AcceptFailure::no_common_w: return "no_common_w";
  }
  return "unknown";
}

AcceptabilityReport check_acceptable(const PluckerSystem& ps, const VanishingPattern& b) {
  if (b.bits.size() != ps.size()) throw std::invalid_argument("pattern length does not match the group");
  AcceptabilityReport report;
  const int r = ps.rank();
  report.per_level_max.assign(r, std::nullopt);
  WeightCoords sum(r, 0);
  for (int i = 1; i <= r; ++i) {
    const std::size_t off = ps.level_offset(i), m = ps.level_size(i);
    std::vector<std::size_t> ones;
    for (std::size_t k = off; k < off + m; ++k)
      if (b[k]) ones.push_back(k);
    if (ones.empty()) {
      report.failure_reason = AcceptFailure::empty_level;
      report.failing_level = i;
      return report;
    }
    std::vector<std::size_t> maximal;
    for (std::size_t a : ones) {
      bool dominated = false;
      for (std::size_t c : ones)
        if (c != a && ps.leq(a, c)) {
          dominated = true;
          break;
        }
      if (!dominated) maximal.push_back(a);
    }
    if (maximal.size() != 1) {
      report.failure_reason = AcceptFailure::no_unique_max;
      report.failing_level = i;
      return report;
    }
    report.per_level_max[i - 1] = maximal.front();
    const auto& gamma = ps.weight(maximal.front()).coords;
    for (int k = 0; k < r; ++k) sum[k] += gamma[k];
  }
  // If w.omega_i = gamma_i for every i then w.rho = sum of the gamma_i.
  auto w = ps.group().try_from_fingerprint(sum);
  bool ok = w.has_value();
  for (int i = 1; ok && i <= r; ++i) ok = ps.index_of_image(*w, i) == *report.per_level_max[i - 1];
  if (!ok) {
    report.failure_reason = AcceptFailure::no_common_w;
    return report;
  }
  report.accepted = true;
  report.witness_w = *w;
  return report;
}

VanishingPattern generic_pattern(const PluckerSystem& ps, const WeylElement& w) {
  VanishingPattern b;
  b.bits.assign(ps.size(), false);
  for (int i = 1; i <= ps.rank(); ++i) {
    const std::size_t top = ps.index_of_image(w, i);
    const std::size_t off = ps.level_offset(i), m = ps.level_size(i);
    for (std::size_t k = off; k < off + m; ++k) b.bits[k] = ps.leq(k, top);
  }
  return b;
}

VanishingPattern random_acceptable(const PluckerSystem& ps, const WeylElement& w, std::uint64_t seed,
                                   double p_one) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p_one);
  VanishingPattern b;
  b.bits.assign(ps.size(), false);
  for (int i = 1; i <= ps.rank(); ++i) {
    const std::size_t top = ps.index_of_image(w, i);
    const std::size_t off = ps.level_offset(i), m = ps.level_size(i);
    for (std::size_t k = off; k < off + m; ++k) {
      if (k == top)
        b.bits[k] = true;
      else if (ps.leq(k, top))
        b.bits[k] = coin(rng);
    }
  }
  return b;
}

VanishingPattern coordinate_pattern(const PluckerSystem& ps, const WeylElement& w) {
  VanishingPattern b;
  b.bits.assign(ps.size(), false);
  for (int i = 1; i <= ps.rank(); ++i) b.bits[ps.index_of_image(w, i)] = true;
  return b;
}

std::string restrict_pattern(const VanishingPattern& b, const std::vector<std::size_t>& coords) {
  std::string s;
  for (std::size_t k : coords) s += b[k] ? '1' : '0';
  return s;
}

std::vector<VanishingPattern> realizable_full_patterns_n3(const PluckerSystem& ps) {
  if (ps.group().type_letter() != 'A' || ps.rank() != 2)
    throw std::invalid_argument("exact realizability is implemented for n = 3 only");
  // Coordinates in the order p1 p2 p3 p12 p13 p23.
  const std::array<std::vector<int>, 6> subsets{{{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}}};
  std::array<std::size_t, 6> index{};
  for (int t = 0; t < 6; ++t) index[t] = ps.index_of_subset(subsets[t]);

  std::vector<VanishingPattern> out;
  for (int mask = 0; mask < 64; ++mask) {
    auto bit = [&](int t) { return (mask >> t) & 1; };
    // Non-degeneracy of both columns.
    if (!(bit(0) | bit(1) | bit(2)) || !(bit(3) | bit(4) | bit(5))) continue;
    // p1 p23 - p2 p13 + p3 p12 = 0: a single surviving term cannot vanish.
    const int active = bit(0) * bit(5) + bit(1) * bit(4) + bit(2) * bit(3);
    if (active == 1) continue;

    // Certify with an explicit rational flag: pick values satisfying the
    // relation, then a second column spanning the plane with those minors.
    std::optional<Flag> realization;
    const int a_vals[] = {1, 2};
    const int c_vals[] = {1, -1, 2};
    for (int ai = 0; ai < 8 && !realization; ++ai) {
      std::array<int, 3> a{};
      for (int t = 0; t < 3; ++t) a[t] = bit(t) ? a_vals[(ai >> t) & 1] : 0;
      for (int ci = 0; ci < 27 && !realization; ++ci) {
        std::array<int, 3> c{};
        int code = ci;
        for (int t = 0; t < 3; ++t) {
          c[t] = bit(3 + t) ? c_vals[code % 3] : 0;
          code /= 3;
        }
        if (a[0] * c[2] - a[1] * c[1] + a[2] * c[0] != 0) continue;
        for (int ui = 0; ui < 343 && !realization; ++ui) {
          std::array<int, 3> u{ui % 7 - 3, (ui / 7) % 7 - 3, ui / 49 - 3};
          const std::array<int, 3> minors{a[0] * u[1] - a[1] * u[0], a[0] * u[2] - a[2] * u[0],
                                          a[1] * u[2] - a[2] * u[1]};
          // minors must be a nonzero multiple of c
          bool proportional = true;
          int num = 0, den = 0;
          for (int t = 0; t < 3; ++t) {
            if ((minors[t] == 0) != (c[t] == 0)) proportional = false;
            if (c[t] != 0 && den == 0) {
              num = minors[t];
              den = c[t];
            }
          }
          if (!proportional || den == 0) continue;
          for (int t = 0; t < 3; ++t)
            if (minors[t] * den != c[t] * num) proportional = false;
          if (!proportional) continue;
          for (int e = 0; e < 3 && !realization; ++e) {
            RationalMatrix m(3, std::vector<mpq_class>(3, 0));
            for (int row = 0; row < 3; ++row) {
              m[row][0] = a[row];
              m[row][1] = u[row];
            }
            m[e][2] = 1;
            if (determinant(m) != 0) realization.emplace(std::move(m));
          }
        }
      }
    }
    if (!realization) throw std::logic_error("n = 3 realizability: no witness flag for a feasible pattern");
    VanishingPattern expected;
    expected.bits.assign(ps.size(), false);
    for (int t = 0; t < 6; ++t) expected.bits[index[t]] = bit(t);
    if (vanishing_pattern(ps, *realization) != expected)
      throw std::logic_error("n = 3 realizability: witness flag has a different pattern");
    out.push_back(std::move(expected));
  }
  return out;
}

RealizableSet realizable_restricted_patterns(const PluckerSystem& ps, const std::vector<std::size_t>& coords,
                                             std::uint64_t seed) {
  if (ps.group().type_letter() != 'A' || ps.rank() > 3)
    throw std::invalid_argument("realizable pattern sets are available for type A with n <= 4");
  std::vector<VanishingPattern> full;
  RealizableSet result;
  result.coords = coords;
  if (ps.rank() == 2) {
    full = realizable_full_patterns_n3(ps);
    result.certified = true;
  } else {
    const auto& W = ps.group();
    const int n = W.type_a_n();
    for (const auto& w : W.elements()) {
      full.push_back(vanishing_pattern(ps, coordinate_flag(W.to_permutation(w))));
      full.push_back(vanishing_pattern(ps, random_cell_point(ps, w, seed + W.index_of(w))));
    }
    if (n == 2) {
      result.certified = true;  // two cells, each pattern forced
    } else {
      // Degenerations: sparse small-integer flags.
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<int> entry(-1, 1);
      for (int sample = 0; sample < 4000; ++sample) {
        RationalMatrix m(n, std::vector<mpq_class>(n));
        for (auto& row : m)
          for (auto& v : row) v = entry(rng);
        if (determinant(m) == 0) continue;
        full.push_back(vanishing_pattern(ps, Flag(std::move(m))));
      }
    }
  }
  std::map<std::string, std::vector<WeylElement>> grouped;
  for (const auto& b : full) {
    auto report = check_acceptable(ps, b);
    if (!report.accepted) throw std::logic_error("realized pattern is not acceptable");
    auto& cells = grouped[restrict_pattern(b, coords)];
    if (std::find(cells.begin(), cells.end(), *report.witness_w) == cells.end())
      cells.push_back(*report.witness_w);
  }
  for (auto& [bits, cells] : grouped) {
    std::sort(cells.begin(), cells.end(), [](const WeylElement& x, const WeylElement& y) {
      return x.length() != y.length() ? x.length() < y.length() : x.word() < y.word();
    });
    result.patterns.push_back({bits, cells});
  }
  return result;
}

PatternPoset pattern_poset(const PluckerSystem& ps, const RealizableSet& set) {
  PatternPoset poset;
  for (std::size_t k : set.coords) poset.coord_labels.push_back("p" + ps.label(k));
  for (const auto& p : set.patterns) {
    poset.vertices.push_back(p.bits);
    std::string label;
    for (const auto& w : p.cells) {
      if (!label.empty()) label += " | ";
      label += ps.group().format(w);
    }
    poset.cell_labels.push_back(label);
  }
  const std::size_t n = poset.vertices.size();
  auto below = [&](std::size_t a, std::size_t b) {
    if (a == b) return false;
    for (std::size_t t = 0; t < poset.vertices[a].size(); ++t)
      if (poset.vertices[a][t] == '1' && poset.vertices[b][t] == '0') return false;
    return true;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!below(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (below(a, c) && below(c, b)) cover = false;
      if (cover) poset.covers.emplace_back(a, b);
    }
  return poset;
}

std::string PatternPoset::to_dot() const {
  std::ostringstream out;
  out << "digraph patterns {\n  rankdir=BT;\n";
  out << "  // coordinates:";
  for (const auto& c : coord_labels) out << ' ' << c;
  out << '\n';
  for (std::size_t v = 0; v < vertices.size(); ++v)
    out << "  \"" << vertices[v] << "\" [label=\"" << vertices[v] << "\\n" << cell_labels[v] << "\"];\n";
  for (auto [lo, hi] : covers) out << "  \"" << vertices[lo] << "\" -> \"" << vertices[hi] << "\";\n";
  out << "}\n";
  return out.str();
}

std::string PatternPoset::to_json() const {
  nlohmann::json doc;
  doc["coords"] = coord_labels;
  doc["vertices"] = nlohmann::json::array();
  for (std::size_t v = 0; v < vertices.size(); ++v)
    doc["vertices"].push_back({{"bits", vertices[v]}, {"cell", cell_labels[v]}});
  doc["edges"] = nlohmann::json::array();
  for (auto [lo, hi] : covers) doc["edges"].push_back({vertices[lo], vertices[hi]});
  return doc.dump(2);
}

}  // namespace schubert
