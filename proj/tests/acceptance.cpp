// Acceptance suite: one PASS/FAIL line per criterion.
//
// Exit status is 0 when the set of failing criteria equals the set given by
// --expect-fail (empty by default), so a known divergence stays visible in
// the output without breaking ctest, and an unexpected pass or failure does.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schubert/base.hpp"
#include "schubert/bounds.hpp"
#include "schubert/cells.hpp"
#include "schubert/flags.hpp"
#include "schubert/patterns.hpp"
#include "schubert/plucker.hpp"
#include "schubert/recognition.hpp"

using namespace schubert;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      if (notes.size() < 8) notes.push_back(what);
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double seconds;  // runtime limit
  std::function<void(Outcome&)> run;
};

const PluckerSystem& system_for(const std::string& spec) {
  static std::map<std::string, std::unique_ptr<PluckerSystem>> cache;
  auto& slot = cache[spec];
  if (!slot) slot = std::make_unique<PluckerSystem>(std::make_shared<const WeylGroup>(parse_group_spec(spec)));
  return *slot;
}

std::string join_labels(const PluckerSystem& ps, std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end());
  std::string s;
  for (auto k : idx) s += (s.empty() ? "p" : ",p") + ps.label(k);
  return s.empty() ? "-" : s;
}

std::vector<std::size_t> indices(const PluckerSystem& ps, const std::vector<std::vector<int>>& sets) {
  std::vector<std::size_t> out;
  for (const auto& s : sets) out.push_back(ps.index_of_subset(s));
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<std::string>& rank_le4() {
  static const std::vector<std::string> g{"A1", "A2", "A3", "A4", "B2", "B3", "B4",
                                          "C2", "C3", "C4", "D4", "G2"};
  return g;
}

// ---- 1 ----

void a2_descriptions(Outcome& out) {
  const auto& ps = system_for("A2");
  const auto& W = ps.group();
  struct Row {
    std::string w;
    std::string bits;  // p1 p2 p3 p12 p13 p23
    std::vector<std::vector<int>> zero, nonzero;
  };
  const std::vector<Row> rows{
      {"123", "100100", {{3}, {2}, {1, 3}}, {}},
      {"213", "*10100", {{1, 3}, {2, 3}}, {{2}}},
      {"132", "100*10", {{2}, {3}}, {{1, 3}}},
      {"231", "*10**1", {{3}}, {{2, 3}}},
      {"312", "**1*10", {{2, 3}}, {{3}}},
      {"321", "**1**1", {}, {{3}, {2, 3}}},
  };
  const std::vector<std::vector<int>> columns{{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}};
  for (const auto& row : rows) {
    const auto w = W.parse_element(row.w);
    const auto d = cell_description_typeA(ps, w);
    out.require(d.equalities.size() + d.inequalities.size() <= 3, row.w + ": more than 3 constraints");
    const auto want_zero = indices(ps, row.zero), want_one = indices(ps, row.nonzero);
    auto got_zero = d.equalities, got_one = d.inequalities;
    std::sort(got_zero.begin(), got_zero.end());
    std::sort(got_one.begin(), got_one.end());
    if (got_zero != want_zero || got_one != want_one) {
      out.require(false, row.w + ": computed zero{" + join_labels(ps, got_zero) + "} nonzero{" +
                             join_labels(ps, got_one) + "}, expected zero{" + join_labels(ps, want_zero) +
                             "} nonzero{" + join_labels(ps, want_one) + "}");
    }

    std::vector<VanishingPattern> samples;
    samples.push_back(vanishing_pattern(ps, coordinate_flag(W.to_permutation(w))));
    for (int s = 0; s < 100; ++s) samples.push_back(vanishing_pattern(ps, random_cell_point(ps, w, 7919 * s + 1)));
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const auto k = ps.index_of_subset(columns[c]);
      std::set<bool> seen;
      for (const auto& b : samples) seen.insert(b[k]);
      const char want = row.bits[c];
      const bool good = want == '*' ? seen.size() == 2 : seen == std::set<bool>{want == '1'};
      out.require(good, row.w + ": column p" + ps.label(k) + " is not '" + std::string(1, want) + "'");
    }
    out.require(generic_pattern(ps, w) == samples.back(), row.w + ": cell point is not generic");
  }
}

// ---- 2 ----

void restricted_patterns(Outcome& out) {
  const auto& ps = system_for("A2");
  const auto& W = ps.group();
  std::vector<std::size_t> ordered{ps.index_of_subset({2}), ps.index_of_subset({3}), ps.index_of_subset({1, 3}),
                                   ps.index_of_subset({2, 3})};
  const auto set = realizable_restricted_patterns(ps, ordered);
  out.require(set.certified, "realizable set is not certified");
  out.require(set.patterns.size() == 11, "expected 11 patterns, got " + std::to_string(set.patterns.size()));
  std::map<std::string, int> groups;
  for (const auto& p : set.patterns) {
    out.require(p.cells.size() == 1, p.bits + " belongs to several cells");
    if (!p.cells.empty()) ++groups[p.cells.front().to_string()];
  }
  const std::map<std::string, int> expected{{"e", 1},     {"s1", 1},    {"s2", 1},
                                            {"s1.s2", 2}, {"s2.s1", 2}, {"s1.s2.s1", 4}};
  out.require(groups == expected, "cell grouping differs from the expected box sizes");
  const auto poset = pattern_poset(ps, set);
  out.require(poset.vertices.size() == 11, "poset vertex count");
  out.require(poset.vertices.front() == "0000" && poset.cell_labels.front() == W.format(W.identity()),
              "0000 is not labeled e");
  out.require(poset.vertices.back() == "1111" && poset.cell_labels.back() == W.format(W.longest_element()),
              "1111 is not labeled w_o");
}

// ---- 3 ----

void decision_trees(Outcome& out) {
  const auto& ps = system_for("A2");
  const auto opt = build_decision_tree(ps, TreeStrategy::optimal);
  const auto alg = build_decision_tree(ps, TreeStrategy::algorithmic);
  out.require(opt.depth() == 3, "optimal depth " + std::to_string(opt.depth()));
  out.require(alg.nodes[alg.root].weight == ps.index_of_subset({3}),
              "algorithmic root is p" + ps.label(alg.nodes[alg.root].weight));
}

// ---- 4 ----

void query_bound(Outcome& out) {
  for (int n = 2; n <= 6; ++n) {
    const auto& ps = system_for("A" + std::to_string(n - 1));
    const auto& W = ps.group();
    const std::size_t bound = static_cast<std::size_t>(n * (n - 1) / 2);
    for (const auto& w : W.elements()) {
      PatternOracle g(generic_pattern(ps, w));
      FlagOracle pi(ps, coordinate_flag(W.to_permutation(w)));
      const auto a = recognize_typeA(ps, g);
      const auto b = recognize_typeA(ps, pi);
      out.require(a.log.count() <= bound && b.log.count() <= bound, "bound exceeded at " + W.format(w));
      out.require(a.w == W.to_permutation(w) && b.w == W.to_permutation(w), "wrong answer at " + W.format(w));
    }
  }
}

// ---- 5 ----

void economical_classification(Outcome& out) {
  auto expected = [](char type, int r) -> std::vector<int> {
    if (r <= 2) {
      std::vector<int> all(r);
      std::iota(all.begin(), all.end(), 1);
      return all;
    }
    if (type == 'A') return {1, r};
    if (type == 'B' || type == 'C') return {1};
    return {};
  };
  std::vector<std::string> specs{"G2"};
  for (char t : {'A', 'B', 'C'})
    for (int r = (t == 'A' ? 1 : 2); r <= 6; ++r) specs.push_back(std::string(1, t) + std::to_string(r));
  for (int r = 4; r <= 6; ++r) specs.push_back("D" + std::to_string(r));
  for (const auto& spec : specs) {
    const auto& ps = system_for(spec);
    std::vector<int> found;
    for (int i = 1; i <= ps.rank(); ++i)
      if (ps.is_economical_index(i)) found.push_back(i);
    out.require(found == expected(spec[0], ps.rank()), spec + " classification differs");
  }
}

// ---- 6 ----

void description_sizes(Outcome& out) {
  for (const auto& spec : {"A4", "B3", "C3", "G2"}) {
    const auto& ps = system_for(spec);
    const auto dim = ps.group().positive_roots().size();
    for (const auto& w : ps.group().elements()) {
      const auto d = cell_description_economical(ps, w, ps.standard_ordering());
      out.require(d.equalities.size() == dim - w.length(), std::string(spec) + " equalities at " + w.to_string());
      out.require(d.inequalities.size() <= std::min<std::size_t>(ps.rank(), w.length()),
                  std::string(spec) + " inequalities at " + w.to_string());
    }
  }
  const auto& d4 = system_for("D4");
  const auto dim = d4.group().positive_roots().size();
  for (const auto& w : d4.group().elements()) {
    const auto d = cell_description_typeD(d4, w);
    out.require(d.equalities.size() <= dim - w.length() + 1, "D4 equalities at " + w.to_string());
    out.require(d.inequalities.size() <= std::min<std::size_t>(4, w.length()), "D4 inequalities at " + w.to_string());
  }
}

// ---- 7 ----

void recognition_correctness(Outcome& out) {
  for (const auto& spec : rank_le4()) {
    const auto& ps = system_for(spec);
    const auto& W = ps.group();
    const Recognizer rec(ps, ps.standard_ordering());
    for (const auto& w : W.elements()) {
      PatternOracle g(generic_pattern(ps, w));
      out.require(rec.run(g).w == w, spec + " generic " + w.to_string());
      for (int s = 0; s < 100; ++s) {
        PatternOracle o(random_acceptable(ps, w, 100 * W.index_of(w) + s));
        out.require(rec.run(o).w == w, spec + " random " + w.to_string());
      }
    }
  }
}

// ---- 8 ----

void base_results(Outcome& out) {
  for (int n = 3; n <= 5; ++n)
    out.require(weyl_base(system_for("A" + std::to_string(n - 1)).group()).size() == binomial(n + 1, 3),
                "base size of S_" + std::to_string(n));
  for (const auto& spec : rank_le4()) {
    const auto& ps = system_for(spec);
    const auto& W = ps.group();
    std::vector<BaseElement> base;
    try {
      base = weyl_base(W);
    } catch (const std::logic_error& e) {
      out.require(false, spec + ": " + e.what());
      continue;
    }
    for (const auto& b : base)
      out.require(W.left_descents(b.w).size() == 1 && W.right_descents(b.w).size() == 1,
                  spec + " descents of " + b.w.to_string());
    const BaseRecognizer rec(ps);
    for (const auto& w : W.elements()) {
      const auto gen = generic_pattern(ps, w);
      std::vector<bool> bits;
      for (auto k : rec.coords()) bits.push_back(gen[k]);
      out.require(rec.recognize(bits) == w, spec + " base recognition at " + w.to_string());
    }
  }
  out.require(minimality_check(system_for("A2")), "A2 minimality");
  out.require(minimality_check(system_for("A3")), "A3 minimality");
}

// ---- 9 ----

void lower_bounds(Outcome& out) {
  for (int k = 1; k <= 2; ++k) {
    const auto r = verify_witness_family(construct_witness_family(k));
    out.require(r.property1 && r.property2 && r.property3 && r.case_counts,
                "witness properties at k=" + std::to_string(k));
    out.require(r.family.U.size() == (k == 1 ? 4u : 36u), "|U| at k=" + std::to_string(k));
    out.require(r.bound == (k == 1 ? 2u : 6u), "bound at k=" + std::to_string(k));
  }
  const auto ff = feedback_free_min_set(3);
  const std::vector<Subset> example{{2}, {3}, {1, 3}, {2, 3}};
  out.require(ff.size == 4 && ff.solutions.size() == 1 && ff.solutions.front() == example,
              "feedback-free minimum for n=3");
  out.require(ff.size >= static_cast<int>(proportion_lower_bound(3)), "proportion bound for n=3");
}

// ---- 10 ----

void cross_oracle(Outcome& out) {
  for (int n = 2; n <= 5; ++n) {
    const auto& ps = system_for("A" + std::to_string(n - 1));
    const auto& W = ps.group();
    const Recognizer rec(ps, ps.standard_ordering());
    for (const auto& w : W.elements()) {
      const auto x = random_cell_point(ps, w, 0x5eed + W.index_of(w));
      const auto gen = generic_pattern(ps, w);
      out.require(vanishing_pattern(ps, x) == gen, "cell point pattern at " + W.format(w));
      FlagOracle fo(ps, x), fa(ps, x);
      PatternOracle po(gen), pa(gen);
      const auto rf = rec.run(fo), rp = rec.run(po);
      out.require(rf.w == w && rp.w == w, "general recognition at " + W.format(w));
      out.require(rf.log.entries == rp.log.entries, "general logs differ at " + W.format(w));
      const auto af = recognize_typeA(ps, fa), ap = recognize_typeA(ps, pa);
      out.require(af.w == W.to_permutation(w) && ap.w == af.w, "type A recognition at " + W.format(w));
      out.require(af.log.entries == ap.log.entries, "type A logs differ at " + W.format(w));
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite"};
  std::vector<int> expect_fail;
  app.add_option("--expect-fail", expect_fail, "criteria known to fail");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "A2 cell descriptions and 0/1/* coordinate columns", 1.0, a2_descriptions},
      {2, "n=3 restricted patterns (11 patterns, 6 cell groups)", 10.0, restricted_patterns},
      {3, "A2 decision trees (optimal depth 3, algorithmic root p3)", 5.0, decision_trees},
      {4, "type A query bound C(n,2), n <= 6", 60.0, query_bound},
      {5, "economical index classification", 30.0, economical_classification},
      {6, "description sizes", 60.0, description_sizes},
      {7, "recognition on acceptable vectors, rank <= 4", 120.0, recognition_correctness},
      {8, "bases of Weyl groups", 120.0, base_results},
      {9, "lower bounds (witness families, feedback-free n=3)", 60.0, lower_bounds},
      {10, "flag and pattern oracles agree, n <= 5", 60.0, cross_oracle},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream time;
    time << std::fixed << std::setprecision(2) << elapsed << " s";
    out.require(elapsed < c.seconds, "runtime " + time.str() + " exceeds " + std::to_string(c.seconds) + " s");
    if (!out.ok) failed.insert(c.id);
    std::cout << (out.ok ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  " << c.title << "  ["
              << time.str() << "]\n";
    for (const auto& note : out.notes) std::cout << "        " << note << '\n';
  }

  const std::set<int> expected(expect_fail.begin(), expect_fail.end());
  std::cout << failed.size() << " of " << criteria.size() << " criteria failed";
  if (!expected.empty()) std::cout << " (" << expected.size() << " expected)";
  std::cout << '\n';
  return failed == expected ? 0 : 1;
}
