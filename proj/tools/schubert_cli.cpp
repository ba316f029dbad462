#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "schubert/base.hpp"
#include "schubert/bounds.hpp"
#include "schubert/cells.hpp"
#include "schubert/recognition.hpp"

using namespace schubert;

namespace {

// Malformed user input; reported with exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename F>
auto parsing(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const UnsupportedGroup&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("cannot parse " + what + ": " + e.what());
  }
}

struct Options {
  std::string group = "A2";
  std::string element;
  std::string format;
  std::uint64_t seed = 1;
};

std::shared_ptr<PluckerSystem> load_group(const std::string& spec) {
  auto datum = parsing("group '" + spec + "'", [&] { return parse_group_spec(spec); });
  return std::make_shared<PluckerSystem>(datum);
}

std::string format_or(const Options& o, const std::string& fallback) {
  const std::string f = o.format.empty() ? fallback : o.format;
  if (f != "plain" && f != "json" && f != "dot") throw UsageError("unknown format '" + f + "'");
  return f;
}

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw UsageError("format '" + f + "' is not available for this command");
}

std::string element_text(const WeylGroup& W, const WeylElement& w) {
  if (W.type_letter() == 'A') return format_permutation(W.to_permutation(w));
  return w.to_string();
}

int run_describe(const Options& o, bool variety) {
  auto ps = load_group(o.group);
  const auto& W = ps->group();
  auto w = parsing("element '" + o.element + "'", [&] { return W.parse_element(o.element); });
  const auto f = format_or(o, "plain");
  require_format(f, {"plain", "json"});
  if (variety) {
    auto d = variety_equations(*ps, w);
    std::cout << (f == "json" ? variety_to_json(*ps, d) : format_variety(*ps, d)) << '\n';
  } else {
    auto d = cell_description(*ps, w);
    std::cout << (f == "json" ? description_to_json(*ps, d) : format_description(*ps, d)) << '\n';
  }
  return 0;
}

// Either a bit string in orbit order or a JSON map {"13": 0, ...} that
// names every coordinate.
VanishingPattern parse_bits(const PluckerSystem& ps, const std::string& text) {
  VanishingPattern b;
  if (text.find('{') != std::string::npos) {
    const auto doc = nlohmann::json::parse(text);
    std::vector<int> bits(ps.size(), -1);
    for (const auto& [label, value] : doc.items()) {
      if (!value.is_number_integer() || (value != 0 && value != 1))
        throw std::invalid_argument("value of " + label + " must be 0 or 1");
      bits[ps.parse_label(label)] = value.get<int>();
    }
    for (std::size_t k = 0; k < bits.size(); ++k) {
      if (bits[k] < 0) throw std::invalid_argument("missing coordinate p" + ps.label(k));
      b.bits.push_back(bits[k] == 1);
    }
    return b;
  }
  for (char c : text) {
    if (c == '0' || c == '1')
      b.bits.push_back(c == '1');
    else if (c != ' ' && c != ',')
      throw std::invalid_argument("pattern must consist of 0 and 1");
  }
  if (b.bits.size() != ps.size())
    throw std::invalid_argument("pattern needs " + std::to_string(ps.size()) + " bits");
  return b;
}

int run_recognize(const Options& o, const std::string& flag_path, const std::string& pattern, bool trace,
                  bool strict) {
  auto ps = load_group(o.group);
  const auto& W = ps->group();
  std::unique_ptr<Oracle> oracle;
  if (!flag_path.empty()) {
    if (W.type_letter() != 'A') throw UsageError("--flag requires a type A group");
    auto x = parsing("flag file " + flag_path, [&] { return load_flag(flag_path); });
    if (x.n() != W.type_a_n()) throw UsageError("flag size does not match " + W.name());
    oracle = std::make_unique<FlagOracle>(*ps, std::move(x));
  } else if (!pattern.empty()) {
    oracle = std::make_unique<PatternOracle>(parsing("pattern", [&] { return parse_bits(*ps, pattern); }));
  } else {
    throw UsageError("recognize needs --flag or --pattern");
  }
  const auto result = recognize_general(*ps, *oracle, ps->standard_ordering(), strict);
  const auto f = format_or(o, "plain");
  require_format(f, {"plain", "json"});
  if (f == "json") {
    auto log = nlohmann::json::array();
    for (auto [k, bit] : result.log.entries) log.push_back({{"coordinate", "p" + ps->label(k)}, {"nonzero", bit}});
    std::cout << nlohmann::json{{"w", element_text(W, result.w)}, {"word", result.w.to_string()},
                                {"queries", result.log.count()}, {"log", log}}
                     .dump(2)
              << '\n';
    return 0;
  }
  if (trace)
    for (auto [k, bit] : result.log.entries) std::cout << "p" << ps->label(k) << (bit ? " != 0" : " = 0") << '\n';
  std::cout << "w = " << element_text(W, result.w) << "; queries = " << result.log.count() << " ("
            << format_log(*ps, result.log) << ")\n";
  return 0;
}

int run_tree(const Options& o, bool optimal) {
  auto ps = load_group(o.group);
  const auto tree = build_decision_tree(*ps, optimal ? TreeStrategy::optimal : TreeStrategy::algorithmic);
  const auto f = format_or(o, "dot");
  require_format(f, {"plain", "dot"});
  if (f == "dot")
    std::cout << tree.to_dot(*ps);
  else
    std::cout << tree.to_text(*ps) << "depth = " << tree.depth() << '\n';
  return 0;
}

int run_base(const Options& o) {
  auto ps = load_group(o.group);
  const auto& W = ps->group();
  const auto base = weyl_base(W);
  const auto weights = base_weights(*ps);
  const auto f = format_or(o, "plain");
  require_format(f, {"plain", "json"});
  std::map<std::vector<int>, std::array<int, 3>> triples;
  if (W.type_letter() == 'A')
    for (const auto& b : bigrassmannian_typeA(W.type_a_n())) triples[b.permutation] = b.triple;
  nlohmann::json doc = nlohmann::json::array();
  for (std::size_t t = 0; t < base.size(); ++t) {
    const auto& u = base[t];
    const std::string coord = "p" + ps->label(weights[t]);
    if (f == "json") {
      nlohmann::json entry{{"element", element_text(W, u.w)}, {"word", u.w.to_string()},
                           {"left_descent", u.left_descent}, {"right_descent", u.right_descent},
                           {"coordinate", coord}};
      if (W.type_letter() == 'A') entry["triple"] = triples.at(W.to_permutation(u.w));
      doc.push_back(entry);
      continue;
    }
    std::cout << element_text(W, u.w);
    if (W.type_letter() == 'A') {
      const auto tr = triples.at(W.to_permutation(u.w));
      std::cout << "  (a,b,c) = (" << tr[0] << "," << tr[1] << "," << tr[2] << ")";
    } else {
      std::cout << "  left " << u.left_descent << ", right " << u.right_descent;
    }
    std::cout << "  " << coord << '\n';
  }
  if (f == "json") std::cout << doc.dump(2) << '\n';
  return 0;
}

int run_patterns(const Options& o, int n, const std::vector<std::string>& coord_labels) {
  if (n < 2 || n > 4) throw UsageError("patterns-poset supports 2 <= n <= 4");
  PluckerSystem ps(make_cartan_datum('A', n - 1));
  std::vector<std::size_t> coords;
  if (coord_labels.empty()) {
    coords = base_weights(ps);
    std::sort(coords.begin(), coords.end());
  } else {
    for (auto label : coord_labels) {
      if (!label.empty() && label[0] == 'p') label.erase(0, 1);
      coords.push_back(parsing("coordinate '" + label + "'", [&] { return ps.parse_label(label); }));
    }
  }
  const auto set = realizable_restricted_patterns(ps, coords, o.seed);
  const auto poset = pattern_poset(ps, set);
  const auto f = format_or(o, "plain");
  if (f == "dot") {
    std::cout << poset.to_dot();
  } else if (f == "json") {
    std::cout << poset.to_json() << '\n';
  } else {
    std::cout << "coordinates:";
    for (const auto& c : poset.coord_labels) std::cout << ' ' << c;
    std::cout << "\n" << poset.vertices.size() << " patterns (" << (set.certified ? "complete" : "sampled")
              << ")\n";
    for (std::size_t v = 0; v < poset.vertices.size(); ++v)
      std::cout << poset.vertices[v] << "  " << poset.cell_labels[v] << '\n';
  }
  return 0;
}

int run_bounds(const Options& o, int witness, int feedback, const std::string& defining, int chain) {
  const auto f = format_or(o, "plain");
  require_format(f, {"plain", "json"});
  const bool json = f == "json";
  int done = 0;
  if (witness > 0) {
    ++done;
    const auto report = verify_witness_family(construct_witness_family(witness));
    if (json) {
      std::cout << report.to_json() << '\n';
    } else {
      std::cout << "k = " << report.family.k << ", n = " << report.family.n
                << ", w = " << format_permutation(report.family.w) << '\n'
                << "|U| = " << report.family.U.size() << "; lower bound = " << report.bound
                << "; codimension = " << report.codimension << '\n'
                << "properties (1)(2)(3): " << report.property1 << report.property2 << report.property3
                << "; case counts: " << report.case_counts << '\n';
    }
  }
  if (feedback > 0) {
    ++done;
    const auto r = feedback_free_min_set(feedback);
    if (json) {
      std::cout << r.to_json() << '\n';
    } else {
      std::cout << "n = " << r.n << ": minimum size " << r.size << " (" << r.solutions.size()
                << " solution" << (r.solutions.size() == 1 ? "" : "s")
                << (r.certified ? "" : ", coordinate and generic flags only") << "); proportion bound "
                << r.proportion_bound << '\n';
      for (const auto& s : r.solutions) {
        std::cout << " ";
        for (const auto& I : s) {
          std::cout << " p";
          for (int v : I) std::cout << v;
        }
        std::cout << '\n';
      }
    }
  }
  if (!defining.empty()) {
    ++done;
    const auto w = parsing("permutation '" + defining + "'", [&] { return parse_permutation(defining); });
    PluckerSystem ps(make_cartan_datum('A', static_cast<int>(w.size()) - 1));
    const auto lower = defining_set_lower_bound(w);
    const int upper = variety_equation_count(ps, ps.group().from_permutation(w));
    std::vector<std::string> labels;
    for (const auto& I : lower.example) {
      std::string s = "p";
      for (int v : I) s += std::to_string(v);
      labels.push_back(s);
    }
    if (json) {
      std::cout << nlohmann::json{{"w", defining}, {"lower_bound", lower.size}, {"hitting_set", labels},
                                  {"upper_bound", upper}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << "w = " << defining << ": lower bound " << lower.size << " (hitting set";
      for (const auto& l : labels) std::cout << ' ' << l;
      std::cout << "); upper bound " << upper << '\n';
    }
  }
  if (chain > 0) {
    ++done;
    const auto r = chain_corollary_check(chain);
    if (json) {
      std::cout << r.to_json() << '\n';
    } else {
      std::cout << "N = " << r.N << "; saturated = " << r.saturated << "; per-step bound " << r.per_step_bound
                << " -> some step needs >= " << r.min_equations_some_step << " equation(s)\n";
    }
  }
  if (done == 0) throw UsageError("bounds needs --witness, --feedback-free, --defining or --chain");
  return 0;
}

int run_economical(const Options& o) {
  auto ps = load_group(o.group);
  const auto f = format_or(o, "plain");
  require_format(f, {"plain", "json"});
  std::vector<int> indices;
  std::vector<int> linear;
  for (int i = 1; i <= ps->rank(); ++i) {
    if (ps->is_economical_index(i)) indices.push_back(i);
    if (ps->linear_order_check(i)) linear.push_back(i);
  }
  const auto ordering = ps->standard_ordering();
  const bool econ = ps->is_economical_ordering(ordering);
  if (f == "json") {
    std::cout << nlohmann::json{{"group", ps->group().name()},
                                {"economical_indices", indices},
                                {"linear_orbits", linear},
                                {"standard_ordering", ordering.nodes()},
                                {"standard_ordering_economical", econ}}
                     .dump(2)
              << '\n';
    return 0;
  }
  auto list = [](const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s.empty() ? std::string("none") : s;
  };
  std::cout << "economical indices: " << list(indices) << '\n'
            << "linearly ordered orbits: " << list(linear) << '\n'
            << "standard ordering " << ordering.to_string() << (econ ? " is" : " is not") << " economical\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert cells through vanishing patterns of Pluecker coordinates"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "plain, json or dot");
  app.add_option("--seed", o.seed, "seed for sampled constructions");

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group,-g", o.group, "A3, B2, C3, D4, G2, ...")->capture_default_str();
    sub->add_option("--format", o.format, "plain, json or dot");
    sub->add_option("--seed", o.seed, "seed for sampled constructions");
  };

  bool variety = false;
  auto* describe = app.add_subcommand("describe", "equations and inequations of a Schubert cell");
  add_group(describe);
  describe->add_option("--w,-w", o.element, "element: one-line permutation or word s1.s2")->required();
  describe->add_flag("--variety", variety, "equations of the Schubert variety instead");

  auto* describe_variety = app.add_subcommand("describe-variety", "equations of a Schubert variety");
  add_group(describe_variety);
  describe_variety->add_option("--w,-w", o.element, "element")->required();

  std::string flag_path, pattern;
  bool trace = false, strict = false;
  auto* recognize = app.add_subcommand("recognize", "find the Schubert cell of a flag or pattern");
  add_group(recognize);
  recognize->add_option("--flag", flag_path, "flag matrix (.json or .csv)");
  recognize->add_option("--pattern", pattern, "bits in orbit order, or a JSON map label -> 0/1");
  recognize->add_flag("--trace", trace, "print each query");
  recognize->add_flag("--strict", strict, "query the last candidate of each scan as well");

  bool optimal = false;
  auto* tree = app.add_subcommand("tree", "recognition decision tree");
  add_group(tree);
  tree->add_flag("--optimal", optimal, "minimax-optimal tree instead of the algorithm's");

  auto* base = app.add_subcommand("base", "base of the Bruhat order and its Pluecker weights");
  add_group(base);

  int n = 3;
  std::vector<std::string> coords;
  auto* patterns = app.add_subcommand("patterns-poset", "realizable restricted vanishing patterns");
  patterns->add_option("--n", n, "flag dimension (2..4)")->capture_default_str();
  patterns->add_option("--coords", coords, "coordinates, e.g. p2 p3 p13 p23")->delimiter(',');
  patterns->add_option("--format", o.format, "plain, json or dot");
  patterns->add_option("--seed", o.seed, "seed for sampling");

  int witness = 0, feedback = 0, chain = 0;
  std::string defining;
  auto* bounds = app.add_subcommand("bounds", "lower bounds for type A");
  bounds->add_option("--witness", witness, "witness family for n = 4k");
  bounds->add_option("--feedback-free", feedback, "minimum feedback-free coordinate set for n");
  bounds->add_option("--defining", defining, "hitting-set lower bound for X_w (permutation)");
  bounds->add_option("--chain", chain, "saturated chain bound for n = 4k");
  bounds->add_option("--format", o.format, "plain or json");

  auto* economical = app.add_subcommand("economical", "economical indices and orderings");
  add_group(economical);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*describe) return run_describe(o, variety);
    if (*describe_variety) return run_describe(o, true);
    if (*recognize) return run_recognize(o, flag_path, pattern, trace, strict);
    if (*tree) return run_tree(o, optimal);
    if (*base) return run_base(o);
    if (*patterns) return run_patterns(o, n, coords);
    if (*bounds) return run_bounds(o, witness, feedback, defining, chain);
    if (*economical) return run_economical(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n' << app.help();
    return 2;
  } catch (const UnsupportedGroup& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
