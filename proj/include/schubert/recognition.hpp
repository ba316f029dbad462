#pragma once

// Adaptive cell recognition through a Pluecker-coordinate oracle, and
// decision trees for small groups.

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "schubert/flags.hpp"
#include "schubert/patterns.hpp"

namespace schubert {

class UnacceptableInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Answers "is p_gamma nonzero?" for a global weight index.
class Oracle {
 public:
  virtual ~Oracle() = default;
  virtual bool query(std::size_t weight) = 0;
};

class PatternOracle : public Oracle {
 public:
  explicit PatternOracle(VanishingPattern b) : b_(std::move(b)) {}
  bool query(std::size_t weight) override { return b_.bits.at(weight); }

 private:
  VanishingPattern b_;
};

/// Type A: evaluates the minor on demand.
class FlagOracle : public Oracle {
 public:
  FlagOracle(const PluckerSystem& ps, Flag x) : ps_(ps), x_(std::move(x)) {}
  bool query(std::size_t weight) override { return plucker_coordinate(x_, ps_.subset(weight)) != 0; }

 private:
  const PluckerSystem& ps_;
  Flag x_;
};

struct QueryLog {
  std::vector<std::pair<std::size_t, bool>> entries;
  std::size_t count() const { return entries.size(); }
};

/// Memoizes answers and logs first-time queries.
class CountingOracle : public Oracle {
 public:
  explicit CountingOracle(Oracle& inner) : inner_(inner) {}
  bool query(std::size_t weight) override;
  const QueryLog& log() const { return log_; }

 private:
  Oracle& inner_;
  std::map<std::size_t, bool> memo_;
  QueryLog log_;
};

struct RecognitionResult {
  WeylElement w;
  QueryLog log;
};

/// Scans, level by level in the given ordering, the current coset orbit from
/// the top down and stops at the first nonzero coordinate.
class Recognizer {
 public:
  Recognizer(const PluckerSystem& ps, WeightOrdering ordering);

  /// strict: also query the last candidate of each scan instead of assuming
  /// it is nonzero, and throw UnacceptableInput if it vanishes.
  RecognitionResult run(Oracle& oracle, bool strict = false) const;

  const WeightOrdering& ordering() const { return ordering_; }
  bool economical() const { return economical_; }

 private:
  const PluckerSystem& ps_;
  WeightOrdering ordering_;
  bool economical_;
  std::vector<std::vector<CosetOrbitEntry>> orbits_;  // per position
};

RecognitionResult recognize_general(const PluckerSystem& ps, Oracle& oracle, const WeightOrdering& ordering,
                                    bool strict = false);

/// Type A loop over values k = n, n-1, ...; returns the permutation.
struct PermutationResult {
  std::vector<int> w;
  QueryLog log;
};
/// strict: as for Recognizer::run.
PermutationResult recognize_typeA(const PluckerSystem& ps, Oracle& oracle, bool strict = false);

struct DecisionTree {
  struct Node {
    bool leaf = false;
    std::size_t weight = 0;  // internal: queried coordinate
    int zero = -1, one = -1;
    WeylElement w;           // leaf
  };
  std::vector<Node> nodes;
  int root = -1;

  int depth() const;
  std::size_t leaf_count() const;
  /// Leaf reached by answering queries from the pattern.
  const WeylElement& route(const VanishingPattern& b) const;
  /// Root-to-leaf constraints (weight, bit) for each leaf.
  std::vector<std::pair<WeylElement, QueryLog>> paths() const;
  std::string to_dot(const PluckerSystem& ps) const;
  std::string to_text(const PluckerSystem& ps) const;
};

enum class TreeStrategy { algorithmic, optimal };

/// Cap on |W| for the optimal search.
inline constexpr std::size_t kOptimalTreeCap = 1000;

DecisionTree build_decision_tree(const PluckerSystem& ps, TreeStrategy strategy,
                                 const WeightOrdering& ordering);
DecisionTree build_decision_tree(const PluckerSystem& ps, TreeStrategy strategy);

int worst_case_queries(const PluckerSystem& ps, TreeStrategy strategy);

/// "p3, p2, p13"
std::string format_log(const PluckerSystem& ps, const QueryLog& log);

}  // namespace schubert
