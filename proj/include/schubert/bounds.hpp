#pragma once

// Lower bounds for defining Schubert varieties and for recognition without
// feedback (type A).

#include <cstdint>
#include <string>
#include <vector>

#include "schubert/patterns.hpp"

namespace schubert {

using Permutation = std::vector<int>;
using Subset = std::vector<int>;  // sorted, 1-based

std::uint64_t binomial(int n, int k);

struct WitnessFamily {
  int k = 0;
  int n = 0;
  Permutation w;              // longest element of S_2k x S_2k
  std::vector<Permutation> U; // u_{A,B}
};

struct WitnessReport {
  WitnessFamily family;
  bool property1 = false;  // u not <= w for every u
  bool property2 = false;  // |U| = C(2k,k)^2
  bool property3 = false;  // at most C(2k,k) members per bad prefix set
  bool case_counts = false;
  std::uint64_t bound = 0;         // C(2k,k)
  std::uint64_t codimension = 0;   // (n/2)^2
  std::uint64_t max_per_subset = 0;
  bool ok() const { return property1 && property2 && property3 && case_counts; }
  std::string to_json() const;
};

WitnessFamily construct_witness_family(int k);
/// Checks properties (1)-(3) and the per-case counts of the proof.
WitnessReport verify_witness_family(const WitnessFamily& family);

/// Exact minimum hitting set over {u([1,i]) : u([1,i]) not <= w([1,i])} for
/// every u not <= w. A lower bound on the number of equations p_I = 0
/// defining X_w.
struct HittingSetResult {
  int size = 0;
  std::vector<Subset> example;
};
HittingSetResult defining_set_lower_bound(const Permutation& w);

int variety_equation_count(const PluckerSystem& ps, const WeylElement& w);

struct FeedbackFreeResult {
  int n = 0;
  int size = 0;
  std::vector<std::vector<Subset>> solutions;  // all minimum sets
  bool certified = false;  // all realizable patterns (n <= 3)
  std::uint64_t proportion_bound = 0;
  std::string to_json() const;
};

/// n <= 3: minimum sets separating every realizable pattern by cell.
/// n = 4: minimum sets separating the coordinate-flag and generic patterns.
FeedbackFreeResult feedback_free_min_set(int n);

/// ceil((n-1)/(n+1) * (2^n - 1))
std::uint64_t proportion_lower_bound(int n);

struct CodeFamily {
  int n = 0;
  int i = 0;
  std::vector<Subset> subsets;
};

/// Throws std::invalid_argument if two members differ by a single exchange.
bool code_bound_check(const CodeFamily& family);
/// Largest family of i-subsets of [1,n] with no two at exchange distance.
std::size_t max_code_size(int n, int i);

struct ChainReport {
  int k = 0;
  std::vector<Permutation> chain;  // w = v_0 < ... < v_N = w_o
  int N = 0;
  bool saturated = false;
  double per_step_bound = 0;       // C(2k,k) / (4k^2)
  int min_equations_some_step = 0; // ceil of the above
  std::string to_json() const;
};
ChainReport chain_corollary_check(int k);

/// For every i-subset I and every u with u([1,i]) = I, the coordinate pattern
/// of u s_i differs from that of u only at level i.
bool adjacent_exchange_check(int n);

}  // namespace schubert
