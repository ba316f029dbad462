#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "schubert/weyl.hpp"
#include "schubert/plucker.hpp"

namespace testing {

inline std::shared_ptr<const schubert::WeylGroup> group(const std::string& spec) {
  return std::make_shared<const schubert::WeylGroup>(schubert::parse_group_spec(spec));
}

inline const schubert::PluckerSystem& plucker(const std::string& spec) {
  static std::map<std::string, std::unique_ptr<schubert::PluckerSystem>> cache;
  auto& slot = cache[spec];
  if (!slot) slot = std::make_unique<schubert::PluckerSystem>(group(spec));
  return *slot;
}

inline std::size_t subset(const schubert::PluckerSystem& ps, std::vector<int> s) {
  return ps.index_of_subset(std::move(s));
}

inline std::vector<std::size_t> subsets(const schubert::PluckerSystem& ps,
                                        const std::vector<std::vector<int>>& list) {
  std::vector<std::size_t> out;
  for (const auto& s : list) out.push_back(ps.index_of_subset(s));
  std::sort(out.begin(), out.end());
  return out;
}

/// Groups covered by the exhaustive checks at rank <= 4.
inline const std::vector<std::string>& small_groups() {
  static const std::vector<std::string> g{"A1", "A2", "A3", "A4", "B2", "B3", "B4",
                                          "C2", "C3", "C4", "D4", "G2"};
  return g;
}

}  // namespace testing
