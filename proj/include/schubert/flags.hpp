#pragma once

// Complete flags in C^n with exact rational entries (type A_{n-1}).

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "schubert/patterns.hpp"

namespace schubert {

using RationalMatrix = std::vector<std::vector<mpq_class>>;  // row-major

/// F_i is spanned by the first i columns. The matrix must be invertible.
class Flag {
 public:
  explicit Flag(RationalMatrix matrix);

  int n() const { return static_cast<int>(matrix_.size()); }
  const RationalMatrix& matrix() const { return matrix_; }
  const mpq_class& at(int row, int col) const { return matrix_[row][col]; }

 private:
  RationalMatrix matrix_;
};

/// Determinant by fraction-free (Bareiss) elimination.
mpq_class determinant(RationalMatrix m);

/// Minor on rows I (1-based) and columns 1..|I|.
mpq_class plucker_coordinate(const Flag& x, const std::vector<int>& rows);

/// Column i is the basis vector e_{w(i)}.
Flag coordinate_flag(const std::vector<int>& perm);

/// u * P_w with u unipotent upper triangular, off-diagonal entries uniform
/// in [-1000, 1000] \ {0}; resampled until the pattern is generic.
Flag random_cell_point(const PluckerSystem& ps, const WeylElement& w, std::uint64_t seed);

VanishingPattern vanishing_pattern(const PluckerSystem& ps, const Flag& x);

Flag parse_flag_json(const std::string& text);
Flag parse_flag_csv(const std::string& text);
/// Dispatches on the extension (.json or .csv).
Flag load_flag(const std::string& path);
std::string flag_to_json(const Flag& x);

}  // namespace schubert
