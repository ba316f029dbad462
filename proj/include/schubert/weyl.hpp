#pragma once

// Finite Weyl groups of types A, B, C, D and G2.
//
// Elements are stored as a shortlex-minimal reduced word together with the
// image of rho (the sum of the fundamental weights) written in the basis of
// fundamental weights. The image of rho is a complete invariant: equality and
// hashing go through it, and left descents can be read off its signs.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

namespace schubert {

class UnsupportedGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integer coordinates of a weight in the basis of fundamental weights
/// (equivalently, the pairings with the simple coroots).
using WeightCoords = std::vector<int>;

/// Rational coordinates in the ambient epsilon basis.
using AmbientVector = std::vector<mpq_class>;

/// Node labels 1..r of the Dynkin diagram.
using NodeSet = std::vector<int>;

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

struct CartanDatum {
  char type_letter = 'A';
  int rank = 1;
  /// cartan_matrix[i][j] = <alpha_j, alpha_i^vee>, zero-based indices.
  std::vector<std::vector<int>> cartan_matrix;
  std::vector<std::vector<int>> simple_roots;        // ambient coords
  std::vector<AmbientVector> fundamental_weights;    // ambient coords
  int ambient_dimension = 0;

  std::string name() const;
};

/// Builds the Bourbaki-normalized datum. Throws UnsupportedGroup for E, F,
/// G with rank != 2, D with rank < 4 and ranks above 8.
CartanDatum make_cartan_datum(char type_letter, int rank);

/// Parses "A3", "B2", "D4", "G2".
CartanDatum parse_group_spec(const std::string& spec);

struct Root {
  std::vector<int> coords;      // ambient epsilon coords
  std::vector<int> expansion;   // over simple roots
  std::vector<int> coroot;      // alpha^vee over simple coroots
  int norm2 = 0;                // (alpha, alpha)

  bool positive() const;
  bool operator==(const Root& o) const { return expansion == o.expansion; }
};

class WeylGroup;

class WeylElement {
 public:
  WeylElement() = default;

  const std::vector<int>& word() const { return word_; }
  const WeightCoords& fingerprint() const { return fingerprint_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  /// "s1.s3.s2", or "e" for the identity.
  std::string to_string() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.fingerprint_ == b.fingerprint_;
  }

 private:
  friend class WeylGroup;
  std::vector<int> word_;
  WeightCoords fingerprint_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept {
    return VectorHash{}(w.fingerprint());
  }
};

class WeylGroup {
 public:
  static constexpr std::size_t kEnumerationCap = 1'000'000;

  explicit WeylGroup(CartanDatum datum);

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank; }
  char type_letter() const { return datum_.type_letter; }
  std::string name() const { return datum_.name(); }

  /// |W| from the closed formula for the type.
  std::uint64_t order() const;

  WeylElement identity() const;
  WeylElement generator(int i) const;
  WeylElement from_word(std::span<const int> word) const;
  WeylElement from_fingerprint(WeightCoords image_of_rho) const;
  /// nullopt when the vector is not w(rho) for any w.
  std::optional<WeylElement> try_from_fingerprint(WeightCoords image_of_rho) const;

  WeylElement multiply(const WeylElement& u, const WeylElement& v) const;
  WeylElement inverse(const WeylElement& w) const;
  WeylElement left_multiply(int i, const WeylElement& w) const;
  WeylElement right_multiply(const WeylElement& w, int i) const;

  NodeSet left_descents(const WeylElement& w) const;
  NodeSet right_descents(const WeylElement& w) const;
  bool has_right_descent(const WeylElement& w, int i) const;

  bool bruhat_leq(const WeylElement& u, const WeylElement& v) const;

  /// Minimal-length element of the coset w W_J.
  WeylElement min_coset_rep(const WeylElement& w, const NodeSet& parabolic) const;
  WeylElement longest_element(const NodeSet& parabolic) const;
  WeylElement longest_element() const;
  bool in_parabolic(const WeylElement& w, const NodeSet& parabolic) const;

  // Actions.
  void reflect(WeightCoords& weight, int i) const;
  WeightCoords act(const WeylElement& w, WeightCoords weight) const;
  AmbientVector act_on_weight(const WeylElement& w, AmbientVector v) const;
  std::vector<int> act_on_root(const WeylElement& w, std::vector<int> expansion) const;

  // Roots.
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  Root root_from_expansion(const std::vector<int>& expansion) const;
  WeylElement reflection(const Root& alpha) const;
  /// s_alpha applied to a weight given in fundamental-weight coords.
  WeightCoords reflect_by_root(const Root& alpha, WeightCoords weight) const;
  /// <lambda, alpha^vee>
  int pairing(const WeightCoords& weight, const Root& alpha) const;

  // Coordinate changes.
  AmbientVector to_ambient(const WeightCoords& weight) const;
  /// Throws std::invalid_argument when the vector is not integral on coroots.
  WeightCoords from_ambient(const AmbientVector& v) const;
  mpq_class inner_product(const AmbientVector& a, const AmbientVector& b) const;

  /// All elements sorted by length, then by word. Lazy; thread-safe.
  const std::vector<WeylElement>& elements() const;
  std::size_t index_of(const WeylElement& w) const;

  /// Elements of the parabolic subgroup W_J, sorted as in elements().
  std::vector<WeylElement> parabolic_elements(const NodeSet& parabolic) const;

  // Type A helpers (one-line notation, 1-based values).
  int type_a_n() const;
  std::vector<int> to_permutation(const WeylElement& w) const;
  WeylElement from_permutation(const std::vector<int>& perm) const;

  /// Accepts "e", "s1.s2.s1", "1.2.1", and for type A one-line notation
  /// ("231" or "2,3,1").
  WeylElement parse_element(const std::string& text) const;
  /// Reduced word, plus " (231)" one-line form for type A.
  std::string format(const WeylElement& w) const;

 private:
  void require_type_a() const;

  CartanDatum datum_;
  std::vector<Root> positive_roots_;
  std::vector<std::vector<int>> simple_in_weights_;  // alpha_j in omega coords

  struct Enumeration {
    std::once_flag once;
    std::vector<WeylElement> elements;
    std::unordered_map<WeightCoords, std::size_t, VectorHash> index;
  };
  std::unique_ptr<Enumeration> enumeration_;
};

std::string format_permutation(const std::vector<int>& perm);
std::vector<int> parse_permutation(const std::string& text);

/// Ehresmann tableau criterion for permutations of the same size.
bool ehresmann_leq(const std::vector<int>& u, const std::vector<int>& v);

}  // namespace schubert
