#pragma once

// Integral cohomology of products of unitary groups as an exterior algebra on
// odd-degree primitive generators, and pullbacks through word maps.

#include "casson/core.hpp"
#include "casson/words.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace casson {

enum class GroupFamily { Unitary, SpecialUnitary };

struct GroupKind {
  GroupFamily family;
  int n;

  static GroupKind unitary(int n);
  static GroupKind special_unitary(int n);

  /// Number of primitive generators: n for U(n), n-1 for SU(n).
  int lie_rank() const;
  /// Indices j of the primitive generators x[j] (degree 2j+1).
  std::vector<int> generator_indices() const;
  bool has_generator(int j) const;
  /// Dimension of the group as a manifold.
  int dimension() const;
  std::string name() const;

  friend bool operator==(const GroupKind&, const GroupKind&) = default;
};

/// H*(G^N; Z): generators pi_k^*(x[j]) for k = 1..N, ordered k-major then j.
struct ProductAmbient {
  GroupKind kind;
  int factors;

  int generator_count() const { return factors * kind.lie_rank(); }
  /// Bit position of pi_k^*(x[j]).
  int bit(int k, int j) const;
  std::uint64_t top_key() const;

  friend bool operator==(const ProductAmbient&, const ProductAmbient&) = default;
};

struct ExtFactor {
  int factor; ///< k, 1-based
  int generator; ///< j

  friend bool operator==(const ExtFactor&, const ExtFactor&) = default;
};

struct ExtMonomial {
  BigInt coefficient;
  std::vector<ExtFactor> factors; ///< sorted by (k, j)

  int degree() const;
};

/// Element of the exterior algebra over a ProductAmbient. A monomial is keyed
/// by the bitmask of its factor set; zero coefficients are never stored.
class ExtElement {
public:
  explicit ExtElement(ProductAmbient ambient);

  static ExtElement one(ProductAmbient ambient);
  static ExtElement generator(ProductAmbient ambient, int k, int j, BigInt coefficient = 1);
  /// Build from (possibly unsorted) factor list; sorting applies the
  /// permutation sign. A repeated factor yields zero.
  static ExtElement monomial(ProductAmbient ambient, BigInt coefficient, std::vector<ExtFactor> factors);

  const ProductAmbient& ambient() const { return ambient_; }
  const std::map<std::uint64_t, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(std::uint64_t key) const;
  BigInt top_coefficient() const { return coefficient(ambient_.top_key()); }
  std::vector<ExtMonomial> monomials() const;
  /// Degree if homogeneous, -1 for mixed degrees; 0 for the zero element.
  int degree() const;

  ExtElement& operator+=(const ExtElement& rhs);
  ExtElement operator+(const ExtElement& rhs) const;
  ExtElement operator-() const;
  ExtElement operator*(const BigInt& scalar) const;

  friend bool operator==(const ExtElement&, const ExtElement&) = default;

private:
  void add_term(std::uint64_t key, const BigInt& c);
  friend ExtElement wedge(const ExtElement& a, const ExtElement& b);

  ProductAmbient ambient_;
  std::map<std::uint64_t, BigInt> terms_;
};

/// Graded-commutative product; every generator is odd so each transposition
/// contributes a sign.
ExtElement wedge(const ExtElement& a, const ExtElement& b);

/// sum_k M(i,k) pi_k^*(x[j]): the pullback of pi_i^*(x[j]) through the word map
/// whose exponent-sum matrix has rows indexed by target factors (M(i,k) is the
/// exponent of generator k in the i-th image word). i is 1-based.
ExtElement pullback_primitive(const IntMat& m, int i, int j, const ProductAmbient& ambient);

/// Mapping degree of G : G^N -> G^N induced by a square free-group map, by full
/// expansion of the pulled-back top class. The sign is relative to the
/// k-major generator ordering of the top class.
BigInt degree_of_word_map(const FreeHom& f, const GroupKind& kind);

/// Top coefficient of (prod_j y_j)^m on the product cycle G^{2m}, where
/// y_j = sum_p a_j^(p) ^ b_j^(p) pairs the factors (2p-1, 2p).
BigInt cylinder_monomial_value(int m, const GroupKind& kind);

} // namespace casson
