#pragma once

// Brute-force verifiers. Nothing here calls into linalg.hpp: determinants,
// adjugates and ranks are recomputed with small fixed-width arithmetic.

#include "casson/core.hpp"
#include "casson/words.hpp"

#include <cstdint>
#include <vector>

namespace casson::oracle {

/// Point of the torus R^N / Z^N with coordinates numerators[i] / denominator.
struct RationalTarget {
  std::vector<std::int64_t> numerators;
  std::int64_t denominator = 1;
};

struct LatticeCountResult {
  std::int64_t count = 0;
  RationalTarget target;
};

/// A solution landed on the boundary of the fundamental domain; pick another target.
struct NonGenericTarget : Error {
  using Error::Error;
};
struct SingularMatrix : Error {
  using Error::Error;
};
struct SizeLimitExceeded : Error {
  using Error::Error;
};

/// Number of x in [0,1)^N with A x = t (mod Z^N), by enumerating the integer
/// vectors k whose exact rational solution A^{-1}(t + k) lies in the unit cube.
LatticeCountResult torus_preimage_count(const IntMat& a, const RationalTarget& t);

/// `count` generic targets with prime denominators above |det A|, drawn from a
/// seeded generator; non-generic draws are discarded.
std::vector<RationalTarget> generic_targets(const IntMat& a, int count, std::uint64_t seed);

/// Degree of the map U(1)^N -> U(1)^N induced by a square free-group map,
/// as a preimage count at t.
std::int64_t numeric_degree_u1(const FreeHom& f, const RationalTarget& t);

/// |Z^rows / A Z^cols| by breadth-first enumeration of the image lattice
/// modulo d Z^rows, d a nonzero maximal minor. rows, cols <= 3, |entries| <= 4.
GroupOrder cokernel_enumeration(const IntMat& a);

/// Determinant by cofactor expansion (exponential; small matrices only).
std::int64_t cofactor_determinant(const std::vector<std::vector<std::int64_t>>& a);

} // namespace casson::oracle
