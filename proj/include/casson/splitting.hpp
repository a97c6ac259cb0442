#pragma once

// Adapted Heegaard splitting data for a pair (M, S1) and the homological
// quantities it determines.

#include "casson/core.hpp"
#include "casson/exterior.hpp"
#include "casson/words.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace casson {

/// Free-group data of M = H1 u H2 with U = H1 n H2. The first g1 generators of
/// pi_1(H1) are the generators of pi_1(S1).
struct AdaptedSplitting {
  GroupKind kind = GroupKind::unitary(1);
  int h1 = 1;
  int h2 = 1;
  int u = 1;
  int g1 = 0;
  FreeHom k_map = FreeHom::identity(1); ///< pi_1(U) -> pi_1(H1)
  FreeHom l_map = FreeHom::identity(1); ///< pi_1(U) -> pi_1(H2)
  int u_hat_genus = 1;
  bool orientation_reversed = false;

  /// (h1 + h2 - u) - g1, equal to chi(S1) - chi(M).
  int codimension() const { return (h1 + h2 - u) - g1; }
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  int T = 0;

  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const AdaptedSplitting& s);

/// Matrix of h : L + H^1(H2) -> H^1(U), u x ((h1 - g1) + h2). Columns are the
/// last h1 - g1 columns of b = abelianize(k_map)^T followed by -c = -abelianize(l_map)^T.
IntMat glue_matrix(const AdaptedSplitting& s);

/// Matrix of b - c : H^1(H1) + H^1(H2) -> H^1(U), u x (h1 + h2).
IntMat mayer_vietoris_matrix(const AdaptedSplitting& s);

struct HomologyOfM {
  int betti1 = 0;
  GroupOrder order_h2 = GroupOrder::infinite();
};

HomologyOfM homology_of_M(const AdaptedSplitting& s);

struct PairHomologyReport {
  int betti1_M = 0;
  GroupOrder order_H2_M = GroupOrder::infinite();
  GroupOrder order_H2_pair = GroupOrder::infinite();
  /// Whether H^1(M; Q) -> H^1(S1; Q) is an isomorphism.
  bool restriction_iso = false;
  /// |H^1(S1) / (m.i) H^1(M)|.
  GroupOrder restriction_cokernel = GroupOrder::infinite();
};

PairHomologyReport pair_cohomology(const AdaptedSplitting& s);

/// Adds one trivial handle: the new U generator maps to a new H1 generator
/// under k_map and to the identity under l_map.
AdaptedSplitting stabilize(const AdaptedSplitting& s);

/// For T == 0: the square word map F_u -> F_u realizing
/// (b, a) |-> L(b) . K(a)^{-1} on R(H2) x R(H1, phi), with the H2 generators
/// first and the free H1 generators after them. S1 generators are sent to the
/// identity (phi is constant, so they do not affect the degree).
FreeHom assembled_word_map(const AdaptedSplitting& s);

/// Key-value splitting document:
///   group = U | SU, n, h1, h2, u, g1, [u_hat_genus], [orientation_reversed],
///   k_map = w1 ; w2 ; ... , l_map = ...
/// '#' starts a comment.
AdaptedSplitting parse_splitting(std::istream& in);
AdaptedSplitting parse_splitting(const std::string& text);
AdaptedSplitting load_splitting(const std::string& path);
std::string format_splitting(const AdaptedSplitting& s);

} // namespace casson
