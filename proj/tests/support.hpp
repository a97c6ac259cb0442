#pragma once

#include "casson/splitting.hpp"
#include "casson/words.hpp"

#include <random>
#include <vector>

namespace casson::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Random word over `rank` generators with at most `max_length` unit letters.
inline Word random_word(Rng& rng, int rank, int max_length) {
  std::vector<Letter> raw;
  const int length = uniform(rng, 0, max_length);
  for (int i = 0; i < length; ++i) raw.push_back({uniform(rng, 1, rank), uniform(rng, 0, 1) ? 1L : -1L});
  return free_reduce(raw);
}

inline FreeHom random_hom(Rng& rng, int source, int target, int max_length) {
  std::vector<Word> images;
  for (int i = 0; i < source; ++i) images.push_back(random_word(rng, target, max_length));
  return FreeHom(source, target, std::move(images));
}

inline IntMat random_matrix(Rng& rng, Index rows, Index cols, int lo, int hi) {
  IntMat a(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) a(i, j) = uniform(rng, lo, hi);
  return a;
}

/// Valid T = 0 splitting with h1, h2, u <= max_rank and words of length <= max_length.
inline AdaptedSplitting random_t0_splitting(Rng& rng, const GroupKind& kind, int max_rank = 5, int max_length = 8) {
  for (;;) {
    AdaptedSplitting s;
    s.kind = kind;
    s.h1 = uniform(rng, 1, max_rank);
    s.h2 = uniform(rng, 1, max_rank);
    s.g1 = uniform(rng, 0, s.h1);
    s.u = s.h1 + s.h2 - s.g1;
    if (s.u < 1 || s.u > max_rank) continue;
    s.k_map = random_hom(rng, s.u, s.h1, max_length);
    s.l_map = random_hom(rng, s.u, s.h2, max_length);
    s.u_hat_genus = uniform(rng, 0, 6);
    s.orientation_reversed = uniform(rng, 0, 1) == 1;
    return s;
  }
}

inline AdaptedSplitting make_splitting(const GroupKind& kind, int h1, int h2, int u, int g1,
                                       const std::vector<std::string>& k_words,
                                       const std::vector<std::string>& l_words) {
  AdaptedSplitting s;
  s.kind = kind;
  s.h1 = h1;
  s.h2 = h2;
  s.u = u;
  s.g1 = g1;
  std::vector<Word> k, l;
  for (const auto& w : k_words) k.push_back(parse_word(w));
  for (const auto& w : l_words) l.push_back(parse_word(w));
  s.k_map = FreeHom(u, h1, std::move(k));
  s.l_map = FreeHom(u, h2, std::move(l));
  s.u_hat_genus = u;
  return s;
}

/// h1 = g1 = h2 = u = 1, both maps the identity: a product-like splitting.
inline AdaptedSplitting identity_splitting(const GroupKind& kind) {
  return make_splitting(kind, 1, 1, 1, 1, {"g1"}, {"g1"});
}

/// Glue matrix [[2, 1], [0, 3]], so |H^2(M, S1)| = 6.
inline AdaptedSplitting det6_splitting(const GroupKind& kind) {
  return make_splitting(kind, 2, 1, 2, 1, {"g2 g1 g2 g1^-1", "g1"}, {"g1^-1", "g1^-3"});
}

/// k_map only reaches the free H1 generator through a commutator.
inline AdaptedSplitting commutator_splitting(const GroupKind& kind) {
  return make_splitting(kind, 2, 1, 2, 1, {"g2 g1 g2^-1 g1^-1", "g1"}, {"g1", "g1^2"});
}

/// b - c has rank 1 < u, so H^2(M; Q) != 0.
inline AdaptedSplitting rank_deficient_splitting(const GroupKind& kind) {
  return make_splitting(kind, 2, 1, 2, 1, {"g2", "g2^2"}, {"g1", "g1^2"});
}

} // namespace casson::testing
