#pragma once

#include "casson/core.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace casson {

/// One run of a generator: g_index^exponent, index 1-based.
struct Letter {
  int index;
  long exponent;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word in a free group, stored run-length encoded.
/// Adjacent letters never share an index and no exponent is zero.
class Word {
public:
  Word() = default;

  /// Free reduction of an arbitrary letter list. Throws MalformedWord on
  /// a non-positive index.
  static Word reduce(const std::vector<Letter>& raw);
  static Word generator(int index, long exponent = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int max_index() const;
  /// Sum of absolute exponents (the letter-by-letter length).
  long length() const;

  Word inverse() const;
  Word operator*(const Word& rhs) const;
  Word power(long k) const;

  friend bool operator==(const Word&, const Word&) = default;

private:
  std::vector<Letter> letters_;
};

Word free_reduce(const std::vector<Letter>& raw);

/// Total signed exponent of generator k in w; 0 when k does not occur.
long exponent_sum(const Word& w, int k);

/// Parses `g3^-2 g1 g2^4`; the empty string and the token `1` are the identity.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

/// Homomorphism F_source -> F_target given by the images of the generators.
class FreeHom {
public:
  FreeHom(int source_rank, int target_rank, std::vector<Word> images);

  static FreeHom identity(int rank);

  int source_rank() const { return source_rank_; }
  int target_rank() const { return target_rank_; }
  const std::vector<Word>& images() const { return images_; }
  /// Image of generator i (1-based).
  const Word& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }

  Word apply(const Word& w) const;

  friend bool operator==(const FreeHom&, const FreeHom&) = default;

private:
  int source_rank_;
  int target_rank_;
  std::vector<Word> images_;
};

/// target_rank x source_rank matrix whose column i is the exponent vector of
/// f(y_i): the induced map on first homology in the standard bases.
IntMat abelianize(const FreeHom& f);

/// (f o g)(y_i) = f(g(y_i)). Requires g.target_rank == f.source_rank.
FreeHom compose(const FreeHom& f, const FreeHom& g);

} // namespace casson
