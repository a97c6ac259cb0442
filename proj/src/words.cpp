#include "casson/words.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace casson {

Word Word::reduce(const std::vector<Letter>& raw) {
  Word w;
  auto& out = w.letters_;
  for (const Letter& l : raw) {
    if (l.index <= 0)
      throw MalformedWord("generator index must be positive, got " + std::to_string(l.index));
    if (l.exponent == 0) continue;
    if (!out.empty() && out.back().index == l.index) {
      out.back().exponent += l.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return w;
}

Word Word::generator(int index, long exponent) { return reduce({{index, exponent}}); }

int Word::max_index() const {
  int m = 0;
  for (const Letter& l : letters_) m = std::max(m, l.index);
  return m;
}

long Word::length() const {
  long n = 0;
  for (const Letter& l : letters_) n += std::labs(l.exponent);
  return n;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back({it->index, -it->exponent});
  return w;
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> raw = letters_;
  raw.insert(raw.end(), rhs.letters_.begin(), rhs.letters_.end());
  return reduce(raw);
}

Word Word::power(long k) const {
  const Word base = k < 0 ? inverse() : *this;
  Word result;
  for (long i = 0; i < std::labs(k); ++i) result = result * base;
  return result;
}

Word free_reduce(const std::vector<Letter>& raw) { return Word::reduce(raw); }

long exponent_sum(const Word& w, int k) {
  long s = 0;
  for (const Letter& l : w.letters())
    if (l.index == k) s += l.exponent;
  return s;
}

namespace {

long parse_long(std::string_view s, std::string_view token) {
  long v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw MalformedWord("bad word token '" + std::string(token) + "'");
  return v;
}

} // namespace

Word parse_word(std::string_view text) {
  std::vector<Letter> raw;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    if (token.size() < 2 || token[0] != 'g')
      throw MalformedWord("bad word token '" + token + "'");
    std::string_view body(token);
    body.remove_prefix(1);
    const auto caret = body.find('^');
    const long index = parse_long(body.substr(0, caret), token);
    const long exponent = caret == std::string_view::npos ? 1 : parse_long(body.substr(caret + 1), token);
    if (index <= 0 || index > INT32_MAX)
      throw MalformedWord("generator index must be positive in '" + token + "'");
    raw.push_back({static_cast<int>(index), exponent});
  }
  return Word::reduce(raw);
}

std::string format_word(const Word& w) {
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += 'g' + std::to_string(l.index);
    if (l.exponent != 1) out += '^' + std::to_string(l.exponent);
  }
  return out;
}

FreeHom::FreeHom(int source_rank, int target_rank, std::vector<Word> images)
    : source_rank_(source_rank), target_rank_(target_rank), images_(std::move(images)) {
  if (source_rank_ < 0 || target_rank_ < 0) throw RankMismatch("ranks must be nonnegative");
  if (static_cast<int>(images_.size()) != source_rank_)
    throw RankMismatch("expected " + std::to_string(source_rank_) + " images, got " +
                       std::to_string(images_.size()));
  for (const Word& w : images_)
    if (w.max_index() > target_rank_)
      throw RankMismatch("image word '" + format_word(w) + "' leaves the target free group of rank " +
                         std::to_string(target_rank_));
}

FreeHom FreeHom::identity(int rank) {
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) images.push_back(Word::generator(i));
  return FreeHom(rank, rank, std::move(images));
}

Word FreeHom::apply(const Word& w) const {
  Word out;
  for (const Letter& l : w.letters()) {
    if (l.index > source_rank_)
      throw RankMismatch("generator g" + std::to_string(l.index) + " outside the source free group");
    out = out * image(l.index).power(l.exponent);
  }
  return out;
}

IntMat abelianize(const FreeHom& f) {
  IntMat a = IntMat::Zero(f.target_rank(), f.source_rank());
  for (int i = 0; i < f.source_rank(); ++i)
    for (const Letter& l : f.images()[static_cast<std::size_t>(i)].letters())
      a(l.index - 1, i) += l.exponent;
  return a;
}

FreeHom compose(const FreeHom& f, const FreeHom& g) {
  if (g.target_rank() != f.source_rank())
    throw RankMismatch("cannot compose: inner target rank " + std::to_string(g.target_rank()) +
                       " != outer source rank " + std::to_string(f.source_rank()));
  std::vector<Word> images;
  images.reserve(g.images().size());
  for (const Word& w : g.images()) images.push_back(f.apply(w));
  return FreeHom(g.source_rank(), f.target_rank(), std::move(images));
}

} // namespace casson
