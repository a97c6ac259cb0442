#include "casson/exterior.hpp"

#include <algorithm>
#include <bit>

namespace casson {

GroupKind GroupKind::unitary(int n) {
  if (n < 1) throw std::invalid_argument("U(n) requires n >= 1");
  return {GroupFamily::Unitary, n};
}

GroupKind GroupKind::special_unitary(int n) {
  if (n < 2) throw std::invalid_argument("SU(n) requires n >= 2");
  return {GroupFamily::SpecialUnitary, n};
}

int GroupKind::lie_rank() const { return family == GroupFamily::Unitary ? n : n - 1; }

std::vector<int> GroupKind::generator_indices() const {
  std::vector<int> js;
  for (int j = family == GroupFamily::Unitary ? 0 : 1; j <= n - 1; ++j) js.push_back(j);
  return js;
}

bool GroupKind::has_generator(int j) const {
  return j >= (family == GroupFamily::Unitary ? 0 : 1) && j <= n - 1;
}

int GroupKind::dimension() const { return family == GroupFamily::Unitary ? n * n : n * n - 1; }

std::string GroupKind::name() const {
  return (family == GroupFamily::Unitary ? "U(" : "SU(") + std::to_string(n) + ")";
}

int ProductAmbient::bit(int k, int j) const {
  if (k < 1 || k > factors) throw std::out_of_range("factor index out of range");
  if (!kind.has_generator(j))
    throw std::out_of_range("x[" + std::to_string(j) + "] is not a generator of " + kind.name());
  const int first = kind.family == GroupFamily::Unitary ? 0 : 1;
  return (k - 1) * kind.lie_rank() + (j - first);
}

std::uint64_t ProductAmbient::top_key() const {
  const int g = generator_count();
  return g == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g) - 1;
}

int ExtMonomial::degree() const {
  int d = 0;
  for (const ExtFactor& f : factors) d += 2 * f.generator + 1;
  return d;
}

ExtElement::ExtElement(ProductAmbient ambient) : ambient_(ambient) {
  if (ambient_.generator_count() > 64)
    throw std::length_error("exterior algebra limited to 64 generators, requested " +
                            std::to_string(ambient_.generator_count()));
}

ExtElement ExtElement::one(ProductAmbient ambient) {
  ExtElement e(ambient);
  e.terms_[0] = 1;
  return e;
}

ExtElement ExtElement::generator(ProductAmbient ambient, int k, int j, BigInt coefficient) {
  ExtElement e(ambient);
  e.add_term(std::uint64_t{1} << ambient.bit(k, j), coefficient);
  return e;
}

ExtElement ExtElement::monomial(ProductAmbient ambient, BigInt coefficient, std::vector<ExtFactor> factors) {
  ExtElement e = one(ambient) * coefficient;
  for (const ExtFactor& f : factors) e = wedge(e, generator(ambient, f.factor, f.generator));
  return e;
}

BigInt ExtElement::coefficient(std::uint64_t key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<ExtMonomial> ExtElement::monomials() const {
  std::vector<ExtMonomial> out;
  const int r = ambient_.kind.lie_rank();
  const int first = ambient_.kind.family == GroupFamily::Unitary ? 0 : 1;
  for (const auto& [key, c] : terms_) {
    ExtMonomial m{c, {}};
    for (int b = 0; b < ambient_.generator_count(); ++b)
      if (key >> b & 1U) m.factors.push_back({b / r + 1, b % r + first});
    out.push_back(std::move(m));
  }
  return out;
}

int ExtElement::degree() const {
  int d = 0;
  bool seen = false;
  for (const ExtMonomial& m : monomials()) {
    if (seen && m.degree() != d) return -1;
    d = m.degree();
    seen = true;
  }
  return d;
}

void ExtElement::add_term(std::uint64_t key, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExtElement& ExtElement::operator+=(const ExtElement& rhs) {
  if (!(ambient_ == rhs.ambient_)) throw std::invalid_argument("ambient mismatch in sum");
  for (const auto& [key, c] : rhs.terms_) add_term(key, c);
  return *this;
}

ExtElement ExtElement::operator+(const ExtElement& rhs) const {
  ExtElement e = *this;
  e += rhs;
  return e;
}

ExtElement ExtElement::operator-() const { return *this * BigInt(-1); }

ExtElement ExtElement::operator*(const BigInt& scalar) const {
  ExtElement e(ambient_);
  for (const auto& [key, c] : terms_) e.add_term(key, c * scalar);
  return e;
}

namespace {

// Sign of moving the odd generators in `right` past those in `left`:
// (-1)^#{(a, b) : a in left, b in right, a > b}.
int merge_sign(std::uint64_t left, std::uint64_t right) {
  int inversions = 0;
  while (right) {
    const int b = std::countr_zero(right);
    right &= right - 1;
    const std::uint64_t above = b == 63 ? 0 : left >> (b + 1);
    inversions += std::popcount(above);
  }
  return inversions % 2 ? -1 : 1;
}

} // namespace

ExtElement wedge(const ExtElement& a, const ExtElement& b) {
  if (!(a.ambient_ == b.ambient_)) throw std::invalid_argument("ambient mismatch in wedge");
  ExtElement out(a.ambient_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      if (ka & kb) continue;
      const BigInt c = ca * cb;
      out.add_term(ka | kb, merge_sign(ka, kb) < 0 ? BigInt(-c) : c);
    }
  return out;
}

ExtElement pullback_primitive(const IntMat& m, int i, int j, const ProductAmbient& ambient) {
  if (!ambient.kind.has_generator(j))
    throw std::out_of_range("x[" + std::to_string(j) + "] is not a generator of " + ambient.kind.name());
  if (m.cols() != ambient.factors || i < 1 || i > m.rows())
    throw ShapeError("pullback matrix does not match the ambient product");
  ExtElement e(ambient);
  for (int k = 1; k <= ambient.factors; ++k)
    e += ExtElement::generator(ambient, k, j, m(i - 1, k - 1));
  return e;
}

BigInt degree_of_word_map(const FreeHom& f, const GroupKind& kind) {
  if (f.source_rank() != f.target_rank())
    throw ShapeError("degree needs an endomorphism-shaped map, got F_" + std::to_string(f.source_rank()) +
                     " -> F_" + std::to_string(f.target_rank()));
  const int n = f.source_rank();
  const ProductAmbient ambient{kind, n};
  // Row i: exponents of each generator in f(y_i).
  const IntMat m = abelianize(f).transpose();
  ExtElement top = ExtElement::one(ambient);
  for (int i = 1; i <= n; ++i)
    for (int j : kind.generator_indices()) top = wedge(top, pullback_primitive(m, i, j, ambient));
  return top.top_coefficient();
}

BigInt cylinder_monomial_value(int m, const GroupKind& kind) {
  if (m < 1) throw std::invalid_argument("cylinder example needs g - h >= 1");
  const ProductAmbient ambient{kind, 2 * m};
  ExtElement product = ExtElement::one(ambient);
  for (int j : kind.generator_indices()) {
    ExtElement y(ambient);
    for (int p = 1; p <= m; ++p)
      y += wedge(ExtElement::generator(ambient, 2 * p - 1, j), ExtElement::generator(ambient, 2 * p, j));
    for (int power = 0; power < m; ++power) product = wedge(product, y);
  }
  return product.top_coefficient();
}

} // namespace casson
