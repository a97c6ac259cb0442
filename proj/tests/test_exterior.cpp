#include "casson/exterior.hpp"
#include "casson/linalg.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace casson;
using casson::testing::Rng;

namespace {

const ProductAmbient u2x2{GroupKind::unitary(2), 2};

ExtElement random_element(Rng& rng, const ProductAmbient& ambient, int terms) {
  ExtElement e(ambient);
  const auto js = ambient.kind.generator_indices();
  for (int t = 0; t < terms; ++t) {
    std::vector<ExtFactor> factors;
    const int size = testing::uniform(rng, 0, 3);
    for (int f = 0; f < size; ++f)
      factors.push_back({testing::uniform(rng, 1, ambient.factors), js[static_cast<std::size_t>(
                                                                         testing::uniform(rng, 0, static_cast<int>(js.size()) - 1))]});
    e += ExtElement::monomial(ambient, testing::uniform(rng, -3, 3), factors);
  }
  return e;
}

// Homogeneous odd element: a linear combination of generators of one degree.
ExtElement random_primitive(Rng& rng, const ProductAmbient& ambient, int j) {
  ExtElement e(ambient);
  for (int k = 1; k <= ambient.factors; ++k) e += ExtElement::generator(ambient, k, j, testing::uniform(rng, -4, 4));
  return e;
}

} // namespace

TEST_CASE("group kinds") {
  CHECK(GroupKind::unitary(3).generator_indices() == std::vector<int>{0, 1, 2});
  CHECK(GroupKind::special_unitary(3).generator_indices() == std::vector<int>{1, 2});
  CHECK(GroupKind::unitary(3).lie_rank() == 3);
  CHECK(GroupKind::special_unitary(3).lie_rank() == 2);
  CHECK(GroupKind::special_unitary(4).dimension() == 15);
  // Degrees of the primitive generators add up to the dimension.
  for (const GroupKind kind : {GroupKind::unitary(1), GroupKind::unitary(4), GroupKind::special_unitary(2),
                               GroupKind::special_unitary(5)}) {
    int sum = 0;
    for (int j : kind.generator_indices()) sum += 2 * j + 1;
    CHECK(sum == kind.dimension());
  }
  CHECK_THROWS(GroupKind::special_unitary(1));
  CHECK_THROWS(GroupKind::unitary(0));
}

TEST_CASE("wedge sign rules") {
  const ExtElement a = ExtElement::generator(u2x2, 1, 0);
  const ExtElement b = ExtElement::generator(u2x2, 2, 1);
  CHECK(wedge(a, a).is_zero());
  CHECK(wedge(a, b) == -wedge(b, a));
  CHECK(wedge(a + b, a + b).is_zero());
  CHECK((wedge(a, b) + wedge(b, a)).is_zero());
  CHECK(wedge(a, b).degree() == 1 + 3);
}

TEST_CASE("monomial construction sorts with the permutation sign") {
  const ExtElement sorted = ExtElement::monomial(u2x2, 5, {{1, 0}, {1, 1}, {2, 0}});
  const ExtElement swapped = ExtElement::monomial(u2x2, 5, {{2, 0}, {1, 0}, {1, 1}});
  CHECK(swapped == sorted); // a cyclic 3-permutation is even
  CHECK(ExtElement::monomial(u2x2, 5, {{1, 1}, {1, 0}, {2, 0}}) == -sorted);
  CHECK(ExtElement::monomial(u2x2, 5, {{1, 1}, {1, 1}}).is_zero());

  const auto monomials = sorted.monomials();
  REQUIRE(monomials.size() == 1);
  CHECK(monomials[0].coefficient == 5);
  CHECK(monomials[0].factors == std::vector<ExtFactor>{{1, 0}, {1, 1}, {2, 0}});
  CHECK(monomials[0].degree() == 1 + 3 + 1);
}

TEST_CASE("wedge rejects mismatched ambients") {
  const ProductAmbient other{GroupKind::unitary(2), 3};
  CHECK_THROWS(wedge(ExtElement::generator(u2x2, 1, 0), ExtElement::generator(other, 1, 0)));
}

TEST_CASE("property: wedge is associative and graded commutative") {
  Rng rng(21);
  const ProductAmbient ambient{GroupKind::unitary(3), 3};
  for (int trial = 0; trial < 100; ++trial) {
    const ExtElement a = random_element(rng, ambient, 4);
    const ExtElement b = random_element(rng, ambient, 4);
    const ExtElement c = random_element(rng, ambient, 4);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));

    const int j = testing::uniform(rng, 0, 2);
    const ExtElement x = random_primitive(rng, ambient, j);
    const ExtElement y = random_primitive(rng, ambient, testing::uniform(rng, 0, 2));
    CHECK(wedge(x, x).is_zero());
    CHECK(wedge(x, y) == -wedge(y, x));
    const ExtElement even = wedge(x, y);
    CHECK(wedge(even, a) == wedge(a, even));
  }
}

TEST_CASE("pullback of primitive classes") {
  const ProductAmbient one{GroupKind::unitary(3), 1};
  for (int j = 0; j < 3; ++j)
    CHECK(pullback_primitive(IntMat::Constant(1, 1, BigInt(7)), 1, j, one) == ExtElement::generator(one, 1, j, 7));

  const ProductAmbient two{GroupKind::unitary(2), 2};
  IntMat m(2, 2);
  m << 1, 2, 0, 1;
  CHECK(pullback_primitive(m, 1, 1, two) == ExtElement::generator(two, 1, 1) + ExtElement::generator(two, 2, 1, 2));
  CHECK(pullback_primitive(IntMat::Identity(2, 2), 2, 0, two) == ExtElement::generator(two, 2, 0));

  const ProductAmbient su{GroupKind::special_unitary(3), 2};
  CHECK_THROWS(pullback_primitive(m, 1, 0, su));
  CHECK_THROWS(pullback_primitive(m, 1, 3, su));
}

TEST_CASE("property: pullback coefficients do not depend on j") {
  Rng rng(22);
  const ProductAmbient ambient{GroupKind::unitary(4), 3};
  for (int trial = 0; trial < 50; ++trial) {
    const IntMat m = testing::random_matrix(rng, 3, 3, -5, 5);
    const int i = testing::uniform(rng, 1, 3);
    for (int j = 0; j < 4; ++j) {
      const ExtElement e = pullback_primitive(m, i, j, ambient);
      for (int k = 1; k <= 3; ++k)
        CHECK(e.coefficient(std::uint64_t{1} << ambient.bit(k, j)) == m(i - 1, k - 1));
    }
  }
}

TEST_CASE("degree of word maps") {
  for (const GroupKind kind : {GroupKind::unitary(1), GroupKind::unitary(3), GroupKind::special_unitary(3)})
    CHECK(degree_of_word_map(FreeHom::identity(3), kind) == 1);

  for (int n = 1; n <= 4; ++n)
    for (int r = -3; r <= 5; ++r) {
      const FreeHom power(1, 1, {Word::generator(1, r)});
      CHECK(degree_of_word_map(power, GroupKind::unitary(n)) == pow(BigInt(r), static_cast<unsigned>(n)));
    }

  // Abelianization [[2,1],[0,3]] (columns are image exponent vectors).
  const FreeHom f(2, 2, {parse_word("g1 g2^-1 g1 g2"), parse_word("g2 g1 g2^2")});
  CHECK(determinant(abelianize(f)) == 6);
  CHECK(degree_of_word_map(f, GroupKind::unitary(2)) == 36);
  CHECK(abs(degree_of_word_map(f, GroupKind::unitary(3))) == 216);
  CHECK(abs(degree_of_word_map(f, GroupKind::special_unitary(3))) == 36);

  CHECK_THROWS_AS(degree_of_word_map(FreeHom(1, 2, {parse_word("g2")}), GroupKind::unitary(1)), ShapeError);
}

TEST_CASE("property: exterior degree matches |det|^rank") {
  Rng rng(23);
  const GroupKind kinds[] = {GroupKind::unitary(1), GroupKind::unitary(2), GroupKind::unitary(3),
                             GroupKind::special_unitary(2), GroupKind::special_unitary(3)};
  for (int trial = 0; trial < 150; ++trial) {
    const int n = testing::uniform(rng, 1, 4);
    const FreeHom f = testing::random_hom(rng, n, n, 8);
    const GroupKind kind = kinds[trial % 5];
    const BigInt det = determinant(abelianize(f));
    CHECK(abs(degree_of_word_map(f, kind)) == pow(abs(det), static_cast<unsigned>(kind.lie_rank())));
  }
}

TEST_CASE("property: degree is multiplicative under composition") {
  Rng rng(24);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = testing::uniform(rng, 1, 3);
    const GroupKind kind = trial % 2 ? GroupKind::unitary(2) : GroupKind::special_unitary(3);
    const FreeHom f = testing::random_hom(rng, n, n, 5);
    const FreeHom g = testing::random_hom(rng, n, n, 5);
    CHECK(degree_of_word_map(compose(f, g), kind) == degree_of_word_map(f, kind) * degree_of_word_map(g, kind));
  }
}

TEST_CASE("cylinder monomial values") {
  CHECK(abs(cylinder_monomial_value(1, GroupKind::unitary(3))) == 1);
  CHECK(abs(cylinder_monomial_value(2, GroupKind::unitary(1))) == 2);
  CHECK(abs(cylinder_monomial_value(2, GroupKind::unitary(2))) == 4);
  CHECK(abs(cylinder_monomial_value(3, GroupKind::special_unitary(2))) == 6);
  for (int m = 1; m <= 4; ++m)
    for (const GroupKind kind : {GroupKind::unitary(1), GroupKind::unitary(2), GroupKind::unitary(3),
                                 GroupKind::special_unitary(2), GroupKind::special_unitary(3)})
      CHECK(abs(cylinder_monomial_value(m, kind)) == pow(factorial(static_cast<unsigned>(m)),
                                                         static_cast<unsigned>(kind.lie_rank())));
  CHECK_THROWS(cylinder_monomial_value(0, GroupKind::unitary(1)));
}
