#include "casson/linalg.hpp"
#include "casson/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace casson;
using casson::testing::Rng;

namespace {

IntMat mat(Index rows, Index cols, std::initializer_list<long> values) {
  IntMat a(rows, cols);
  auto it = values.begin();
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) a(i, j) = *it++;
  return a;
}

std::vector<std::vector<std::int64_t>> grid(const IntMat& a) {
  std::vector<std::vector<std::int64_t>> g(static_cast<std::size_t>(a.rows()));
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) g[static_cast<std::size_t>(i)].push_back(a(i, j).convert_to<std::int64_t>());
  return g;
}

void check_smith(const IntMat& a) {
  const auto s = smith_normal_form(a);
  CHECK(s.U * a * s.V == s.D);
  CHECK(abs(determinant(s.U)) == 1);
  CHECK(abs(determinant(s.V)) == 1);
  for (Index i = 0; i < s.D.rows(); ++i)
    for (Index j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D(i, j) == 0);
  for (std::size_t t = 0; t < s.diag.size(); ++t) {
    CHECK(s.diag[t] >= 0);
    if (t + 1 < s.diag.size() && s.diag[t] != 0) CHECK(s.diag[t + 1] % s.diag[t] == 0);
    if (t + 1 < s.diag.size() && s.diag[t] == 0) CHECK(s.diag[t + 1] == 0);
  }
}

} // namespace

TEST_CASE("determinant") {
  CHECK(determinant(IntMat::Identity(4, 4)) == 1);
  CHECK(determinant(mat(2, 2, {2, 1, 0, 3})) == 6);
  CHECK(determinant(mat(2, 2, {0, 1, 1, 0})) == -1);
  CHECK(determinant(IntMat(0, 0)) == 1);
  CHECK(determinant(mat(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9})) == 0);
  CHECK_THROWS_AS(determinant(IntMat::Zero(2, 3)), ShapeError);
}

TEST_CASE("determinant works over fixed-width scalars") {
  Eigen::Matrix<long, 3, 3> a;
  a << 2, 0, 1, 1, 3, 0, 0, 1, 4;
  CHECK(determinant(a) == 25);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMat a = testing::random_matrix(rng, 4, 4, -5, 5);
    CHECK(determinant(a) == oracle::cofactor_determinant(grid(a)));
  }
}

TEST_CASE("determinant stays exact for large entries") {
  IntMat a(2, 2);
  a << BigInt("123456789012345678901234567890"), 1, 0, BigInt("98765432109876543210");
  CHECK(determinant(a) == BigInt("123456789012345678901234567890") * BigInt("98765432109876543210"));
}

TEST_CASE("property: determinant is multiplicative") {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = testing::uniform(rng, 1, 5);
    const IntMat a = testing::random_matrix(rng, n, n, -6, 6);
    const IntMat b = testing::random_matrix(rng, n, n, -6, 6);
    CHECK(determinant(IntMat(a * b)) == determinant(a) * determinant(b));
  }
}

TEST_CASE("smith normal form examples") {
  CHECK(smith_normal_form(mat(2, 2, {2, 0, 0, 3})).diag == std::vector<BigInt>{1, 6});
  CHECK(smith_normal_form(IntMat::Zero(2, 3)).diag == std::vector<BigInt>{0, 0});
  CHECK(smith_normal_form(mat(2, 2, {1, 0, 0, 0})).diag == std::vector<BigInt>{1, 0});
  CHECK(smith_normal_form(mat(2, 2, {2, 4, 1, 2})).diag == std::vector<BigInt>{1, 0});
  CHECK(smith_normal_form(mat(2, 3, {2, 4, 4, -6, 6, 12})).diag == std::vector<BigInt>{2, 6});
  check_smith(mat(2, 2, {2, 0, 0, 3}));
  check_smith(IntMat(0, 3));
  check_smith(IntMat(2, 0));
}

TEST_CASE("property: smith normal form reconstruction") {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Index rows = testing::uniform(rng, 1, 5), cols = testing::uniform(rng, 1, 5);
    check_smith(testing::random_matrix(rng, rows, cols, -7, 7));
  }
}

TEST_CASE("cokernel order") {
  CHECK(cokernel_order(mat(1, 1, {2})) == GroupOrder::finite(2));
  CHECK(cokernel_order(mat(2, 2, {1, 0, 0, 0})).is_infinite());
  CHECK(cokernel_order(mat(2, 2, {2, 1, 0, 3})) == GroupOrder::finite(6));
  CHECK(cokernel_order(IntMat(0, 0)) == GroupOrder::finite(1));
  CHECK(cokernel_order(IntMat(0, 2)) == GroupOrder::finite(1));
  CHECK(cokernel_order(IntMat(2, 0)).is_infinite());
  // Wide matrices: Z^2 / <(2,0), (0,2), (1,1)> has order 2.
  CHECK(cokernel_order(mat(2, 3, {2, 0, 1, 0, 2, 1})) == GroupOrder::finite(2));
}

TEST_CASE("cokernel order matches brute-force coset enumeration on all small 2x2") {
  // Every 2x2 matrix with entries in [-2, 2].
  for (int code = 0; code < 625; ++code) {
    int c = code;
    IntMat a(2, 2);
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 2; ++j) {
        a(i, j) = c % 5 - 2;
        c /= 5;
      }
    CHECK(cokernel_order(a) == oracle::cokernel_enumeration(a));
  }
}

TEST_CASE("cokernel order matches brute-force enumeration on random 3x3") {
  Rng rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    const IntMat a = testing::random_matrix(rng, testing::uniform(rng, 1, 3), testing::uniform(rng, 1, 3), -2, 2);
    CHECK(cokernel_order(a) == oracle::cokernel_enumeration(a));
  }
}

TEST_CASE("rank") {
  CHECK(casson::rank(IntMat::Zero(2, 2)) == 0);
  CHECK(casson::rank(IntMat::Identity(3, 3)) == 3);
  CHECK(casson::rank(mat(2, 2, {2, 4, 1, 2})) == 1);
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(IntMat::Identity(3, 3)).cols() == 0);
  CHECK(kernel_basis(IntMat::Identity(3, 3)).rows() == 3);

  const IntMat k = kernel_basis(mat(1, 2, {1, 1}));
  REQUIRE(k.cols() == 1);
  CHECK(abs(k(0, 0)) == 1);
  CHECK(k(1, 0) == -k(0, 0));

  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMat a = testing::random_matrix(rng, 3, 5, -3, 3);
    const IntMat basis = kernel_basis(a);
    CHECK(basis.cols() == 5 - casson::rank(a));
    CHECK(IntMat(a * basis) == IntMat::Zero(3, basis.cols()));
    // Primitive lattice basis: the columns span a saturated sublattice.
    if (basis.cols() > 0) {
      const auto s = smith_normal_form(basis);
      for (const BigInt& d : s.diag) CHECK(d == 1);
    }
  }
}
