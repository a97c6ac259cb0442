#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace casson {

/// Arbitrary-precision integer. Expression templates are disabled so that the
/// type composes cleanly with Eigen's own expression machinery.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMat = Matrix<BigInt>;
using IntVec = Vector<BigInt>;
using Index = Eigen::Index;

/// Order of a finitely generated abelian group: a positive integer or infinite.
class GroupOrder {
public:
  static GroupOrder infinite() { return GroupOrder(); }
  static GroupOrder finite(BigInt value) {
    if (value <= 0) throw std::invalid_argument("group order must be positive");
    return GroupOrder(std::move(value));
  }

  bool is_finite() const { return finite_; }
  bool is_infinite() const { return !finite_; }
  const BigInt& value() const {
    if (!finite_) throw std::logic_error("infinite group order has no value");
    return value_;
  }
  std::string to_string() const { return finite_ ? value_.str() : "INFINITE"; }

  friend bool operator==(const GroupOrder& a, const GroupOrder& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend GroupOrder operator*(const GroupOrder& a, const GroupOrder& b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    return finite(a.value_ * b.value_);
  }

private:
  GroupOrder() = default;
  explicit GroupOrder(BigInt v) : finite_(true), value_(std::move(v)) {}

  bool finite_ = false;
  BigInt value_{0};
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MalformedWord : Error {
  using Error::Error;
};
struct RankMismatch : Error {
  using Error::Error;
};
struct ShapeError : Error {
  using Error::Error;
};
struct InvalidSplitting : Error {
  using Error::Error;
};
struct WrongCodimension : Error {
  using Error::Error;
};
/// A cross-check between independent computations disagreed. Always a bug.
struct InternalConsistencyError : Error {
  using Error::Error;
};
struct DocumentParseError : Error {
  using Error::Error;
};

inline BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt pow(const BigInt& base, unsigned exponent) {
  BigInt result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

inline BigInt factorial(unsigned m) {
  BigInt result = 1;
  for (unsigned i = 2; i <= m; ++i) result *= i;
  return result;
}

} // namespace casson
