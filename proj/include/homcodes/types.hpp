#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace homcodes {

using Int = std::int64_t;
using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Error with a machine-readable kind (e.g. "NotConnected", "TorsionObstruction").
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Checked 64-bit arithmetic. Smith reduction pivots on small entries, so
// overflow indicates pathological input rather than normal growth.
inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("Overflow", "integer addition");
  return r;
}
inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error("Overflow", "integer subtraction");
  return r;
}
inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("Overflow", "integer multiplication");
  return r;
}

/// Residue representative in [0, m).
inline Int mod_reduce(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

/// Reduced fraction; denominators kept positive.
struct Rational {
  Int num = 0;
  Int den = 1;

  Rational() = default;
  Rational(Int n, Int d) : num(n), den(d) {
    if (den == 0) throw Error("InvalidArgument", "zero denominator");
    if (den < 0) { num = -num; den = -den; }
    Int g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
};

}  // namespace homcodes
