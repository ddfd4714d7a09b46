// mvkit — exact-arithmetic toolkit for MV-algebras and unital abelian l-groups
// SPDX-License-Identifier: Apache-2.0

#ifndef MVKIT_RATIONAL_HPP_
#define MVKIT_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace mvkit {

// Arbitrary-precision rational, always in lowest terms with a positive
// denominator. All arithmetic is exact; there is no floating point anywhere
// in the library.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);

  static Rational from_mpq(mpq_class q);

  // Accepts "p/q" or a bare integer "p". Whitespace is not consumed.
  static std::optional<Rational> parse(std::string_view text);

  const mpz_class& num() const { return value_.get_num(); }
  const mpz_class& den() const { return value_.get_den(); }
  const mpq_class& mpq() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const { return from_mpq(-value_); }
  Rational operator+(const Rational& o) const { return from_mpq(value_ + o.value_); }
  Rational operator-(const Rational& o) const { return from_mpq(value_ - o.value_); }
  Rational operator*(const Rational& o) const { return from_mpq(value_ * o.value_); }
  // Exact division; throws InvalidParameter on a zero divisor.
  Rational operator/(const Rational& o) const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }

  bool operator==(const Rational& o) const { return value_ == o.value_; }
  bool operator!=(const Rational& o) const { return value_ != o.value_; }
  bool operator<(const Rational& o) const { return value_ < o.value_; }
  bool operator<=(const Rational& o) const { return value_ <= o.value_; }
  bool operator>(const Rational& o) const { return value_ > o.value_; }
  bool operator>=(const Rational& o) const { return value_ >= o.value_; }

  // Least integer n with *this <= n.
  mpz_class ceil() const;
  // Greatest integer n with n <= *this.
  mpz_class floor() const;

  // "p/q", or just "p" when the denominator is 1. parse() inverts this.
  std::string str() const;

  static const Rational& zero();
  static const Rational& one();

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

}  // namespace mvkit

#endif  // MVKIT_RATIONAL_HPP_
