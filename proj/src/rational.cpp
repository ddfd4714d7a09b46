// mvkit — exact-arithmetic toolkit for MV-algebras and unital abelian l-groups
// SPDX-License-Identifier: Apache-2.0

#include "mvkit/rational.hpp"

#include <ostream>

#include "mvkit/errors.hpp"

namespace mvkit {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) {
    throw InvalidParameter("rational with zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::from_mpq(mpq_class q) {
  q.canonicalize();
  Rational r;
  r.value_ = std::move(q);
  return r;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num_part = text.substr(0, slash);
  if (!is_int(num_part)) return std::nullopt;
  mpz_class num(std::string(num_part), 10);
  if (slash == std::string_view::npos) {
    return Rational(num, 1);
  }
  const std::string_view den_part = text.substr(slash + 1);
  if (!is_int(den_part) || den_part[0] == '-' || den_part[0] == '+') return std::nullopt;
  mpz_class den(std::string(den_part), 10);
  if (den == 0) return std::nullopt;
  return Rational(num, den);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) {
    throw InvalidParameter("division by zero rational");
  }
  return from_mpq(value_ / o.value_);
}

mpz_class Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return q;
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return q;
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

const Rational& Rational::zero() {
  static const Rational z(0);
  return z;
}

const Rational& Rational::one() {
  static const Rational o(1);
  return o;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace mvkit
