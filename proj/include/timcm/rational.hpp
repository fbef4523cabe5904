#pragma once

#include <gmpxx.h>

#include <string>

namespace timcm {

// Exact rational number, always kept in lowest terms with positive
// denominator. Thin wrapper over GMP so intermediate values in the LP and
// bound computations can never overflow or round.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long num) : v_(num) {}
  // Throws std::invalid_argument when den == 0.
  Rational(long num, long den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "p/q" or a bare integer "p". Throws std::invalid_argument on
  // malformed input or zero denominator.
  static Rational parse(const std::string& s);

  // Always rendered as "p/q" in lowest terms, q >= 1 (so "0/1", "1/1").
  std::string str() const;

  bool zero() const { return sgn(v_) == 0; }
  bool positive() const { return sgn(v_) > 0; }
  bool negative() const { return sgn(v_) < 0; }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  // Narrowing accessors; throw std::overflow_error when out of range.
  long num_long() const;
  long den_long() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  // Throws std::domain_error on division by zero.
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

}  // namespace timcm
