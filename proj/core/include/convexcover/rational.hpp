#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace convexcover {

using Int = mpz_class;  // arbitrary-precision integer

// Exact rational scalar. Invariant: gcd(num, den) == 1 and den > 0.
// Every constructing path normalizes; arithmetic preserves normal form.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(n) {}
  Rational(const Int& n) : q_(n) {}
  Rational(const Int& num, const Int& den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
  }

  // Accepts "p" or "p/q" with optional leading '-' on p (and on q).
  static Rational parse(std::string_view text);

  // Wraps a value that is already in canonical form (results of mpq
  // arithmetic on canonical operands are canonical).
  static Rational from_canonical(mpq_class q) {
    Rational r;
    r.q_ = std::move(q);
    return r;
  }

  const mpq_class& raw() const { return q_; }
  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }

  Int floor() const {
    Int out;
    mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
  }

  double to_double() const { return q_.get_d(); }
  std::string str() const;  // "p" when integral, else "p/q"

  int sign() const { return sgn(q_); }

  Rational operator-() const { return from_canonical(mpq_class(-q_)); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_canonical(mpq_class(a.q_ + b.q_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_canonical(mpq_class(a.q_ - b.q_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_canonical(mpq_class(a.q_ * b.q_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.sign() == 0) throw std::invalid_argument("Rational: division by zero");
    return from_canonical(mpq_class(a.q_ / b.q_));
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace convexcover
