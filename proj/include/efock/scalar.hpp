#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace efock {

/// Exact rational number over arbitrary-precision integers.
///
/// Always stored reduced with positive denominator; zero is 0/1. All
/// arithmetic in the library goes through this type, there is no floating
/// point anywhere.
class Scalar {
 public:
  Scalar() : q_(0) {}
  Scalar(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den) {
    if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "n" or "n/d" with optional leading minus, e.g. "-3/2".
  static Scalar parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
      throw std::invalid_argument("Scalar: cannot parse '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Scalar: zero denominator");
    q.canonicalize();
    return Scalar(std::move(q));
  }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }

  Scalar operator-() const { return Scalar(mpq_class(-q_)); }
  Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
  Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
  Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.q_ != b.q_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.q_ < b.q_; }

  Scalar abs() const { return Scalar(mpq_class(::abs(q_))); }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  /// Canonical text form: reduced, "/1" suppressed, leading '-' for negatives.
  std::string str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

 private:
  mpq_class q_;
};

inline Scalar factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Scalar(mpq_class(f));
}

inline Scalar pow_int(const Scalar& base, int exp) {
  if (exp < 0) throw std::invalid_argument("pow_int: negative exponent");
  Scalar r(1), b = base;
  int e = exp;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace efock
