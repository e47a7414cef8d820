#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "efock/report.hpp"
#include "efock/scalar.hpp"

namespace efock {

/// Bivariate power series in q and t, truncated at a fixed total q-order.
/// t-exponents are unbounded but finite for every stored q-exponent; all
/// coefficients exact rationals, zeros never stored.
class BiSeries {
 public:
  explicit BiSeries(int max_q);

  static BiSeries one(int max_q);
  /// c * t^t_exp * q^q_exp (dropped silently if q_exp > max_q).
  static BiSeries monomial(int max_q, int q_exp, int t_exp, const Scalar& c);

  int max_q() const { return max_q_; }
  bool is_zero() const { return coeff_.empty(); }
  Scalar coeff(int q_exp, int t_exp) const;
  /// All t-terms of the given q-coefficient, as t-exponent -> coefficient.
  std::map<int, Scalar> q_row(int q_exp) const;
  const std::map<std::pair<int, int>, Scalar>& terms() const { return coeff_; }

  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator-=(const BiSeries& o);
  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }

  /// Truncated product.
  BiSeries mul(const BiSeries& o) const;
  /// Nonnegative power by repeated squaring.
  BiSeries pow(int e) const;
  /// Multiplicative inverse; requires the q^0 part to be a nonzero constant
  /// (a pure scalar), otherwise the inverse leaves the t>=0 polynomial ring.
  BiSeries inv() const;

  friend bool operator==(const BiSeries& a, const BiSeries& b) {
    return a.max_q_ == b.max_q_ && a.coeff_ == b.coeff_;
  }

  /// Aligned table, rows = q-exponent, columns = t-exponent.
  std::string table() const;
  /// {"maxQ": n, "terms": [{"q": a, "t": b, "coeff": "c"}]}
  std::string json() const;

 private:
  void add_term(int q_exp, int t_exp, const Scalar& c);

  int max_q_;
  std::map<std::pair<int, int>, Scalar> coeff_;
};

struct BettiVector {
  long b0 = 0, b1 = 0, b2 = 0, b3 = 0, b4 = 0;
  std::string str() const {
    return "(" + std::to_string(b0) + "," + std::to_string(b1) + "," +
           std::to_string(b2) + "," + std::to_string(b3) + "," +
           std::to_string(b4) + ")";
  }
};

/// Truncated product over m = 1..max_q of
///   (1 + t^(2m-1) q^m)^b1 (1 + t^(2m+1) q^m)^b3
///   / (1 - t^(2m-2) q^m)^b0 (1 - t^(2m) q^m)^b2 (1 - t^(2m+2) q^m)^b4.
BiSeries goettsche_series(const BettiVector& b, int max_q);

/// Betti numbers after blowing up a point: one new class in degree 2.
BettiVector blowup_betti(const BettiVector& b);

/// Coefficientwise check of
///   goettsche(blowup(b)) = goettsche(b) * prod_m (1 - t^(2m) q^m)^(-1)
/// up to the q-truncation order.
CheckReport blowup_ratio_check(const BettiVector& b, int max_q);

/// Counts of wedge monomials by (length n, t-degree d) for n <= max_level,
/// d <= max_t: the number of partitions of d into at most n parts.
std::vector<std::vector<long long>> fermion_character(int max_level, int max_t);

/// Dimension of the degree-d piece of the boson space for d <= max_degree:
/// the partition numbers p(d).
std::vector<long long> boson_character(int max_degree);

}  // namespace efock
