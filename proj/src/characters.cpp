#include "efock/characters.hpp"

#include <algorithm>
#include <stdexcept>

#include "efock/states.hpp"

namespace efock {

BiSeries::BiSeries(int max_q) : max_q_(max_q) {
  if (max_q < 0) throw std::invalid_argument("BiSeries: negative q-truncation");
}

BiSeries BiSeries::one(int max_q) { return monomial(max_q, 0, 0, Scalar(1)); }

BiSeries BiSeries::monomial(int max_q, int q_exp, int t_exp, const Scalar& c) {
  BiSeries s(max_q);
  s.add_term(q_exp, t_exp, c);
  return s;
}

void BiSeries::add_term(int q_exp, int t_exp, const Scalar& c) {
  if (q_exp < 0 || t_exp < 0)
    throw std::invalid_argument("BiSeries: negative exponent");
  if (q_exp > max_q_ || c.is_zero()) return;
  auto key = std::make_pair(q_exp, t_exp);
  auto [it, inserted] = coeff_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeff_.erase(it);
  }
}

Scalar BiSeries::coeff(int q_exp, int t_exp) const {
  auto it = coeff_.find({q_exp, t_exp});
  return it == coeff_.end() ? Scalar(0) : it->second;
}

std::map<int, Scalar> BiSeries::q_row(int q_exp) const {
  std::map<int, Scalar> row;
  for (auto it = coeff_.lower_bound({q_exp, 0});
       it != coeff_.end() && it->first.first == q_exp; ++it)
    row.emplace(it->first.second, it->second);
  return row;
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  for (const auto& [qt, c] : o.coeff_) add_term(qt.first, qt.second, c);
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
  for (const auto& [qt, c] : o.coeff_) add_term(qt.first, qt.second, -c);
  return *this;
}

BiSeries BiSeries::mul(const BiSeries& o) const {
  BiSeries r(std::min(max_q_, o.max_q_));
  for (const auto& [qa, ca] : coeff_) {
    if (qa.first > r.max_q_) continue;
    for (const auto& [qb, cb] : o.coeff_) {
      if (qa.first + qb.first > r.max_q_) continue;
      r.add_term(qa.first + qb.first, qa.second + qb.second, ca * cb);
    }
  }
  return r;
}

BiSeries BiSeries::pow(int e) const {
  if (e < 0) throw std::invalid_argument("BiSeries::pow: negative exponent");
  BiSeries r = one(max_q_), b = *this;
  while (e > 0) {
    if (e & 1) r = r.mul(b);
    b = b.mul(b);
    e >>= 1;
  }
  return r;
}

BiSeries BiSeries::inv() const {
  // Need the q^0 part to be c * t^0 with c != 0.
  auto it = coeff_.find({0, 0});
  if (it == coeff_.end())
    throw std::domain_error("BiSeries::inv: constant term is zero");
  for (const auto& [qt, c] : coeff_)
    if (qt.first == 0 && qt.second != 0)
      throw std::domain_error("BiSeries::inv: q^0 part is not a constant");
  const Scalar c0 = it->second;

  // Standard recursion on q-order: with a = c0 + a_+, the inverse b satisfies
  // b_n = -1/c0 * sum_{k=1..n} a_k b_{n-k} termwise in t.
  BiSeries b = monomial(max_q_, 0, 0, Scalar(1) / c0);
  for (int n = 1; n <= max_q_; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (const auto& [ta, ca] : q_row(k))
        for (const auto& [tb, cb] : b.q_row(n - k))
          b.add_term(n, ta + tb, -(ca * cb) / c0);
    }
  }
  return b;
}

std::string BiSeries::table() const {
  int max_t = 0;
  for (const auto& [qt, c] : coeff_) max_t = std::max(max_t, qt.second);
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(max_q_) + 2);
  std::vector<std::size_t> width(static_cast<std::size_t>(max_t) + 2, 0);
  cells[0].push_back("q\\t");
  for (int t = 0; t <= max_t; ++t) cells[0].push_back(std::to_string(t));
  for (int q = 0; q <= max_q_; ++q) {
    auto& row = cells[static_cast<std::size_t>(q) + 1];
    row.push_back(std::to_string(q));
    for (int t = 0; t <= max_t; ++t) {
      const Scalar c = coeff(q, t);
      row.push_back(c.is_zero() ? "." : c.str());
    }
  }
  for (const auto& row : cells)
    for (std::size_t j = 0; j < row.size(); ++j)
      width[j] = std::max(width[j], row[j].size());
  std::string out;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += "  ";
      out += std::string(width[j] - row[j].size(), ' ') + row[j];
    }
    out += "\n";
  }
  return out;
}

std::string BiSeries::json() const {
  std::string out = "{\"maxQ\": " + std::to_string(max_q_) + ", \"terms\": [";
  bool first = true;
  for (const auto& [qt, c] : coeff_) {
    if (!first) out += ", ";
    first = false;
    out += "{\"q\": " + std::to_string(qt.first) +
           ", \"t\": " + std::to_string(qt.second) + ", \"coeff\": \"" + c.str() +
           "\"}";
  }
  return out + "]}";
}

namespace {

// (1 + sign * t^t_step q^m)^(+-1) expanded exactly up to the truncation.
BiSeries binomial_factor(int max_q, int m, int t_exp, int sign, bool inverse) {
  BiSeries f = BiSeries::one(max_q);
  if (!inverse) {
    BiSeries r = f;
    r += BiSeries::monomial(max_q, m, t_exp, Scalar(sign));
    return r;
  }
  // Geometric series sum_j (-sign)^j t^(j t_exp) q^(j m).
  BiSeries r(max_q);
  Scalar c(1);
  for (int j = 0; j * m <= max_q; ++j) {
    r += BiSeries::monomial(max_q, j * m, j * t_exp, c);
    c *= Scalar(-sign);
  }
  return r;
}

}  // namespace

BiSeries goettsche_series(const BettiVector& b, int max_q) {
  if (b.b0 < 0 || b.b1 < 0 || b.b2 < 0 || b.b3 < 0 || b.b4 < 0)
    throw std::invalid_argument("goettsche_series: negative Betti number");
  BiSeries r = BiSeries::one(max_q);
  for (int m = 1; m <= max_q; ++m) {
    r = r.mul(binomial_factor(max_q, m, 2 * m - 1, +1, false).pow(static_cast<int>(b.b1)));
    r = r.mul(binomial_factor(max_q, m, 2 * m + 1, +1, false).pow(static_cast<int>(b.b3)));
    r = r.mul(binomial_factor(max_q, m, 2 * m - 2, -1, true).pow(static_cast<int>(b.b0)));
    r = r.mul(binomial_factor(max_q, m, 2 * m, -1, true).pow(static_cast<int>(b.b2)));
    r = r.mul(binomial_factor(max_q, m, 2 * m + 2, -1, true).pow(static_cast<int>(b.b4)));
  }
  return r;
}

BettiVector blowup_betti(const BettiVector& b) {
  return {b.b0, b.b1, b.b2 + 1, b.b3, b.b4};
}

CheckReport blowup_ratio_check(const BettiVector& b, int max_q) {
  if (max_q < 0) throw std::invalid_argument("blowup_ratio_check: negative max_q");
  CheckReport report;
  const BiSeries lhs = goettsche_series(blowup_betti(b), max_q);
  BiSeries ratio = BiSeries::one(max_q);
  for (int m = 1; m <= max_q; ++m)
    ratio = ratio.mul(binomial_factor(max_q, m, 2 * m, -1, true));
  const BiSeries rhs = goettsche_series(b, max_q).mul(ratio);
  for (int q = 0; q <= max_q; ++q) {
    const bool ok = lhs.q_row(q) == rhs.q_row(q);
    report.add("blowup ratio, betti " + b.str() + ", q^" + std::to_string(q), ok);
  }
  return report;
}

std::vector<std::vector<long long>> fermion_character(int max_level, int max_t) {
  if (max_level < 0 || max_t < 0)
    throw std::invalid_argument("fermion_character: negative bound");
  // count[n][d] = partitions of d into at most n parts.
  std::vector<std::vector<long long>> count(
      static_cast<std::size_t>(max_level) + 1,
      std::vector<long long>(static_cast<std::size_t>(max_t) + 1, 0));
  for (int d = 0; d <= max_t; ++d) count[0][d] = d == 0 ? 1 : 0;
  for (int n = 1; n <= max_level; ++n)
    for (int d = 0; d <= max_t; ++d)
      count[n][d] = count[n - 1][d] + (d >= n ? count[n][d - n] : 0);
  return count;
}

std::vector<long long> boson_character(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("boson_character: negative bound");
  return partition_numbers(max_degree);
}

}  // namespace efock
