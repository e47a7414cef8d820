#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "efock/scalar.hpp"

namespace efock {

/// Finite linear combination of basis monomials with exact coefficients.
///
/// The map comparator defines the canonical term order, so iteration order is
/// the printing order. Zero coefficients are never stored.
template <typename Mono, typename Less = std::less<Mono>>
class LinearCombo {
 public:
  using map_type = std::map<Mono, Scalar, Less>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombo() = default;
  explicit LinearCombo(const Mono& m) { add_term(m, Scalar(1)); }
  LinearCombo(const Mono& m, const Scalar& c) { add_term(m, c); }

  static LinearCombo zero() { return LinearCombo(); }

  void add_term(const Mono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LinearCombo& operator+=(const LinearCombo& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  LinearCombo& operator-=(const LinearCombo& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend LinearCombo operator+(LinearCombo a, const LinearCombo& b) { return a += b; }
  friend LinearCombo operator-(LinearCombo a, const LinearCombo& b) { return a -= b; }
  LinearCombo operator-() const { return scaled(Scalar(-1)); }

  LinearCombo scaled(const Scalar& c) const {
    LinearCombo r;
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
  }

  /// Image under a monomial-wise linear map m -> state.
  template <typename Fn>
  auto map_terms(Fn&& fn) const {
    using Out = std::invoke_result_t<Fn, const Mono&>;
    Out r;
    for (const auto& [m, c] : terms_) r += fn(m).scaled(c);
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const map_type& terms() const { return terms_; }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  Scalar coefficient(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  friend bool operator==(const LinearCombo& a, const LinearCombo& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LinearCombo& a, const LinearCombo& b) {
    return !(a == b);
  }
  friend bool operator<(const LinearCombo& a, const LinearCombo& b) {
    auto cmp = [](const auto& x, const auto& y) {
      Less less;
      if (less(x.first, y.first)) return true;
      if (less(y.first, x.first)) return false;
      return x.second < y.second;
    };
    return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(),
                                        b.terms_.begin(), b.terms_.end(), cmp);
  }

  /// Canonical rendering "c1*m1 + c2*m2" with "1*" suppressed and negative
  /// coefficients folded into the separator. A monomial printed as "" stands
  /// for the multiplicative unit, so its term prints as the bare coefficient.
  std::string str(const std::function<std::string(const Mono&)>& mono_str) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const Scalar a = c.abs();
      if (first) {
        if (c.sign() < 0) out += "-";
        first = false;
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      const std::string ms = mono_str(m);
      if (ms.empty()) {
        out += a.str();
      } else if (a.is_one()) {
        out += ms;
      } else {
        out += a.str() + "*" + ms;
      }
    }
    return out;
  }
};

}  // namespace efock
