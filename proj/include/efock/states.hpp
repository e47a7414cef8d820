#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "efock/linear.hpp"
#include "efock/scalar.hpp"

namespace efock {

/// Basis monomial of the fermionic Fock space: a finite wedge of generators
/// with strictly increasing positive indices. The empty wedge is the vacuum.
class WedgeMonomial {
 public:
  WedgeMonomial() = default;
  explicit WedgeMonomial(std::vector<int> indices) : idx_(std::move(indices)) {
    for (std::size_t i = 0; i < idx_.size(); ++i) {
      if (idx_[i] < 1) throw std::invalid_argument("WedgeMonomial: index < 1");
      if (i > 0 && idx_[i - 1] >= idx_[i])
        throw std::invalid_argument("WedgeMonomial: indices not strictly increasing");
    }
  }

  int length() const { return static_cast<int>(idx_.size()); }
  const std::vector<int>& indices() const { return idx_; }
  bool is_vacuum() const { return idx_.empty(); }
  bool contains(int i) const {
    return std::binary_search(idx_.begin(), idx_.end(), i);
  }
  int min_index() const { return idx_.empty() ? 0 : idx_.front(); }
  int max_index() const { return idx_.empty() ? 0 : idx_.back(); }

  /// Extra degree above the minimal monomial of the same length,
  /// sum(i_j) - (n^2+n)/2. Always >= 0.
  long t_degree() const {
    long s = 0;
    for (int i : idx_) s += i;
    const long n = length();
    return s - n * (n + 1) / 2;
  }

  std::string str() const {
    std::string out = "w(";
    for (std::size_t i = 0; i < idx_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(idx_[i]);
    }
    return out + ")";
  }

  // Canonical order: by length, then lexicographic on the index sequence.
  friend bool operator<(const WedgeMonomial& a, const WedgeMonomial& b) {
    if (a.idx_.size() != b.idx_.size()) return a.idx_.size() < b.idx_.size();
    return a.idx_ < b.idx_;
  }
  friend bool operator==(const WedgeMonomial& a, const WedgeMonomial& b) {
    return a.idx_ == b.idx_;
  }

 private:
  std::vector<int> idx_;
};

using FermionState = LinearCombo<WedgeMonomial>;

/// Monomial of the bosonic Fock space Q[y_1, y_2, ...]: a finite exponent map
/// variable index -> exponent, stored sparse in ascending index order. The
/// empty map is the constant monomial 1.
class BosonMonomial {
 public:
  BosonMonomial() = default;
  /// Takes (index, exponent) pairs; indices must be >= 1 and distinct,
  /// exponents >= 1.
  explicit BosonMonomial(std::vector<std::pair<int, int>> exponents)
      : exp_(std::move(exponents)) {
    std::sort(exp_.begin(), exp_.end());
    for (std::size_t i = 0; i < exp_.size(); ++i) {
      if (exp_[i].first < 1) throw std::invalid_argument("BosonMonomial: index < 1");
      if (exp_[i].second < 1) throw std::invalid_argument("BosonMonomial: exponent < 1");
      if (i > 0 && exp_[i - 1].first == exp_[i].first)
        throw std::invalid_argument("BosonMonomial: duplicate index");
    }
  }

  const std::vector<std::pair<int, int>>& exponents() const { return exp_; }
  bool is_unit() const { return exp_.empty(); }

  int exponent_of(int k) const {
    for (const auto& [i, e] : exp_)
      if (i == k) return e;
    return 0;
  }

  /// Largest variable index present, 0 for the constant monomial.
  int max_variable() const { return exp_.empty() ? 0 : exp_.back().first; }

  /// Weighted degree sum(k * e_k).
  long degree() const {
    long d = 0;
    for (const auto& [k, e] : exp_) d += static_cast<long>(k) * e;
    return d;
  }

  /// Monomial with the exponent of y_k adjusted by delta (may remove it).
  BosonMonomial with_exponent(int k, int delta) const {
    std::vector<std::pair<int, int>> out;
    out.reserve(exp_.size() + 1);
    bool placed = false;
    for (const auto& [i, e] : exp_) {
      if (i == k) {
        const int ne = e + delta;
        if (ne < 0) throw std::logic_error("BosonMonomial: negative exponent");
        if (ne > 0) out.emplace_back(i, ne);
        placed = true;
      } else {
        out.emplace_back(i, e);
      }
    }
    if (!placed) {
      if (delta < 0) throw std::logic_error("BosonMonomial: negative exponent");
      if (delta > 0) out.emplace_back(k, delta);
      std::sort(out.begin(), out.end());
    }
    BosonMonomial m;
    m.exp_ = std::move(out);
    return m;
  }

  std::string str() const {
    std::string out = "y(";
    for (std::size_t i = 0; i < exp_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(exp_[i].first) + ":" + std::to_string(exp_[i].second);
    }
    return out + ")";
  }

  // Canonical order: by weighted degree, then lexicographic on the ascending
  // (index, exponent) list.
  friend bool operator<(const BosonMonomial& a, const BosonMonomial& b) {
    const long da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exp_ < b.exp_;
  }
  friend bool operator==(const BosonMonomial& a, const BosonMonomial& b) {
    return a.exp_ == b.exp_;
  }

 private:
  std::vector<std::pair<int, int>> exp_;
};

using BosonState = LinearCombo<BosonMonomial>;

/// Integer partition stored as multiplicities part -> count.
class Partition {
 public:
  Partition() = default;
  /// Takes (part, multiplicity) pairs; parts >= 1 distinct, multiplicities >= 1.
  explicit Partition(std::vector<std::pair<int, int>> multiplicities)
      : mult_(std::move(multiplicities)) {
    std::sort(mult_.begin(), mult_.end());
    for (std::size_t i = 0; i < mult_.size(); ++i) {
      if (mult_[i].first < 1) throw std::invalid_argument("Partition: part < 1");
      if (mult_[i].second < 1) throw std::invalid_argument("Partition: multiplicity < 1");
      if (i > 0 && mult_[i - 1].first == mult_[i].first)
        throw std::invalid_argument("Partition: duplicate part");
    }
  }

  /// Builds from a list of parts, e.g. {3,1,1} -> multiplicities {1:2, 3:1}.
  static Partition from_parts(const std::vector<int>& parts) {
    std::map<int, int> m;
    for (int p : parts) {
      if (p < 1) throw std::invalid_argument("Partition: part < 1");
      ++m[p];
    }
    std::vector<std::pair<int, int>> v(m.begin(), m.end());
    return Partition(std::move(v));
  }

  const std::vector<std::pair<int, int>>& multiplicities() const { return mult_; }

  long weight() const {
    long w = 0;
    for (const auto& [i, n] : mult_) w += static_cast<long>(i) * n;
    return w;
  }

  /// Number of parts counted with multiplicity.
  int num_parts() const {
    int n = 0;
    for (const auto& [i, m] : mult_) n += m;
    return n;
  }

  std::string str() const {
    std::string out = "(";
    bool first = true;
    for (auto it = mult_.rbegin(); it != mult_.rend(); ++it) {
      for (int c = 0; c < it->second; ++c) {
        if (!first) out += ",";
        out += std::to_string(it->first);
        first = false;
      }
    }
    return out + ")";
  }

  friend bool operator<(const Partition& a, const Partition& b) {
    const long wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return a.mult_ < b.mult_;
  }
  friend bool operator==(const Partition& a, const Partition& b) {
    return a.mult_ == b.mult_;
  }

 private:
  std::vector<std::pair<int, int>> mult_;
};

/// (length, t-degree) of a wedge monomial.
inline std::pair<int, long> fermion_degrees(const WedgeMonomial& m) {
  return {m.length(), m.t_degree()};
}

/// Weighted degree of a boson monomial.
inline long boson_degree(const BosonMonomial& m) { return m.degree(); }

std::string fermion_str(const FermionState& s);
std::string boson_str(const BosonState& s);

/// All partitions of weight d (d >= 0); the empty partition for d = 0.
std::vector<Partition> partitions_of(int d);

/// Partitions of d into at most max_parts parts.
std::vector<Partition> partitions_with_max_parts(int d, int max_parts);

/// Partitions of d whose parts are all <= max_part.
std::vector<Partition> partitions_with_max_part(int d, int max_part);

/// Partition numbers p(0..max_degree).
std::vector<long long> partition_numbers(int max_degree);

/// Wedge monomials with the given length and t-degree.
std::vector<WedgeMonomial> wedge_basis(int length, long t_degree);

/// All wedge monomials with indices drawn from 1..max_index.
std::vector<WedgeMonomial> wedge_basis_indices_up_to(int max_index);

/// Boson monomials of the given weighted degree (in all variables).
std::vector<BosonMonomial> boson_basis(int degree);

/// Boson monomials of the given degree using only y_1..y_max_variable.
std::vector<BosonMonomial> boson_basis_level(int degree, int max_variable);

/// All boson monomials of degree <= max_degree.
std::vector<BosonMonomial> boson_basis_up_to(int max_degree);

BosonMonomial monomial_from_partition(const Partition& p);
Partition partition_from_monomial(const BosonMonomial& m);

}  // namespace efock
