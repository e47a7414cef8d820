#include "efock/states.hpp"

namespace efock {

std::string fermion_str(const FermionState& s) {
  return s.str([](const WedgeMonomial& m) { return m.str(); });
}

std::string boson_str(const BosonState& s) {
  return s.str([](const BosonMonomial& m) { return m.str(); });
}

namespace {

// Emits partitions of d with parts <= max_part as descending part lists.
void enumerate_parts(int d, int max_part, std::vector<int>& acc,
                     std::vector<Partition>& out) {
  if (d == 0) {
    out.push_back(Partition::from_parts(acc));
    return;
  }
  for (int p = std::min(d, max_part); p >= 1; --p) {
    acc.push_back(p);
    enumerate_parts(d - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int d) {
  if (d < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> acc;
  enumerate_parts(d, d, acc, out);
  return out;
}

std::vector<Partition> partitions_with_max_part(int d, int max_part) {
  if (d < 0) throw std::invalid_argument("partitions: negative weight");
  std::vector<Partition> out;
  std::vector<int> acc;
  enumerate_parts(d, std::min(d, max_part), acc, out);
  return out;
}

std::vector<Partition> partitions_with_max_parts(int d, int max_parts) {
  // Conjugation swaps "at most n parts" with "parts of size at most n".
  std::vector<Partition> out;
  for (const Partition& p : partitions_of(d))
    if (p.num_parts() <= max_parts) out.push_back(p);
  return out;
}

std::vector<long long> partition_numbers(int max_degree) {
  std::vector<long long> p(static_cast<std::size_t>(max_degree) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= max_degree; ++part)
    for (int d = part; d <= max_degree; ++d) p[d] += p[d - part];
  return p;
}

std::vector<WedgeMonomial> wedge_basis(int length, long t_degree) {
  if (length < 0 || t_degree < 0) return {};
  // Indices i_1 < ... < i_n with sum = t_degree + n(n+1)/2. Writing
  // i_j = j + m_j with m_1 <= ... <= m_n >= 0 turns these into partitions of
  // t_degree into at most n parts, read off in reverse.
  std::vector<WedgeMonomial> out;
  for (const Partition& p : partitions_with_max_parts(static_cast<int>(t_degree),
                                                      length)) {
    std::vector<int> offsets(length, 0);
    // Descending parts -> offsets m_n >= ... >= m_1.
    int pos = length - 1;
    for (auto it = p.multiplicities().rbegin(); it != p.multiplicities().rend(); ++it)
      for (int c = 0; c < it->second; ++c) offsets[pos--] = it->first;
    std::vector<int> idx(length);
    for (int j = 0; j < length; ++j) idx[j] = j + 1 + offsets[j];
    out.emplace_back(std::move(idx));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WedgeMonomial> wedge_basis_indices_up_to(int max_index) {
  std::vector<WedgeMonomial> out;
  const unsigned n = static_cast<unsigned>(std::max(max_index, 0));
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    std::vector<int> idx;
    for (unsigned b = 0; b < n; ++b)
      if (mask & (1ULL << b)) idx.push_back(static_cast<int>(b) + 1);
    out.emplace_back(std::move(idx));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BosonMonomial monomial_from_partition(const Partition& p) {
  return BosonMonomial(p.multiplicities());
}

Partition partition_from_monomial(const BosonMonomial& m) {
  return Partition(m.exponents());
}

std::vector<BosonMonomial> boson_basis(int degree) {
  std::vector<BosonMonomial> out;
  for (const Partition& p : partitions_of(degree))
    out.push_back(monomial_from_partition(p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BosonMonomial> boson_basis_level(int degree, int max_variable) {
  std::vector<BosonMonomial> out;
  for (const Partition& p : partitions_with_max_part(degree, max_variable))
    out.push_back(monomial_from_partition(p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BosonMonomial> boson_basis_up_to(int max_degree) {
  std::vector<BosonMonomial> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto v = boson_basis(d);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

}  // namespace efock
