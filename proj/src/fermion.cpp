#include "efock/fermion.hpp"

#include <algorithm>
#include <stdexcept>

namespace efock {

namespace {

WedgeMonomial shifted(const WedgeMonomial& m, int delta) {
  std::vector<int> idx = m.indices();
  for (int& i : idx) i += delta;
  return WedgeMonomial(std::move(idx));
}

}  // namespace

FermionState act_K1(const FermionState& s) {
  return s.map_terms([](const WedgeMonomial& m) { return FermionState(shifted(m, 1)); });
}

FermionState act_Km1(const FermionState& s) {
  return s.map_terms([](const WedgeMonomial& m) {
    if (!m.is_vacuum() && m.min_index() == 1) return FermionState();
    return FermionState(shifted(m, -1));
  });
}

FermionState act_E(const FermionState& s) {
  return s.map_terms([](const WedgeMonomial& m) {
    std::vector<int> idx;
    idx.reserve(m.indices().size() + 1);
    idx.push_back(1);
    for (int i : m.indices()) idx.push_back(i + 1);
    return FermionState(WedgeMonomial(std::move(idx)));
  });
}

FermionState act_F(const FermionState& s) {
  return s.map_terms([](const WedgeMonomial& m) {
    if (m.is_vacuum() || m.min_index() != 1) return FermionState();
    std::vector<int> idx(m.indices().begin() + 1, m.indices().end());
    for (int& i : idx) --i;
    return FermionState(WedgeMonomial(std::move(idx)));
  });
}

FermionState act_gen(Gen g, const FermionState& s) {
  switch (g) {
    case Gen::K1: return act_K1(s);
    case Gen::Km1: return act_Km1(s);
    case Gen::E: return act_E(s);
    case Gen::F: return act_F(s);
  }
  return {};
}

FermionState act_P(int i, const FermionState& s) {
  if (i < 1) throw std::invalid_argument("act_P: index must be >= 1");
  return s.map_terms([i](const WedgeMonomial& m) {
    if (m.contains(i)) return FermionState();
    const auto& src = m.indices();
    auto pos = std::lower_bound(src.begin(), src.end(), i);
    const auto passed = static_cast<int>(pos - src.begin());
    std::vector<int> idx;
    idx.reserve(src.size() + 1);
    idx.insert(idx.end(), src.begin(), pos);
    idx.push_back(i);
    idx.insert(idx.end(), pos, src.end());
    const Scalar sign(passed % 2 == 0 ? 1 : -1);
    return FermionState(WedgeMonomial(std::move(idx)), sign);
  });
}

FermionState act_Q(int i, const FermionState& s) {
  if (i < 1) throw std::invalid_argument("act_Q: index must be >= 1");
  return s.map_terms([i](const WedgeMonomial& m) {
    const auto& src = m.indices();
    auto pos = std::lower_bound(src.begin(), src.end(), i);
    if (pos == src.end() || *pos != i) return FermionState();
    const auto before = static_cast<int>(pos - src.begin());
    std::vector<int> idx;
    idx.reserve(src.size() - 1);
    idx.insert(idx.end(), src.begin(), pos);
    idx.insert(idx.end(), pos + 1, src.end());
    const Scalar sign(before % 2 == 0 ? 1 : -1);
    return FermionState(WedgeMonomial(std::move(idx)), sign);
  });
}

FermionState eval_element(const AlgElement& x, const FermionState& s) {
  FermionState out;
  for (const auto& [word, coeff] : x) {
    FermionState cur = s;
    for (auto it = word.rbegin(); it != word.rend() && !cur.is_zero(); ++it)
      cur = act_gen(*it, cur);
    out += cur.scaled(coeff);
  }
  return out;
}

FermionState eval_element(const NormalForm& x, const FermionState& s) {
  return eval_element(x.element(), s);
}

FermionState verma_vector(const std::vector<int>& a) {
  for (int e : a)
    if (e < 0) throw std::invalid_argument("verma_vector: negative entry");
  FermionState cur(WedgeMonomial{});
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    cur = act_E(cur);
    for (int k = 0; k < *it; ++k) cur = act_K1(cur);
  }
  return cur;
}

WeightTwist::WeightTwist(Scalar lambda) : lambda_(std::move(lambda)) {
  if (lambda_.is_zero()) throw std::invalid_argument("WeightTwist: lambda must be nonzero");
}

FermionState WeightTwist::apply(Gen g, const FermionState& s) const {
  return act_gen(g, s).scaled(lambda_);
}

}  // namespace efock
