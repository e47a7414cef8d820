#include "efock/boson.hpp"

#include <stdexcept>

namespace efock {

BosonState act_H(int k, const BosonState& s) {
  if (k == 0) throw std::invalid_argument("act_H: Heisenberg index must be nonzero");
  if (k > 0) {
    return s.map_terms(
        [k](const BosonMonomial& m) { return BosonState(m.with_exponent(k, +1)); });
  }
  const int v = -k;
  return s.map_terms([v](const BosonMonomial& m) {
    const int e = m.exponent_of(v);
    if (e == 0) return BosonState();
    return BosonState(m.with_exponent(v, -1), Scalar(static_cast<long>(-v) * e));
  });
}

BosonState act_L(int k, const BosonState& s) {
  if (k < 1) throw std::invalid_argument("act_L: index must be >= 1");
  return s.map_terms([k](const BosonMonomial& m) {
    if (m.exponent_of(k) == 0) return BosonState();
    return BosonState(m.with_exponent(k, -1));
  });
}

BosonState act_L_series(int k, const BosonState& s) {
  if (k < 1) throw std::invalid_argument("act_L_series: index must be >= 1");
  BosonState out;
  // Term i contributes -1/(k^i i!) H_k^{i-1} H_{-k}^i; iterating H_{-k}
  // truncates exactly at the y_k-degree of each summand.
  BosonState lowered = s;
  for (int i = 1; !(lowered = act_H(-k, lowered)).is_zero(); ++i) {
    BosonState term = lowered;
    for (int j = 1; j < i; ++j) term = act_H(k, term);
    out += term.scaled(Scalar(-1) / (pow_int(Scalar(k), i) * factorial(i)));
  }
  return out;
}

BosonState act_H_partition(const Partition& lambda, bool negative, const BosonState& s) {
  BosonState cur = s;
  for (const auto& [part, count] : lambda.multiplicities())
    for (int c = 0; c < count && !cur.is_zero(); ++c)
      cur = act_H(negative ? -part : part, cur);
  return cur;
}

int filtration_level(const BosonState& s) {
  if (s.is_zero())
    throw std::invalid_argument("filtration_level: undefined for the zero state");
  int level = 0;
  for (const auto& [m, c] : s) level = std::max(level, m.max_variable());
  return level;
}

}  // namespace efock
