#pragma once

#include "efock/states.hpp"

namespace efock {

/// Heisenberg generator on Q[y_1, y_2, ...]:
///   k > 0: multiplication by y_k;
///   k < 0: -|k| * d/dy_{|k|}.
/// The lowering scale is the unique multiple making [H_i, H_j] = i delta_{i,-j}.
BosonState act_H(int k, const BosonState& s);

/// Inverse of multiplication by y_k on its image: exponent of y_k drops by
/// one, monomials without y_k vanish. Closed form of the locally finite
/// series -sum_{i>=1} 1/(k^i i!) H_k^{i-1} H_{-k}^i.
BosonState act_L(int k, const BosonState& s);

/// The same operator evaluated literally as the truncated series; exact
/// because H_{-k}^i annihilates once i exceeds the y_k-degree of the input.
BosonState act_L_series(int k, const BosonState& s);

/// H_lambda (negative = false) or H_{-lambda} (negative = true): the product
/// of H_{+-i}^{n_i} over the parts of the partition. Factors of equal sign
/// commute, so application order is immaterial.
BosonState act_H_partition(const Partition& lambda, bool negative, const BosonState& s);

/// Smallest i with s in Q[y_1..y_i]; equivalently the largest variable index
/// present. Zero for constants; the zero state has no level.
int filtration_level(const BosonState& s);

}  // namespace efock
