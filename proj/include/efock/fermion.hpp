#pragma once

#include <vector>

#include "efock/ealgebra.hpp"
#include "efock/states.hpp"

namespace efock {

/// Shift every index up by one; length preserved.
FermionState act_K1(const FermionState& s);

/// Shift every index down by one; monomials containing index 1 vanish.
FermionState act_Km1(const FermionState& s);

/// Shift up, then wedge the new lowest generator on the left (sign +1).
FermionState act_E(const FermionState& s);

/// Contract the lowest generator, then shift down: a monomial whose smallest
/// index is 1 maps to the remaining indices each decreased by one, anything
/// else to zero.
FermionState act_F(const FermionState& s);

FermionState act_gen(Gen g, const FermionState& s);

/// Left exterior multiplication by the i-th generator with the Koszul sign
/// (-1)^(number of smaller indices present); zero if i already occurs.
FermionState act_P(int i, const FermionState& s);

/// Left interior derivative by the i-th generator: remove it with sign
/// (-1)^(position-1), zero if absent.
FermionState act_Q(int i, const FermionState& s);

/// Applies a symbolic algebra element, rightmost letter acting first.
FermionState eval_element(const AlgElement& x, const FermionState& s);
FermionState eval_element(const NormalForm& x, const FermionState& s);

/// E_{a_1} E_{a_2} ... E_{a_n} |0>, composed right to left on the vacuum.
/// Always a single signed monomial. Entries must be >= 0.
FermionState verma_vector(const std::vector<int>& a);

/// The rescaling E -> lambda*E, K1 -> lambda*K1, F -> lambda*F,
/// Km1 -> lambda*Km1 on the same underlying space. Not claimed to preserve
/// the unit relations verbatim for lambda != +-1; it matches F with every
/// generator action scaled, which is what the weight-lambda module sees.
class WeightTwist {
 public:
  explicit WeightTwist(Scalar lambda);
  const Scalar& lambda() const { return lambda_; }
  FermionState apply(Gen g, const FermionState& s) const;

 private:
  Scalar lambda_;
};

}  // namespace efock
