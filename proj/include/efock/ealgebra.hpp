#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "efock/linear.hpp"
#include "efock/report.hpp"
#include "efock/scalar.hpp"

namespace efock {

/// Generators of the algebra: two isometries with complementary ranges.
/// K1 and E raise, Km1 (= K_{-1}) and F lower.
enum class Gen : std::uint8_t { K1 = 0, Km1 = 1, E = 2, F = 3 };

std::string gen_name(Gen g);

/// A monomial of the free algebra on the four generators; empty = 1.
using Word = std::vector<Gen>;

/// Canonical word order: by length, then lexicographic in generator order
/// K1 < Km1 < E < F. Puts the unit first, so "1 - K1*Km1" prints that way.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using AlgElement = LinearCombo<Word, WordLess>;

std::string word_str(const Word& w);
std::string alg_str(const AlgElement& x);

inline AlgElement alg_one() { return AlgElement(Word{}); }
inline AlgElement alg_word(Word w) { return AlgElement(std::move(w)); }

/// Bilinear concatenation product; result is not normalized.
AlgElement mul(const AlgElement& a, const AlgElement& b);
AlgElement mul(const AlgElement& a, const AlgElement& b, const AlgElement& c);

/// True when the word contains none of the redexes
/// Km1*K1, F*E, Km1*E, F*K1, E*F, i.e. it is of the shape u*v with u over
/// {K1,E}, v over {Km1,F} and not (u ends in E and v starts with F).
bool is_normal_word(const Word& w);

enum class RewriteStrategy { LeftmostFirst, RightmostFirst };

/// An element of the algebra all of whose words are normal. Two elements are
/// equal in the algebra iff their normal forms are identical term maps.
class NormalForm {
 public:
  NormalForm() = default;
  const AlgElement& element() const { return elem_; }
  bool is_zero() const { return elem_.is_zero(); }
  std::string str() const { return alg_str(elem_); }

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.elem_ == b.elem_;
  }
  friend bool operator!=(const NormalForm& a, const NormalForm& b) {
    return !(a == b);
  }

 private:
  friend NormalForm normalize(const AlgElement&, RewriteStrategy);
  explicit NormalForm(AlgElement e) : elem_(std::move(e)) {}
  AlgElement elem_;
};

/// Rewrites to the canonical normal form using the confluent system
///   Km1*K1 -> 1,  F*E -> 1,  Km1*E -> 0,  F*K1 -> 0,  E*F -> 1 - K1*Km1.
/// The result is independent of the strategy (checked by the property suite);
/// the strategy argument exists so tests can compare reduction orders.
NormalForm normalize(const AlgElement& x,
                     RewriteStrategy strategy = RewriteStrategy::LeftmostFirst);

/// E_i = K1^i * E as a single word.
AlgElement build_E_lower(int i);
/// F_i = F * Km1^i as a single word.
AlgElement build_F_lower(int i);

/// P_i and Q_i by the recursion P_1 = E*Km1, Q_1 = K1*F,
/// P_i = K1*P_{i-1}*Km1 - E*P_{i-1}*F (and the same shape for Q), normalized.
NormalForm build_P(int i);
NormalForm build_Q(int i);

/// Anticommutator identities {P_i,P_j} = {Q_i,Q_j} = 0, {P_i,Q_j} = delta_ij
/// for all 1 <= i,j <= max_index, verified by normal forms.
CheckReport check_clifford_relations(int max_index);

/// The E_i/F_i identities: telescoping sum, E_iF_i difference form,
/// F_iE_j = delta_ij and the shift relations, for indices up to l.
CheckReport check_lemma22(int l);

}  // namespace efock
