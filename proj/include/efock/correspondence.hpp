#pragma once

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "efock/boson.hpp"
#include "efock/ealgebra.hpp"
#include "efock/fermion.hpp"
#include "efock/report.hpp"
#include "efock/states.hpp"

namespace efock {

/// Raised when a locally-finite operator sum fails to terminate within the
/// iteration cap, i.e. the module fed to it is not admissible.
struct InadmissibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Default iteration cap for operator sums that admissibility makes finite.
inline int iteration_cap(long degree) { return 10 * static_cast<int>(degree + 1); }

/// A basis key together with the graded level it sits at. Used for the
/// modules produced by fermionization, whose underlying space is a direct
/// sum of filtered pieces of an H-module.
template <typename K>
struct Levelled {
  int level = 0;
  K key;

  friend bool operator<(const Levelled& a, const Levelled& b) {
    if (a.level != b.level) return a.level < b.level;
    return a.key < b.key;
  }
  friend bool operator==(const Levelled& a, const Levelled& b) {
    return a.level == b.level && a.key == b.key;
  }
};

/// Handle for an admissible Heisenberg module. States are exact linear
/// combinations of basis keys; the handle exposes the generator action, the
/// degree, the filtration level of a key (largest l with the key outside
/// ker H_{-l}, 0 on the bottom piece) and a basis enumerator per degree.
template <typename K>
struct HModule {
  using Key = K;
  using State = LinearCombo<K>;
  std::function<State(int, const State&)> act_H;
  std::function<long(const K&)> degree;
  std::function<int(const K&)> level;
  std::function<std::vector<K>(int)> basis;  // keys of exact degree d
};

/// Handle for a graded module over the four-generator algebra.
template <typename K>
struct EModule {
  using Key = K;
  using State = LinearCombo<K>;
  std::function<State(const State&)> K1, Km1, E, F;
  std::function<int(const K&)> level;
  std::function<long(const K&)> degree;  // secondary (t-)degree, E-invariant
  std::function<std::vector<K>(int, long)> basis;  // keys at (level, degree)
};

/// Handle for a graded Clifford module. q_bound(s) must return an N with
/// Q_m(s) = 0 for every m > N; admissibility guarantees one exists.
template <typename K>
struct CModule {
  using Key = K;
  using State = LinearCombo<K>;
  std::function<State(int, const State&)> act_P, act_Q;
  std::function<int(const K&)> level;
  std::function<int(const State&)> q_bound;
  std::function<std::vector<K>(int, long)> basis;
};

EModule<WedgeMonomial> fermion_E_module();
CModule<WedgeMonomial> fermion_C_module();
HModule<BosonMonomial> boson_H_module();

/// Boson monomial in one of several labelled copies (the module B (x) Q^n).
struct TensorKey {
  BosonMonomial mono;
  int slot = 0;

  friend bool operator<(const TensorKey& a, const TensorKey& b) {
    if (!(a.mono == b.mono)) return a.mono < b.mono;
    return a.slot < b.slot;
  }
  friend bool operator==(const TensorKey& a, const TensorKey& b) {
    return a.mono == b.mono && a.slot == b.slot;
  }
  std::string str() const { return mono.str() + "#" + std::to_string(slot); }
};

HModule<TensorKey> boson_tensor_H_module(int copies);

/// Splits a state into its homogeneous level components.
template <typename K>
std::map<int, LinearCombo<K>> split_by_level(const std::function<int(const K&)>& level,
                                             const LinearCombo<K>& s) {
  std::map<int, LinearCombo<K>> out;
  for (const auto& [k, c] : s) out[level(k)].add_term(k, c);
  return out;
}

/// Gamma_i(T) s = sum over m - n = i, m,n >= 1 of P_m T Q_n s. Locally
/// finite because Q_n s vanishes beyond the handle's support bound.
template <typename K>
LinearCombo<K> gamma(const CModule<K>& M,
                     const std::function<LinearCombo<K>(const LinearCombo<K>&)>& T,
                     int i, const LinearCombo<K>& s) {
  LinearCombo<K> out;
  const int bound = M.q_bound(s);
  for (int n = 1; n <= bound; ++n) {
    if (n + i < 1) continue;
    auto qs = M.act_Q(n, s);
    if (qs.is_zero()) continue;
    out += M.act_P(n + i, T(qs));
  }
  return out;
}

/// Reconstruction of the shift operators from a Clifford action:
/// K1 and Km1 are the identity on the bottom piece and are pinned on level
/// i > 0 by Lambda K1 = Gamma_1(K1) and Lambda Km1 = Gamma_{-1}(Km1), i.e.
///   K1 s  = (1/i) sum_{n>=1} P_{n+1} K1 (Q_n s),
///   Km1 s = (1/i) sum_{m>=1} P_m Km1 (Q_{m+1} s),
/// solved by recursion on the level. Then E = P_1 K1 and F = Km1 Q_1.
template <typename K>
class ShiftReconstruction {
 public:
  explicit ShiftReconstruction(CModule<K> module) : m_(std::move(module)) {}

  using State = LinearCombo<K>;

  State K1(const State& s) { return apply(s, /*raise=*/true); }
  State Km1(const State& s) { return apply(s, /*raise=*/false); }
  State E(const State& s) { return m_.act_P(1, K1(s)); }
  State F(const State& s) { return Km1(m_.act_Q(1, s)); }

  const CModule<K>& clifford() const { return m_; }

  /// The reconstructed operators bundled as a module handle sharing this
  /// object's memo tables.
  static EModule<K> as_module(std::shared_ptr<ShiftReconstruction> self,
                              std::function<long(const K&)> degree,
                              std::function<std::vector<K>(int, long)> basis) {
    EModule<K> e;
    e.K1 = [self](const State& s) { return self->K1(s); };
    e.Km1 = [self](const State& s) { return self->Km1(s); };
    e.E = [self](const State& s) { return self->E(s); };
    e.F = [self](const State& s) { return self->F(s); };
    e.level = self->m_.level;
    e.degree = std::move(degree);
    e.basis = std::move(basis);
    return e;
  }

 private:
  State apply(const State& s, bool raise) {
    State out;
    for (const auto& [key, c] : s) out += apply_key(key, raise).scaled(c);
    return out;
  }

  State apply_key(const K& key, bool raise) {
    auto& memo = raise ? memo_k1_ : memo_km1_;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int lvl = m_.level(key);
    State result;
    const State s(key);
    if (lvl == 0) {
      result = s;  // identity on the bottom piece
    } else {
      const int bound = m_.q_bound(s);
      for (int n = 1; n <= bound; ++n) {
        const int q_index = raise ? n : n + 1;
        const int p_index = raise ? n + 1 : n;
        auto qs = m_.act_Q(q_index, s);
        if (qs.is_zero()) continue;
        result += m_.act_P(p_index, apply(qs, raise));
      }
      result = result.scaled(Scalar(1) / Scalar(lvl));
    }
    memo.emplace(key, result);
    return result;
  }

  CModule<K> m_;
  std::map<K, State> memo_k1_, memo_km1_;
};

template <typename K>
std::shared_ptr<ShiftReconstruction<K>> reconstruct_shift_ops(CModule<K> module) {
  return std::make_shared<ShiftReconstruction<K>>(std::move(module));
}

/// The inverse-of-H_k operator evaluated literally as the locally finite
/// series -sum_{i>=1} 1/(k^i i!) H_k^{i-1} H_{-k}^i on any admissible handle.
template <typename K>
LinearCombo<K> act_L_on_handle(const HModule<K>& M, int k, const LinearCombo<K>& s) {
  if (k < 1) throw std::invalid_argument("act_L_on_handle: index must be >= 1");
  long deg = 0;
  for (const auto& [key, c] : s) deg = std::max(deg, M.degree(key));
  const int cap = iteration_cap(deg);
  LinearCombo<K> out;
  LinearCombo<K> lowered = s;
  for (int i = 1;; ++i) {
    lowered = M.act_H(-k, lowered);
    if (lowered.is_zero()) break;
    if (i > cap) throw InadmissibleError("act_L_on_handle: H_{-k} powers do not vanish");
    LinearCombo<K> term = lowered;
    for (int j = 1; j < i; ++j) term = M.act_H(k, term);
    out += term.scaled(Scalar(-1) / (pow_int(Scalar(k), i) * factorial(i)));
  }
  return out;
}

/// Fermionization: turns an admissible H-module W into the graded module
/// over the four-generator algebra on the direct sum of its filtered pieces,
///   E(k, w) = (k+1, w),           F(k, w) = (k-1, (id - H_k L_k) w),
///   K1(k, w) = (k, H_k w),        Km1(k, w) = (k, L_k w),
/// with H_0 = L_0 = id. Every F application checks that the payload really
/// drops one filtration level.
template <typename K>
EModule<Levelled<K>> fermionize(const HModule<K>& M) {
  using LK = Levelled<K>;
  using State = LinearCombo<LK>;
  using Payload = LinearCombo<K>;

  auto check_in_level = [M](const Payload& w, int lvl, const char* what) {
    for (const auto& [key, c] : w)
      if (M.level(key) > lvl)
        throw std::domain_error(std::string(what) + ": payload not in the level-" +
                                std::to_string(lvl) + " filtered piece");
  };
  auto relabel = [](const Payload& w, int lvl) {
    State out;
    for (const auto& [key, c] : w) out.add_term(LK{lvl, key}, c);
    return out;
  };
  auto payload_at = [](const State& s) {
    std::map<int, Payload> by_level;
    for (const auto& [lk, c] : s) by_level[lk.level].add_term(lk.key, c);
    return by_level;
  };

  EModule<LK> e;
  e.level = [](const LK& k) { return k.level; };
  e.degree = [M](const LK& k) { return M.degree(k.key); };
  e.basis = [M](int lvl, long deg) {
    std::vector<LK> out;
    for (const K& key : M.basis(static_cast<int>(deg)))
      if (M.level(key) <= lvl) out.push_back(LK{lvl, key});
    return out;
  };
  e.E = [payload_at, relabel, check_in_level](const State& s) {
    State out;
    for (const auto& [lvl, w] : payload_at(s)) {
      check_in_level(w, lvl, "fermionize E");
      out += relabel(w, lvl + 1);
    }
    return out;
  };
  e.K1 = [M, payload_at, relabel, check_in_level](const State& s) {
    State out;
    for (const auto& [lvl, w] : payload_at(s)) {
      check_in_level(w, lvl, "fermionize K1");
      out += relabel(lvl == 0 ? w : M.act_H(lvl, w), lvl);
    }
    return out;
  };
  e.Km1 = [M, payload_at, relabel, check_in_level](const State& s) {
    State out;
    for (const auto& [lvl, w] : payload_at(s)) {
      check_in_level(w, lvl, "fermionize Km1");
      out += relabel(lvl == 0 ? w : act_L_on_handle(M, lvl, w), lvl);
    }
    return out;
  };
  e.F = [M, payload_at, relabel, check_in_level](const State& s) {
    State out;
    for (const auto& [lvl, w] : payload_at(s)) {
      check_in_level(w, lvl, "fermionize F");
      if (lvl == 0) continue;  // id - H_0 L_0 = 0
      Payload dropped = w - M.act_H(lvl, act_L_on_handle(M, lvl, w));
      check_in_level(dropped, lvl - 1, "fermionize F image");
      out += relabel(dropped, lvl - 1);
    }
    return out;
  };
  return e;
}

/// An element of the stable limit: a representative at a declared level.
/// Two classes are equal when the connecting map identifies them.
template <typename K>
struct LimitClass {
  int level = 0;
  LinearCombo<K> rep;
};

/// The stable limit of a graded admissible module along the connecting map E,
/// carrying the Heisenberg action built from the level-wise operators
///   H_{i,i} = K1,  H_{i,-i} = -i sum_{l>=0} K1^l Km1^{l+1},
///   H_{i,j} = sum_{l>=0} E_l H_{i-1,j} F_l   (|j| < i),
/// which are compatible with E and so descend to the limit.
template <typename K>
class StableLimit {
 public:
  using State = LinearCombo<K>;

  explicit StableLimit(EModule<K> module) : m_(std::move(module)) {}

  const EModule<K>& module() const { return m_; }

  /// The class of a (possibly level-mixed) state: every component is pushed
  /// up to the top level with the connecting map.
  LimitClass<K> make_class(const State& s) const {
    int top = 0;
    for (const auto& [k, c] : s) top = std::max(top, m_.level(k));
    LimitClass<K> out{top, {}};
    for (const auto& [lvl, part] : split_by_level(m_.level, s)) {
      State lifted = part;
      for (int i = lvl; i < top; ++i) lifted = m_.E(lifted);
      out.rep += lifted;
    }
    return out;
  }

  LimitClass<K> lift(const LimitClass<K>& c, int target) const {
    if (target < c.level)
      throw std::invalid_argument("StableLimit::lift: target below class level");
    State rep = c.rep;
    for (int i = c.level; i < target; ++i) rep = m_.E(rep);
    return {target, rep};
  }

  bool equal(const LimitClass<K>& a, const LimitClass<K>& b) const {
    const int top = std::max(a.level, b.level);
    return lift(a, top).rep == lift(b, top).rep;
  }

  /// H_j acting on the limit: lift until the level dominates |j|, then apply
  /// the level-wise operator.
  LimitClass<K> act_H(int j, const LimitClass<K>& c) {
    if (j == 0) throw std::invalid_argument("StableLimit::act_H: index must be nonzero");
    const int lvl = std::max(c.level, std::abs(j));
    LimitClass<K> lifted = lift(c, lvl);
    return {lvl, level_op(j, lvl, lifted.rep)};
  }

  /// The L_k series evaluated through the limit Heisenberg action.
  LimitClass<K> act_L(int k, const LimitClass<K>& c) {
    if (k < 1) throw std::invalid_argument("StableLimit::act_L: index must be >= 1");
    long deg = 0;
    for (const auto& [key, cf] : c.rep) deg = std::max(deg, m_.degree(key));
    const int cap = iteration_cap(deg);
    LimitClass<K> out{c.level, {}};
    LimitClass<K> lowered = c;
    for (int i = 1;; ++i) {
      lowered = act_H(-k, lowered);
      if (lowered.rep.is_zero()) break;
      if (i > cap) throw InadmissibleError("StableLimit::act_L: series does not terminate");
      LimitClass<K> term = lowered;
      for (int j = 1; j < i; ++j) term = act_H(k, term);
      const int top = std::max(out.level, term.level);
      const Scalar coef = Scalar(-1) / (pow_int(Scalar(k), i) * factorial(i));
      out = {top, lift(out, top).rep + lift(term, top).rep.scaled(coef)};
    }
    return out;
  }

  /// Level-wise operator H_{level,j} applied to a state at that level.
  State level_op(int j, int level, const State& s) {
    if (j == 0 || std::abs(j) > level)
      throw std::invalid_argument("StableLimit::level_op: need 0 < |j| <= level");
    State out;
    for (const auto& [key, c] : s) out += level_op_key(j, level, key).scaled(c);
    return out;
  }

 private:
  State level_op_key(int j, int level, const K& key) {
    const auto memo_key = std::make_tuple(j, level, key);
    if (auto it = memo_.find(memo_key); it != memo_.end()) return it->second;
    const State s(key);
    State result;
    const int cap = iteration_cap(m_.degree(key) + level);
    if (j == level) {
      result = m_.K1(s);
    } else if (j == -level) {
      // -level * sum_{l>=0} K1^l Km1^{l+1}
      State lowered = m_.Km1(s);
      for (int l = 0; !lowered.is_zero(); ++l) {
        if (l > cap) throw InadmissibleError("H_{i,-i}: Km1 powers do not vanish");
        State term = lowered;
        for (int p = 0; p < l; ++p) term = m_.K1(term);
        result += term;
        lowered = m_.Km1(lowered);
      }
      result = result.scaled(Scalar(-level));
    } else {
      // sum_{l>=0} E_l H_{level-1,j} F_l with E_l = K1^l E, F_l = F Km1^l.
      State shifted = s;  // Km1^l s
      for (int l = 0; !shifted.is_zero(); ++l) {
        if (l > cap) throw InadmissibleError("H_{i,j}: Km1 powers do not vanish");
        State f_l = m_.F(shifted);
        if (!f_l.is_zero()) {
          State inner = level_op(j, level - 1, f_l);
          inner = m_.E(inner);
          for (int p = 0; p < l; ++p) inner = m_.K1(inner);
          result += inner;
        }
        shifted = m_.Km1(shifted);
      }
    }
    memo_.emplace(memo_key, result);
    return result;
  }

  EModule<K> m_;
  std::map<std::tuple<int, int, K>, State> memo_;
};

template <typename K>
LimitClass<K> bosonize_H(StableLimit<K>& limit, int j, const LimitClass<K>& c) {
  return limit.act_H(j, c);
}

template <typename K>
bool limit_equal(const StableLimit<K>& limit, const LimitClass<K>& a,
                 const LimitClass<K>& b) {
  return limit.equal(a, b);
}

/// Gap-coordinate map: the wedge with indices i_1 < ... < i_n goes to the
/// monomial with y_r-exponent i_{n+1-r} - i_{n-r} - 1 for r < n and i_1 - 1
/// for r = n. Collapses the connecting map and identifies the level-n piece
/// with the polynomials in y_1..y_n.
BosonMonomial rho(const WedgeMonomial& m);
BosonState rho_state(const FermionState& s);

/// Exact rank of a family of states by Gaussian elimination.
template <typename K>
int rank_of(const std::vector<LinearCombo<K>>& vecs) {
  std::map<K, LinearCombo<K>> pivots;  // leading key -> pivot row
  int rank = 0;
  for (LinearCombo<K> v : vecs) {
    while (!v.is_zero()) {
      const K lead = v.terms().begin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        ++rank;
        pivots.emplace(lead, std::move(v));
        break;
      }
      // Kill the leading term; the lead strictly increases, so this stops.
      v -= it->second.scaled(v.terms().begin()->second /
                             it->second.terms().begin()->second);
    }
  }
  return rank;
}

namespace detail {
template <typename K>
LinearCombo<K> apply_H_partition_handle(const HModule<K>& M, const Partition& p,
                                        bool negative, const LinearCombo<K>& s) {
  LinearCombo<K> cur = s;
  for (const auto& [part, count] : p.multiplicities())
    for (int c = 0; c < count && !cur.is_zero(); ++c)
      cur = M.act_H(negative ? -part : part, cur);
  return cur;
}
}  // namespace detail

/// Checks the structure isomorphism B (x) W_0 -> W sending
/// y_1^{l_1}...y_m^{l_m} (x) w_0 to H_1^{l_1}...H_m^{l_m} w_0: in every
/// degree d <= max_degree the vectors H_lambda w_0 must be independent and
/// span the degree-d piece, so its dimension is p(d) * dim W_0.
template <typename K>
CheckReport structure_iso_check(const HModule<K>& M, int max_degree) {
  CheckReport report;
  const std::vector<K> w0 = M.basis(0);
  const std::vector<long long> p = partition_numbers(max_degree);
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<LinearCombo<K>> vecs;
    for (const Partition& lambda : partitions_of(d))
      for (const K& key : w0)
        vecs.push_back(detail::apply_H_partition_handle(M, lambda, false,
                                                        LinearCombo<K>(key)));
    const int rank = rank_of(vecs);
    const auto dim = static_cast<long long>(M.basis(d).size());
    const long long expected = p[d] * static_cast<long long>(w0.size());
    const bool ok = rank == static_cast<int>(vecs.size()) && rank == dim &&
                    dim == expected;
    report.add("structure iso, degree " + std::to_string(d) + ": dim " +
                   std::to_string(dim) + " = p(d)*dimW0 = " + std::to_string(expected),
               ok,
               "rank " + std::to_string(rank) + " of " + std::to_string(vecs.size()) +
                   " vectors");
  }
  return report;
}

/// Same check for the Heisenberg action on a stable limit: the classes
/// H_lambda [w0] are compared inside a common high level, where the degree-d
/// piece has stabilized.
template <typename K>
CheckReport structure_iso_check_limit(StableLimit<K>& limit, const LimitClass<K>& w0,
                                      int max_degree) {
  CheckReport report;
  const std::vector<long long> p = partition_numbers(max_degree);
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<LimitClass<K>> classes;
    for (const Partition& lambda : partitions_of(d)) {
      LimitClass<K> cur = w0;
      for (const auto& [part, count] : lambda.multiplicities())
        for (int c = 0; c < count; ++c) cur = limit.act_H(part, cur);
      classes.push_back(cur);
    }
    int top = std::max(d, w0.level);
    for (const auto& c : classes) top = std::max(top, c.level);
    std::vector<LinearCombo<K>> vecs;
    for (const auto& c : classes) vecs.push_back(limit.lift(c, top).rep);
    const int rank = rank_of(vecs);
    const auto dim =
        static_cast<long long>(limit.module().basis(top, d).size());
    const bool ok =
        rank == static_cast<int>(vecs.size()) && rank == dim && dim == p[d];
    report.add("limit structure iso, degree " + std::to_string(d) + ": dim " +
                   std::to_string(dim) + " = p(d) = " + std::to_string(p[d]),
               ok, "rank " + std::to_string(rank));
  }
  return report;
}

/// Samples basis states and checks the defining relations and admissibility
/// conditions of a graded module over the four-generator algebra.
template <typename K>
CheckReport admissibility_audit(const EModule<K>& M, int bound) {
  CheckReport report;
  using State = LinearCombo<K>;
  bool rel_ok = true, bottom_ok = true, nilpotent_ok = true, grading_ok = true;
  std::string witness_rel, witness_bottom, witness_nil, witness_grade;
  for (int lvl = 0; lvl <= bound; ++lvl) {
    for (long deg = 0; deg <= bound; ++deg) {
      for (const K& key : M.basis(lvl, deg)) {
        const State s(key);
        const State k1 = M.K1(s);
        if (M.Km1(k1) != s || M.F(M.E(s)) != s || !M.Km1(M.E(s)).is_zero() ||
            !M.F(k1).is_zero() || M.K1(M.Km1(s)) + M.E(M.F(s)) != s) {
          if (rel_ok) witness_rel = "at level " + std::to_string(lvl);
          rel_ok = false;
        }
        if (lvl == 0 && (k1 != s || M.Km1(s) != s)) {
          if (bottom_ok) witness_bottom = "key at level 0";
          bottom_ok = false;
        }
        if (lvl > 0) {
          State cur = s;
          const int cap = iteration_cap(deg + lvl);
          int steps = 0;
          while (!cur.is_zero() && steps <= cap) {
            cur = M.Km1(cur);
            ++steps;
          }
          if (!cur.is_zero()) {
            if (nilpotent_ok) witness_nil = "Km1 powers at level " + std::to_string(lvl);
            nilpotent_ok = false;
          }
        }
        for (const auto& [k2, c] : M.E(s))
          if (M.level(k2) != lvl + 1) grading_ok = false;
        for (const auto& [k2, c] : M.F(s))
          if (M.level(k2) != lvl - 1) grading_ok = false;
        for (const auto& [k2, c] : k1)
          if (M.level(k2) != lvl) grading_ok = false;
      }
    }
  }
  report.add("relations K-1K1=FE=1, K-1E=FK1=0, K1K-1+EF=1", rel_ok, witness_rel);
  report.add("K1 = Km1 = id on the bottom piece", bottom_ok, witness_bottom);
  report.add("Km1 locally nilpotent above the bottom piece", nilpotent_ok, witness_nil);
  report.add("E/F/K have degrees +1/-1/0", grading_ok, witness_grade);
  return report;
}

/// Clifford-module audit: anticommutators plus the two admissibility
/// conditions of the graded Clifford category.
template <typename K>
CheckReport admissibility_audit(const CModule<K>& M, int bound) {
  CheckReport report;
  using State = LinearCombo<K>;
  bool cli_ok = true, support_ok = true, bottom_ok = true;
  std::string witness;
  const int idx_bound = std::min(bound, 6);
  for (int lvl = 0; lvl <= bound; ++lvl) {
    for (long deg = 0; deg <= bound; ++deg) {
      for (const K& key : M.basis(lvl, deg)) {
        const State s(key);
        for (int i = 1; i <= idx_bound; ++i)
          for (int j = 1; j <= idx_bound; ++j) {
            const State pp = M.act_P(i, M.act_P(j, s)) + M.act_P(j, M.act_P(i, s));
            const State qq = M.act_Q(i, M.act_Q(j, s)) + M.act_Q(j, M.act_Q(i, s));
            State pq = M.act_P(i, M.act_Q(j, s)) + M.act_Q(j, M.act_P(i, s));
            if (i == j) pq -= s;
            if (!pp.is_zero() || !qq.is_zero() || !pq.is_zero()) {
              if (cli_ok) witness = "clifford relation at level " + std::to_string(lvl);
              cli_ok = false;
            }
          }
        const int qb = M.q_bound(s);
        for (int m = qb + 1; m <= qb + 3; ++m)
          if (!M.act_Q(m, s).is_zero()) support_ok = false;
        if (lvl == 0)
          for (int i = 1; i <= idx_bound; ++i)
            if (!M.act_Q(i, s).is_zero()) bottom_ok = false;
      }
    }
  }
  report.add("clifford anticommutators", cli_ok, witness);
  report.add("Q_m vanishes beyond the support bound", support_ok);
  report.add("bottom piece inside every ker Q_i", bottom_ok);
  return report;
}

/// Heisenberg-module audit: bracket relations and the vanishing of
/// H_{-lambda} beyond the degree.
template <typename K>
CheckReport admissibility_audit(const HModule<K>& M, int bound) {
  CheckReport report;
  using State = LinearCombo<K>;
  bool bracket_ok = true, vanish_ok = true;
  std::string witness;
  const int idx_bound = std::min(bound, 4);
  for (long deg = 0; deg <= bound; ++deg) {
    for (const K& key : M.basis(static_cast<int>(deg))) {
      const State s(key);
      for (int i = -idx_bound; i <= idx_bound; ++i)
        for (int j = -idx_bound; j <= idx_bound; ++j) {
          if (i == 0 || j == 0) continue;
          State lhs = M.act_H(i, M.act_H(j, s)) - M.act_H(j, M.act_H(i, s));
          if (i == -j) lhs -= s.scaled(Scalar(i));
          if (!lhs.is_zero()) {
            if (bracket_ok)
              witness = "[H_" + std::to_string(i) + ",H_" + std::to_string(j) + "]";
            bracket_ok = false;
          }
        }
      for (const Partition& lambda : partitions_of(static_cast<int>(deg) + 1))
        if (!detail::apply_H_partition_handle(M, lambda, true, s).is_zero())
          vanish_ok = false;
    }
  }
  report.add("heisenberg bracket [H_i,H_j] = i delta_{i,-j}", bracket_ok, witness);
  report.add("H_{-lambda} kills states of weight < |lambda|", vanish_ok);
  return report;
}

}  // namespace efock
