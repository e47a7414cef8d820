#include "efock/ealgebra.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace efock {

std::string gen_name(Gen g) {
  switch (g) {
    case Gen::K1: return "K1";
    case Gen::Km1: return "Km1";
    case Gen::E: return "E";
    case Gen::F: return "F";
  }
  return "?";
}

std::string word_str(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += gen_name(w[i]);
  }
  return out;
}

std::string alg_str(const AlgElement& x) { return x.str(word_str); }

AlgElement mul(const AlgElement& a, const AlgElement& b) {
  AlgElement r;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  return r;
}

AlgElement mul(const AlgElement& a, const AlgElement& b, const AlgElement& c) {
  return mul(mul(a, b), c);
}

namespace {

bool is_redex(Gen a, Gen b) {
  // Lowering letter immediately followed by a raising letter, or E*F.
  if ((a == Gen::Km1 || a == Gen::F) && (b == Gen::K1 || b == Gen::E)) return true;
  return a == Gen::E && b == Gen::F;
}

// Termination measure: (#E + #F letters, length), ordered lexicographically.
std::pair<std::size_t, std::size_t> measure(const Word& w) {
  std::size_t ef = 0;
  for (Gen g : w)
    if (g == Gen::E || g == Gen::F) ++ef;
  return {ef, w.size()};
}

// Replacements for the redex (w[i], w[i+1]): a list of (infix, coefficient).
// An empty list rewrites the whole term to zero.
std::vector<std::pair<Word, Scalar>> redex_replacements(Gen a, Gen b) {
  if (a == Gen::Km1 && b == Gen::K1) return {{Word{}, Scalar(1)}};
  if (a == Gen::F && b == Gen::E) return {{Word{}, Scalar(1)}};
  if (a == Gen::Km1 && b == Gen::E) return {};
  if (a == Gen::F && b == Gen::K1) return {};
  assert(a == Gen::E && b == Gen::F);
  return {{Word{}, Scalar(1)}, {Word{Gen::K1, Gen::Km1}, Scalar(-1)}};
}

int find_redex(const Word& w, RewriteStrategy strategy) {
  if (w.size() < 2) return -1;
  if (strategy == RewriteStrategy::LeftmostFirst) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (is_redex(w[i], w[i + 1])) return static_cast<int>(i);
  } else {
    for (std::size_t i = w.size() - 1; i-- > 0;)
      if (is_redex(w[i], w[i + 1])) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

bool is_normal_word(const Word& w) { return find_redex(w, RewriteStrategy::LeftmostFirst) < 0; }

NormalForm normalize(const AlgElement& x, RewriteStrategy strategy) {
  AlgElement result;
  std::vector<std::pair<Word, Scalar>> pending(x.terms().begin(), x.terms().end());
  while (!pending.empty()) {
    auto [w, c] = std::move(pending.back());
    pending.pop_back();
    const int pos = find_redex(w, strategy);
    if (pos < 0) {
      result.add_term(w, c);
      continue;
    }
    const auto before = measure(w);
    for (const auto& [infix, r] : redex_replacements(w[pos], w[pos + 1])) {
      Word next;
      next.reserve(w.size() - 2 + infix.size());
      next.insert(next.end(), w.begin(), w.begin() + pos);
      next.insert(next.end(), infix.begin(), infix.end());
      next.insert(next.end(), w.begin() + pos + 2, w.end());
      assert(measure(next) < before);
      pending.emplace_back(std::move(next), c * r);
    }
  }
  return NormalForm(std::move(result));
}

AlgElement build_E_lower(int i) {
  if (i < 0) throw std::invalid_argument("build_E_lower: negative index");
  Word w(static_cast<std::size_t>(i), Gen::K1);
  w.push_back(Gen::E);
  return alg_word(std::move(w));
}

AlgElement build_F_lower(int i) {
  if (i < 0) throw std::invalid_argument("build_F_lower: negative index");
  Word w{Gen::F};
  w.insert(w.end(), static_cast<std::size_t>(i), Gen::Km1);
  return alg_word(std::move(w));
}

namespace {

NormalForm build_clifford(int i, const Word& base) {
  if (i < 1) throw std::invalid_argument("build_P/Q: index must be >= 1");
  AlgElement cur = alg_word(base);
  const AlgElement k1 = alg_word({Gen::K1});
  const AlgElement km1 = alg_word({Gen::Km1});
  const AlgElement e = alg_word({Gen::E});
  const AlgElement f = alg_word({Gen::F});
  for (int step = 2; step <= i; ++step)
    cur = normalize(mul(k1, cur, km1) - mul(e, cur, f)).element();
  return normalize(cur);
}

}  // namespace

NormalForm build_P(int i) { return build_clifford(i, Word{Gen::E, Gen::Km1}); }
NormalForm build_Q(int i) { return build_clifford(i, Word{Gen::K1, Gen::F}); }

CheckReport check_clifford_relations(int max_index) {
  if (max_index < 1) throw std::invalid_argument("check_clifford_relations: max_index < 1");
  CheckReport report;
  std::vector<AlgElement> P(static_cast<std::size_t>(max_index) + 1);
  std::vector<AlgElement> Q(static_cast<std::size_t>(max_index) + 1);
  for (int i = 1; i <= max_index; ++i) {
    P[i] = build_P(i).element();
    Q[i] = build_Q(i).element();
  }
  auto anti = [](const AlgElement& a, const AlgElement& b) {
    return normalize(mul(a, b) + mul(b, a));
  };
  for (int i = 1; i <= max_index; ++i)
    for (int j = 1; j <= max_index; ++j) {
      const std::string ij = "_" + std::to_string(i) + "," + std::to_string(j) + "}";
      NormalForm pp = anti(P[i], P[j]);
      report.add("{P,P" + ij + " = 0", pp.is_zero(), "got " + pp.str());
      NormalForm qq = anti(Q[i], Q[j]);
      report.add("{Q,Q" + ij + " = 0", qq.is_zero(), "got " + qq.str());
      NormalForm pq = anti(P[i], Q[j]);
      const AlgElement expect = i == j ? alg_one() : AlgElement();
      report.add("{P,Q" + ij + " = " + (i == j ? "1" : "0"),
                 pq.element() == expect, "got " + pq.str());
    }
  return report;
}

CheckReport check_lemma22(int l) {
  if (l < 0) throw std::invalid_argument("check_lemma22: l < 0");
  CheckReport report;
  auto kpow = [](int n) {
    Word w(static_cast<std::size_t>(n), Gen::K1);
    w.insert(w.end(), static_cast<std::size_t>(n), Gen::Km1);
    return alg_word(std::move(w));
  };
  const AlgElement k1 = alg_word({Gen::K1});
  const AlgElement km1 = alg_word({Gen::Km1});

  AlgElement telescoping;
  for (int i = 0; i <= l; ++i) {
    telescoping += mul(build_E_lower(i), build_F_lower(i));
    NormalForm lhs = normalize(mul(build_E_lower(i), build_F_lower(i)));
    NormalForm rhs = normalize(kpow(i) - kpow(i + 1));
    report.add("E_" + std::to_string(i) + "F_" + std::to_string(i) +
                   " = K1^iKm1^i - K1^(i+1)Km1^(i+1)",
               lhs == rhs, "got " + lhs.str());
  }
  NormalForm sum = normalize(telescoping);
  NormalForm target = normalize(alg_one() - kpow(l + 1));
  report.add("sum_{i<=" + std::to_string(l) + "} E_iF_i = 1 - K1^(l+1)Km1^(l+1)",
             sum == target, "got " + sum.str());

  for (int i = 0; i <= l; ++i)
    for (int j = 0; j <= l; ++j) {
      NormalForm fe = normalize(mul(build_F_lower(i), build_E_lower(j)));
      const AlgElement expect = i == j ? alg_one() : AlgElement();
      report.add("F_" + std::to_string(i) + "E_" + std::to_string(j) + " = " +
                     (i == j ? "1" : "0"),
                 fe.element() == expect, "got " + fe.str());
    }

  for (int i = 0; i <= l; ++i) {
    NormalForm shift_e = normalize(mul(k1, build_E_lower(i)));
    report.add("K1*E_" + std::to_string(i) + " = E_" + std::to_string(i + 1),
               shift_e == normalize(build_E_lower(i + 1)), "got " + shift_e.str());
    NormalForm shift_f = normalize(mul(build_F_lower(i), km1));
    report.add("F_" + std::to_string(i) + "*Km1 = F_" + std::to_string(i + 1),
               shift_f == normalize(build_F_lower(i + 1)), "got " + shift_f.str());
  }
  return report;
}

}  // namespace efock
