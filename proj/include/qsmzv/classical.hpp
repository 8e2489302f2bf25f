#ifndef QSMZV_CLASSICAL_HPP
#define QSMZV_CLASSICAL_HPP

#include <map>
#include <utility>
#include <vector>

#include "qsmzv/index.hpp"
#include "qsmzv/word_poly.hpp"

namespace qsmzv {

struct NotInH1 : Error {
  using Error::Error;
};

inline ClassicalPoly z_word(const Index& k) {
  return ClassicalPoly::monomial(index_to_zword(k));
}

// Monomials of h^1 are empty or start with y; parse them into z-blocks.
inline Index monomial_to_index(const Word& w) {
  if (!w.empty() && w.front() != 'y') throw NotInH1("not in h^1: monomial " + w);
  return zword_to_index(w);
}

inline bool in_h1(const ClassicalPoly& p) {
  for (auto& [w, c] : p.terms())
    if (!w.empty() && w.front() != 'y') return false;
  return true;
}

// h^0: every monomial is constant or ends in x (admissible z-words).
inline bool in_h0(const ClassicalPoly& p) {
  for (auto& [w, c] : p.terms())
    if (!w.empty() && (w.front() != 'y' || w.back() != 'x')) return false;
  return true;
}

namespace detail {

inline const std::map<Index, Rational>& harm_words(const Index& u, const Index& v) {
  static std::map<std::pair<Index, Index>, std::map<Index, Rational>> cache;
  auto key = std::make_pair(u, v);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (u.empty()) return cache[key] = {{v, Rational(1)}};
  if (v.empty()) return cache[key] = {{u, Rational(1)}};

  Index u1(u.begin(), u.end() - 1), v1(v.begin(), v.end() - 1);
  int k = u.back(), l = v.back();
  std::map<Index, Rational> r;
  auto acc = [&r](const std::map<Index, Rational>& part, int last) {
    for (auto& [m, c] : part) {
      Index mm = m;
      mm.push_back(last);
      r[mm] += c;
    }
  };
  acc(harm_words(u1, v), k);
  acc(harm_words(u, v1), l);
  acc(harm_words(u1, v1), k + l);
  for (auto it2 = r.begin(); it2 != r.end();)
    it2 = it2->second.is_zero() ? r.erase(it2) : std::next(it2);
  return cache[key] = r;
}

inline const ClassicalPoly& shuf_words(const Word& u, const Word& v) {
  static std::map<std::pair<Word, Word>, ClassicalPoly> cache;
  auto key = std::make_pair(u, v);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (u.empty()) return cache[key] = ClassicalPoly::monomial(v);
  if (v.empty()) return cache[key] = ClassicalPoly::monomial(u);

  Word u1 = u.substr(0, u.size() - 1), v1 = v.substr(0, v.size() - 1);
  ClassicalPoly r = shuf_words(u1, v).append_letter(u.back());
  r += shuf_words(u, v1).append_letter(v.back());
  return cache[key] = r;
}

}  // namespace detail

// Harmonic (quasi-shuffle) product on h^1.
inline ClassicalPoly harm(const ClassicalPoly& w, const ClassicalPoly& w2) {
  ClassicalPoly r;
  for (auto& [wu, cu] : w.terms())
    for (auto& [wv, cv] : w2.terms()) {
      const auto& part = detail::harm_words(monomial_to_index(wu), monomial_to_index(wv));
      Rational c = cu * cv;
      for (auto& [m, cm] : part) r.add_term(index_to_zword(m), c * cm);
    }
  return r;
}

// Shuffle product on all of h.
inline ClassicalPoly shuf(const ClassicalPoly& w, const ClassicalPoly& w2) {
  ClassicalPoly r;
  for (auto& [wu, cu] : w.terms())
    for (auto& [wv, cv] : w2.terms()) r.add_scaled(detail::shuf_words(wu, wv), cu * cv);
  return r;
}

// Anti-automorphism psi: z_k -> (-1)^k z_k, factors reversed.
inline ClassicalPoly psi(const ClassicalPoly& w) {
  ClassicalPoly r;
  for (auto& [wu, cu] : w.terms()) {
    Index k = monomial_to_index(wu);
    Rational c = weight(k) % 2 ? -cu : cu;
    r.add_term(index_to_zword(reversal(k)), c);
  }
  return r;
}

enum class Mode { star, sh };

inline ClassicalPoly classical_product(const ClassicalPoly& a, const ClassicalPoly& b,
                                       Mode mode) {
  return mode == Mode::star ? harm(a, b) : shuf(a, b);
}

// Symmetrizer w^{S,bullet}: sum over splits of prefix bullet psi(suffix).
inline ClassicalPoly wS_classical(const ClassicalPoly& w, Mode mode) {
  ClassicalPoly r;
  for (auto& [wu, cu] : w.terms()) {
    Index k = monomial_to_index(wu);
    ClassicalPoly acc;
    for (size_t i = 0; i <= k.size(); ++i) {
      Index pre(k.begin(), k.begin() + i), suf(k.begin() + i, k.end());
      acc += classical_product(z_word(pre), psi(z_word(suf)), mode);
    }
    r += cu * acc;
  }
  return r;
}

// Coefficients of z_m in z_k bullet z_l.
inline std::map<Index, long> d_coeffs(const Index& k, const Index& l, Mode mode) {
  ClassicalPoly prod = classical_product(z_word(k), z_word(l), mode);
  std::map<Index, long> r;
  for (auto& [w, c] : prod.terms()) {
    if (!c.is_integer()) throw Error("d_coeffs: non-integer coefficient");
    r[monomial_to_index(w)] = c.raw().get_num().get_si();
  }
  return r;
}

// Truncated multiple zeta value: sum over 0 < m_1 < ... < m_r < M of prod m_i^{-k_i}.
// C_j(n) below accumulates chains of length j with largest element <= n.
inline Rational zeta_M(const Index& k, long M) {
  if (M < 1) throw Error("zeta_M: M >= 1 required");
  std::vector<Rational> C(static_cast<size_t>(M), Rational(1));
  for (size_t j = 0; j < k.size(); ++j) {
    std::vector<Rational> D(static_cast<size_t>(M), Rational(0));
    for (long n = 1; n < M; ++n)
      D[static_cast<size_t>(n)] =
          D[static_cast<size_t>(n - 1)] + Rational(1, n).pow(k[j]) * C[static_cast<size_t>(n - 1)];
    C = std::move(D);
  }
  return C[static_cast<size_t>(M - 1)];
}

inline Rational Z_M(const ClassicalPoly& w, long M) {
  Rational r(0);
  for (auto& [wu, cu] : w.terms()) r += cu * zeta_M(monomial_to_index(wu), M);
  return r;
}

// Truncated symmetric MZV: Z_M composed with the symmetrizer.
inline Rational ZM_S_classical(const ClassicalPoly& w, long M, Mode mode) {
  return Z_M(wS_classical(w, mode), M);
}

// Ohno machinery. a_s takes a tuple with parts >= 0; each part k_i contributes
// y (y^{j_1} x) ... (y^{j_{k_i}} x) and the j's sum to s over all parts.
inline ClassicalPoly ohno_a(const std::vector<int>& parts, int s) {
  int slots = 0;
  for (int p : parts) slots += p;
  // enumerate weak compositions of s into `slots` parts
  ClassicalPoly r;
  std::vector<int> j(static_cast<size_t>(slots), 0);
  auto emit = [&]() {
    Word w;
    size_t pos = 0;
    for (int p : parts) {
      w += 'y';
      for (int l = 0; l < p; ++l) {
        w.append(static_cast<size_t>(j[pos++]), 'y');
        w += 'x';
      }
    }
    r.add_term(w, Rational(1));
  };
  if (slots == 0) {
    if (s == 0) emit();
    return r;
  }
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == slots - 1) {
      j[static_cast<size_t>(pos)] = rem;
      emit();
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      j[static_cast<size_t>(pos)] = v;
      rec(pos + 1, rem - v);
    }
  };
  rec(0, s);
  return r;
}

inline ClassicalPoly ohno_A(const Index& k, int s, int p) {
  int r = depth(k);
  ClassicalPoly out;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    if (__builtin_popcount(mask) != p) continue;
    std::vector<int> parts(k.begin(), k.end());
    for (int i = 0; i < r; ++i) parts[static_cast<size_t>(i)] += ((mask >> i) & 1) - 1;
    out += ohno_a(parts, s);
  }
  return out;
}

// sum_{p<=min(n,r)} sum_{m+s=n-p} (-1)^s A_{k,s,p} sh z_1^m  ==  z_k * z_1^n
inline bool ohno_machinery_check(const Index& k, int n) {
  if (n < 1) throw Error("ohno_machinery_check: n >= 1 required");
  int r = depth(k);
  ClassicalPoly lhs;
  for (int p = 0; p <= std::min(n, r); ++p)
    for (int s = 0; s <= n - p; ++s) {
      int m = n - p - s;
      ClassicalPoly t = shuf(ohno_A(k, s, p), ClassicalPoly::monomial(Word(static_cast<size_t>(m), 'y')));
      if (s % 2) lhs -= t;
      else lhs += t;
    }
  ClassicalPoly rhs = harm(z_word(k), ClassicalPoly::monomial(Word(static_cast<size_t>(n), 'y')));
  return lhs == rhs;
}

}  // namespace qsmzv

#endif
