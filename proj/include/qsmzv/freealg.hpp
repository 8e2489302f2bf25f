#ifndef QSMZV_FREEALG_HPP
#define QSMZV_FREEALG_HPP

#include <map>
#include <vector>

#include "qsmzv/index.hpp"
#include "qsmzv/word_poly.hpp"

namespace qsmzv {

struct NotInSubalgebra : Error {
  using Error::Error;
};

// Linear combination of A-words over Q[h]; the on-demand view of elements of
// the subalgebra generated by hb and the g_k.
using APoly = std::map<AWord, HPoly, AWordLess>;

inline void apoly_add(APoly& p, const AWord& w, const HPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

inline APoly apoly_sum(const APoly& a, const APoly& b) {
  APoly r = a;
  for (auto& [w, c] : b) apoly_add(r, w, c);
  return r;
}

inline APoly apoly_concat(const APoly& a, const APoly& b) {
  APoly r;
  for (auto& [wa, ca] : a)
    for (auto& [wb, cb] : b) {
      AWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      apoly_add(r, w, ca * cb);
    }
  return r;
}

inline APoly apoly_scale(APoly p, const HPoly& c) {
  if (c.is_zero()) return {};
  for (auto& [w, cc] : p) cc *= c;
  return p;
}

// g_k = b a^k; e_k = b (a+h) a^{k-1} = g_k + h g_{k-1} (with g_0 read as b).
inline NCPoly g_word(int k) { return NCPoly::monomial(aword_expand({k})); }
inline NCPoly g_word(const Index& k) {
  AWord w(k.begin(), k.end());
  return NCPoly::monomial(aword_expand(w));
}
inline NCPoly hb_word() { return NCPoly::monomial("b", HPoly::hbar()); }
inline NCPoly e_word(int k) {
  if (k < 1) throw Error("e_word: k >= 1 required");
  if (k == 1) return g_word(1) + hb_word();
  NCPoly r = g_word(k);
  r += HPoly::hbar() * g_word(k - 1);
  return r;
}

// A-word -> element of the free algebra on a, b.
inline NCPoly expand_A(const AWord& w, const HPoly& coeff = HPoly(1)) {
  HPoly c = coeff;
  for (int i = 0; i < aword_hbar_count(w); ++i) c *= HPoly::hbar();
  return NCPoly::monomial(aword_expand(w), c);
}

inline NCPoly expand_A(const APoly& p) {
  NCPoly r;
  for (auto& [w, c] : p) r += expand_A(w, c);
  return r;
}

// Greedy scan inverting expand_A on the subalgebra C<A>: every monomial must
// start with b; each b followed by k >= 1 a's is g_k, a bare b consumes one
// factor of h and is the letter H. Throws NotInSubalgebra otherwise.
inline APoly to_A_basis(const NCPoly& p) {
  APoly r;
  for (auto& [word, coeff] : p.terms()) {
    AWord aw;
    int bare_b = 0;
    size_t i = 0;
    while (i < word.size()) {
      if (word[i] != 'b')
        throw NotInSubalgebra("to_A_basis: monomial has an a outside g-runs: " + word);
      size_t j = i + 1;
      while (j < word.size() && word[j] == 'a') ++j;
      int run = static_cast<int>(j - i - 1);
      if (run == 0) {
        aw.push_back(kH);
        ++bare_b;
      } else {
        aw.push_back(run);
      }
      i = j;
    }
    HPoly c = coeff;
    for (int d = 0; d < bare_b; ++d) {
      auto [ok, quot] = c.divide_hbar();
      if (!ok)
        throw NotInSubalgebra("to_A_basis: bare-b coefficient not divisible by h: " + word);
      c = quot;
    }
    apoly_add(r, aw, c);
  }
  return r;
}

inline bool in_subalgebra_A(const NCPoly& p) {
  try {
    to_A_basis(p);
    return true;
  } catch (const NotInSubalgebra&) {
    return false;
  }
}

enum class Space { Hhat0, n0, n, H0, gspan, Zspan_adm };

// Basis-monomial classifications used by the membership test.
inline bool aword_ends_in_g(const AWord& w) { return !w.empty() && w.back() != kH; }

// A-word spans an n0 basis monomial iff it ends in some g and contains an H
// strictly before a g_k with k >= 2.
inline bool aword_is_n0_monomial(const AWord& w) {
  if (!aword_ends_in_g(w)) return false;
  bool seen_h = false;
  for (ALetter l : w) {
    if (l == kH) seen_h = true;
    else if (l >= 2 && seen_h) return true;
  }
  return false;
}

inline bool membership(const NCPoly& p, Space space) {
  APoly a = to_A_basis(p);  // NotInSubalgebra propagates
  for (auto& [w, c] : a) {
    switch (space) {
      case Space::Hhat0:
        if (!w.empty() && !aword_ends_in_g(w)) return false;
        break;
      case Space::n0:
        if (!aword_is_n0_monomial(w)) return false;
        break;
      case Space::n:
        if (!w.empty() && !aword_ends_in_g(w)) return false;
        if (!aword_is_n0_monomial(w) && !c.hbar_divisible()) return false;
        break;
      case Space::H0:
        if (w.empty() || (aword_ends_in_g(w) && w.back() >= 2)) break;
        if (!aword_ends_in_g(w)) return false;
        if (!aword_is_n0_monomial(w) && !c.hbar_divisible()) return false;
        break;
      case Space::gspan:
        for (ALetter l : w)
          if (l == kH) return false;
        break;
      case Space::Zspan_adm: {
        for (ALetter l : w)
          if (l == kH) return false;
        if (!w.empty() && w.back() < 2) return false;
        if (!c.is_constant() || !c.constant_term().is_integer()) return false;
        break;
      }
    }
  }
  return true;
}

// g-word decomposition of an element of the span of the g_k, coefficients in C.
inline std::map<Index, HPoly> to_g_basis(const NCPoly& p) {
  std::map<Index, HPoly> r;
  for (auto& [w, c] : to_A_basis(p)) {
    for (ALetter l : w)
      if (l == kH) throw NotInSubalgebra("to_g_basis: H letter present");
    Index k(w.begin(), w.end());
    auto [it, inserted] = r.emplace(k, c);
    if (!inserted) it->second += c;
    if (it->second.is_zero()) r.erase(it);
  }
  return r;
}

}  // namespace qsmzv

#endif
