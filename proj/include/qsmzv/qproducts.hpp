#ifndef QSMZV_QPRODUCTS_HPP
#define QSMZV_QPRODUCTS_HPP

#include <map>
#include <utility>

#include "qsmzv/classical.hpp"
#include "qsmzv/freealg.hpp"

namespace qsmzv {

struct NotDepthOne : Error {
  using Error::Error;
};

// circ on the span of A:  H o H = h H,  H o g_k = h g_k,  g_k o g_l = g_{k+l}.
inline std::pair<AWord, HPoly> circ_letters(ALetter u, ALetter v) {
  if (u == kH && v == kH) return {{kH}, HPoly::hbar()};
  if (u == kH) return {{v}, HPoly::hbar()};
  if (v == kH) return {{u}, HPoly::hbar()};
  return {{u + v}, HPoly(1)};
}

inline APoly circ(const APoly& u, const APoly& v) {
  for (auto& [w, c] : u)
    if (w.size() != 1) throw NotDepthOne("circ: left operand not in the span of A");
  for (auto& [w, c] : v)
    if (w.size() != 1) throw NotDepthOne("circ: right operand not in the span of A");
  APoly r;
  for (auto& [wu, cu] : u)
    for (auto& [wv, cv] : v) {
      auto [w, c] = circ_letters(wu[0], wv[0]);
      apoly_add(r, w, cu * cv * c);
    }
  return r;
}

inline NCPoly circ(const NCPoly& u, const NCPoly& v) {
  return expand_A(circ(to_A_basis(u), to_A_basis(v)));
}

namespace detail {

// Quasi-shuffle recursion on A-words:
// (w u) * (w' v) = (w * w'v) u + (wu * w') v + (w * w') (u o v).
inline const APoly& qharm_words(const AWord& u, const AWord& v) {
  static std::map<std::pair<AWord, AWord>, APoly> cache;
  auto key = std::make_pair(u, v);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (u.empty()) return cache[key] = {{v, HPoly(1)}};
  if (v.empty()) return cache[key] = {{u, HPoly(1)}};

  AWord u1(u.begin(), u.end() - 1), v1(v.begin(), v.end() - 1);
  ALetter a = u.back(), b = v.back();
  APoly r;
  auto append = [&r](const APoly& part, const AWord& tail, const HPoly& c) {
    for (auto& [w, cw] : part) {
      AWord ww = w;
      ww.insert(ww.end(), tail.begin(), tail.end());
      apoly_add(r, ww, cw * c);
    }
  };
  append(qharm_words(u1, v), {a}, HPoly(1));
  append(qharm_words(u, v1), {b}, HPoly(1));
  auto [cw, cc] = circ_letters(a, b);
  append(qharm_words(u1, v1), cw, cc);
  return cache[key] = r;
}

// sh_h recursion on (a,b)-words: b pulls out of either factor, two trailing
// a's merge with an extra h term.
inline const NCPoly& qshuf_words(const Word& u, const Word& v) {
  static std::map<std::pair<Word, Word>, NCPoly> cache;
  auto key = std::make_pair(u, v);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (u.empty()) return cache[key] = NCPoly::monomial(v);
  if (v.empty()) return cache[key] = NCPoly::monomial(u);

  Word u1 = u.substr(0, u.size() - 1), v1 = v.substr(0, v.size() - 1);
  NCPoly r;
  if (u.back() == 'b') {
    r = qshuf_words(u1, v).append_letter('b');
  } else if (v.back() == 'b') {
    r = qshuf_words(u, v1).append_letter('b');
  } else {
    r = qshuf_words(u1, v) + qshuf_words(u, v1);
    r += hbar_times(qshuf_words(u1, v1));
    r = r.append_letter('a');
  }
  return cache[key] = r;
}

}  // namespace detail

inline APoly qharm(const APoly& w, const APoly& w2) {
  APoly r;
  for (auto& [wu, cu] : w)
    for (auto& [wv, cv] : w2) {
      const APoly& part = detail::qharm_words(wu, wv);
      HPoly c = cu * cv;
      for (auto& [m, cm] : part) apoly_add(r, m, c * cm);
    }
  return r;
}

// Harmonic product on C<A>.
inline NCPoly qharm(const NCPoly& w, const NCPoly& w2) {
  return expand_A(qharm(to_A_basis(w), to_A_basis(w2)));
}

// Shuffle product sh_h on all of H.
inline NCPoly qshuf(const NCPoly& w, const NCPoly& w2) {
  NCPoly r;
  for (auto& [wu, cu] : w.terms())
    for (auto& [wv, cv] : w2.terms()) r.add_scaled(detail::qshuf_words(wu, wv), cu * cv);
  return r;
}

inline NCPoly qproduct(const NCPoly& a, const NCPoly& b, Mode mode) {
  return mode == Mode::star ? qharm(a, b) : qshuf(a, b);
}

// psi^*(g_k) = b(-a)^k = (-1)^k g_k; psi^sh(g_k) = b(-a-h)^k; both fix hb.
inline APoly psi_letter(ALetter l, Mode mode) {
  if (l == kH) return {{{kH}, HPoly(1)}};
  APoly r;
  if (mode == Mode::star) {
    apoly_add(r, {l}, HPoly(l % 2 ? -1 : 1));
    return r;
  }
  // b(-a-h)^k = (-1)^k sum_{j=1}^{k} C(k,j) h^{k-j} g_j + (-1)^k h^{k-1} (hb)
  Rational sign(l % 2 ? -1 : 1);
  for (int j = 1; j <= l; ++j)
    apoly_add(r, {j}, HPoly::monomial(sign * binomial(l, j), l - j));
  apoly_add(r, {kH}, HPoly::monomial(sign, l - 1));
  return r;
}

// Anti-involutions on C<A>.
inline APoly psi_map(const AWord& w, Mode mode) {
  APoly r{{AWord{}, HPoly(1)}};
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = apoly_concat(r, psi_letter(*it, mode));
  return r;
}

inline APoly psi_map(const APoly& p, Mode mode) {
  APoly r;
  for (auto& [w, c] : p) {
    APoly t = apoly_scale(psi_map(w, mode), c);
    for (auto& [ww, cc] : t) apoly_add(r, ww, cc);
  }
  return r;
}

inline NCPoly psi_star(const NCPoly& p) { return expand_A(psi_map(to_A_basis(p), Mode::star)); }
inline NCPoly psi_sh(const NCPoly& p) { return expand_A(psi_map(to_A_basis(p), Mode::sh)); }

// Symmetrizer on the q side: sum over splits of prefix bullet_h psi(suffix).
inline const NCPoly& wS_q_word(const AWord& w, Mode mode) {
  static std::map<std::pair<AWord, int>, NCPoly> cache;
  auto key = std::make_pair(w, static_cast<int>(mode));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  NCPoly r;
  for (size_t i = 0; i <= w.size(); ++i) {
    AWord pre(w.begin(), w.begin() + i), suf(w.begin() + i, w.end());
    NCPoly p = expand_A(pre);
    NCPoly s = expand_A(psi_map(suf, mode));
    r += qproduct(p, s, mode);
  }
  return cache[key] = r;
}

inline NCPoly wS_q(const NCPoly& p, Mode mode) {
  NCPoly r;
  for (auto& [w, c] : to_A_basis(p)) r.add_scaled(wS_q_word(w, mode), c);
  return r;
}

// Projection onto the classical algebra: h -> 0, H -> 0, g_k -> z_k.
inline ClassicalPoly iota(const NCPoly& p) {
  ClassicalPoly r;
  for (auto& [w, c] : to_A_basis(p)) {
    if (aword_hbar_count(w) > 0) continue;
    Rational c0 = c.constant_term();
    if (c0.is_zero()) continue;
    r.add_term(index_to_zword(Index(w.begin(), w.end())), c0);
  }
  return r;
}

}  // namespace qsmzv

#endif
