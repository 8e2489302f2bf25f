#ifndef QSMZV_DEPTH2_HPP
#define QSMZV_DEPTH2_HPP

#include <map>

#include "qsmzv/evaluator.hpp"
#include "qsmzv/report.hpp"
#include "qsmzv/io.hpp"

namespace qsmzv {

struct NotOdd : Error {
  using Error::Error;
};
struct DepthTooLarge : Error {
  using Error::Error;
};

namespace detail {

// Small dense polynomials in two commuting variables over Q.
class BivarPoly {
public:
  void add_term(int i, int j, const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(i, j);
    auto [it, ins] = c_.emplace(key, c);
    if (!ins) {
      it->second += c;
      if (it->second.is_zero()) c_.erase(it);
    }
  }
  Rational coeff(int i, int j) const {
    auto it = c_.find({i, j});
    return it == c_.end() ? Rational(0) : it->second;
  }
  BivarPoly& operator+=(const BivarPoly& o) {
    for (auto& [k, c] : o.c_) add_term(k.first, k.second, c);
    return *this;
  }
  BivarPoly operator*(const BivarPoly& o) const {
    BivarPoly r;
    for (auto& [k1, c1] : c_)
      for (auto& [k2, c2] : o.c_) r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
  }
  BivarPoly scale(const Rational& c) const {
    BivarPoly r;
    for (auto& [k, cc] : c_) r.add_term(k.first, k.second, cc * c);
    return r;
  }
  // P(u(X,Y), v(X,Y)) for linear forms u, v
  BivarPoly substitute(const BivarPoly& u, const BivarPoly& v) const {
    BivarPoly r;
    std::map<std::pair<int, int>, BivarPoly> pow_cache;
    std::function<BivarPoly(const BivarPoly&, int)> power = [](const BivarPoly& b, int e) {
      BivarPoly acc;
      acc.add_term(0, 0, Rational(1));
      for (int i = 0; i < e; ++i) acc = acc * b;
      return acc;
    };
    for (auto& [k, c] : c_) r += (power(u, k.first) * power(v, k.second)).scale(c);
    return r;
  }
  static BivarPoly linear(const Rational& x, const Rational& y) {
    BivarPoly r;
    r.add_term(1, 0, x);
    r.add_term(0, 1, y);
    return r;
  }

private:
  std::map<std::pair<int, int>, Rational> c_;
};

}  // namespace detail

// Solve the depth-two reduction for odd weight k: returns c_m with
// Z_q(g_m g_{k-m}) congruent to c_m Z_q(g_k). The generating-polynomial
// manipulation resolves D(X,Y) = -1/2 (Z(X,Y) + Z(X-Y,X) + Z(-Y,X-Y)); the
// harmonic and shuffle relation families are then asserted on the result.
inline std::map<int, Rational> depth2_solve(int k) {
  if (k < 3 || k % 2 == 0) throw NotOdd("depth2_solve: k must be odd and >= 3");
  detail::BivarPoly Z;
  for (int i = 0; i + 1 <= k - 1; ++i) Z.add_term(i, k - 2 - i, Rational(1));

  detail::BivarPoly X = detail::BivarPoly::linear(1, 0);
  detail::BivarPoly Y = detail::BivarPoly::linear(0, 1);
  detail::BivarPoly D = Z;
  D += Z.substitute(detail::BivarPoly::linear(1, -1), X);
  D += Z.substitute(detail::BivarPoly::linear(0, -1), detail::BivarPoly::linear(1, -1));
  D = D.scale(Rational(-1, 2));

  std::map<int, Rational> c;
  for (int m = 1; m < k; ++m) c[m] = D.coeff(m - 1, k - m - 1);

  // harmonic family: Z_m + Z_{k-m} + Z_q(g_k) = 0
  for (int m = 1; m < k; ++m)
    if (!(c[m] + c[k - m] + Rational(1)).is_zero())
      throw Error("depth2_solve: harmonic relation violated");
  // shuffle family: sum_j (C(k-j-1,k-m-1) + C(k-j-1,m-1)) Z_j = 0
  for (int m = 1; m < k; ++m) {
    Rational s(0);
    for (int j = 1; j < k; ++j)
      s += (binomial(k - j - 1, k - m - 1) + binomial(k - j - 1, m - 1)) * c[j];
    if (!s.is_zero()) throw Error("depth2_solve: shuffle relation violated");
  }
  return c;
}

// qSMZV of depth <= 2 reduced to a rational multiple of Z_q(g_w), w = wt(k),
// in the quotient by N_q + P_q; the class is zero for even weight. The
// reduction runs through the symmetrizer and the depth-two solver rather
// than the closed form.
inline Rational qsmzv_depth2(int k1, int k2) {
  int k = k1 + k2;
  NCPoly w = wS_q(g_word(Index{k1, k2}), Mode::star);
  auto terms = to_g_basis(w);
  Rational result(0);

  if (k % 2) {
    auto c = depth2_solve(k);
    for (auto& [l, coeff] : terms) {
      if (!coeff.is_constant()) throw Error("qsmzv_depth2: non-constant coefficient");
      Rational r = coeff.constant_term();
      if (depth(l) == 1) result += r;  // multiple of Z_q(g_k) itself
      else if (depth(l) == 2) result += r * c[l[0]];
      else throw Error("qsmzv_depth2: unexpected depth");
    }
    return result;
  }

  // even weight: certify vanishing through harmonic products of even zetas
  std::map<std::pair<int, int>, Rational> pair_coeff;
  for (auto& [l, coeff] : terms) {
    if (!coeff.is_constant()) throw Error("qsmzv_depth2: non-constant coefficient");
    Rational r = coeff.constant_term();
    if (depth(l) == 1) continue;  // Z_q(g_even) generates P_q
    if (depth(l) != 2) throw Error("qsmzv_depth2: unexpected depth");
    pair_coeff[{l[0], l[1]}] = r;
  }
  for (auto& [ab, r] : pair_coeff) {
    auto [a, b] = ab;
    if (a % 2 || b % 2)
      throw Error("qsmzv_depth2: cannot certify pair with odd components");
    if (a != b && (!pair_coeff.count({b, a}) || !(pair_coeff[{b, a}] == r)))
      throw Error("qsmzv_depth2: pair coefficients not symmetric");
  }
  return Rational(0);
}

// Depth-one qSMZVs vanish: derived from the symmetrizer, not hard-coded.
inline Rational qsmzv_depth1(int k) {
  NCPoly w = wS_q(g_word(Index{k}), Mode::star);
  if (w.is_zero()) return Rational(0);  // odd k: exact cancellation
  for (auto& [l, coeff] : to_g_basis(w)) {
    if (depth(l) != 1 || l[0] % 2) throw Error("qsmzv_depth1: unexpected term");
  }
  return Rational(0);  // even k: multiple of a P_q generator
}

inline Rational qsmzv_reduced(const Index& l) {
  if (depth(l) == 1) return qsmzv_depth1(l[0]);
  if (depth(l) == 2) return qsmzv_depth2(l[0], l[1]);
  throw DepthTooLarge("qSMZV reduction needs depth <= 2, got " + index_to_string(l));
}

namespace detail {

inline std::vector<std::vector<int>> weak_compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (parts == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  for (int first = 0; first <= total; ++first)
    for (auto& rest : weak_compositions(total - first, parts - 1)) {
      std::vector<int> v{first};
      v.insert(v.end(), rest.begin(), rest.end());
      out.push_back(v);
    }
  return out;
}

}  // namespace detail

// One instance of the weight-raising identity with all terms reduced at depth
// <= 2; instances with deeper duals are reported as skipped.
inline Report ohno_depth2_check(const Index& k, int m) {
  Report rep;
  rep.suite = "ohno-depth2";
  rep.params["k"] = index_to_string(k);
  rep.params["m"] = std::to_string(m);
  std::string cid = "k=" + index_to_string(k) + ",m=" + std::to_string(m);
  if (k.empty() || !admissible(k)) {
    rep.add(cid, Status::skip, "", "", "index must be non-empty admissible");
    return rep;
  }
  Index kv = hoffman_dual(k);
  int r = depth(k), s = depth(kv);

  std::vector<Index> lhs_terms, rhs_terms;
  for (auto& e : detail::weak_compositions(m, r)) {
    Index t = k;
    for (int i = 0; i < r; ++i) t[static_cast<size_t>(i)] += e[static_cast<size_t>(i)];
    lhs_terms.push_back(t);
  }
  for (auto& e : detail::weak_compositions(m, s)) {
    Index t = kv;
    for (int i = 0; i < s; ++i) t[static_cast<size_t>(i)] += e[static_cast<size_t>(i)];
    rhs_terms.push_back(hoffman_dual(t));
  }
  for (auto& t : lhs_terms)
    if (depth(t) > 2) {
      rep.add(cid, Status::skip, "", "", "lhs term exceeds depth 2: " + index_to_string(t));
      return rep;
    }
  for (auto& t : rhs_terms)
    if (depth(t) > 2) {
      rep.add(cid, Status::skip, "", "", "rhs term exceeds depth 2: " + index_to_string(t));
      return rep;
    }

  Rational lhs(0), rhs(0);
  for (auto& t : lhs_terms) lhs += qsmzv_reduced(t);
  for (auto& t : rhs_terms) rhs += qsmzv_reduced(t);
  rep.add_check(cid, lhs == rhs, lhs.to_string() + "*Zq(g_w)", rhs.to_string() + "*Zq(g_w)");
  return rep;
}

}  // namespace qsmzv

#endif
