#ifndef QSMZV_SERIES_HPP
#define QSMZV_SERIES_HPP

#include <vector>

#include "qsmzv/ewords.hpp"
#include "qsmzv/qproducts.hpp"

namespace qsmzv {

struct NonzeroConstantTerm : Error {
  using Error::Error;
};
struct NonInvertibleConstant : Error {
  using Error::Error;
};
struct BadU : Error {
  using Error::Error;
};

// Truncated power series in one commuting variable with NCPoly coefficients;
// all arithmetic truncates at `order` (degrees < order).
class Series1 {
public:
  explicit Series1(int order) : order_(order), c_(static_cast<size_t>(order)) {
    if (order < 1) throw Error("Series1: order >= 1 required");
  }
  static Series1 constant(const NCPoly& p, int order) {
    Series1 s(order);
    s.c_[0] = p;
    return s;
  }
  static Series1 one(int order) { return constant(NCPoly::one(), order); }
  static Series1 var(int order) {
    Series1 s(order);
    if (order > 1) s.c_[1] = NCPoly::one();
    return s;
  }

  int order() const { return order_; }
  const NCPoly& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
  void set_coeff(int i, const NCPoly& p) { c_[static_cast<size_t>(i)] = p; }
  bool is_zero() const {
    for (auto& p : c_)
      if (!p.is_zero()) return false;
    return true;
  }

  Series1& operator+=(const Series1& o) {
    check(o);
    for (int i = 0; i < order_; ++i) c_[static_cast<size_t>(i)] += o.c_[static_cast<size_t>(i)];
    return *this;
  }
  Series1& operator-=(const Series1& o) {
    check(o);
    for (int i = 0; i < order_; ++i) c_[static_cast<size_t>(i)] -= o.c_[static_cast<size_t>(i)];
    return *this;
  }
  friend Series1 operator+(Series1 a, const Series1& b) { return a += b; }
  friend Series1 operator-(Series1 a, const Series1& b) { return a -= b; }
  Series1 operator-() const {
    Series1 r(order_);
    for (int i = 0; i < order_; ++i) r.c_[static_cast<size_t>(i)] = -c_[static_cast<size_t>(i)];
    return r;
  }

  Series1 scale(const HPoly& c) const {
    Series1 r(order_);
    for (int i = 0; i < order_; ++i) r.c_[static_cast<size_t>(i)] = c * c_[static_cast<size_t>(i)];
    return r;
  }
  Series1 lmul(const NCPoly& p) const {  // p * this
    Series1 r(order_);
    for (int i = 0; i < order_; ++i) r.c_[static_cast<size_t>(i)] = p * c_[static_cast<size_t>(i)];
    return r;
  }
  Series1 rmul(const NCPoly& p) const {  // this * p
    Series1 r(order_);
    for (int i = 0; i < order_; ++i) r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)] * p;
    return r;
  }

  template <typename Op>
  static Series1 combine(const Series1& a, const Series1& b, Op op) {
    a.check(b);
    Series1 r(a.order_);
    for (int i = 0; i < a.order_; ++i)
      for (int j = 0; i + j < a.order_; ++j) {
        if (a.coeff(i).is_zero() || b.coeff(j).is_zero()) continue;
        r.c_[static_cast<size_t>(i + j)] += op(a.coeff(i), b.coeff(j));
      }
    return r;
  }
  friend Series1 operator*(const Series1& a, const Series1& b) {
    return combine(a, b, [](const NCPoly& x, const NCPoly& y) { return x * y; });
  }

  // Multiplicative inverse; the constant term must be a nonzero rational.
  Series1 inverse() const {
    HPoly c0 = scalar_constant(c_[0]);
    Rational inv0 = Rational(1) / c0.constant_term();
    Series1 g(order_);
    g.c_[0] = NCPoly(HPoly(inv0));
    for (int n = 1; n < order_; ++n) {
      NCPoly s;
      for (int k = 1; k <= n; ++k) s += c_[static_cast<size_t>(k)] * g.c_[static_cast<size_t>(n - k)];
      g.c_[static_cast<size_t>(n)] = HPoly(-inv0) * s;
    }
    return g;
  }

  Series1 subst_neg() const {  // X -> -X
    Series1 r(order_);
    for (int i = 0; i < order_; ++i) {
      r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
      if (i % 2) r.c_[static_cast<size_t>(i)] = -r.c_[static_cast<size_t>(i)];
    }
    return r;
  }

  Series1 mul_var(int k = 1) const {  // X^k * this
    Series1 r(order_);
    for (int i = 0; i + k < order_; ++i) r.c_[static_cast<size_t>(i + k)] = c_[static_cast<size_t>(i)];
    return r;
  }
  Series1 div_var(int k = 1) const {  // this / X^k; low-order coefficients must vanish
    for (int i = 0; i < k && i < order_; ++i)
      if (!c_[static_cast<size_t>(i)].is_zero()) throw Error("Series1: not divisible by X");
    Series1 r(order_);
    for (int i = k; i < order_; ++i) r.c_[static_cast<size_t>(i - k)] = c_[static_cast<size_t>(i)];
    return r;
  }

  template <typename Fn>
  Series1 map(Fn fn) const {
    Series1 r(order_);
    for (int i = 0; i < order_; ++i) r.c_[static_cast<size_t>(i)] = fn(c_[static_cast<size_t>(i)]);
    return r;
  }

  Series1 truncate_to(int new_order) const {
    Series1 r(new_order);
    for (int i = 0; i < new_order && i < order_; ++i) r.c_[static_cast<size_t>(i)] = coeff(i);
    return r;
  }

  friend bool operator==(const Series1& a, const Series1& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

private:
  int order_;
  std::vector<NCPoly> c_;
  void check(const Series1& o) const {
    if (order_ != o.order_) throw Error("Series1: order mismatch");
  }
  static HPoly scalar_constant(const NCPoly& p) {
    for (auto& [w, c] : p.terms())
      if (!w.empty()) throw NonInvertibleConstant("series constant term is not scalar");
    HPoly c0 = p.coeff(Word());
    if (!c0.is_constant() || c0.constant_term().is_zero())
      throw NonInvertibleConstant("series constant term is not a unit of Q[h]");
    return c0;
  }
};

// Two commuting variables, triangular storage by total degree < order.
class Series2 {
public:
  explicit Series2(int order) : order_(order) {
    if (order < 1) throw Error("Series2: order >= 1 required");
    c_.resize(static_cast<size_t>(order));
    for (int i = 0; i < order; ++i) c_[static_cast<size_t>(i)].resize(static_cast<size_t>(order - i));
  }
  static Series2 constant(const NCPoly& p, int order) {
    Series2 s(order);
    s.c_[0][0] = p;
    return s;
  }
  static Series2 one(int order) { return constant(NCPoly::one(), order); }
  static Series2 var(int which, int order) {
    Series2 s(order);
    if (order > 1) {
      if (which == 0) s.c_[1][0] = NCPoly::one();
      else s.c_[0][1] = NCPoly::one();
    }
    return s;
  }
  static Series2 embed(const Series1& f, int which) {
    Series2 s(f.order());
    for (int i = 0; i < f.order(); ++i) {
      if (which == 0) s.c_[static_cast<size_t>(i)][0] = f.coeff(i);
      else s.c_[0][static_cast<size_t>(i)] = f.coeff(i);
    }
    return s;
  }
  // f(X) with X -> X1 + X2
  static Series2 subst_sum(const Series1& f) {
    Series2 s(f.order());
    for (int m = 0; m < f.order(); ++m) {
      const NCPoly& cm = f.coeff(m);
      if (cm.is_zero()) continue;
      for (int j = 0; j <= m; ++j) {
        HPoly b(binomial(m, j));
        s.c_[static_cast<size_t>(m - j)][static_cast<size_t>(j)] += b * cm;
      }
    }
    return s;
  }

  int order() const { return order_; }
  const NCPoly& coeff(int i, int j) const { return c_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
  NCPoly& at(int i, int j) { return c_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
  bool is_zero() const {
    for (auto& row : c_)
      for (auto& p : row)
        if (!p.is_zero()) return false;
    return true;
  }

  Series2& operator+=(const Series2& o) {
    check(o);
    for (int i = 0; i < order_; ++i)
      for (int j = 0; i + j < order_; ++j) at(i, j) += o.coeff(i, j);
    return *this;
  }
  Series2& operator-=(const Series2& o) {
    check(o);
    for (int i = 0; i < order_; ++i)
      for (int j = 0; i + j < order_; ++j) at(i, j) -= o.coeff(i, j);
    return *this;
  }
  friend Series2 operator+(Series2 a, const Series2& b) { return a += b; }
  friend Series2 operator-(Series2 a, const Series2& b) { return a -= b; }
  Series2 operator-() const {
    Series2 r(order_);
    for (int i = 0; i < order_; ++i)
      for (int j = 0; i + j < order_; ++j) r.at(i, j) = -coeff(i, j);
    return r;
  }

  Series2 scale(const HPoly& c) const {
    Series2 r(order_);
    for (int i = 0; i < order_; ++i)
      for (int j = 0; i + j < order_; ++j) r.at(i, j) = c * coeff(i, j);
    return r;
  }
  Series2 lmul(const NCPoly& p) const {
    Series2 r(order_);
    for (int i = 0; i < order_; ++i)
      for (int j = 0; i + j < order_; ++j) r.at(i, j) = p * coeff(i, j);
    return r;
  }
  Series2 rmul(const NCPoly& p) const {
    Series2 r(order_);
    for (int i = 0; i < order_; ++i)
      for (int j = 0; i + j < order_; ++j) r.at(i, j) = coeff(i, j) * p;
    return r;
  }

  template <typename Op>
  static Series2 combine(const Series2& a, const Series2& b, Op op) {
    a.check(b);
    Series2 r(a.order_);
    for (int i1 = 0; i1 < a.order_; ++i1)
      for (int j1 = 0; i1 + j1 < a.order_; ++j1) {
        if (a.coeff(i1, j1).is_zero()) continue;
        for (int i2 = 0; i1 + j1 + i2 < a.order_; ++i2)
          for (int j2 = 0; i1 + j1 + i2 + j2 < a.order_; ++j2) {
            if (b.coeff(i2, j2).is_zero()) continue;
            r.at(i1 + i2, j1 + j2) += op(a.coeff(i1, j1), b.coeff(i2, j2));
          }
      }
    return r;
  }
  friend Series2 operator*(const Series2& a, const Series2& b) {
    return combine(a, b, [](const NCPoly& x, const NCPoly& y) { return x * y; });
  }

  Series2 inverse() const {
    // recurse by total degree; constant term must be a nonzero rational
    const NCPoly& c0 = coeff(0, 0);
    for (auto& [w, c] : c0.terms())
      if (!w.empty()) throw NonInvertibleConstant("series constant term is not scalar");
    HPoly h0 = c0.coeff(Word());
    if (!h0.is_constant() || h0.constant_term().is_zero())
      throw NonInvertibleConstant("series constant term is not a unit of Q[h]");
    Rational inv0 = Rational(1) / h0.constant_term();
    Series2 g(order_);
    g.at(0, 0) = NCPoly(HPoly(inv0));
    for (int d = 1; d < order_; ++d)
      for (int i = 0; i <= d; ++i) {
        int j = d - i;
        NCPoly s;
        for (int i2 = 0; i2 <= i; ++i2)
          for (int j2 = 0; j2 <= j; ++j2) {
            if (i2 + j2 == 0) continue;
            s += coeff(i2, j2) * g.coeff(i - i2, j - j2);
          }
        g.at(i, j) = HPoly(-inv0) * s;
      }
    return g;
  }

  Series2 truncate_to(int new_order) const {
    Series2 r(new_order);
    for (int i = 0; i < new_order && i < order_; ++i)
      for (int j = 0; i + j < new_order && i + j < order_; ++j) r.at(i, j) = coeff(i, j);
    return r;
  }

  Series2 div_var(int which) const {
    Series2 r(order_);
    for (int i = 0; i < order_; ++i)
      for (int j = 0; i + j < order_; ++j) {
        const NCPoly& p = coeff(i, j);
        if (p.is_zero()) continue;
        if (which == 0) {
          if (i == 0) throw Error("Series2: not divisible by first variable");
          r.at(i - 1, j) = p;
        } else {
          if (j == 0) throw Error("Series2: not divisible by second variable");
          r.at(i, j - 1) = p;
        }
      }
    return r;
  }

  friend bool operator==(const Series2& a, const Series2& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

private:
  int order_;
  std::vector<std::vector<NCPoly>> c_;
  void check(const Series2& o) const {
    if (order_ != o.order_) throw Error("Series2: order mismatch");
  }
};

inline Series1 sh_series(const Series1& a, const Series1& b) {
  return Series1::combine(a, b, [](const NCPoly& x, const NCPoly& y) { return qshuf(x, y); });
}
inline Series2 sh_series(const Series2& a, const Series2& b) {
  return Series2::combine(a, b, [](const NCPoly& x, const NCPoly& y) { return qshuf(x, y); });
}

// R(X) = (e^{hbX} - 1)/(hb) = sum_{n>=1} X^n/n! (e1-g1)^{n-1}.
inline Series1 R_series(int N) {
  Series1 r(N);
  NCPoly hpow = NCPoly::one();
  for (int n = 1; n < N; ++n) {
    r.set_coeff(n, HPoly(Rational(1) / factorial(n)) * hpow);
    hpow *= hb_word();
  }
  return r;
}

// e^{hbX}
inline Series1 exp_hb_series(int N) {
  Series1 r(N);
  NCPoly hpow = NCPoly::one();
  for (int n = 0; n < N; ++n) {
    r.set_coeff(n, HPoly(Rational(1) / factorial(n)) * hpow);
    hpow *= hb_word();
  }
  return r;
}

// exp with respect to a bullet_h product; f must have zero constant term.
inline Series1 exp_prod(const Series1& f, Mode mode, int N) {
  if (!f.coeff(0).is_zero()) throw NonzeroConstantTerm("exp_prod: f(0) != 0");
  Series1 acc = Series1::one(N);
  Series1 power = Series1::one(N);
  for (int n = 1; n < N; ++n) {
    power = Series1::combine(power, f, [mode](const NCPoly& x, const NCPoly& y) {
      return qproduct(x, y, mode);
    });
    power = power.scale(HPoly(Rational(1, n)));
    if (power.is_zero()) break;
    acc += power;
  }
  return acc;
}

inline Series1 geom_inverse(const Series1& f) { return f.inverse(); }
inline Series2 geom_inverse(const Series2& f) { return f.inverse(); }

// E(X) = (1 - R(X) g_1)^{-1} R(X)/X.
inline Series1 E_series(int N) {
  Series1 Rp = R_series(N + 1);
  Series1 R(N), RdivX(N);
  for (int n = 0; n < N; ++n) {
    R.set_coeff(n, Rp.coeff(n));
    RdivX.set_coeff(n, Rp.coeff(n + 1));
  }
  Series1 core = (Series1::one(N) - R.rmul(g_word(1))).inverse();
  return core * RdivX;
}

namespace detail {

inline void require_b_only(const Series1& U) {
  for (int i = 0; i < U.order(); ++i)
    for (auto& [w, c] : U.coeff(i).terms())
      for (char l : w)
        if (l != 'b') throw BadU("rho_U: U coefficients must be words of b only");
  if (!U.coeff(0).is_zero()) throw BadU("rho_U: U must have zero constant term");
}

}  // namespace detail

// Images of the letters under rho_U; the map extends multiplicatively.
inline Series1 rho_image_a(const Series1& U, int N) {
  Series1 inv = (Series1::one(N) - U.rmul(g_word(1))).inverse();
  Series1 mid = Series1::one(N) + U.lmul(hb_word());
  return (inv * mid).rmul(NCPoly::monomial("a"));
}
inline Series1 rho_image_b(const Series1& U, int N) {
  Series1 inv = (Series1::one(N) - U.rmul(g_word(1))).inverse();
  return inv.rmul(NCPoly::monomial("b")) * (Series1::one(N) - U.rmul(g_word(1)));
}

// Multiplicative extension over precomputed letter images.
inline Series1 rho_from_images(const NCPoly& w, const Series1& img_a, const Series1& img_b,
                               int N) {
  Series1 out(N);
  for (auto& [word, c] : w.terms()) {
    Series1 prod = Series1::one(N);
    for (char l : word) prod = prod * (l == 'a' ? img_a : img_b);
    out += prod.scale(c);
  }
  return out;
}

// rho_U(w) through the homomorphism property and the letter images.
inline Series1 rho_U(const NCPoly& w, const Series1& U, int N) {
  detail::require_b_only(U);
  return rho_from_images(w, rho_image_a(U, N), rho_image_b(U, N), N);
}

// rho_U(w) straight from the definition; the cross-route for the catalog.
inline Series1 rho_U_definition(const NCPoly& w, const Series1& U, int N) {
  detail::require_b_only(U);
  Series1 inv = (Series1::one(N) - U.rmul(g_word(1))).inverse();
  return sh_series(inv, Series1::constant(w, N)) * (Series1::one(N) - U.rmul(g_word(1)));
}

}  // namespace qsmzv

#endif
