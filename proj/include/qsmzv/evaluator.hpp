#ifndef QSMZV_EVALUATOR_HPP
#define QSMZV_EVALUATOR_HPP

#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "qsmzv/ewords.hpp"
#include "qsmzv/qproducts.hpp"

namespace qsmzv {

struct NotConvergentInput : Error {
  using Error::Error;
};
struct MissingSqrtQ : Error {
  using Error::Error;
};

inline Rational num_from_rational(const Rational& r, const Rational&) { return r; }
inline double num_from_rational(const Rational& r, const double&) { return r.to_double(); }
inline Rational num_pow(const Rational& b, long e) { return b.pow(e); }
inline double num_pow(double b, long e) { return std::pow(b, static_cast<double>(e)); }
inline double num_to_double(const Rational& r) { return r.to_double(); }
inline double num_to_double(double x) { return x; }

// Kahan-compensated accumulator in float mode, plain sum in exact mode.
template <typename Num>
struct Acc {
  Num s{0};
  void add(const Num& x) { s += x; }
  const Num& get() const { return s; }
};
template <>
struct Acc<double> {
  double s = 0, c = 0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  const double& get() const { return s; }
};

// Evaluation context: q in (0,1); sqrt_q only needed for the B-bounds.
template <typename Num>
struct QContext {
  Num q;
  std::optional<Num> sqrt_q;
  double tail_tol = 1e-12;

  explicit QContext(const Num& q_, std::optional<Num> sqrt_q_ = std::nullopt,
                    double tol = 1e-12)
      : q(q_), sqrt_q(sqrt_q_), tail_tol(tol) {
    if (!(Num(0) < q && q < Num(1))) throw Error("QContext: q must lie in (0,1)");
    if (sqrt_q && !(*sqrt_q * *sqrt_q == q))
      throw Error("QContext: sqrt_q^2 != q");
  }
  Num one_minus_q() const { return Num(1) - q; }
};

template <typename Num>
struct EvalResult {
  Num value{0};
  double tail_bound = 0;
  long M_used = 0;
};

// q-integer [m] = (1 - q^m)/(1 - q).
template <typename Num>
Num qint(long m, const QContext<Num>& ctx) {
  if (m < 1) throw Error("qint: m >= 1 required");
  return (Num(1) - num_pow(ctx.q, m)) / ctx.one_minus_q();
}

// F_q(m; hb) = 1-q,  F_q(m; g_k) = q^{km}/[m]^k.
template <typename Num>
Num F_letter(long m, ALetter u, const QContext<Num>& ctx) {
  if (m < 1) throw Error("F_letter: m >= 1 required");
  if (u == kH) return ctx.one_minus_q();
  return num_pow(ctx.q, static_cast<long>(u) * m) / num_pow(qint(m, ctx), u);
}

// F_q(m; e_k) = q^{(k-1)m}/[m]^k.
template <typename Num>
Num F_eword(long m, int k, const QContext<Num>& ctx) {
  if (m < 1 || k < 1) throw Error("F_eword: m, k >= 1 required");
  return num_pow(ctx.q, static_cast<long>(k - 1) * m) / num_pow(qint(m, ctx), k);
}

// Depth-one evaluation of a span-of-A element.
template <typename Num>
Num F_depth1(long m, const APoly& u, const QContext<Num>& ctx) {
  Num r{0};
  for (auto& [w, c] : u) {
    if (w.size() != 1) throw NotDepthOne("F_depth1: not in the span of A");
    Num coeff = [&] {
      if constexpr (std::is_same_v<Num, Rational>) return hbar_eval(c, ctx.q);
      else return c.eval_at(1.0 - ctx.q);
    }();
    r += coeff * F_letter(m, w[0], ctx);
  }
  return r;
}

// Extension to negative m through the anti-involution of the given mode.
template <typename Num>
Num F_ext(long m, ALetter u, Mode mode, const QContext<Num>& ctx) {
  if (m == 0) throw Error("F_ext: m != 0 required");
  if (m > 0) return F_letter(m, u, ctx);
  return F_depth1(-m, psi_letter(u, mode), ctx);
}

template <typename Num>
Num hpoly_at_q(const HPoly& c, const QContext<Num>& ctx) {
  if constexpr (std::is_same_v<Num, Rational>) return hbar_eval(c, ctx.q);
  else return c.eval_at(1.0 - ctx.q);
}

// Truncated multiple sum over 0 < m_1 < ... < m_r < M for a single A-word.
template <typename Num>
Num ZqM_word(const AWord& u, long M, const QContext<Num>& ctx) {
  if (M < 1) throw Error("ZqM: M >= 1 required");
  std::vector<Num> C(static_cast<size_t>(M), Num(1));
  for (size_t j = 0; j < u.size(); ++j) {
    std::vector<Num> D(static_cast<size_t>(M), Num(0));
    Acc<Num> run;
    for (long n = 1; n < M; ++n) {
      run.add(F_letter(n, u[j], ctx) * C[static_cast<size_t>(n - 1)]);
      D[static_cast<size_t>(n)] = run.get();
    }
    C = std::move(D);
  }
  return C[static_cast<size_t>(M - 1)];
}

template <typename Num>
Num ZqM(const NCPoly& w, long M, const QContext<Num>& ctx) {
  Num r{0};
  for (auto& [aw, c] : to_A_basis(w)) r += hpoly_at_q(c, ctx) * ZqM_word(aw, M, ctx);
  return r;
}

namespace detail {

// S_r(M) = sum_{n >= M} C(n-1, r-1) q^n, the chain-count tail majorant.
inline double tail_S(int r, long M, double q) {
  if (r == 0) return 0;
  double S = 0;
  for (int j = 1; j <= r; ++j) {
    double binom_d = 1;
    for (int i = 1; i <= j - 1; ++i) binom_d *= static_cast<double>(M - i) / i;
    S = (binom_d * std::pow(q, static_cast<double>(M)) + q * S) / (1 - q);
  }
  return S;
}

template <typename Num>
double zq_tail_bound(const APoly& a, long M, const QContext<Num>& ctx) {
  double q = num_to_double(ctx.q);
  double bound = 0;
  for (auto& [w, c] : a) {
    double k = std::abs(c.eval_at(1 - q));
    bound += k * tail_S(static_cast<int>(w.size()), M, q);
  }
  return bound;
}

}  // namespace detail

// Adaptive limit of Z_{q,M}: doubles M until the certified tail bound
// (F(m; g_k) <= q^m, F(m; hb) <= 1) drops below tail_tol.
template <typename Num>
EvalResult<Num> Zq(const NCPoly& w, const QContext<Num>& ctx) {
  if (!membership(w, Space::Hhat0))
    throw NotConvergentInput("Zq: input is not in the convergent submodule");
  APoly a = to_A_basis(w);
  EvalResult<Num> res;
  if (a.empty()) return res;
  long M = 16;
  const long cap = 1L << 22;
  while (M < cap && detail::zq_tail_bound(a, M, ctx) >= ctx.tail_tol) M *= 2;
  res.M_used = M;
  res.tail_bound = detail::zq_tail_bound(a, M, ctx);
  res.value = ZqM(w, M, ctx);
  return res;
}

// Truncated symmetric sums: Z_{q,M} after the symmetrizer.
template <typename Num>
Num ZSqM(const NCPoly& w, long M, Mode mode, const QContext<Num>& ctx) {
  return ZqM(wS_q(w, mode), M, ctx);
}

// Single ordered sum over Kontsevich's order 1 < 2 < ... < -2 < -1 with
// 0 < |m_i| < M; the independent route to Z^{S,*}_{q,M} on one A-word.
template <typename Num>
Num kontsevich_ZS_star(const AWord& u, long M, const QContext<Num>& ctx) {
  if (M < 1) throw Error("kontsevich_ZS_star: M >= 1 required");
  size_t r = u.size();
  Acc<Num> total;
  std::vector<long> vals;
  // prefix of positives (increasing), suffix of negatives (|.| decreasing)
  std::function<void(size_t, size_t, long, Num)> rec_neg = [&](size_t pos, size_t i, long prev_abs,
                                                               Num acc) {
    if (pos == r) {
      total.add(acc);
      return;
    }
    // remaining positions pos..r-1 get negatives with decreasing absolute value
    for (long a = prev_abs - 1; a >= static_cast<long>(r - pos); --a)
      rec_neg(pos + 1, i, a, acc * F_ext(-a, u[pos], Mode::star, ctx));
  };
  std::function<void(size_t, size_t, long, Num)> rec_pos = [&](size_t pos, size_t i, long prev,
                                                               Num acc) {
    if (pos == i) {
      rec_neg(pos, i, M, acc);
      return;
    }
    for (long m = prev + 1; m < M; ++m)
      rec_pos(pos + 1, i, m, acc * F_ext(m, u[pos], Mode::star, ctx));
  };
  for (size_t i = 0; i <= r; ++i) rec_pos(0, i, 0, Num(1));
  return total.get();
}

// Trilinear T_{q,M}; the third slot carries an implicit final variable, so an
// argument word of depth d uses r_3 = d + 1 chain variables.
template <typename Num>
Num T_qM_words(const AWord& u, const AWord& v, const AWord& w, long M, const QContext<Num>& ctx) {
  long r1 = static_cast<long>(u.size()), r2 = static_cast<long>(v.size()),
       r3 = static_cast<long>(w.size()) + 1;
  if (r1 == 0 && r2 == 0 && r3 == 1) return Num(1);
  long total_vars = r1 + r2 + r3;
  Acc<Num> total;
  std::vector<long> l(static_cast<size_t>(total_vars), 0);
  // flat layout: chain 1 = [0, r1), chain 2 = [r1, r1+r2), chain 3 = rest
  auto chain_begin = [&](int s) { return s == 1 ? 0L : s == 2 ? r1 : r1 + r2; };
  auto chain_len = [&](int s) { return s == 1 ? r1 : s == 2 ? r2 : r3; };

  auto evaluate = [&]() -> Num {
    Num prod(1);
    long cum = 0;
    for (long i = 0; i < r1; ++i) {
      cum += l[static_cast<size_t>(i)];
      prod *= F_ext(cum, u[static_cast<size_t>(i)], Mode::sh, ctx);
    }
    long cum2 = 0;
    for (long i = 0; i < r2; ++i) {
      cum2 += l[static_cast<size_t>(r1 + i)];
      prod *= F_ext(cum2, v[static_cast<size_t>(i)], Mode::sh, ctx);
    }
    long cum3 = cum + cum2;
    for (long i = 0; i + 1 < r3; ++i) {
      cum3 += l[static_cast<size_t>(r1 + r2 + i)];
      prod *= F_ext(cum3, w[static_cast<size_t>(i)], Mode::sh, ctx);
    }
    return prod;
  };

  for (int t = 1; t <= 3; ++t) {
    for (long j = 0; j < chain_len(t); ++j) {
      long neg_slot = chain_begin(t) + j;
      long positives = total_vars - 1;
      for (long d = 1; d < M; ++d) {
        l[static_cast<size_t>(neg_slot)] = -d;
        // compositions of d into `positives` positive parts in slot order
        std::vector<long> slots;
        for (long s = 0; s < total_vars; ++s)
          if (s != neg_slot) slots.push_back(s);
        if (positives == 0) continue;
        std::function<void(size_t, long)> rec = [&](size_t pos, long rem) {
          if (pos + 1 == slots.size()) {
            l[static_cast<size_t>(slots[pos])] = rem;
            total.add(evaluate());
            return;
          }
          for (long vpart = 1; vpart <= rem - static_cast<long>(slots.size() - pos - 1); ++vpart) {
            l[static_cast<size_t>(slots[pos])] = vpart;
            rec(pos + 1, rem - vpart);
          }
        };
        if (d >= positives) rec(0, d);
      }
    }
  }
  return total.get();
}

template <typename Num>
Num T_qM(const NCPoly& u, const NCPoly& v, const NCPoly& w, long M, const QContext<Num>& ctx) {
  if (M < 1) throw Error("T_qM: M >= 1 required");
  Num r{0};
  for (auto& [au, cu] : to_A_basis(u))
    for (auto& [av, cv] : to_A_basis(v))
      for (auto& [aw, cw] : to_A_basis(w))
        r += hpoly_at_q(cu, ctx) * hpoly_at_q(cv, ctx) * hpoly_at_q(cw, ctx) *
             T_qM_words(au, av, aw, M, ctx);
  return r;
}

// Coefficients of t^m, 0 <= m < Tmax, of L_q(w)(t).
template <typename Num>
std::vector<Num> Lq_tseries(const NCPoly& w, long Tmax, const QContext<Num>& ctx) {
  if (Tmax < 1) throw Error("Lq_tseries: Tmax >= 1 required");
  std::vector<Num> out(static_cast<size_t>(Tmax), Num(0));
  for (auto& [aw, c] : to_A_basis(w)) {
    Num coeff = hpoly_at_q(c, ctx);
    if (aw.empty()) {
      out[0] += coeff;
      continue;
    }
    // C_{r-1}(n): chains below the top variable m_r
    std::vector<Num> C(static_cast<size_t>(Tmax), Num(1));
    for (size_t j = 0; j + 1 < aw.size(); ++j) {
      std::vector<Num> D(static_cast<size_t>(Tmax), Num(0));
      Acc<Num> run;
      for (long n = 1; n < Tmax; ++n) {
        run.add(F_letter(n, aw[j], ctx) * C[static_cast<size_t>(n - 1)]);
        D[static_cast<size_t>(n)] = run.get();
      }
      C = std::move(D);
    }
    for (long m = 1; m < Tmax; ++m)
      out[static_cast<size_t>(m)] +=
          coeff * F_letter(m, aw.back(), ctx) * C[static_cast<size_t>(m - 1)];
  }
  return out;
}

// Partial sum of B_q(alpha; beta) over 1 <= l_j < M (a lower bound of B_q and
// an upper bound for the dominated truncated sums).
template <typename Num>
Num B_bound(const std::vector<int>& alphas, const std::vector<int>& betas, long M,
            const QContext<Num>& ctx) {
  if (!ctx.sqrt_q) throw MissingSqrtQ("B_bound: context lacks sqrt_q");
  if (alphas.size() != betas.size() || alphas.empty())
    throw Error("B_bound: alpha/beta must have equal positive length");
  size_t r = alphas.size();
  Num sq = *ctx.sqrt_q;
  // T_j(n): partial sums over l_1..l_j with l_1+...+l_j = n
  std::vector<Num> T{Num(1)};  // T_0 concentrated at n = 0
  for (size_t j = 0; j < r; ++j) {
    long nmax = static_cast<long>(j + 1) * (M - 1);
    std::vector<Num> U(static_cast<size_t>(nmax) + 1, Num(0));
    for (long n = 1; n <= nmax; ++n) {
      Acc<Num> acc;
      for (long l = 1; l < M && l <= n; ++l) {
        if (n - l >= static_cast<long>(T.size())) continue;
        const Num& prev = T[static_cast<size_t>(n - l)];
        Num factor = num_from_rational(binomial(l, alphas[j]), ctx.q) *
                     num_pow(ctx.one_minus_q(), alphas[j]) * num_pow(sq, l);
        acc.add(prev * factor);
      }
      U[static_cast<size_t>(n)] = acc.get() / num_pow(Num(n), betas[j] + 1);
    }
    T = std::move(U);
  }
  Acc<Num> total;
  for (size_t n = 1; n < T.size(); ++n) total.add(T[n]);
  return total.get();
}

// q-analogues of symmetric MZVs as convergent limits.
template <typename Num>
EvalResult<Num> ZqS_star(const Index& k, const QContext<Num>& ctx) {
  return Zq(wS_q(g_word(k), Mode::star), ctx);
}
template <typename Num>
EvalResult<Num> ZqS_sh(const Index& k, const QContext<Num>& ctx) {
  return Zq(wS_q(E_index(k), Mode::sh), ctx);
}

struct LimitRow {
  double q;
  double value;
  std::optional<double> normalized;  // value / ((1-q) (-log(1-q))^r), n-elements only
};

inline std::vector<LimitRow> limit_probe(const NCPoly& w, const std::vector<double>& grid) {
  bool in_n = false;
  int r_blocks = 0;
  try {
    in_n = membership(w, Space::n);
    for (auto& [aw, c] : to_A_basis(w)) {
      int g = 0;
      for (ALetter l : aw) g += l != kH;
      r_blocks = std::max(r_blocks, g);
    }
  } catch (const NotInSubalgebra&) {
    in_n = false;
  }
  std::vector<LimitRow> rows;
  for (double q : grid) {
    QContext<double> ctx(q);
    auto res = Zq(w, ctx);
    LimitRow row{q, res.value, std::nullopt};
    if (in_n) {
      double denom = (1 - q) * std::pow(-std::log(1 - q), r_blocks);
      row.normalized = res.value / denom;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qsmzv

#endif
