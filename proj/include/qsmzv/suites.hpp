#ifndef QSMZV_SUITES_HPP
#define QSMZV_SUITES_HPP

#include <cmath>
#include <random>
#include <string>

#include "qsmzv/depth2.hpp"
#include "qsmzv/identities.hpp"
#include "qsmzv/parser.hpp"

namespace qsmzv {

struct UnknownSuite : Error {
  using Error::Error;
};

using SuiteParams = std::map<std::string, std::string>;

namespace detail {

inline long get_long(const SuiteParams& p, const std::string& key, long dflt) {
  auto it = p.find(key);
  return it == p.end() ? dflt : std::stol(it->second);
}
inline Rational get_rational(const SuiteParams& p, const std::string& key,
                             const Rational& dflt) {
  auto it = p.find(key);
  return it == p.end() ? dflt : Rational::parse(it->second);
}
inline std::string get_str(const SuiteParams& p, const std::string& key,
                           const std::string& dflt) {
  auto it = p.find(key);
  return it == p.end() ? dflt : it->second;
}
inline std::vector<double> get_grid(const SuiteParams& p, const std::string& key,
                                    const std::string& dflt) {
  std::string s = get_str(p, key, dflt);
  std::vector<double> g;
  size_t i = 0;
  while (i < s.size()) {
    size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    g.push_back(std::stod(s.substr(i, j - i)));
    i = j + 1;
  }
  return g;
}

inline std::string aword_id(const AWord& w) { return aword_to_string(w); }

// Chains ending exactly at t; index 0 carries the empty chain.
template <typename Num>
std::vector<Num> chains_ending_at(const AWord& u, long M, const QContext<Num>& ctx) {
  std::vector<Num> E(static_cast<size_t>(M), Num(0));
  if (u.empty()) {
    E[0] = Num(1);
    return E;
  }
  std::vector<Num> C(static_cast<size_t>(M), Num(1));
  for (size_t j = 0; j + 1 < u.size(); ++j) {
    std::vector<Num> D(static_cast<size_t>(M), Num(0));
    for (long n = 1; n < M; ++n)
      D[static_cast<size_t>(n)] = D[static_cast<size_t>(n - 1)] +
                                  F_letter(n, u[j], ctx) * C[static_cast<size_t>(n - 1)];
    C = std::move(D);
  }
  for (long t = 1; t < M; ++t)
    E[static_cast<size_t>(t)] = F_letter(t, u.back(), ctx) * C[static_cast<size_t>(t - 1)];
  return E;
}

// Right-hand side of the truncated shuffle formula: double sum with the
// junction constraint m_r + n_s < M.
template <typename Num>
Num zqm_shuffle_direct(const AWord& u, const AWord& v, long M, const QContext<Num>& ctx) {
  auto Eu = chains_ending_at(u, M, ctx), Ev = chains_ending_at(v, M, ctx);
  Acc<Num> total;
  for (long s = 0; s < M; ++s)
    for (long t = 0; s + t < M; ++t) total.add(Eu[static_cast<size_t>(s)] * Ev[static_cast<size_t>(t)]);
  return total.get();
}

inline NCPoly random_ncpoly(std::mt19937_64& rng, const std::vector<AWord>& pool) {
  std::uniform_int_distribution<int> nterms(1, 3), num(-3, 3), den(1, 2), hdeg(0, 1);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  NCPoly p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    int a = num(rng);
    if (a == 0) a = 1;
    Rational c(a, den(rng));
    p += expand_A(pool[pick(rng)], HPoly::monomial(c, hdeg(rng)));
  }
  return p;
}

}  // namespace detail

// ---- individual suites -----------------------------------------------------

inline Report suite_q_truncated_ds(const SuiteParams& sp) {
  Report rep;
  rep.suite = "q-truncated-ds";
  long wt_max = detail::get_long(sp, "wt_max", 5);
  long dep_max = detail::get_long(sp, "dep_max", 3);
  long M_max = detail::get_long(sp, "M", 6);
  Rational q = detail::get_rational(sp, "q", Rational(1, 2));
  rep.params = {{"wt_max", std::to_string(wt_max)},
                {"dep_max", std::to_string(dep_max)},
                {"M", std::to_string(M_max)},
                {"q", q.to_string()}};
  QContext<Rational> ctx(q);
  auto words = awords_up_to_weight(static_cast<int>(wt_max), static_cast<int>(dep_max));
  for (auto& u : words)
    for (auto& v : words) {
      if (aword_weight(u) + aword_weight(v) > wt_max) continue;
      NCPoly U = expand_A(u), V = expand_A(v);
      NCPoly star_prod = qharm(U, V);
      NCPoly sh_prod = qshuf(U, V);
      NCPoly cat = U * psi_sh(V);
      std::string base = detail::aword_id(u) + "|" + detail::aword_id(v);
      bool ok_star = true, ok_sh = true;
      std::string det_star, det_sh;
      for (long M = 2; M <= M_max; ++M) {
        if (ok_star &&
            !(ZSqM(star_prod, M, Mode::star, ctx) ==
              ZSqM(U, M, Mode::star, ctx) * ZSqM(V, M, Mode::star, ctx))) {
          ok_star = false;
          det_star = "M=" + std::to_string(M);
        }
        if (ok_sh && !(ZSqM(sh_prod, M, Mode::sh, ctx) == ZSqM(cat, M, Mode::sh, ctx))) {
          ok_sh = false;
          det_sh = "M=" + std::to_string(M);
        }
      }
      rep.add_check("star:" + base, ok_star, "", "", det_star);
      rep.add_check("sh:" + base, ok_sh, "", "", det_sh);
    }
  rep.sort_cases();
  return rep;
}

inline Report suite_q_products(const SuiteParams& sp) {
  Report rep;
  rep.suite = "q-products";
  long wt_max = detail::get_long(sp, "wt_max", 5);
  long dep_max = detail::get_long(sp, "dep_max", 3);
  long M_max = detail::get_long(sp, "M", 6);
  Rational q = detail::get_rational(sp, "q", Rational(1, 2));
  rep.params = {{"wt_max", std::to_string(wt_max)},
                {"dep_max", std::to_string(dep_max)},
                {"M", std::to_string(M_max)},
                {"q", q.to_string()}};
  QContext<Rational> ctx(q);
  auto words = awords_up_to_weight(static_cast<int>(wt_max), static_cast<int>(dep_max));
  for (auto& u : words)
    for (auto& v : words) {
      if (aword_weight(u) + aword_weight(v) > wt_max) continue;
      NCPoly U = expand_A(u), V = expand_A(v);
      NCPoly star_prod = qharm(U, V), sh_prod = qshuf(U, V);
      std::string base = detail::aword_id(u) + "|" + detail::aword_id(v);
      bool ok_star = true, ok_sh = true;
      std::string det_star, det_sh;
      for (long M = 1; M <= M_max; ++M) {
        if (ok_star && !(ZqM(star_prod, M, ctx) == ZqM(U, M, ctx) * ZqM(V, M, ctx))) {
          ok_star = false;
          det_star = "M=" + std::to_string(M);
        }
        if (ok_sh && !(ZqM(sh_prod, M, ctx) == detail::zqm_shuffle_direct(u, v, M, ctx))) {
          ok_sh = false;
          det_sh = "M=" + std::to_string(M);
        }
      }
      rep.add_check("harmonic:" + base, ok_star, "", "", det_star);
      rep.add_check("shuffle:" + base, ok_sh, "", "", det_sh);
    }
  rep.sort_cases();
  return rep;
}

inline Report suite_iota(const SuiteParams& sp) {
  Report rep;
  rep.suite = "iota";
  long n_pairs = detail::get_long(sp, "pairs", 200);
  long wt_max = detail::get_long(sp, "wt_max", 5);
  std::uint64_t seed = static_cast<std::uint64_t>(detail::get_long(sp, "seed", 20230755));
  rep.seed = seed;
  rep.params = {{"pairs", std::to_string(n_pairs)}, {"wt_max", std::to_string(wt_max)}};
  std::mt19937_64 rng(seed);
  auto pool = awords_up_to_weight(static_cast<int>(wt_max));
  for (long i = 0; i < n_pairs; ++i) {
    NCPoly w = detail::random_ncpoly(rng, pool);
    NCPoly w2 = detail::random_ncpoly(rng, pool);
    bool ok_star = iota(qharm(w, w2)) == harm(iota(w), iota(w2));
    bool ok_sh = iota(qshuf(w, w2)) == shuf(iota(w), iota(w2));
    char buf[32];
    std::snprintf(buf, sizeof buf, "pair-%03ld", i);
    rep.add_check(std::string(buf) + ":star", ok_star, to_string(w), to_string(w2));
    rep.add_check(std::string(buf) + ":sh", ok_sh, to_string(w), to_string(w2));
  }
  rep.sort_cases();
  return rep;
}

inline Report suite_eval_cross(const SuiteParams& sp) {
  Report rep;
  rep.suite = "eval-cross";
  Rational q = detail::get_rational(sp, "q", Rational(1, 2));
  long M_k = detail::get_long(sp, "M", 6);
  rep.params = {{"q", q.to_string()}, {"M", std::to_string(M_k)}};
  QContext<Rational> ctx(q);

  // Kontsevich-order series vs the symmetrizer route, g-words wt <= 5
  for (auto& k : indices_up_to_weight(5)) {
    AWord u(k.begin(), k.end());
    bool ok = true;
    std::string det;
    for (long M = 1; M <= M_k; ++M)
      if (!(kontsevich_ZS_star(u, M, ctx) == ZSqM(g_word(k), M, Mode::star, ctx))) {
        ok = false;
        det = "M=" + std::to_string(M);
        break;
      }
    rep.add_check("kontsevich:" + index_to_string(k), ok, "", "", det);
  }

  // T(u, v, 1) = Z^{S,sh}(u psi^sh(v)), combined wt <= 4, M <= 5
  auto words4 = awords_up_to_weight(4);
  for (auto& u : words4)
    for (auto& v : words4) {
      if (aword_weight(u) + aword_weight(v) > 4) continue;
      NCPoly U = expand_A(u), V = expand_A(v);
      bool ok = true;
      std::string det;
      for (long M = 1; M <= 5; ++M)
        if (!(T_qM(U, V, NCPoly::one(), M, ctx) == ZSqM(U * psi_sh(V), M, Mode::sh, ctx))) {
          ok = false;
          det = "M=" + std::to_string(M);
          break;
        }
      rep.add_check("T-pair:" + detail::aword_id(u) + "|" + detail::aword_id(v), ok, "", "", det);
    }

  // T(u, v, w) = Z^{S,sh}((u sh_h v) w), combined wt <= 4, M <= 5
  for (auto& u : words4)
    for (auto& v : words4)
      for (auto& w : words4) {
        if (aword_weight(u) + aword_weight(v) + aword_weight(w) > 4) continue;
        if (u.empty() && v.empty() && w.empty()) continue;
        NCPoly U = expand_A(u), V = expand_A(v), W = expand_A(w);
        bool ok = true;
        std::string det;
        for (long M = 1; M <= 5; ++M)
          if (!(T_qM(U, V, W, M, ctx) == ZSqM(qshuf(U, V) * W, M, Mode::sh, ctx))) {
            ok = false;
            det = "M=" + std::to_string(M);
            break;
          }
        rep.add_check("T=Z:" + detail::aword_id(u) + "|" + detail::aword_id(v) + "|" +
                          detail::aword_id(w),
                      ok, "", "", det);
      }

  // partial sums of the t-expansion reproduce Z_{q,M}
  for (auto& u : words4) {
    NCPoly U = expand_A(u);
    bool ok = true;
    std::string det;
    for (long M = 1; M <= M_k; ++M) {
      auto coeffs = Lq_tseries(U, M, ctx);
      Rational s(0);
      for (auto& c : coeffs) s += c;
      if (!(s == ZqM(U, M, ctx))) {
        ok = false;
        det = "M=" + std::to_string(M);
        break;
      }
    }
    rep.add_check("L-series:" + detail::aword_id(u), ok, "", "", det);
  }
  rep.sort_cases();
  return rep;
}

inline Report suite_identities(const SuiteParams& sp) {
  Report rep;
  rep.suite = "identities";
  int N = static_cast<int>(detail::get_long(sp, "order", 5));
  int wt_max = static_cast<int>(detail::get_long(sp, "wt_max", 3));
  int pair_wt_max = static_cast<int>(detail::get_long(sp, "pair_wt_max", 2 * wt_max));
  std::string only = detail::get_str(sp, "id", "");
  rep.params = {{"order", std::to_string(N)},
                {"wt_max", std::to_string(wt_max)},
                {"pair_wt_max", std::to_string(pair_wt_max)}};

  auto words = awords_up_to_weight(wt_max);
  auto run = [&](const std::string& id, const IdentityParams& p, const std::string& tag) {
    Report sub = check_identity(id, N, p);
    bool ok = sub.all_pass();
    std::string det;
    if (!ok)
      for (auto& c : sub.cases)
        if (c.status == Status::fail) {
          det = c.id + ": " + c.lhs + " != " + c.rhs + (c.detail.empty() ? "" : " (" + c.detail + ")");
          break;
        }
    rep.add_check(id + "[" + tag + "]", ok, "", "", det);
  };
  auto want = [&](const std::string& id) { return only.empty() || only == id; };

  for (const char* id : {"B5", "B6", "B7", "B9", "B15"})
    if (want(id)) run(id, {}, "-");
  if (want("B16"))
    for (int k = 1; k <= 3; ++k) {
      IdentityParams p;
      p.k = Index{k};
      run("B16", p, "k=" + std::to_string(k));
    }
  for (const char* id : {"B10", "L58"})
    if (want(id))
      for (Index k : {Index{2}, Index{3}, Index{1, 2}, Index{2, 2}}) {
        IdentityParams p;
        p.k = k;
        run(id, p, "k=" + index_to_string(k));
      }
  for (const char* id : {"B1", "B2", "B3", "B4", "B8", "B11", "B12", "B13", "B14"})
    if (want(id))
      for (auto& u : words)
        for (auto& v : words) {
          if (aword_weight(u) + aword_weight(v) > pair_wt_max) continue;
          IdentityParams p;
          p.w = expand_A(u);
          p.w2 = expand_A(v);
          run(id, p, detail::aword_id(u) + "|" + detail::aword_id(v));
        }
  for (const char* id : {"SG1", "SG2", "SG3"})
    if (want(id))
      for (auto& u : words)
        for (auto& v : words) {
          if (aword_weight(u) + aword_weight(v) > pair_wt_max) continue;
          IdentityParams p;
          p.w = expand_A(u);
          p.w2 = expand_A(v);
          p.k = Index{2, 2};
          run(id, p, detail::aword_id(u) + "|" + detail::aword_id(v));
        }
  rep.sort_cases();
  return rep;
}

inline Report suite_structural(const SuiteParams& sp) {
  Report rep;
  rep.suite = "structural";
  int wt_g = static_cast<int>(detail::get_long(sp, "wt_g", 6));
  int wt_E = static_cast<int>(detail::get_long(sp, "wt_E", 5));
  int wt_pair = static_cast<int>(detail::get_long(sp, "wt_pair", 5));
  rep.params = {{"wt_g", std::to_string(wt_g)},
                {"wt_E", std::to_string(wt_E)},
                {"wt_pair", std::to_string(wt_pair)}};

  for (auto& k : indices_up_to_weight(wt_g)) {
    NCPoly w = wS_q(g_word(k), Mode::star);
    rep.add_check("wS-star-Zspan:" + index_to_string(k),
                  membership(w, Space::Zspan_adm), "", "", "");
  }
  for (auto& k : indices_up_to_weight(wt_E)) {
    NCPoly w = wS_q(E_index(k), Mode::sh);
    rep.add_check("wS-sh-H0:" + index_to_string(k), membership(w, Space::H0));
  }
  for (int m = 1; m <= 4; ++m)
    rep.add_check("wS-sh-E1m-zero:m=" + std::to_string(m),
                  wS_q(E_ones(m), Mode::sh).is_zero());

  auto idx = indices_up_to_weight(wt_pair);
  for (auto& k : idx)
    for (auto& l : idx) {
      if (weight(k) + weight(l) > wt_pair) continue;
      if (!admissible(k) && !admissible(l)) continue;
      std::string base = index_to_string(k) + "|" + index_to_string(l);
      EBasisDecomp dec = decompose_E(qshuf(E_index(k), E_index(l)));
      rep.add_check("E-closure:" + base, dec.exact(), "", "",
                    dec.exact() ? "" : "residual: " + to_string(dec.residual));
      if (admissible(k) && admissible(l)) {
        bool adm = true;
        for (auto& [m, c] : dec.coeffs)
          if (!admissible(m)) adm = false;
        rep.add_check("E-closure-adm:" + base, dec.exact() && adm);
      }
      // h = 0 coefficients match the classical shuffle multiplication table
      auto d = d_coeffs(k, l, Mode::sh);
      bool match = dec.exact();
      if (match) {
        std::map<Index, Rational> at0;
        for (auto& [m, c] : dec.coeffs)
          if (!c.constant_term().is_zero()) at0[m] = c.constant_term();
        for (auto& [m, dm] : d)
          if (!(at0.count(m) && at0[m] == Rational(dm))) match = false;
        for (auto& [m, c] : at0)
          if (!d.count(m)) match = false;
      }
      rep.add_check("E-dcoeff:" + base, match);
    }
  rep.sort_cases();
  return rep;
}

inline Report suite_closed_forms(const SuiteParams& sp) {
  Report rep;
  rep.suite = "closed-forms";
  Rational q = detail::get_rational(sp, "q", Rational(1, 2));
  long M_max = detail::get_long(sp, "M", 20);
  rep.params = {{"q", q.to_string()}, {"M", std::to_string(M_max)}};
  QContext<Rational> ctx(q);
  Rational omq = Rational(1) - q;

  NCPoly e1 = e_word(1);
  NCPoly e1g1sq = (e1 + g_word(1)) * (e1 + g_word(1));
  bool ok1 = true, ok2 = true;
  std::string det1, det2;
  for (long M = 1; M <= M_max; ++M) {
    if (ok1 && !(ZSqM(e1, M, Mode::sh, ctx) == omq * Rational(M - 1))) {
      ok1 = false;
      det1 = "M=" + std::to_string(M);
    }
    if (ok2 && !(ZSqM(e1g1sq, M, Mode::sh, ctx) == omq * omq * binomial(M - 1, 2))) {
      ok2 = false;
      det2 = "M=" + std::to_string(M);
    }
  }
  rep.add_check("ZSsh-e1-closed-form", ok1, "", "", det1);
  rep.add_check("ZSsh-e1g1sq-closed-form", ok2, "", "", det2);

  for (int k : {3, 5, 7}) {
    auto c = depth2_solve(k);
    bool ok = true;
    for (int m = 1; m < k; ++m) {
      Rational expect = Rational(-1, 2) * (Rational(1) + Rational(m % 2 ? -1 : 1) * binomial(k, m));
      if (!(c[m] == expect)) ok = false;
    }
    rep.add_check("depth2-solve:k=" + std::to_string(k), ok);
  }

  for (int k1 = 1; k1 <= 7; ++k1)
    for (int k2 = 1; k2 <= 7; ++k2) {
      int k = k1 + k2;
      if (k > 8) continue;
      Rational got = qsmzv_depth2(k1, k2);
      Rational expect = k % 2 ? Rational(k2 % 2 ? -1 : 1) * binomial(k, k1) : Rational(0);
      rep.add_check("qsmzv-depth2:(" + std::to_string(k1) + "," + std::to_string(k2) + ")",
                    got == expect, got.to_string(), expect.to_string());
    }

  for (Index k : {Index{2}, Index{3}})
    for (int m = 0; m <= 2; ++m) {
      Report sub = ohno_depth2_check(k, m);
      rep.merge(sub);
    }
  rep.sort_cases();
  return rep;
}

inline Report suite_limits(const SuiteParams& sp) {
  Report rep;
  rep.suite = "limits";
  auto grid = detail::get_grid(sp, "grid", "0.5,0.9,0.99,0.999");
  double tol = std::stod(detail::get_str(sp, "tol", "1e-12"));
  rep.params = {{"grid", detail::get_str(sp, "grid", "0.5,0.9,0.99,0.999")},
                {"tol", detail::get_str(sp, "tol", "1e-12")}};

  {
    QContext<Rational> ctx(Rational(1, 2), std::nullopt, tol);
    auto a = Zq(hb_word() * g_word(1), ctx);
    auto b = Zq(g_word(2), ctx);
    Rational diff = (a.value - b.value).abs();
    rep.add_check("resummation-Hg1-g2", diff < Rational(1, 10000000000L), diff.to_string(),
                  "< 1e-10");
  }
  {
    std::vector<double> vals;
    for (double qv : grid) {
      QContext<double> ctx(qv, std::nullopt, tol);
      vals.push_back(Zq(g_word(2), ctx).value);
    }
    bool mono = true;
    for (size_t i = 1; i < vals.size(); ++i) mono = mono && vals[i] >= vals[i - 1];
    rep.add_check("g2-nondecreasing", mono);
    double pi2_6 = M_PI * M_PI / 6;
    rep.add_check("g2-zeta2-limit", std::abs(vals.back() - pi2_6) < 0.05,
                  std::to_string(vals.back()), std::to_string(pi2_6));
  }
  {
    std::vector<double> vals;
    for (double qv : grid) {
      QContext<double> ctx(qv, std::nullopt, tol);
      vals.push_back(Zq(hb_word() * g_word(2), ctx).value);
    }
    bool mono = true;
    for (size_t i = 1; i < vals.size(); ++i) mono = mono && vals[i] <= vals[i - 1];
    rep.add_check("n-element-decreasing", mono && vals.back() < 0.05,
                  std::to_string(vals.back()), "< 0.05");
  }
  {
    QContext<double> ctx(0.999, std::nullopt, tol);
    double got = Zq(g_word(Index{2, 3}), ctx).value;
    // independent truncated-sum oracle for zeta(2,3)
    double cum = 0, oracle = 0;
    for (long n = 1; n < 20000; ++n) {
      oracle += cum / (static_cast<double>(n) * n * n);
      cum += 1.0 / (static_cast<double>(n) * n);
    }
    rep.add_check("zeta23-proximity", std::abs(got - oracle) < 0.1, std::to_string(got),
                  std::to_string(oracle));
  }
  rep.sort_cases();
  return rep;
}

inline Report suite_bounds(const SuiteParams& sp) {
  Report rep;
  rep.suite = "bounds";
  long M = detail::get_long(sp, "M", 6);
  Rational q = detail::get_rational(sp, "q", Rational(1, 4));
  Rational sq = detail::get_rational(sp, "sqrt_q", Rational(1, 2));
  rep.params = {{"M", std::to_string(M)}, {"q", q.to_string()}, {"sqrt_q", sq.to_string()}};
  QContext<Rational> ctx(q, sq);

  // grid inequality x^alpha (1-x)/(1-x^beta) <= 1/beta
  for (auto [alpha, beta] : std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {1, 2}, {2, 3}}) {
    bool ok = true;
    for (int j = 1; j <= 99; ++j) {
      Rational x(j, 100);
      Rational lhs = x.pow(alpha) * (Rational(1) - x) / (Rational(1) - x.pow(beta));
      if (!(lhs <= Rational(1, beta))) ok = false;
    }
    rep.add_check("grid-ineq:a=" + std::to_string(alpha) + ",b=" + std::to_string(beta), ok);
  }

  // termwise domination of truncated sums by the B-bound
  for (auto& w : awords_up_to_weight(4)) {
    if (w.empty() || !aword_ends_in_g(w)) continue;
    std::vector<int> alphas, betas;
    int h_run = 0;
    for (ALetter l : w) {
      if (l == kH) ++h_run;
      else {
        alphas.push_back(h_run);
        betas.push_back(l - 1);
        h_run = 0;
      }
    }
    Rational lhs = ZqM_word(w, M, ctx);
    Rational rhs = B_bound(alphas, betas, M, ctx);
    rep.add_check("dominate:" + detail::aword_id(w), lhs <= rhs, lhs.to_string(),
                  rhs.to_string());
  }
  rep.sort_cases();
  return rep;
}

inline Report suite_classical(const SuiteParams& sp) {
  Report rep;
  rep.suite = "classical";
  long wt_pair = detail::get_long(sp, "wt_pair", 5);
  long wt_h0 = detail::get_long(sp, "wt_h0", 6);
  long M_max = detail::get_long(sp, "M", 6);
  rep.params = {{"wt_pair", std::to_string(wt_pair)},
                {"wt_h0", std::to_string(wt_h0)},
                {"M", std::to_string(M_max)}};

  auto idx = indices_up_to_weight(static_cast<int>(wt_pair));
  for (auto& k : idx)
    for (auto& l : idx) {
      if (weight(k) + weight(l) > wt_pair) continue;
      ClassicalPoly zk = z_word(k), zl = z_word(l);
      ClassicalPoly star_prod = harm(zk, zl);
      ClassicalPoly cat = zk * psi(zl);
      ClassicalPoly sh_prod = shuf(zk, zl);
      std::string base = index_to_string(k) + "|" + index_to_string(l);
      bool ok_star = true, ok_sh = true;
      std::string det_star, det_sh;
      for (long M = 1; M <= M_max; ++M) {
        if (ok_star && !(ZM_S_classical(star_prod, M, Mode::star) ==
                         ZM_S_classical(zk, M, Mode::star) * ZM_S_classical(zl, M, Mode::star))) {
          ok_star = false;
          det_star = "M=" + std::to_string(M);
        }
        if (ok_sh &&
            !(ZM_S_classical(sh_prod, M, Mode::sh) == ZM_S_classical(cat, M, Mode::sh))) {
          ok_sh = false;
          det_sh = "M=" + std::to_string(M);
        }
      }
      rep.add_check("thm-ds-star:" + base, ok_star, "", "", det_star);
      rep.add_check("thm-ds-sh:" + base, ok_sh, "", "", det_sh);
    }

  for (auto& k : indices_up_to_weight(static_cast<int>(wt_h0))) {
    bool ok = in_h0(wS_classical(z_word(k), Mode::star)) &&
              in_h0(wS_classical(z_word(k), Mode::sh));
    rep.add_check("wS-image-h0:" + index_to_string(k), ok);
  }

  for (Index k : {Index{2}, Index{1, 2}, Index{2, 1}})
    for (int n = 1; n <= 3; ++n)
      rep.add_check("ohno-machinery:" + index_to_string(k) + ",n=" + std::to_string(n),
                    ohno_machinery_check(k, n));
  rep.sort_cases();
  return rep;
}

inline Report suite_reversal(const SuiteParams& sp) {
  Report rep;
  rep.suite = "reversal";
  int wt_max = static_cast<int>(detail::get_long(sp, "wt_max", 5));
  rep.params = {{"wt_max", std::to_string(wt_max)}};
  QContext<Rational> ctx(Rational(1, 2));
  for (auto& k : indices_up_to_weight(wt_max)) {
    Index kb = reversal(k);
    int sign = weight(k) % 2 ? -1 : 1;
    NCPoly lhs = wS_q(g_word(kb), Mode::star);
    NCPoly rhs = HPoly(sign) * wS_q(g_word(k), Mode::star);
    rep.add_check("reversal-star:" + index_to_string(k), lhs == rhs);

    NCPoly diff = psi_sh(E_index(k)) - HPoly(sign) * E_index(kb);
    EBasisDecomp dec = decompose_E(diff);
    bool ok = dec.exact();
    for (auto& [m, c] : dec.coeffs) ok = ok && c.hbar_divisible();
    rep.add_check("reversal-sh-mod-hbar-e:" + index_to_string(k), ok);

    auto za = ZqS_star(kb, ctx), zb = ZqS_star(k, ctx);
    Rational d = (za.value - Rational(sign) * zb.value).abs();
    rep.add_check("reversal-numeric:" + index_to_string(k),
                  d.to_double() < 3 * (za.tail_bound + zb.tail_bound) + 1e-30);
  }
  rep.sort_cases();
  return rep;
}

inline Report suite_qsmzv_shuffle(const SuiteParams& sp) {
  Report rep;
  rep.suite = "qsmzv-shuffle";
  int wt_pair = static_cast<int>(detail::get_long(sp, "wt_pair", 5));
  rep.params = {{"wt_pair", std::to_string(wt_pair)}};
  auto idx = indices_up_to_weight(wt_pair);
  for (auto& k : idx)
    for (auto& l : idx) {
      if (weight(k) + weight(l) > wt_pair) continue;
      if (!admissible(k) && !admissible(l)) continue;
      std::string base = index_to_string(k) + "|" + index_to_string(l);
      int sign = weight(l) % 2 ? -1 : 1;
      Index kl = k;
      Index lb = reversal(l);
      kl.insert(kl.end(), lb.begin(), lb.end());
      NCPoly diff = E_index(k) * psi_sh(E_index(l)) - HPoly(sign) * E_index(kl);
      EBasisDecomp dec = decompose_E(diff);
      bool ok = dec.exact();
      for (auto& [m, c] : dec.coeffs) ok = ok && c.hbar_divisible();
      rep.add_check("shuffle-rel:" + base, ok);
    }
  rep.sort_cases();
  return rep;
}

inline Report run_suite(const std::string& name, const SuiteParams& params) {
  if (name == "q-truncated-ds") return suite_q_truncated_ds(params);
  if (name == "q-products") return suite_q_products(params);
  if (name == "iota") return suite_iota(params);
  if (name == "eval-cross") return suite_eval_cross(params);
  if (name == "identities") return suite_identities(params);
  if (name == "structural") return suite_structural(params);
  if (name == "closed-forms") return suite_closed_forms(params);
  if (name == "limits") return suite_limits(params);
  if (name == "bounds") return suite_bounds(params);
  if (name == "classical") return suite_classical(params);
  if (name == "reversal") return suite_reversal(params);
  if (name == "qsmzv-shuffle") return suite_qsmzv_shuffle(params);
  throw UnknownSuite("unknown suite: " + name);
}

inline std::vector<std::string> suite_catalog() {
  return {"q-truncated-ds", "q-products", "iota",   "eval-cross", "identities",
          "structural",     "closed-forms", "limits", "bounds",     "classical",
          "reversal",       "qsmzv-shuffle"};
}

}  // namespace qsmzv

#endif
