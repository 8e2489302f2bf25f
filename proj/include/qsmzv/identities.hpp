#ifndef QSMZV_IDENTITIES_HPP
#define QSMZV_IDENTITIES_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qsmzv/io.hpp"
#include "qsmzv/report.hpp"
#include "qsmzv/series.hpp"

namespace qsmzv {

struct UnknownIdentity : Error {
  using Error::Error;
};
struct ArityMismatch : Error {
  using Error::Error;
};

struct IdentityParams {
  std::optional<NCPoly> w, w2;
  std::optional<Index> k;
};

inline std::vector<std::string> identity_catalog() {
  return {"B1", "B2",  "B3",  "B4",  "B5",  "B6",  "B7",  "B8",  "B9",  "B10",
          "B11", "B12", "B13", "B14", "B15", "B16", "SG1", "SG2", "SG3", "L58"};
}

namespace detail {

inline void compare1(Report& rep, const std::string& prefix, const Series1& lhs,
                     const Series1& rhs) {
  for (int n = 0; n < lhs.order(); ++n) {
    bool ok = lhs.coeff(n) == rhs.coeff(n);
    rep.add_check(prefix + "X^" + std::to_string(n), ok, ok ? "" : to_string(lhs.coeff(n)),
                  ok ? "" : to_string(rhs.coeff(n)));
  }
}

inline void compare2(Report& rep, const std::string& prefix, const Series2& lhs,
                     const Series2& rhs) {
  for (int i = 0; i < lhs.order(); ++i)
    for (int j = 0; i + j < lhs.order(); ++j) {
      bool ok = lhs.coeff(i, j) == rhs.coeff(i, j);
      rep.add_check(prefix + "X^" + std::to_string(i) + "Y^" + std::to_string(j), ok,
                    ok ? "" : to_string(lhs.coeff(i, j)), ok ? "" : to_string(rhs.coeff(i, j)));
    }
}

inline void compare_mod_n(Report& rep, const std::string& prefix, const Series1& lhs,
                          const Series1& rhs) {
  for (int n = 0; n < lhs.order(); ++n) {
    NCPoly diff = lhs.coeff(n) - rhs.coeff(n);
    bool ok = false;
    std::string why;
    try {
      ok = membership(diff, Space::n);
      if (!ok) why = "difference not in n: " + to_string(diff);
    } catch (const NotInSubalgebra& e) {
      why = e.what();
    }
    rep.add_check(prefix + "X^" + std::to_string(n) + " mod n", ok, "", "", why);
  }
}

inline Series1 inv_one_minus(const Series1& f) { return (Series1::one(f.order()) - f).inverse(); }
inline Series2 inv_one_minus(const Series2& f) { return (Series2::one(f.order()) - f).inverse(); }

inline NCPoly a_letter() { return NCPoly::monomial("a"); }
inline NCPoly b_letter() { return NCPoly::monomial("b"); }

// Parameter-independent series are shared across the catalog runs.
inline const Series1& cached1(const std::string& key, int N,
                              const std::function<Series1()>& make) {
  static std::map<std::pair<std::string, int>, Series1> cache;
  auto k = std::make_pair(key, N);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, make()).first;
  return it->second;
}
inline const Series2& cached2(const std::string& key, int N,
                              const std::function<Series2()>& make) {
  static std::map<std::pair<std::string, int>, Series2> cache;
  auto k = std::make_pair(key, N);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, make()).first;
  return it->second;
}

inline const Series1& R_c(int N) {
  return cached1("R", N, [N] { return R_series(N); });
}
inline const Series1& E_c(int N) {
  return cached1("E", N, [N] { return E_series(N); });
}
// e^0(X) = sum_{k>=2} e_k X^{k-2} = e_2 (1-aX)^{-1}
inline const Series1& e0_c(int N) {
  return cached1("e0", N, [N] {
    return inv_one_minus(Series1::var(N).lmul(a_letter())).lmul(e_word(2));
  });
}
// (1 - R(X) g_1)^{-1} and the -X variant
inline const Series1& invRg_c(int N) {
  return cached1("invRg", N, [N] { return inv_one_minus(R_c(N).rmul(g_word(1))); });
}
inline const Series1& invRnegg_c(int N) {
  return cached1("invRnegg", N,
                 [N] { return inv_one_minus(R_c(N).subst_neg().rmul(g_word(1))); });
}
inline const Series1& inv_g1X_c(int N) {
  return cached1("invg1X", N, [N] { return inv_one_minus(Series1::var(N).lmul(g_word(1))); });
}

struct RhoAtoms {
  Series1 U, img_a, img_b, one_m_Ug1, inv_Ug1;
};
// variant 0: U = X, variant 1: U = R(X)
inline const RhoAtoms& rho_atoms(int variant, int N) {
  static std::map<std::pair<int, int>, RhoAtoms> cache;
  auto key = std::make_pair(variant, N);
  auto it = cache.find(key);
  if (it == cache.end()) {
    Series1 U = variant == 0 ? Series1::var(N) : R_c(N);
    Series1 one_m = Series1::one(N) - U.rmul(g_word(1));
    RhoAtoms at{U, rho_image_a(U, N), rho_image_b(U, N), one_m, one_m.inverse()};
    it = cache.emplace(key, std::move(at)).first;
  }
  return it->second;
}

inline NCPoly Xi_poly(const NCPoly& w, const NCPoly& w2) {
  const NCPoly& E1 = E_ones(1);
  return qshuf(w, w2 * E1) + qshuf(w * E1, w2);
}

template <typename S>
S Xi_series(const S& F, const S& G) {
  const NCPoly& E1 = E_ones(1);
  return sh_series(F, G.rmul(E1)) + sh_series(F.rmul(E1), G);
}

template <typename S>
S partial_series(const S& F, const S& G) {
  return sh_series(F.rmul(g_word(1)), G) - sh_series(F, G).rmul(g_word(1));
}

// K^sh_h(w, u_1...u_r, w') = sum_i (w u_1..u_i) sh_h psi^sh(u_{i+1}..u_r w')
inline NCPoly K_sh(const NCPoly& w, const AWord& mid, const NCPoly& w2) {
  NCPoly r;
  for (size_t i = 0; i <= mid.size(); ++i) {
    NCPoly left = w * expand_A(AWord(mid.begin(), mid.begin() + i));
    NCPoly suffix = expand_A(AWord(mid.begin() + i, mid.end())) * w2;
    r += qshuf(left, psi_sh(suffix));
  }
  return r;
}

}  // namespace detail

inline Report check_identity(const std::string& id, int N, const IdentityParams& params) {
  using namespace detail;
  Report rep;
  rep.suite = "identity:" + id;
  rep.params["order"] = std::to_string(N);
  NCPoly w = params.w.value_or(g_word(1));
  NCPoly w2 = params.w2.value_or(g_word(1));
  if (params.w) rep.params["w"] = to_string(*params.w);
  if (params.w2) rep.params["w2"] = to_string(*params.w2);
  if (params.k) rep.params["k"] = index_to_string(*params.k);

  const NCPoly a = a_letter(), g1 = g_word(1), H = hb_word();

  if (id == "B1") {
    for (int variant = 0; variant < 2; ++variant) {
      std::string tag = variant == 0 ? "U=X:" : "U=R:";
      const Series1& base = variant == 0
                                ? cached1("X", N, [N] { return Series1::var(N); })
                                : R_c(N);
      const Series1& inv1 = cached1(tag + "inv_Ua", N, [&] {
        return inv_one_minus(base.rmul(a_letter()));
      });
      Series2 U = Series2::embed(base, 0), V = Series2::embed(base, 1);
      Series2 invU = Series2::embed(inv1, 0), invV = Series2::embed(inv1, 1);
      Series2 WU = invU.lmul(w), WV = invV.lmul(w2);
      Series2 UV = U + V + (U * V).scale(HPoly::hbar());
      Series2 lhs = sh_series(WU, WV) * (Series2::one(N) - UV.rmul(a));
      Series2 rhs = -Series2::constant(qshuf(w, w2), N) +
                    sh_series(WU, Series2::constant(w2, N)) * (Series2::one(N) - U.rmul(a)) +
                    sh_series(Series2::constant(w, N), WV) * (Series2::one(N) - V.rmul(a));
      compare2(rep, tag, lhs, rhs);
    }
  } else if (id == "B2") {
    for (int variant = 0; variant < 2; ++variant) {
      std::string tag = variant == 0 ? "U=X:" : "U=R:";
      const Series1& U = variant == 0 ? cached1("X", N, [N] { return Series1::var(N); })
                                      : R_c(N);
      const Series1& invU = cached1(tag + "inv_Ua", N, [&] {
        return inv_one_minus(U.rmul(a_letter()));
      });
      Series1 WU = invU.lmul(w);
      Series1 lhs =
          sh_series(WU, Series1::constant(w2 * a, N)) * (Series1::one(N) - U.rmul(a));
      Series1 rhs = Series1::constant(qshuf(w, w2 * a) - qshuf(w, w2) * a, N) +
                    (sh_series(WU, Series1::constant(w2, N)) *
                     (Series1::one(N) + U.scale(HPoly::hbar())))
                        .rmul(a);
      compare1(rep, tag, lhs, rhs);
    }
  } else if (id == "B3") {
    for (int variant = 0; variant < 2; ++variant) {
      std::string pre = variant == 0 ? "U=X:" : "U=R:";
      const RhoAtoms& at = rho_atoms(variant, N);
      auto rho = [&](const NCPoly& p) { return rho_from_images(p, at.img_a, at.img_b, N); };
      auto rho_def = [&](const NCPoly& p) {
        return sh_series(at.inv_Ug1, Series1::constant(p, N)) * at.one_m_Ug1;
      };
      compare1(rep, pre + "hom:", rho(w * w2), rho(w) * rho(w2));
      compare1(rep, pre + "def-w:", rho_def(w), rho(w));
      compare1(rep, pre + "img-a:", rho_def(a), at.img_a);
      compare1(rep, pre + "img-b:", rho_def(b_letter()), at.img_b);
    }
  } else if (id == "B4") {
    const Series1& G = cached1("g1_inv_aX", N, [&] {
      return inv_one_minus(Series1::var(N).lmul(a_letter())).lmul(g_word(1));
    });
    Series2 GX = Series2::embed(G, 0), GY = Series2::embed(G, 1);
    Series2 X = Series2::var(0, N), Y = Series2::var(1, N);
    Series2 lhs = sh_series(GX.lmul(w), GY.lmul(w2));
    const Series2& GP = cached2("B4:GP", N, [&] {
      Series2 P = Series2::var(0, N) + Series2::var(1, N) +
                  (Series2::var(0, N) * Series2::var(1, N)).scale(HPoly::hbar());
      return inv_one_minus(P.lmul(a_letter())).lmul(g_word(1));
    });
    Series2 rhs = ((Series2::one(N) + X.scale(HPoly::hbar())) *
                       sh_series(GX.lmul(w), Series2::constant(w2, N)) +
                   (Series2::one(N) + Y.scale(HPoly::hbar())) *
                       sh_series(Series2::constant(w, N), GY.lmul(w2)) +
                   Series2::constant(qshuf(w, w2) * H, N)) *
                  GP;
    compare2(rep, "", lhs, rhs);
  } else if (id == "B5") {
    Series1 lhs = exp_prod(Series1::var(N).lmul(g1), Mode::sh, N);
    compare1(rep, "", lhs, invRg_c(N));
  } else if (id == "B6") {
    Series1 rhs(N);
    for (int m = 0; m < N; ++m) rhs.set_coeff(m, E_ones(m));
    compare1(rep, "", E_c(N), rhs);
  } else if (id == "B7") {
    const Series1& E = E_c(N);
    Series1 lhs = E.map([](const NCPoly& p) { return psi_sh(p); });
    compare1(rep, "", lhs, E.subst_neg());
  } else if (id == "B8") {
    Series1 lhs(N);
    for (int m = 0; m < N; ++m) {
      NCPoly acc;
      for (auto& [aw, c] : to_A_basis(E_ones(m))) acc += c * K_sh(w, aw, w2);
      lhs.set_coeff(m, acc);
    }
    Series1 rhs = sh_series(invRg_c(N).lmul(w), invRnegg_c(N).lmul(psi_sh(w2)));
    compare1(rep, "", lhs, rhs);
  } else if (id == "B9") {
    const Series1& R = R_c(N);
    Series1 lhs = Series1::one(N) + R.rmul(e_word(1));
    Series1 rhs = cached1("exphb", N, [N] { return exp_hb_series(N); }) *
                  (Series1::one(N) - R.subst_neg().rmul(g1));
    compare1(rep, "", lhs, rhs);
  } else if (id == "B10") {
    if (!params.k) throw ArityMismatch("B10 requires an index parameter");
    const Index& k = *params.k;
    const RhoAtoms& atR = rho_atoms(1, N), atX = rho_atoms(0, N);
    Series1 lhs = rho_from_images(g_word(k), atR.img_a, atR.img_b, N);
    Series1 rhs = rho_from_images(E_index(k), atX.img_a, atX.img_b, N);
    compare_mod_n(rep, "", lhs, rhs);
  } else if (id == "B11") {
    const Series1& E = E_c(N);
    Series2 EY1 = Series2::embed(E, 0), EY2 = Series2::embed(E, 1);
    Series2 wE1 = EY1.lmul(w), w2E2 = EY2.lmul(w2);
    Series2 lhs = Xi_series(wE1, w2E2);
    // E(Y1, Y2), assembled one order higher so the variable divisions are exact
    const Series2& E12 = cached2("B11:E12", N, [N] {
      Series1 Ep = E_series(N + 1);
      Series2 Sp = Series2::subst_sum(Ep);
      return ((Sp - Series2::embed(Ep, 0)).div_var(1) +
              (Sp - Series2::embed(Ep, 1)).div_var(0))
          .truncate_to(N);
    });
    const Series1& one_m_Rg = cached1("one_m_Rg", N, [N] {
      return Series1::one(N) - R_c(N).rmul(g_word(1));
    });
    Series1 lam1 = sh_series(invRg_c(N).lmul(w), Series1::constant(w2, N)) * one_m_Rg;
    Series1 lam2 = sh_series(invRg_c(N).lmul(w2), Series1::constant(w, N)) * one_m_Rg;
    Series2 rhs = partial_series(w2E2, Series2::constant(w, N)) * EY1 +
                  partial_series(wE1, Series2::constant(w2, N)) * EY2 +
                  (-Series2::constant(qshuf(w, w2), N) + Series2::embed(lam1, 0) +
                   Series2::embed(lam2, 1)) *
                      E12;
    compare2(rep, "", lhs, rhs);
  } else if (id == "B12") {
    const Series1& e0 = e0_c(N);
    Series1 w2e0 = e0.lmul(w2);
    Series1 lhs1 = partial_series(Series1::constant(w, N), w2e0);
    Series1 rhs1 = (Series1::constant(Xi_poly(w, w2), N) +
                    sh_series(Series1::constant(w, N), w2e0).mul_var(1)) *
                   e0;
    compare1(rep, "partial:", lhs1, rhs1);
    // Lambda_Y(w, w' e0(X)) = w sh w'e0(X) + Y partial(w E(Y), w' e0(X))
    Series2 G = Series2::embed(e0, 0).lmul(w2);
    const Series2& one_m_RYg = cached2("one_m_RYg", N, [N] {
      return Series2::one(N) - Series2::embed(R_c(N), 1).rmul(g_word(1));
    });
    const Series2& invRYg = cached2("invRYg", N, [N] {
      return Series2::embed(invRg_c(N), 1);
    });
    Series2 lhs2 = sh_series(invRYg.lmul(w), G) * one_m_RYg;
    Series2 EY = Series2::embed(E_c(N), 1);
    Series2 rhs2 = sh_series(Series2::constant(w, N), G) +
                   partial_series(EY.lmul(w), G) * Series2::var(1, N);
    compare2(rep, "lambda:", lhs2, rhs2);
  } else if (id == "B13") {
    Series2 e0X = Series2::embed(e0_c(N), 0);
    Series2 EY = Series2::embed(E_c(N), 1);
    Series2 Y = Series2::var(1, N);
    Series2 lhs = sh_series(EY.lmul(w), e0X.lmul(w2));
    Series2 inner = sh_series(Series2::constant(w, N), e0X.lmul(w2)) +
                    (Xi_series(EY.lmul(w), Series2::constant(w2, N)) * e0X) * Y;
    const Series2& core = cached2("B13:core", N, [N] {
      Series2 e0X_ = Series2::embed(e0_c(N), 0);
      Series2 EY_ = Series2::embed(E_c(N), 1);
      return inv_one_minus(((Series2::var(0, N) * Series2::var(1, N)) * e0X_) * EY_);
    });
    Series2 rhs = inner * EY * core;
    compare2(rep, "", lhs, rhs);
  } else if (id == "B14") {
    Series2 e01 = Series2::embed(e0_c(N), 0), e02 = Series2::embed(e0_c(N), 1);
    Series2 lhs = sh_series(e01.lmul(w), e02.lmul(w2));
    // the bracket is assembled two orders higher so dividing by X1 X2 is exact
    int Np = N + 2;
    Series2 e01p = Series2::embed(e0_c(Np), 0), e02p = Series2::embed(e0_c(Np), 1);
    Series2 X1p = Series2::var(0, Np), X2p = Series2::var(1, Np);
    Series2 Pp = X1p + X2p + (X1p * X2p).scale(HPoly::hbar());
    Series2 bracket =
        -(Pp * Series2::constant(Xi_poly(w, w2) * e_word(2), Np)) +
        (Series2::one(Np) + X2p.scale(HPoly::hbar())) *
            partial_series(Series2::constant(w, Np), e02p.lmul(w2)) * X1p +
        (Series2::one(Np) + X1p.scale(HPoly::hbar())) *
            partial_series(Series2::constant(w2, Np), e01p.lmul(w)) * X2p;
    Series2 D = bracket.div_var(0).div_var(1).truncate_to(N);
    const Series2& invPa = cached2("B14:invPa", N, [N] {
      Series2 P = Series2::var(0, N) + Series2::var(1, N) +
                  (Series2::var(0, N) * Series2::var(1, N)).scale(HPoly::hbar());
      return inv_one_minus(P.rmul(detail::a_letter()));
    });
    Series2 rhs = D * invPa;
    compare2(rep, "", lhs, rhs);
  } else if (id == "B15") {
    const Series1& R = R_c(N);
    Series2 R1 = Series2::embed(R, 0), R2 = Series2::embed(R, 1);
    Series2 lhs = R1 + R2 + (R1 * R2).lmul(H);
    compare2(rep, "", lhs, Series2::subst_sum(R));
  } else if (id == "B16") {
    int k = params.k && !params.k->empty() ? params.k->front() : 1;
    rep.params["k"] = std::to_string(k);
    Series1 lhs = inv_one_minus(Series1::var(N).lmul(g_word(k)));
    Series1 f(N);
    for (int n = 1; n < N; ++n) {
      Rational c = Rational(n % 2 ? 1 : -1) / Rational(n);
      f.set_coeff(n, HPoly(c) * g_word(n * k));
    }
    compare1(rep, "", lhs, exp_prod(f, Mode::star, N));
  } else if (id == "L58") {
    if (!params.k) throw ArityMismatch("L58 requires an index parameter");
    const Index& k = *params.k;
    Series1 lhs = sh_series(invRg_c(N), inv_g1X_c(N).lmul(g_word(k)));
    Series1 rhs = sh_series(inv_g1X_c(N), invRg_c(N).lmul(E_index(k)));
    compare_mod_n(rep, "", lhs, rhs);
  } else if (id == "SG1") {
    NCPoly lhs = qshuf(w * g1, w2 * g1);
    NCPoly rhs = (qshuf(w, w2 * g1) + qshuf(w * g1, w2) + qshuf(w, w2) * H) * g1;
    rep.add_check("eq", lhs == rhs, to_string(lhs), to_string(rhs));
  } else if (id == "SG2") {
    int k = params.k && !params.k->empty() ? params.k->front() : 1;
    rep.params["k"] = std::to_string(k);
    NCPoly lhs = qshuf(w * g1, w2 * g_word(k + 1));
    NCPoly rhs = qshuf(w, w2 * g_word(k + 1)) * g1 + qshuf(w * g1, w2 * g_word(k)) * a +
                 HPoly::hbar() * (qshuf(w, w2 * g_word(k)) * g1);
    rep.add_check("eq", lhs == rhs, to_string(lhs), to_string(rhs));
  } else if (id == "SG3") {
    int k = 1, l = 1;
    if (params.k && params.k->size() >= 1) k = (*params.k)[0];
    if (params.k && params.k->size() >= 2) l = (*params.k)[1];
    rep.params["k"] = std::to_string(k);
    rep.params["l"] = std::to_string(l);
    NCPoly lhs = qshuf(w * g_word(k + 1), w2 * g_word(l + 1));
    NCPoly rhs = (qshuf(w * g_word(k), w2 * g_word(l + 1)) +
                  qshuf(w * g_word(k + 1), w2 * g_word(l)) +
                  HPoly::hbar() * qshuf(w * g_word(k), w2 * g_word(l))) *
                 a;
    rep.add_check("eq", lhs == rhs, to_string(lhs), to_string(rhs));
  } else {
    throw UnknownIdentity("unknown identity id: " + id);
  }
  rep.sort_cases();
  return rep;
}

}  // namespace qsmzv

#endif
