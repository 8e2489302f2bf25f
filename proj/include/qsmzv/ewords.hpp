#ifndef QSMZV_EWORDS_HPP
#define QSMZV_EWORDS_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "qsmzv/qproducts.hpp"

namespace qsmzv {

// E_{1^m}: symmetrized sh_h powers of g_1 and e_1, normalized by (m+1)!.
inline const NCPoly& E_ones(int m) {
  static std::map<int, NCPoly> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  NCPoly sum;
  std::vector<NCPoly> gpow{NCPoly::one()}, epow{NCPoly::one()};
  for (int j = 1; j <= m; ++j) {
    gpow.push_back(qshuf(gpow.back(), g_word(1)));
    epow.push_back(qshuf(epow.back(), e_word(1)));
  }
  for (int j = 0; j <= m; ++j) sum += qshuf(gpow[static_cast<size_t>(j)], epow[static_cast<size_t>(m - j)]);
  Rational inv = Rational(1) / factorial(m + 1);
  NCPoly r = HPoly(inv) * sum;
  return cache[m] = r;
}

// E_k = E_{1^{s0}} e_{t1+2} E_{1^{s1}} ... e_{tr+2} E_{1^{sr}} from the shape of k.
inline const NCPoly& E_index(const Index& k) {
  static std::map<Index, NCPoly> cache;
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;

  NCPoly r = NCPoly::one();
  if (!k.empty()) {
    EShape sh = e_shape(k);
    r = E_ones(sh.s0);
    for (auto [t, s] : sh.blocks) {
      r *= e_word(t + 2);
      r *= E_ones(s);
    }
  }
  return cache[k] = r;
}

struct EBasisDecomp {
  std::map<Index, HPoly> coeffs;
  NCPoly residual;  // zero iff p lies in the span of the candidate E_m
  bool exact() const { return residual.is_zero(); }
};

namespace detail {

inline std::map<Word, Rational> mod_hbar(const NCPoly& p) {
  std::map<Word, Rational> r;
  for (auto& [w, c] : p.terms()) {
    Rational c0 = c.constant_term();
    if (!c0.is_zero()) r[w] = c0;
  }
  return r;
}

// Exact Gaussian elimination for A c = b; returns false if inconsistent.
// A is rows x cols, column-major candidate matrix.
struct RatSystem {
  std::vector<std::vector<Rational>> rows;  // each of size cols
  size_t cols = 0;

  bool solve(std::vector<Rational> b, std::vector<Rational>& c) const {
    auto m = rows;
    size_t nr = m.size();
    std::vector<int> pivot_col(nr, -1);
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < nr; ++col) {
      size_t piv = rank;
      while (piv < nr && m[piv][col].is_zero()) ++piv;
      if (piv == nr) continue;
      std::swap(m[piv], m[rank]);
      std::swap(b[piv], b[rank]);
      Rational inv = Rational(1) / m[rank][col];
      for (size_t j = col; j < cols; ++j) m[rank][j] *= inv;
      b[rank] *= inv;
      for (size_t i = 0; i < nr; ++i) {
        if (i == rank || m[i][col].is_zero()) continue;
        Rational f = m[i][col];
        for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        b[i] -= f * b[rank];
      }
      pivot_col[rank] = static_cast<int>(col);
      ++rank;
    }
    for (size_t i = rank; i < nr; ++i)
      if (!b[i].is_zero()) return false;
    c.assign(cols, Rational(0));
    for (size_t i = 0; i < rank; ++i) c[static_cast<size_t>(pivot_col[i])] = b[i];
    return true;
  }
};

}  // namespace detail

// Express p in the basis {E_m : wt(m) <= wt_max, dep(m) <= dep_max}. Both
// bounds default to the maximal (a,b)-word length of p; candidates with
// wt+dep beyond that length can never contribute (E_m is homogeneous for
// the grading word-length + h-degree) and are dropped.
inline EBasisDecomp decompose_E(const NCPoly& p, int wt_max = -1, int dep_max = -1) {
  to_A_basis(p);  // propagate NotInSubalgebra up front
  EBasisDecomp out;
  out.residual = p;
  if (p.is_zero()) return out;

  int maxlen = p.max_word_length();
  if (wt_max < 0) wt_max = maxlen;
  if (dep_max < 0) dep_max = maxlen;

  // constants are multiples of E_empty = 1
  HPoly c0 = out.residual.coeff(Word());
  if (!c0.is_zero()) {
    out.coeffs[Index{}] = c0;
    out.residual -= NCPoly(c0);
  }

  // candidates grouped by s = wt + dep; their mod-h parts live on words of length s
  std::map<int, std::vector<Index>> groups;
  for (int w = 0; w <= wt_max; ++w)
    for (auto& k : compositions(w)) {
      int s = w + depth(k);
      if (depth(k) <= dep_max && s <= maxlen && s >= 1) groups[s].push_back(k);
    }

  int total_deg = 0;
  for (auto& [w, c] : p.terms())
    total_deg = std::max(total_deg, static_cast<int>(w.size()) + std::max(c.degree(), 0));

  struct Group {
    std::vector<Index> cand;
    std::vector<Word> words;
    std::map<Word, size_t> word_row;
    detail::RatSystem sys;
  };
  std::map<int, Group> solvers;
  for (auto& [s, cand] : groups) {
    Group g;
    g.cand = cand;
    std::vector<std::map<Word, Rational>> cols;
    for (auto& k : cand) {
      cols.push_back(detail::mod_hbar(E_index(k)));
      for (auto& [w, c] : cols.back())
        if (!g.word_row.count(w)) {
          g.word_row[w] = g.words.size();
          g.words.push_back(w);
        }
    }
    g.sys.cols = cand.size();
    g.sys.rows.assign(g.words.size(), std::vector<Rational>(cand.size(), Rational(0)));
    for (size_t j = 0; j < cols.size(); ++j)
      for (auto& [w, c] : cols[j]) g.sys.rows[g.word_row[w]][j] = c;
    solvers[s] = std::move(g);
  }

  for (int d = 0; d <= total_deg; ++d) {
    // layer d of the residual, split by word length
    std::map<int, std::map<Word, Rational>> layer;
    for (auto& [w, c] : out.residual.terms()) {
      Rational cd = c.coeff(d);
      if (!cd.is_zero()) layer[static_cast<int>(w.size())][w] = cd;
    }
    for (auto& [s, entries] : layer) {
      auto it = solvers.find(s);
      if (it == solvers.end()) continue;  // stays in the residual
      Group& g = it->second;
      bool representable = true;
      for (auto& [w, c] : entries)
        if (!g.word_row.count(w)) {
          representable = false;
          break;
        }
      if (!representable) continue;
      std::vector<Rational> b(g.words.size(), Rational(0));
      for (auto& [w, c] : entries) b[g.word_row[w]] = c;
      std::vector<Rational> c;
      if (!g.sys.solve(b, c)) continue;
      for (size_t j = 0; j < g.cand.size(); ++j) {
        if (c[j].is_zero()) continue;
        HPoly term = HPoly::monomial(c[j], d);
        auto [cit, ins] = out.coeffs.emplace(g.cand[j], term);
        if (!ins) cit->second += term;
        out.residual -= term * E_index(g.cand[j]);
      }
    }
  }
  for (auto cit = out.coeffs.begin(); cit != out.coeffs.end();)
    cit = cit->second.is_zero() ? out.coeffs.erase(cit) : std::next(cit);
  return out;
}

}  // namespace qsmzv

#endif
