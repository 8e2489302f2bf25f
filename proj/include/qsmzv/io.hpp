#ifndef QSMZV_IO_HPP
#define QSMZV_IO_HPP

#include <string>

#include "qsmzv/freealg.hpp"
#include "qsmzv/classical.hpp"

namespace qsmzv {

inline std::string index_to_string(const Index& k) {
  std::string s = "(";
  for (size_t i = 0; i < k.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(k[i]);
  }
  return s + ")";
}

namespace detail {

inline std::string coeff_prefix(const HPoly& c, bool word_follows) {
  bool simple = c.is_constant() || (c.degree() >= 0 && [&] {
                  // single monomial in h
                  int nz = 0;
                  for (int d = 0; d <= c.degree(); ++d) nz += !c.coeff(d).is_zero();
                  return nz == 1;
                }());
  std::string cs = c.to_string();
  if (!word_follows) return simple ? cs : "(" + cs + ")";
  if (c == HPoly(1)) return "";
  if (c == HPoly(-1)) return "-";
  return (simple ? cs : "(" + cs + ")") + "*";
}

inline std::string aword_to_string(const AWord& w) {
  if (w.empty()) return "1";
  std::string s;
  size_t i = 0;
  while (i < w.size()) {
    if (!s.empty()) s += "*";
    if (w[i] == kH) {
      s += "H";
      ++i;
    } else {
      s += "g[";
      bool first = true;
      while (i < w.size() && w[i] != kH) {
        if (!first) s += ",";
        s += std::to_string(w[i]);
        first = false;
        ++i;
      }
      s += "]";
    }
  }
  return s;
}

inline std::string raw_word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (char l : w) {
    if (!s.empty()) s += "*";
    s += l;
  }
  return s;
}

}  // namespace detail

// Prints in the expression-language syntax; A-syntax when the polynomial lies
// in C<A>, raw letters otherwise.
inline std::string to_string(const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool in_A = in_subalgebra_A(p);
  auto emit = [&s](const std::string& coeff, const std::string& word) {
    std::string term = coeff + word;
    if (s.empty()) {
      s = term;
      return;
    }
    if (!term.empty() && term[0] == '-') s += " - " + term.substr(1);
    else s += " + " + term;
  };
  if (in_A) {
    for (auto& [w, c] : to_A_basis(p)) {
      bool unit_word = w.empty();
      emit(detail::coeff_prefix(c, !unit_word), unit_word ? "" : detail::aword_to_string(w));
    }
  } else {
    for (auto& [w, c] : p.terms()) {
      bool unit_word = w.empty();
      emit(detail::coeff_prefix(c, !unit_word), unit_word ? "" : detail::raw_word_to_string(w));
    }
  }
  return s;
}

inline std::string to_string(const ClassicalPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool h1 = in_h1(p);
  for (auto& [w, c] : p.terms()) {
    std::string word;
    if (w.empty()) word = "";
    else if (h1) {
      word = "z[";
      Index k = zword_to_index(w);
      for (size_t i = 0; i < k.size(); ++i) {
        if (i) word += ",";
        word += std::to_string(k[i]);
      }
      word += "]";
    } else {
      for (char l : w) {
        if (!word.empty()) word += "*";
        word += l;
      }
    }
    std::string coeff;
    if (word.empty()) coeff = c.to_string();
    else if (c == Rational(1)) coeff = "";
    else if (c == Rational(-1)) coeff = "-";
    else coeff = c.to_string() + "*";
    std::string term = coeff + word;
    if (s.empty()) s = term;
    else if (!term.empty() && term[0] == '-') s += " - " + term.substr(1);
    else s += " + " + term;
  }
  return s;
}

}  // namespace qsmzv

#endif
