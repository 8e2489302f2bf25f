#ifndef QSMZV_WORD_POLY_HPP
#define QSMZV_WORD_POLY_HPP

#include <functional>
#include <map>
#include <utility>

#include "qsmzv/hpoly.hpp"
#include "qsmzv/word.hpp"

namespace qsmzv {

// Element of a free algebra: finite map word -> coefficient, no zero
// coefficients stored, terms ordered length-then-lexicographically.
template <typename Coeff>
class WordPoly {
public:
  using Terms = std::map<Word, Coeff, LenLexLess>;

  WordPoly() = default;
  explicit WordPoly(const Coeff& c) {
    if (!c.is_zero()) t_[Word()] = c;
  }
  static WordPoly one() { return WordPoly(Coeff(1)); }
  static WordPoly monomial(const Word& w, const Coeff& c = Coeff(1)) {
    WordPoly p;
    if (!c.is_zero()) p.t_[w] = c;
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  const Terms& terms() const { return t_; }
  Coeff coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? Coeff(0) : it->second;
  }
  int max_word_length() const {
    return t_.empty() ? 0 : static_cast<int>(t_.rbegin()->first.size());
  }

  void add_term(const Word& w, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  WordPoly& operator+=(const WordPoly& o) {
    for (auto& [w, c] : o.t_) add_term(w, c);
    return *this;
  }
  WordPoly& add_scaled(const WordPoly& o, const Coeff& s) {
    if (s.is_zero()) return *this;
    for (auto& [w, c] : o.t_) add_term(w, c * s);
    return *this;
  }
  WordPoly& operator-=(const WordPoly& o) {
    for (auto& [w, c] : o.t_) add_term(w, -c);
    return *this;
  }
  friend WordPoly operator+(WordPoly a, const WordPoly& b) { return a += b; }
  friend WordPoly operator-(WordPoly a, const WordPoly& b) { return a -= b; }
  WordPoly operator-() const {
    WordPoly r;
    for (auto& [w, c] : t_) r.t_[w] = -c;
    return r;
  }

  WordPoly& scale(const Coeff& c) {
    if (c.is_zero()) {
      t_.clear();
      return *this;
    }
    for (auto& [w, cc] : t_) cc *= c;
    return *this;
  }
  friend WordPoly operator*(const Coeff& c, WordPoly p) { return p.scale(c); }

  // Concatenation product.
  friend WordPoly operator*(const WordPoly& a, const WordPoly& b) {
    WordPoly r;
    for (auto& [wa, ca] : a.t_)
      for (auto& [wb, cb] : b.t_) r.add_term(wa + wb, ca * cb);
    return r;
  }
  WordPoly& operator*=(const WordPoly& o) { return *this = *this * o; }

  WordPoly append_letter(char l) const {
    WordPoly r;
    for (auto& [w, c] : t_) r.t_[w + l] = c;
    return r;
  }

  friend bool operator==(const WordPoly& a, const WordPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const WordPoly& a, const WordPoly& b) { return !(a == b); }
  friend bool operator<(const WordPoly& a, const WordPoly& b) { return a.t_ < b.t_; }

private:
  Terms t_;
};

using NCPoly = WordPoly<HPoly>;          // over Q[h], letters a, b
using ClassicalPoly = WordPoly<Rational>;  // over Q, letters x, y

inline NCPoly hbar_times(const NCPoly& p) {
  NCPoly r;
  for (auto& [w, c] : p.terms()) r.add_term(w, HPoly::hbar() * c);
  return r;
}

}  // namespace qsmzv

#endif
