#ifndef QSMZV_HPOLY_HPP
#define QSMZV_HPOLY_HPP

#include <utility>
#include <vector>

#include "qsmzv/rational.hpp"

namespace qsmzv {

// Element of the coefficient ring Q[h], stored dense by degree in h.
// Here h is the formal deformation parameter that evaluates to 1-q.
class HPoly {
public:
  HPoly() = default;
  HPoly(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }
  HPoly(long n) : HPoly(Rational(n)) {}
  HPoly(int n) : HPoly(Rational(n)) {}

  static HPoly hbar(int power = 1) {
    HPoly p;
    p.c_.assign(static_cast<size_t>(power) + 1, Rational(0));
    p.c_.back() = Rational(1);
    return p;
  }
  // c * h^d
  static HPoly monomial(const Rational& c, int d) {
    HPoly p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<size_t>(d) + 1, Rational(0));
    p.c_.back() = c;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Rational coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(d)];
  }
  Rational constant_term() const { return coeff(0); }
  bool is_constant() const { return c_.size() <= 1; }

  HPoly& operator+=(const HPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  HPoly& operator-=(const HPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  HPoly operator-() const {
    HPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }

  friend HPoly operator*(const HPoly& a, const HPoly& b) {
    HPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }
  HPoly& operator*=(const HPoly& o) { return *this = *this * o; }

  friend bool operator==(const HPoly& a, const HPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const HPoly& a, const HPoly& b) { return !(a == b); }
  friend bool operator<(const HPoly& a, const HPoly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
  }

  // p(x), exact.
  Rational eval_at(const Rational& x) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }
  double eval_at(double x) const {
    double r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i].to_double();
    return r;
  }

  // Returns true and the quotient when h divides p.
  std::pair<bool, HPoly> divide_hbar() const {
    if (is_zero()) return {true, HPoly()};
    if (!c_[0].is_zero()) return {false, HPoly()};
    HPoly q;
    q.c_.assign(c_.begin() + 1, c_.end());
    return {true, q};
  }
  bool hbar_divisible() const { return is_zero() || c_[0].is_zero(); }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (size_t d = 0; d < c_.size(); ++d) {
      const Rational& c = c_[d];
      if (c.is_zero()) continue;
      if (!first) s += c.sign() < 0 ? " - " : " + ";
      Rational a = first ? c : c.abs();
      first = false;
      if (d == 0) {
        s += a.to_string();
      } else {
        if (a != Rational(1)) {
          if (a == Rational(-1)) s += "-";
          else s += a.to_string() + "*";
        }
        s += d == 1 ? "h" : "h^" + std::to_string(d);
      }
    }
    return s;
  }

private:
  std::vector<Rational> c_;
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
};

// p(1-q): the evaluation that sends h to 1-q.
inline Rational hbar_eval(const HPoly& p, const Rational& q) {
  return p.eval_at(Rational(1) - q);
}

inline std::pair<bool, HPoly> hbar_divides(const HPoly& p) { return p.divide_hbar(); }

}  // namespace qsmzv

#endif
