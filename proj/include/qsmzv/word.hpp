#ifndef QSMZV_WORD_HPP
#define QSMZV_WORD_HPP

#include <string>
#include <vector>

namespace qsmzv {

// Words over a two-letter alphabet are plain strings: 'a'/'b' on the q side,
// 'x'/'y' on the classical side. The empty word is the unit.
using Word = std::string;

// Length-then-lexicographic order ('a' < 'b', 'x' < 'y').
struct LenLexLess {
  bool operator()(const Word& u, const Word& v) const {
    if (u.size() != v.size()) return u.size() < v.size();
    return u < v;
  }
};

// Letter of the alphabet A: 0 encodes hb (= e1 - g1), k >= 1 encodes g_k (= b a^k).
using ALetter = int;
inline constexpr ALetter kH = 0;

using AWord = std::vector<ALetter>;

inline int aword_weight(const AWord& w) {
  int s = 0;
  for (ALetter l : w) s += l == kH ? 1 : l;
  return s;
}
inline int aword_depth(const AWord& w) { return static_cast<int>(w.size()); }

// Expansion into the (a,b)-word underlying an A-word; the coefficient picks up
// one factor of h per H letter (handled by the caller).
inline Word aword_expand(const AWord& w) {
  Word r;
  for (ALetter l : w) {
    r += 'b';
    r.append(static_cast<size_t>(l), 'a');
  }
  return r;
}

inline int aword_hbar_count(const AWord& w) {
  int n = 0;
  for (ALetter l : w) n += l == kH;
  return n;
}

struct AWordLess {
  bool operator()(const AWord& u, const AWord& v) const {
    if (u.size() != v.size()) return u.size() < v.size();
    return u < v;
  }
};

}  // namespace qsmzv

#endif
