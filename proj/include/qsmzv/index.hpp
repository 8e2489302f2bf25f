#ifndef QSMZV_INDEX_HPP
#define QSMZV_INDEX_HPP

#include <algorithm>
#include <vector>

#include "qsmzv/rational.hpp"
#include "qsmzv/word.hpp"

namespace qsmzv {

// Tuple of positive integers; the empty tuple is allowed (weight/depth zero).
using Index = std::vector<int>;

inline int weight(const Index& k) {
  int s = 0;
  for (int p : k) s += p;
  return s;
}
inline int depth(const Index& k) { return static_cast<int>(k.size()); }
inline Index reversal(const Index& k) { return Index(k.rbegin(), k.rend()); }
inline bool admissible(const Index& k) { return k.empty() || k.back() >= 2; }

struct IndexStats {
  int wt;
  int dep;
  Index rev;
  bool admissible;
};

inline IndexStats index_stats(const Index& k) {
  return IndexStats{weight(k), depth(k), reversal(k), admissible(k)};
}

// z-word of an index: z_k = y x^{k-1}, concatenated.
inline Word index_to_zword(const Index& k) {
  Word w;
  for (int p : k) {
    w += 'y';
    w.append(static_cast<size_t>(p - 1), 'x');
  }
  return w;
}

// Inverse of index_to_zword; requires the word to start with 'y' (or be empty).
inline Index zword_to_index(const Word& w) {
  Index k;
  for (char c : w) {
    if (c == 'y') k.push_back(1);
    else {
      if (k.empty()) throw Error("zword_to_index: word starts with x");
      ++k.back();
    }
  }
  return k;
}

// Hoffman dual: write z_k = y w, then z_{k_dual} = y tau(w) with tau swapping x and y.
inline Index hoffman_dual(const Index& k) {
  if (k.empty()) return {};
  Word zw = index_to_zword(k);
  Word dual = "y";
  for (size_t i = 1; i < zw.size(); ++i) dual += zw[i] == 'x' ? 'y' : 'x';
  return zword_to_index(dual);
}

// Unique decomposition k = (1^{s0}, t1+2, 1^{s1}, ..., tr+2, 1^{sr}).
struct EShape {
  int s0 = 0;
  std::vector<std::pair<int, int>> blocks;  // (t_i, s_i)
};

inline EShape e_shape(const Index& k) {
  if (k.empty()) throw Error("e_shape: empty index");
  EShape sh;
  size_t i = 0;
  while (i < k.size() && k[i] == 1) { ++sh.s0; ++i; }
  while (i < k.size()) {
    int t = k[i] - 2;
    ++i;
    int s = 0;
    while (i < k.size() && k[i] == 1) { ++s; ++i; }
    sh.blocks.emplace_back(t, s);
  }
  return sh;
}

inline Index e_shape_assemble(const EShape& sh) {
  Index k(static_cast<size_t>(sh.s0), 1);
  for (auto [t, s] : sh.blocks) {
    k.push_back(t + 2);
    k.insert(k.end(), static_cast<size_t>(s), 1);
  }
  return k;
}

// All indices of weight exactly w (compositions), in lexicographic order.
inline std::vector<Index> compositions(int w) {
  std::vector<Index> out;
  if (w == 0) {
    out.push_back({});
    return out;
  }
  for (int first = 1; first <= w; ++first)
    for (const Index& rest : compositions(w - first)) {
      Index k{first};
      k.insert(k.end(), rest.begin(), rest.end());
      out.push_back(k);
    }
  return out;
}

inline std::vector<Index> indices_up_to_weight(int wmax) {
  std::vector<Index> out;
  for (int w = 0; w <= wmax; ++w)
    for (auto& k : compositions(w)) out.push_back(k);
  return out;
}

// All A-words of weight exactly w (H counts 1, g_k counts k), optionally depth-capped.
inline std::vector<AWord> awords_of_weight(int w, int dep_max = -1) {
  std::vector<AWord> out;
  if (w == 0) {
    out.push_back({});
    return out;
  }
  if (dep_max == 0) return out;
  int next_cap = dep_max < 0 ? -1 : dep_max - 1;
  for (int first = 1; first <= w; ++first) {
    auto tails = awords_of_weight(w - first, next_cap);
    for (const AWord& rest : tails) {
      if (first == 1) {
        AWord h{kH};
        h.insert(h.end(), rest.begin(), rest.end());
        out.push_back(h);
      }
      AWord g{first};
      g.insert(g.end(), rest.begin(), rest.end());
      out.push_back(g);
    }
  }
  return out;
}

inline std::vector<AWord> awords_up_to_weight(int wmax, int dep_max = -1) {
  std::vector<AWord> out;
  for (int w = 0; w <= wmax; ++w)
    for (auto& a : awords_of_weight(w, dep_max)) out.push_back(a);
  return out;
}

}  // namespace qsmzv

#endif
