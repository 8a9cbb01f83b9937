#pragma once

// Words in finitely many letters.  A word is a vector of signed 1-based
// letter indices: +i for the i-th generator, -i for its inverse.  Two letter
// conventions are used: free words (x-letters, with inverses) and involutive
// words (y-letters, where each generator squares to 1 and inverses are
// dropped on reduction).

#include <cassert>
#include <cstdlib>
#include <vector>

namespace braidrep {

using Word = std::vector<int>;

inline Word w_inv(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

inline Word w_mul(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline Word w_commutator(const Word& a, const Word& b) {
  return w_mul(w_mul(a, b), w_mul(w_inv(a), w_inv(b)));
}

inline void w_free_reduce(Word& w) {
  Word out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  w = out;
}

// Reduction in the quotient where every letter is an involution: signs are
// irrelevant and equal neighbours cancel.
inline Word h_reduce(const Word& w) {
  Word out;
  for (int l : w) {
    int a = std::abs(l);
    if (!out.empty() && out.back() == a)
      out.pop_back();
    else
      out.push_back(a);
  }
  return out;
}

// Braid substitution on involutive y-words (2g+1 letters):
//   sigma_l:      y_l -> y_{l+1},  y_{l+1} -> y_{l+1} y_l y_{l+1}
//   sigma_l^{-1}: y_l -> y_l y_{l+1} y_l,  y_{l+1} -> y_l
inline Word braid_sub_y(const Word& w, int l, bool inverse = false) {
  Word out;
  for (int s : w) {
    int a = std::abs(s);
    if (!inverse) {
      if (a == l) {
        out.push_back(l + 1);
      } else if (a == l + 1) {
        out.push_back(l + 1);
        out.push_back(l);
        out.push_back(l + 1);
      } else {
        out.push_back(a);
      }
    } else {
      if (a == l) {
        out.push_back(l);
        out.push_back(l + 1);
        out.push_back(l);
      } else if (a == l + 1) {
        out.push_back(l);
      } else {
        out.push_back(a);
      }
    }
  }
  return h_reduce(out);
}

// y_1 y_2 ... y_{2g+1}.
inline Word delta_y_word(int g) {
  Word w;
  for (int j = 1; j <= 2 * g + 1; ++j) w.push_back(j);
  return w;
}

// The boundary class in x-letters: x_1 x_3 ... x_{2g-1} (x_1...x_{2g})^{-1}
// x_2 x_4 ... x_{2g}.
inline Word delta_sq_word(int g) {
  Word odd, all, even;
  for (int i = 1; i <= 2 * g; i += 2) odd.push_back(i);
  for (int i = 1; i <= 2 * g; ++i) all.push_back(i);
  for (int i = 2; i <= 2 * g; i += 2) even.push_back(i);
  Word w = w_mul(w_mul(odd, w_inv(all)), even);
  w_free_reduce(w);
  return w;
}

// Genus-standard generators: a_1 = x_1, a_{2i} = x_{2i}^{-1},
// a_{2i+1} = (x_2 x_4 ... x_{2i})^{-1} x_1 x_2 ... x_{2i+1}.
inline Word a_word(int g, int j) {
  assert(1 <= j && j <= 2 * g);
  if (j == 1) return {1};
  if (j % 2 == 0) return {-j};
  int i = (j - 1) / 2;
  Word even, run;
  for (int k = 2; k <= 2 * i; k += 2) even.push_back(k);
  for (int k = 1; k <= 2 * i + 1; ++k) run.push_back(k);
  Word w = w_mul(w_inv(even), run);
  w_free_reduce(w);
  return w;
}

}  // namespace braidrep
