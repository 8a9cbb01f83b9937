#pragma once

// Finite Heisenberg-type group of exponent p on 2g generators, and its
// index-2 extension by the hyperelliptic involution.
//
// Base group: generators x_1..x_{2g} and central c, relations x_i^p = 1,
// [x_i, x_j] = c^{omega(i,j)} with omega(i,j) = j - i when |i - j| = 1 and 0
// otherwise.  Every element has the normal form x_1^{n_1}...x_{2g}^{n_{2g}}
// c^m, so the group has order p^{2g+1}.  Multiplication in normal form:
//
//   (x^a c^mu)(x^b c^nu) = x^{a+b} c^{mu+nu - sum_{j=1}^{2g-1} a_{j+1} b_j}
//
// since only adjacent generators fail to commute.

#include <cassert>
#include <cstdint>
#include <vector>

#include "braidrep/numtheory.hpp"
#include "braidrep/words.hpp"

namespace braidrep {

class HeisGroup {
 public:
  HeisGroup(long p, int two_g) : p_(p), ng_(two_g) {
    assert(p >= 3 && two_g >= 2 && two_g % 2 == 0);
    std::uint64_t s = 1;
    for (int i = 0; i <= ng_; ++i) {
      s *= static_cast<std::uint64_t>(p_);
      assert(s < (1ull << 31));
    }
    size_ = static_cast<std::uint32_t>(s);
  }

  long p() const { return p_; }
  int num_gens() const { return ng_; }
  std::uint32_t size() const { return size_; }
  static constexpr std::uint32_t id = 0;

  std::uint32_t encode(const std::vector<long>& n, long m) const {
    assert(static_cast<int>(n.size()) == ng_);
    std::uint64_t idx = 0;
    for (int i = ng_ - 1; i >= 0; --i) idx = idx * p_ + smod(n[i], p_);
    return static_cast<std::uint32_t>(idx * p_ + smod(m, p_));
  }

  // Exponent of x_i (1-based) in the normal form.
  long x_exp(std::uint32_t a, int i) const {
    assert(1 <= i && i <= ng_);
    std::uint64_t t = a / p_;
    for (int k = 1; k < i; ++k) t /= p_;
    return static_cast<long>(t % p_);
  }

  long c_exp(std::uint32_t a) const { return static_cast<long>(a % p_); }

  std::uint32_t gen(int i) const {
    assert(1 <= i && i <= ng_);
    std::uint64_t idx = 1;
    for (int k = 0; k < i; ++k) idx *= p_;
    return static_cast<std::uint32_t>(idx);
  }

  std::uint32_t central() const { return 1; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    long m = static_cast<long>(a % p_) + static_cast<long>(b % p_);
    std::uint64_t ra = a / p_, rb = b / p_;
    std::uint64_t idx = 0, pw = 1;
    long prev_b = 0;
    for (int j = 1; j <= ng_; ++j) {
      long aj = static_cast<long>(ra % p_), bj = static_cast<long>(rb % p_);
      ra /= p_;
      rb /= p_;
      m -= aj * prev_b;
      prev_b = bj;
      idx += pw * static_cast<std::uint64_t>(smod(aj + bj, p_));
      pw *= p_;
    }
    return static_cast<std::uint32_t>(idx * p_ + smod(m, p_));
  }

  std::uint32_t inv(std::uint32_t a) const {
    long m = -static_cast<long>(a % p_);
    std::uint64_t ra = a / p_;
    std::uint64_t idx = 0, pw = 1;
    long prev = 0;
    for (int j = 1; j <= ng_; ++j) {
      long aj = static_cast<long>(ra % p_);
      ra /= p_;
      m -= aj * prev;
      prev = aj;
      idx += pw * static_cast<std::uint64_t>(smod(-aj, p_));
      pw *= p_;
    }
    return static_cast<std::uint32_t>(idx * p_ + smod(m, p_));
  }

  std::uint32_t pow(std::uint32_t a, long e) const {
    if (e < 0) return pow(inv(a), -e);
    std::uint32_t r = id;
    for (long k = 0; k < e; ++k) r = mul(r, a);
    return r;
  }

  // Word in signed x-letters (+-1..+-2g).
  std::uint32_t eval_x_word(const Word& w) const {
    std::uint32_t r = id;
    for (int l : w) {
      assert(l != 0 && std::abs(l) <= ng_);
      std::uint32_t g = gen(std::abs(l));
      r = mul(r, l > 0 ? g : inv(g));
    }
    return r;
  }

  bool is_central_power(std::uint32_t a) const {
    for (int i = 1; i <= ng_; ++i)
      if (x_exp(a, i) != 0) return false;
    return true;
  }

  long conjugacy_class_count() const {
    std::vector<char> seen(size_, 0);
    long classes = 0;
    for (std::uint32_t a = 0; a < size_; ++a) {
      if (seen[a]) continue;
      ++classes;
      for (std::uint32_t g = 0; g < size_; ++g)
        seen[mul(mul(g, a), inv(g))] = 1;
    }
    return classes;
  }

 private:
  long p_;
  int ng_;
  std::uint32_t size_;
};

// Word in x-letters evaluating to a given element (normal form read off the
// encoding, with c spelled as the commutator [x_1, x_2]).
inline Word heis_section_word(const HeisGroup& grp, std::uint32_t a) {
  Word w;
  for (int i = 1; i <= grp.num_gens(); ++i)
    for (long k = 0; k < grp.x_exp(a, i); ++k) w.push_back(i);
  Word cw = w_commutator({1}, {2});
  for (long k = 0; k < grp.c_exp(a); ++k) w.insert(w.end(), cw.begin(), cw.end());
  return w;
}

// Index-2 extension: elements (a, eps) with a in the base group and
// eps in {0,1}, multiplication (a,eps)(b,delta) = (a sigma^eps(b), eps+delta)
// where sigma is the involution sending x_j to w_{j-1} x_j^{-1} w_{j-1}^{-1}
// with w_j = x_1...x_j (so sigma(w_j) = w_j^{-1} and sigma(c) = c).
//
// The odd part represents the sheet-exchanging symmetries; the preferred
// lifts of the involutive generators are rho_y(j) = (w_{j-1}^{-1}, 1), which
// square to 1 and satisfy rho_y(j) rho_y(j+1) = (x_j, 0).
class ExtGroup {
 public:
  explicit ExtGroup(const HeisGroup& base) : base_(base) {
    build_sigma();
    build_rho();
  }

  const HeisGroup& base() const { return base_; }
  std::uint32_t size() const { return 2 * base_.size(); }
  static constexpr std::uint32_t id = 0;

  std::uint32_t from_base(std::uint32_t a, int eps) const {
    return a + (eps ? base_.size() : 0);
  }
  std::uint32_t base_part(std::uint32_t e) const { return e % base_.size(); }
  int eps(std::uint32_t e) const { return e >= base_.size() ? 1 : 0; }

  std::uint32_t sigma(std::uint32_t a) const { return sigma_[a]; }

  std::uint32_t mul(std::uint32_t e, std::uint32_t f) const {
    std::uint32_t a = base_part(e), b = base_part(f);
    int ea = eps(e), eb = eps(f);
    if (ea) b = sigma_[b];
    return from_base(base_.mul(a, b), ea ^ eb);
  }

  std::uint32_t inv(std::uint32_t e) const {
    std::uint32_t a = base_.inv(base_part(e));
    return eps(e) ? from_base(sigma_[a], 1) : from_base(a, 0);
  }

  // Image of the involutive generator y_j, 1 <= j <= 2g+1.
  std::uint32_t rho_y(int j) const {
    assert(1 <= j && j <= base_.num_gens() + 1);
    return rho_y_[j - 1];
  }

  // Word in y-letters (signs ignored: each generator is an involution).
  std::uint32_t eval_y_word(const Word& w) const {
    std::uint32_t r = id;
    for (int l : w) r = mul(r, rho_y(std::abs(l)));
    return r;
  }

  // Automorphism induced by the braid generator sigma_l (or its inverse) as
  // a full lookup table over this group.
  std::vector<std::uint32_t> braid_table(int l, bool inverse = false) const {
    int ng = base_.num_gens();
    assert(1 <= l && l <= ng);
    // Images of the base generators x_j = y_j y_{j+1}.
    std::vector<std::uint32_t> bx(ng + 1);
    for (int j = 1; j <= ng; ++j) {
      std::uint32_t im = eval_y_word(braid_sub_y({j, j + 1}, l, inverse));
      assert(eps(im) == 0);
      bx[j] = base_part(im);
    }
    std::uint32_t bc = base_.mul(
        base_.mul(bx[1], bx[2]), base_.mul(base_.inv(bx[1]), base_.inv(bx[2])));
    assert(bc == base_.central());
    std::uint32_t odd = eval_y_word(braid_sub_y({1}, l, inverse));
    assert(eps(odd) == 1);

    std::vector<std::uint32_t> table(size());
    for (std::uint32_t a = 0; a < base_.size(); ++a) {
      std::uint32_t im = base_.pow(base_.central(), base_.c_exp(a));
      for (int j = 1; j <= ng; ++j)
        im = base_.mul(im, base_.pow(bx[j], base_.x_exp(a, j)));
      table[from_base(a, 0)] = from_base(im, 0);
      table[from_base(a, 1)] = mul(from_base(im, 0), odd);
    }
    return table;
  }

 private:
  void build_sigma() {
    int ng = base_.num_gens();
    // sigma(x_j) = w_{j-1} x_j^{-1} w_{j-1}^{-1}.
    std::vector<std::uint32_t> sx(ng + 1);
    std::uint32_t w = base_.id;
    for (int j = 1; j <= ng; ++j) {
      std::uint32_t xj = base_.gen(j);
      sx[j] = base_.mul(base_.mul(w, base_.inv(xj)), base_.inv(w));
      w = base_.mul(w, xj);
    }
    std::uint32_t sc = base_.mul(base_.mul(sx[1], sx[2]),
                                 base_.mul(base_.inv(sx[1]), base_.inv(sx[2])));
    assert(sc == base_.central());
    sigma_.resize(base_.size());
    for (std::uint32_t a = 0; a < base_.size(); ++a) {
      std::uint32_t im = base_.pow(base_.central(), base_.c_exp(a));
      for (int j = 1; j <= ng; ++j)
        im = base_.mul(im, base_.pow(sx[j], base_.x_exp(a, j)));
      sigma_[a] = im;
    }
    for (std::uint32_t a = 0; a < base_.size(); ++a)
      assert(sigma_[sigma_[a]] == a);
  }

  void build_rho() {
    int ng = base_.num_gens();
    rho_y_.resize(ng + 1);
    std::uint32_t w = base_.id;
    for (int j = 1; j <= ng + 1; ++j) {
      rho_y_[j - 1] = from_base(base_.inv(w), 1);
      if (j <= ng) w = base_.mul(w, base_.gen(j));
    }
    for (int j = 1; j <= ng + 1; ++j)
      assert(mul(rho_y(j), rho_y(j)) == id);
    for (int j = 1; j <= ng; ++j)
      assert(mul(rho_y(j), rho_y(j + 1)) == from_base(base_.gen(j), 0));
  }

  HeisGroup base_;
  std::vector<std::uint32_t> sigma_;
  std::vector<std::uint32_t> rho_y_;
};

}  // namespace braidrep
