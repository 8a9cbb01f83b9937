#pragma once

// The weight-eta module V of the finite Heisenberg group (dimension p^g), its
// dual, the braid operators Psi_l on both, and the extended module
// L = V (x) <u_1,...,u_2g> carrying the lifted operators Psi-hat_l together
// with their multiplicative Jordan parts and closed-form spectral data.
//
// Index conventions.  V has basis e_j, j in (Z/p)^g, packed by PowIndex.
// The group acts on V on the right:
//   e_j . x_{2k-1} = eta^{j_k} e_j,
//   e_j . x_{2k}   = e_{j - e_k + e_{k+1}},   e_j . c = eta e_j,
// with the out-of-range coordinate e_{g+1} dropped.  The dual V* has basis
// e'_i with the left action x_{2k-1} e'_i = eta^{i_k} e'_i,
// x_{2k} e'_i = e'_{i + e_k - e_{k+1}}, c e'_i = eta e'_i, so that the
// pairing <e_i, e'_j> = delta_{ij} satisfies <v.h, w> = <v, h.w>.
//
// L is indexed by pairs (u-slot l in 1..2g, V-index j) as
// (l-1)*p^g + j.  The lift of Psi_{2k-1} corrects the u_{2k} column by a
// right group-algebra factor sent to the (u_{2k-1} - u_{2k-3}) slots, and the
// lift of Psi_{2k} corrects the u_{2k-1} column into (u_{2k} - u_{2k+2});
// out-of-range u-slots are dropped.

#include <cassert>
#include <cstdint>
#include <vector>

#include "braidrep/cyclotomic.hpp"
#include "braidrep/heisenberg.hpp"
#include "braidrep/indexing.hpp"
#include "braidrep/matrix.hpp"
#include "braidrep/numtheory.hpp"
#include "braidrep/spectral_constants.hpp"
#include "braidrep/words.hpp"

namespace braidrep {

class VModule {
 public:
  VModule(long p, int g) : p_(p), g_(g), ix_(p, g) {}

  long p() const { return p_; }
  int g() const { return g_; }
  const PowIndex& index() const { return ix_; }
  std::uint32_t dim() const { return ix_.size(); }

  // Matrix of v -> v . x_l (signed letter; negative letters act by the
  // inverse generator).  Right action, so R_{ab} = R_b * R_a.
  CycMatrix right_letter(int l) const {
    assert(l != 0 && std::abs(l) <= 2 * g_);
    CycMatrix out(dim(), dim());
    int m = std::abs(l);
    long sgn = l > 0 ? 1 : -1;
    if (m % 2 == 1) {
      int k = (m + 1) / 2;
      for (std::uint32_t j = 0; j < dim(); ++j)
        out.set(j, j, Cyc::eta(p_, sgn * ix_.digit(j, k)));
    } else {
      int k = m / 2;
      for (std::uint32_t j = 0; j < dim(); ++j)
        out.set(ix_.shift(ix_.shift(j, k, -sgn), k + 1, sgn), j, Cyc::one(p_));
    }
    return out;
  }

  CycMatrix right_word(const Word& w) const {
    CycMatrix out = CycMatrix::identity(dim(), p_);
    for (int l : w) out = right_letter(l) * out;
    return out;
  }

  // v -> v . a for a group element in normal form x^n c^m.
  CycMatrix right_elt(const HeisGroup& grp, std::uint32_t a) const {
    assert(grp.p() == p_ && grp.num_gens() == 2 * g_);
    CycMatrix out = Cyc::eta(p_, grp.c_exp(a)) * CycMatrix::identity(dim(), p_);
    for (int i = 1; i <= 2 * g_; ++i)
      for (long r = 0; r < grp.x_exp(a, i); ++r) out = right_letter(i) * out;
    return out;
  }

  // Averaging idempotent (1/p) sum_i (v . x_m^i).
  CycMatrix right_avg(int m) const {
    CycMatrix gen = right_letter(m);
    CycMatrix acc = CycMatrix::identity(dim(), p_);
    CycMatrix pw = acc;
    for (long i = 1; i < p_; ++i) {
      pw = gen * pw;
      acc = acc + pw;
    }
    return Cyc::from_q(p_, Q(1, p_)) * acc;
  }

  // Braid operator Psi_l on V.
  CycMatrix psi(int l) const {
    assert(1 <= l && l <= 2 * g_);
    CycMatrix out(dim(), dim());
    if (l % 2 == 1) {
      int k = (l + 1) / 2;
      for (std::uint32_t j = 0; j < dim(); ++j)
        out.set(j, j, Cyc::eta(p_, tau_q(p_, ix_.digit(j, k))));
    } else {
      int k = l / 2;
      Cyc scale = gauss_sum(p_, Q(1, 2)) * Q(1, p_);
      for (std::uint32_t j = 0; j < dim(); ++j)
        for (long s = 0; s < p_; ++s) {
          Cyc coeff = scale * Cyc::eta_q(p_, -Q((2 * s + 1) * (2 * s + 1), 8));
          out.add_at(ix_.shift(ix_.shift(j, k, s), k + 1, -s), j, coeff);
        }
    }
    return out;
  }

  // Left action x_l . e'_i on the dual basis (signed letter).
  CycMatrix dual_left_letter(int l) const {
    assert(l != 0 && std::abs(l) <= 2 * g_);
    CycMatrix out(dim(), dim());
    int m = std::abs(l);
    long sgn = l > 0 ? 1 : -1;
    if (m % 2 == 1) {
      int k = (m + 1) / 2;
      for (std::uint32_t i = 0; i < dim(); ++i)
        out.set(i, i, Cyc::eta(p_, sgn * ix_.digit(i, k)));
    } else {
      int k = m / 2;
      for (std::uint32_t i = 0; i < dim(); ++i)
        out.set(ix_.shift(ix_.shift(i, k, sgn), k + 1, -sgn), i, Cyc::one(p_));
    }
    return out;
  }

  // Braid operator Psi_l on the dual.
  CycMatrix psi_dual(int l) const {
    assert(1 <= l && l <= 2 * g_);
    CycMatrix out(dim(), dim());
    if (l % 2 == 1) {
      int k = (l + 1) / 2;
      for (std::uint32_t i = 0; i < dim(); ++i)
        out.set(i, i, Cyc::eta(p_, -tau_q(p_, ix_.digit(i, k))));
    } else {
      int k = l / 2;
      Cyc scale = gauss_sum(p_, -Q(1, 2)) * Q(1, p_);
      for (std::uint32_t i = 0; i < dim(); ++i)
        for (long t = 0; t < p_; ++t) {
          Cyc coeff = scale * Cyc::eta_q(p_, Q((2 * t + 1) * (2 * t + 1), 8));
          out.add_at(ix_.shift(ix_.shift(i, k, t), k + 1, -t), i, coeff);
        }
    }
    return out;
  }

  long omega_dot(std::uint32_t n, std::uint32_t j) const {
    long s = 0, run = 0;
    for (int k = 1; k <= g_; ++k) {
      run += ix_.digit(j, k);
      s += ix_.digit(n, k) * run;
    }
    return smod(s, p_);
  }

  // Change of basis to the eigenbasis of the even operators: column n is
  // e*_n = alpha_g sum_j eta^{n . Omega j} e_j with alpha_g = (G(1/2)/p)^g.
  CycMatrix fourier() const {
    Cyc alpha = alpha_scale(Q(1, 2));
    CycMatrix out(dim(), dim());
    for (std::uint32_t n = 0; n < dim(); ++n)
      for (std::uint32_t j = 0; j < dim(); ++j)
        out.add_at(j, n, alpha * Cyc::eta(p_, omega_dot(n, j)));
    return out;
  }

  CycMatrix fourier_inv() const {
    Cyc alpha_bar = alpha_scale(-Q(1, 2));
    CycMatrix out(dim(), dim());
    for (std::uint32_t j = 0; j < dim(); ++j)
      for (std::uint32_t n = 0; n < dim(); ++n)
        out.add_at(n, j, alpha_bar * Cyc::eta(p_, -omega_dot(n, j)));
    return out;
  }

  // Spectral projection of the even operator Psi_{2k} onto eigenvalue eta^a:
  // e_i -> (1/p) sum_s eta^{-s/2} Bhat^a_s e_{i + s(e_k - e_{k+1})}.
  CycMatrix psi_even_proj(int k, long a) const {
    assert(1 <= k && k <= g_);
    CycMatrix out(dim(), dim());
    Q inv_p(1, p_);
    for (std::uint32_t i = 0; i < dim(); ++i)
      for (long s = 0; s < p_; ++s) {
        Cyc coeff = Cyc::eta_q(p_, -Q(s, 2)) * bhat_fiber(p_, a, s) * inv_p;
        out.add_at(ix_.shift(ix_.shift(i, k, s), k + 1, -s), i, coeff);
      }
    return out;
  }

 private:
  Cyc alpha_scale(const Q& half) const {
    Cyc base = gauss_sum(p_, half) * Q(1, p_);
    Cyc out = Cyc::one(p_);
    for (int i = 0; i < g_; ++i) out = out * base;
    return out;
  }

  long p_;
  int g_;
  PowIndex ix_;
};

class LModule {
 public:
  LModule(long p, int g) : v_(p, g), p_(p), g_(g) {}

  long p() const { return p_; }
  int g() const { return g_; }
  const VModule& fiber() const { return v_; }
  std::uint32_t vdim() const { return v_.dim(); }
  std::uint32_t dim() const { return 2 * g_ * v_.dim(); }

  // Basis slot of e_j u_l, l in 1..2g.
  std::uint32_t at(int l, std::uint32_t j) const {
    assert(1 <= l && l <= 2 * g_);
    return static_cast<std::uint32_t>(l - 1) * v_.dim() + j;
  }

  // The lifted braid operator Psi-hat_l.
  CycMatrix psi_hat(int l) const {
    assert(1 <= l && l <= 2 * g_);
    CycMatrix psi_v = v_.psi(l);
    CycMatrix out(dim(), dim());
    for (int m = 1; m <= 2 * g_; ++m) place(out, psi_v, m, m, +1);
    if (l % 2 == 1) {
      int k = (l + 1) / 2;
      CycMatrix corr = v_.right_word(odd_bracket(k)) * psi_v;
      place(out, corr, 2 * k - 1, 2 * k, -1);
      if (2 * k - 3 >= 1) place(out, corr, 2 * k - 3, 2 * k, +1);
    } else {
      int k = l / 2;
      CycMatrix corr = v_.right_word(w_inv(even_bracket(k))) * psi_v;
      place(out, corr, 2 * k, 2 * k - 1, +1);
      if (2 * k + 2 <= 2 * g_) place(out, corr, 2 * k + 2, 2 * k - 1, -1);
    }
    return out;
  }

  // Jordan parts assembled from the averaged correction brackets: the
  // semisimple part keeps Psi on the V factor and inserts 1 - avg in the
  // bracket; the unipotent part leaves the V factor alone and inserts avg.
  CycMatrix psi_hat_semisimple(int l) const { return part(l, false); }
  CycMatrix psi_hat_unipotent(int l) const { return part(l, true); }

  // Closed form of the unipotent part on the e-basis.
  CycMatrix unipotent_closed(int l) const {
    assert(1 <= l && l <= 2 * g_);
    const PowIndex& ix = v_.index();
    CycMatrix out = CycMatrix::identity(dim(), p_);
    if (l % 2 == 1) {
      int k = (l + 1) / 2;
      for (std::uint32_t i = 0; i < vdim(); ++i) {
        if (ix.digit(i, k) != 0) continue;
        Cyc coeff = -Cyc::eta(p_, digit_prefix(i, k - 1));
        std::uint32_t t = ix.shift(i, k, -1);
        out.add_at(at(2 * k - 1, t), at(2 * k, i), coeff);
        if (2 * k - 3 >= 1) out.add_at(at(2 * k - 3, t), at(2 * k, i), -coeff);
      }
    } else {
      int k = l / 2;
      Q inv_p(1, p_);
      for (std::uint32_t i = 0; i < vdim(); ++i) {
        Cyc base = Cyc::eta(p_, -digit_prefix(i, k)) * inv_p;
        for (long s = 0; s < p_; ++s) {
          Cyc coeff = base * Cyc::eta(p_, -s);
          std::uint32_t t = ix.shift(ix.shift(i, k, s), k + 1, 1 - s);
          out.add_at(at(2 * k, t), at(2 * k - 1, i), coeff);
          if (2 * k + 2 <= 2 * g_) out.add_at(at(2 * k + 2, t), at(2 * k - 1, i), -coeff);
        }
      }
    }
    return out;
  }

  // Closed form of the spectral projection of Psi-hat_{l,ss} onto eta^a.
  //
  // In the odd case the correction term carries the factor
  // delta_{a,tau(j_k)} - delta_{a,tau(j_k - 1)}: averaging the geometric sum
  // (1 - eta^{-m j_k}) / (1 - eta^{-j_k}) against eta^{-am} splits the
  // correction across the two eigenvalue channels tau(j_k) and
  // tau(j_k) - j_k = tau(j_k - 1), and the two channels cancel when the
  // projections are summed over a.
  CycMatrix ss_projection_closed(int l, long a) const {
    assert(1 <= l && l <= 2 * g_);
    a = smod(a, p_);
    const PowIndex& ix = v_.index();
    CycMatrix out(dim(), dim());
    if (l % 2 == 1) {
      int k = (l + 1) / 2;
      for (std::uint32_t j = 0; j < vdim(); ++j) {
        long jk = ix.digit(j, k);
        if (tau_q(p_, jk) == a)
          for (int n = 1; n <= 2 * g_; ++n) out.add_at(at(n, j), at(n, j), Cyc::one(p_));
        if (jk != 0) {
          long channel = (tau_q(p_, jk) == a ? 1 : 0) - (tau_q(p_, jk - 1) == a ? 1 : 0);
          if (channel == 0) continue;
          Cyc coeff = -(Cyc::one(p_) - Cyc::eta(p_, -jk)).inv() *
                      Cyc::eta(p_, digit_prefix(j, k - 1)) * Q(channel);
          std::uint32_t t = ix.shift(j, k, -1);
          out.add_at(at(2 * k - 1, t), at(2 * k, j), coeff);
          if (2 * k - 3 >= 1) out.add_at(at(2 * k - 3, t), at(2 * k, j), -coeff);
        }
      }
    } else {
      int k = l / 2;
      Q inv_p(1, p_);
      for (std::uint32_t i = 0; i < vdim(); ++i) {
        for (long s = 0; s < p_; ++s) {
          Cyc coeff = Cyc::eta_q(p_, -Q(s, 2)) * bhat_fiber(p_, a, s) * inv_p;
          if (!coeff.is_zero()) {
            std::uint32_t t = ix.shift(ix.shift(i, k, s), k + 1, -s);
            for (int m = 1; m <= 2 * g_; ++m) out.add_at(at(m, t), at(m, i), coeff);
          }
          Cyc coeff2 =
              Cyc::eta(p_, -digit_prefix(i, k) - s) * chat(p_, a, s) * inv_p;
          if (!coeff2.is_zero()) {
            std::uint32_t t = ix.shift(ix.shift(i, k, s), k + 1, 1 - s);
            out.add_at(at(2 * k, t), at(2 * k - 1, i), coeff2);
            if (2 * k + 2 <= 2 * g_) out.add_at(at(2 * k + 2, t), at(2 * k - 1, i), -coeff2);
          }
        }
      }
    }
    return out;
  }

 private:
  // x_1 x_3 ... x_{2k-3} . x_{2k} x_{2k+2} ... x_{2g}
  Word odd_bracket(int k) const {
    Word w;
    for (int j = 1; j <= k - 1; ++j) w.push_back(2 * j - 1);
    for (int j = k; j <= g_; ++j) w.push_back(2 * j);
    return w;
  }

  // x_1 x_3 ... x_{2k-1} . x_{2k} x_{2k+2} ... x_{2g}
  Word even_bracket(int k) const {
    Word w;
    for (int j = 1; j <= k; ++j) w.push_back(2 * j - 1);
    for (int j = k; j <= g_; ++j) w.push_back(2 * j);
    return w;
  }

  long digit_prefix(std::uint32_t i, int upto) const {
    long s = 0;
    for (int k = 1; k <= upto; ++k) s += v_.index().digit(i, k);
    return smod(s, p_);
  }

  static void place(CycMatrix& big, const CycMatrix& small, int rowblk, int colblk, int sign) {
    std::uint32_t r0 = static_cast<std::uint32_t>(rowblk - 1) * small.nrows;
    std::uint32_t c0 = static_cast<std::uint32_t>(colblk - 1) * small.ncols;
    for (std::uint32_t i = 0; i < small.nrows; ++i)
      for (const auto& [j, val] : small.rows[i])
        big.add_at(r0 + i, c0 + j, sign > 0 ? val : -val);
  }

  CycMatrix part(int l, bool unipotent) const {
    CycMatrix ident = CycMatrix::identity(vdim(), p_);
    CycMatrix base = unipotent ? ident : v_.psi(l);
    CycMatrix out(dim(), dim());
    for (int m = 1; m <= 2 * g_; ++m) place(out, base, m, m, +1);
    if (l % 2 == 1) {
      int k = (l + 1) / 2;
      Word pre, suf;
      for (int j = 1; j <= k - 1; ++j) pre.push_back(2 * j - 1);
      for (int j = k; j <= g_; ++j) suf.push_back(2 * j);
      CycMatrix mid = v_.right_avg(2 * k - 1);
      if (!unipotent) mid = ident - mid;
      CycMatrix corr = v_.right_word(suf) * mid * v_.right_word(pre) * base;
      place(out, corr, 2 * k - 1, 2 * k, -1);
      if (2 * k - 3 >= 1) place(out, corr, 2 * k - 3, 2 * k, +1);
    } else {
      int k = l / 2;
      Word pre, suf;
      for (int j = g_; j >= k; --j) pre.push_back(-2 * j);
      for (int j = k; j >= 1; --j) suf.push_back(-(2 * j - 1));
      CycMatrix mid = v_.right_avg(2 * k);
      if (!unipotent) mid = ident - mid;
      CycMatrix corr = v_.right_word(suf) * mid * v_.right_word(pre) * base;
      place(out, corr, 2 * k, 2 * k - 1, +1);
      if (2 * k + 2 <= 2 * g_) place(out, corr, 2 * k + 2, 2 * k - 1, -1);
    }
    return out;
  }

  VModule v_;
  long p_;
  int g_;
};

// Multiplicative Jordan decomposition for operators whose minimal polynomial
// divides (t^p - 1)^2: nilpotent L = (1/p)(A^p - 1), unipotent part 1 + L,
// semisimple part A(1 - L).
inline CycMatrix jordan_nilpotent(const CycMatrix& a, long p) {
  return Cyc::from_q(p, Q(1, p)) *
         (a.pow(static_cast<unsigned>(p)) - CycMatrix::identity(a.nrows, p));
}

inline CycMatrix jordan_unipotent(const CycMatrix& a, long p) {
  return CycMatrix::identity(a.nrows, p) + jordan_nilpotent(a, p);
}

inline CycMatrix jordan_semisimple(const CycMatrix& a, long p) {
  return a * (CycMatrix::identity(a.nrows, p) - jordan_nilpotent(a, p));
}

// (1/p) sum_m eta^{-am} S^m for an operator with S^p = 1.
inline CycMatrix spectral_projection(const CycMatrix& s, long a, long p) {
  CycMatrix acc = CycMatrix::identity(s.nrows, p);
  CycMatrix pw = acc;
  for (long m = 1; m < p; ++m) {
    pw = pw * s;
    acc = acc + Cyc::eta(p, -a * m) * pw;
  }
  return Cyc::from_q(p, Q(1, p)) * acc;
}

}  // namespace braidrep
