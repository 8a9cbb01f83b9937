#pragma once

// The extended Magnus module over the group with the involutive generators
// y_1..y_{2g+1}: free on t_j = fd(y_j) over the ambient group ring, modulo
// (1 + y_j) t_j = 0.  A C-basis is {a t_j : a in the index-2 subgroup G},
// dimension (2g+1)|G|; a general b t_j with b outside G is rewritten as
// -(b y_j) t_j.
//
// The braid generators act semilinearly: sigma_i sends a t_j to
// sigma_i(a) fd(sigma_i(y_j)).  In the alternative free G-basis
// {u_1..u_2g, w_0} (built from derivatives of ascending/descending
// y-products) the same action takes the block-triangular closed form with
// left-multiplied correction brackets, and w_0 is fixed.

#include <cassert>
#include <cstdint>
#include <vector>

#include "braidrep/cyclotomic.hpp"
#include "braidrep/heisenberg.hpp"
#include "braidrep/matrix.hpp"
#include "braidrep/words.hpp"

namespace braidrep {

class TModule {
 public:
  explicit TModule(const ExtGroup& ext)
      : ext_(ext), gsize_(ext.base().size()), nt_(ext.base().num_gens() + 1) {}

  const ExtGroup& ext() const { return ext_; }
  long p() const { return ext_.base().p(); }
  int num_t() const { return nt_; }
  std::uint32_t dim() const { return static_cast<std::uint32_t>(nt_) * gsize_; }

  // Slot of a t_j for a in the base group, 1 <= j <= 2g+1.
  std::uint32_t at(int j, std::uint32_t a) const {
    assert(1 <= j && j <= nt_ && a < gsize_);
    return static_cast<std::uint32_t>(j - 1) * gsize_ + a;
  }

  // b t_j for an arbitrary extension element b, in canonical coordinates.
  void accum(SparseVec& acc, std::uint32_t b, int j, long sign) const {
    if (ext_.eps(b)) {
      b = ext_.base_part(ext_.mul(b, ext_.rho_y(j)));
      sign = -sign;
      acc = sv_axpy(acc, Cyc::from_z(p(), sign), {{at(j, b), Cyc::one(p())}});
    } else {
      acc = sv_axpy(acc, Cyc::from_z(p(), sign),
                    {{at(j, ext_.base_part(b)), Cyc::one(p())}});
    }
  }

  // Derivative of a word in the involutive generators (positive letters).
  SparseVec fd_plus(const Word& w) const {
    SparseVec out;
    std::uint32_t prefix = ExtGroup::id;
    for (int l : w) {
      assert(l > 0 && l <= nt_);
      accum(out, prefix, l, +1);
      prefix = ext_.mul(prefix, ext_.rho_y(l));
    }
    return out;
  }

  SparseVec left_mul(std::uint32_t b, const SparseVec& v) const {
    SparseVec out;
    for (const auto& [idx, coeff] : v) {
      int j = static_cast<int>(idx / gsize_) + 1;
      std::uint32_t a = idx % gsize_;
      std::uint32_t ba = ext_.mul(b, ext_.from_base(a, 0));
      SparseVec term;
      accum(term, ba, j, +1);
      out = sv_axpy(out, coeff, term);
    }
    return out;
  }

  // Braid operator in t-coordinates.
  CycMatrix psi_hat_t(int i, bool inverse = false) const {
    std::vector<std::uint32_t> table = ext_.braid_table(i, inverse);
    CycMatrix out(dim(), dim());
    std::vector<SparseVec> gen_image(nt_ + 1);
    for (int j = 1; j <= nt_; ++j)
      gen_image[j] = fd_plus(braid_sub_y({j}, i, inverse));
    for (int j = 1; j <= nt_; ++j)
      for (std::uint32_t a = 0; a < gsize_; ++a) {
        std::uint32_t im = table[ext_.from_base(a, 0)];
        for (const auto& [idx, coeff] : left_mul(im, gen_image[j]))
          out.add_at(idx, at(j, a), coeff);
      }
    return out;
  }

  // The distinguished basis vectors in t-coordinates.
  SparseVec u_vec(int l) const {
    int g = (nt_ - 1) / 2;
    assert(1 <= l && l <= 2 * g);
    if (l % 2 == 0) {
      int i = l / 2;
      std::uint32_t pre = ExtGroup::id;
      for (int r = 1; r <= 2 * i - 1; ++r) pre = ext_.mul(pre, ext_.rho_y(r));
      Word w;
      for (int r = 2 * i; r <= 2 * g + 1; ++r) w.push_back(r);
      return left_mul(pre, fd_plus(w));
    }
    int i = (l + 1) / 2;
    std::uint32_t pre = ExtGroup::id;
    for (int r = 2 * g + 1; r >= 2 * i + 1; --r) pre = ext_.mul(pre, ext_.rho_y(r));
    Word w;
    for (int r = 2 * i; r >= 1; --r) w.push_back(r);
    return sv_scale(left_mul(pre, fd_plus(w)), -Cyc::one(p()));
  }

  SparseVec w0_vec() const {
    Word w;
    for (int r = 1; r <= nt_; ++r) w.push_back(r);
    return fd_plus(w);
  }

  // Transition matrix from {a u_1, ..., a u_2g, a w_0 : a in G} coordinates
  // (column (slot-1)|G| + a, w_0 in the last slot) to t-coordinates.
  CycMatrix transition() const {
    CycMatrix out(dim(), dim());
    std::vector<SparseVec> base(nt_ + 1);
    for (int l = 1; l < nt_; ++l) base[l] = u_vec(l);
    base[nt_] = w0_vec();
    for (int slot = 1; slot <= nt_; ++slot)
      for (std::uint32_t a = 0; a < gsize_; ++a) {
        std::uint32_t col = static_cast<std::uint32_t>(slot - 1) * gsize_ + a;
        for (const auto& [idx, coeff] : left_mul(ext_.from_base(a, 0), base[slot]))
          out.add_at(idx, col, coeff);
      }
    return out;
  }

  // Braid operator in the distinguished basis: semilinear over the braid
  // automorphism, with left-multiplied correction brackets and fixed w_0.
  CycMatrix psi_hat_u(int i) const {
    const HeisGroup& grp = ext_.base();
    int g = (nt_ - 1) / 2;
    std::vector<std::uint32_t> table = ext_.braid_table(i);
    CycMatrix out(dim(), dim());
    auto add = [&](int slot, std::uint32_t a, std::uint32_t col, long sign) {
      std::uint32_t row = static_cast<std::uint32_t>(slot - 1) * gsize_ + a;
      out.add_at(row, col, Cyc::from_z(p(), sign));
    };
    for (int slot = 1; slot <= nt_; ++slot)
      for (std::uint32_t a = 0; a < gsize_; ++a) {
        std::uint32_t col = static_cast<std::uint32_t>(slot - 1) * gsize_ + a;
        std::uint32_t ai = ext_.base_part(table[ext_.from_base(a, 0)]);
        add(slot, ai, col, +1);
        if (i % 2 == 1 && slot == i + 1) {
          int k = (i + 1) / 2;
          Word w;
          for (int j = 1; j <= k - 1; ++j) w.push_back(2 * j - 1);
          for (int j = k; j <= g; ++j) w.push_back(2 * j);
          std::uint32_t ab = grp.mul(ai, grp.eval_x_word(w));
          add(2 * k - 1, ab, col, -1);
          if (2 * k - 3 >= 1) add(2 * k - 3, ab, col, +1);
        } else if (i % 2 == 0 && slot == i - 1) {
          int k = i / 2;
          Word w;
          for (int j = 1; j <= k; ++j) w.push_back(2 * j - 1);
          for (int j = k; j <= g; ++j) w.push_back(2 * j);
          std::uint32_t ab = grp.mul(ai, grp.inv(grp.eval_x_word(w)));
          add(2 * k, ab, col, +1);
          if (2 * k + 2 <= 2 * g) add(2 * k + 2, ab, col, -1);
        }
      }
    return out;
  }

 private:
  const ExtGroup& ext_;
  std::uint32_t gsize_;
  int nt_;
};

}  // namespace braidrep
