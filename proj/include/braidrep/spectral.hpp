#pragma once

// The weight blocks of L cut out by the commuting semisimple parts of the
// odd lifted braid operators, together with the operator family acting on
// the zero-weight block.
//
// For a weight vector (a_1..a_g) with every a_k in the image of tau_q, the
// block L(a) is the joint eta^{a_k}-eigenspace of the operators
// Psi-hat_{2k-1,ss}, i.e. the image of the product of their spectral
// projections.  It carries the distinguished basis
//   w_k^j = e_j (u_{2k-1} - u_{2k-3}),
//   v_k^j = eta^{-(j_1+..+j_{k-1})} e_j u_{2k}
//           - [j_k != 0] (1 - eta^{-j_k})^{-1} e_{j-e_k} (u_{2k-1} - u_{2k-3}),
// indexed by the multi-indices j with tau(j_k) = a_k for all k.  The w
// vectors span the odd half, the v vectors the even half.

#include <cassert>
#include <cstdint>
#include <vector>

#include "braidrep/cyclotomic.hpp"
#include "braidrep/matrix.hpp"
#include "braidrep/numtheory.hpp"
#include "braidrep/representation.hpp"
#include "braidrep/spectral_constants.hpp"

namespace braidrep {

class BlockSpace {
 public:
  BlockSpace(long p, int g, std::vector<long> weight = {})
      : lm_(p, g), p_(p), g_(g) {
    if (weight.empty()) weight.assign(g, 0);
    assert(static_cast<int>(weight.size()) == g);
    for (long& a : weight) a = smod(a, p);
    weight_ = weight;

    // Fiber of tau_q over each a_k, ascending; the product is enumerated
    // with the first coordinate varying fastest.
    std::vector<std::vector<long>> fiber(g);
    for (int k = 0; k < g; ++k) {
      for (long m = 0; m < p; ++m)
        if (tau_q(p, m) == weight[k]) fiber[k].push_back(m);
      assert(!fiber[k].empty());
    }
    const PowIndex& ix = lm_.fiber().index();
    std::vector<size_t> idx(g, 0);
    for (;;) {
      std::vector<long> digits(g);
      for (int k = 0; k < g; ++k) digits[k] = fiber[k][idx[k]];
      codes_.push_back(ix.encode(digits));
      int k = 0;
      while (k < g && ++idx[k] == fiber[k].size()) {
        idx[k] = 0;
        ++k;
      }
      if (k == g) break;
    }
    pos_of_.assign(lm_.vdim(), npos);
    for (std::uint32_t pos = 0; pos < codes_.size(); ++pos)
      pos_of_[codes_[pos]] = pos;

    proj_ = lm_.ss_projection_closed(1, weight_[0]);
    for (int k = 2; k <= g_; ++k)
      proj_ = proj_ * lm_.ss_projection_closed(2 * k - 1, weight_[k - 1]);
  }

  static constexpr std::uint32_t npos = ~0u;

  const LModule& module() const { return lm_; }
  long p() const { return p_; }
  int g() const { return g_; }
  const std::vector<long>& weight() const { return weight_; }

  std::uint32_t num_j() const { return static_cast<std::uint32_t>(codes_.size()); }
  std::uint32_t odd_dim() const { return static_cast<std::uint32_t>(g_) * num_j(); }
  std::uint32_t block_dim() const { return 2 * odd_dim(); }

  std::uint32_t code(std::uint32_t pos) const { return codes_[pos]; }
  std::uint32_t pos_of(std::uint32_t code) const { return pos_of_[code]; }

  // Slots: the odd half first, each half grouped by k with the multi-index
  // position varying fastest.
  std::uint32_t w_slot(int k, std::uint32_t pos) const {
    return static_cast<std::uint32_t>(k - 1) * num_j() + pos;
  }
  std::uint32_t v_slot(int k, std::uint32_t pos) const {
    return odd_dim() + static_cast<std::uint32_t>(k - 1) * num_j() + pos;
  }

  // w and v for an arbitrary encoded multi-index; k = g+1 yields the zero
  // vector, matching the convention that u and e beyond the range vanish.
  SparseVec w_vec(int k, std::uint32_t j) const {
    assert(1 <= k && k <= g_ + 1);
    if (k == g_ + 1) return {};
    SparseVec out;
    if (k >= 2) out.emplace_back(lm_.at(2 * k - 3, j), -Cyc::one(p_));
    out.emplace_back(lm_.at(2 * k - 1, j), Cyc::one(p_));
    return out;
  }

  SparseVec v_vec(int k, std::uint32_t j) const {
    assert(1 <= k && k <= g_ + 1);
    if (k == g_ + 1) return {};
    const PowIndex& ix = lm_.fiber().index();
    long jk = ix.digit(j, k);
    SparseVec out;
    if (jk != 0) {
      Cyc c = -(Cyc::one(p_) - Cyc::eta(p_, -jk)).inv();
      std::uint32_t t = ix.shift(j, k, -1);
      if (k >= 2) out.emplace_back(lm_.at(2 * k - 3, t), -c);
      out.emplace_back(lm_.at(2 * k - 1, t), c);
    }
    out.emplace_back(lm_.at(2 * k, j), Cyc::eta(p_, -digit_prefix(j, k - 1)));
    return out;
  }

  SparseVec basis_vector(std::uint32_t slot) const {
    std::uint32_t half = odd_dim();
    if (slot < half) return w_vec(static_cast<int>(slot / num_j()) + 1, codes_[slot % num_j()]);
    slot -= half;
    return v_vec(static_cast<int>(slot / num_j()) + 1, codes_[slot % num_j()]);
  }

  CycMatrix basis_matrix() const {
    CycMatrix out(lm_.dim(), block_dim());
    for (std::uint32_t s = 0; s < block_dim(); ++s)
      for (const auto& [r, c] : basis_vector(s)) out.set(r, s, c);
    return out;
  }

  // Projection onto this block along the other weights.
  const CycMatrix& proj() const { return proj_; }

  // Coordinates in the distinguished basis.  The even rows of L are touched
  // only by the v vectors, which pins the v coordinates; the w coordinates
  // then telescope along the odd rows.  Asserts that x lies in the block.
  std::vector<Cyc> coords(const SparseVec& x) const {
    std::vector<Cyc> dense(lm_.dim());
    for (const auto& [i, c] : x) dense[i] = c;
    std::vector<Cyc> out(block_dim());
    for (int k = 1; k <= g_; ++k)
      for (std::uint32_t pos = 0; pos < num_j(); ++pos) {
        std::uint32_t j = codes_[pos];
        Cyc c = dense[lm_.at(2 * k, j)];
        if (c.is_zero()) continue;
        Cyc coef = Cyc::eta(p_, digit_prefix(j, k - 1)) * c;
        for (const auto& [i2, c2] : v_vec(k, j)) dense[i2] = dense[i2] - coef * c2;
        out[v_slot(k, pos)] = coef;
      }
    for (std::uint32_t pos = 0; pos < num_j(); ++pos) {
      Cyc acc;
      for (int k = g_; k >= 1; --k) {
        acc = acc + dense[lm_.at(2 * k - 1, codes_[pos])];
        if (!acc.is_zero()) out[w_slot(k, pos)] = acc;
      }
    }
    for (int k = 1; k <= g_; ++k)
      for (std::uint32_t pos = 0; pos < num_j(); ++pos) {
        const Cyc& coef = out[w_slot(k, pos)];
        if (coef.is_zero()) continue;
        for (const auto& [i2, c2] : w_vec(k, codes_[pos]))
          dense[i2] = dense[i2] - coef * c2;
      }
    for (const Cyc& c : dense) {
      assert(c.is_zero());
      (void)c;
    }
    return out;
  }

  // Matrix of op on the block in the distinguished basis; op must map the
  // block into itself.
  CycMatrix restrict_block(const CycMatrix& op) const {
    CycMatrix out(block_dim(), block_dim());
    for (std::uint32_t s = 0; s < block_dim(); ++s) {
      auto co = coords(op.apply(basis_vector(s)));
      for (std::uint32_t r = 0; r < block_dim(); ++r)
        if (!co[r].is_zero()) out.set(r, s, co[r]);
    }
    return out;
  }

  // Whether a block matrix maps the odd half into itself.
  bool preserves_odd(const CycMatrix& blk) const {
    for (std::uint32_t r = odd_dim(); r < block_dim(); ++r)
      for (const auto& [c, val] : blk.rows[r])
        if (c < odd_dim() && !val.is_zero()) return false;
    return true;
  }

  // Restriction to the odd half, and the action induced on the quotient by
  // the even half; both require the odd half to be preserved.
  CycMatrix odd_part(const CycMatrix& blk) const {
    assert(preserves_odd(blk));
    std::uint32_t h = odd_dim();
    CycMatrix out(h, h);
    for (std::uint32_t r = 0; r < h; ++r)
      for (const auto& [c, val] : blk.rows[r])
        if (c < h) out.set(r, c, val);
    return out;
  }

  CycMatrix quotient_part(const CycMatrix& blk) const {
    assert(preserves_odd(blk));
    std::uint32_t h = odd_dim();
    CycMatrix out(h, h);
    for (std::uint32_t r = h; r < block_dim(); ++r)
      for (const auto& [c, val] : blk.rows[r])
        if (c >= h) out.set(r - h, c - h, val);
    return out;
  }

  long digit_prefix(std::uint32_t j, int upto) const {
    long s = 0;
    for (int k = 1; k <= upto; ++k) s += lm_.fiber().index().digit(j, k);
    return smod(s, p_);
  }

 private:
  LModule lm_;
  long p_;
  int g_;
  std::vector<long> weight_;
  std::vector<std::uint32_t> codes_;
  std::vector<std::uint32_t> pos_of_;
  CycMatrix proj_;
};

// Zero out the rows of the odd u blocks; the congruences modulo the span of
// all w vectors compare exactly the surviving even rows.
inline SparseVec drop_odd_rows(const LModule& lm, const SparseVec& x) {
  SparseVec out;
  for (const auto& [i, c] : x)
    if (((i / lm.vdim()) + 1) % 2 == 0) out.emplace_back(i, c);
  return out;
}

// P N_a P N_b P where N_l is the nilpotent part of Psi-hat_l and P projects
// onto the block of bs.
inline CycMatrix projected_nil_product(const BlockSpace& bs, int la, int lb) {
  const LModule& lm = bs.module();
  CycMatrix ident = CycMatrix::identity(lm.dim(), lm.p());
  CycMatrix na = lm.unipotent_closed(la) - ident;
  CycMatrix nb = lm.unipotent_closed(lb) - ident;
  const CycMatrix& pr = bs.proj();
  return pr * na * pr * nb * pr;
}

// gamma_s built from the fiber sums, i.e. weighting the degenerate root of
// the -1/8 channel once instead of twice.  These are the constants the
// two-channel combination of spectral projections actually carries on its
// index-shift terms.
inline Cyc gamma_fiber(long p, long s) {
  return bhat_fiber(p, 0, s) - channel_weight(p) * bhat_fiber(p, minus_eighth(p), s);
}

// The u-degree preserving part of the two-channel combination: the pure
// index-shift average (1/p) sum_s eta^{-s/2} gamma_fiber(s) . shift_k^s with
// no degree-raising correction terms.
inline CycMatrix shift_combination(const LModule& lm, int k) {
  long p = lm.p();
  int g = lm.g();
  const PowIndex& ix = lm.fiber().index();
  CycMatrix out(lm.dim(), lm.dim());
  std::uint32_t nj = ix.size();
  Cyc invp = Cyc::from_q(p, Q(1) / p);
  for (long s = 0; s < p; ++s) {
    Cyc c = invp * Cyc::eta_q(p, Q(-s) / 2) * gamma_fiber(p, s);
    if (c.is_zero()) continue;
    for (int m = 1; m <= 2 * g; ++m)
      for (std::uint32_t j = 0; j < nj; ++j)
        out.add_at(lm.at(m, ix.shift(ix.shift(j, k, s), k + 1, -s)), lm.at(m, j), c);
  }
  return out;
}

// The spectral shift operator on the block: the two-channel combination of
// even spectral projections, reweighted so the pure index-shift part carries
// weight 1 and the degree-raising correction part weight 1+h, with the
// zero-shift term cancelled exactly and the whole normalized to make the
// shift coefficients eta^{-1/2} and eta^{1/2} on the nose.  The reweighting
// is what gives the operator its five-point spectrum {0, +-h, +-1} instead
// of the collapsed {0, +-1}.
inline CycMatrix a_operator(const BlockSpace& bs, int k) {
  const LModule& lm = bs.module();
  long p = lm.p();
  Cyc g0 = gamma_fiber(p, 0);
  Cyc g1 = gamma_fiber(p, 1);
  assert(!g1.is_zero());
  Cyc h = h_const(p);
  const CycMatrix& pr = bs.proj();
  CycMatrix mid = lm.ss_projection_closed(2 * k, 0) -
                  channel_weight(p) * lm.ss_projection_closed(2 * k, minus_eighth(p));
  CycMatrix core = (Cyc::one(p) + h) * mid - h * shift_combination(lm, k);
  CycMatrix out = Cyc::from_q(p, Q(p)) * (pr * core * pr) - g0 * pr;
  return g1.inv() * out;
}

// The idempotent operator family on the zero-weight block.  All members are
// scalar multiples of compositions of the projected Jordan pieces of the
// lifted braid operators, so they lie in the algebra those operators
// generate.  The b/d families scale the nil products by -p, which is the
// normalization making every member idempotent.
struct OperatorFamily {
  std::vector<CycMatrix> b;      // b[k-1] = B_k, 1 <= k <= g
  std::vector<CycMatrix> d;      // d[l-1] = D_l, 1 <= l <= g-1
  std::vector<CycMatrix> b_dag;  // b_dag[k-1], 1 <= k <= g
  std::vector<CycMatrix> d_dag;  // d_dag[l-2], 2 <= l <= g
  std::vector<CycMatrix> a;      // a[k-1] = A_k, 1 <= k <= g
  CycMatrix t, t_dag;            // T_g and its even counterpart
};

inline OperatorFamily build_operators(const BlockSpace& bs) {
  long p = bs.p();
  int g = bs.g();
  assert(!chat(p, 0, 0).is_zero());
  Cyc mp = Cyc::from_q(p, Q(-p));
  OperatorFamily f;
  for (int k = 1; k <= g; ++k)
    f.b.push_back(mp * projected_nil_product(bs, 2 * k - 1, 2 * k));
  for (int l = 1; l <= g - 1; ++l)
    f.d.push_back(mp * projected_nil_product(bs, 2 * l + 1, 2 * l));
  for (int k = 1; k <= g; ++k)
    f.b_dag.push_back(mp * projected_nil_product(bs, 2 * k, 2 * k - 1));
  for (int l = 2; l <= g; ++l)
    f.d_dag.push_back(mp * projected_nil_product(bs, 2 * l - 2, 2 * l - 1));
  for (int k = 1; k <= g; ++k) f.a.push_back(a_operator(bs, k));
  Cyc h = h_const(p);
  f.t = (-(Cyc::eta_q(p, Q(-1) / 2) * h)).inv() * (f.a[g - 1] * f.b[g - 1]);
  f.t_dag = (-(Cyc::eta_q(p, Q(1) / 2) * h)).inv() * (f.a[g - 1] * f.b_dag[g - 1]);
  return f;
}

}  // namespace braidrep
