#pragma once

// The eta-isotypic block of the group algebra of the Heisenberg-type group,
// with its matrix-unit basis.
//
// For a primitive p-th root of unity eta, the block is
// M^eta = {x in C[G] : c x = eta x}; it is simple of dimension p^{2g} with
// C-basis v_a := x^a phi(c;eta) indexed by a in (Z/p)^{2g}, where phi(c;eta)
// is the central idempotent averaging c against eta.  Products follow from
// the cocycle: v_a v_b = eta^{-sum_j a_{j+1} b_j} v_{a+b}.  Matrix units are
//   E_{i,j} = phi(i; x_odd) phi(0; x_even) phi(j; x_odd)
// with phi(i; x_odd) = p^{-g} sum_a eta^{-i.a} x_odd^a, and similarly for
// even; they satisfy E_{i,j} E_{k,l} = delta_{j,k} E_{i,l} and sum to 1.
//
// Normalization: the raw triple product of idempotents only satisfies
// E E = p^{-g} delta E (the odd and even eigenbases are mutually unbiased,
// so phi(i;odd) phi(0;even) phi(i;odd) = p^{-g} phi(i;odd)).  The matrix
// units here carry the compensating factor p^g, which is exactly the closed
// form x_even^{Omega(i-j)} phi(j; x_odd); with it, E_{i,i} = phi(i; x_odd)
// and the identity decomposition holds on the nose.

#include <cassert>
#include <cstdint>
#include <vector>

#include "braidrep/cyclotomic.hpp"
#include "braidrep/heisenberg.hpp"
#include "braidrep/indexing.hpp"
#include "braidrep/matrix.hpp"

namespace braidrep {

class EtaAlgebra {
 public:
  // eta = zeta_p^{eta_pow}, 1 <= eta_pow <= p-1.
  EtaAlgebra(long p, int g, long eta_pow = 1)
      : p_(p), g_(g), eta_pow_(smod(eta_pow, p)), full_(p, 2 * g), half_(p, g) {
    assert(eta_pow_ != 0);
  }

  long p() const { return p_; }
  int g() const { return g_; }
  const PowIndex& index() const { return full_; }
  const PowIndex& half_index() const { return half_; }
  std::uint32_t dim() const { return full_.size(); }

  Cyc eta(long e) const { return Cyc::eta(p_, e * eta_pow_); }

  // v_a v_b as basis-indexed data.
  std::uint32_t mul_index(std::uint32_t a, std::uint32_t b, long& phase) const {
    long s = 0;
    std::uint64_t ra = a / p_, rb = b;
    // sum_{j=1}^{2g-1} a_{j+1} b_j: pair digit j+1 of a with digit j of b.
    for (int j = 1; j < 2 * g_; ++j) {
      s += static_cast<long>(ra % p_) * static_cast<long>(rb % p_);
      ra /= p_;
      rb /= p_;
    }
    phase = smod(-s, p_);
    return full_.add(a, b);
  }

  SparseVec mul(const SparseVec& x, const SparseVec& y) const {
    std::vector<Cyc> acc(dim());
    std::vector<char> seen(dim(), 0);
    std::vector<std::uint32_t> touched;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) {
        long phase;
        std::uint32_t t = mul_index(a, b, phase);
        Cyc term = ca * cb * eta(phase);
        if (!seen[t]) {
          seen[t] = 1;
          touched.push_back(t);
          acc[t] = term;
        } else {
          acc[t] = acc[t] + term;
        }
      }
    SparseVec out;
    std::sort(touched.begin(), touched.end());
    for (std::uint32_t t : touched)
      if (!acc[t].is_zero()) out.push_back({t, acc[t]});
    return out;
  }

  SparseVec unit(std::uint32_t a = 0) const { return {{a, Cyc::one(p_)}}; }

  // Image of a group element under the projection onto the block:
  // pi(x^a c^m) = eta^m v_a.
  SparseVec project_group(const HeisGroup& grp, std::uint32_t elt) const {
    assert(grp.p() == p_ && grp.num_gens() == 2 * g_);
    std::vector<long> digits(2 * g_);
    for (int i = 1; i <= 2 * g_; ++i) digits[i - 1] = grp.x_exp(elt, i);
    return {{full_.encode(digits), eta(grp.c_exp(elt))}};
  }

  // x_odd^i as a block index: digits (i_1, 0, i_2, 0, ...).
  std::uint32_t odd_index(std::uint32_t i_half) const {
    std::vector<long> digits(2 * g_, 0);
    for (int k = 1; k <= g_; ++k) digits[2 * k - 2] = half_.digit(i_half, k);
    return full_.encode(digits);
  }

  std::uint32_t even_index(std::uint32_t i_half) const {
    std::vector<long> digits(2 * g_, 0);
    for (int k = 1; k <= g_; ++k) digits[2 * k - 1] = half_.digit(i_half, k);
    return full_.encode(digits);
  }

  SparseVec phi_odd(std::uint32_t i_half) const {
    SparseVec out;
    Q scale(1, static_cast<long>(half_.size()));
    for (std::uint32_t a = 0; a < half_.size(); ++a)
      out.push_back({odd_index(a), eta(-half_.dot(i_half, a)) * scale});
    std::sort(out.begin(), out.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    return out;
  }

  SparseVec phi_even(std::uint32_t i_half) const {
    SparseVec out;
    Q scale(1, static_cast<long>(half_.size()));
    for (std::uint32_t a = 0; a < half_.size(); ++a)
      out.push_back({even_index(a), eta(-half_.dot(i_half, a)) * scale});
    std::sort(out.begin(), out.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    return out;
  }

  // Triple product of idempotents scaled by p^g.
  SparseVec matrix_unit(std::uint32_t i_half, std::uint32_t j_half) const {
    SparseVec triple = mul(mul(phi_odd(i_half), phi_even(0)), phi_odd(j_half));
    return sv_scale(triple, Cyc::from_z(p_, static_cast<long>(half_.size())));
  }

  // Closed form: x_even^{Omega(i-j)} phi(j; x_odd), Omega the lower
  // triangular all-ones matrix acting on column multi-indices.
  SparseVec matrix_unit_rewritten(std::uint32_t i_half, std::uint32_t j_half) const {
    std::vector<long> diff(g_), om(g_);
    for (int k = 1; k <= g_; ++k)
      diff[k - 1] = half_.digit(i_half, k) - half_.digit(j_half, k);
    long run = 0;
    for (int k = 0; k < g_; ++k) {
      run += diff[k];
      om[k] = smod(run, p_);
    }
    SparseVec lead{{even_index(half_.encode(om)), Cyc::one(p_)}};
    return mul(lead, phi_odd(j_half));
  }

  SparseVec identity_element() const {
    SparseVec out;
    for (std::uint32_t i = 0; i < half_.size(); ++i)
      out = sv_add(out, matrix_unit(i, i));
    return out;
  }

  // The braid generator automorphism acting on the block, as a matrix in the
  // v-basis.  Uses the automorphism table of the ambient extension.
  CycMatrix psi_matrix(const ExtGroup& ext, int l, bool inverse = false) const {
    const HeisGroup& grp = ext.base();
    assert(grp.p() == p_ && grp.num_gens() == 2 * g_);
    std::vector<std::uint32_t> table = ext.braid_table(l, inverse);
    CycMatrix out(dim(), dim());
    for (std::uint32_t a = 0; a < dim(); ++a) {
      std::vector<long> digits(2 * g_);
      for (int i = 1; i <= 2 * g_; ++i) digits[i - 1] = full_.digit(a, i);
      std::uint32_t ga = grp.encode(digits, 0);
      std::uint32_t im = ext.base_part(table[ext.from_base(ga, 0)]);
      SparseVec v = project_group(grp, im);
      assert(v.size() == 1);
      out.add_at(v[0].first, a, v[0].second);
    }
    return out;
  }

 private:
  long p_;
  int g_;
  long eta_pow_;
  PowIndex full_, half_;
};

}  // namespace braidrep
