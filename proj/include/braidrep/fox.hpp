#pragma once

// Fox derivation machinery for a free group mapped onto a finite group.
//
// Fix a surjection rho: F_n -> G given by generator images.  The Magnus
// module L is the free left Z[G]-module on e_1..e_n; the derivation
// fd: F_n -> L is the crossed homomorphism with fd(x_i) = e_i, i.e.
// fd(ab) = fd(a) + rho(a) fd(b), and the boundary map del: L -> Z[G] sends
// e_i to rho(x_i) - 1.  Elements of L are stored as dense integer vectors of
// length n*|G|, entry (i-1)*|G| + g holding the coefficient of g*e_i;
// elements of Z[G] as dense vectors of length |G|.

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "braidrep/cyclotomic.hpp"
#include "braidrep/matrix.hpp"
#include "braidrep/words.hpp"

namespace braidrep {

template <class G>
class FoxCalc {
 public:
  FoxCalc(const G& grp, std::vector<std::uint32_t> gen_img)
      : grp_(grp), gen_(std::move(gen_img)) {}

  int n() const { return static_cast<int>(gen_.size()); }
  std::uint32_t gsize() const { return grp_.size(); }
  std::size_t dim() const { return gen_.size() * grp_.size(); }

  std::uint32_t gen_image(int letter) const {
    assert(1 <= letter && letter <= n());
    return gen_[letter - 1];
  }

  std::uint32_t rho(const Word& w) const {
    std::uint32_t r = grp_.id;
    for (int l : w) {
      std::uint32_t x = gen_image(std::abs(l));
      r = grp_.mul(r, l > 0 ? x : grp_.inv(x));
    }
    return r;
  }

  std::vector<long> derive(const Word& w) const {
    std::vector<long> d(dim(), 0);
    std::uint32_t g = grp_.id;
    for (int l : w) {
      int i = std::abs(l);
      std::uint32_t x = gen_image(i);
      if (l > 0) {
        d[idx(i, g)] += 1;
        g = grp_.mul(g, x);
      } else {
        g = grp_.mul(g, grp_.inv(x));
        d[idx(i, g)] -= 1;
      }
    }
    return d;
  }

  std::vector<long> boundary(const std::vector<long>& m) const {
    assert(m.size() == dim());
    std::vector<long> out(grp_.size(), 0);
    for (int i = 1; i <= n(); ++i) {
      std::uint32_t x = gen_image(i);
      for (std::uint32_t g = 0; g < grp_.size(); ++g) {
        long c = m[idx(i, g)];
        if (!c) continue;
        out[grp_.mul(g, x)] += c;
        out[g] -= c;
      }
    }
    return out;
  }

  static long epsilon(const std::vector<long>& a) {
    long s = 0;
    for (long c : a) s += c;
    return s;
  }

  std::vector<long> left_act(std::uint32_t g, const std::vector<long>& m) const {
    assert(m.size() == dim());
    std::vector<long> out(dim(), 0);
    for (int i = 1; i <= n(); ++i)
      for (std::uint32_t h = 0; h < grp_.size(); ++h)
        if (long c = m[idx(i, h)]) out[idx(i, grp_.mul(g, h))] = c;
    return out;
  }

  // a * m where a is in Z[G] and the module action is diagonal left
  // multiplication.
  std::vector<long> alg_act(const std::vector<long>& a,
                            const std::vector<long>& m) const {
    assert(a.size() == grp_.size() && m.size() == dim());
    std::vector<long> out(dim(), 0);
    for (std::uint32_t g = 0; g < grp_.size(); ++g) {
      if (!a[g]) continue;
      for (int i = 1; i <= n(); ++i)
        for (std::uint32_t h = 0; h < grp_.size(); ++h)
          if (long c = m[idx(i, h)]) out[idx(i, grp_.mul(g, h))] += a[g] * c;
    }
    return out;
  }

  // Conjugation action: the endomorphism of L induced by w -> h w h^{-1},
  //   m -> -rho(h) del(m) rho(h)^{-1} fd(h) + rho(h) m.
  std::vector<long> adjoint(const Word& h, const std::vector<long>& m) const {
    std::uint32_t rh = rho(h);
    std::vector<long> db = boundary(m);
    std::vector<long> coeff(grp_.size(), 0);
    for (std::uint32_t g = 0; g < grp_.size(); ++g)
      if (db[g]) coeff[grp_.mul(grp_.mul(rh, g), grp_.inv(rh))] = -db[g];
    std::vector<long> out = alg_act(coeff, derive(h));
    std::vector<long> lm = left_act(rh, m);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += lm[k];
    return out;
  }

  // --- exact matrices over a fixed cyclotomic field ---

  CycMatrix boundary_matrix(long p) const {
    CycMatrix mat(grp_.size(), dim());
    for (int i = 1; i <= n(); ++i) {
      std::uint32_t x = gen_image(i);
      for (std::uint32_t g = 0; g < grp_.size(); ++g) {
        mat.add_at(grp_.mul(g, x), idx(i, g), Cyc::one(p));
        mat.add_at(g, idx(i, g), -Cyc::one(p));
      }
    }
    return mat;
  }

  CycMatrix left_mult_matrix(std::uint32_t g, long p) const {
    CycMatrix mat(dim(), dim());
    for (int i = 1; i <= n(); ++i)
      for (std::uint32_t h = 0; h < grp_.size(); ++h)
        mat.set(idx(i, grp_.mul(g, h)), idx(i, h), Cyc::one(p));
    return mat;
  }

  CycMatrix adjoint_matrix(const Word& h, long p) const {
    CycMatrix mat(dim(), dim());
    for (int i = 1; i <= n(); ++i)
      for (std::uint32_t g = 0; g < grp_.size(); ++g) {
        std::vector<long> m(dim(), 0);
        m[idx(i, g)] = 1;
        std::vector<long> im = adjoint(h, m);
        for (std::size_t r = 0; r < im.size(); ++r)
          if (im[r]) mat.add_at(static_cast<std::uint32_t>(r), idx(i, g),
                                Cyc::from_z(p, im[r]));
      }
    return mat;
  }

  std::size_t idx(int i, std::uint32_t g) const {
    return static_cast<std::size_t>(i - 1) * grp_.size() + g;
  }

  const G& group() const { return grp_; }

 private:
  const G& grp_;
  std::vector<std::uint32_t> gen_;
};

struct SeparationResult {
  std::vector<SparseVec> eigenspace;   // basis of L_lambda
  std::vector<SparseVec> kernel_part;  // basis of Ker(del) within L_lambda
  std::vector<SparseVec> ideal_part;   // basis of M_lambda * fd(h)
  std::vector<SparseVec> ideal;        // basis of M_lambda inside C[G]
};

// Direct-sum decomposition L_lambda = Ker(del|_lambda) (+) M_lambda fd(h)
// for h with central image of finite order and lambda != 1 an eigenvalue of
// left multiplication by rho(h).
template <class G>
SeparationResult separation_decompose(const FoxCalc<G>& fox, const Word& h,
                                      const Cyc& lambda, long p) {
  if (lambda == Cyc::one(p))
    throw std::invalid_argument("separation requires an eigenvalue != 1");
  std::uint32_t rh = fox.rho(h);

  CycMatrix lmul = fox.left_mult_matrix(rh, p);
  CycMatrix shifted = lmul - CycMatrix::identity(lmul.nrows, p) * lambda;
  SeparationResult res;
  res.eigenspace = kernel_basis(shifted, p);

  // M_lambda: eigenspace of multiplication by rho(h) on C[G].
  const auto& grp = fox.group();
  CycMatrix gmul(grp.size(), grp.size());
  for (std::uint32_t g = 0; g < grp.size(); ++g)
    gmul.set(grp.mul(rh, g), g, Cyc::one(p));
  CycMatrix gshift = gmul - CycMatrix::identity(grp.size(), p) * lambda;
  res.ideal = kernel_basis(gshift, p);

  // Kernel part: solve del(v) = 0 for v in the eigenspace.
  CycMatrix del = fox.boundary_matrix(p);
  CycMatrix restricted(del.nrows, static_cast<std::uint32_t>(res.eigenspace.size()));
  for (std::uint32_t j = 0; j < res.eigenspace.size(); ++j) {
    SparseVec img = del.apply(res.eigenspace[j]);
    for (const auto& [r, c] : img) restricted.add_at(r, j, c);
  }
  for (const auto& coeffs : kernel_basis(restricted, p)) {
    SparseVec v;
    for (const auto& [j, c] : coeffs) v = sv_axpy(v, c, res.eigenspace[j]);
    res.kernel_part.push_back(v);
  }

  // Ideal part: a * fd(h) for a running over the M_lambda basis.
  std::vector<long> fdh = fox.derive(h);
  for (const auto& a : res.ideal) {
    SparseVec v;
    for (const auto& [g, c] : a) {
      for (int i = 1; i <= fox.n(); ++i)
        for (std::uint32_t k = 0; k < grp.size(); ++k)
          if (long m = fdh[fox.idx(i, k)]) {
            SparseVec term{{static_cast<std::uint32_t>(fox.idx(i, grp.mul(g, k))),
                            c * Cyc::from_z(p, m)}};
            v = sv_add(v, term);
          }
    }
    sv_prune(v);
    res.ideal_part.push_back(v);
  }
  return res;
}

}  // namespace braidrep
