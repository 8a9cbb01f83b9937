// Oracle tests for the weight module V, its dual, the extended module L, and
// the closed-form Jordan/spectral data of the lifted braid operators.
//
// The closed forms are checked against operators computed by independent
// routes: matrix powers for Jordan parts, eigen-averaging for spectral
// projections, and the group-block tensor model for the intertwiner.

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "braidrep/heisenberg.hpp"
#include "braidrep/matrix.hpp"
#include "braidrep/matrix_units.hpp"
#include "braidrep/numtheory.hpp"
#include "braidrep/representation.hpp"

using namespace braidrep;

namespace {

CycMatrix transpose(const CycMatrix& m) {
  CycMatrix out(m.ncols, m.nrows);
  for (std::uint32_t i = 0; i < m.nrows; ++i)
    for (const auto& [j, v] : m.rows[i]) out.add_at(j, i, v);
  return out;
}

CycMatrix kron(const CycMatrix& a, const CycMatrix& b) {
  CycMatrix out(a.nrows * b.nrows, a.ncols * b.ncols);
  for (std::uint32_t i = 0; i < a.nrows; ++i)
    for (const auto& [j, av] : a.rows[i])
      for (std::uint32_t bi = 0; bi < b.nrows; ++bi)
        for (const auto& [bj, bv] : b.rows[bi])
          out.add_at(i * b.nrows + bi, j * b.ncols + bj, av * bv);
  return out;
}

std::uint32_t braid_image(const ExtGroup& ext, const std::vector<std::uint32_t>& table,
                          std::uint32_t a) {
  return ext.base_part(table[ext.from_base(a, 0)]);
}

Word random_x_word(std::mt19937& rng, int two_g, int len) {
  Word w;
  for (int i = 0; i < len; ++i) {
    int m = 1 + static_cast<int>(rng() % two_g);
    w.push_back(rng() % 2 ? m : -m);
  }
  return w;
}

}  // namespace

TEST_CASE("weight module carries a right group action", "[rep]") {
  for (auto [p, g] : {std::pair<long, int>{3, 1}, {5, 1}, {3, 2}}) {
    HeisGroup grp(p, 2 * g);
    VModule v(p, g);
    const PowIndex& ix = v.index();
    CycMatrix ident = CycMatrix::identity(v.dim(), p);

    // Generator formulas.
    for (int k = 1; k <= g; ++k) {
      CycMatrix odd = v.right_letter(2 * k - 1);
      CycMatrix even = v.right_letter(2 * k);
      for (std::uint32_t j = 0; j < v.dim(); ++j) {
        REQUIRE(odd.get(j, j) == Cyc::eta(p, ix.digit(j, k)));
        std::uint32_t t = ix.shift(ix.shift(j, k, -1), k + 1, +1);
        REQUIRE(even.get(t, j) == Cyc::one(p));
        REQUIRE(even.rows[t].size() == 1);
      }
    }

    // The central element acts by eta, generators have order p, and the
    // negative letter is the inverse.
    REQUIRE(v.right_elt(grp, grp.central()) == Cyc::eta(p, 1) * ident);
    for (int m = 1; m <= 2 * g; ++m) {
      REQUIRE(v.right_letter(m).pow(static_cast<unsigned>(p)) == ident);
      REQUIRE(v.right_letter(-m) * v.right_letter(m) == ident);
    }

    // Right module law R_{ab} = R_b R_a across the multiplication table.
    std::mt19937 rng(2026);
    int trials = grp.size() <= 32 ? -1 : 60;
    if (trials < 0) {
      for (std::uint32_t a = 0; a < grp.size(); ++a)
        for (std::uint32_t b = 0; b < grp.size(); ++b)
          REQUIRE(v.right_elt(grp, grp.mul(a, b)) ==
                  v.right_elt(grp, b) * v.right_elt(grp, a));
    } else {
      for (int t = 0; t < trials; ++t) {
        std::uint32_t a = rng() % grp.size(), b = rng() % grp.size();
        REQUIRE(v.right_elt(grp, grp.mul(a, b)) ==
                v.right_elt(grp, b) * v.right_elt(grp, a));
      }
    }
  }
}

TEST_CASE("dual action pairs adjointly with the right action", "[rep]") {
  for (auto [p, g] : {std::pair<long, int>{3, 1}, {5, 1}, {3, 2}}) {
    VModule v(p, g);
    CycMatrix ident = CycMatrix::identity(v.dim(), p);

    // <v.x, w> = <v, x.w> for every letter, i.e. the dual-action matrix is
    // the transpose of the right-action matrix.
    for (int m = 1; m <= 2 * g; ++m) {
      REQUIRE(transpose(v.right_letter(m)) == v.dual_left_letter(m));
      REQUIRE(transpose(v.right_letter(-m)) == v.dual_left_letter(-m));
    }

    // Left module law along random words.
    std::mt19937 rng(2027);
    for (int t = 0; t < 30; ++t) {
      Word w = random_x_word(rng, 2 * g, 6);
      CycMatrix left = ident;
      for (int l : w) left = left * v.dual_left_letter(l);
      REQUIRE(left == transpose(v.right_word(w)));
    }
  }
}

TEST_CASE("braid operators on the weight module", "[rep]") {
  for (auto [p, g] : {std::pair<long, int>{3, 1}, {3, 2}, {5, 1}, {5, 2}}) {
    VModule v(p, g);
    CycMatrix ident = CycMatrix::identity(v.dim(), p);
    std::vector<CycMatrix> psi(2 * g + 1), dual(2 * g + 1);
    for (int l = 1; l <= 2 * g; ++l) {
      psi[l] = v.psi(l);
      dual[l] = v.psi_dual(l);
    }

    for (int l = 1; l + 1 <= 2 * g; ++l) {
      REQUIRE(psi[l] * psi[l + 1] * psi[l] == psi[l + 1] * psi[l] * psi[l + 1]);
      REQUIRE(dual[l] * dual[l + 1] * dual[l] == dual[l + 1] * dual[l] * dual[l + 1]);
    }
    for (int l = 1; l <= 2 * g; ++l)
      for (int m = l + 2; m <= 2 * g; ++m) {
        REQUIRE(psi[l] * psi[m] == psi[m] * psi[l]);
        REQUIRE(dual[l] * dual[m] == dual[m] * dual[l]);
      }

    for (int l = 1; l <= 2 * g; ++l) {
      REQUIRE(psi[l].pow(static_cast<unsigned>(p)) == ident);
      // Pairing invariance <Psi v, Psi* w> = <v, w>.
      REQUIRE(transpose(psi[l]) * dual[l] == ident);
    }
  }
}

TEST_CASE("braid operators are equivariant over the braid automorphism", "[rep]") {
  for (auto [p, g] : {std::pair<long, int>{3, 1}, {5, 1}, {3, 2}}) {
    HeisGroup grp(p, 2 * g);
    ExtGroup ext(grp);
    VModule v(p, g);
    std::mt19937 rng(2028);
    for (int l = 1; l <= 2 * g; ++l) {
      CycMatrix psi = v.psi(l);
      auto table = ext.braid_table(l);
      std::vector<std::uint32_t> samples;
      for (int m = 1; m <= 2 * g; ++m) samples.push_back(grp.gen(m));
      samples.push_back(grp.central());
      for (int t = 0; t < 12; ++t) samples.push_back(rng() % grp.size());
      for (std::uint32_t a : samples) {
        // Psi_l(v . a) = Psi_l(v) . sigma_l(a).
        REQUIRE(psi * v.right_elt(grp, a) ==
                v.right_elt(grp, braid_image(ext, table, a)) * psi);
      }
    }
  }
}

TEST_CASE("even operators diagonalize in the transformed basis", "[rep]") {
  for (auto [p, g] : {std::pair<long, int>{3, 1}, {5, 1}, {3, 2}}) {
    VModule v(p, g);
    const PowIndex& ix = v.index();
    CycMatrix ident = CycMatrix::identity(v.dim(), p);
    CycMatrix f = v.fourier(), finv = v.fourier_inv();
    REQUIRE(f * finv == ident);
    REQUIRE(finv * f == ident);

    for (int k = 1; k <= g; ++k) {
      CycMatrix conj = finv * v.psi(2 * k) * f;
      for (std::uint32_t n = 0; n < v.dim(); ++n) {
        REQUIRE(conj.rows[n].size() == 1);
        REQUIRE(conj.get(n, n) == Cyc::eta(p, tau_q(p, ix.digit(n, k))));
      }

      // Eigen-average route for the spectral projections of Psi_{2k}.
      CycMatrix total(v.dim(), v.dim());
      for (long a = 0; a < p; ++a) {
        CycMatrix proj = v.psi_even_proj(k, a);
        REQUIRE(proj == spectral_projection(v.psi(2 * k), a, p));
        REQUIRE(proj * proj == proj);
        total = total + proj;
      }
      REQUIRE(total == ident);
    }
  }
}

TEST_CASE("lifted operators satisfy the braid relations", "[rep]") {
  for (auto [p, g] : {std::pair<long, int>{3, 1}, {3, 2}, {5, 1}, {5, 2}}) {
    LModule lm(p, g);
    std::vector<CycMatrix> ph(2 * g + 1);
    for (int l = 1; l <= 2 * g; ++l) ph[l] = lm.psi_hat(l);
    for (int l = 1; l + 1 <= 2 * g; ++l)
      REQUIRE(ph[l] * ph[l + 1] * ph[l] == ph[l + 1] * ph[l] * ph[l + 1]);
    for (int l = 1; l <= 2 * g; ++l)
      for (int m = l + 2; m <= 2 * g; ++m) REQUIRE(ph[l] * ph[m] == ph[m] * ph[l]);
  }
}

TEST_CASE("lifted operators decompose into commuting jordan parts", "[rep]") {
  for (auto [p, g] : {std::pair<long, int>{3, 1}, {5, 1}, {5, 2}}) {
    LModule lm(p, g);
    CycMatrix ident = CycMatrix::identity(lm.dim(), p);
    for (int l = 1; l <= 2 * g; ++l) {
      CycMatrix a = lm.psi_hat(l);
      CycMatrix ap = a.pow(static_cast<unsigned>(p));
      REQUIRE(((ap - ident) * (ap - ident)).is_zero());

      CycMatrix uni = jordan_unipotent(a, p);
      CycMatrix ss = jordan_semisimple(a, p);
      REQUIRE(((uni - ident) * (uni - ident)).is_zero());
      REQUIRE(ss * uni == a);
      REQUIRE(uni * ss == a);
      REQUIRE(ss.pow(static_cast<unsigned>(p)) == ident);

      // The averaged-bracket descriptions agree with the polynomial route.
      REQUIRE(lm.psi_hat_unipotent(l) == uni);
      REQUIRE(lm.psi_hat_semisimple(l) == ss);
    }
  }
}

TEST_CASE("unipotent part matches its closed form", "[rep]") {
  for (auto [p, g] : {std::pair<long, int>{3, 1}, {5, 1}, {5, 2}}) {
    LModule lm(p, g);
    for (int l = 1; l <= 2 * g; ++l)
      REQUIRE(lm.unipotent_closed(l) == jordan_unipotent(lm.psi_hat(l), p));
  }
}

TEST_CASE("semisimple spectral projections match their closed forms", "[rep]") {
  for (auto [p, g] : {std::pair<long, int>{3, 1}, {5, 1}, {5, 2}}) {
    LModule lm(p, g);
    CycMatrix ident = CycMatrix::identity(lm.dim(), p);
    std::vector<bool> in_image = tau_image(p);
    for (int l = 1; l <= 2 * g; ++l) {
      CycMatrix ss = jordan_semisimple(lm.psi_hat(l), p);
      CycMatrix total(lm.dim(), lm.dim());
      CycMatrix recombined(lm.dim(), lm.dim());
      std::vector<CycMatrix> proj(p);
      for (long a = 0; a < p; ++a) {
        proj[a] = lm.ss_projection_closed(l, a);
        REQUIRE(proj[a] == spectral_projection(ss, a, p));
        // The spectrum is exactly the image of the triangular-number map.
        REQUIRE(proj[a].is_zero() == !in_image[a]);
        total = total + proj[a];
        recombined = recombined + Cyc::eta(p, a) * proj[a];
      }
      REQUIRE(total == ident);
      REQUIRE(recombined == ss);
      for (long a = 0; a < p; ++a)
        for (long b = a + 1; b < p; ++b) REQUIRE((proj[a] * proj[b]).is_zero());
    }
  }
}

TEST_CASE("matrix units intertwine the dual tensor action", "[rep]") {
  for (auto [p, g] : {std::pair<long, int>{3, 1}, {5, 1}, {3, 2}}) {
    HeisGroup grp(p, 2 * g);
    ExtGroup ext(grp);
    EtaAlgebra alg(p, g);
    VModule v(p, g);
    std::uint32_t vd = v.dim();

    // iota(e'_i (x) e_j) = E_{i,j}, as a matrix from pair coordinates
    // i*vd + j to the block basis.
    CycMatrix iota(alg.dim(), vd * vd);
    for (std::uint32_t i = 0; i < vd; ++i)
      for (std::uint32_t j = 0; j < vd; ++j)
        for (const auto& [t, val] : alg.matrix_unit(i, j)) iota.add_at(t, i * vd + j, val);
    REQUIRE(matrix_rank(iota) == vd * vd);

    // Left/right multiplication by group elements acts through the dual
    // factor / the module factor respectively.
    std::mt19937 rng(2029);
    std::vector<std::uint32_t> samples{grp.central()};
    for (int m = 1; m <= 2 * g; ++m) samples.push_back(grp.gen(m));
    for (int t = 0; t < 6; ++t) samples.push_back(rng() % grp.size());
    CycMatrix ident_v = CycMatrix::identity(vd, p);
    for (std::uint32_t a : samples) {
      CycMatrix lmul(alg.dim(), alg.dim()), rmul(alg.dim(), alg.dim());
      SparseVec va = alg.project_group(grp, a);
      for (std::uint32_t b = 0; b < alg.dim(); ++b) {
        for (const auto& [t, val] : alg.mul(va, alg.unit(b))) lmul.add_at(t, b, val);
        for (const auto& [t, val] : alg.mul(alg.unit(b), va)) rmul.add_at(t, b, val);
      }
      CycMatrix left_v = v.right_elt(grp, a);  // same letters, dual transpose
      REQUIRE(lmul * iota == iota * kron(transpose(left_v), ident_v));
      REQUIRE(rmul * iota == iota * kron(ident_v, v.right_elt(grp, a)));
    }

    // Braid operators on the block correspond to the diagonal pair action.
    for (int l = 1; l <= 2 * g; ++l)
      REQUIRE(alg.psi_matrix(ext, l) * iota == iota * kron(v.psi_dual(l), v.psi(l)));
  }
}

TEST_CASE("extended module matches the block tensor model", "[rep]") {
  long p = 3;
  int g = 1;
  HeisGroup grp(p, 2 * g);
  ExtGroup ext(grp);
  EtaAlgebra alg(p, g);
  VModule v(p, g);
  LModule lm(p, g);
  std::uint32_t vd = v.dim(), ad = alg.dim();

  // Right multiplication on the block by a group element.
  auto rmul = [&](std::uint32_t a) {
    CycMatrix out(ad, ad);
    SparseVec va = alg.project_group(grp, a);
    for (std::uint32_t b = 0; b < ad; ++b)
      for (const auto& [t, val] : alg.mul(alg.unit(b), va)) out.add_at(t, b, val);
    return out;
  };
  auto place = [&](CycMatrix& big, const CycMatrix& small, int rowblk, int colblk, int sign) {
    std::uint32_t r0 = static_cast<std::uint32_t>(rowblk - 1) * small.nrows;
    std::uint32_t c0 = static_cast<std::uint32_t>(colblk - 1) * small.ncols;
    for (std::uint32_t i = 0; i < small.nrows; ++i)
      for (const auto& [j, val] : small.rows[i])
        big.add_at(r0 + i, c0 + j, sign > 0 ? val : -val);
  };

  // The lift formulas transported to the block: base action by the braid
  // automorphism, corrections by right multiplication with the bracket.
  auto block_lift = [&](int l) {
    CycMatrix base = alg.psi_matrix(ext, l);
    CycMatrix out(ad * 2 * g, ad * 2 * g);
    for (int m = 1; m <= 2 * g; ++m) place(out, base, m, m, +1);
    if (l % 2 == 1) {
      int k = (l + 1) / 2;
      Word w;
      for (int j = 1; j <= k - 1; ++j) w.push_back(2 * j - 1);
      for (int j = k; j <= g; ++j) w.push_back(2 * j);
      CycMatrix corr = rmul(grp.eval_x_word(w)) * base;
      place(out, corr, 2 * k - 1, 2 * k, -1);
      if (2 * k - 3 >= 1) place(out, corr, 2 * k - 3, 2 * k, +1);
    } else {
      int k = l / 2;
      Word w;
      for (int j = 1; j <= k; ++j) w.push_back(2 * j - 1);
      for (int j = k; j <= g; ++j) w.push_back(2 * j);
      CycMatrix corr = rmul(grp.inv(grp.eval_x_word(w))) * base;
      place(out, corr, 2 * k, 2 * k - 1, +1);
      if (2 * k + 2 <= 2 * g) place(out, corr, 2 * k + 2, 2 * k - 1, -1);
    }
    return out;
  };

  // J: e'_i (x) e_j u_m -> E_{i,j} u_m, with pair columns indexed so that
  // the dual factor is the slowest coordinate.
  CycMatrix jmat(ad * 2 * g, vd * lm.dim());
  for (std::uint32_t i = 0; i < vd; ++i)
    for (int m = 1; m <= 2 * g; ++m)
      for (std::uint32_t j = 0; j < vd; ++j)
        for (const auto& [t, val] : alg.matrix_unit(i, j))
          jmat.add_at(static_cast<std::uint32_t>(m - 1) * ad + t,
                      i * lm.dim() + lm.at(m, j), val);
  REQUIRE(matrix_rank(jmat) == vd * lm.dim());

  for (int l = 1; l <= 2 * g; ++l) {
    CycMatrix lhs = block_lift(l) * jmat;
    CycMatrix rhs = jmat * kron(v.psi_dual(l), lm.psi_hat(l));
    REQUIRE(lhs == rhs);
  }
}
