#pragma once

// Span-closure engines and the dimension counts that verify the
// irreducibility theorems: the corner of the operator algebra generated by
// the lifted braid matrices on the zero-weight block, and the two
// composition factors cut out by the odd filtration.  Small ambient spaces
// are handled exactly over Q(eta); the large Hom spaces go through the
// prime-field certificate of modq.hpp, whose dimensions bound the exact
// ones from below while the ambient geometry bounds them from above.

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "braidrep/modq.hpp"
#include "braidrep/spectral.hpp"

namespace braidrep {

inline constexpr std::size_t kDefaultAmbientGuard = kModqMaxAmbient;
inline constexpr std::size_t kExactCornerAmbient = 120;

inline CycMatrix unflatten_matrix(const SparseVec& v, std::uint32_t nrows, std::uint32_t ncols) {
  CycMatrix out(nrows, ncols);
  for (const auto& [i, c] : v) out.rows[i / ncols].emplace_back(i % ncols, c);
  return out;
}

// Smallest subspace containing the seed and closed under left multiplication
// by each multiplier, as flattened matrices.  Each admitted basis vector is
// snapshotted once (later in-place reductions change the rows but not the
// span) and multiplied by every multiplier exactly once, so the work is
// linear in the final dimension and the result does not depend on the
// multiplier order.  With threads > 1 the products of a round are computed
// in parallel; admission stays sequential in a fixed order, so the basis is
// identical to the single-threaded run.
inline SubspaceBasis span_closure(const std::vector<CycMatrix>& seed,
                                  const std::vector<CycMatrix>& multipliers, std::size_t cap,
                                  int threads = 1, int* rounds_out = nullptr) {
  if (cap < 1) throw std::invalid_argument("span_closure: cap must be at least 1");
  if (seed.empty()) throw std::invalid_argument("span_closure: empty seed");
  const std::uint32_t nr = seed.front().nrows, nc = seed.front().ncols;
  for (const auto& m : seed) assert(m.nrows == nr && m.ncols == nc);
  for (const auto& m : multipliers) assert(m.nrows == nr && m.ncols == nr);

  SubspaceBasis basis(nr * nc);
  std::vector<CycMatrix> pending;
  auto admit = [&](const CycMatrix& m) {
    if (!basis.insert(m.flatten())) return;
    if (basis.dim() > cap)
      throw std::runtime_error("span_closure: cap exceeded at dimension " +
                               std::to_string(basis.dim()));
    pending.push_back(unflatten_matrix(basis.row(basis.dim() - 1), nr, nc));
  };

  int rounds = 0;
  for (const auto& s : seed) admit(s);
  std::size_t head = 0;
  while (head < pending.size()) {
    ++rounds;
    const std::size_t layer = pending.size() - head;
    const std::size_t njobs = layer * multipliers.size();
    std::vector<CycMatrix> prod(njobs);
    auto run = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t t = lo; t < hi; ++t)
        prod[t] = multipliers[t % multipliers.size()] * pending[head + t / multipliers.size()];
    };
    const std::size_t nthreads =
        std::min<std::size_t>(threads < 1 ? 1 : threads, njobs ? njobs : 1);
    if (nthreads <= 1) {
      run(0, njobs);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < nthreads; ++w)
        pool.emplace_back(run, njobs * w / nthreads, njobs * (w + 1) / nthreads);
      for (auto& th : pool) th.join();
    }
    head += layer;
    for (const auto& m : prod) admit(m);
  }
  if (rounds_out) *rounds_out = rounds;
  return basis;
}

// Inverse of an invertible matrix as a polynomial in the matrix, read off
// the minimal polynomial; verified by multiplication.
inline CycMatrix poly_inverse(const CycMatrix& a, long p) {
  auto mp = min_poly(a, p);
  assert(mp.size() >= 2 && !mp.front().is_zero());
  CycMatrix acc(a.nrows, a.nrows);
  CycMatrix pw = CycMatrix::identity(a.nrows, p);
  for (std::size_t i = 1; i < mp.size(); ++i) {
    if (!mp[i].is_zero()) acc = acc + mp[i] * pw;
    if (i + 1 < mp.size()) pw = pw * a;
  }
  CycMatrix inv = (-mp.front().inv()) * acc;
  assert(a * inv == CycMatrix::identity(a.nrows, p));
  return inv;
}

struct CornerReport {
  long p = 0;
  int g = 0;
  std::size_t ambient_dim = 0;  // dim Hom(L(0), L) = (2g p^g)(2g 2^g)
  std::size_t ideal_dim = 0;    // dimension the left ideal reached
  bool ideal_complete = true;   // false when the run stopped at the corner ceiling
  std::size_t corner_dim = 0;
  std::size_t expected = 0;  // (2g 2^g)^2
  bool in_hypothesis = false;
  bool verdict = false;  // corner_dim == expected
  int rounds = 0;
  std::uint64_t certificate_prime = 0;  // 0 on the exact engine
};

// The corner of the algebra generated by the lifted braid matrices and
// their inverses at the zero-weight block: close the inclusion of the block
// under left multiplication inside Hom(L(0), L), then cut with the block
// projection.  The projection lies in the generated algebra, so this corner
// equals the corner of the algebra itself.  Large ambients use the
// prime-field engine; its corner count is a lower bound for the exact one,
// and the exact one is at most expected, so reaching expected certifies
// equality.  With early_stop the large runs halt as soon as the corner
// saturates; the ideal dimension is then only partial.
inline CornerReport corner_report(long p, int g, std::size_t guard = kDefaultAmbientGuard,
                                  bool early_stop = true, int threads = 1) {
  BlockSpace bs(p, g);
  const LModule& lm = bs.module();
  CornerReport rep;
  rep.p = p;
  rep.g = g;
  rep.ambient_dim = static_cast<std::size_t>(lm.dim()) * bs.block_dim();
  rep.expected = static_cast<std::size_t>(bs.block_dim()) * bs.block_dim();
  rep.in_hypothesis = (p > 3 && g >= 2);
  if (rep.ambient_dim > guard)
    throw std::runtime_error("corner_report: ambient " + std::to_string(rep.ambient_dim) +
                             " exceeds guard " + std::to_string(guard));

  std::vector<CycMatrix> multipliers;
  for (int l = 1; l <= 2 * g; ++l) {
    multipliers.push_back(lm.psi_hat(l));
    multipliers.push_back(poly_inverse(multipliers.back(), p));
  }
  CycMatrix seed = bs.basis_matrix();

  if (rep.ambient_dim <= kExactCornerAmbient) {
    SubspaceBasis ideal = span_closure({seed}, multipliers, rep.ambient_dim, threads, &rep.rounds);
    rep.ideal_dim = ideal.dim();
    SubspaceBasis corner(seed.nrows * seed.ncols);
    for (std::size_t s = 0; s < ideal.dim(); ++s)
      corner.insert((bs.proj() * unflatten_matrix(ideal.row(s), seed.nrows, seed.ncols)).flatten());
    rep.corner_dim = corner.dim();
  } else {
    ModqContext ctx(p);
    rep.certificate_prime = ctx.q;
    std::vector<ModqSparse> mq;
    for (const auto& m : multipliers) mq.push_back(ModqSparse::from_cyc(m, ctx));
    ModqSparse proj = ModqSparse::from_cyc(bs.proj(), ctx);
    std::vector<std::uint64_t> s0(rep.ambient_dim, 0);
    for (const auto& [i, c] : seed.flatten()) s0[i] = ctx.of_cyc(c);
    auto res = modq_left_closure(ctx, seed.nrows, seed.ncols, {s0}, mq, &proj,
                                 early_stop ? rep.expected : 0);
    rep.ideal_dim = res.dim;
    rep.ideal_complete = res.complete;
    rep.corner_dim = res.corner_dim;
    rep.rounds = res.rounds;
  }
  rep.verdict = (rep.corner_dim == rep.expected);
  return rep;
}

inline std::size_t corner_dimension(long p, int g, std::size_t guard = kDefaultAmbientGuard) {
  return corner_report(p, g, guard).corner_dim;
}

struct FiltrationReport {
  long p = 0;
  int g = 0;
  std::size_t odd_dim = 0;   // algebra generated on the odd factor
  std::size_t even_dim = 0;  // and on the even quotient factor
  std::size_t expected = 0;  // (g 2^g)^2
  bool in_hypothesis = false;
  bool verdict = false;
};

// The filtration-preserving operator family acts on the odd subspace and on
// the even quotient of the zero-weight block; on each factor the algebra it
// generates is expected to be the full endomorphism algebra for p > 3,
// g >= 2.  Both factors are small, so this check is fully exact.
inline FiltrationReport filtration_check(long p, int g,
                                         std::size_t guard = kDefaultAmbientGuard) {
  BlockSpace bs(p, g);
  FiltrationReport rep;
  rep.p = p;
  rep.g = g;
  rep.expected = static_cast<std::size_t>(bs.odd_dim()) * bs.odd_dim();
  rep.in_hypothesis = (p > 3 && g >= 2);
  if (static_cast<std::size_t>(bs.module().dim()) * bs.block_dim() > guard)
    throw std::runtime_error("filtration_check: ambient exceeds guard");

  OperatorFamily f = build_operators(bs);
  std::vector<const CycMatrix*> family;
  for (int k = 1; k <= g - 1; ++k) family.push_back(&f.a[k - 1]);
  for (const auto& m : f.b) family.push_back(&m);
  for (const auto& m : f.d) family.push_back(&m);
  family.push_back(&f.t);
  for (const auto& m : f.b_dag) family.push_back(&m);
  for (const auto& m : f.d_dag) family.push_back(&m);
  family.push_back(&f.t_dag);

  std::vector<CycMatrix> odd, even;
  for (const CycMatrix* m : family) {
    CycMatrix blk = bs.restrict_block(*m);
    assert(bs.preserves_odd(blk));
    odd.push_back(bs.odd_part(blk));
    even.push_back(bs.quotient_part(blk));
  }
  const std::size_t cap = static_cast<std::size_t>(bs.odd_dim()) * bs.odd_dim();
  rep.odd_dim = span_closure(odd, odd, cap).dim();
  rep.even_dim = span_closure(even, even, cap).dim();
  rep.verdict = (rep.odd_dim == rep.expected && rep.even_dim == rep.expected);
  return rep;
}

// The two gluing maps of the irreducibility proof: the projected nilpotent
// parts of the top odd and top even strand operators.
inline CycMatrix theta_operator(const BlockSpace& bs) {
  const LModule& lm = bs.module();
  CycMatrix n = lm.unipotent_closed(2 * bs.g() - 1) - CycMatrix::identity(lm.dim(), lm.p());
  return bs.proj() * n * bs.proj();
}

inline CycMatrix theta_dagger_operator(const BlockSpace& bs) {
  const LModule& lm = bs.module();
  CycMatrix n = lm.unipotent_closed(2 * bs.g()) - CycMatrix::identity(lm.dim(), lm.p());
  return bs.proj() * n * bs.proj();
}

}  // namespace braidrep
