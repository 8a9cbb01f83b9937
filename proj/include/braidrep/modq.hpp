#pragma once

// Span computations over a word-size prime field F_q with q = 1 (mod p).
// Sending eta to a primitive p-th root of unity in F_q is a ring
// homomorphism wherever the denominators stay invertible, so the dimension
// of a specialized span never exceeds the exact dimension over Q(eta).
// Every span measured here also sits inside a space whose exact dimension
// is bounded a priori; when the specialized span reaches that ceiling, the
// exact dimension is pinned without any exact elimination.

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "braidrep/cyclotomic.hpp"
#include "braidrep/matrix.hpp"

namespace braidrep {

// Ambient bound shared by the guard and the overflow analysis below.
inline constexpr std::size_t kModqMaxAmbient = 4096;

// Field context: the least prime q = 1 (mod p) with q >= 2^24, and a fixed
// primitive p-th root of unity.  Keeping q below 2^25 lets row reductions
// accumulate up to kModqMaxAmbient products in a plain 64-bit lane before a
// single modular pass: (q-1)^2 * 4096 + q < 2^64.
struct ModqContext {
  long p = 0;
  std::uint64_t q = 0;
  std::uint64_t omega = 0;
  std::vector<std::uint64_t> omega_pow;  // omega^0 .. omega^{p-2}

  explicit ModqContext(long p_in) : p(p_in) {
    assert(p >= 3);
    std::uint64_t up = static_cast<std::uint64_t>(p);
    std::uint64_t n = 1ull << 24;
    n += (1 + up - n % up) % up;
    while (!is_prime_u64(n)) n += up;
    q = n;
    assert(q < (1ull << 25));
    for (std::uint64_t x = 2;; ++x) {
      std::uint64_t w = powmod_u64(x, (q - 1) / up, q);
      if (w != 1) {
        omega = w;
        break;
      }
    }
    assert(powmod_u64(omega, up, q) == 1);
    omega_pow.assign(p - 1, 1);
    for (long i = 1; i <= p - 2; ++i) omega_pow[i] = mulmod_u64(omega_pow[i - 1], omega, q);
  }

  std::uint64_t inv(std::uint64_t a) const {
    assert(a % q != 0);
    return powmod_u64(a, q - 2, q);
  }

  std::uint64_t of_z(const Z& z) const {
    Z m = z % q;
    if (m < 0) m += q;
    return m.convert_to<std::uint64_t>();
  }

  std::uint64_t of_cyc(const Cyc& c) const {
    if (c.is_zero()) return 0;
    assert(c.prime() == p);
    std::uint64_t d = of_z(c.den());
    if (d == 0) throw std::runtime_error("modq: denominator vanishes mod q");
    std::uint64_t acc = 0;
    for (long i = 0; i <= p - 2; ++i)
      acc = (acc + mulmod_u64(of_z(c.num(i)), omega_pow[i], q)) % q;
    return mulmod_u64(acc, inv(d), q);
  }
};

struct ModqSparse {
  std::uint32_t nrows = 0, ncols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> rows;

  ModqSparse() = default;
  ModqSparse(std::uint32_t r, std::uint32_t c) : nrows(r), ncols(c), rows(r) {}

  static ModqSparse from_cyc(const CycMatrix& m, const ModqContext& ctx) {
    ModqSparse out(m.nrows, m.ncols);
    for (std::uint32_t r = 0; r < m.nrows; ++r)
      for (const auto& [c, v] : m.rows[r]) {
        std::uint64_t x = ctx.of_cyc(v);
        if (x) out.rows[r].emplace_back(c, x);
      }
    return out;
  }
};

// Row echelon basis with immutable normalized rows (no back substitution);
// the pivot of each stored row is 1 and pivots are pairwise distinct, which
// is all that dimension counting needs.
class ModqEchelon {
 public:
  ModqEchelon(std::uint32_t ambient, const ModqContext& ctx)
      : ambient_(ambient), q_(ctx.q), pivot_of_(ambient, -1) {
    assert(ambient <= kModqMaxAmbient);
  }

  std::uint32_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<std::vector<std::uint64_t>>& rows() const { return rows_; }

  // Reduces v (entries < q) against the stored rows and keeps the
  // normalized remainder if nonzero; v is consumed.  Row combinations
  // accumulate raw 64-bit products, one modular pass per coordinate.
  bool insert(std::vector<std::uint64_t>& v, const ModqContext& ctx) {
    assert(v.size() == ambient_);
    std::uint32_t lead = ambient_;
    for (std::uint32_t i = 0; i < ambient_; ++i) {
      v[i] %= q_;
      if (!v[i]) continue;
      std::int32_t ri = pivot_of_[i];
      if (ri < 0) {
        lead = i;
        break;
      }
      const std::uint64_t* row = rows_[ri].data();
      std::uint64_t c = q_ - v[i];
      for (std::uint32_t j = i; j < ambient_; ++j) v[j] += c * row[j];
    }
    if (lead == ambient_) return false;
    std::uint64_t s = ctx.inv(v[lead] % q_);
    std::vector<std::uint64_t> row(ambient_, 0);
    for (std::uint32_t j = lead; j < ambient_; ++j) row[j] = mulmod_u64(v[j] % q_, s, q_);
    pivot_of_[lead] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }

 private:
  std::uint32_t ambient_;
  std::uint64_t q_;
  std::vector<std::int32_t> pivot_of_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

// Dense row-major product M * Z for sparse square M and Z with ncols
// columns; entries of z must be < q and come back < q.
inline std::vector<std::uint64_t> modq_apply_left(const ModqSparse& m,
                                                  const std::vector<std::uint64_t>& z,
                                                  std::uint32_t ncols, std::uint64_t q) {
  assert(m.nrows <= kModqMaxAmbient);
  assert(z.size() == static_cast<std::size_t>(m.ncols) * ncols);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(m.nrows) * ncols, 0);
  for (std::uint32_t r = 0; r < m.nrows; ++r) {
    std::uint64_t* dst = out.data() + static_cast<std::size_t>(r) * ncols;
    for (const auto& [k, a] : m.rows[r]) {
      const std::uint64_t* src = z.data() + static_cast<std::size_t>(k) * ncols;
      for (std::uint32_t c = 0; c < ncols; ++c) dst[c] += a * src[c];
    }
    for (std::uint32_t c = 0; c < ncols; ++c) dst[c] %= q;
  }
  return out;
}

inline std::size_t modq_rank(const ModqSparse& m, const ModqContext& ctx) {
  ModqEchelon b(m.ncols, ctx);
  for (std::uint32_t r = 0; r < m.nrows; ++r) {
    if (m.rows[r].empty()) continue;
    std::vector<std::uint64_t> v(m.ncols, 0);
    for (const auto& [c, x] : m.rows[r]) v[c] = x;
    b.insert(v, ctx);
  }
  return b.dim();
}

struct ModqClosureReport {
  std::size_t dim = 0;         // span dimension reached
  std::size_t corner_dim = 0;  // dim of corner_left * element span, if tracked
  int rounds = 0;
  bool complete = true;  // false when stopped early at the corner target
};

// Left-multiplication closure of the seed matrices (nrows x ncols, dense
// row-major, entries < q) under the square multipliers.  Every admitted
// basis row is snapshotted and multiplied exactly once, in insertion order,
// so the result is deterministic.  With corner_left set, the span of
// corner_left * element is tracked; a nonzero corner_target stops the run
// as soon as that span reaches it (it can only keep growing).  Reaching the
// full ambient space also stops the run: the full space is closed, and the
// tracked corner span is then rank(corner_left) * ncols.
inline ModqClosureReport modq_left_closure(const ModqContext& ctx, std::uint32_t nrows,
                                           std::uint32_t ncols,
                                           const std::vector<std::vector<std::uint64_t>>& seed,
                                           const std::vector<ModqSparse>& multipliers,
                                           const ModqSparse* corner_left = nullptr,
                                           std::size_t corner_target = 0) {
  const std::size_t ambient = static_cast<std::size_t>(nrows) * ncols;
  if (ambient > kModqMaxAmbient)
    throw std::runtime_error("modq_left_closure: ambient " + std::to_string(ambient) +
                             " exceeds guard " + std::to_string(kModqMaxAmbient));
  for (const auto& m : multipliers) assert(m.nrows == nrows && m.ncols == nrows);

  ModqEchelon basis(static_cast<std::uint32_t>(ambient), ctx);
  ModqEchelon corner(static_cast<std::uint32_t>(ambient), ctx);
  std::vector<std::vector<std::uint64_t>> pending;

  auto admit = [&](std::vector<std::uint64_t> v) {
    if (!basis.insert(v, ctx)) return;
    pending.push_back(basis.rows().back());
    if (corner_left) {
      auto cv = modq_apply_left(*corner_left, pending.back(), ncols, ctx.q);
      corner.insert(cv, ctx);
    }
  };
  auto done = [&] {
    if (basis.dim() == ambient) return true;
    return corner_left && corner_target && corner.dim() >= corner_target;
  };

  ModqClosureReport rep;
  for (const auto& s : seed) admit(s);
  std::size_t head = 0;
  while (head < pending.size() && !done()) {
    std::size_t layer_end = pending.size();
    ++rep.rounds;
    for (; head < layer_end && !done(); ++head)
      for (const auto& m : multipliers) {
        admit(modq_apply_left(m, pending[head], ncols, ctx.q));
        if (done()) break;
      }
  }
  rep.dim = basis.dim();
  rep.complete = (head == pending.size());
  if (basis.dim() == ambient) {
    rep.complete = true;
    if (corner_left) rep.corner_dim = modq_rank(*corner_left, ctx) * ncols;
  } else if (corner_left) {
    rep.corner_dim = corner.dim();
  }
  return rep;
}

}  // namespace braidrep
