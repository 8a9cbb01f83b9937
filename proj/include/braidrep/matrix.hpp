#pragma once

// Sparse exact linear algebra over Q(eta): sparse vectors, row-major sparse
// matrices, and an incremental reduced echelon basis with optional
// dependence tracking (used for minimal polynomials).
//
// Echelon pivoting always chooses the lowest-index nonzero coordinate, and
// the stored basis is the fully reduced echelon form, which is canonical for
// the subspace regardless of insertion order.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "braidrep/cyclotomic.hpp"

namespace braidrep {

using SparseVec = std::vector<std::pair<std::uint32_t, Cyc>>;  // sorted, nonzero

inline void sv_prune(SparseVec& v) {
  SparseVec out;
  out.reserve(v.size());
  for (auto& e : v)
    if (!e.second.is_zero()) out.push_back(std::move(e));
  v = std::move(out);
}

// x + c*y, both sorted.
inline SparseVec sv_axpy(const SparseVec& x, const Cyc& c, const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      Cyc v = c * y[j].second;
      if (!v.is_zero()) out.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      Cyc v = x[i].second + c * y[j].second;
      if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

inline SparseVec sv_merge(const SparseVec& x, const SparseVec& y, int sign) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      Cyc v = sign > 0 ? y[j].second : -y[j].second;
      out.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      Cyc v = sign > 0 ? x[i].second + y[j].second : x[i].second - y[j].second;
      if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

inline SparseVec sv_add(const SparseVec& x, const SparseVec& y) { return sv_merge(x, y, +1); }
inline SparseVec sv_sub(const SparseVec& x, const SparseVec& y) { return sv_merge(x, y, -1); }

inline SparseVec sv_scale(const SparseVec& x, const Cyc& c) {
  SparseVec out;
  out.reserve(x.size());
  for (const auto& e : x) {
    Cyc v = c * e.second;
    if (!v.is_zero()) out.emplace_back(e.first, std::move(v));
  }
  return out;
}

inline const Cyc* sv_get(const SparseVec& x, std::uint32_t idx) {
  auto it = std::lower_bound(x.begin(), x.end(), idx,
                             [](const auto& e, std::uint32_t i) { return e.first < i; });
  if (it != x.end() && it->first == idx) return &it->second;
  return nullptr;
}

struct CycMatrix {
  std::uint32_t nrows = 0, ncols = 0;
  std::vector<SparseVec> rows;

  CycMatrix() = default;
  CycMatrix(std::uint32_t r, std::uint32_t c) : nrows(r), ncols(c), rows(r) {}

  static CycMatrix identity(std::uint32_t n, long p) {
    CycMatrix m(n, n);
    for (std::uint32_t i = 0; i < n; ++i) m.rows[i].emplace_back(i, Cyc::one(p));
    return m;
  }

  void set(std::uint32_t r, std::uint32_t c, const Cyc& v) {
    assert(r < nrows && c < ncols);
    auto& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::uint32_t i) { return e.first < i; });
    if (it != row.end() && it->first == c) {
      if (v.is_zero())
        row.erase(it);
      else
        it->second = v;
    } else if (!v.is_zero()) {
      row.insert(it, {c, v});
    }
  }

  void add_at(std::uint32_t r, std::uint32_t c, const Cyc& v) {
    auto& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::uint32_t i) { return e.first < i; });
    if (it != row.end() && it->first == c) {
      it->second += v;
      if (it->second.is_zero()) row.erase(it);
    } else if (!v.is_zero()) {
      row.insert(it, {c, v});
    }
  }

  Cyc get(std::uint32_t r, std::uint32_t c) const {
    const Cyc* p = sv_get(rows[r], c);
    return p ? *p : Cyc();
  }

  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    assert(a.ncols == b.nrows);
    CycMatrix out(a.nrows, b.ncols);
    std::vector<Cyc> acc(b.ncols);
    std::vector<char> seen(b.ncols, 0);
    std::vector<std::uint32_t> touched;
    for (std::uint32_t i = 0; i < a.nrows; ++i) {
      touched.clear();
      for (const auto& [k, av] : a.rows[i]) {
        for (const auto& [j, bv] : b.rows[k]) {
          if (!seen[j]) {
            seen[j] = 1;
            touched.push_back(j);
          }
          acc[j] += av * bv;
        }
      }
      std::sort(touched.begin(), touched.end());
      auto& row = out.rows[i];
      row.reserve(touched.size());
      for (std::uint32_t j : touched) {
        if (!acc[j].is_zero()) row.emplace_back(j, acc[j]);
        acc[j] = Cyc();
        seen[j] = 0;
      }
    }
    return out;
  }

  friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
    assert(a.nrows == b.nrows && a.ncols == b.ncols);
    CycMatrix out(a.nrows, a.ncols);
    for (std::uint32_t i = 0; i < a.nrows; ++i) out.rows[i] = sv_add(a.rows[i], b.rows[i]);
    return out;
  }

  friend CycMatrix operator-(const CycMatrix& a, const CycMatrix& b);

  friend CycMatrix operator*(const CycMatrix& a, const Cyc& c) { return c * a; }
  friend CycMatrix operator*(const Cyc& c, const CycMatrix& a) {
    CycMatrix out(a.nrows, a.ncols);
    for (std::uint32_t i = 0; i < a.nrows; ++i) out.rows[i] = sv_scale(a.rows[i], c);
    return out;
  }

  CycMatrix pow(unsigned e) const;

  // Matrix-vector product (column-vector convention).
  SparseVec apply(const SparseVec& x) const {
    SparseVec out;
    for (std::uint32_t i = 0; i < nrows; ++i) {
      Cyc s;
      size_t a = 0, b = 0;
      const auto& row = rows[i];
      while (a < row.size() && b < x.size()) {
        if (row[a].first < x[b].first)
          ++a;
        else if (x[b].first < row[a].first)
          ++b;
        else {
          s += row[a].second * x[b].second;
          ++a;
          ++b;
        }
      }
      if (!s.is_zero()) out.emplace_back(i, std::move(s));
    }
    return out;
  }

  bool is_zero() const {
    for (const auto& r : rows)
      if (!r.empty()) return false;
    return true;
  }

  friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
    return a.nrows == b.nrows && a.ncols == b.ncols && a.rows == b.rows;
  }
  friend bool operator!=(const CycMatrix& a, const CycMatrix& b) { return !(a == b); }

  size_t nnz() const {
    size_t n = 0;
    for (const auto& r : rows) n += r.size();
    return n;
  }

  // Row-major flattening for subspace computations in Hom spaces.
  SparseVec flatten() const {
    SparseVec out;
    out.reserve(nnz());
    for (std::uint32_t i = 0; i < nrows; ++i)
      for (const auto& [j, v] : rows[i]) out.emplace_back(i * ncols + j, v);
    return out;
  }
};

inline CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) {
  assert(a.nrows == b.nrows && a.ncols == b.ncols);
  CycMatrix out(a.nrows, a.ncols);
  for (std::uint32_t i = 0; i < a.nrows; ++i) out.rows[i] = sv_sub(a.rows[i], b.rows[i]);
  return out;
}

inline CycMatrix CycMatrix::pow(unsigned e) const {
  assert(nrows == ncols);
  long p = 3;
  for (const auto& r : rows)
    if (!r.empty()) {
      p = r.front().second.prime();
      break;
    }
  CycMatrix result = identity(nrows, p);
  CycMatrix base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

// Incremental reduced echelon basis.  Rows are kept fully reduced with unit
// pivots; the stored form is canonical for the spanned subspace.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::uint32_t ambient, bool tracked = false)
      : ambient_(ambient), tracked_(tracked) {}

  std::uint32_t ambient() const { return ambient_; }
  size_t dim() const { return rows_.size(); }

  SparseVec reduce(SparseVec v) const {
    for (;;) {
      const std::pair<std::uint32_t, size_t>* hit = nullptr;
      std::pair<std::uint32_t, size_t> local;
      for (const auto& e : v) {
        auto it = pivot_.find(e.first);
        if (it != pivot_.end()) {
          local = {e.first, it->second};
          hit = &local;
          break;
        }
      }
      if (!hit) return v;
      const Cyc c = *sv_get(v, hit->first);
      v = sv_axpy(v, -c, rows_[hit->second]);
    }
  }

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  // Insert; returns true if the vector was independent.
  bool insert(const SparseVec& v) { return do_insert(v).first; }

  // Insert with dependence tracking.  If v is dependent on the previously
  // inserted sequence, returns coefficients c with v = sum_k c[k]*inserted_k
  // (indexed over all prior insert_tracked calls).  Otherwise nullopt.
  std::optional<std::vector<Cyc>> insert_tracked(const SparseVec& v) {
    assert(tracked_);
    auto [grew, dep] = do_insert(v);
    if (grew) return std::nullopt;
    return dep;
  }

  // Canonical rows sorted by pivot.
  std::vector<SparseVec> canonical_rows() const {
    std::vector<SparseVec> out;
    out.reserve(rows_.size());
    for (const auto& [piv, slot] : pivot_) out.push_back(rows_[slot]);
    return out;
  }

  const std::map<std::uint32_t, size_t>& pivots() const { return pivot_; }
  const SparseVec& row(size_t slot) const { return rows_[slot]; }

 private:
  std::pair<bool, std::vector<Cyc>> do_insert(const SparseVec& v0) {
    ++inserted_count_;
    if (v0.empty()) return {false, std::vector<Cyc>(inserted_count_ - 1)};
    std::vector<Cyc> expr;
    if (tracked_) {
      expr.assign(inserted_count_, Cyc());
      expr[inserted_count_ - 1] = Cyc::one(field_p(v0));
    }
    SparseVec v = v0;
    for (;;) {
      size_t hit_slot = 0;
      std::uint32_t hit_idx = 0;
      bool found = false;
      for (const auto& e : v) {
        auto it = pivot_.find(e.first);
        if (it != pivot_.end()) {
          hit_idx = e.first;
          hit_slot = it->second;
          found = true;
          break;
        }
      }
      if (!found) break;
      const Cyc c = *sv_get(v, hit_idx);
      v = sv_axpy(v, -c, rows_[hit_slot]);
      if (tracked_) axpy_expr(expr, -c, exprs_[hit_slot]);
    }
    if (v.empty()) {
      // dependence: 0 = v0 - sum(...), so v0 = -expr restricted to earlier.
      std::vector<Cyc> dep;
      if (tracked_) {
        dep.assign(inserted_count_ - 1, Cyc());
        for (size_t k = 0; k + 1 < expr.size(); ++k) dep[k] = -expr[k];
      }
      return {false, dep};
    }
    // Normalize pivot to 1.
    const Cyc lead_inv = v.front().second.inv();
    std::uint32_t piv = v.front().first;
    v = sv_scale(v, lead_inv);
    if (tracked_) scale_expr(expr, lead_inv);
    // Eliminate the new pivot from existing rows.
    for (auto& [opiv, slot] : pivot_) {
      const Cyc* c = sv_get(rows_[slot], piv);
      if (c) {
        Cyc cc = *c;
        rows_[slot] = sv_axpy(rows_[slot], -cc, v);
        if (tracked_) axpy_expr(exprs_[slot], -cc, expr);
      }
    }
    pivot_[piv] = rows_.size();
    rows_.push_back(std::move(v));
    if (tracked_) exprs_.push_back(std::move(expr));
    return {true, {}};
  }

  static long field_p(const SparseVec& v) { return v.empty() ? 0 : v.front().second.prime(); }

  static void axpy_expr(std::vector<Cyc>& x, const Cyc& c, const std::vector<Cyc>& y) {
    if (x.size() < y.size()) x.resize(y.size());
    for (size_t i = 0; i < y.size(); ++i) x[i] += c * y[i];
  }

  static void scale_expr(std::vector<Cyc>& x, const Cyc& c) {
    for (auto& v : x) v *= c;
  }

  std::uint32_t ambient_;
  bool tracked_;
  size_t inserted_count_ = 0;
  std::vector<SparseVec> rows_;
  std::vector<std::vector<Cyc>> exprs_;
  std::map<std::uint32_t, size_t> pivot_;
};

inline size_t matrix_rank(const CycMatrix& m) {
  SubspaceBasis b(m.ncols);
  for (const auto& r : m.rows)
    if (!r.empty()) b.insert(r);
  return b.dim();
}

// Basis of {x : Mx = 0} from the reduced echelon form of the row space.
inline std::vector<SparseVec> kernel_basis(const CycMatrix& m, long p) {
  SubspaceBasis b(m.ncols);
  for (const auto& r : m.rows)
    if (!r.empty()) b.insert(r);
  std::vector<SparseVec> out;
  auto rows = b.canonical_rows();
  const auto& pivots = b.pivots();
  for (std::uint32_t f = 0; f < m.ncols; ++f) {
    if (pivots.count(f)) continue;
    SparseVec x;
    for (const auto& row : rows) {
      const Cyc* c = sv_get(row, f);
      if (c) x.emplace_back(row.front().first, -*c);
    }
    x.emplace_back(f, Cyc::one(p));
    std::sort(x.begin(), x.end(), [](const auto& a, const auto& bb) { return a.first < bb.first; });
    out.push_back(std::move(x));
  }
  return out;
}

// Monic minimal polynomial of a square matrix, coefficients low to high.
inline std::vector<Cyc> min_poly(const CycMatrix& a, long p) {
  assert(a.nrows == a.ncols);
  SubspaceBasis basis(a.nrows * a.ncols, /*tracked=*/true);
  CycMatrix pw = CycMatrix::identity(a.nrows, p);
  for (;;) {
    auto dep = basis.insert_tracked(pw.flatten());
    if (dep) {
      // pw = sum dep[k] * A^k, so minimal polynomial is t^deg - sum dep_k t^k.
      std::vector<Cyc> coeffs(dep->size() + 1);
      for (size_t k = 0; k < dep->size(); ++k) coeffs[k] = -(*dep)[k];
      coeffs[dep->size()] = Cyc::one(p);
      return coeffs;
    }
    pw = pw * a;
  }
}

}  // namespace braidrep
