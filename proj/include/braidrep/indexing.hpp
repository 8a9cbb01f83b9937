#pragma once

// Multi-indices in (Z/p)^n packed into a single integer, least-significant
// digit first: idx = v_1 + v_2 p + ... + v_n p^{n-1}.

#include <cassert>
#include <cstdint>
#include <vector>

#include "braidrep/numtheory.hpp"

namespace braidrep {

class PowIndex {
 public:
  PowIndex(long p, int n) : p_(p), n_(n) {
    std::uint64_t s = 1;
    for (int i = 0; i < n_; ++i) {
      s *= static_cast<std::uint64_t>(p_);
      assert(s < (1ull << 31));
    }
    size_ = static_cast<std::uint32_t>(s);
  }

  long p() const { return p_; }
  int n() const { return n_; }
  std::uint32_t size() const { return size_; }

  // 1-based position, matching subscripts i_1..i_n.
  long digit(std::uint32_t idx, int k) const {
    assert(1 <= k && k <= n_);
    for (int i = 1; i < k; ++i) idx /= p_;
    return static_cast<long>(idx % p_);
  }

  std::uint32_t encode(const std::vector<long>& v) const {
    assert(static_cast<int>(v.size()) == n_);
    std::uint64_t idx = 0;
    for (int i = n_ - 1; i >= 0; --i) idx = idx * p_ + smod(v[i], p_);
    return static_cast<std::uint32_t>(idx);
  }

  std::vector<long> decode(std::uint32_t idx) const {
    std::vector<long> v(n_);
    for (int i = 0; i < n_; ++i) {
      v[i] = static_cast<long>(idx % p_);
      idx /= p_;
    }
    return v;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t idx = 0, pw = 1;
    for (int i = 0; i < n_; ++i) {
      idx += pw * static_cast<std::uint64_t>(
                      smod(static_cast<long>(a % p_) + static_cast<long>(b % p_), p_));
      a /= p_;
      b /= p_;
      pw *= p_;
    }
    return static_cast<std::uint32_t>(idx);
  }

  std::uint32_t neg(std::uint32_t a) const {
    std::uint64_t idx = 0, pw = 1;
    for (int i = 0; i < n_; ++i) {
      idx += pw * static_cast<std::uint64_t>(smod(-static_cast<long>(a % p_), p_));
      a /= p_;
      pw *= p_;
    }
    return static_cast<std::uint32_t>(idx);
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

  // a + delta * e_k (1-based k); k = n+1 is allowed and ignored, matching
  // the convention that the out-of-range coordinate vector is zero.
  std::uint32_t shift(std::uint32_t a, int k, long delta) const {
    if (k == n_ + 1) return a;
    assert(1 <= k && k <= n_);
    std::uint64_t pw = 1;
    for (int i = 1; i < k; ++i) pw *= p_;
    long d = static_cast<long>((a / pw) % p_);
    return static_cast<std::uint32_t>(a + pw * (smod(d + delta, p_) - d));
  }

  long dot(std::uint32_t a, std::uint32_t b) const {
    long s = 0;
    for (int i = 0; i < n_; ++i) {
      s += static_cast<long>(a % p_) * static_cast<long>(b % p_);
      a /= p_;
      b /= p_;
    }
    return smod(s, p_);
  }

 private:
  long p_;
  int n_;
  std::uint32_t size_;
};

}  // namespace braidrep
