#pragma once

// Small number-theoretic helpers shared by the exact and modular layers.

#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

namespace braidrep {

// Representative of a mod m in [0, m).
inline long smod(long a, long m) {
  assert(m > 0);
  long r = a % m;
  return r < 0 ? r + m : r;
}

inline long mod_inverse(long a, long m) {
  a = smod(a, m);
  long t = 0, new_t = 1, r = m, new_r = a;
  while (new_r != 0) {
    long q = r / new_r;
    long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  assert(r == 1 && "not invertible");
  return smod(t, m);
}

// n(n+1)/2 mod p for odd p.
inline long tau_q(long p, long n) {
  long half = mod_inverse(2, p);
  long nn = smod(n, p);
  return smod(nn * smod(nn + 1, p) % p * half, p);
}

// Image of tau_q as a membership table of size p.
inline std::vector<bool> tau_image(long p) {
  std::vector<bool> in(p, false);
  for (long n = 0; n < p; ++n) in[tau_q(p, n)] = true;
  return in;
}

// Smallest m in [0,(p-1)/2] with m^2 = a mod p, if any.
inline std::optional<long> sqrt_mod(long p, long a) {
  a = smod(a, p);
  for (long m = 0; m <= (p - 1) / 2; ++m)
    if (m * m % p == a) return m;
  return std::nullopt;
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Smallest prime q >= lo with q = 1 mod p; skip lets callers step to the
// next such prime deterministically.
inline std::uint64_t prime_1_mod_p(long p, std::uint64_t lo, int skip = 0) {
  std::uint64_t up = static_cast<std::uint64_t>(p);
  std::uint64_t q = lo + (up + 1 - lo % up) % up;
  for (;;) {
    if (is_prime_u64(q)) {
      if (skip == 0) return q;
      --skip;
    }
    q += up;
  }
}

}  // namespace braidrep
