#pragma once

// Exact arithmetic in the cyclotomic field Q(eta), eta a primitive p-th root
// of unity, p an odd prime.  Elements are stored on the power basis
// 1, eta, ..., eta^{p-2} with a common positive denominator, kept in lowest
// terms so that equality is coefficient-wise.

#include <boost/multiprecision/gmp.hpp>

#include <cassert>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "braidrep/numtheory.hpp"

namespace braidrep {

using Z = boost::multiprecision::mpz_int;
using Q = boost::multiprecision::mpq_rational;

class Cyc {
 public:
  // Default-constructed value is an untyped zero: it adapts to the field of
  // the other operand.  This keeps containers of Cyc usable without
  // threading p everywhere.
  Cyc() : p_(0), den_(1) {}

  static Cyc zero(long p) { return Cyc(p); }

  static Cyc one(long p) {
    Cyc r(p);
    r.c_[0] = 1;
    return r;
  }

  static Cyc from_q(long p, const Q& q) {
    Cyc r(p);
    r.c_[0] = boost::multiprecision::numerator(q);
    r.den_ = boost::multiprecision::denominator(q);
    r.normalize();
    return r;
  }

  static Cyc from_z(long p, const Z& z) {
    Cyc r(p);
    r.c_[0] = z;
    return r;
  }

  // eta^k for any integer k.
  static Cyc eta(long p, long k) {
    Cyc r(p);
    long e = smod(k, p);
    if (e <= p - 2) {
      r.c_[e] = 1;
    } else {
      for (auto& x : r.c_) x = -1;
    }
    return r;
  }

  // eta^e for a rational exponent e = a/b with gcd(b,p)=1, read modulo p.
  static Cyc eta_q(long p, const Q& e) {
    long a = static_cast<long>(smod_z(boost::multiprecision::numerator(e), p));
    long b = static_cast<long>(smod_z(boost::multiprecision::denominator(e), p));
    assert(b != 0 && "exponent denominator must be prime to p");
    return eta(p, a * mod_inverse(b, p) % p);
  }

  long prime() const { return p_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  bool is_rational() const {
    if (p_ == 0) return true;
    for (long i = 1; i <= p_ - 2; ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  Q rational_value() const {
    assert(is_rational());
    if (p_ == 0) return Q(0);
    return Q(c_[0]) / Q(den_);
  }

  friend Cyc operator+(const Cyc& a, const Cyc& b) {
    if (a.p_ == 0) return b;
    if (b.p_ == 0) return a;
    assert(a.p_ == b.p_);
    Cyc r(a.p_);
    Z g = boost::multiprecision::gcd(a.den_, b.den_);
    Z fa = b.den_ / g, fb = a.den_ / g;
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] * fa + b.c_[i] * fb;
    r.den_ = a.den_ * fa;
    r.normalize();
    return r;
  }

  friend Cyc operator-(const Cyc& a) {
    Cyc r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }

  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    long p = a.p_ ? a.p_ : b.p_;
    if (p == 0) return Cyc();
    if (a.p_ == 0 || b.p_ == 0 || a.is_zero() || b.is_zero()) return Cyc(p);
    assert(a.p_ == b.p_);
    long n = p - 1;
    std::vector<Z> conv(2 * n - 1);
    for (long i = 0; i < n; ++i) {
      if (a.c_[i] == 0) continue;
      for (long j = 0; j < n; ++j) {
        if (b.c_[j] == 0) continue;
        conv[i + j] += a.c_[i] * b.c_[j];
      }
    }
    Cyc r(p);
    for (long e = 0; e <= 2 * n - 2; ++e) {
      if (conv[e] == 0) continue;
      if (e <= n - 1) {
        r.c_[e] += conv[e];
      } else if (e == n) {
        for (long j = 0; j < n; ++j) r.c_[j] -= conv[e];
      } else {
        r.c_[e - p] += conv[e];
      }
    }
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
  }

  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

  friend Cyc operator*(const Cyc& a, const Q& q) {
    if (a.p_ == 0) return Cyc();
    Cyc r = a;
    Z nq = boost::multiprecision::numerator(q);
    for (auto& x : r.c_) x *= nq;
    r.den_ *= boost::multiprecision::denominator(q);
    r.normalize();
    return r;
  }

  friend Cyc operator*(const Q& q, const Cyc& a) { return a * q; }

  friend Cyc operator*(const Cyc& a, long s) { return a * Q(s); }
  friend Cyc operator*(long s, const Cyc& a) { return a * Q(s); }

  // Field automorphism eta -> eta^k, k nonzero mod p.
  Cyc galois(long k) const {
    if (p_ == 0) return *this;
    long kk = smod(k, p_);
    assert(kk != 0);
    Cyc r(p_);
    for (long i = 0; i <= p_ - 2; ++i) {
      if (c_[i] == 0) continue;
      long e = i * kk % p_;
      if (e <= p_ - 2) {
        r.c_[e] += c_[i];
      } else {
        for (long j = 0; j <= p_ - 2; ++j) r.c_[j] -= c_[i];
      }
    }
    r.den_ = den_;
    r.normalize();
    return r;
  }

  Cyc conj() const { return p_ ? galois(p_ - 1) : *this; }

  // Multiplicative inverse via the product of Galois conjugates: the norm
  // b * prod_{k=2}^{p-1} sigma_k(b) is rational.
  Cyc inv() const {
    assert(p_ != 0 && !is_zero());
    Cyc prod = one(p_);
    for (long k = 2; k <= p_ - 1; ++k) prod *= galois(k);
    Cyc nrm = (*this) * prod;
    assert(nrm.is_rational());
    Q q = nrm.rational_value();
    assert(q != 0);
    return prod * (Q(1) / q);
  }

  friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inv(); }

  friend bool operator==(const Cyc& a, const Cyc& b) {
    if (a.p_ == 0 || b.p_ == 0) return a.is_zero() && b.is_zero();
    assert(a.p_ == b.p_);
    return a.den_ == b.den_ && a.c_ == b.c_;
  }

  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  // Coefficients as individually reduced rationals, length p-1.
  std::vector<Q> coeffs_q() const {
    std::vector<Q> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(Q(x) / Q(den_));
    return out;
  }

  const Z& num(size_t i) const { return c_[i]; }
  const Z& den() const { return den_; }

  std::string str() const {
    if (p_ == 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i <= p_ - 2; ++i) {
      if (c_[i] == 0) continue;
      if (!first) os << (c_[i] > 0 ? "+" : "");
      os << c_[i];
      if (i > 0) os << "*e^" << i;
      first = false;
    }
    if (first) return "0";
    if (den_ != 1) {
      std::ostringstream full;
      full << "(" << os.str() << ")/" << den_;
      return full.str();
    }
    return os.str();
  }

 private:
  explicit Cyc(long p) : p_(p), c_(p - 1), den_(1) { assert(p >= 3); }

  static Z smod_z(const Z& a, long m) {
    Z r = a % m;
    return r < 0 ? r + m : r;
  }

  void normalize() {
    Z g = 0;
    for (const auto& x : c_) g = boost::multiprecision::gcd(g, x);
    if (g == 0) {
      den_ = 1;
      return;
    }
    g = boost::multiprecision::gcd(g, den_);
    if (den_ < 0) g = -g;
    if (g != 1) {
      for (auto& x : c_) x /= g;
      den_ /= g;
    }
  }

  long p_;
  std::vector<Z> c_;
  Z den_;
};

// Quadratic Gauss sum sum_{t mod p} eta^{a t^2} for rational a (denominator
// prime to p).
inline Cyc gauss_sum(long p, const Q& a) {
  Cyc s = Cyc::zero(p);
  for (long t = 0; t < p; ++t) s += Cyc::eta_q(p, a * t * t);
  return s;
}

}  // namespace braidrep
