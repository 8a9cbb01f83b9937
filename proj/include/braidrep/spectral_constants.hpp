#pragma once

// Closed-form spectral constants attached to the quadratic character data of
// Z/p: the two-term exponential sums bhat/chat indexed by a in the image of
// tau_q, and the derived constants lambda_s, gamma_s, h used by the spectral
// projection operators.

#include <cassert>

#include "braidrep/cyclotomic.hpp"
#include "braidrep/numtheory.hpp"

namespace braidrep {

// a is in the image of tau_q iff 2a + 1/4 is a square mod p; the canonical
// root m lies in [0,(p-1)/2].
inline std::optional<long> spectral_m(long p, long a) {
  long x = smod(2 * a + mod_inverse(4, p), p);
  return sqrt_mod(p, x);
}

// bhat(a,s) = eta^{ms} + eta^{-ms} with m^2 = 2a + 1/4, zero off the image
// of tau_q.  At the degenerate root m = 0 (a = -1/8) this equals 2; that is
// the weight the constants gamma_s are built from.
inline Cyc bhat(long p, long a, long s) {
  auto m = spectral_m(p, a);
  if (!m) return Cyc::zero(p);
  return Cyc::eta(p, *m * s) + Cyc::eta(p, -*m * s);
}

// Sum of eta^{ms} over the actual root set {m : m^2 = 2a + 1/4}: one term at
// the degenerate root, two otherwise.  This is the version satisfying
// sum_{n : tau(n) = a} eta^{ns} = eta^{-s/2} * bhat_fiber(a,s), and it is the
// coefficient that appears in the spectral projection operators.
inline Cyc bhat_fiber(long p, long a, long s) {
  auto m = spectral_m(p, a);
  if (!m) return Cyc::zero(p);
  if (*m == 0) return Cyc::one(p);
  return Cyc::eta(p, *m * s) + Cyc::eta(p, -*m * s);
}

// chat(a,s): zero off the image of tau_q; degenerate cases a = 0 (m = 1/2)
// and a = -1/8 (m = 0) have their own closed forms.
inline Cyc chat(long p, long a, long s) {
  auto mm = spectral_m(p, a);
  if (!mm) return Cyc::zero(p);
  long m = *mm;
  Q s_half = Q(2 * s - 1) / 2;  // s - 1/2
  if (m == (p - 1) / 2) {       // a = 0
    Cyc numr = Cyc::eta_q(p, s_half) + Cyc::eta_q(p, -s_half);
    Cyc denr = Cyc::eta_q(p, Q(-1) / 2) - Cyc::eta_q(p, Q(1) / 2);
    return numr * denr.inv();
  }
  if (m == 0) {  // a = -1/8
    Cyc numr = Cyc::eta_q(p, s_half / 2) + Cyc::eta_q(p, -s_half / 2);
    Cyc denr = Cyc::eta_q(p, Q(-1) / 4) - Cyc::eta_q(p, Q(1) / 4);
    return numr * denr.inv();
  }
  Q m_minus = Q(2 * m - 1) / 2;  // m - 1/2
  Q m_plus = Q(2 * m + 1) / 2;   // m + 1/2
  Cyc t1 = (Cyc::eta_q(p, m_minus * s_half) + Cyc::eta_q(p, -m_minus * s_half)) *
           (Cyc::eta_q(p, m_minus / 2) - Cyc::eta_q(p, -m_minus / 2)).inv();
  Cyc t2 = (Cyc::eta_q(p, m_plus * s_half) + Cyc::eta_q(p, -m_plus * s_half)) *
           (Cyc::eta_q(p, m_plus / 2) - Cyc::eta_q(p, -m_plus / 2)).inv();
  return t1 - t2;
}

// (1+eta) / (1+eta^{1/2})^2, the weight mixing the a=0 and a=-1/8 channels.
inline Cyc channel_weight(long p) {
  Cyc half = Cyc::eta_q(p, Q(1) / 2);
  Cyc densq = (Cyc::one(p) + half) * (Cyc::one(p) + half);
  return (Cyc::one(p) + Cyc::eta(p, 1)) * densq.inv();
}

inline long minus_eighth(long p) { return smod(-mod_inverse(8, p), p); }

inline Cyc lambda_s(long p, long s) {
  return chat(p, 0, s) - channel_weight(p) * chat(p, minus_eighth(p), s);
}

inline Cyc gamma_s(long p, long s) {
  return bhat(p, 0, s) - channel_weight(p) * bhat(p, minus_eighth(p), s);
}

// h = (eta^{-1/2} + eta^{1/2})^{-1}.
inline Cyc h_const(long p) {
  return (Cyc::eta_q(p, Q(-1) / 2) + Cyc::eta_q(p, Q(1) / 2)).inv();
}

}  // namespace braidrep
