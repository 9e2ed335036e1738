#pragma once

#include <map>
#include <span>
#include <vector>

#include "wittsum/config.hpp"
#include "wittsum/errors.hpp"
#include "wittsum/intutil.hpp"
#include "wittsum/laurent.hpp"

namespace wittsum {

// A multivariate integer polynomial in the 2m coordinates x_0..x_{m-1},
// y_0..y_{m-1} (exponent vector of width 2m; negation polynomials simply
// ignore the y block).
using UnivPoly = std::map<std::vector<int32_t>, Int>;

// Universal Witt polynomials for length m in characteristic p, obtained once
// by exact rational ghost inversion. Integrality is asserted, not assumed.
struct UnivWittPolys {
  long long p = 0;
  int m = 0;
  std::vector<UnivPoly> sum;   // coordinate polynomials of Witt addition
  std::vector<UnivPoly> prod;  // of Witt multiplication
  std::vector<UnivPoly> neg;   // of Witt negation

  // Cached, immutable, shared; m above the cap is a refusal.
  static const UnivWittPolys& get(long long p, int m, const Limits& lim = default_limits());
};

// Ghost components over Z: ghost_j = sum_{i<=j} p^i x_i^{p^(j-i)}.
std::vector<Int> ghost_components(const std::vector<Int>& x, long long p);

template <class Ring>
typename Ring::Elem eval_univ(const UnivPoly& poly, const Ring& R,
                              std::span<const typename Ring::Elem> xs,
                              std::span<const typename Ring::Elem> ys) {
  const long long ch = R.characteristic();
  typename Ring::Elem acc = R.zero();
  const size_t m = xs.size();
  for (const auto& [e, coef] : poly) {
    Int c = coef;
    if (ch != 0) {
      c %= ch;
      if (c < 0) c += ch;
      if (c == 0) continue;
    }
    typename Ring::Elem t = R.from_bigint(c);
    for (size_t v = 0; v < e.size(); ++v) {
      const typename Ring::Elem& base = v < m ? xs[v] : ys[v - m];
      for (int32_t k = 0; k < e[v]; ++k) t = R.mul(t, base);
    }
    acc = R.add(acc, t);
  }
  return acc;
}

template <class Ring>
std::vector<typename Ring::Elem> witt_add(const UnivWittPolys& W, const Ring& R,
                                          std::span<const typename Ring::Elem> x,
                                          std::span<const typename Ring::Elem> y) {
  if (x.size() != static_cast<size_t>(W.m) || y.size() != x.size())
    fail(Err::RingMismatch, "Witt coordinate length mismatch");
  std::vector<typename Ring::Elem> out;
  out.reserve(x.size());
  for (int j = 0; j < W.m; ++j) out.push_back(eval_univ(W.sum[static_cast<size_t>(j)], R, x, y));
  return out;
}

template <class Ring>
std::vector<typename Ring::Elem> witt_mul(const UnivWittPolys& W, const Ring& R,
                                          std::span<const typename Ring::Elem> x,
                                          std::span<const typename Ring::Elem> y) {
  if (x.size() != static_cast<size_t>(W.m) || y.size() != x.size())
    fail(Err::RingMismatch, "Witt coordinate length mismatch");
  std::vector<typename Ring::Elem> out;
  out.reserve(x.size());
  for (int j = 0; j < W.m; ++j) out.push_back(eval_univ(W.prod[static_cast<size_t>(j)], R, x, y));
  return out;
}

template <class Ring>
std::vector<typename Ring::Elem> witt_neg(const UnivWittPolys& W, const Ring& R,
                                          std::span<const typename Ring::Elem> x) {
  if (x.size() != static_cast<size_t>(W.m))
    fail(Err::RingMismatch, "Witt coordinate length mismatch");
  std::vector<typename Ring::Elem> out;
  out.reserve(x.size());
  for (int j = 0; j < W.m; ++j) out.push_back(eval_univ(W.neg[static_cast<size_t>(j)], R, x, x));
  return out;
}

// f in W_m(F_q[x_1^{±1},...,x_n^{±1}]): m coordinate Laurent polynomials.
struct WittLaurent {
  long long p = 0;
  int m = 0;
  int n = 0;
  std::vector<LaurentPoly> coords;
};

struct WittTerm {
  int level;    // i in [0, m)
  ExpVec u;     // exponent vector in Z^n
  FieldElem a;  // nonzero coefficient in F_q
  auto operator<=>(const WittTerm&) const = default;
};

// The canonical set {(i, u, a_iu)}: f = Witt-sum of lambda_i(a_iu x^u).
struct DecomposedWitt {
  std::vector<WittTerm> terms;  // sorted by (level, u)
};

// Witt vector with a*x^u on coordinate i and 0 elsewhere.
WittLaurent lambda_embed(long long p, int m, int n, int level, const FieldElem& a, const ExpVec& u,
                         const FieldCtx& F);

// Solve the successive congruences mod V, V^2, ..., V^m.
DecomposedWitt decompose(const WittLaurent& f, const FieldCtx& F,
                         const Limits& lim = default_limits());

// Witt-sum of all lambda terms; exact inverse of decompose.
WittLaurent reassemble(const DecomposedWitt& d, long long p, int m, int n, const FieldCtx& F,
                       const Limits& lim = default_limits());

// Trace to W_m(F_p): Witt-sum of the coordinatewise p-power orbit over
// Gal(F_{q^k}/F_p). Returns the m prime-field values.
std::vector<long long> witt_trace(const std::vector<FieldElem>& y, const FieldCtx& F,
                                  const Limits& lim = default_limits());

// (a_0,...,a_{m-1}) -> sum omega(a_i) p^i mod p^m, the ring isomorphism
// W_m(F_p) -> Z/p^m; omega is the Teichmueller lift c^(p^(m-1)) mod p^m.
long long witt_fp_to_residue(const std::vector<long long>& t, long long p, int m);

long long teichmuller_lift(long long c, long long p, int m);

}  // namespace wittsum
