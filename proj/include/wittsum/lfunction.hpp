#pragma once

#include <optional>
#include <vector>

#include "wittsum/charsum.hpp"
#include "wittsum/nondegen.hpp"
#include "wittsum/polygon.hpp"
#include "wittsum/polytope.hpp"

namespace wittsum {

// Element of Q(zeta_{p^m}): cyclotomic integer over a positive denominator,
// normalized so gcd(content(num), den) = 1.
struct CycRat {
  CyclotomicInt num;
  Int den = 1;

  static CycRat from(const CyclotomicInt& v) { return CycRat{v, 1}; }
  static CycRat zero(long long p, int m) { return CycRat{CyclotomicInt::zero(p, m), 1}; }
  static CycRat one(long long p, int m) { return CycRat{CyclotomicInt::from_int(p, m, 1), 1}; }
  bool is_zero() const { return num.is_zero(); }
  bool is_integral() const { return den == 1; }
};

CycRat cr_normalize(CycRat v);
CycRat cr_add(const CycRat& a, const CycRat& b);
CycRat cr_sub(const CycRat& a, const CycRat& b);
CycRat cr_neg(const CycRat& a);
CycRat cr_mul(const CycRat& a, const CycRat& b);
CycRat cr_div_int(const CycRat& a, const Int& k);
// field inverse in Q(zeta) by the extended Euclidean algorithm mod Phi_{p^m}
CycRat cr_inv(const CycRat& a);
bool cr_eq(const CycRat& a, const CycRat& b);

// L(t) = exp(sum S_k t^k / k) to order K, via j c_j = sum_{k<=j} S_k c_{j-k}.
struct LSeries {
  long long p = 2;
  int m = 1;
  std::vector<CycRat> coeffs;  // c_0 = 1
};

LSeries l_series_from_sums(long long p, int m, const std::vector<CyclotomicInt>& sums);

// exact logarithmic differentiation: recovers the S_k from the series
std::vector<CyclotomicInt> log_derivative_sums(const LSeries& s);

struct LPolynomial {
  long long p = 2;
  int m = 1;
  std::vector<CyclotomicInt> coeffs;  // c_0 = 1, integral
  long long degree() const { return static_cast<long long>(coeffs.size()) - 1; }
};

// Asserts the tail c_{d+1}..c_K vanishes and all denominators clear.
LPolynomial extract_polynomial(const LSeries& s, long long expected_degree, long long guard);

struct RationalFn {
  long long p = 2;
  int m = 1;
  std::vector<CycRat> P, Q;  // P(0) = Q(0) = 1
  long long total_degree() const {
    return static_cast<long long>(P.size()) - 1 + static_cast<long long>(Q.size()) - 1;
  }
};

// Minimal recurrence (Berlekamp-Massey over Q(zeta)) with register length
// <= dmax; requires K >= 2 dmax + 1. Throws Inconclusive when nothing fits.
RationalFn rational_reconstruct(const LSeries& s, int dmax);

// ord_q normalized with ord_q(q) = 1, where q = p^a; nullopt is +infinity.
// Computed through v_p(Norm(v)) / (a phi(p^m)) with the norm as a resultant
// against Phi_{p^m}.
std::optional<Rat> ordq(const CyclotomicInt& v, int a);

Int cyclotomic_norm(const CyclotomicInt& v);

// q-adic Newton polygon of 1 + c_1 t + ... + c_d t^d.
PolygonChain newton_polygon(const std::vector<CyclotomicInt>& coeffs, int a);

struct RootData {
  std::vector<double> moduli;  // |alpha_i| of the reciprocal roots
  double residual = 0;         // max |L(z_i)| over the computed roots
};

RootData reciprocal_root_moduli(const LPolynomial& poly);

// Hodge side of the Newton-above-Hodge statement. For J = {} this is the
// polygon of P_Delta; otherwise the alternating sum over slices
// sum_C (-1)^{|C|} P_{Delta_C}(t^{D/D_C}) with the matching degree formula.
struct HodgeSide {
  std::vector<Int> coeffs;
  long long D = 1;
  PolygonChain chain;
  bool nonneg = true;
  Int expected_degree = 0;
};

HodgeSide hodge_side(const NewtonData& nd, const CommodeResult* slices,
                     const Limits& lim = default_limits());

enum class Verdict { Pass, Fail, NotApplicable };

const char* verdict_str(Verdict v);

struct VerificationReport {
  PolygonChain np, hp;
  std::vector<Int> hodge_coeffs;
  long long hodge_D = 1;
  bool hodge_nonneg = true;

  bool is_polynomial = false;
  long long degree = -1;        // of the polynomial, or total degree of P/Q
  Int expected_degree = 0;      // n!Vol, or the slice alternating sum
  Int degree_bound = 0;         // sum_i C(n,i) #{deg <= n-i+1}

  Verdict degree_bound_ok = Verdict::NotApplicable;
  Verdict polynomial_ok = Verdict::NotApplicable;
  Verdict degree_matches_volume = Verdict::NotApplicable;
  Verdict np_above_hp = Verdict::NotApplicable;
  Verdict endpoints_match = Verdict::NotApplicable;
  Verdict weights_pure = Verdict::NotApplicable;

  std::vector<double> weight_moduli;
  double weight_target = 0;
  double root_residual = 0;

  bool all_passed() const {
    for (Verdict v : {degree_bound_ok, polynomial_ok, degree_matches_volume, np_above_hp,
                      endpoints_match, weights_pure})
      if (v == Verdict::Fail) return false;
    return true;
  }
};

struct VerifyInput {
  const NewtonData* nd = nullptr;
  const CommodeResult* slices = nullptr;  // required when J is nonempty
  NondegenStatus nondegen = NondegenStatus::NonDegenerateExact;
  const LPolynomial* poly = nullptr;      // exactly one of poly/ratfn
  const RationalFn* ratfn = nullptr;
  // true when the structural theorems promise a polynomial; landing on the
  // rational route anyway is then a verdict failure, not a shrug
  bool polynomial_expected = false;
  int a = 1;
  std::vector<int> J;
  double weight_tolerance = 1e-9;
};

VerificationReport verify(const VerifyInput& in, const Limits& lim = default_limits());

}  // namespace wittsum
