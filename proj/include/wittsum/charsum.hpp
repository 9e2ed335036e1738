#pragma once

#include <complex>
#include <vector>

#include "wittsum/config.hpp"
#include "wittsum/ffield.hpp"
#include "wittsum/intutil.hpp"
#include "wittsum/wittring.hpp"

namespace wittsum {

// Exact element of Z[zeta_{p^m}] in the power basis 1, zeta, ...,
// zeta^(phi-1), phi = p^(m-1)(p-1); reduction uses Phi_{p^m}(zeta) = 0 only.
struct CyclotomicInt {
  long long p = 2;
  int m = 1;
  std::vector<Int> c;

  static long long phi(long long p, int m) { return ll_pow(p, static_cast<unsigned>(m - 1)) * (p - 1); }
  static CyclotomicInt zero(long long p, int m) {
    return CyclotomicInt{p, m, std::vector<Int>(static_cast<size_t>(phi(p, m)), Int(0))};
  }
  static CyclotomicInt from_int(long long p, int m, const Int& v) {
    CyclotomicInt r = zero(p, m);
    r.c[0] = v;
    return r;
  }
  bool operator==(const CyclotomicInt&) const = default;
  bool is_zero() const {
    for (const auto& v : c)
      if (v != 0) return false;
    return true;
  }
};

CyclotomicInt cyc_add(const CyclotomicInt& a, const CyclotomicInt& b);
CyclotomicInt cyc_sub(const CyclotomicInt& a, const CyclotomicInt& b);
CyclotomicInt cyc_neg(const CyclotomicInt& a);
CyclotomicInt cyc_mul(const CyclotomicInt& a, const CyclotomicInt& b);
CyclotomicInt cyc_scale(const CyclotomicInt& a, const Int& s);

// zeta^c, reduced; c taken mod p^m
CyclotomicInt character_value(long long p, int m, long long c);

// Galois twist zeta -> zeta^s (s coprime to p)
CyclotomicInt cyc_twist(const CyclotomicInt& a, long long s);

struct ComplexApprox {
  std::complex<double> value;
  double error_bound;  // sum |coords| * machine epsilon scale
};

ComplexApprox embed_complex(const CyclotomicInt& v);

std::string cyc_str(const CyclotomicInt& v);

// alternating carries the (-1)^(n-1) L-function normalization of torus
// sums; plain is the raw character sum used for whole-field domains
enum class SignConvention { alternating, plain };

struct SumOptions {
  int k = 1;
  std::vector<int> J;  // 1-based coordinates ranging over the whole field
  SignConvention sign = SignConvention::alternating;
  long long twist = 1;
  int threads = 1;
};

// S_k(f) / S_k(f,J) with the integer trace-residue profile N_c.
struct SumResult {
  int k = 1;
  std::vector<long long> profile;  // indexed by c in Z/p^m
  CyclotomicInt value;
};

// Brute-force exponential sum over (F_{q^k}^x)^(n-|J|) x F_{q^k}^|J|:
// evaluate f coordinatewise, Witt-trace to W_m(F_p), identify with Z/p^m,
// histogram, and assemble sign * sum N_c zeta^c exactly.
SumResult exp_sum(const WittLaurent& f, const FieldCtx& Fq, const SumOptions& opt,
                  const Limits& lim = default_limits());

// domain cardinality of the k-th sum, or -1 on overflow
long long sum_domain_size(long long q, int k, int n, size_t j_count);

}  // namespace wittsum
