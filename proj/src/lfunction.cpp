#include "wittsum/lfunction.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace wittsum {

namespace {

Int content_gcd(const CyclotomicInt& v) {
  Int g = 0;
  for (const auto& c : v.c) g = boost::multiprecision::gcd(g, c < 0 ? Int(-c) : c);
  return g;
}

// Phi_{p^m}(x) = sum_{j=0}^{p-1} x^(j p^(m-1)), ascending dense coefficients
std::vector<Int> cyclotomic_modulus(long long p, int m) {
  long long step = ll_pow(p, static_cast<unsigned>(m - 1));
  std::vector<Int> f(static_cast<size_t>(CyclotomicInt::phi(p, m)) + 1, Int(0));
  for (long long j = 0; j < p; ++j) f[static_cast<size_t>(j * step)] = 1;
  return f;
}

using QP = std::vector<Rat>;  // dense rational polynomial, ascending

int qp_deg(const QP& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[static_cast<size_t>(i)] != 0) return i;
  return -1;
}

QP qp_mul(const QP& a, const QP& b) {
  if (qp_deg(a) < 0 || qp_deg(b) < 0) return QP{};
  QP r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

QP qp_sub_scaled(QP a, const QP& b, const Rat& s, size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= s * b[i];
  return a;
}

// extended Euclid: returns s with s*g == 1 mod f, for gcd(f, g) = 1
QP qp_modular_inverse(const QP& f, const QP& g) {
  QP r0 = f, r1 = g;
  QP s0(1, Rat(0)), s1(1, Rat(1));
  while (qp_deg(r1) >= 0) {
    // divide r0 by r1
    QP q(static_cast<size_t>(std::max(qp_deg(r0) - qp_deg(r1) + 1, 1)), Rat(0));
    QP rem = r0;
    while (qp_deg(rem) >= qp_deg(r1)) {
      int d = qp_deg(rem) - qp_deg(r1);
      Rat coef = rem[static_cast<size_t>(qp_deg(rem))] / r1[static_cast<size_t>(qp_deg(r1))];
      q[static_cast<size_t>(d)] += coef;
      rem = qp_sub_scaled(rem, r1, coef, static_cast<size_t>(d));
      rem.resize(static_cast<size_t>(qp_deg(rem) + 1));
      if (rem.empty()) break;
    }
    QP s2 = s0;
    QP qs1 = qp_mul(q, s1);
    if (s2.size() < qs1.size()) s2.resize(qs1.size(), Rat(0));
    for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  if (qp_deg(r0) != 0) fail(Err::Internal, "element not invertible modulo Phi");
  Rat lead = r0[0];
  QP out = s0;
  for (auto& c : out) c /= lead;
  return out;
}

}  // namespace

CycRat cr_normalize(CycRat v) {
  if (v.den < 0) {
    v.den = -v.den;
    for (auto& c : v.num.c) c = -c;
  }
  if (v.num.is_zero()) {
    v.den = 1;
    return v;
  }
  Int g = boost::multiprecision::gcd(content_gcd(v.num), v.den);
  if (g > 1) {
    for (auto& c : v.num.c) c /= g;
    v.den /= g;
  }
  return v;
}

CycRat cr_add(const CycRat& a, const CycRat& b) {
  CycRat r;
  r.num = cyc_add(cyc_scale(a.num, b.den), cyc_scale(b.num, a.den));
  r.den = a.den * b.den;
  return cr_normalize(std::move(r));
}

CycRat cr_sub(const CycRat& a, const CycRat& b) { return cr_add(a, cr_neg(b)); }

CycRat cr_neg(const CycRat& a) { return CycRat{cyc_neg(a.num), a.den}; }

CycRat cr_mul(const CycRat& a, const CycRat& b) {
  return cr_normalize(CycRat{cyc_mul(a.num, b.num), a.den * b.den});
}

CycRat cr_div_int(const CycRat& a, const Int& k) {
  if (k == 0) fail(Err::Internal, "division by zero");
  return cr_normalize(CycRat{a.num, a.den * k});
}

bool cr_eq(const CycRat& a, const CycRat& b) {
  return cyc_sub(cyc_scale(a.num, b.den), cyc_scale(b.num, a.den)).is_zero();
}

CycRat cr_inv(const CycRat& a) {
  if (a.is_zero()) fail(Err::Internal, "inverse of zero");
  const long long p = a.num.p;
  const int m = a.num.m;
  QP f;
  for (const auto& c : cyclotomic_modulus(p, m)) f.emplace_back(c);
  QP g;
  for (const auto& c : a.num.c) g.emplace_back(c);
  g.resize(std::max<size_t>(g.size(), 1), Rat(0));
  QP s = qp_modular_inverse(f, g);
  // s(zeta) = num^{-1}; fold a common denominator back in
  Int den_lcm = 1;
  for (const auto& c : s)
    den_lcm = boost::multiprecision::lcm(den_lcm, rat_den(c));
  CyclotomicInt num = CyclotomicInt::zero(p, m);
  for (size_t i = 0; i < s.size() && i < num.c.size(); ++i)
    num.c[i] = rat_num(s[i]) * (den_lcm / rat_den(s[i]));
  return cr_normalize(CycRat{cyc_scale(num, a.den), den_lcm});
}

LSeries l_series_from_sums(long long p, int m, const std::vector<CyclotomicInt>& sums) {
  LSeries s;
  s.p = p;
  s.m = m;
  s.coeffs.push_back(CycRat::one(p, m));
  for (size_t j = 1; j <= sums.size(); ++j) {
    CycRat acc = CycRat::zero(p, m);
    for (size_t k = 1; k <= j; ++k) {
      CycRat term = s.coeffs[j - k];
      term.num = cyc_mul(term.num, sums[k - 1]);
      acc = cr_add(acc, cr_normalize(std::move(term)));
    }
    s.coeffs.push_back(cr_div_int(acc, Int(j)));
  }
  return s;
}

std::vector<CyclotomicInt> log_derivative_sums(const LSeries& s) {
  std::vector<CycRat> S;
  for (size_t j = 1; j < s.coeffs.size(); ++j) {
    CycRat acc = s.coeffs[j];
    acc.num = cyc_scale(acc.num, Int(j));
    acc = cr_normalize(std::move(acc));
    for (size_t k = 1; k < j; ++k) {
      CycRat term = S[k - 1];
      term.num = cyc_mul(term.num, s.coeffs[j - k].num);
      term.den *= s.coeffs[j - k].den;
      acc = cr_sub(acc, cr_normalize(std::move(term)));
    }
    S.push_back(acc);
  }
  std::vector<CyclotomicInt> out;
  for (const auto& v : S) {
    if (!v.is_integral()) fail(Err::Internal, "log-derivative sums should be integral");
    out.push_back(v.num);
  }
  return out;
}

LPolynomial extract_polynomial(const LSeries& s, long long expected_degree, long long guard) {
  long long K = static_cast<long long>(s.coeffs.size()) - 1;
  if (expected_degree < 0) fail(Err::Internal, "negative expected degree");
  if (guard < 1) fail(Err::Internal, "extraction needs at least one vanishing-tail term");
  if (K < expected_degree + guard)
    fail(Err::Internal, "series order " + std::to_string(K) + " below degree+guard");
  for (long long j = expected_degree + 1; j <= K; ++j)
    if (!s.coeffs[static_cast<size_t>(j)].is_zero())
      fail(Err::NotPolynomial, "series coefficient " + std::to_string(j) + " is nonzero");
  LPolynomial out;
  out.p = s.p;
  out.m = s.m;
  for (long long j = 0; j <= expected_degree; ++j) {
    const CycRat& c = s.coeffs[static_cast<size_t>(j)];
    if (!c.is_integral())
      fail(Err::NonIntegralCoefficient,
           "coefficient " + std::to_string(j) + " has denominator " + c.den.str());
    out.coeffs.push_back(c.num);
  }
  return out;
}

RationalFn rational_reconstruct(const LSeries& s, int dmax) {
  long long K = static_cast<long long>(s.coeffs.size()) - 1;
  if (K < 2LL * dmax + 1)
    fail(Err::Internal, "need series order >= 2 dmax + 1 for reconstruction");
  const long long p = s.p;
  const int m = s.m;
  const auto& c = s.coeffs;
  const size_t N = c.size();

  // Berlekamp-Massey over Q(zeta)
  std::vector<CycRat> C = {CycRat::one(p, m)};
  std::vector<CycRat> B = {CycRat::one(p, m)};
  int L = 0, mm = 1;
  CycRat b = CycRat::one(p, m);
  for (size_t n = 0; n < N; ++n) {
    CycRat d = c[n];
    for (int i = 1; i <= L && static_cast<size_t>(i) < C.size(); ++i)
      d = cr_add(d, cr_mul(C[static_cast<size_t>(i)], c[n - static_cast<size_t>(i)]));
    if (d.is_zero()) {
      ++mm;
      continue;
    }
    std::vector<CycRat> T = C;
    CycRat f = cr_mul(d, cr_inv(b));
    if (C.size() < B.size() + static_cast<size_t>(mm))
      C.resize(B.size() + static_cast<size_t>(mm), CycRat::zero(p, m));
    for (size_t i = 0; i < B.size(); ++i)
      C[i + static_cast<size_t>(mm)] = cr_sub(C[i + static_cast<size_t>(mm)], cr_mul(f, B[i]));
    if (2 * L <= static_cast<int>(n)) {
      L = static_cast<int>(n) + 1 - L;
      B = T;
      b = d;
      mm = 1;
    } else {
      ++mm;
    }
  }
  while (C.size() > 1 && C.back().is_zero()) C.pop_back();
  if (L > dmax)
    fail(Err::Inconclusive,
         "no recurrence of order <= " + std::to_string(dmax) + " fits (need " + std::to_string(L) + ")");

  // P = Q * c truncated below the register length; the remainder must vanish
  RationalFn out;
  out.p = p;
  out.m = m;
  out.Q = C;
  for (long long j = 0; j <= K; ++j) {
    CycRat acc = CycRat::zero(p, m);
    for (size_t i = 0; i < C.size() && static_cast<long long>(i) <= j; ++i)
      acc = cr_add(acc, cr_mul(C[i], c[static_cast<size_t>(j - static_cast<long long>(i))]));
    if (j < L) {
      out.P.push_back(acc);
    } else if (!acc.is_zero()) {
      fail(Err::Inconclusive, "recurrence fails to reproduce the series at order " + std::to_string(j));
    }
  }
  while (out.P.size() > 1 && out.P.back().is_zero()) out.P.pop_back();
  if (out.P.empty()) out.P.push_back(CycRat::one(p, m));
  return out;
}

Int cyclotomic_norm(const CyclotomicInt& v) {
  // resultant of Phi_{p^m} (monic) with the coordinate polynomial, by
  // fraction-free Gaussian elimination on the Sylvester matrix
  std::vector<Int> f = cyclotomic_modulus(v.p, v.m);
  std::vector<Int> g(v.c.begin(), v.c.end());
  while (g.size() > 1 && g.back() == 0) g.pop_back();
  if (g.size() == 1) return int_pow(g[0], static_cast<unsigned>(f.size() - 1));
  const size_t df = f.size() - 1, dg = g.size() - 1;
  const size_t N = df + dg;
  std::vector<std::vector<Int>> M(N, std::vector<Int>(N, Int(0)));
  for (size_t r = 0; r < dg; ++r)
    for (size_t i = 0; i <= df; ++i) M[r][r + i] = f[df - i];
  for (size_t r = 0; r < df; ++r)
    for (size_t i = 0; i <= dg; ++i) M[dg + r][r + i] = g[dg - i];
  // Bareiss
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < N; ++k) {
    if (M[k][k] == 0) {
      size_t sw = k + 1;
      while (sw < N && M[sw][k] == 0) ++sw;
      if (sw == N) return 0;
      std::swap(M[k], M[sw]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < N; ++i) {
      for (size_t j = k + 1; j < N; ++j) {
        M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
      }
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  return sign > 0 ? M[N - 1][N - 1] : -M[N - 1][N - 1];
}

std::optional<Rat> ordq(const CyclotomicInt& v, int a) {
  if (v.is_zero()) return std::nullopt;
  Int norm = cyclotomic_norm(v);
  if (norm == 0) fail(Err::Internal, "nonzero element has zero norm");
  long long vp = padic_val(norm, v.p);
  return Rat(Int(vp), Int(CyclotomicInt::phi(v.p, v.m)) * a);
}

PolygonChain newton_polygon(const std::vector<CyclotomicInt>& coeffs, int a) {
  std::vector<std::pair<Rat, Rat>> pts;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    auto o = ordq(coeffs[i], a);
    if (o) pts.emplace_back(Rat(Int(i)), *o);
  }
  return lower_convex_hull(std::move(pts));
}

RootData reciprocal_root_moduli(const LPolynomial& poly) {
  RootData out;
  const size_t d = poly.coeffs.size() - 1;
  if (d == 0) return out;
  std::vector<std::complex<double>> c;
  for (const auto& v : poly.coeffs) c.push_back(embed_complex(v).value);
  // Durand-Kerner on the monic normalization
  std::vector<std::complex<double>> a(c.size());
  for (size_t i = 0; i < c.size(); ++i) a[i] = c[i] / c.back();
  auto eval = [&](std::complex<double> z) {
    std::complex<double> acc(0, 0);
    for (size_t i = a.size(); i-- > 0;) acc = acc * z + a[i];
    return acc;
  };
  std::vector<std::complex<double>> z(d);
  std::complex<double> seed(0.4, 0.9);
  z[0] = seed;
  for (size_t i = 1; i < d; ++i) z[i] = z[i - 1] * seed;
  for (int it = 0; it < 500; ++it) {
    double delta = 0;
    for (size_t i = 0; i < d; ++i) {
      std::complex<double> den(1, 0);
      for (size_t j = 0; j < d; ++j)
        if (j != i) den *= z[i] - z[j];
      std::complex<double> step = eval(z[i]) / den;
      z[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-14) break;
  }
  double resid = 0;
  for (size_t i = 0; i < d; ++i) {
    std::complex<double> lv(0, 0);
    for (size_t k = c.size(); k-- > 0;) lv = lv * z[i] + c[k];
    resid = std::max(resid, std::abs(lv));
    out.moduli.push_back(1.0 / std::abs(z[i]));  // reciprocal roots
  }
  std::sort(out.moduli.begin(), out.moduli.end());
  out.residual = resid;
  return out;
}

HodgeSide hodge_side(const NewtonData& nd, const CommodeResult* slices, const Limits& lim) {
  HodgeSide hs;
  hs.D = nd.D;
  if (slices == nullptr) {
    HodgeData hd = p_delta(nd, lim);
    hs.coeffs = hd.pcoeffs;
    hs.chain = hd.hodge;
    hs.expected_degree = hd.nvol;
    return hs;
  }
  hs.coeffs.assign(static_cast<size_t>(nd.n) * static_cast<size_t>(nd.D) + 1, Int(0));
  for (const auto& sl : slices->slices) {
    if (sl.delta.dim != sl.delta.n)
      fail(Err::DimensionDeficient, "slice is not full-dimensional; polytope is not commode");
    HodgeData hd = p_delta(sl.delta, lim);
    if (nd.D % sl.delta.D != 0)
      fail(Err::Internal, "slice grid does not divide the ambient grid");
    long long stretch = nd.D / sl.delta.D;
    int sign = sl.C.size() % 2 == 0 ? 1 : -1;
    for (size_t k = 0; k < hd.pcoeffs.size(); ++k) {
      size_t kk = k * static_cast<size_t>(stretch);
      if (kk >= hs.coeffs.size()) hs.coeffs.resize(kk + 1, Int(0));
      hs.coeffs[kk] += sign > 0 ? hd.pcoeffs[k] : -hd.pcoeffs[k];
    }
    hs.expected_degree += sign > 0 ? hd.nvol : -hd.nvol;
  }
  while (hs.coeffs.size() > 1 && hs.coeffs.back() == 0) hs.coeffs.pop_back();
  for (const auto& c : hs.coeffs)
    if (c < 0) hs.nonneg = false;
  if (hs.nonneg) hs.chain = hodge_polygon(hs.coeffs, hs.D);
  return hs;
}

const char* verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not_applicable";
  }
  return "?";
}

VerificationReport verify(const VerifyInput& in, const Limits& lim) {
  VerificationReport rep;
  const NewtonData& nd = *in.nd;

  // Hodge side + expected degree; undefined when a requested slice is not
  // full-dimensional (non-commode input)
  bool hp_defined = in.J.empty();
  if (!in.J.empty() && in.slices != nullptr) {
    hp_defined = true;
    for (const auto& sl : in.slices->slices)
      if (sl.delta.dim != sl.delta.n) hp_defined = false;
  }
  if (hp_defined) {
    HodgeSide hs = hodge_side(nd, in.J.empty() ? nullptr : in.slices, lim);
    rep.hp = hs.chain;
    rep.hodge_coeffs = hs.coeffs;
    rep.hodge_D = hs.D;
    rep.hodge_nonneg = hs.nonneg;
    rep.expected_degree = hs.expected_degree;
  }

  // total degree bound: sum_i C(n,i) #{lattice points of degree <= n-i+1}
  {
    std::vector<long long> W = weight_vector(nd, nd.D * (nd.n + 1), lim);
    Int bound = 0;
    for (int i = 0; i <= nd.n; ++i) {
      Int cnt = 0;
      for (long long k = 0; k <= nd.D * (nd.n - i + 1); ++k) cnt += W[static_cast<size_t>(k)];
      bound += binomial(static_cast<unsigned>(nd.n), static_cast<unsigned>(i)) * cnt;
    }
    rep.degree_bound = bound;
  }

  const bool nondeg = in.nondegen != NondegenStatus::Degenerate;

  if (in.poly != nullptr) {
    const LPolynomial& L = *in.poly;
    rep.is_polynomial = true;
    rep.degree = L.degree();
    rep.np = newton_polygon(L.coeffs, in.a);
    rep.polynomial_ok = Verdict::Pass;
    if (in.J.empty())
      rep.degree_bound_ok = Int(rep.degree) <= rep.degree_bound ? Verdict::Pass : Verdict::Fail;
    if (nondeg && hp_defined) {
      rep.degree_matches_volume =
          Int(rep.degree) == rep.expected_degree ? Verdict::Pass : Verdict::Fail;
      if (rep.hodge_nonneg) {
        rep.np_above_hp = chain_above(rep.np, rep.hp) ? Verdict::Pass : Verdict::Fail;
        rep.endpoints_match = endpoints_equal(rep.np, rep.hp) ? Verdict::Pass : Verdict::Fail;
      }
      // weight purity when 0 is interior to Delta (resp. Delta_J)
      bool interior;
      if (in.J.empty()) {
        interior = nd.origin_interior();
      } else {
        interior = false;
        for (const auto& sl : in.slices->slices)
          if (sl.C.size() == in.J.size()) interior = sl.delta.origin_interior();
      }
      if (interior && rep.degree > 0) {
        RootData rd = reciprocal_root_moduli(L);
        rep.weight_moduli = rd.moduli;
        rep.root_residual = rd.residual;
        double q = std::pow(static_cast<double>(L.p), static_cast<double>(in.a));
        double target = std::pow(q, nd.n / 2.0);
        rep.weight_target = target;
        bool pure = true;
        for (double mv : rd.moduli)
          if (std::fabs(mv - target) > in.weight_tolerance * target) pure = false;
        rep.weights_pure = pure ? Verdict::Pass : Verdict::Fail;
      } else if (interior && rep.degree == 0) {
        rep.weights_pure = Verdict::Pass;
      }
    }
  } else if (in.ratfn != nullptr) {
    rep.is_polynomial = false;
    rep.degree = in.ratfn->total_degree();
    if (in.J.empty())
      rep.degree_bound_ok = Int(rep.degree) <= rep.degree_bound ? Verdict::Pass : Verdict::Fail;
    // the remaining checks make no promise on this route, except that a
    // non-degenerate commode input was supposed to yield a polynomial
    if (in.polynomial_expected) rep.polynomial_ok = Verdict::Fail;
  }
  return rep;
}

}  // namespace wittsum
