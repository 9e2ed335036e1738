#include "wittsum/wittring.hpp"

#include <mutex>

namespace wittsum {

namespace {

// dense-exponent sparse polynomial over Q, used only while inverting the
// ghost map
using QPoly = std::map<std::vector<int32_t>, Rat>;

QPoly qp_add(const QPoly& a, const QPoly& b) {
  QPoly r = a;
  for (const auto& [e, c] : b) {
    auto it = r.find(e);
    if (it == r.end())
      r.emplace(e, c);
    else {
      it->second += c;
      if (it->second == 0) r.erase(it);
    }
  }
  return r;
}

QPoly qp_scale(const QPoly& a, const Rat& s) {
  QPoly r;
  if (s == 0) return r;
  for (const auto& [e, c] : a) r.emplace(e, c * s);
  return r;
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  QPoly r;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int32_t> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto it = r.find(e);
      if (it == r.end())
        r.emplace(std::move(e), ca * cb);
      else {
        it->second += ca * cb;
        if (it->second == 0) r.erase(it);
      }
    }
  }
  return r;
}

QPoly qp_pow(const QPoly& a, long long e) {
  QPoly r;
  r.emplace(std::vector<int32_t>(a.empty() ? 0 : a.begin()->first.size(), 0), Rat(1));
  if (a.empty()) {
    if (e > 0) return QPoly{};
    return r;
  }
  QPoly base = a;
  while (e > 0) {
    if (e & 1) r = qp_mul(r, base);
    base = qp_mul(base, base);
    e >>= 1;
  }
  return r;
}

QPoly qp_var(int v, int width) {
  std::vector<int32_t> e(static_cast<size_t>(width), 0);
  e[static_cast<size_t>(v)] = 1;
  QPoly r;
  r.emplace(std::move(e), Rat(1));
  return r;
}

// ghost polynomial w_j in the variables at offset (x block: 0, y block: m)
QPoly qp_ghost(long long p, int j, int offset, int width) {
  QPoly r;
  Int pi = 1;
  for (int i = 0; i <= j; ++i) {
    QPoly t = qp_pow(qp_var(offset + i, width), ll_pow(p, static_cast<unsigned>(j - i)));
    r = qp_add(r, qp_scale(t, Rat(pi)));
    pi *= p;
  }
  return r;
}

UnivPoly qp_to_int(const QPoly& a, const char* what) {
  UnivPoly r;
  for (const auto& [e, c] : a) {
    if (rat_den(c) != 1)
      fail(Err::Internal, std::string("universal Witt polynomial not integral: ") + what);
    r.emplace(e, rat_num(c));
  }
  return r;
}

UnivWittPolys build_univ(long long p, int m) {
  UnivWittPolys W;
  W.p = p;
  W.m = m;
  const int width = 2 * m;
  std::vector<QPoly> s, q, ng;
  for (int j = 0; j < m; ++j) {
    QPoly wx = qp_ghost(p, j, 0, width);
    QPoly wy = qp_ghost(p, j, m, width);
    QPoly rhs_sum = qp_add(wx, wy);
    QPoly rhs_prod = qp_mul(wx, wy);
    QPoly rhs_neg = qp_scale(wx, Rat(-1));
    Int pi = 1;
    for (int i = 0; i < j; ++i) {
      long long e = ll_pow(p, static_cast<unsigned>(j - i));
      rhs_sum = qp_add(rhs_sum, qp_scale(qp_pow(s[static_cast<size_t>(i)], e), Rat(-pi)));
      rhs_prod = qp_add(rhs_prod, qp_scale(qp_pow(q[static_cast<size_t>(i)], e), Rat(-pi)));
      rhs_neg = qp_add(rhs_neg, qp_scale(qp_pow(ng[static_cast<size_t>(i)], e), Rat(-pi)));
      pi *= p;
    }
    Rat inv_pj = Rat(Int(1), int_pow(Int(p), static_cast<unsigned>(j)));
    s.push_back(qp_scale(rhs_sum, inv_pj));
    q.push_back(qp_scale(rhs_prod, inv_pj));
    ng.push_back(qp_scale(rhs_neg, inv_pj));
  }
  for (int j = 0; j < m; ++j) {
    W.sum.push_back(qp_to_int(s[static_cast<size_t>(j)], "sum"));
    W.prod.push_back(qp_to_int(q[static_cast<size_t>(j)], "prod"));
    W.neg.push_back(qp_to_int(ng[static_cast<size_t>(j)], "neg"));
  }
  return W;
}

}  // namespace

const UnivWittPolys& UnivWittPolys::get(long long p, int m, const Limits& lim) {
  if (m < 1) fail(Err::RingMismatch, "Witt length must be >= 1");
  if (m > lim.witt_len_cap)
    fail(Err::CapExceeded,
         "Witt length " + std::to_string(m) + " exceeds cap " + std::to_string(lim.witt_len_cap));
  static std::mutex mu;
  static std::map<std::pair<long long, int>, std::unique_ptr<UnivWittPolys>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, m);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<UnivWittPolys>(build_univ(p, m))).first;
  return *it->second;
}

std::vector<Int> ghost_components(const std::vector<Int>& x, long long p) {
  std::vector<Int> w(x.size());
  for (size_t j = 0; j < x.size(); ++j) {
    Int acc = 0, pi = 1;
    for (size_t i = 0; i <= j; ++i) {
      acc += pi * int_pow(x[i], static_cast<unsigned>(ll_pow(p, static_cast<unsigned>(j - i))));
      pi *= p;
    }
    w[j] = acc;
  }
  return w;
}

WittLaurent lambda_embed(long long p, int m, int n, int level, const FieldElem& a, const ExpVec& u,
                         const FieldCtx& F) {
  if (level < 0 || level >= m)
    fail(Err::LevelOutOfRange, "lambda level " + std::to_string(level) + " outside [0," +
                                   std::to_string(m) + ")");
  if (F.is_zero(a)) fail(Err::Internal, "lambda_embed of a zero coefficient");
  if (static_cast<int>(u.size()) != n) fail(Err::RingMismatch, "exponent dimension mismatch");
  WittLaurent f;
  f.p = p;
  f.m = m;
  f.n = n;
  f.coords.assign(static_cast<size_t>(m), LaurentPoly{});
  f.coords[static_cast<size_t>(level)].terms.emplace(u, a);
  return f;
}

DecomposedWitt decompose(const WittLaurent& f, const FieldCtx& F, const Limits& lim) {
  const UnivWittPolys& W = UnivWittPolys::get(f.p, f.m, lim);
  LaurentRing R{&F, f.n, lim.monomial_cap};
  std::vector<LaurentPoly> rem = f.coords;
  DecomposedWitt d;
  for (int i = 0; i < f.m; ++i) {
    // snapshot: subtracting level-i lambdas only touches higher coordinates
    std::vector<std::pair<ExpVec, FieldElem>> level_terms(rem[static_cast<size_t>(i)].terms.begin(),
                                                          rem[static_cast<size_t>(i)].terms.end());
    for (const auto& [u, a] : level_terms) {
      d.terms.push_back(WittTerm{i, u, a});
      WittLaurent lam = lambda_embed(f.p, f.m, f.n, i, a, u, F);
      std::vector<LaurentPoly> nl =
          witt_neg<LaurentRing>(W, R, std::span<const LaurentPoly>(lam.coords));
      rem = witt_add<LaurentRing>(W, R, std::span<const LaurentPoly>(rem),
                                  std::span<const LaurentPoly>(nl));
    }
    if (!rem[static_cast<size_t>(i)].terms.empty())
      fail(Err::Internal, "decomposition left residue at level " + std::to_string(i));
  }
  for (const auto& c : rem)
    if (!c.terms.empty()) fail(Err::Internal, "decomposition left a nonzero remainder");
  return d;
}

WittLaurent reassemble(const DecomposedWitt& d, long long p, int m, int n, const FieldCtx& F,
                       const Limits& lim) {
  const UnivWittPolys& W = UnivWittPolys::get(p, m, lim);
  LaurentRing R{&F, n, lim.monomial_cap};
  std::vector<LaurentPoly> acc(static_cast<size_t>(m), LaurentPoly{});
  for (const auto& t : d.terms) {
    WittLaurent lam = lambda_embed(p, m, n, t.level, t.a, t.u, F);
    acc = witt_add<LaurentRing>(W, R, std::span<const LaurentPoly>(acc),
                                std::span<const LaurentPoly>(lam.coords));
  }
  WittLaurent f;
  f.p = p;
  f.m = m;
  f.n = n;
  f.coords = std::move(acc);
  return f;
}

std::vector<long long> witt_trace(const std::vector<FieldElem>& y, const FieldCtx& F,
                                  const Limits& lim) {
  const int m = static_cast<int>(y.size());
  const UnivWittPolys& W = UnivWittPolys::get(F.p(), m, lim);
  FqRing R{&F};
  std::vector<FieldElem> acc = y;
  std::vector<FieldElem> cur = y;
  for (int j = 1; j < F.deg(); ++j) {
    for (auto& c : cur) c = F.pow(c, F.p());
    acc = witt_add<FqRing>(W, R, std::span<const FieldElem>(acc), std::span<const FieldElem>(cur));
  }
  std::vector<long long> out;
  out.reserve(static_cast<size_t>(m));
  for (const auto& c : acc) {
    for (size_t i = 1; i < c.c.size(); ++i)
      if (c.c[i] != 0) fail(Err::TraceNotRational, "Witt trace coordinate left F_p");
    out.push_back(c.c[0]);
  }
  return out;
}

long long teichmuller_lift(long long c, long long p, int m) {
  long long mod = 1;
  for (int i = 0; i < m; ++i) {
    mod *= p;
    if (mod > (1LL << 40)) fail(Err::CapExceeded, "p^m too large for residue arithmetic");
  }
  c %= mod;
  if (c < 0) c += mod;
  long long e = ll_pow(p, static_cast<unsigned>(m - 1));
  __int128 r = 1, b = c;
  while (e) {
    if (e & 1) r = (r * b) % mod;
    b = (b * b) % mod;
    e >>= 1;
  }
  return static_cast<long long>(r);
}

long long witt_fp_to_residue(const std::vector<long long>& t, long long p, int m) {
  if (static_cast<int>(t.size()) != m) fail(Err::RingMismatch, "Witt coordinate length mismatch");
  long long mod = 1;
  for (int i = 0; i < m; ++i) {
    mod *= p;
    if (mod > (1LL << 40)) fail(Err::CapExceeded, "p^m too large for residue arithmetic");
  }
  long long acc = 0, pi = 1;
  for (int i = 0; i < m; ++i) {
    if (t[static_cast<size_t>(i)] < 0 || t[static_cast<size_t>(i)] >= p)
      fail(Err::NotPrimeField, "coordinate not a prime-field value");
    acc = (acc + static_cast<long long>((__int128)teichmuller_lift(t[static_cast<size_t>(i)], p, m) * pi % mod)) % mod;
    pi *= p;
  }
  return acc;
}

}  // namespace wittsum
