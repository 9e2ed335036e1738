#include "wittsum/charsum.hpp"

#include <cmath>
#include <thread>

namespace wittsum {

namespace {

// reduce a raw power-basis vector of length >= phi in place, top down, using
// zeta^phi = -(1 + zeta^(p^(m-1)) + ... + zeta^((p-2) p^(m-1)))
void cyc_reduce(std::vector<Int>& v, long long p, int m) {
  const long long phi = CyclotomicInt::phi(p, m);
  const long long step = ll_pow(p, static_cast<unsigned>(m - 1));
  for (size_t d = v.size(); d-- > static_cast<size_t>(phi);) {
    if (v[d] == 0) continue;
    Int coef = v[d];
    v[d] = 0;
    for (long long j = 0; j <= p - 2; ++j)
      v[d - static_cast<size_t>(phi) + static_cast<size_t>(j * step)] -= coef;
  }
  v.resize(static_cast<size_t>(phi));
}

}  // namespace

CyclotomicInt cyc_add(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.p != b.p || a.m != b.m) fail(Err::RingMismatch, "cyclotomic ring mismatch");
  CyclotomicInt r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

CyclotomicInt cyc_sub(const CyclotomicInt& a, const CyclotomicInt& b) { return cyc_add(a, cyc_neg(b)); }

CyclotomicInt cyc_neg(const CyclotomicInt& a) {
  CyclotomicInt r = a;
  for (auto& v : r.c) v = -v;
  return r;
}

CyclotomicInt cyc_scale(const CyclotomicInt& a, const Int& s) {
  CyclotomicInt r = a;
  for (auto& v : r.c) v *= s;
  return r;
}

CyclotomicInt cyc_mul(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.p != b.p || a.m != b.m) fail(Err::RingMismatch, "cyclotomic ring mismatch");
  std::vector<Int> prod(2 * a.c.size(), Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) prod[i + j] += a.c[i] * b.c[j];
  }
  cyc_reduce(prod, a.p, a.m);
  return CyclotomicInt{a.p, a.m, std::move(prod)};
}

CyclotomicInt character_value(long long p, int m, long long c) {
  long long mod = ll_pow(p, static_cast<unsigned>(m));
  c %= mod;
  if (c < 0) c += mod;
  std::vector<Int> v(static_cast<size_t>(std::max(mod, CyclotomicInt::phi(p, m))), Int(0));
  v[static_cast<size_t>(c)] = 1;
  cyc_reduce(v, p, m);
  return CyclotomicInt{p, m, std::move(v)};
}

CyclotomicInt cyc_twist(const CyclotomicInt& a, long long s) {
  if (ll_gcd(s, a.p) != 1) fail(Err::SchemaError, "twist must be coprime to p");
  CyclotomicInt r = CyclotomicInt::zero(a.p, a.m);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    r = cyc_add(r, cyc_scale(character_value(a.p, a.m, s * static_cast<long long>(i)), a.c[i]));
  }
  return r;
}

ComplexApprox embed_complex(const CyclotomicInt& v) {
  const double tau = 6.283185307179586476925286766559;
  long long mod = ll_pow(v.p, static_cast<unsigned>(v.m));
  std::complex<double> acc(0.0, 0.0);
  double mass = 0;
  for (size_t i = 0; i < v.c.size(); ++i) {
    if (v.c[i] == 0) continue;
    double coef = static_cast<double>(v.c[i]);
    double ang = tau * static_cast<double>(i) / static_cast<double>(mod);
    acc += coef * std::complex<double>(std::cos(ang), std::sin(ang));
    mass += std::fabs(coef);
  }
  return ComplexApprox{acc, mass * 4.0 * std::numeric_limits<double>::epsilon()};
}

std::string cyc_str(const CyclotomicInt& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.c.size(); ++i) {
    if (i) s += ",";
    s += v.c[i].str();
  }
  return s + "]";
}

long long sum_domain_size(long long q, int k, int n, size_t j_count) {
  __int128 qk = 1;
  for (int i = 0; i < k; ++i) {
    qk *= q;
    if (qk > (__int128)4e18) return -1;
  }
  __int128 total = 1;
  for (int i = 0; i < n; ++i) {
    total *= (static_cast<size_t>(i) < j_count) ? qk : qk - 1;
    if (total > (__int128)4e18) return -1;
  }
  return static_cast<long long>(total);
}

namespace {

struct CompiledMono {
  int32_t log_coeff;
  std::vector<int32_t> exps;  // length n
};

struct CompiledTerm {
  int32_t log_coeff;                              // log of the integer coefficient mod p
  std::vector<std::pair<int, int32_t>> var_exps;  // (variable index < 2m, exponent > 0)
};

// universal sum polynomials reduced mod p, as flat term lists over logs
std::vector<std::vector<CompiledTerm>> compile_witt_add(const UnivWittPolys& W,
                                                        const TorusTable& T) {
  std::vector<std::vector<CompiledTerm>> prog;
  for (const auto& poly : W.sum) {
    std::vector<CompiledTerm> terms;
    for (const auto& [e, coef] : poly) {
      Int cm = coef % T.p;
      if (cm < 0) cm += T.p;
      if (cm == 0) continue;
      CompiledTerm t;
      t.log_coeff = T.log_of_int[static_cast<size_t>(static_cast<long long>(cm))];
      for (size_t v = 0; v < e.size(); ++v)
        if (e[v] != 0) t.var_exps.emplace_back(static_cast<int>(v), e[v]);
      terms.push_back(std::move(t));
    }
    prog.push_back(std::move(terms));
  }
  return prog;
}

class TraceKernel {
 public:
  TraceKernel(const WittLaurent& f, const FieldCtx& Fq, const FieldCtx& Fk, const Limits& lim)
      : T_(Fk.tables()), m_(f.m), n_(f.n), deg_(Fk.deg()) {
    const UnivWittPolys& W = UnivWittPolys::get(f.p, f.m, lim);
    prog_ = compile_witt_add(W, T_);
    // embed the coefficients of f once
    for (const auto& coord : f.coords) {
      std::vector<CompiledMono> monos;
      for (const auto& [u, c] : coord.terms) {
        CompiledMono cm;
        cm.log_coeff = Fk.to_log(Fk.embed(Fq, c));
        cm.exps = u;
        monos.push_back(std::move(cm));
      }
      coords_.push_back(std::move(monos));
    }
    long long pm = 1;
    for (int i = 0; i < f.m; ++i) pm *= f.p;
    omega_.resize(static_cast<size_t>(T_.p));
    for (long long c = 0; c < T_.p; ++c) omega_[static_cast<size_t>(c)] = teichmuller_lift(c, f.p, f.m);
    pm_ = pm;
  }

  long long pm() const { return pm_; }

  // x: coordinate logs (ZERO_IDX allowed on J coordinates); returns the trace
  // residue in Z/p^m
  long long eval_point(const std::vector<int32_t>& x) const {
    thread_local std::vector<int32_t> y, acc, cur, nxt;
    y.assign(static_cast<size_t>(m_), TorusTable::ZERO_IDX);
    for (int i = 0; i < m_; ++i) {
      int32_t s = TorusTable::ZERO_IDX;
      for (const auto& mono : coords_[static_cast<size_t>(i)]) {
        long long t = mono.log_coeff;
        bool dead = false;
        for (int j = 0; j < n_; ++j) {
          int32_t e = mono.exps[static_cast<size_t>(j)];
          if (e == 0) continue;
          if (x[static_cast<size_t>(j)] == TorusTable::ZERO_IDX) {
            dead = true;  // positive exponent at a zero coordinate
            break;
          }
          t += static_cast<long long>(e) * x[static_cast<size_t>(j)];
        }
        if (dead) continue;
        t %= T_.order;
        if (t < 0) t += T_.order;
        s = T_.add(s, static_cast<int32_t>(t));
      }
      y[static_cast<size_t>(i)] = s;
    }
    // acc = y; then fold in the Frobenius orbit with Witt addition
    acc = y;
    cur = y;
    for (int step = 1; step < deg_; ++step) {
      for (auto& v : cur) v = T_.frob(v);
      nxt.assign(static_cast<size_t>(m_), TorusTable::ZERO_IDX);
      for (int i = 0; i < m_; ++i) {
        int32_t s = TorusTable::ZERO_IDX;
        for (const auto& term : prog_[static_cast<size_t>(i)]) {
          long long t = term.log_coeff;
          bool dead = false;
          for (const auto& [v, e] : term.var_exps) {
            int32_t val = v < m_ ? acc[static_cast<size_t>(v)] : cur[static_cast<size_t>(v - m_)];
            if (val == TorusTable::ZERO_IDX) {
              dead = true;
              break;
            }
            t += static_cast<long long>(e) * val;
          }
          if (dead) continue;
          t %= T_.order;
          s = T_.add(s, static_cast<int32_t>(t));
        }
        nxt[static_cast<size_t>(i)] = s;
      }
      acc = nxt;
    }
    long long res = 0, pi = 1;
    for (int i = 0; i < m_; ++i) {
      int32_t lg = acc[static_cast<size_t>(i)];
      long long c = 0;
      if (lg != TorusTable::ZERO_IDX) {
        int32_t pv = T_.prime_val[static_cast<size_t>(lg)];
        if (pv < 0) fail(Err::TraceNotRational, "trace coordinate outside F_p");
        c = pv;
      }
      res = (res + omega_[static_cast<size_t>(c)] * pi) % pm_;
      pi *= T_.p;
    }
    return res;
  }

 private:
  const TorusTable& T_;
  int m_, n_, deg_;
  std::vector<std::vector<CompiledMono>> coords_;
  std::vector<std::vector<CompiledTerm>> prog_;
  std::vector<long long> omega_;
  long long pm_ = 0;
};

}  // namespace

SumResult exp_sum(const WittLaurent& f, const FieldCtx& Fq, const SumOptions& opt,
                  const Limits& lim) {
  if (opt.k < 1) fail(Err::SchemaError, "k must be positive");
  if (opt.sign == SignConvention::alternating && !opt.J.empty())
    fail(Err::SchemaError, "the alternating sum is defined for J = {}");
  std::vector<bool> in_J(static_cast<size_t>(f.n), false);
  for (int j : opt.J) {
    if (j < 1 || j > f.n) fail(Err::SchemaError, "J index out of range");
    in_J[static_cast<size_t>(j - 1)] = true;
  }
  for (const auto& coord : f.coords)
    for (const auto& [u, c] : coord.terms)
      for (int j = 0; j < f.n; ++j)
        if (in_J[static_cast<size_t>(j)] && u[static_cast<size_t>(j)] < 0)
          fail(Err::NegativeExponentInJ,
               "negative exponent on J coordinate " + std::to_string(j + 1));

  long long domain = sum_domain_size(Fq.size(), opt.k, f.n, opt.J.size());
  if (domain < 0 || domain > lim.domain_budget)
    fail(Err::BudgetExceeded,
         "sum domain has " + (domain < 0 ? std::string(">= 2^62") : std::to_string(domain)) +
             " points, budget is " + std::to_string(lim.domain_budget));

  FieldCtx Fk(Fq.p(), Fq.deg() * opt.k, std::nullopt, lim);
  TraceKernel kernel(f, Fq, Fk, lim);
  const long long qk = Fk.size();

  // flat index -> coordinate logs: J coordinates use radix q^k (0 = zero
  // element, d >= 1 = log d-1), others radix q^k - 1 (log directly)
  auto decode_eval = [&](long long idx, std::vector<int32_t>& x) {
    for (int i = 0; i < f.n; ++i) {
      if (in_J[static_cast<size_t>(i)]) {
        long long d = idx % qk;
        idx /= qk;
        x[static_cast<size_t>(i)] = d == 0 ? TorusTable::ZERO_IDX : static_cast<int32_t>(d - 1);
      } else {
        long long d = idx % (qk - 1);
        idx /= (qk - 1);
        x[static_cast<size_t>(i)] = static_cast<int32_t>(d);
      }
    }
    return kernel.eval_point(x);
  };

  const long long pm = kernel.pm();
  int threads = std::max(1, opt.threads);
  std::vector<std::vector<long long>> locals(static_cast<size_t>(threads),
                                             std::vector<long long>(static_cast<size_t>(pm), 0));
  if (threads == 1 || domain < 4096) {
    std::vector<int32_t> x(static_cast<size_t>(f.n));
    for (long long idx = 0; idx < domain; ++idx) ++locals[0][static_cast<size_t>(decode_eval(idx, x))];
  } else {
    std::vector<std::thread> pool;
    long long per = domain / threads, rem = domain % threads, at = 0;
    for (int t = 0; t < threads; ++t) {
      long long len = per + (t < rem ? 1 : 0);
      long long begin = at, end = at + len;
      at = end;
      pool.emplace_back([&, t, begin, end] {
        std::vector<int32_t> x(static_cast<size_t>(f.n));
        for (long long idx = begin; idx < end; ++idx)
          ++locals[static_cast<size_t>(t)][static_cast<size_t>(decode_eval(idx, x))];
      });
    }
    for (auto& th : pool) th.join();
  }

  SumResult out;
  out.k = opt.k;
  out.profile.assign(static_cast<size_t>(pm), 0);
  for (const auto& loc : locals)
    for (size_t c = 0; c < loc.size(); ++c) out.profile[c] += loc[c];

  CyclotomicInt val = CyclotomicInt::zero(f.p, f.m);
  for (long long c = 0; c < pm; ++c) {
    if (out.profile[static_cast<size_t>(c)] == 0) continue;
    val = cyc_add(val, cyc_scale(character_value(f.p, f.m, opt.twist * c),
                                 Int(out.profile[static_cast<size_t>(c)])));
  }
  if (opt.sign == SignConvention::alternating && f.n % 2 == 0) val = cyc_neg(val);
  out.value = std::move(val);
  return out;
}

}  // namespace wittsum
