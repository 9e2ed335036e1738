#include "wittsum/ffield.hpp"

#include <algorithm>
#include <sstream>

#include "wittsum/intutil.hpp"

namespace wittsum {

namespace {

using Poly = std::vector<int32_t>;  // dense coefficients, ascending degree

int poly_deg(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[static_cast<size_t>(i)] != 0) return i;
  return -1;
}

void poly_trim(Poly& f) { f.resize(static_cast<size_t>(poly_deg(f) + 1)); }

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, long long p) {
  size_t d = mod.size() - 1;
  std::vector<long long> prod(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + 1LL * a[i] * b[j]) % p;
  }
  // reduce by the monic modulus
  for (size_t i = prod.size(); i-- > d;) {
    long long c = prod[i] % p;
    if (c == 0) continue;
    for (size_t j = 0; j < d; ++j) {
      size_t t = i - d + j;
      prod[t] = ((prod[t] - c * mod[j]) % p + p) % p;
    }
    prod[i] = 0;
  }
  Poly out(d, 0);
  for (size_t i = 0; i < d && i < prod.size(); ++i) out[i] = static_cast<int32_t>(((prod[i] % p) + p) % p);
  return out;
}

Poly poly_pow_mod(Poly base, Int e, const Poly& mod, long long p) {
  Poly r(mod.size() - 1, 0);
  if (mod.size() >= 2)
    r[0] = 1;
  while (e > 0) {
    if ((e & 1) != 0) r = poly_mul_mod(r, base, mod, p);
    base = poly_mul_mod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

Poly poly_mod(Poly a, const Poly& b, long long p) {
  poly_trim(a);
  int db = poly_deg(b);
  long long lead_inv = 1;
  {  // invert the leading coefficient of b mod p
    long long lb = b[static_cast<size_t>(db)] % p;
    long long t = 1, c = lb;
    for (long long e = p - 2; e > 0; e >>= 1) {
      if (e & 1) t = t * c % p;
      c = c * c % p;
    }
    lead_inv = t;
  }
  while (poly_deg(a) >= db && poly_deg(a) >= 0) {
    int da = poly_deg(a);
    long long f = a[static_cast<size_t>(da)] * lead_inv % p;
    for (int i = 0; i <= db; ++i) {
      size_t t = static_cast<size_t>(da - db + i);
      a[t] = static_cast<int32_t>((((a[t] - f * b[static_cast<size_t>(i)]) % p) + p) % p);
    }
  }
  poly_trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, long long p) {
  poly_trim(a);
  poly_trim(b);
  while (poly_deg(b) >= 0) {
    Poly r = poly_mod(a, b, p);
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

bool poly_is_irreducible(const std::vector<int32_t>& f, long long p) {
  int d = poly_deg(f);
  if (d <= 0) return false;
  if (f[static_cast<size_t>(d)] != 1) return false;
  if (d == 1) return true;
  Poly x = {0, 1};
  // x^(p^d) == x mod f
  Poly h = poly_pow_mod(x, int_pow(Int(p), static_cast<unsigned>(d)), f, p);
  Poly hx = h;
  if (hx.size() < 2) hx.resize(2, 0);
  hx[1] = static_cast<int32_t>(((hx[1] - 1) % p + p) % p);
  if (poly_deg(hx) >= 0) return false;
  for (long long r : prime_factors(d)) {
    Poly g = poly_pow_mod(x, int_pow(Int(p), static_cast<unsigned>(d / r)), f, p);
    if (g.size() < 2) g.resize(2, 0);
    g[1] = static_cast<int32_t>(((g[1] - 1) % p + p) % p);
    Poly gc = poly_gcd(f, g, p);
    if (poly_deg(gc) != 0) return false;
  }
  return true;
}

FieldCtx::FieldCtx(long long p, int deg, std::optional<std::vector<int32_t>> modulus, const Limits& lim)
    : p_(p), deg_(deg) {
  if (!is_prime_ll(p)) fail(Err::NotPrime, "p = " + std::to_string(p) + " is not prime");
  if (deg < 1) fail(Err::DegreeMismatch, "extension degree must be >= 1");
  q_ = 1;
  for (int i = 0; i < deg; ++i) {
    q_ *= p;
    if (q_ > lim.field_size_cap)
      fail(Err::CapExceeded, "field size " + std::to_string(p) + "^" + std::to_string(deg) +
                                 " exceeds cap " + std::to_string(lim.field_size_cap));
  }
  if (modulus) {
    modulus_ = *modulus;
    if (static_cast<int>(modulus_.size()) != deg + 1 || modulus_[static_cast<size_t>(deg)] != 1)
      fail(Err::DegreeMismatch, "modulus must be monic of degree " + std::to_string(deg));
    for (auto& c : modulus_) c = static_cast<int32_t>(((c % p) + p) % p);
    if (modulus_[static_cast<size_t>(deg)] != 1)
      fail(Err::DegreeMismatch, "modulus must be monic of degree " + std::to_string(deg));
    if (!poly_is_irreducible(modulus_, p))
      fail(Err::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
  } else if (deg == 1) {
    modulus_ = {0, 1};  // x
  } else {
    // smallest monic irreducible: scan x^deg + sum c_i x^i by the packed
    // integer sum c_i p^i ascending
    for (long long packed = 0;; ++packed) {
      if (packed >= q_) fail(Err::Internal, "no irreducible polynomial found");
      Poly f(static_cast<size_t>(deg) + 1, 0);
      long long v = packed;
      for (int i = 0; i < deg; ++i) {
        f[static_cast<size_t>(i)] = static_cast<int32_t>(v % p);
        v /= p;
      }
      f[static_cast<size_t>(deg)] = 1;
      if (poly_is_irreducible(f, p)) {
        modulus_ = f;
        break;
      }
    }
  }
}

FieldElem FieldCtx::from_int(long long v) const {
  FieldElem e = zero();
  e.c[0] = static_cast<int32_t>(((v % p_) + p_) % p_);
  return e;
}

FieldElem FieldCtx::gen() const {
  if (deg_ == 1) return one();
  FieldElem e = zero();
  e.c[1] = 1;
  return e;
}

FieldElem FieldCtx::from_coeffs(const std::vector<int32_t>& c) const {
  if (static_cast<int>(c.size()) > deg_) fail(Err::DegreeMismatch, "coefficient vector too long");
  FieldElem e = zero();
  for (size_t i = 0; i < c.size(); ++i) e.c[i] = static_cast<int32_t>(((c[i] % p_) + p_) % p_);
  return e;
}

bool FieldCtx::is_zero(const FieldElem& a) const {
  for (int32_t v : a.c)
    if (v != 0) return false;
  return true;
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
  FieldElem r = a;
  for (int i = 0; i < deg_; ++i) {
    r.c[static_cast<size_t>(i)] = static_cast<int32_t>((r.c[static_cast<size_t>(i)] + b.c[static_cast<size_t>(i)]) % p_);
  }
  return r;
}

FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const { return add(a, neg(b)); }

FieldElem FieldCtx::neg(const FieldElem& a) const {
  FieldElem r = a;
  for (auto& v : r.c) v = static_cast<int32_t>((p_ - v) % p_);
  return r;
}

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
  Poly r = poly_mul_mod(a.c, b.c, modulus_, p_);
  r.resize(static_cast<size_t>(deg_), 0);
  return FieldElem{std::move(r)};
}

FieldElem FieldCtx::pow(const FieldElem& a, long long e) const {
  if (is_zero(a)) {
    if (e == 0) return one();
    if (e < 0) fail(Err::Internal, "inverse of zero");
    return zero();
  }
  long long ord = q_ - 1;
  e %= ord;
  if (e < 0) e += ord;
  Poly r = poly_pow_mod(a.c, Int(e), modulus_, p_);
  r.resize(static_cast<size_t>(deg_), 0);
  return FieldElem{std::move(r)};
}

FieldElem FieldCtx::inv(const FieldElem& a) const {
  if (is_zero(a)) fail(Err::Internal, "inverse of zero");
  return pow(a, q_ - 2);
}

FieldElem FieldCtx::frobenius(const FieldElem& a, long long j) const {
  if (j < 0) fail(Err::Internal, "negative Frobenius power");
  FieldElem r = a;
  for (long long i = 0; i < j; ++i) r = pow(r, p_);
  return r;
}

long long FieldCtx::trace_abs(const FieldElem& a) const {
  FieldElem s = zero();
  FieldElem cur = a;
  for (int j = 0; j < deg_; ++j) {
    s = add(s, cur);
    cur = pow(cur, p_);
  }
  for (int i = 1; i < deg_; ++i)
    if (s.c[static_cast<size_t>(i)] != 0) fail(Err::TraceNotRational, "absolute trace left the prime field");
  return s.c[0];
}

long long FieldCtx::pack(const FieldElem& a) const {
  long long v = 0;
  for (int i = deg_ - 1; i >= 0; --i) v = v * p_ + a.c[static_cast<size_t>(i)];
  return v;
}

FieldElem FieldCtx::unpack(long long packed) const {
  FieldElem e = zero();
  for (int i = 0; i < deg_; ++i) {
    e.c[static_cast<size_t>(i)] = static_cast<int32_t>(packed % p_);
    packed /= p_;
  }
  return e;
}

std::string FieldCtx::to_string(const FieldElem& a) const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < deg_; ++i) {
    if (i) os << ",";
    os << a.c[static_cast<size_t>(i)];
  }
  os << "]";
  return os.str();
}

void FieldCtx::build_tables() const {
  auto t = std::make_unique<TorusTable>();
  t->q = q_;
  t->order = q_ - 1;
  t->p = p_;
  t->deg = deg_;

  // find a primitive element: first element (in packed order) of multiplicative
  // order q-1
  auto factors = prime_factors(q_ - 1);
  FieldElem g = zero();
  for (long long cand = 1; cand < q_; ++cand) {
    FieldElem e = unpack(cand);
    bool ok = true;
    for (long long r : factors) {
      if (is_zero(sub(pow(e, (q_ - 1) / r), one()))) {
        ok = false;
        break;
      }
    }
    if (ok) {
      g = e;
      break;
    }
  }

  t->exp_packed.resize(static_cast<size_t>(q_ - 1));
  t->log_packed.assign(static_cast<size_t>(q_), TorusTable::ZERO_IDX);
  FieldElem cur = one();
  for (long long i = 0; i < q_ - 1; ++i) {
    long long pk = pack(cur);
    t->exp_packed[static_cast<size_t>(i)] = static_cast<int32_t>(pk);
    t->log_packed[static_cast<size_t>(pk)] = static_cast<int32_t>(i);
    cur = mul(cur, g);
  }

  t->zech.resize(static_cast<size_t>(q_ - 1));
  for (long long i = 0; i < q_ - 1; ++i) {
    FieldElem e = unpack(t->exp_packed[static_cast<size_t>(i)]);
    e.c[0] = static_cast<int32_t>((e.c[0] + 1) % p_);
    long long pk = pack(e);
    t->zech[static_cast<size_t>(i)] =
        pk == 0 ? TorusTable::ZERO_IDX : t->log_packed[static_cast<size_t>(pk)];
  }

  t->prime_val.assign(static_cast<size_t>(q_ - 1), -1);
  t->log_of_int.assign(static_cast<size_t>(p_), TorusTable::ZERO_IDX);
  for (long long v = 1; v < p_; ++v) {
    int32_t lg = t->log_packed[static_cast<size_t>(v)];
    t->log_of_int[static_cast<size_t>(v)] = lg;
    t->prime_val[static_cast<size_t>(lg)] = static_cast<int32_t>(v);
  }

  tables_ = std::move(t);
}

const TorusTable& FieldCtx::tables() const {
  std::call_once(table_once_, [this] { build_tables(); });
  return *tables_;
}

int32_t FieldCtx::to_log(const FieldElem& a) const {
  if (is_zero(a)) return TorusTable::ZERO_IDX;
  return tables().log_packed[static_cast<size_t>(pack(a))];
}

FieldElem FieldCtx::from_log(int32_t idx) const {
  if (idx == TorusTable::ZERO_IDX) return zero();
  return unpack(tables().exp_packed[static_cast<size_t>(idx)]);
}

FieldElem FieldCtx::embed_root(const FieldCtx& sub) const {
  if (sub.p() != p_ || deg_ % sub.deg() != 0)
    fail(Err::DegreeMismatch, "no subfield of degree " + std::to_string(sub.deg()));
  if (sub.deg() == 1) return one();
  const TorusTable& t = tables();
  long long step = (q_ - 1) / (sub.size() - 1);
  // the candidate roots of the subfield modulus all lie in the unique
  // subgroup of order sub.size()-1 (plus 0, which is never a root)
  for (long long j = 0; j < sub.size() - 1; ++j) {
    FieldElem x = from_log(static_cast<int32_t>(j * step));
    FieldElem acc = zero();
    for (int i = sub.deg(); i >= 0; --i) {
      acc = mul(acc, x);
      acc = add(acc, from_int(sub.modulus()[static_cast<size_t>(i)]));
    }
    if (is_zero(acc)) return x;
  }
  fail(Err::Internal, "subfield modulus has no root in the extension");
}

FieldElem FieldCtx::embed(const FieldCtx& sub, const FieldElem& x) const {
  if (sub.deg() == 1) return from_int(x.c[0]);
  FieldElem r = embed_root(sub);
  FieldElem acc = zero();
  for (int i = sub.deg() - 1; i >= 0; --i) {
    acc = mul(acc, r);
    acc = add(acc, from_int(x.c[static_cast<size_t>(i)]));
  }
  return acc;
}

PointDomain::PointDomain(const FieldCtx& ctx, int n, std::vector<int> J) : ctx_(ctx), n_(n) {
  in_J_.assign(static_cast<size_t>(n), false);
  for (int j : J) {
    if (j < 1 || j > n) fail(Err::SchemaError, "J index out of range: " + std::to_string(j));
    in_J_[static_cast<size_t>(j - 1)] = true;
  }
  size_ = 1;
  for (int i = 0; i < n; ++i) size_ *= in_J_[static_cast<size_t>(i)] ? ctx.size() : ctx.size() - 1;
}

std::vector<FieldElem> PointDomain::decode(long long idx) const {
  std::vector<FieldElem> pt;
  pt.reserve(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    long long radix = in_J_[static_cast<size_t>(i)] ? ctx_.size() : ctx_.size() - 1;
    long long d = idx % radix;
    idx /= radix;
    pt.push_back(ctx_.unpack(in_J_[static_cast<size_t>(i)] ? d : d + 1));
  }
  return pt;
}

std::vector<std::pair<long long, long long>> PointDomain::chunks(int parts) const {
  if (parts < 1) parts = 1;
  std::vector<std::pair<long long, long long>> out;
  long long per = size_ / parts, rem = size_ % parts, at = 0;
  for (int i = 0; i < parts; ++i) {
    long long len = per + (i < rem ? 1 : 0);
    if (len == 0) continue;
    out.emplace_back(at, at + len);
    at += len;
  }
  return out;
}

}  // namespace wittsum
