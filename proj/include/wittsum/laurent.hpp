#pragma once

#include <map>
#include <string>
#include <vector>

#include "wittsum/ffield.hpp"
#include "wittsum/intutil.hpp"

namespace wittsum {

using ExpVec = std::vector<int32_t>;

// Sparse Laurent polynomial over F_q: exponent vector -> nonzero coefficient.
// The ordered map keeps every traversal deterministic.
struct LaurentPoly {
  std::map<ExpVec, FieldElem> terms;
  bool operator==(const LaurentPoly&) const = default;
};

// Ring handle for F_q itself.
struct FqRing {
  const FieldCtx* F;
  using Elem = FieldElem;
  long long characteristic() const { return F->p(); }
  Elem zero() const { return F->zero(); }
  Elem one() const { return F->one(); }
  Elem add(const Elem& a, const Elem& b) const { return F->add(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return F->mul(a, b); }
  Elem neg(const Elem& a) const { return F->neg(a); }
  bool is_zero(const Elem& a) const { return F->is_zero(a); }
  Elem from_bigint(const Int& v) const {
    return F->from_int(static_cast<long long>(v % F->p()));
  }
};

// Ring handle for F_q[x_1^{±1},...,x_n^{±1}] with a swell cap.
struct LaurentRing {
  const FieldCtx* F;
  int n;
  std::size_t monomial_cap;
  using Elem = LaurentPoly;

  long long characteristic() const { return F->p(); }
  Elem zero() const { return LaurentPoly{}; }
  Elem one() const { return from_bigint(1); }

  Elem monomial(const ExpVec& u, const FieldElem& c) const {
    LaurentPoly r;
    if (!F->is_zero(c)) r.terms.emplace(u, c);
    return r;
  }

  Elem add(const Elem& a, const Elem& b) const {
    LaurentPoly r = a;
    for (const auto& [u, c] : b.terms) {
      auto it = r.terms.find(u);
      if (it == r.terms.end()) {
        r.terms.emplace(u, c);
      } else {
        it->second = F->add(it->second, c);
        if (F->is_zero(it->second)) r.terms.erase(it);
      }
    }
    return r;
  }

  Elem neg(const Elem& a) const {
    LaurentPoly r = a;
    for (auto& [u, c] : r.terms) c = F->neg(c);
    return r;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    LaurentPoly r;
    for (const auto& [ua, ca] : a.terms) {
      for (const auto& [ub, cb] : b.terms) {
        ExpVec u(ua.size());
        for (size_t i = 0; i < u.size(); ++i) u[i] = ua[i] + ub[i];
        FieldElem c = F->mul(ca, cb);
        auto it = r.terms.find(u);
        if (it == r.terms.end()) {
          if (!F->is_zero(c)) r.terms.emplace(std::move(u), c);
        } else {
          it->second = F->add(it->second, c);
          if (F->is_zero(it->second)) r.terms.erase(it);
        }
      }
      if (r.terms.size() > monomial_cap)
        fail(Err::CapExceeded, "Laurent product exceeded the monomial cap of " +
                                   std::to_string(monomial_cap));
    }
    return r;
  }

  bool is_zero(const Elem& a) const { return a.terms.empty(); }

  Elem from_bigint(const Int& v) const {
    long long c = static_cast<long long>(v % F->p());
    FieldElem fc = F->from_int(c);
    LaurentPoly r;
    if (!F->is_zero(fc)) r.terms.emplace(ExpVec(static_cast<size_t>(n), 0), fc);
    return r;
  }
};

// Exact integers, used to validate universal Witt polynomials against ghost
// components.
struct IntRing {
  using Elem = Int;
  long long characteristic() const { return 0; }
  Elem zero() const { return Int(0); }
  Elem one() const { return Int(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem from_bigint(const Int& v) const { return v; }
};

// Evaluate a Laurent polynomial at a point with nonzero coordinates, or with
// zero coordinates allowed wherever the exponent is nonnegative.
inline FieldElem laurent_eval(const LaurentPoly& f, const std::vector<FieldElem>& x,
                              const FieldCtx& F) {
  FieldElem acc = F.zero();
  for (const auto& [u, c] : f.terms) {
    FieldElem t = c;
    bool zero_term = false;
    for (size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      if (F.is_zero(x[i])) {
        if (u[i] < 0) fail(Err::Internal, "negative exponent at a zero coordinate");
        zero_term = true;
        break;
      }
      t = F.mul(t, F.pow(x[i], u[i]));
    }
    if (!zero_term) acc = F.add(acc, t);
  }
  return acc;
}

inline std::string laurent_str(const LaurentPoly& f, const FieldCtx& F) {
  if (f.terms.empty()) return "0";
  std::string s;
  for (const auto& [u, c] : f.terms) {
    if (!s.empty()) s += " + ";
    s += F.to_string(c) + "*x^(";
    for (size_t i = 0; i < u.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(u[i]);
    }
    s += ")";
  }
  return s;
}

}  // namespace wittsum
