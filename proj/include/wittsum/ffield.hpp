#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wittsum/config.hpp"
#include "wittsum/errors.hpp"

namespace wittsum {

// Element of F_{p^deg} in the polynomial basis: coefficient vector of length
// deg with entries in [0, p).
struct FieldElem {
  std::vector<int32_t> c;
  auto operator<=>(const FieldElem&) const = default;
};

// Log-space tables for one field: exp/log plus Zech logarithms, so the torus
// kernels get O(1) multiplication and addition. Elements are addressed by
// discrete log with respect to a fixed primitive element; ZERO_IDX stands for 0.
struct TorusTable {
  static constexpr int32_t ZERO_IDX = -1;

  long long q = 0;       // field size
  long long order = 0;   // q - 1
  long long p = 0;
  int deg = 0;
  std::vector<int32_t> exp_packed;  // i -> packed coords of g^i, size q-1
  std::vector<int32_t> log_packed;  // packed -> i, size q (entry for 0 unused)
  std::vector<int32_t> zech;        // i -> log(1 + g^i), ZERO_IDX if 1 + g^i = 0
  std::vector<int32_t> prime_val;   // i -> value in [0,p) if g^i lies in F_p, else -1
  std::vector<int32_t> log_of_int;  // v in [0,p) -> log of v (ZERO_IDX for v = 0)

  int32_t add(int32_t a, int32_t b) const {
    if (a == ZERO_IDX) return b;
    if (b == ZERO_IDX) return a;
    long long d = b - a;
    if (d < 0) d += order;
    int32_t z = zech[static_cast<size_t>(d)];
    if (z == ZERO_IDX) return ZERO_IDX;
    long long r = a + z;
    if (r >= order) r -= order;
    return static_cast<int32_t>(r);
  }
  int32_t mul(int32_t a, int32_t b) const {
    if (a == ZERO_IDX || b == ZERO_IDX) return ZERO_IDX;
    long long r = static_cast<long long>(a) + b;
    if (r >= order) r -= order;
    return static_cast<int32_t>(r);
  }
  // a * g^(e mod order) for a nonzero; exponent may be any integer
  int32_t mul_pow(int32_t a, long long e) const {
    if (a == ZERO_IDX) return ZERO_IDX;
    long long r = (a + e) % order;
    if (r < 0) r += order;
    return static_cast<int32_t>(r);
  }
  int32_t pow(int32_t a, long long e) const {
    if (a == ZERO_IDX) return e == 0 ? 0 : ZERO_IDX;
    long long r = (static_cast<long long>(a) * (e % order)) % order;
    if (r < 0) r += order;
    return static_cast<int32_t>(r);
  }
  int32_t frob(int32_t a) const { return pow(a, p); }
};

// Exact arithmetic context for F_{p^deg}. Immutable after construction and
// safe to share across threads; elements are plain value types.
class FieldCtx {
 public:
  // modulus: coefficient list c0..c_deg (monic). When omitted, the
  // lexicographically smallest monic irreducible of the given degree is used.
  FieldCtx(long long p, int deg, std::optional<std::vector<int32_t>> modulus = std::nullopt,
           const Limits& lim = default_limits());

  long long p() const { return p_; }
  int deg() const { return deg_; }
  long long size() const { return q_; }
  const std::vector<int32_t>& modulus() const { return modulus_; }

  FieldElem zero() const { return FieldElem{std::vector<int32_t>(deg_, 0)}; }
  FieldElem one() const { return from_int(1); }
  FieldElem from_int(long long v) const;
  // the class of x when deg > 1 (generator of the polynomial basis), else 1
  FieldElem gen() const;
  FieldElem from_coeffs(const std::vector<int32_t>& c) const;

  bool is_zero(const FieldElem& a) const;
  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem inv(const FieldElem& a) const;
  FieldElem pow(const FieldElem& a, long long e) const;

  // x^(p^j)
  FieldElem frobenius(const FieldElem& a, long long j) const;
  // absolute trace to F_p, returned as an integer in [0, p)
  long long trace_abs(const FieldElem& a) const;

  long long pack(const FieldElem& a) const;
  FieldElem unpack(long long packed) const;
  std::string to_string(const FieldElem& a) const;

  // Lazily built log/Zech tables (thread-safe construction).
  const TorusTable& tables() const;

  int32_t to_log(const FieldElem& a) const;
  FieldElem from_log(int32_t idx) const;

  // Image of sub's basis generator under the deterministic embedding of the
  // degree-sub.deg() subfield into this field. Requires sub.deg() | deg.
  FieldElem embed_root(const FieldCtx& sub) const;
  // Embed an element of sub into this field using embed_root.
  FieldElem embed(const FieldCtx& sub, const FieldElem& x) const;

 private:
  long long p_;
  int deg_;
  long long q_;
  std::vector<int32_t> modulus_;
  mutable std::once_flag table_once_;
  mutable std::unique_ptr<TorusTable> tables_;
  void build_tables() const;
};

// Monic irreducibility over F_p (Rabin's exact test).
bool poly_is_irreducible(const std::vector<int32_t>& f, long long p);

// Streamed enumeration of the points of F^n whose coordinates outside J are
// nonzero; J holds 1-based coordinate indices ranging over the whole field.
// Supports splitting the flat index space into contiguous chunks.
class PointDomain {
 public:
  PointDomain(const FieldCtx& ctx, int n, std::vector<int> J);
  long long size() const { return size_; }
  std::vector<FieldElem> decode(long long idx) const;
  std::vector<std::pair<long long, long long>> chunks(int parts) const;
  bool coord_in_J(int i) const { return in_J_[static_cast<size_t>(i)]; }

 private:
  const FieldCtx& ctx_;
  int n_;
  std::vector<bool> in_J_;
  long long size_;
};

}  // namespace wittsum
