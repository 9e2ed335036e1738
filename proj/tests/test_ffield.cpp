#include <doctest.h>

#include <random>
#include <set>

#include "wittsum/ffield.hpp"

using namespace wittsum;

TEST_CASE("prime fields and canonical moduli") {
  FieldCtx f2(2, 1);
  CHECK(f2.size() == 2);
  CHECK(f2.modulus() == std::vector<int32_t>{0, 1});

  FieldCtx f3(3, 1);
  CHECK(f3.size() == 3);

  // the only irreducible quadratic over F_2 is t^2+t+1
  FieldCtx f4(2, 2);
  CHECK(f4.modulus() == std::vector<int32_t>{1, 1, 1});
  FieldCtx f4_explicit(2, 2, std::vector<int32_t>{1, 1, 1});
  CHECK(f4_explicit.size() == 4);
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(FieldCtx(4, 1), Error);
  CHECK_THROWS_AS(FieldCtx(2, 2, std::vector<int32_t>{1, 0, 1}), Error);  // (t+1)^2
  CHECK_THROWS_AS(FieldCtx(2, 2, std::vector<int32_t>{1, 1}), Error);    // degree mismatch
  Limits tiny;
  tiny.field_size_cap = 8;
  CHECK_THROWS_AS(FieldCtx(2, 4, std::nullopt, tiny), Error);
}

TEST_CASE("frobenius in F_4") {
  FieldCtx f4(2, 2);
  FieldElem t = f4.gen();
  CHECK(f4.frobenius(t, 0) == t);
  // t^2 = t + 1 under t^2+t+1
  CHECK(f4.frobenius(t, 1) == f4.from_coeffs({1, 1}));
  CHECK(f4.frobenius(t, 2) == t);
}

TEST_CASE("frobenius properties on all small fields") {
  for (auto [p, d] : {std::pair<long long, int>{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 4},
                      {5, 1}, {5, 2}, {7, 2}}) {
    FieldCtx F(p, d);
    if (F.size() > 81) continue;
    for (long long xi = 0; xi < F.size(); ++xi) {
      FieldElem x = F.unpack(xi);
      CHECK(F.frobenius(x, d) == x);
      // absolute trace lands in the prime field (trace_abs throws otherwise)
      (void)F.trace_abs(x);
      for (long long yi = 0; yi < F.size(); ++yi) {
        FieldElem y = F.unpack(yi);
        CHECK(F.frobenius(F.add(x, y), 1) == F.add(F.frobenius(x, 1), F.frobenius(y, 1)));
      }
    }
  }
}

TEST_CASE("field arithmetic basics") {
  FieldCtx F(3, 2);
  FieldElem t = F.gen();
  CHECK(F.mul(t, F.inv(t)) == F.one());
  CHECK(F.is_zero(F.add(t, F.neg(t))));
  CHECK(F.pow(t, F.size() - 1) == F.one());
  // multiplicative inverses across the whole field
  for (long long xi = 1; xi < F.size(); ++xi) {
    FieldElem x = F.unpack(xi);
    CHECK(F.mul(x, F.inv(x)) == F.one());
  }
}

TEST_CASE("log/Zech tables agree with polynomial arithmetic") {
  for (auto [p, d] : {std::pair<long long, int>{2, 3}, {3, 2}, {5, 1}, {2, 5}}) {
    FieldCtx F(p, d);
    const TorusTable& T = F.tables();
    for (long long xi = 0; xi < F.size(); ++xi) {
      for (long long yi = 0; yi < F.size(); ++yi) {
        FieldElem x = F.unpack(xi), y = F.unpack(yi);
        int32_t lx = F.to_log(x), ly = F.to_log(y);
        CHECK(F.from_log(T.add(lx, ly)) == F.add(x, y));
        CHECK(F.from_log(T.mul(lx, ly)) == F.mul(x, y));
      }
      FieldElem x = F.unpack(xi);
      CHECK(F.from_log(T.frob(F.to_log(x))) == F.pow(x, p));
    }
  }
}

TEST_CASE("subfield embedding") {
  FieldCtx f4(2, 2);
  FieldCtx f16(2, 4);
  FieldElem r = f16.embed_root(f4);
  // image of the F_4 generator satisfies t^2+t+1 = 0
  FieldElem chk = f16.add(f16.add(f16.mul(r, r), r), f16.one());
  CHECK(f16.is_zero(chk));
  // embedding is a field homomorphism
  for (long long xi = 0; xi < 4; ++xi)
    for (long long yi = 0; yi < 4; ++yi) {
      FieldElem x = f4.unpack(xi), y = f4.unpack(yi);
      CHECK(f16.embed(f4, f4.mul(x, y)) == f16.mul(f16.embed(f4, x), f16.embed(f4, y)));
      CHECK(f16.embed(f4, f4.add(x, y)) == f16.add(f16.embed(f4, x), f16.embed(f4, y)));
    }
}

TEST_CASE("point enumeration") {
  FieldCtx f3(3, 1);
  PointDomain d1(f3, 1, {});
  CHECK(d1.size() == 2);
  std::set<long long> seen;
  for (long long i = 0; i < d1.size(); ++i) seen.insert(f3.pack(d1.decode(i)[0]));
  CHECK(seen == std::set<long long>{1, 2});

  FieldCtx f2(2, 1);
  PointDomain d2(f2, 2, {});
  CHECK(d2.size() == 1);
  auto pt = d2.decode(0);
  CHECK(pt[0] == f2.one());
  CHECK(pt[1] == f2.one());

  PointDomain d3(f2, 1, {1});
  CHECK(d3.size() == 2);

  // chunking covers the domain exactly once
  FieldCtx f9(3, 2);
  PointDomain d4(f9, 2, {2});
  CHECK(d4.size() == 8 * 9);
  long long total = 0;
  for (auto [b, e] : d4.chunks(7)) total += e - b;
  CHECK(total == d4.size());
}
