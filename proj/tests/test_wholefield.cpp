#include <doctest.h>

#include "wittsum/report.hpp"

using namespace wittsum;

namespace {

CyclotomicInt cyc(long long p, int m, std::vector<long long> coords) {
  CyclotomicInt v = CyclotomicInt::zero(p, m);
  for (size_t i = 0; i < coords.size(); ++i) v.c[i] = coords[i];
  return v;
}

PolygonChain chain(std::vector<std::pair<Rat, Rat>> pts) {
  PolygonChain c;
  c.v = std::move(pts);
  return c;
}

// endpoint of the sliced Hodge polygon from boundary volumes alone:
// U = (n/2) V + sum_{l>=1} (-1)^l ((n-l)!/2) (sum_{|C|=l-1} S_C - l sum_{|C|=l} Vol_C)
Rat endpoint_from_boundary(const NewtonData& nd, const CommodeResult& cm, size_t jsize, Rat V) {
  Rat U = Rat(Int(nd.n)) * V / 2;
  for (size_t l = 1; l <= jsize + 1; ++l) {
    Rat A(0), B(0);
    for (const auto& sl : cm.slices) {
      if (sl.C.size() == l - 1 && sl.delta.n <= 2)
        A += Rat(Int(boundary_through_origin(sl.delta)));
      if (sl.C.size() == l) {
        Int fact = 1;
        for (int i = 2; i <= sl.delta.n; ++i) fact *= i;
        B += Rat(volume_normalized(sl.delta), fact);  // plain relative volume
      }
    }
    if (static_cast<int>(l) > nd.n) {
      REQUIRE(A == 0);
      REQUIRE(B == 0);
      continue;
    }
    Int fact = 1;
    for (int i = 2; i <= nd.n - static_cast<int>(l); ++i) fact *= i;
    Rat term = Rat(fact) * (A - Rat(Int(l)) * B) / 2;
    U += (l % 2 == 0) ? term : -term;
  }
  return U;
}

void check_endpoint_formula(const Pipeline& pl) {
  REQUIRE(pl.report.has_value());
  REQUIRE(pl.commode.has_value());
  const PolygonChain& hp = pl.report->hp;
  Rat V = hp.empty() ? Rat(0) : hp.back().first;
  Rat U = hp.empty() ? Rat(0) : hp.back().second;
  CHECK(endpoint_from_boundary(*pl.nd, *pl.commode, pl.job.J.size(), V) == U);
}

}  // namespace

TEST_CASE("whole-field sums with a stretched degree grid") {
  // f = (x,0), p=2, m=2, J={1}: Delta = [0,2] with D = 2, slice {0} with D = 1
  JobSpec job = parse_job(
      R"({"p":2,"a":1,"m":2,"n":1,"J":[1],"witt_coords":[[{"u":[1],"c":[1]}],[]],"kmax":4})");
  Pipeline pl = run_pipeline(job, Command::verify, 1);
  REQUIRE(pl.commode.has_value());
  CHECK(pl.commode->commode);
  // S_1 = 1 + zeta (the x = 0 term contributes psi(0) = 1)
  CHECK(pl.sums[0].value == cyc(2, 2, {1, 1}));
  REQUIRE(pl.poly.has_value());
  CHECK(pl.poly->degree() == 1);
  CHECK(pl.poly->coeffs[1] == cyc(2, 2, {1, 1}));
  const auto& r = *pl.report;
  CHECK(r.expected_degree == 1);
  CHECK(r.hodge_coeffs == std::vector<Int>{0, 1});  // h(t) = t on the D = 2 grid
  PolygonChain expect = chain({{Rat(0), Rat(0)}, {Rat(1), make_rat(1, 2)}});
  CHECK(r.np == expect);
  CHECK(r.hp == expect);
  CHECK(r.np_above_hp == Verdict::Pass);
  CHECK(r.endpoints_match == Verdict::Pass);
  // |1+zeta| = sqrt(2) = q^(n/2): purity applies since Delta_J = {0}
  CHECK(r.weights_pure == Verdict::Pass);
  check_endpoint_formula(pl);
}

TEST_CASE("even-dimension whole-field sums need the trace-formula sign") {
  // f = x + y + xy over F_2: S_k(f,J) = (-2)^k unsigned; the L-polynomial of
  // the covering is 1 + 2t
  JobSpec job = parse_job(
      R"({"p":2,"a":1,"m":1,"n":2,"J":[1,2],
          "witt_coords":[[{"u":[1,0],"c":[1]},{"u":[0,1],"c":[1]},{"u":[1,1],"c":[1]}]],
          "kmax":4})");
  Pipeline pl = run_pipeline(job, Command::verify, 1);
  CHECK(pl.commode->commode);
  CHECK(pl.sums[0].value == cyc(2, 1, {-2}));  // unsigned convention reported
  CHECK(pl.sums[1].value == cyc(2, 1, {4}));
  REQUIRE(pl.poly.has_value());
  REQUIRE(pl.poly->degree() == 1);
  CHECK(pl.poly->coeffs[1] == cyc(2, 1, {2}));
  const auto& r = *pl.report;
  CHECK(r.expected_degree == 1);  // 2 - 1 - 1 + 1
  PolygonChain expect = chain({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}});
  CHECK(r.np == expect);
  CHECK(r.hp == expect);
  // 0 is interior to Delta_J = {0}: |2| = 2^(2/2)
  CHECK(r.weights_pure == Verdict::Pass);
  check_endpoint_formula(pl);
}

TEST_CASE("partial J on the unit square") {
  JobSpec job = parse_job(
      R"({"p":2,"a":1,"m":1,"n":2,"J":[1],
          "witt_coords":[[{"u":[1,0],"c":[1]},{"u":[0,1],"c":[1]},{"u":[1,1],"c":[1]}]],
          "kmax":4})");
  Pipeline pl = run_pipeline(job, Command::verify, 1);
  CHECK(pl.commode->commode);
  REQUIRE(pl.poly.has_value());
  CHECK(pl.poly->degree() == 1);
  const auto& r = *pl.report;
  CHECK(r.expected_degree == 1);  // 2 - 1
  CHECK(r.np_above_hp == Verdict::Pass);
  CHECK(r.endpoints_match == Verdict::Pass);
  check_endpoint_formula(pl);
}

TEST_CASE("endpoint formula on the n=1 reference cases") {
  for (const char* text :
       {R"({"p":2,"a":1,"m":1,"n":1,"J":[1],"witt_coords":[[{"u":[1],"c":[1]}]],"kmax":3})",
        R"({"p":3,"a":1,"m":1,"n":1,"J":[1],"witt_coords":[[{"u":[1],"c":[1]},{"u":[2],"c":[2]}]],"kmax":3})"}) {
    JobSpec job = parse_job(text);
    Pipeline pl = run_pipeline(job, Command::verify, 1);
    check_endpoint_formula(pl);
  }
}

TEST_CASE("non-commode slices take the rational route") {
  // conv{0,(1,1),(2,1)} has a point slice at x2 = 0
  JobSpec job = parse_job(
      R"({"p":2,"a":1,"m":1,"n":2,"J":[2],
          "witt_coords":[[{"u":[1,1],"c":[1]},{"u":[2,1],"c":[1]}]],"kmax":5})");
  Pipeline pl = run_pipeline(job, Command::verify, 1);
  CHECK(!pl.commode->commode);
  CHECK(!pl.poly.has_value());
  REQUIRE(pl.route_note.has_value());
  CHECK(pl.route_note->find("commode") != std::string::npos);
}
