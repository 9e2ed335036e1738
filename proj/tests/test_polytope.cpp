#include <doctest.h>

#include <random>
#include <set>

#include "wittsum/polytope.hpp"

using namespace wittsum;

namespace {

NewtonData poly_from(std::vector<Pt> pts, int n) { return build_polyhedron(std::move(pts), n); }

// all lattice points of Delta itself (degree <= 1)
std::vector<Pt> lattice_points_of(const NewtonData& nd) {
  std::vector<Pt> out;
  std::vector<long long> lo(static_cast<size_t>(nd.n)), hi(static_cast<size_t>(nd.n));
  for (int i = 0; i < nd.n; ++i) {
    long long mn = 0, mx = 0;
    for (const auto& v : nd.verts) {
      mn = std::min(mn, v[static_cast<size_t>(i)]);
      mx = std::max(mx, v[static_cast<size_t>(i)]);
    }
    lo[static_cast<size_t>(i)] = mn;
    hi[static_cast<size_t>(i)] = mx;
  }
  Pt u = lo;
  for (;;) {
    auto d = degree(nd, u);
    if (d && *d <= 1) out.push_back(u);
    int i = 0;
    while (i < nd.n) {
      if (++u[static_cast<size_t>(i)] <= hi[static_cast<size_t>(i)]) break;
      u[static_cast<size_t>(i)] = lo[static_cast<size_t>(i)];
      ++i;
    }
    if (i == nd.n) break;
  }
  return out;
}

void check_boundary_identity(const NewtonData& nd) {
  HodgeData hd = p_delta(nd);
  Rat lhs(0);
  for (size_t k = 0; k < hd.pcoeffs.size(); ++k) lhs += Rat(Int(k) * hd.pcoeffs[k], Int(nd.D));
  long long s = boundary_through_origin(nd);
  Int fact = 1;
  for (int i = 2; i < nd.n; ++i) fact *= i;  // (n-1)!
  Rat rhs = Rat(Int(nd.n) * hd.nvol, Int(2)) - Rat(fact * s, Int(2));
  CHECK(lhs == rhs);
  if (nd.origin_interior()) CHECK(lhs == Rat(Int(nd.n) * hd.nvol, Int(2)));
}

void check_gauge_and_faces(const NewtonData& nd, std::mt19937_64& rng) {
  // gauge linearity on random cone points
  std::uniform_int_distribution<long long> coord(-6, 6);
  int found = 0;
  for (int tries = 0; tries < 400 && found < 40; ++tries) {
    Pt u(static_cast<size_t>(nd.n));
    for (auto& c : u) c = coord(rng);
    auto d = degree(nd, u);
    if (!d) continue;
    ++found;
    for (long long k = 1; k <= 5; ++k) {
      Pt ku(u);
      for (auto& c : ku) c *= k;
      auto dk = degree(nd, ku);
      REQUIRE(dk.has_value());
      CHECK(*dk == *d * k);
    }
  }
  // deg = 1 exactly on the lattice points of faces not containing 0
  for (const auto& u : lattice_points_of(nd)) {
    bool on_face = false;
    for (const auto& f : nd.faces)
      if (!f.contains_origin && nd.point_on_face(f, u)) on_face = true;
    auto d = degree(nd, u);
    REQUIRE(d.has_value());
    CHECK((*d == 1) == on_face);
  }
}

}  // namespace

TEST_CASE("interval [0,2] from a W_2 support") {
  // single term (level 0, u=1) at p=2, m=2: generator 2^(2-1-0)*1 = 2
  NewtonData nd = poly_from({{2}}, 1);
  CHECK(nd.dim == 1);
  REQUIRE(nd.facets.size() == 2);
  std::set<std::pair<long long, long long>> fs;
  for (const auto& f : nd.facets) fs.insert({f.w[0], f.c});
  CHECK(fs == std::set<std::pair<long long, long long>>{{1, 2}, {-1, 0}});
  CHECK(nd.D == 2);
  CHECK(!nd.d_lcm_override);

  CHECK(*degree(nd, {3}) == make_rat(3, 2));
  CHECK(*degree(nd, {0}) == Rat(0));
  CHECK(!degree(nd, {-1}).has_value());

  CHECK(weight_vector(nd, 4) == std::vector<long long>{1, 1, 1, 1, 1});

  HodgeData hd = p_delta(nd);
  CHECK(hd.pcoeffs == std::vector<Int>{1, 1});
  CHECK(hd.nvol == 2);
  PolygonChain expect;
  expect.v = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), make_rat(1, 2)}};
  CHECK(hd.hodge == expect);
  CHECK(boundary_through_origin(nd) == 1);
}

TEST_CASE("symmetric interval [-1,1]") {
  NewtonData nd = poly_from({{1}, {-1}}, 1);
  CHECK(nd.D == 1);
  CHECK(nd.origin_interior());
  CHECK(weight_vector(nd, 3) == std::vector<long long>{1, 2, 2, 2});
  HodgeData hd = p_delta(nd);
  CHECK(hd.pcoeffs == std::vector<Int>{1, 1});
  CHECK(hd.nvol == 2);
  PolygonChain expect;
  expect.v = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(1)}};
  CHECK(hd.hodge == expect);
  CHECK(boundary_through_origin(nd) == 0);
}

TEST_CASE("standard simplex") {
  NewtonData nd = poly_from({{1, 0}, {0, 1}}, 2);
  CHECK(nd.dim == 2);
  CHECK(nd.D == 1);
  CHECK(*degree(nd, {2, 3}) == Rat(5));
  CHECK(weight_vector(nd, 2) == std::vector<long long>{1, 2, 3});
  HodgeData hd = p_delta(nd);
  CHECK(hd.pcoeffs == std::vector<Int>{1});
  CHECK(hd.nvol == 1);
  PolygonChain expect;
  expect.v = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}};
  CHECK(hd.hodge == expect);
}

TEST_CASE("unit square") {
  NewtonData nd = poly_from({{1, 0}, {0, 1}, {1, 1}}, 2);
  CHECK(volume_normalized(nd) == 2);
  CHECK(boundary_through_origin(nd) == 2);
  HodgeData hd = p_delta(nd);
  CHECK(hd.pcoeffs == std::vector<Int>{1, 1});
  check_boundary_identity(nd);
}

TEST_CASE("degenerate polytopes refuse degree operations") {
  NewtonData nd = poly_from({{1, 1}, {2, 2}}, 2);  // collinear with 0
  CHECK(nd.dim == 1);
  CHECK_THROWS_AS(degree(nd, {1, 1}), Error);
  CHECK_THROWS_AS(volume_normalized(nd), Error);
  CHECK_THROWS_AS(p_delta(nd), Error);
}

TEST_CASE("three-dimensional sanity") {
  SUBCASE("unit cube") {
    std::vector<Pt> pts;
    for (int x = 0; x <= 1; ++x)
      for (int y = 0; y <= 1; ++y)
        for (int z = 0; z <= 1; ++z)
          if (x + y + z) pts.push_back({x, y, z});
    NewtonData nd = poly_from(pts, 3);
    CHECK(nd.dim == 3);
    CHECK(nd.verts.size() == 8);
    CHECK(nd.facets.size() == 6);
    CHECK(volume_normalized(nd) == 6);
    HodgeData hd = p_delta(nd);
    Int sum = 0;
    for (const auto& a : hd.pcoeffs) sum += a;
    CHECK(sum == 6);
  }
  SUBCASE("standard 3-simplex") {
    NewtonData nd = poly_from({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
    CHECK(volume_normalized(nd) == 1);
    CHECK(nd.D == 1);
    // faces: 4 vertices + 6 edges + 4 facets
    CHECK(nd.faces.size() == 14);
  }
  SUBCASE("octahedron with interior origin") {
    std::vector<Pt> pts = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    NewtonData nd = poly_from(pts, 3);
    CHECK(nd.origin_interior());
    CHECK(volume_normalized(nd) == 8);
  }
}

TEST_CASE("slices and the commode test") {
  SUBCASE("interval [0,1]") {
    NewtonData nd = poly_from({{1}}, 1);
    auto res = slice_and_commode(nd, {1});
    CHECK(res.commode);
    REQUIRE(res.slices.size() == 2);
    CHECK(res.slices[0].C.empty());
    CHECK(res.slices[1].C == std::vector<int>{1});
    CHECK(res.slices[1].delta.n == 0);
    CHECK(res.slices[1].delta.dim == 0);
  }
  SUBCASE("unit square, both coordinates") {
    NewtonData nd = poly_from({{1, 0}, {0, 1}, {1, 1}}, 2);
    auto res = slice_and_commode(nd, {1, 2});
    CHECK(res.commode);
    REQUIRE(res.slices.size() == 4);
    // slices {1} and {2} are unit intervals
    CHECK(res.slices[1].delta.n == 1);
    CHECK(volume_normalized(res.slices[1].delta) == 1);
    CHECK(res.slices[3].delta.n == 0);
  }
  SUBCASE("negative support refuses") {
    NewtonData nd = poly_from({{1}, {-1}}, 1);
    CHECK_THROWS_AS(slice_and_commode(nd, {1}), Error);
  }
  SUBCASE("slab without full-dimensional slice is not commode") {
    // conv{0, (1,1), (2,1)}: slice at x2=0 is the origin only
    NewtonData nd = poly_from({{1, 1}, {2, 1}}, 2);
    auto res = slice_and_commode(nd, {2});
    CHECK(!res.commode);
  }
}

TEST_CASE("gauge, face-degree and boundary identity on the named corpus") {
  std::mt19937_64 rng(99123);
  for (auto& nd : {poly_from({{2}}, 1), poly_from({{1}, {-1}}, 1), poly_from({{1, 0}, {0, 1}}, 2),
                   poly_from({{1, 0}, {0, 1}, {1, 1}}, 2)}) {
    check_gauge_and_faces(nd, rng);
    check_boundary_identity(nd);
  }
}

TEST_CASE("random polytope sweep") {
  std::mt19937_64 rng(550107);
  int built = 0;
  std::uniform_int_distribution<long long> coord(-3, 3);
  std::uniform_int_distribution<int> npts(1, 5);
  while (built < 20) {
    int n = 1 + static_cast<int>(rng() % 2);
    std::vector<Pt> pts;
    int count = npts(rng);
    for (int i = 0; i < count; ++i) {
      Pt u(static_cast<size_t>(n));
      for (auto& c : u) c = coord(rng);
      pts.push_back(u);
    }
    NewtonData nd = build_polyhedron(pts, n);
    if (nd.dim != n) continue;
    ++built;
    HodgeData hd = p_delta(nd);  // asserts nonnegativity and the volume identity
    CHECK(!nd.d_lcm_override);   // divisor minimization agrees with the offset lcm
    Int sum = 0;
    for (const auto& a : hd.pcoeffs) sum += a;
    CHECK(sum == hd.nvol);
    check_boundary_identity(nd);
    check_gauge_and_faces(nd, rng);
  }
}
