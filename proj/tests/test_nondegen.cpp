#include <doctest.h>

#include <random>

#include "wittsum/nondegen.hpp"

using namespace wittsum;

namespace {

WittLaurent make_f(long long p, int m, int n, const FieldCtx& F,
                   std::vector<std::vector<std::pair<ExpVec, long long>>> levels) {
  WittLaurent f{p, m, n, std::vector<LaurentPoly>(static_cast<size_t>(m))};
  for (size_t i = 0; i < levels.size(); ++i)
    for (auto& [u, c] : levels[i]) {
      FieldElem fc = F.from_int(c);
      if (!F.is_zero(fc)) f.coords[i].terms.emplace(u, fc);
    }
  return f;
}

int face_of_vertex(const NewtonData& nd, const Pt& v) {
  for (size_t i = 0; i < nd.faces.size(); ++i)
    if (nd.faces[i].dim == 0 && nd.verts[static_cast<size_t>(nd.faces[i].verts[0])] == v)
      return static_cast<int>(i);
  return -1;
}

// exhaustive common-zero search over (F_{q^s}^x)^2 for all faces avoiding 0
bool brute_has_common_zero(const DecomposedWitt& d, const NewtonData& nd, int m, const FieldCtx& F,
                           int smax) {
  for (int s = 1; s <= smax; ++s) {
    FieldCtx big(F.p(), F.deg() * s);
    for (size_t fi = 0; fi < nd.faces.size(); ++fi) {
      if (nd.faces[fi].contains_origin) continue;
      FaceSystem fs = face_system(d, nd, static_cast<int>(fi), m, F);
      std::vector<LaurentPoly> emb;
      for (const auto& poly : fs.polys) {
        LaurentPoly e;
        for (const auto& [u, c] : poly.terms) e.terms.emplace(u, big.embed(F, c));
        emb.push_back(std::move(e));
      }
      std::vector<FieldElem> pt(2);
      for (long long xi = 1; xi < big.size(); ++xi) {
        pt[0] = big.unpack(xi);
        for (long long yi = 1; yi < big.size(); ++yi) {
          pt[1] = big.unpack(yi);
          bool zero = true;
          for (const auto& poly : emb)
            if (!big.is_zero(laurent_eval(poly, pt, big))) {
              zero = false;
              break;
            }
          if (zero) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("face systems: frozen examples") {
  SUBCASE("single term lands on the far vertex") {
    FieldCtx f2(2, 1);
    WittLaurent f = make_f(2, 2, 1, f2, {{{{1}, 1}}, {}});
    auto d = decompose(f, f2);
    auto nd = build_polyhedron(d, 2, 2, 1);
    int fi = face_of_vertex(nd, {2});
    REQUIRE(fi >= 0);
    FaceSystem fs = face_system(d, nd, fi, 2, f2);
    REQUIRE(fs.polys.size() == 1);
    // coefficient u_1 * a^2 = 1 at exponent 2
    CHECK(fs.polys[0].terms.size() == 1);
    CHECK(fs.polys[0].terms.begin()->first == ExpVec{2});
    CHECK(fs.polys[0].terms.begin()->second == f2.one());
  }
  SUBCASE("even exponent kills the coefficient mod 2") {
    FieldCtx f2(2, 1);
    WittLaurent f = make_f(2, 2, 1, f2, {{{{1}, 1}, {{2}, 1}}, {}});
    auto d = decompose(f, f2);
    auto nd = build_polyhedron(d, 2, 2, 1);
    int fi = face_of_vertex(nd, {4});
    REQUIRE(fi >= 0);
    FaceSystem fs = face_system(d, nd, fi, 2, f2);
    CHECK(fs.polys[0].terms.empty());  // u = 2 is 0 mod 2
  }
  SUBCASE("negative exponent reduces mod p") {
    FieldCtx f3(3, 1);
    WittLaurent f = make_f(3, 1, 1, f3, {{{{1}, 1}, {{-1}, 1}}});
    auto d = decompose(f, f3);
    auto nd = build_polyhedron(d, 3, 1, 1);
    int fi = face_of_vertex(nd, {-1});
    REQUIRE(fi >= 0);
    FaceSystem fs = face_system(d, nd, fi, 1, f3);
    REQUIRE(fs.polys[0].terms.size() == 1);
    CHECK(fs.polys[0].terms.begin()->second == f3.from_int(2));  // -1 = 2 mod 3
  }
  SUBCASE("faces through the origin refuse") {
    FieldCtx f2(2, 1);
    WittLaurent f = make_f(2, 2, 1, f2, {{{{1}, 1}}, {}});
    auto d = decompose(f, f2);
    auto nd = build_polyhedron(d, 2, 2, 1);
    int fi = face_of_vertex(nd, {0});
    REQUIRE(fi >= 0);
    CHECK_THROWS_AS(face_system(d, nd, fi, 2, f2), Error);
  }
}

TEST_CASE("non-degeneracy verdicts: frozen examples") {
  SUBCASE("f = (x,0), p=2, m=2 is non-degenerate") {
    FieldCtx f2(2, 1);
    WittLaurent f = make_f(2, 2, 1, f2, {{{{1}, 1}}, {}});
    auto d = decompose(f, f2);
    auto nd = build_polyhedron(d, 2, 2, 1);
    auto v = check_nondegenerate(d, nd, 2, f2);
    CHECK(v.status == NondegenStatus::NonDegenerateExact);
  }
  SUBCASE("f = (x+x^2,0), p=2, m=2 is degenerate at the far vertex") {
    FieldCtx f2(2, 1);
    WittLaurent f = make_f(2, 2, 1, f2, {{{{1}, 1}, {{2}, 1}}, {}});
    auto d = decompose(f, f2);
    auto nd = build_polyhedron(d, 2, 2, 1);
    auto v = check_nondegenerate(d, nd, 2, f2);
    CHECK(v.status == NondegenStatus::Degenerate);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->face_index == face_of_vertex(nd, {4}));
    CHECK(verify_witness(d, nd, 2, f2, *v.witness));
    // the face polynomial is identically zero
    FaceSystem fs = face_system(d, nd, v.witness->face_index, 2, f2);
    CHECK(fs.polys[0].terms.empty());
  }
  SUBCASE("Kloosterman-type f = x + 1/x, p=3 is non-degenerate") {
    FieldCtx f3(3, 1);
    WittLaurent f = make_f(3, 1, 1, f3, {{{{1}, 1}, {{-1}, 1}}});
    auto d = decompose(f, f3);
    auto nd = build_polyhedron(d, 3, 1, 1);
    auto v = check_nondegenerate(d, nd, 1, f3);
    CHECK(v.status == NondegenStatus::NonDegenerateExact);
  }
}

TEST_CASE("n=2 edge faces: exact verdicts with witnesses") {
  SUBCASE("(x+y)^2 over F_3 is degenerate along the edge") {
    FieldCtx f3(3, 1);
    WittLaurent f = make_f(3, 1, 2, f3, {{{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}}});
    auto d = decompose(f, f3);
    auto nd = build_polyhedron(d, 3, 1, 2);
    auto v = check_nondegenerate(d, nd, 1, f3);
    CHECK(v.status == NondegenStatus::Degenerate);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->ext_degree == 1);
    CHECK(verify_witness(d, nd, 1, f3, *v.witness));
    // the witness satisfies x + y = 0
    const auto& w = *v.witness;
    CHECK(w.field->is_zero(w.field->add(w.point[0], w.point[1])));
  }
  SUBCASE("x + y + xy over F_2 is non-degenerate") {
    FieldCtx f2(2, 1);
    WittLaurent f = make_f(2, 1, 2, f2, {{{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}}});
    auto d = decompose(f, f2);
    auto nd = build_polyhedron(d, 2, 1, 2);
    auto v = check_nondegenerate(d, nd, 1, f2);
    CHECK(v.status == NondegenStatus::NonDegenerateExact);
  }
  SUBCASE("witness in a proper extension") {
    // y^2 (2 + x^2 + 2 x^4) over F_3: the top-edge system vanishes exactly
    // where x^2 = -1, which needs F_9
    FieldCtx f3(3, 1);
    WittLaurent f = make_f(3, 1, 2, f3, {{{{0, 2}, 2}, {{2, 2}, 1}, {{4, 2}, 2}}});
    auto d = decompose(f, f3);
    auto nd = build_polyhedron(d, 3, 1, 2);
    auto v = check_nondegenerate(d, nd, 1, f3);
    CHECK(v.status == NondegenStatus::Degenerate);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->ext_degree == 2);
    CHECK(verify_witness(d, nd, 1, f3, *v.witness));
    // the witness x-coordinate squares to -1
    const auto& w = *v.witness;
    FieldElem x2 = w.field->mul(w.point[0], w.point[0]);
    CHECK(w.field->is_zero(w.field->add(x2, w.field->one())));
  }
}

TEST_CASE("exact path agrees with brute force on random n=2 instances") {
  std::mt19937_64 rng(31007);
  int checked = 0;
  while (checked < 40) {
    long long p = rng() % 2 ? 2 : 3;
    FieldCtx F(p, 1);
    int m = 1 + static_cast<int>(rng() % 2);
    std::uniform_int_distribution<int32_t> edist(-2, 2);
    std::uniform_int_distribution<long long> cdist(1, p - 1);
    WittLaurent f{p, m, 2, std::vector<LaurentPoly>(static_cast<size_t>(m))};
    int cnt = 2 + static_cast<int>(rng() % 3);
    for (int t = 0; t < cnt; ++t) {
      ExpVec u = {edist(rng), edist(rng)};
      if (u[0] == 0 && u[1] == 0) continue;
      f.coords[0].terms[u] = F.from_int(cdist(rng));
    }
    if (f.coords[0].terms.empty()) continue;
    auto d = decompose(f, F);
    auto nd = build_polyhedron(d, p, m, 2);
    if (nd.dim != 2) continue;
    ++checked;
    auto v = check_nondegenerate(d, nd, m, F);
    bool brute = brute_has_common_zero(d, nd, m, F, p == 2 ? 4 : 3);
    if (v.status == NondegenStatus::NonDegenerateExact) {
      CHECK(!brute);
    } else if (v.witness && v.witness->ext_degree <= (p == 2 ? 4 : 3)) {
      CHECK(brute);
    }
  }
}

TEST_CASE("Galois stability: conjugating the coefficients keeps the verdict") {
  std::mt19937_64 rng(90210);
  FieldCtx f4(2, 2);
  int checked = 0;
  while (checked < 25) {
    std::uniform_int_distribution<int32_t> edist(-2, 2);
    std::uniform_int_distribution<long long> cdist(1, 3);
    WittLaurent f{2, 2, 1, std::vector<LaurentPoly>(2)};
    int cnt = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < cnt; ++t) {
      ExpVec u = {edist(rng)};
      if (u[0] == 0) continue;
      f.coords[0].terms[u] = f4.unpack(cdist(rng));
    }
    if (f.coords[0].terms.empty()) continue;
    ++checked;
    WittLaurent g = f;
    for (auto& coord : g.coords)
      for (auto& [u, c] : coord.terms) c = f4.pow(c, 2);
    auto df = decompose(f, f4);
    auto dg = decompose(g, f4);
    auto ndf = build_polyhedron(df, 2, 2, 1);
    auto ndg = build_polyhedron(dg, 2, 2, 1);
    REQUIRE(ndf.dim == ndg.dim);
    if (ndf.dim != 1) continue;
    auto vf = check_nondegenerate(df, ndf, 2, f4);
    auto vg = check_nondegenerate(dg, ndg, 2, f4);
    CHECK(vf.status == vg.status);
  }
}

TEST_CASE("n=3 degenerate vertex found by the bounded search") {
  // x + y + z + x^2 y^2 z^2: the far vertex (2,2,2) has every exponent even,
  // so its face system vanishes identically
  FieldCtx f2(2, 1);
  WittLaurent f = make_f(2, 1, 3, f2,
                         {{{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}, {{2, 2, 2}, 1}}});
  auto d = decompose(f, f2);
  auto nd = build_polyhedron(d, 2, 1, 3);
  REQUIRE(nd.dim == 3);
  auto v = check_nondegenerate(d, nd, 1, f2, 2);
  CHECK(v.status == NondegenStatus::Degenerate);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->ext_degree == 1);
  CHECK(verify_witness(d, nd, 1, f2, *v.witness));
  const PFace& face = nd.faces[static_cast<size_t>(v.witness->face_index)];
  CHECK(face.dim == 0);
  CHECK(nd.verts[static_cast<size_t>(face.verts[0])] == Pt{2, 2, 2});
  // boundary volumes stay out of reach in three dimensions
  CHECK_THROWS_AS(boundary_through_origin(nd), Error);
}

TEST_CASE("n=3 heuristic path") {
  FieldCtx f2(2, 1);
  // x + y + z: simplex, all faces carry unit monomial systems
  WittLaurent f = make_f(2, 1, 3, f2, {{{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}}});
  auto d = decompose(f, f2);
  auto nd = build_polyhedron(d, 2, 1, 3);
  auto v = check_nondegenerate(d, nd, 1, f2, 2);
  CHECK(v.status == NondegenStatus::NonDegenerateHeuristic);
  CHECK(v.smax == 2);

  // x + y + z + xyz-style degeneracy: (x+y)^2 z^0 pattern lifted to 3 vars
  WittLaurent g = make_f(2, 1, 3, f2,
                         {{{{2, 0, 1}, 1}, {{1, 1, 1}, 1}, {{0, 2, 1}, 1}, {{0, 0, 1}, 1}}});
  auto dg = decompose(g, f2);
  auto ndg = build_polyhedron(dg, 2, 1, 3);
  if (ndg.dim == 3) {
    auto vg = check_nondegenerate(dg, ndg, 1, f2, 2);
    if (vg.status == NondegenStatus::Degenerate) {
      REQUIRE(vg.witness.has_value());
      CHECK(verify_witness(dg, ndg, 1, f2, *vg.witness));
    }
  }
}
