#include "wittsum/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>

namespace wittsum {

namespace {

long long dot(const std::vector<long long>& w, const Pt& u) {
  long long s = 0;
  for (size_t i = 0; i < w.size(); ++i) s += w[i] * u[i];
  return s;
}

void make_primitive(std::vector<long long>& w, long long& c) {
  long long g = 0;
  for (long long v : w) g = ll_gcd(g, v);
  g = ll_gcd(g, c);
  if (g > 1) {
    for (auto& v : w) v /= g;
    c /= g;
  }
}

int matrix_rank(std::vector<Pt> rows) {
  if (rows.empty()) return 0;
  size_t cols = rows[0].size();
  int rank = 0;
  size_t rr = 0;
  for (size_t c = 0; c < cols && rr < rows.size(); ++c) {
    size_t piv = rr;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rr], rows[piv]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rr || rows[r][c] == 0) continue;
      long long a = rows[r][c], b = rows[rr][c];
      long long g = ll_gcd(a, b);
      long long fa = b / g, fb = a / g;
      for (size_t k = 0; k < cols; ++k) rows[r][k] = rows[r][k] * fa - rows[rr][k] * fb;
    }
    ++rr;
    ++rank;
  }
  return rank;
}

long long cross2(const Pt& o, const Pt& a, const Pt& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// counterclockwise hull, strict vertices only
std::vector<Pt> hull2(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Pt> h(2 * pts.size());
  size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross2(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && cross2(h[k - 2], h[k - 1], *it) <= 0) --k;
    h[k++] = *it;
  }
  h.resize(k - 1);
  return h;
}

Pt cross3(const Pt& a, const Pt& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

struct DegFrac {
  long long num = 0, den = 1;  // clipped at 0, reduced
};

bool frac_less(long long n1, long long d1, long long n2, long long d2) {
  return static_cast<__int128>(n1) * d2 < static_cast<__int128>(n2) * d1;
}

// nullopt = outside the cone
std::optional<DegFrac> degree_frac(const NewtonData& nd, const Pt& u) {
  DegFrac best;
  for (const auto& f : nd.facets) {
    long long s = dot(f.w, u);
    if (f.c == 0) {
      if (s > 0) return std::nullopt;
      continue;
    }
    if (s > 0 && frac_less(best.num, best.den, s, f.c)) best = DegFrac{s, f.c};
  }
  long long g = ll_gcd(best.num, best.den);
  if (g > 1) {
    best.num /= g;
    best.den /= g;
  }
  return best;
}

void build_faces(NewtonData& nd) {
  const int n = nd.n;
  auto active_facets = [&](const Pt& v) {
    std::vector<int> act;
    for (size_t i = 0; i < nd.facets.size(); ++i)
      if (dot(nd.facets[i].w, v) == nd.facets[i].c) act.push_back(static_cast<int>(i));
    return act;
  };
  auto origin_face = [&](const std::vector<int>& facet_ids) {
    for (int fi : facet_ids)
      if (nd.facets[static_cast<size_t>(fi)].c != 0) return false;
    return true;
  };

  // dim-0 faces
  for (size_t vi = 0; vi < nd.verts.size(); ++vi) {
    PFace f;
    f.dim = 0;
    f.verts = {static_cast<int>(vi)};
    f.facets = active_facets(nd.verts[vi]);
    bool at_origin = std::all_of(nd.verts[vi].begin(), nd.verts[vi].end(),
                                 [](long long c) { return c == 0; });
    f.contains_origin = at_origin;
    nd.faces.push_back(std::move(f));
  }
  if (n == 1) return;

  if (n == 2) {
    // edges are the facets; both incident hull vertices lie on each
    for (size_t fi = 0; fi < nd.facets.size(); ++fi) {
      PFace f;
      f.dim = 1;
      for (size_t vi = 0; vi < nd.verts.size(); ++vi)
        if (dot(nd.facets[fi].w, nd.verts[vi]) == nd.facets[fi].c)
          f.verts.push_back(static_cast<int>(vi));
      f.facets = {static_cast<int>(fi)};
      f.contains_origin = origin_face(f.facets);
      nd.faces.push_back(std::move(f));
    }
    return;
  }

  // n == 3: edges from adjacent facet pairs, then the facets themselves
  std::set<std::vector<int>> edge_seen;
  for (size_t f1 = 0; f1 < nd.facets.size(); ++f1) {
    for (size_t f2 = f1 + 1; f2 < nd.facets.size(); ++f2) {
      std::vector<int> common;
      for (size_t vi = 0; vi < nd.verts.size(); ++vi)
        if (dot(nd.facets[f1].w, nd.verts[vi]) == nd.facets[f1].c &&
            dot(nd.facets[f2].w, nd.verts[vi]) == nd.facets[f2].c)
          common.push_back(static_cast<int>(vi));
      if (common.size() != 2) continue;
      if (!edge_seen.insert(common).second) continue;
      PFace f;
      f.dim = 1;
      f.verts = common;
      for (size_t fi = 0; fi < nd.facets.size(); ++fi) {
        bool all = true;
        for (int vi : common)
          if (dot(nd.facets[fi].w, nd.verts[static_cast<size_t>(vi)]) != nd.facets[fi].c) {
            all = false;
            break;
          }
        if (all) f.facets.push_back(static_cast<int>(fi));
      }
      f.contains_origin = origin_face(f.facets);
      nd.faces.push_back(std::move(f));
    }
  }
  for (size_t fi = 0; fi < nd.facets.size(); ++fi) {
    PFace f;
    f.dim = 2;
    for (size_t vi = 0; vi < nd.verts.size(); ++vi)
      if (dot(nd.facets[fi].w, nd.verts[vi]) == nd.facets[fi].c)
        f.verts.push_back(static_cast<int>(vi));
    f.facets = {static_cast<int>(fi)};
    f.contains_origin = origin_face(f.facets);
    nd.faces.push_back(std::move(f));
  }
}

// smallest D' | L with den | D' for every den in dens, else L
long long minimize_d(long long L, const std::vector<long long>& dens) {
  for (long long d : divisors_of(L)) {
    bool ok = true;
    for (long long den : dens)
      if (d % den != 0) {
        ok = false;
        break;
      }
    if (ok) return d;
  }
  return L;
}

struct Box {
  std::vector<long long> lo, hi;
  long long count = 1;
};

// bounding box of scale*Delta (scale = num/den), clipped to lattice points
Box scaled_box(const NewtonData& nd, long long num, long long den, const Limits& lim) {
  Box b;
  b.lo.assign(static_cast<size_t>(nd.n), 0);
  b.hi.assign(static_cast<size_t>(nd.n), 0);
  for (int i = 0; i < nd.n; ++i) {
    long long mn = 0, mx = 0;
    for (const auto& v : nd.verts) {
      mn = std::min(mn, v[static_cast<size_t>(i)]);
      mx = std::max(mx, v[static_cast<size_t>(i)]);
    }
    // ceil(mn*num/den), floor(mx*num/den)
    long long a = mn * num, c = mx * num;
    b.lo[static_cast<size_t>(i)] = a >= 0 ? (a + den - 1) / den : -((-a) / den);
    b.hi[static_cast<size_t>(i)] = c >= 0 ? c / den : -(((-c) + den - 1) / den);
    long long w = b.hi[static_cast<size_t>(i)] - b.lo[static_cast<size_t>(i)] + 1;
    if (w <= 0) w = 1;
    if (b.count > lim.enum_point_cap / w)
      fail(Err::EnumerationBudgetExceeded,
           "lattice box exceeds enumeration cap of " + std::to_string(lim.enum_point_cap));
    b.count *= w;
  }
  return b;
}

template <class F>
void for_box(const Box& b, int n, F&& fn) {
  Pt u = b.lo;
  if (n == 0) {
    fn(u);
    return;
  }
  for (;;) {
    fn(u);
    int i = 0;
    while (i < n) {
      if (++u[static_cast<size_t>(i)] <= b.hi[static_cast<size_t>(i)]) break;
      u[static_cast<size_t>(i)] = b.lo[static_cast<size_t>(i)];
      ++i;
    }
    if (i == n) break;
  }
}

}  // namespace

bool NewtonData::origin_interior() const {
  if (dim != n) return false;
  for (const auto& f : facets)
    if (f.c == 0) return false;
  return true;
}

bool NewtonData::point_on_face(const PFace& f, const Pt& u) const {
  for (int fi : f.facets)
    if (dot(facets[static_cast<size_t>(fi)].w, u) != facets[static_cast<size_t>(fi)].c)
      return false;
  // the point is assumed to lie in the polytope; equality on every defining
  // facet then places it on the face
  return true;
}

std::vector<Pt> weighted_support(const DecomposedWitt& d, long long p, int m, int n) {
  std::vector<Pt> pts;
  for (const auto& t : d.terms) {
    long long scale = ll_pow(p, static_cast<unsigned>(m - 1 - t.level));
    Pt q(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) q[static_cast<size_t>(i)] = scale * t.u[static_cast<size_t>(i)];
    pts.push_back(std::move(q));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

NewtonData build_polyhedron(const DecomposedWitt& d, long long p, int m, int n, const Limits& lim) {
  if (d.terms.empty()) fail(Err::Internal, "empty decomposition");
  return build_polyhedron(weighted_support(d, p, m, n), n, lim);
}

NewtonData build_polyhedron(std::vector<Pt> pts, int n, const Limits& lim) {
  if (n > lim.dim_cap)
    fail(Err::UnsupportedDimension,
         "dimension " + std::to_string(n) + " exceeds cap " + std::to_string(lim.dim_cap));
  NewtonData nd;
  nd.n = n;
  pts.push_back(Pt(static_cast<size_t>(n), 0));  // the origin is always a generator
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  nd.gens = pts;
  nd.dim = matrix_rank(pts);

  if (n == 0) {
    nd.D = 1;
    nd.verts = {Pt{}};
    return nd;
  }
  if (nd.dim < n) return nd;  // degenerate: representable, downstream ops refuse

  if (n == 1) {
    long long mn = 0, mx = 0;
    for (const auto& q : pts) {
      mn = std::min(mn, q[0]);
      mx = std::max(mx, q[0]);
    }
    if (mn < mx) {
      nd.verts = {Pt{mn}, Pt{mx}};
      nd.facets.push_back(Facet{{1}, mx});
      nd.facets.push_back(Facet{{-1}, -mn});
    }
  } else if (n == 2) {
    std::vector<Pt> h = hull2(pts);
    nd.verts = h;
    for (size_t i = 0; i < h.size(); ++i) {
      const Pt& a = h[i];
      const Pt& b = h[(i + 1) % h.size()];
      // ccw boundary: outward normal is the direction rotated clockwise
      std::vector<long long> w = {b[1] - a[1], a[0] - b[0]};
      long long c = w[0] * a[0] + w[1] * a[1];
      make_primitive(w, c);
      nd.facets.push_back(Facet{std::move(w), c});
    }
  } else {
    if (static_cast<int>(pts.size()) > lim.hull_point_cap)
      fail(Err::EnumerationBudgetExceeded, "too many generator points for a 3-d hull");
    // enumerate supporting planes through point triples
    std::set<std::pair<std::vector<long long>, long long>> seen;
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j)
        for (size_t k = j + 1; k < pts.size(); ++k) {
          Pt ab(3), ac(3);
          for (int t = 0; t < 3; ++t) {
            ab[static_cast<size_t>(t)] = pts[j][static_cast<size_t>(t)] - pts[i][static_cast<size_t>(t)];
            ac[static_cast<size_t>(t)] = pts[k][static_cast<size_t>(t)] - pts[i][static_cast<size_t>(t)];
          }
          Pt nn = cross3(ab, ac);
          if (nn[0] == 0 && nn[1] == 0 && nn[2] == 0) continue;
          std::vector<long long> w(nn.begin(), nn.end());
          long long c = dot(w, pts[i]);
          bool below = true, above = true;
          for (const auto& q : pts) {
            long long s = dot(w, q);
            if (s > c) below = false;
            if (s < c) above = false;
          }
          if (!below && !above) continue;
          if (above) {
            for (auto& v : w) v = -v;
            c = -c;
          }
          make_primitive(w, c);
          if (seen.insert({w, c}).second) nd.facets.push_back(Facet{w, c});
        }
    // hull vertices: active facet normals span R^3
    for (const auto& q : pts) {
      std::vector<Pt> act;
      for (const auto& f : nd.facets)
        if (dot(f.w, q) == f.c) act.push_back(Pt(f.w.begin(), f.w.end()));
      if (static_cast<int>(act.size()) >= 3 && matrix_rank(act) == 3) nd.verts.push_back(q);
    }
    std::sort(nd.verts.begin(), nd.verts.end());
  }

  build_faces(nd);

  // degree grid: lcm of nonzero facet offsets, minimized against the
  // denominators realized by the lattice points of Delta itself, with an
  // integrality check over the full weight box as a backstop
  long long L = 1;
  for (const auto& f : nd.facets)
    if (f.c > 0) L = ll_lcm(L, f.c);
  std::vector<long long> dens_deg1, dens_all;
  Box b1 = scaled_box(nd, 1, 1, lim);
  for_box(b1, n, [&](const Pt& u) {
    auto d = degree_frac(nd, u);
    if (!d) return;
    if (!frac_less(1, 1, d->num, d->den)) dens_deg1.push_back(d->den);
  });
  nd.D = minimize_d(L, dens_deg1);
  if (nd.D != L) {
    Box bful = scaled_box(nd, n + 1, 1, lim);
    bool ok = true;
    for_box(bful, n, [&](const Pt& u) {
      if (!ok) return;
      auto d = degree_frac(nd, u);
      if (!d) return;
      if (!frac_less(n + 1, 1, d->num, d->den) && nd.D % d->den != 0) ok = false;
    });
    if (!ok) {
      nd.D = L;
      nd.d_lcm_override = true;
    }
  }
  return nd;
}

std::optional<Rat> degree(const NewtonData& nd, const Pt& u) {
  if (!nd.full_dim())
    fail(Err::DimensionDeficient, "degree function needs a full-dimensional polytope");
  if (nd.n == 0) return Rat(0);
  auto d = degree_frac(nd, u);
  if (!d) return std::nullopt;
  return make_rat(d->num, d->den);
}

std::vector<long long> weight_vector(const NewtonData& nd, long long kmax, const Limits& lim) {
  if (!nd.full_dim())
    fail(Err::DimensionDeficient, "weights need a full-dimensional polytope");
  std::vector<long long> W(static_cast<size_t>(kmax) + 1, 0);
  if (nd.n == 0) {
    W[0] = 1;
    return W;
  }
  Box b = scaled_box(nd, kmax, nd.D, lim);
  for_box(b, nd.n, [&](const Pt& u) {
    auto d = degree_frac(nd, u);
    if (!d) return;
    if (nd.D % d->den != 0)
      fail(Err::IdentityViolation, "lattice point degree escaped the 1/D grid");
    long long k = d->num * (nd.D / d->den);
    if (k <= kmax) ++W[static_cast<size_t>(k)];
  });
  return W;
}

Int volume_normalized(const NewtonData& nd) {
  if (!nd.full_dim())
    fail(Err::DimensionDeficient, "volume needs a full-dimensional polytope");
  if (nd.n == 0) return 1;
  Int vol = 0;
  if (nd.n == 1) {
    for (const auto& f : nd.facets)
      if (f.c > 0) vol += f.c;  // facet {v}: |v| = c for primitive w
    return vol;
  }
  if (nd.n == 2) {
    for (const auto& face : nd.faces) {
      if (face.dim != 1) continue;
      const Facet& f = nd.facets[static_cast<size_t>(face.facets[0])];
      if (f.c == 0) continue;
      const Pt& a = nd.verts[static_cast<size_t>(face.verts[0])];
      const Pt& b = nd.verts[static_cast<size_t>(face.verts[1])];
      long long det = a[0] * b[1] - a[1] * b[0];
      vol += det < 0 ? -det : det;
    }
    return vol;
  }
  // n == 3: fan each facet polygon and cone to the origin
  for (const auto& face : nd.faces) {
    if (face.dim != 2) continue;
    const Facet& f = nd.facets[static_cast<size_t>(face.facets[0])];
    if (f.c == 0) continue;
    std::vector<Pt> poly;
    for (int vi : face.verts) poly.push_back(nd.verts[static_cast<size_t>(vi)]);
    // order the polygon vertices angularly about their centroid
    long double cx = 0, cy = 0, cz = 0;
    for (const auto& q : poly) {
      cx += q[0];
      cy += q[1];
      cz += q[2];
    }
    cx /= poly.size();
    cy /= poly.size();
    cz /= poly.size();
    // project out the dominant normal axis
    int drop = 0;
    for (int i = 1; i < 3; ++i)
      if (std::llabs(f.w[static_cast<size_t>(i)]) > std::llabs(f.w[static_cast<size_t>(drop)])) drop = i;
    int ax = (drop + 1) % 3, ay = (drop + 2) % 3;
    long double ctr[3] = {cx, cy, cz};
    std::sort(poly.begin(), poly.end(), [&](const Pt& A, const Pt& B) {
      long double a1 = std::atan2(static_cast<long double>(A[static_cast<size_t>(ay)]) - ctr[ay],
                                  static_cast<long double>(A[static_cast<size_t>(ax)]) - ctr[ax]);
      long double b1 = std::atan2(static_cast<long double>(B[static_cast<size_t>(ay)]) - ctr[ay],
                                  static_cast<long double>(B[static_cast<size_t>(ax)]) - ctr[ax]);
      return a1 < b1;
    });
    for (size_t i = 1; i + 1 < poly.size(); ++i) {
      const Pt& a = poly[0];
      const Pt& b = poly[i];
      const Pt& c = poly[i + 1];
      Int det = Int(a[0]) * (Int(b[1]) * c[2] - Int(b[2]) * c[1]) -
                Int(a[1]) * (Int(b[0]) * c[2] - Int(b[2]) * c[0]) +
                Int(a[2]) * (Int(b[0]) * c[1] - Int(b[1]) * c[0]);
      vol += det < 0 ? -det : det;
    }
  }
  return vol;
}

HodgeData p_delta(const NewtonData& nd, const Limits& lim) {
  if (!nd.full_dim())
    fail(Err::DimensionDeficient, "P_Delta needs a full-dimensional polytope");
  HodgeData hd;
  const long long D = nd.D;
  const int n = nd.n;
  long long kmax = D * (n + 1);
  hd.weights = weight_vector(nd, kmax, lim);
  hd.pcoeffs.assign(static_cast<size_t>(n) * static_cast<size_t>(D) + 1, Int(0));
  for (long long k = 0; k <= kmax; ++k) {
    Int a = 0;
    for (int j = 0; j <= n && k - j * D >= 0; ++j) {
      Int term = binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)) *
                 hd.weights[static_cast<size_t>(k - j * D)];
      a += (j % 2 == 0) ? term : -term;
    }
    if (k <= static_cast<long long>(n) * D) {
      hd.pcoeffs[static_cast<size_t>(k)] = a;
      if (a < 0) fail(Err::IdentityViolation, "negative P_Delta coefficient at k=" + std::to_string(k));
    } else if (a != 0) {
      fail(Err::IdentityViolation, "P_Delta coefficient beyond degree nD at k=" + std::to_string(k));
    }
  }
  while (hd.pcoeffs.size() > 1 && hd.pcoeffs.back() == 0) hd.pcoeffs.pop_back();
  hd.nvol = volume_normalized(nd);
  Int total = 0;
  for (const auto& a : hd.pcoeffs) total += a;
  if (total != hd.nvol)
    fail(Err::IdentityViolation, "sum of P_Delta coefficients " + total.str() +
                                     " differs from n!Vol = " + hd.nvol.str());
  hd.hodge = hodge_polygon(hd.pcoeffs, D);
  return hd;
}

long long boundary_through_origin(const NewtonData& nd) {
  if (!nd.full_dim())
    fail(Err::DimensionDeficient, "boundary volume needs a full-dimensional polytope");
  if (nd.n > 2) fail(Err::UnsupportedDimension, "boundary volume implemented for n <= 2");
  if (nd.n == 0) return 0;
  if (nd.n == 1) {
    long long cnt = 0;
    for (const auto& f : nd.facets)
      if (f.c == 0) ++cnt;
    return cnt;
  }
  long long total = 0;
  for (const auto& face : nd.faces) {
    if (face.dim != 1 || !face.contains_origin) continue;
    const Pt& a = nd.verts[static_cast<size_t>(face.verts[0])];
    const Pt& b = nd.verts[static_cast<size_t>(face.verts[1])];
    total += ll_gcd(b[0] - a[0], b[1] - a[1]);
  }
  return total;
}

CommodeResult slice_and_commode(const NewtonData& nd, const std::vector<int>& J,
                                const Limits& lim) {
  for (const auto& g : nd.gens)
    for (int j : J)
      if (g[static_cast<size_t>(j - 1)] < 0)
        fail(Err::NegativeExponentInJ,
             "support has a negative exponent on coordinate " + std::to_string(j));
  std::vector<int> Js = J;
  std::sort(Js.begin(), Js.end());
  Js.erase(std::unique(Js.begin(), Js.end()), Js.end());

  CommodeResult out;
  out.commode = true;
  const int jn = static_cast<int>(Js.size());
  // subsets ordered by size then lexicographically
  std::vector<std::vector<int>> subsets;
  for (int size = 0; size <= jn; ++size) {
    std::vector<int> idx(static_cast<size_t>(size));
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      std::vector<int> C;
      for (int i : idx) C.push_back(Js[static_cast<size_t>(i)]);
      subsets.push_back(C);
      int i = size - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] == jn - size + i) --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (int k = i + 1; k < size; ++k) idx[static_cast<size_t>(k)] = idx[static_cast<size_t>(k - 1)] + 1;
    }
    if (size == 0 && jn == 0) break;
  }

  for (const auto& C : subsets) {
    std::vector<bool> pinned(static_cast<size_t>(nd.n) + 1, false);
    for (int j : C) pinned[static_cast<size_t>(j)] = true;
    std::vector<Pt> pts;
    for (const auto& g : nd.gens) {
      bool keep = true;
      for (int j : C)
        if (g[static_cast<size_t>(j - 1)] != 0) {
          keep = false;
          break;
        }
      if (!keep) continue;
      Pt q;
      for (int i = 1; i <= nd.n; ++i)
        if (!pinned[static_cast<size_t>(i)]) q.push_back(g[static_cast<size_t>(i - 1)]);
      pts.push_back(std::move(q));
    }
    SliceResult sr;
    sr.C = C;
    sr.delta = build_polyhedron(std::move(pts), nd.n - static_cast<int>(C.size()), lim);
    if (sr.delta.dim != sr.delta.n) out.commode = false;
    out.slices.push_back(std::move(sr));
  }
  return out;
}

}  // namespace wittsum
