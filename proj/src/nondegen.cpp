#include "wittsum/nondegen.hpp"

#include <algorithm>

namespace wittsum {

namespace {

// univariate polynomials over F_q, ascending coefficients, no leading zeros
using UniPoly = std::vector<FieldElem>;

void uni_trim(UniPoly& f, const FieldCtx& F) {
  while (!f.empty() && F.is_zero(f.back())) f.pop_back();
}

UniPoly uni_mod(UniPoly a, const UniPoly& b, const FieldCtx& F) {
  uni_trim(a, F);
  FieldElem lead_inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    FieldElem f = F.mul(a.back(), lead_inv);
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] = F.sub(a[off + i], F.mul(f, b[i]));
    uni_trim(a, F);
    if (a.empty()) break;
  }
  return a;
}

UniPoly uni_gcd(UniPoly a, UniPoly b, const FieldCtx& F) {
  uni_trim(a, F);
  uni_trim(b, F);
  while (!b.empty()) {
    UniPoly r = uni_mod(a, b, F);
    a = b;
    b = r;
  }
  if (!a.empty()) {
    FieldElem li = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, li);
  }
  return a;
}

UniPoly uni_mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& mod, const FieldCtx& F) {
  UniPoly prod(a.size() + b.size() - 1, F.zero());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
  return uni_mod(std::move(prod), mod, F);
}

// y^(q^s) mod f, iterated from y
UniPoly uni_frob_pow(const UniPoly& f, long long q, int s, const FieldCtx& F) {
  UniPoly y = {F.zero(), F.one()};
  UniPoly h = uni_mod(y, f, F);
  for (int it = 0; it < s; ++it) {
    UniPoly r = uni_mod({F.one()}, f, F);
    UniPoly base = h;
    long long e = q;
    while (e > 0) {
      if (e & 1) r = uni_mulmod(r, base, f, F);
      base = uni_mulmod(base, base, f, F);
      e >>= 1;
    }
    h = r;
  }
  return h;
}

FieldElem uni_eval(const UniPoly& f, const FieldElem& x, const FieldCtx& F) {
  FieldElem acc = F.zero();
  for (size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

FieldElem elem_pow_signed(const FieldCtx& F, const FieldElem& r, long long e) {
  if (e >= 0) return F.pow(r, e);
  return F.pow(F.inv(r), -e);
}

struct EdgeFrame {
  Pt base;            // lattice base point of the edge (an endpoint)
  Pt dir;             // primitive direction
  long long m11, m12; // first row of the unimodular M with M*dir = (1,0)
};

EdgeFrame edge_frame(const NewtonData& nd, const PFace& face) {
  const Pt& A = nd.verts[static_cast<size_t>(face.verts[0])];
  const Pt& B = nd.verts[static_cast<size_t>(face.verts[1])];
  Pt dir = {B[0] - A[0], B[1] - A[1]};
  long long g = ll_gcd(dir[0], dir[1]);
  dir[0] /= g;
  dir[1] /= g;
  long long e1 = dir[0], e2 = dir[1];
  long long s = 1, t = 0, s2 = 0, t2 = 1, a = e1, b = e2;
  while (b != 0) {
    long long qt = a / b;
    std::tie(a, b) = std::make_pair(b, a - qt * b);
    std::tie(s, s2) = std::make_pair(s2, s - qt * s2);
    std::tie(t, t2) = std::make_pair(t2, t - qt * t2);
  }
  if (a < 0) {
    s = -s;
    t = -t;
  }
  return EdgeFrame{A, dir, s, t};
}

long long edge_coord(const EdgeFrame& ef, const Pt& v) {
  if (ef.dir[0] != 0) return (v[0] - ef.base[0]) / ef.dir[0];
  return (v[1] - ef.base[1]) / ef.dir[1];
}

long long ext_field_size(const FieldCtx& F, int s, const Limits& lim) {
  long long size = 1;
  for (int i = 0; i < F.deg() * s; ++i) {
    size *= F.p();
    if (size > lim.field_size_cap) return -1;
  }
  return size;
}

}  // namespace

FaceSystem face_system(const DecomposedWitt& d, const NewtonData& nd, int face_index, int m,
                       const FieldCtx& F) {
  const PFace& face = nd.faces[static_cast<size_t>(face_index)];
  if (face.contains_origin) fail(Err::FaceContainsOrigin, "face systems need a face avoiding 0");
  FaceSystem fs;
  fs.face_index = face_index;
  fs.polys.assign(static_cast<size_t>(nd.n), LaurentPoly{});
  const long long p = F.p();
  for (const auto& t : d.terms) {
    long long scale = ll_pow(p, static_cast<unsigned>(m - 1 - t.level));
    Pt v(static_cast<size_t>(nd.n));
    for (int i = 0; i < nd.n; ++i) v[static_cast<size_t>(i)] = scale * t.u[static_cast<size_t>(i)];
    if (!nd.point_on_face(face, v)) continue;
    FieldElem apow = F.pow(t.a, scale);
    ExpVec ev(v.begin(), v.end());
    for (int j = 0; j < nd.n; ++j) {
      long long uj = ((t.u[static_cast<size_t>(j)] % p) + p) % p;
      if (uj == 0) continue;
      FieldElem contrib = F.mul(F.from_int(uj), apow);
      auto& poly = fs.polys[static_cast<size_t>(j)];
      auto it = poly.terms.find(ev);
      if (it == poly.terms.end()) {
        poly.terms.emplace(ev, contrib);
      } else {
        it->second = F.add(it->second, contrib);
        if (F.is_zero(it->second)) poly.terms.erase(it);
      }
    }
  }
  return fs;
}

bool verify_witness(const DecomposedWitt& d, const NewtonData& nd, int m, const FieldCtx& F,
                    const DegenWitness& w) {
  FaceSystem fs = face_system(d, nd, w.face_index, m, F);
  const FieldCtx& big = *w.field;
  for (const auto& x : w.point)
    if (big.is_zero(x)) return false;
  for (const auto& poly : fs.polys) {
    LaurentPoly emb;
    for (const auto& [u, c] : poly.terms) emb.terms.emplace(u, big.embed(F, c));
    if (!big.is_zero(laurent_eval(emb, w.point, big))) return false;
  }
  return true;
}

NondegenVerdict check_nondegenerate(const DecomposedWitt& d, const NewtonData& nd, int m,
                                    const FieldCtx& F, int s_max, const Limits& lim) {
  if (!nd.full_dim())
    fail(Err::DimensionDeficient, "non-degeneracy is defined for full-dimensional polyhedra");
  if (nd.n > 3) fail(Err::UnsupportedDimension, "non-degeneracy implemented for n <= 3");
  const long long q = F.size();

  auto degenerate_at = [&](int face_index, std::shared_ptr<FieldCtx> field, int s,
                           std::vector<FieldElem> pt) {
    NondegenVerdict v;
    v.status = NondegenStatus::Degenerate;
    v.witness = DegenWitness{face_index, s, std::move(field), std::move(pt)};
    if (!verify_witness(d, nd, m, F, *v.witness))
      fail(Err::Internal, "degeneracy witness failed re-verification");
    return v;
  };

  if (nd.n <= 2) {
    for (size_t fi = 0; fi < nd.faces.size(); ++fi) {
      const PFace& face = nd.faces[fi];
      if (face.contains_origin) continue;
      FaceSystem fs = face_system(d, nd, static_cast<int>(fi), m, F);
      if (face.dim == 0) {
        // monomial system: a common torus zero exists iff every coefficient
        // vanished
        bool all_zero = true;
        for (const auto& poly : fs.polys)
          if (!poly.terms.empty()) all_zero = false;
        if (all_zero) {
          auto field = std::make_shared<FieldCtx>(F.p(), F.deg(), F.modulus(), lim);
          return degenerate_at(static_cast<int>(fi), field, 1,
                               std::vector<FieldElem>(static_cast<size_t>(nd.n), F.one()));
        }
        continue;
      }
      // n = 2 edge: align it with the first axis by a unimodular substitution;
      // each poly becomes a unit monomial times a univariate in y
      EdgeFrame ef = edge_frame(nd, face);
      std::vector<UniPoly> gs;
      bool all_zero = true;
      for (const auto& poly : fs.polys) {
        UniPoly g;
        for (const auto& [u, c] : poly.terms) {
          Pt v = {u[0], u[1]};
          long long k = edge_coord(ef, v);
          if (k < 0) fail(Err::Internal, "edge coordinate below the base point");
          if (static_cast<size_t>(k) >= g.size()) g.resize(static_cast<size_t>(k) + 1, F.zero());
          g[static_cast<size_t>(k)] = c;
        }
        uni_trim(g, F);
        if (!g.empty()) all_zero = false;
        gs.push_back(std::move(g));
      }
      if (all_zero) {
        auto field = std::make_shared<FieldCtx>(F.p(), F.deg(), F.modulus(), lim);
        return degenerate_at(static_cast<int>(fi), field, 1, std::vector<FieldElem>(2, F.one()));
      }
      UniPoly g;
      for (const auto& gj : gs) {
        if (gj.empty()) continue;
        g = g.empty() ? gj : uni_gcd(g, gj, F);
      }
      size_t ord = 0;  // roots at y = 0 are outside the torus
      while (ord < g.size() && F.is_zero(g[ord])) ++ord;
      g.erase(g.begin(), g.begin() + static_cast<long>(ord));
      uni_trim(g, F);
      if (g.size() <= 1) continue;
      int s = 0;
      UniPoly factor;
      for (int si = 1; si <= static_cast<int>(g.size()) - 1; ++si) {
        UniPoly h = uni_frob_pow(g, q, si, F);
        UniPoly hy = h;
        if (hy.size() < 2) hy.resize(2, F.zero());
        hy[1] = F.sub(hy[1], F.one());
        UniPoly gc = uni_gcd(g, hy, F);
        if (gc.size() > 1) {
          s = si;
          factor = gc;
          break;
        }
      }
      if (s == 0) fail(Err::Internal, "gcd has no root in any extension");
      if (ext_field_size(F, s, lim) < 0) {
        NondegenVerdict v;  // witness field over the cap: degenerate, point omitted
        v.status = NondegenStatus::Degenerate;
        return v;
      }
      auto big = std::make_shared<FieldCtx>(F.p(), F.deg() * s, std::nullopt, lim);
      UniPoly facb;
      for (const auto& c : factor) facb.push_back(big->embed(F, c));
      FieldElem root = big->zero();
      bool found = false;
      for (long long xi = 1; xi < big->size(); ++xi) {
        FieldElem x = big->unpack(xi);
        if (big->is_zero(uni_eval(facb, x, *big))) {
          root = x;
          found = true;
          break;
        }
      }
      if (!found) fail(Err::Internal, "no root found in the predicted extension");
      // undo the substitution with y2 = 1: x_i = root^(M_1i)
      std::vector<FieldElem> pt = {elem_pow_signed(*big, root, ef.m11),
                                   elem_pow_signed(*big, root, ef.m12)};
      return degenerate_at(static_cast<int>(fi), big, s, std::move(pt));
    }
    NondegenVerdict v;
    v.status = NondegenStatus::NonDegenerateExact;
    return v;
  }

  // n = 3: bounded brute force over (F_{q^s}^x)^3
  std::vector<FaceSystem> systems;
  for (size_t fi = 0; fi < nd.faces.size(); ++fi) {
    if (nd.faces[fi].contains_origin) continue;
    systems.push_back(face_system(d, nd, static_cast<int>(fi), m, F));
  }
  for (int s = 1; s <= s_max; ++s) {
    long long big_size = ext_field_size(F, s, lim);
    if (big_size < 0 || (big_size - 1) * (big_size - 1) > lim.domain_budget / (big_size - 1)) {
      NondegenVerdict v;
      v.status = NondegenStatus::NonDegenerateHeuristic;
      v.smax = s - 1;
      return v;
    }
    auto big = std::make_shared<FieldCtx>(F.p(), F.deg() * s, std::nullopt, lim);
    std::vector<std::pair<int, std::vector<LaurentPoly>>> emb;
    for (const auto& fs : systems) {
      std::vector<LaurentPoly> polys;
      for (const auto& poly : fs.polys) {
        LaurentPoly e;
        for (const auto& [u, c] : poly.terms) e.terms.emplace(u, big->embed(F, c));
        polys.push_back(std::move(e));
      }
      emb.emplace_back(fs.face_index, std::move(polys));
    }
    std::vector<FieldElem> pt(3);
    for (long long xi = 1; xi < big->size(); ++xi) {
      pt[0] = big->unpack(xi);
      for (long long yi = 1; yi < big->size(); ++yi) {
        pt[1] = big->unpack(yi);
        for (long long zi = 1; zi < big->size(); ++zi) {
          pt[2] = big->unpack(zi);
          for (const auto& [face_index, polys] : emb) {
            bool zero = true;
            for (const auto& poly : polys)
              if (!big->is_zero(laurent_eval(poly, pt, *big))) {
                zero = false;
                break;
              }
            if (zero) return degenerate_at(face_index, big, s, pt);
          }
        }
      }
    }
  }
  NondegenVerdict v;
  v.status = NondegenStatus::NonDegenerateHeuristic;
  v.smax = s_max;
  return v;
}

}  // namespace wittsum
