#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wittsum/errors.hpp"
#include "wittsum/intutil.hpp"

namespace wittsum {

// Lower-convex chain of rational plane points, x strictly increasing.
struct PolygonChain {
  std::vector<std::pair<Rat, Rat>> v;

  bool operator==(const PolygonChain&) const = default;
  bool empty() const { return v.empty(); }
  const std::pair<Rat, Rat>& front() const { return v.front(); }
  const std::pair<Rat, Rat>& back() const { return v.back(); }

  // piecewise-linear value at x; x must be within [front.x, back.x]
  Rat eval(const Rat& x) const {
    if (v.empty()) fail(Err::Internal, "evaluating an empty polygon");
    if (x < v.front().first || x > v.back().first)
      fail(Err::Internal, "polygon evaluated outside its span");
    for (size_t i = 0; i + 1 < v.size(); ++i) {
      const auto& [x0, y0] = v[i];
      const auto& [x1, y1] = v[i + 1];
      if (x <= x1) return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    }
    return v.back().second;
  }
};

// Lower convex hull of a point set (vertices only, collinear points dropped).
inline PolygonChain lower_convex_hull(std::vector<std::pair<Rat, Rat>> pts) {
  std::sort(pts.begin(), pts.end());
  PolygonChain out;
  for (const auto& p : pts) {
    if (!out.v.empty() && out.v.back().first == p.first) {
      if (p.second >= out.v.back().second) continue;
      out.v.pop_back();
    }
    while (out.v.size() >= 2) {
      const auto& a = out.v[out.v.size() - 2];
      const auto& b = out.v[out.v.size() - 1];
      // drop b unless it turns strictly left (keeps true vertices only)
      if ((b.first - a.first) * (p.second - a.second) -
              (p.first - a.first) * (b.second - a.second) >
          0)
        break;
      out.v.pop_back();
    }
    out.v.push_back(p);
  }
  return out;
}

// Hodge polygon of sum a_k t^k of degree D: vertices (0,0) and
// (sum_{i<=k} a_i, (1/D) sum_{i<=k} i a_i).
inline PolygonChain hodge_polygon(const std::vector<Int>& coeffs, long long D) {
  PolygonChain out;
  out.v.emplace_back(Rat(0), Rat(0));
  Int sx = 0, sy = 0;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    sx += coeffs[k];
    sy += Int(k) * coeffs[k];
    out.v.emplace_back(Rat(sx), Rat(sy, Int(D)));
  }
  return out;
}

// Every vertex of upper lies on or above lower, evaluated exactly; spans must
// agree at both ends for the endpoint check.
inline bool chain_above(const PolygonChain& upper, const PolygonChain& lower) {
  if (upper.empty() || lower.empty()) return upper.empty() && lower.empty();
  if (upper.front() != lower.front()) return false;
  if (upper.back().first != lower.back().first) return false;
  for (const auto& [x, y] : upper.v)
    if (y < lower.eval(x)) return false;
  return true;
}

inline bool endpoints_equal(const PolygonChain& a, const PolygonChain& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  return a.front() == b.front() && a.back() == b.back();
}

}  // namespace wittsum
