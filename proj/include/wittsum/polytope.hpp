#pragma once

#include <optional>
#include <vector>

#include "wittsum/config.hpp"
#include "wittsum/intutil.hpp"
#include "wittsum/polygon.hpp"
#include "wittsum/wittring.hpp"

namespace wittsum {

using Pt = std::vector<long long>;

// Inward-opposing inequality <w, x> <= c with primitive w; c >= 0 always, and
// c = 0 exactly for facets through the origin.
struct Facet {
  std::vector<long long> w;
  long long c = 0;
  bool operator==(const Facet&) const = default;
};

// A proper face: its hull vertices, the facets containing it, and whether the
// origin lies on it.
struct PFace {
  int dim = 0;
  std::vector<int> verts;
  std::vector<int> facets;
  bool contains_origin = false;
};

// The Newton polyhedron of f at infinity: hull of the weighted support
// together with 0, plus its degree grid.
struct NewtonData {
  int n = 0;    // ambient dimension
  int dim = 0;  // dimension of the hull
  std::vector<Pt> gens;    // distinct weighted support points p^(m-1-i)u
  std::vector<Pt> verts;   // hull vertices
  std::vector<Facet> facets;
  std::vector<PFace> faces;  // all proper faces, dims 0..n-1
  long long D = 1;
  bool d_lcm_override = false;

  bool full_dim() const { return dim == n; }
  bool origin_interior() const;
  bool point_on_face(const PFace& f, const Pt& u) const;
};

NewtonData build_polyhedron(std::vector<Pt> weighted_support, int n,
                            const Limits& lim = default_limits());

// Weighted support p^(m-1-i) u of a decomposition.
std::vector<Pt> weighted_support(const DecomposedWitt& d, long long p, int m, int n);

NewtonData build_polyhedron(const DecomposedWitt& d, long long p, int m, int n,
                            const Limits& lim = default_limits());

// Degree (gauge) of a lattice point; nullopt when u is outside the cone over
// the polytope. Requires full dimension.
std::optional<Rat> degree(const NewtonData& nd, const Pt& u);

// W(0..kmax): histogram of lattice points by D*degree.
std::vector<long long> weight_vector(const NewtonData& nd, long long kmax,
                                     const Limits& lim = default_limits());

struct HodgeData {
  std::vector<long long> weights;  // W(0..kmax)
  std::vector<Int> pcoeffs;        // coefficients of (1-t^D)^n sum W(k) t^k
  PolygonChain hodge;
  Int nvol = 0;  // n! Vol, computed independently by triangulation
};

HodgeData p_delta(const NewtonData& nd, const Limits& lim = default_limits());

// n! Vol by coning boundary simplices to the origin; exact integer.
Int volume_normalized(const NewtonData& nd);

// Normalized volume of the (n-1)-dimensional faces through the origin
// (n <= 2: vertex count at 0 for n = 1, lattice length sum for n = 2).
long long boundary_through_origin(const NewtonData& nd);

struct SliceResult {
  std::vector<int> C;  // 1-based coordinates pinned to zero
  NewtonData delta;    // slice realized in ambient dimension n-|C|
};

struct CommodeResult {
  bool commode = false;
  std::vector<SliceResult> slices;  // all C subseteq J, by size then lexicographic
};

CommodeResult slice_and_commode(const NewtonData& nd, const std::vector<int>& J,
                                const Limits& lim = default_limits());

}  // namespace wittsum
