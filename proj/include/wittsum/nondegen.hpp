#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "wittsum/laurent.hpp"
#include "wittsum/polytope.hpp"
#include "wittsum/wittring.hpp"

namespace wittsum {

// The j-indexed system attached to a face tau not containing 0: poly j has
// coefficient sum of u_j * a_iu^(p^(m-1-i)) at exponent p^(m-1-i) u, with u_j
// reduced mod p. Identically-zero polynomials are retained.
struct FaceSystem {
  int face_index = -1;
  std::vector<LaurentPoly> polys;  // one per coordinate j = 1..n
};

enum class NondegenStatus { NonDegenerateExact, NonDegenerateHeuristic, Degenerate };

struct DegenWitness {
  int face_index = -1;
  int ext_degree = 1;  // s: the point lives in F_{q^s}
  std::shared_ptr<FieldCtx> field;
  std::vector<FieldElem> point;  // all coordinates nonzero
};

struct NondegenVerdict {
  NondegenStatus status = NondegenStatus::NonDegenerateExact;
  int smax = 0;  // search bound used by heuristic verdicts
  std::optional<DegenWitness> witness;
};

FaceSystem face_system(const DecomposedWitt& d, const NewtonData& nd, int face_index, int m,
                       const FieldCtx& F);

// Exact for n <= 2; bounded torus search over F_{q^s}, s <= s_max, for n = 3.
NondegenVerdict check_nondegenerate(const DecomposedWitt& d, const NewtonData& nd, int m,
                                    const FieldCtx& F, int s_max = 2,
                                    const Limits& lim = default_limits());

// A Degenerate witness must re-evaluate to zero in all n face polynomials.
bool verify_witness(const DecomposedWitt& d, const NewtonData& nd, int m, const FieldCtx& F,
                    const DegenWitness& w);

}  // namespace wittsum
