#pragma once

// Test-only oracles, kept independent of the production evaluation path:
//  - oracle_exp_sum lifts everything to the unramified ring
//    (Z/p^m)[T]/(M0) and sums psi(Tr(omega(f)(x))) over Teichmueller points,
//    with the trace taken by Galois conjugation (Newton-lifted Frobenius).
//  - direct_char_sum_m1 is the plain additive character sum for m = 1.

#include <vector>

#include "wittsum/charsum.hpp"
#include "wittsum/wittring.hpp"

namespace wittsum::oracles {

// S_k computed through the omega-lift; sign handling matches the requested
// convention. J coordinates range over the whole field (0 included).
CyclotomicInt oracle_exp_sum(const DecomposedWitt& dec, const WittLaurent& f, const FieldCtx& Fq,
                             int k, const std::vector<int>& J, SignConvention sign);

// m = 1 cross-check: sum of zeta^(Tr f(x)) without any Witt machinery.
CyclotomicInt direct_char_sum_m1(const LaurentPoly& f0, const FieldCtx& Fq, int k,
                                 const std::vector<int>& J, SignConvention sign, int n);

}  // namespace wittsum::oracles
