#pragma once

#include <cstddef>

namespace wittsum {

// Resource caps. Exceeding any of them is a refusal with a cost estimate,
// never a crash or a silent truncation.
struct Limits {
  long long field_size_cap = 1LL << 20;  // max p^deg for any constructed field
  long long domain_budget = 10'000'000;  // max total torus evaluations per sums run
  int witt_len_cap = 4;                  // max Witt length m for universal polynomials
  int dim_cap = 3;                       // max ambient dimension n
  std::size_t monomial_cap = 200'000;    // sparse Laurent intermediate swell
  long long enum_point_cap = 20'000'000; // lattice box enumeration cap
  int hull_point_cap = 512;              // distinct generator points for 3-d hulls
  double weight_tolerance = 1e-9;        // relative tolerance for archimedean weight checks
};

inline const Limits& default_limits() {
  static const Limits lim{};
  return lim;
}

}  // namespace wittsum
