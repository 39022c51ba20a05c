#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "varlex/exponent.hpp"
#include "varlex/grid.hpp"

namespace varlex {

// Finite sampled set of grid functions plus generator metadata. Members all
// live on one domain; the norm bound M is computed once an exponent is bound
// to the analysis (family_norm_bound).
struct FunctionFamily {
  std::vector<GridFunction> members;
  std::string label;
  std::string generator;

  std::size_t size() const { return members.size(); }
  const GridDomain& domain() const { return members.front().domain(); }
};

// Validates non-emptiness and the shared domain.
FunctionFamily make_family(std::vector<GridFunction> members, std::string label,
                           std::string generator = {});

// Named generators:
//   "constants:<m>"        c_j = j/m, j = 1..m
//   "translates:<m>"       chi_[a, a+1/4] with a equispaced in [0, 3/4]
//   "oscillations:<K>"     sin(2 pi k x), k = 1..K
//   "lipschitz-bumps:<m>"  max(0, 1 - 4|x - a|), a equispaced in [1/4, 3/4]
//   "random-smooth:<m>[,<seed>]"  seeded low-order trigonometric series
// All 1-D except constants and random-smooth, which also work on boxes.
FunctionFamily generate_family(const std::string& spec, const GridDomain& domain,
                               std::uint64_t default_seed);

// One random smooth function (the random-smooth member generator); the
// leading coefficient is bounded away from zero so members are never
// numerically null.
GridFunction random_smooth_function(const GridDomain& domain,
                                    std::uint64_t seed);

std::vector<double> member_norms(const FunctionFamily& family,
                                 const ExponentField& p);

// max over members of the Luxemburg norm.
double family_norm_bound(const FunctionFamily& family, const ExponentField& p);

}  // namespace varlex
