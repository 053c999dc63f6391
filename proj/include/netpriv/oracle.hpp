#pragma once

#include "netpriv/blocking.hpp"

namespace netpriv {

inline constexpr Index kDefaultOracleMaxN = 12;

/// Exhaustive search over blocked sets in (cardinality, lexicographic) order using the
/// rank criterion directly. `blocked` is the first feasible set; `all_optima` lists every
/// feasible set of that size. Throws TooLarge when n > max_n.
BlockingSolution brute_force_problem1(const SystemInstance& instance, const Spectrum& spectrum,
                                      const Tolerance& tol, Index max_n = kDefaultOracleMaxN,
                                      RankRoute route = RankRoute::Composite);

/// As above with entry-wise protection: every row of F must become unobservable.
BlockingSolution brute_force_problem2(const SystemInstance& instance, const Spectrum& spectrum,
                                      const Tolerance& tol, Index max_n = kDefaultOracleMaxN,
                                      RankRoute route = RankRoute::Composite);

}  // namespace netpriv
