#pragma once

#include <optional>
#include <vector>

#include "simplexramsey/linalg.hpp"

namespace sr {

// Finds some x >= 0 with A x = b, or nothing when the system is
// infeasible. Exact-rational phase-I simplex with Dantzig pricing and a
// Bland anti-cycling fallback; the returned point is the phase-I basic
// solution as-is.
//
// basis_hint, when nonempty, must have one entry per row: either -1 or a
// column that is a unit vector with +1 in that row while b there is
// nonnegative. Hinted rows start basic in that column and need no
// artificial, which can remove most of the phase-I work. Invalid hints
// are ignored.
std::optional<RVector> solve_feasibility(RMatrix a, RVector b,
                                         std::vector<Eigen::Index> basis_hint = {});

}  // namespace sr
