#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "simplexramsey/deficits.hpp"

namespace sr {

enum class CheckVerdict { DiameterRamsey, NotDiameterRamsey, Unknown };

struct PerPairResult {
    VertexPair pair;
    std::optional<DeficitDecomposition> decomposition;
};

/// Aggregate of the obstruction test, the deficit criterion over every
/// diameter-attaining pair, and the hull geometry of the circumcenter.
struct CheckReport {
    Rational diam_sq;
    std::vector<VertexPair> diameter_pairs;
    CircumcenterResult circumcenter;
    bool in_hull = false;
    bool cf_obstructed = false;
    bool pairwise_holds = false;
    Rational pairwise_sum;
    std::vector<PerPairResult> per_pair;
    std::optional<ProductEmbedding> embedding;  // from the first feasible pair
    CheckVerdict verdict = CheckVerdict::Unknown;
};

// Requires a nondegenerate simplex.
CheckReport run_check(const SquaredDistanceMatrix& m);

}  // namespace sr
