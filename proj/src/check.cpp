#include "simplexramsey/check.hpp"

#include <stdexcept>

namespace sr {

CheckReport run_check(const SquaredDistanceMatrix& m) {
    CheckReport r;
    const auto [d2, pairs] = diameter_sq(m);
    r.diam_sq = d2;
    r.diameter_pairs = pairs;

    r.circumcenter = circumcenter_barycentric(m);
    r.in_hull = circumcenter_in_hull(r.circumcenter);
    r.cf_obstructed = cf_obstruction(r.circumcenter.rho_sq(), d2);

    // The deficit sum does not depend on which diameter pair is labeled.
    const DeficitProfile first_profile = deficit_profile(m, pairs.front());
    const auto [pw_ok, pw_sum] = pairwise_criterion(first_profile);
    r.pairwise_holds = pw_ok;
    r.pairwise_sum = pw_sum;

    bool any_feasible = false;
    for (const VertexPair& pair : pairs) {
        const DeficitProfile profile = deficit_profile(m, pair);
        auto decomposition = find_decomposition(profile);
        if (decomposition && !verify_decomposition(profile, *decomposition))
            throw std::logic_error("find_decomposition returned a non-verifying certificate");
        if (decomposition && !any_feasible) {
            any_feasible = true;
            r.embedding = build_embedding(*decomposition);
        }
        r.per_pair.push_back(PerPairResult{pair, std::move(decomposition)});
    }

    if (any_feasible && r.cf_obstructed)
        throw std::logic_error("criterion feasible but CF-obstructed: exactness bug");
    if (any_feasible)
        r.verdict = CheckVerdict::DiameterRamsey;
    else if (r.cf_obstructed)
        r.verdict = CheckVerdict::NotDiameterRamsey;
    else
        r.verdict = CheckVerdict::Unknown;
    return r;
}

}  // namespace sr
