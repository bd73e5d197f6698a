#include "simplexramsey/family.hpp"

#include <array>

namespace sr {

namespace {

void check_params(const FamilyParams& p) {
    if (p.d < 3) throw std::invalid_argument("family requires d >= 3");
    if (p.s <= 0 || p.t <= 0 || p.u <= 0)
        throw std::invalid_argument("family requires s, t, u > 0");
}

}  // namespace

SquaredDistanceMatrix family_sqdist(const FamilyParams& p) {
    check_params(p);
    const Eigen::Index n = p.d + 1;
    const Rational stu = p.s + p.t + p.u;
    const Rational st = p.s + p.t;
    RMatrix m = RMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) {
            Rational v;
            if (i == 0)
                v = (j == 2) ? p.s + p.u : stu;
            else
                v = st;
            m(i, j) = v;
            m(j, i) = v;
        }
    return SquaredDistanceMatrix(std::move(m));
}

Rational family_delta_d(const FamilyParams& p) {
    return (p.d + 1) * p.s * p.s + 2 * p.d * (p.s * p.t + p.s * p.u + p.t * p.u);
}

std::vector<Rational> family_barycentric_closed_form(const FamilyParams& p) {
    check_params(p);
    const Rational delta = family_delta_d(p);
    const Rational l1 = (p.s + p.t) * (p.s + p.d * p.u) / delta;
    const Rational l2 = (p.s + 2 * p.t) * (p.s + p.u) / delta;
    const Rational l3 = (p.s * p.s + p.s * p.t + p.s * p.u - (p.d - 2) * p.t * p.u) / delta;
    std::vector<Rational> lambdas(p.d + 1, l2);
    lambdas[0] = l1;
    lambdas[2] = l3;
    return lambdas;
}

bool outside_condition(const FamilyParams& p) {
    check_params(p);
    return (p.d - 2) * p.t * p.u > p.s * (p.s + p.t + p.u);
}

DeficitDecomposition canonical_decomposition(const FamilyParams& p) {
    check_params(p);
    DeficitDecomposition d;
    d.n = p.d + 1;
    d.diameter_pair = {0, 1};
    d.diam_sq = p.s + p.t + p.u;
    d.reserve = p.s;
    d.masses[{0, 2}] = p.t;
    VertexSubset tail;
    for (Eigen::Index v = 1; v <= p.d; ++v) tail.push_back(v);
    d.masses[std::move(tail)] = p.u;
    return d;
}

FamilyReport counterexample_report(const FamilyParams& p) {
    FamilyReport r;
    r.params = p;
    const SquaredDistanceMatrix m = family_sqdist(p);
    r.sqdist = m.entries();
    r.delta_d = family_delta_d(p);
    r.closed_form_lambdas = family_barycentric_closed_form(p);

    const CircumcenterResult c = circumcenter_barycentric(m);
    r.solver_lambdas = c.lambdas;
    r.two_rho_sq = c.two_rho_sq;
    if (r.solver_lambdas != r.closed_form_lambdas)
        throw ClosedFormMismatch("solver barycentrics differ from the closed form");

    r.outside = outside_condition(p);
    r.decomposition = canonical_decomposition(p);
    r.decomposition_ok = verify_decomposition(deficit_profile(m, {0, 1}), r.decomposition);

    const auto [d2, pairs] = diameter_sq(m);
    r.cf_obstructed = cf_obstruction(c.rho_sq(), d2);

    if (r.decomposition_ok && r.outside)
        r.verdict = FamilyVerdict::ConjectureCounterexample;
    else if (r.decomposition_ok)
        r.verdict = FamilyVerdict::CriterionOnly;
    else
        r.verdict = FamilyVerdict::NotApplicable;
    return r;
}

std::vector<FamilyParams> scan(Eigen::Index d,
                               const std::vector<std::array<Rational, 3>>& grid) {
    if (d < 3) throw std::invalid_argument("scan requires d >= 3");
    std::vector<FamilyParams> hits;
    for (const auto& [s, t, u] : grid) {
        const FamilyParams p{d, s, t, u};
        if (counterexample_report(p).verdict == FamilyVerdict::ConjectureCounterexample)
            hits.push_back(p);
    }
    return hits;
}

}  // namespace sr
