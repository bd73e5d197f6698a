#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "simplexramsey/deficits.hpp"

namespace sr {

struct ClosedFormMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parameters of the three-parameter simplex family: d >= 3, s,t,u > 0.
struct FamilyParams {
    Eigen::Index d;
    Rational s, t, u;
};

enum class FamilyVerdict { ConjectureCounterexample, CriterionOnly, NotApplicable };

struct FamilyReport {
    FamilyParams params;
    RMatrix sqdist;
    std::vector<Rational> closed_form_lambdas;
    std::vector<Rational> solver_lambdas;
    Rational two_rho_sq;
    Rational delta_d;
    bool outside = false;
    DeficitDecomposition decomposition;
    bool decomposition_ok = false;
    bool cf_obstructed = false;
    FamilyVerdict verdict = FamilyVerdict::NotApplicable;
};

// (d+1)x(d+1) matrix with the family's squared edge lengths:
// |p1-p2|^2 = |p1-pj|^2 = s+t+u (j >= 4), |p1-p3|^2 = s+u,
// |pi-pj|^2 = s+t (2 <= i < j <= d+1).
SquaredDistanceMatrix family_sqdist(const FamilyParams& p);

// Circumcenter barycentrics in closed form over the common denominator
// Delta_d = (d+1)s^2 + 2d(st+su+tu).
std::vector<Rational> family_barycentric_closed_form(const FamilyParams& p);

Rational family_delta_d(const FamilyParams& p);

// The circumcenter lies outside the hull exactly when (d-2)tu > s(s+t+u).
bool outside_condition(const FamilyParams& p);

// alpha_{1,3} = t, alpha_{2..d+1} = u, reserve s, diameter pair (1,2).
DeficitDecomposition canonical_decomposition(const FamilyParams& p);

FamilyReport counterexample_report(const FamilyParams& p);

std::vector<FamilyParams> scan(Eigen::Index d, const std::vector<std::array<Rational, 3>>& grid);

}  // namespace sr
