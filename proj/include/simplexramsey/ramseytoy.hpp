#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simplexramsey/exactgeom.hpp"

namespace sr {

/// A finite point configuration given by exact squared distances; may be
/// degenerate (e.g. products of segments) and may have a single point.
struct FiniteConfig {
    RMatrix sqdist;  // symmetric, zero diagonal, positive off-diagonal
    std::string label;

    Eigen::Index size() const { return sqdist.rows(); }
};

FiniteConfig config_from_sqdist(RMatrix sqdist, std::string label);
FiniteConfig config_from_matrix(const SquaredDistanceMatrix& m, std::string label);

enum class ArrowStatus { Holds, Fails, Infeasible };

struct ArrowVerdict {
    ArrowStatus status = ArrowStatus::Infeasible;
    std::optional<std::vector<int>> witness_coloring;  // present iff Fails
    std::uint64_t colorings_checked = 0;
};

// Default cap on the coloring space size q^|R|; SIMPLEX_RAMSEY_COLOR_CAP
// overrides.
std::uint64_t coloring_cap();

// (k+1)-point configuration, all squared distances equal to side_sq.
FiniteConfig regular_simplex_config(Eigen::Index k, const Rational& side_sq);

// Regular simplex with q*k+1 vertices; arrows the regular k-simplex for
// q colors by pigeonhole.
FiniteConfig pigeonhole_witness(Eigen::Index k, Eigen::Index q, const Rational& side_sq);

// All distance-preserving injections from A's vertices into R, found by
// backtracking with distance-compatibility pruning. Each unordered copy
// appears once per labeling.
std::vector<std::vector<Eigen::Index>> congruent_copies(const FiniteConfig& r,
                                                        const SquaredDistanceMatrix& a);

// Exhaustively checks R -> (A)_q over all q-colorings of R, with the
// first point's color fixed (color names are interchangeable). The
// reported witness is the lexicographically least failing coloring.
ArrowVerdict arrow_check(const FiniteConfig& r, const SquaredDistanceMatrix& a, int q,
                         std::uint64_t cap = coloring_cap());

FiniteConfig product_config(const FiniteConfig& r1, const FiniteConfig& r2);

}  // namespace sr
