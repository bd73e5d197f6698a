#pragma once

#include <random>
#include <vector>

#include "simplexramsey/deficits.hpp"
#include "simplexramsey/exactgeom.hpp"

namespace test {

using sr::Rational;

inline sr::SquaredDistanceMatrix make_sqdist(const std::vector<std::vector<Rational>>& rows) {
    const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
    sr::RMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rows[i][j];
    return sr::SquaredDistanceMatrix(std::move(m));
}

// The d=3 family tetrahedron at (s,t,u)=(1,3,3).
inline sr::SquaredDistanceMatrix tetra_1_3_3() {
    return make_sqdist({{0, 7, 4, 7}, {7, 0, 4, 4}, {4, 4, 0, 4}, {7, 4, 4, 0}});
}

inline sr::SquaredDistanceMatrix regular_sqdist(Eigen::Index n, const Rational& side_sq) {
    sr::RMatrix m = sr::RMatrix::Constant(n, n, side_sq);
    m.diagonal().setZero();
    return sr::SquaredDistanceMatrix(std::move(m));
}

// Random points with small rational coordinates; retries on duplicates.
inline std::vector<std::vector<Rational>> random_rational_points(std::mt19937& rng,
                                                                 int count, int dim) {
    std::uniform_int_distribution<int> num(-60, 60);
    std::uniform_int_distribution<int> den(1, 7);
    while (true) {
        std::vector<std::vector<Rational>> pts(count);
        for (auto& p : pts) {
            p.resize(dim);
            for (auto& c : p) c = Rational(num(rng), den(rng));
        }
        bool distinct = true;
        for (size_t i = 0; i < pts.size() && distinct; ++i)
            for (size_t j = i + 1; j < pts.size() && distinct; ++j)
                if (pts[i] == pts[j]) distinct = false;
        if (distinct) return pts;
    }
}

// Random decomposition with positive reserve over random admissible
// subsets of [n]; its embedding-derived matrix is a simplex on which the
// deficit criterion is feasible by construction, with the diameter
// attained at (1,2).
inline sr::DeficitDecomposition random_feasible_decomposition(std::mt19937& rng,
                                                              Eigen::Index n) {
    std::uniform_int_distribution<int> mass_num(1, 12);
    std::uniform_int_distribution<int> mass_den(1, 4);
    std::uniform_int_distribution<int> subset_count(0, 4);
    std::uniform_int_distribution<unsigned long> bits(0, (1ul << n) - 1);

    sr::DeficitDecomposition d;
    d.n = n;
    d.diameter_pair = {0, 1};
    const int picks = subset_count(rng);
    for (int k = 0; k < picks; ++k) {
        unsigned long mask = bits(rng);
        if ((mask & 1ul) && (mask & 2ul)) mask &= ~2ul;  // drop the diameter pair
        sr::VertexSubset b;
        for (Eigen::Index v = 0; v < n; ++v)
            if (mask & (1ul << v)) b.push_back(v);
        if (b.size() < 2) continue;
        d.masses[b] += Rational(mass_num(rng), mass_den(rng));
    }
    Rational total{0};
    for (const auto& [subset, mass] : d.masses) total += mass;
    d.reserve = Rational(mass_num(rng), 1) + 1;  // strictly positive reserve
    d.diam_sq = total + d.reserve;
    return d;
}

}  // namespace test
