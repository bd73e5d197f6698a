#include "simplexramsey/deficits.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "simplexramsey/lp.hpp"

namespace sr {

namespace {

constexpr Eigen::Index kDefaultVertexCap = 14;

bool subset_contains(const VertexSubset& b, Eigen::Index v) {
    return std::binary_search(b.begin(), b.end(), v);
}

bool subset_contains_pair(const VertexSubset& b, Eigen::Index i, Eigen::Index j) {
    return subset_contains(b, i) && subset_contains(b, j);
}

}  // namespace

Eigen::Index vertex_cap() {
    if (const char* env = std::getenv("SIMPLEX_RAMSEY_MAX_N")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 2) return static_cast<Eigen::Index>(parsed);
    }
    return kDefaultVertexCap;
}

DeficitProfile deficit_profile(const SquaredDistanceMatrix& m, VertexPair pair) {
    const auto [d2, attaining] = diameter_sq(m);
    if (m(pair.first, pair.second) != d2)
        throw NotADiameterPair("given pair does not attain the diameter");
    DeficitProfile p;
    p.n = m.size();
    p.diameter_pair = pair;
    p.diam_sq = d2;
    p.deficits = RMatrix::Zero(p.n, p.n);
    for (Eigen::Index i = 0; i < p.n; ++i)
        for (Eigen::Index j = 0; j < p.n; ++j)
            if (i != j) p.deficits(i, j) = d2 - m(i, j);
    return p;
}

std::pair<bool, Rational> pairwise_criterion(const DeficitProfile& p) {
    Rational sum{0};
    for (Eigen::Index i = 0; i < p.n; ++i)
        for (Eigen::Index j = i + 1; j < p.n; ++j) sum += p.deficits(i, j);
    return {sum <= p.diam_sq, sum};
}

SubsetFamily admissible_subsets(const DeficitProfile& p) {
    if (p.n > vertex_cap())
        throw TooManyVertices("vertex count exceeds the subset enumeration cap");
    const auto [d1, d2] = p.diameter_pair;
    std::vector<VertexSubset> subsets;
    const unsigned long limit = 1ul << p.n;
    for (unsigned long bits = 0; bits < limit; ++bits) {
        VertexSubset b;
        for (Eigen::Index v = 0; v < p.n; ++v)
            if (bits & (1ul << v)) b.push_back(v);
        if (b.size() < 2) continue;
        if (subset_contains_pair(b, d1, d2)) continue;
        bool zero_deficit_pair = false;
        for (size_t x = 0; x < b.size() && !zero_deficit_pair; ++x)
            for (size_t y = x + 1; y < b.size() && !zero_deficit_pair; ++y)
                if (p.deficits(b[x], b[y]) == 0) zero_deficit_pair = true;
        if (zero_deficit_pair) continue;
        subsets.push_back(std::move(b));
    }
    std::sort(subsets.begin(), subsets.end(), [](const VertexSubset& a, const VertexSubset& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return SubsetFamily{std::move(subsets)};
}

std::optional<DeficitDecomposition> find_decomposition(const DeficitProfile& p) {
    const SubsetFamily family = admissible_subsets(p);

    // One equality row per positive deficit plus the mass row. Each pair's
    // own two-element subset appears in exactly its row, so it doubles as
    // that row's slack once eliminated from the mass row; this gives the
    // simplex a nearly complete starting basis.
    std::vector<VertexPair> positive_pairs;
    for (Eigen::Index i = 0; i < p.n; ++i)
        for (Eigen::Index j = i + 1; j < p.n; ++j)
            if (p.deficits(i, j) > 0) positive_pairs.emplace_back(i, j);

    std::vector<VertexSubset> big;  // admissible subsets with three or more vertices
    for (const VertexSubset& b : family.subsets)
        if (b.size() >= 3) big.push_back(b);

    const Eigen::Index nbig = static_cast<Eigen::Index>(big.size());
    const Eigen::Index npairs = static_cast<Eigen::Index>(positive_pairs.size());
    const Eigen::Index cols = nbig + npairs + 1;  // big | pair masses | reserve
    const Eigen::Index rows = npairs + 1;
    RMatrix a = RMatrix::Zero(rows, cols);
    RVector b = RVector::Zero(rows);
    std::vector<Eigen::Index> hint(static_cast<size_t>(rows), -1);

    Rational deficit_sum{0};
    for (Eigen::Index r = 0; r < npairs; ++r) {
        const auto [i, j] = positive_pairs[r];
        for (Eigen::Index c = 0; c < nbig; ++c)
            if (subset_contains_pair(big[c], i, j)) a(r, c) = 1;
        a(r, nbig + r) = 1;
        b(r) = p.deficits(i, j);
        deficit_sum += b(r);
        hint[static_cast<size_t>(r)] = nbig + r;
    }

    // Mass row with the pair rows subtracted out: a subset covering k pairs
    // contributes 1 - k, the reserve contributes 1, b becomes D^2 - sum of
    // deficits. Orient so b is nonnegative.
    Rational mass_b = p.diam_sq - deficit_sum;
    const int sign = mass_b < 0 ? -1 : 1;
    for (Eigen::Index c = 0; c < nbig; ++c) {
        const auto k = static_cast<Eigen::Index>(big[c].size());
        a(npairs, c) = sign * (1 - k * (k - 1) / 2);
    }
    a(npairs, cols - 1) = sign;
    b(npairs) = sign * mass_b;
    if (sign > 0) hint[static_cast<size_t>(npairs)] = cols - 1;

    const auto solution = solve_feasibility(std::move(a), std::move(b), std::move(hint));
    if (!solution) return std::nullopt;

    DeficitDecomposition d;
    d.n = p.n;
    d.diameter_pair = p.diameter_pair;
    d.diam_sq = p.diam_sq;
    Rational total{0};
    for (Eigen::Index c = 0; c < nbig; ++c) {
        if ((*solution)(c) > 0) {
            d.masses[big[c]] = (*solution)(c);
            total += (*solution)(c);
        }
    }
    for (Eigen::Index r = 0; r < npairs; ++r) {
        const Rational mass = (*solution)(nbig + r);
        if (mass > 0) {
            const auto [i, j] = positive_pairs[r];
            d.masses[VertexSubset{i, j}] = mass;
            total += mass;
        }
    }
    d.reserve = p.diam_sq - total;
    return d;
}

bool verify_decomposition(const DeficitProfile& p, const DeficitDecomposition& d) {
    if (d.n != p.n || d.diameter_pair != p.diameter_pair) return false;
    if (d.diam_sq != p.diam_sq || d.reserve < 0) return false;
    const auto [d1, d2] = p.diameter_pair;
    Rational total{0};
    for (const auto& [subset, mass] : d.masses) {
        if (mass < 0) return false;
        if (subset.size() < 2) return false;
        for (Eigen::Index v : subset)
            if (v < 0 || v >= p.n) return false;
        if (subset_contains_pair(subset, d1, d2)) return false;
        total += mass;
    }
    if (total > p.diam_sq) return false;
    if (total + d.reserve != p.diam_sq) return false;
    for (Eigen::Index i = 0; i < p.n; ++i) {
        for (Eigen::Index j = i + 1; j < p.n; ++j) {
            Rational covered{0};
            for (const auto& [subset, mass] : d.masses)
                if (subset_contains_pair(subset, i, j)) covered += mass;
            if (covered != p.deficits(i, j)) return false;
        }
    }
    return true;
}

ProductEmbedding build_embedding(const DeficitDecomposition& d) {
    const Eigen::Index n = d.n;
    ProductEmbedding e;
    EmbeddingFactor reserve;
    reserve.is_reserve = true;
    reserve.side_sq = d.reserve;
    reserve.vertex_count = d.reserve > 0 ? n : 1;
    e.factors.push_back(std::move(reserve));
    for (const auto& [subset, mass] : d.masses) {
        EmbeddingFactor f;
        f.collapsed = subset;
        f.side_sq = mass;
        f.vertex_count = n - static_cast<Eigen::Index>(subset.size()) + 1;
        e.factors.push_back(std::move(f));
    }

    e.assignment.assign(n, std::vector<Eigen::Index>(e.factors.size(), 0));
    for (Eigen::Index i = 0; i < n; ++i) {
        e.assignment[i][0] = d.reserve > 0 ? i : 0;
        for (size_t k = 1; k < e.factors.size(); ++k) {
            const VertexSubset& b = e.factors[k].collapsed;
            if (subset_contains(b, i)) {
                e.assignment[i][k] = 0;  // the shared apex u_B
            } else {
                // 1 + number of non-members below i
                Eigen::Index rank = 1;
                for (Eigen::Index v = 0; v < i; ++v)
                    if (!subset_contains(b, v)) ++rank;
                e.assignment[i][k] = rank;
            }
        }
    }

    // Derived distances purely from the masses: alpha_0 plus every mass
    // whose subset does not contain both endpoints.
    e.derived_sqdist = RMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            Rational dist = d.reserve;
            for (const auto& [subset, mass] : d.masses)
                if (!subset_contains_pair(subset, i, j)) dist += mass;
            e.derived_sqdist(i, j) = dist;
            e.derived_sqdist(j, i) = dist;
        }
    }
    return e;
}

Eigen::MatrixXd realize_embedding(const ProductEmbedding& e, double tol) {
    const Eigen::Index n = static_cast<Eigen::Index>(e.assignment.size());

    // Realize each nontrivial factor as a regular simplex.
    std::vector<Eigen::MatrixXd> factor_points;
    Eigen::Index total_dim = 0;
    for (const EmbeddingFactor& f : e.factors) {
        if (f.vertex_count < 2 || f.side_sq == 0) {
            factor_points.emplace_back(Eigen::MatrixXd::Zero(1, 0));
            continue;
        }
        RMatrix reg = RMatrix::Constant(f.vertex_count, f.vertex_count, f.side_sq);
        reg.diagonal().setZero();
        PointCloud cloud = realize(SquaredDistanceMatrix(std::move(reg)), tol);
        total_dim += cloud.points.cols();
        factor_points.push_back(std::move(cloud.points));
    }

    Eigen::MatrixXd points = Eigen::MatrixXd::Zero(n, total_dim);
    for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::Index offset = 0;
        for (size_t k = 0; k < e.factors.size(); ++k) {
            const Eigen::Index dim = factor_points[k].cols();
            if (dim == 0) continue;
            points.row(i).segment(offset, dim) = factor_points[k].row(e.assignment[i][k]);
            offset += dim;
        }
    }

    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double got = (points.row(i) - points.row(j)).squaredNorm();
            const double want = static_cast<double>(e.derived_sqdist(i, j));
            if (std::abs(got - want) > tol * std::max(1.0, std::abs(want)))
                throw ToleranceExceeded("embedding realization exceeds requested tolerance");
        }
    return points;
}

SquaredDistanceMatrix product_sqdist(const std::optional<SquaredDistanceMatrix>& m1,
                                     const std::optional<SquaredDistanceMatrix>& m2) {
    if (!m1 && !m2)
        throw InvalidDistanceMatrix("product of two single points is a single point");
    if (!m1) return *m2;
    if (!m2) return *m1;
    const Eigen::Index n1 = m1->size();
    const Eigen::Index n2 = m2->size();
    RMatrix m = RMatrix::Zero(n1 * n2, n1 * n2);
    for (Eigen::Index i = 0; i < n1; ++i)
        for (Eigen::Index j = 0; j < n2; ++j)
            for (Eigen::Index k = 0; k < n1; ++k)
                for (Eigen::Index l = 0; l < n2; ++l) {
                    const Eigen::Index row = i * n2 + j;
                    const Eigen::Index col = k * n2 + l;
                    if (row != col) m(row, col) = (*m1)(i, k) + (*m2)(j, l);
                }
    return SquaredDistanceMatrix(std::move(m));
}

}  // namespace sr
