#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "simplexramsey/lp.hpp"

using namespace sr;
using test::make_sqdist;
using test::regular_sqdist;
using test::tetra_1_3_3;

namespace {

// Brute-force feasibility over the UNPRUNED family (every B avoiding the
// diameter pair, zero-deficit rows included). Independent of the pruning
// in admissible_subsets; used to spot-check pruning soundness.
bool unpruned_feasible(const DeficitProfile& p) {
    std::vector<VertexSubset> family;
    for (unsigned long mask = 0; mask < (1ul << p.n); ++mask) {
        VertexSubset b;
        for (Eigen::Index v = 0; v < p.n; ++v)
            if (mask & (1ul << v)) b.push_back(v);
        if (b.size() < 2) continue;
        if (std::binary_search(b.begin(), b.end(), p.diameter_pair.first) &&
            std::binary_search(b.begin(), b.end(), p.diameter_pair.second))
            continue;
        family.push_back(std::move(b));
    }
    std::vector<VertexPair> all_pairs;
    for (Eigen::Index i = 0; i < p.n; ++i)
        for (Eigen::Index j = i + 1; j < p.n; ++j) all_pairs.emplace_back(i, j);
    const Eigen::Index rows = static_cast<Eigen::Index>(all_pairs.size()) + 1;
    const Eigen::Index cols = static_cast<Eigen::Index>(family.size());
    RMatrix a = RMatrix::Zero(rows, cols + 1);
    RVector b = RVector::Zero(rows);
    for (Eigen::Index r = 0; r + 1 < rows; ++r) {
        const auto [i, j] = all_pairs[r];
        for (Eigen::Index c = 0; c < cols; ++c)
            if (std::binary_search(family[c].begin(), family[c].end(), i) &&
                std::binary_search(family[c].begin(), family[c].end(), j))
                a(r, c) = 1;
        b(r) = p.deficits(i, j);
    }
    for (Eigen::Index c = 0; c < cols; ++c) a(rows - 1, c) = 1;
    a(rows - 1, cols) = 1;
    b(rows - 1) = p.diam_sq;
    return solve_feasibility(std::move(a), std::move(b)).has_value();
}

DeficitDecomposition known_certificate() {
    DeficitDecomposition d;
    d.n = 4;
    d.diameter_pair = {0, 1};
    d.diam_sq = 7;
    d.reserve = 1;
    d.masses[{0, 2}] = 3;
    d.masses[{1, 2, 3}] = 3;
    return d;
}

}  // namespace

TEST_CASE("deficit profile of the family tetrahedron") {
    auto p = deficit_profile(tetra_1_3_3(), {0, 1});
    CHECK(p.diam_sq == 7);
    CHECK(p.deficit(0, 2) == 3);
    CHECK(p.deficit(1, 2) == 3);
    CHECK(p.deficit(1, 3) == 3);
    CHECK(p.deficit(2, 3) == 3);
    CHECK(p.deficit(0, 1) == 0);
    CHECK(p.deficit(0, 3) == 0);
}

TEST_CASE("deficit profile rejects non-diameter pairs") {
    CHECK_THROWS_AS(deficit_profile(tetra_1_3_3(), {0, 2}), NotADiameterPair);
}

TEST_CASE("regular simplex and segment have zero deficits") {
    auto reg = deficit_profile(regular_sqdist(4, 2), {0, 1});
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = i + 1; j < 4; ++j) CHECK(reg.deficit(i, j) == 0);
    auto seg = deficit_profile(make_sqdist({{0, 1}, {1, 0}}), {0, 1});
    CHECK(seg.deficit(0, 1) == 0);
}

TEST_CASE("pairwise criterion") {
    auto [ok_tet, sum_tet] = pairwise_criterion(deficit_profile(tetra_1_3_3(), {0, 1}));
    CHECK_FALSE(ok_tet);
    CHECK(sum_tet == 12);

    auto [ok_reg, sum_reg] = pairwise_criterion(deficit_profile(regular_sqdist(5, 3), {0, 1}));
    CHECK(ok_reg);
    CHECK(sum_reg == 0);

    auto iso = make_sqdist({{0, 1, Rational(9, 10)},
                            {1, 0, Rational(9, 10)},
                            {Rational(9, 10), Rational(9, 10), 0}});
    auto [ok_iso, sum_iso] = pairwise_criterion(deficit_profile(iso, {0, 1}));
    CHECK(ok_iso);
    CHECK(sum_iso == Rational(1, 5));
}

TEST_CASE("admissible subsets of the family tetrahedron") {
    auto fam = admissible_subsets(deficit_profile(tetra_1_3_3(), {0, 1}));
    const std::vector<VertexSubset> expected{{0, 2}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
    CHECK(fam.subsets == expected);
}

TEST_CASE("admissible subsets trivial cases") {
    CHECK(admissible_subsets(deficit_profile(regular_sqdist(4, 1), {0, 1})).subsets.empty());
    CHECK(admissible_subsets(deficit_profile(make_sqdist({{0, 1}, {1, 0}}), {0, 1}))
              .subsets.empty());
}

TEST_CASE("decomposition search on the family tetrahedron") {
    auto p = deficit_profile(tetra_1_3_3(), {0, 1});
    auto d = find_decomposition(p);
    REQUIRE(d.has_value());
    CHECK(verify_decomposition(p, *d));
    CHECK(d->reserve >= 0);
}

TEST_CASE("decomposition search on the regular simplex") {
    auto p = deficit_profile(regular_sqdist(5, 4), {0, 1});
    auto d = find_decomposition(p);
    REQUIRE(d.has_value());
    CHECK(d->masses.empty());
    CHECK(d->reserve == 4);
    CHECK(verify_decomposition(p, *d));
}

TEST_CASE("known certificate verifies; tampered ones do not") {
    auto p = deficit_profile(tetra_1_3_3(), {0, 1});
    auto good = known_certificate();
    CHECK(verify_decomposition(p, good));

    auto wrong_mass = good;
    wrong_mass.masses[{0, 2}] = 2;
    wrong_mass.reserve = 2;
    CHECK_FALSE(verify_decomposition(p, wrong_mass));

    auto bad_subset = good;
    bad_subset.masses.erase(VertexSubset{0, 2});
    bad_subset.masses[{0, 1}] = 3;  // contains the diameter pair
    CHECK_FALSE(verify_decomposition(p, bad_subset));
}

TEST_CASE("pairwise success implies LP feasibility") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(0, 3);
    int tested = 0;
    while (tested < 20) {
        const Eigen::Index n = 3 + static_cast<Eigen::Index>(rng() % 3);
        // Small deficits off a unit diameter keep the pairwise sum under D^2.
        RMatrix m = RMatrix::Zero(n, n);
        Rational sum{0};
        bool ok = true;
        for (Eigen::Index i = 0; i < n && ok; ++i)
            for (Eigen::Index j = i + 1; j < n && ok; ++j) {
                Rational deficit = (i == 0 && j == 1) ? 0 : Rational(num(rng), 100);
                sum += deficit;
                m(i, j) = 1 - deficit;
                m(j, i) = m(i, j);
                if (sum > 1) ok = false;
            }
        if (!ok) continue;
        SquaredDistanceMatrix sq(std::move(m));
        auto p = deficit_profile(sq, {0, 1});
        auto [pw, pw_sum] = pairwise_criterion(p);
        REQUIRE(pw);
        auto d = find_decomposition(p);
        REQUIRE(d.has_value());
        CHECK(verify_decomposition(p, *d));
        ++tested;
    }
}

TEST_CASE("embedding of the known certificate") {
    auto e = build_embedding(known_certificate());
    REQUIRE(e.factors.size() == 3);
    CHECK(e.factors[0].is_reserve);
    CHECK(e.factors[0].side_sq == 1);
    CHECK(e.factors[0].vertex_count == 4);
    CHECK(e.factors[1].collapsed == VertexSubset{0, 2});
    CHECK(e.factors[1].side_sq == 3);
    CHECK(e.factors[1].vertex_count == 3);
    CHECK(e.factors[2].collapsed == VertexSubset{1, 2, 3});
    CHECK(e.factors[2].side_sq == 3);
    CHECK(e.factors[2].vertex_count == 2);
    CHECK(e.derived_sqdist == tetra_1_3_3().entries());
    CHECK(e.derived_sqdist(0, 1) == 7);
}

TEST_CASE("embedding of a regular-simplex certificate") {
    auto p = deficit_profile(regular_sqdist(4, 5), {0, 1});
    auto d = find_decomposition(p);
    REQUIRE(d.has_value());
    auto e = build_embedding(*d);
    REQUIRE(e.factors.size() == 1);
    CHECK(e.factors[0].is_reserve);
    CHECK(e.derived_sqdist == regular_sqdist(4, 5).entries());
}

TEST_CASE("found decompositions verify and embed exactly on random instances") {
    std::mt19937 rng(20240818);
    for (int trial = 0; trial < 40; ++trial) {
        const Eigen::Index n = 3 + static_cast<Eigen::Index>(rng() % 4);
        auto seed = test::random_feasible_decomposition(rng, n);
        auto planted = build_embedding(seed);
        SquaredDistanceMatrix m(planted.derived_sqdist);
        REQUIRE(is_nondegenerate_simplex(m));

        auto p = deficit_profile(m, {0, 1});
        auto found = find_decomposition(p);
        REQUIRE(found.has_value());
        CHECK(verify_decomposition(p, *found));

        auto e = build_embedding(*found);
        CHECK(e.derived_sqdist == m.entries());
        CHECK(e.derived_sqdist(0, 1) == p.diam_sq);
        // Product diameter^2 = sum of factor sides = D^2.
        Rational product_diam{0};
        for (const auto& f : e.factors) product_diam += f.side_sq;
        CHECK(product_diam == p.diam_sq);

        // CF consistency: a feasible instance is never obstructed.
        auto c = circumcenter_barycentric(m);
        CHECK(2 * c.rho_sq() <= p.diam_sq);
    }
}

TEST_CASE("pruning soundness against the unpruned family") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 15; ++trial) {
        const Eigen::Index n = 3 + static_cast<Eigen::Index>(rng() % 3);  // n <= 5
        auto seed = test::random_feasible_decomposition(rng, n);
        auto planted = build_embedding(seed);
        SquaredDistanceMatrix m(planted.derived_sqdist);
        auto p = deficit_profile(m, {0, 1});
        CHECK(find_decomposition(p).has_value() == unpruned_feasible(p));
    }
    // An infeasible instance agrees too: equilateral-ish triangle with one
    // large deficit that no admissible subset can cover alone.
    auto bad = make_sqdist({{0, 4, 1}, {4, 0, 1}, {1, 1, 0}});
    auto p = deficit_profile(bad, {0, 1});
    CHECK(find_decomposition(p).has_value() == unpruned_feasible(p));
}

TEST_CASE("vertex cap") {
    DeficitProfile p;
    p.n = 15;
    p.diameter_pair = {0, 1};
    p.diam_sq = 1;
    p.deficits = RMatrix::Zero(15, 15);
    CHECK_THROWS_AS(admissible_subsets(p), TooManyVertices);
}

TEST_CASE("product distances") {
    auto seg = make_sqdist({{0, 1}, {1, 0}});
    auto square = product_sqdist(seg, seg);
    REQUIRE(square.size() == 4);
    CHECK(square(0, 1) == 1);
    CHECK(square(0, 2) == 1);
    CHECK(square(0, 3) == 2);
    CHECK(square(1, 2) == 2);
    CHECK(square(1, 3) == 1);
    CHECK(square(2, 3) == 1);

    // Product with a single point is the identity.
    auto same = product_sqdist(tetra_1_3_3(), std::nullopt);
    CHECK(same == tetra_1_3_3());

    // diam^2 additivity on random pairs.
    std::mt19937 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        auto p1 = test::random_rational_points(rng, 3, 2);
        auto p2 = test::random_rational_points(rng, 3, 2);
        auto m1 = sqdist_from_points(p1);
        auto m2 = sqdist_from_points(p2);
        auto prod = product_sqdist(m1, m2);
        CHECK(diameter_sq(prod).first ==
              diameter_sq(m1).first + diameter_sq(m2).first);
    }
}

TEST_CASE("embedding realization matches the derived matrix") {
    auto e = build_embedding(known_certificate());
    Eigen::MatrixXd pts = realize_embedding(e, 1e-9);
    REQUIRE(pts.rows() == 4);
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = i + 1; j < 4; ++j) {
            const double want = static_cast<double>(e.derived_sqdist(i, j));
            const double got = (pts.row(i) - pts.row(j)).squaredNorm();
            CHECK(std::abs(got - want) <= 1e-9 * std::max(1.0, want));
        }
}
