#include "simplexramsey/io.hpp"

namespace sr {

namespace {

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw ParseError("rational entries must be strings or integers, got: " + j.dump());
}

Json pair_to_json(const VertexPair& p) {
    return Json::array({p.first + 1, p.second + 1});
}

Json subset_to_json(const VertexSubset& b) {
    Json out = Json::array();
    for (Eigen::Index v : b) out.push_back(v + 1);
    return out;
}

}  // namespace

SquaredDistanceMatrix parse_simplex_input(const Json& j) {
    if (!j.is_object()) throw ParseError("input must be a JSON object");
    const bool has_points = j.contains("points");
    const bool has_sqdist = j.contains("sqdist");
    if (has_points == has_sqdist)
        throw ParseError("input needs exactly one of 'points' or 'sqdist'");
    if (has_points) {
        std::vector<std::vector<Rational>> points;
        for (const Json& row : j.at("points")) {
            std::vector<Rational> p;
            for (const Json& coord : row) p.push_back(rational_from_json(coord));
            points.push_back(std::move(p));
        }
        return sqdist_from_points(points);
    }
    const Json& rows = j.at("sqdist");
    const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
    RMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Json& row = rows.at(static_cast<size_t>(i));
        if (static_cast<Eigen::Index>(row.size()) != n)
            throw ParseError("sqdist matrix must be square");
        for (Eigen::Index k = 0; k < n; ++k)
            m(i, k) = rational_from_json(row.at(static_cast<size_t>(k)));
    }
    return SquaredDistanceMatrix(std::move(m));
}

Json sqdist_to_json(const RMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json circumcenter_to_json(const CircumcenterResult& c) {
    Json lambdas = Json::array();
    for (const Rational& l : c.lambdas) lambdas.push_back(to_string(l));
    return Json{{"lambda", std::move(lambdas)},
                {"rho_sq", to_string(c.rho_sq())},
                {"two_rho_sq", to_string(c.two_rho_sq)}};
}

Json decomposition_to_json(const DeficitDecomposition& d) {
    Json masses = Json::array();
    for (const auto& [subset, mass] : d.masses)
        masses.push_back(Json{{"B", subset_to_json(subset)}, {"alpha", to_string(mass)}});
    return Json{{"diam_sq", to_string(d.diam_sq)},
                {"diameter_pair", pair_to_json(d.diameter_pair)},
                {"masses", std::move(masses)},
                {"n", d.n},
                {"reserve", to_string(d.reserve)}};
}

DeficitDecomposition decomposition_from_json(const Json& j) {
    DeficitDecomposition d;
    d.n = j.at("n").get<Eigen::Index>();
    d.diam_sq = rational_from_json(j.at("diam_sq"));
    d.reserve = rational_from_json(j.at("reserve"));
    const Json& pair = j.at("diameter_pair");
    d.diameter_pair = {pair.at(0).get<Eigen::Index>() - 1, pair.at(1).get<Eigen::Index>() - 1};
    for (const Json& entry : j.at("masses")) {
        VertexSubset b;
        for (const Json& v : entry.at("B")) b.push_back(v.get<Eigen::Index>() - 1);
        d.masses[std::move(b)] = rational_from_json(entry.at("alpha"));
    }
    return d;
}

Json embedding_to_json(const ProductEmbedding& e) {
    Json factors = Json::array();
    for (const EmbeddingFactor& f : e.factors) {
        Json jf{{"side_sq", to_string(f.side_sq)},
                {"type", f.is_reserve ? "reserve" : "collapse"},
                {"vertices", f.vertex_count}};
        if (!f.is_reserve) jf["B"] = subset_to_json(f.collapsed);
        factors.push_back(std::move(jf));
    }
    Json assignment = Json::array();
    for (const auto& row : e.assignment) assignment.push_back(row);
    return Json{{"assignment", std::move(assignment)},
                {"derived_sqdist", sqdist_to_json(e.derived_sqdist)},
                {"factors", std::move(factors)}};
}

Json check_report_to_json(const CheckReport& r) {
    Json pairs = Json::array();
    for (const VertexPair& p : r.diameter_pairs) pairs.push_back(pair_to_json(p));
    Json per_pair = Json::array();
    for (const PerPairResult& res : r.per_pair) {
        Json entry{{"feasible", res.decomposition.has_value()}, {"pair", pair_to_json(res.pair)}};
        if (res.decomposition) entry["decomposition"] = decomposition_to_json(*res.decomposition);
        per_pair.push_back(std::move(entry));
    }
    Json out{{"cf_obstructed", r.cf_obstructed},
             {"circumcenter", circumcenter_to_json(r.circumcenter)},
             {"decompositions", std::move(per_pair)},
             {"diam_sq", to_string(r.diam_sq)},
             {"diameter_pairs", std::move(pairs)},
             {"in_hull", r.in_hull},
             {"pairwise", Json{{"holds", r.pairwise_holds}, {"sum", to_string(r.pairwise_sum)}}},
             {"verdict", verdict_name(r.verdict)}};
    if (r.embedding) {
        Json summary = Json::array();
        for (const EmbeddingFactor& f : r.embedding->factors)
            summary.push_back(Json{{"side_sq", to_string(f.side_sq)},
                                   {"type", f.is_reserve ? "reserve" : "collapse"},
                                   {"vertices", f.vertex_count}});
        out["embedding"] = std::move(summary);
    }
    return out;
}

Json family_report_to_json(const FamilyReport& r) {
    Json lambdas = Json::array();
    for (const Rational& l : r.solver_lambdas) lambdas.push_back(to_string(l));
    return Json{{"cf_obstructed", r.cf_obstructed},
                {"decomposition", decomposition_to_json(r.decomposition)},
                {"decomposition_verified", r.decomposition_ok},
                {"delta_d", to_string(r.delta_d)},
                {"lambda", std::move(lambdas)},
                {"outside_hull", r.outside},
                {"params",
                 Json{{"d", r.params.d},
                      {"s", to_string(r.params.s)},
                      {"t", to_string(r.params.t)},
                      {"u", to_string(r.params.u)}}},
                {"sqdist", sqdist_to_json(r.sqdist)},
                {"two_rho_sq", to_string(r.two_rho_sq)},
                {"verdict", verdict_name(r.verdict)}};
}

Json arrow_verdict_to_json(const ArrowVerdict& v) {
    Json out{{"colorings_checked", v.colorings_checked},
             {"status", arrow_status_name(v.status)}};
    if (v.witness_coloring) out["witness_coloring"] = *v.witness_coloring;
    return out;
}

const char* verdict_name(CheckVerdict v) {
    switch (v) {
        case CheckVerdict::DiameterRamsey: return "DIAMETER_RAMSEY";
        case CheckVerdict::NotDiameterRamsey: return "NOT_DIAMETER_RAMSEY";
        case CheckVerdict::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

const char* verdict_name(FamilyVerdict v) {
    switch (v) {
        case FamilyVerdict::ConjectureCounterexample: return "CONJECTURE_COUNTEREXAMPLE";
        case FamilyVerdict::CriterionOnly: return "CRITERION_ONLY";
        case FamilyVerdict::NotApplicable: return "NOT_APPLICABLE";
    }
    return "NOT_APPLICABLE";
}

const char* arrow_status_name(ArrowStatus s) {
    switch (s) {
        case ArrowStatus::Holds: return "HOLDS";
        case ArrowStatus::Fails: return "FAILS";
        case ArrowStatus::Infeasible: return "INFEASIBLE";
    }
    return "INFEASIBLE";
}

}  // namespace sr
