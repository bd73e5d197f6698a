#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "simplexramsey/io.hpp"

namespace {

// Exit codes: 0 decided, 1 input error, 2 degenerate simplex,
// 3 undecided/infeasible.
constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitUndecided = 3;

sr::Json read_json(const std::string& path) {
    if (path == "-") return sr::Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw sr::ParseError("cannot open input file: " + path);
    return sr::Json::parse(in);
}

void emit(const sr::Json& j) { std::cout << j.dump(2) << "\n"; }

std::string pair_str(const sr::VertexPair& p) {
    return "(" + std::to_string(p.first + 1) + "," + std::to_string(p.second + 1) + ")";
}

void print_check_human(const sr::CheckReport& r) {
    std::cout << "squared diameter D^2 = " << sr::to_string(r.diam_sq) << ", attained at";
    for (const auto& p : r.diameter_pairs) std::cout << " " << pair_str(p);
    std::cout << "\n";
    std::cout << "circumcenter barycentrics:";
    for (const auto& l : r.circumcenter.lambdas) std::cout << " " << sr::to_string(l);
    std::cout << "\nsquared circumradius rho^2 = " << sr::to_string(r.circumcenter.rho_sq())
              << "; circumcenter " << (r.in_hull ? "inside" : "outside") << " the hull\n";
    if (r.cf_obstructed)
        std::cout << "obstruction: rho^2 > D^2/2, so the simplex is not diameter-Ramsey\n";
    std::cout << "pairwise deficit sum " << sr::to_string(r.pairwise_sum)
              << (r.pairwise_holds ? " <= " : " > ") << sr::to_string(r.diam_sq)
              << ": pairwise criterion " << (r.pairwise_holds ? "holds" : "fails") << "\n";
    for (const auto& res : r.per_pair) {
        std::cout << "diameter pair " << pair_str(res.pair) << ": deficit decomposition "
                  << (res.decomposition ? "found" : "infeasible") << "\n";
        if (res.decomposition) {
            for (const auto& [subset, mass] : res.decomposition->masses) {
                std::cout << "  alpha{";
                for (size_t i = 0; i < subset.size(); ++i)
                    std::cout << (i ? "," : "") << subset[i] + 1;
                std::cout << "} = " << sr::to_string(mass) << "\n";
            }
            std::cout << "  reserve alpha_0 = " << sr::to_string(res.decomposition->reserve)
                      << "\n";
        }
    }
    std::cout << "verdict: " << sr::verdict_name(r.verdict) << "\n";
}

void print_family_human(const sr::FamilyReport& r) {
    std::cout << "A_" << r.params.d << "(" << sr::to_string(r.params.s) << ","
              << sr::to_string(r.params.t) << "," << sr::to_string(r.params.u) << ")\n";
    std::cout << "Delta_d = " << sr::to_string(r.delta_d) << "\ncircumcenter barycentrics:";
    for (const auto& l : r.solver_lambdas) std::cout << " " << sr::to_string(l);
    std::cout << "\ncircumcenter " << (r.outside ? "outside" : "inside")
              << " the hull; deficit certificate "
              << (r.decomposition_ok ? "verifies" : "FAILS") << "; CF obstruction "
              << (r.cf_obstructed ? "triggers" : "does not trigger") << "\n";
    std::cout << "verdict: " << sr::verdict_name(r.verdict) << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"diameter-Ramsey simplex toolkit"};
    app.require_subcommand(1);

    std::string input_path = "-";
    bool human = false;

    auto* check = app.add_subcommand("check", "full diameter-Ramsey report for a simplex");
    check->add_option("input", input_path, "JSON input file ('-' for stdin)");
    check->add_flag("--human", human, "prose certificate instead of JSON");

    long long fam_d = 3;
    std::string fam_s = "1", fam_t = "3", fam_u = "3";
    auto* family = app.add_subcommand("family", "report for the family A_d(s,t,u)");
    family->add_option("-d", fam_d, "dimension d >= 3")->required();
    family->add_option("-s", fam_s, "parameter s > 0")->required();
    family->add_option("-t", fam_t, "parameter t > 0")->required();
    family->add_option("-u", fam_u, "parameter u > 0")->required();
    family->add_flag("--human", human, "prose certificate instead of JSON");

    auto* decompose = app.add_subcommand("decompose", "deficit decomposition certificate");
    decompose->add_option("input", input_path, "JSON input file ('-' for stdin)");

    double realize_tol = 0.0;
    auto* embed = app.add_subcommand("embed", "product-of-regular-simplices embedding");
    embed->add_option("input", input_path, "JSON input file ('-' for stdin)");
    embed->add_option("--realize", realize_tol, "also emit floating coordinates at this tolerance");

    std::string r_path, a_path;
    int colors = 2;
    std::uint64_t cap = sr::coloring_cap();
    auto* toy = app.add_subcommand("ramsey-toy", "exhaustive arrow-relation check R -> (A)_q");
    toy->add_option("--r", r_path, "host configuration JSON")->required();
    toy->add_option("--a", a_path, "pattern simplex JSON")->required();
    toy->add_option("-q", colors, "number of colors")->required();
    toy->add_option("--cap", cap, "coloring enumeration cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (check->parsed()) {
            const auto m = sr::parse_simplex_input(read_json(input_path));
            if (!sr::is_nondegenerate_simplex(m)) {
                std::cerr << "error: input is a degenerate simplex\n";
                return kExitDegenerate;
            }
            const sr::CheckReport report = sr::run_check(m);
            if (human)
                print_check_human(report);
            else
                emit(sr::check_report_to_json(report));
            return report.verdict == sr::CheckVerdict::Unknown ? kExitUndecided : kExitOk;
        }
        if (family->parsed()) {
            const sr::FamilyParams params{fam_d, sr::parse_rational(fam_s),
                                          sr::parse_rational(fam_t), sr::parse_rational(fam_u)};
            const sr::FamilyReport report = sr::counterexample_report(params);
            if (human)
                print_family_human(report);
            else
                emit(sr::family_report_to_json(report));
            return kExitOk;
        }
        if (decompose->parsed()) {
            const auto m = sr::parse_simplex_input(read_json(input_path));
            if (!sr::is_nondegenerate_simplex(m)) {
                std::cerr << "error: input is a degenerate simplex\n";
                return kExitDegenerate;
            }
            const auto [d2, pairs] = sr::diameter_sq(m);
            for (const auto& pair : pairs) {
                const auto profile = sr::deficit_profile(m, pair);
                if (auto d = sr::find_decomposition(profile)) {
                    emit(sr::decomposition_to_json(*d));
                    return kExitOk;
                }
            }
            emit(sr::Json{{"result", "infeasible"}});
            return kExitUndecided;
        }
        if (embed->parsed()) {
            const auto m = sr::parse_simplex_input(read_json(input_path));
            if (!sr::is_nondegenerate_simplex(m)) {
                std::cerr << "error: input is a degenerate simplex\n";
                return kExitDegenerate;
            }
            const auto [d2, pairs] = sr::diameter_sq(m);
            for (const auto& pair : pairs) {
                const auto profile = sr::deficit_profile(m, pair);
                if (auto d = sr::find_decomposition(profile)) {
                    const sr::ProductEmbedding e = sr::build_embedding(*d);
                    sr::Json out = sr::embedding_to_json(e);
                    if (realize_tol > 0) {
                        const Eigen::MatrixXd pts = sr::realize_embedding(e, realize_tol);
                        sr::Json coords = sr::Json::array();
                        for (Eigen::Index i = 0; i < pts.rows(); ++i) {
                            sr::Json row = sr::Json::array();
                            for (Eigen::Index j = 0; j < pts.cols(); ++j)
                                row.push_back(pts(i, j));
                            coords.push_back(std::move(row));
                        }
                        out["coordinates"] = std::move(coords);
                    }
                    emit(out);
                    return kExitOk;
                }
            }
            emit(sr::Json{{"result", "infeasible"}});
            return kExitUndecided;
        }
        if (toy->parsed()) {
            const auto rm = sr::parse_simplex_input(read_json(r_path));
            const auto am = sr::parse_simplex_input(read_json(a_path));
            const sr::FiniteConfig rc = sr::config_from_matrix(rm, r_path);
            const sr::ArrowVerdict verdict = sr::arrow_check(rc, am, colors, cap);
            emit(sr::arrow_verdict_to_json(verdict));
            return verdict.status == sr::ArrowStatus::Infeasible ? kExitUndecided : kExitOk;
        }
    } catch (const sr::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const sr::Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const sr::InvalidDistanceMatrix& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const sr::DuplicatePoints& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
