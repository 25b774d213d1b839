// Batch CLI: classify sl_2 maps, certify/refute local-automorphism behaviour,
// produce similarity witnesses, and run the permuting-map demo.
// Exit codes: 0 definitive verdict, 1 input error, 2 inconclusive.

#include "locaut/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using locaut::Json;

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw locaut::InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw locaut::InputError(path + ": " + e.what());
    }
}

void emit_report(const Json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw locaut::InputError("cannot write " + out_path);
    out << report.dump(2) << "\n";
}

std::vector<locaut::SlElement> default_points(std::size_t n) {
    std::vector<locaut::SlElement> pts;
    for (std::size_t k = 0; k < n * n - 1; ++k)
        pts.push_back(locaut::basis_element(n, k));
    return pts;
}

int run_classify_sl2(const std::string& map_path, const std::string& out_path) {
    locaut::LinMap map = locaut::linmap_from_json(read_json_file(map_path));
    if (map.n != 2)
        throw locaut::InputError("classify-sl2 requires n = 2");
    locaut::Sl2Verdict verdict = locaut::sl2_classify(map);
    Json report;
    const char* text = verdict == locaut::Sl2Verdict::Automorphism ? "automorphism"
                       : verdict == locaut::Sl2Verdict::AntiAutomorphism
                           ? "anti-automorphism"
                           : "not a local automorphism";
    report["verdict"] = text;
    if (verdict != locaut::Sl2Verdict::NotLocal) {
        auto phi = locaut::recognize(map);
        report["recognized"] = phi ? locaut::signed_auto_to_json(*phi) : Json(nullptr);
    } else {
        report["recognized"] = nullptr;
    }
    emit_report(report, out_path);
    std::cerr << "classify-sl2: " << text << "\n";
    return 0;
}

int run_certify(const std::string& map_path, const std::string& points_path,
                std::size_t budget, unsigned seed, const std::string& out_path) {
    locaut::LinMap map = locaut::linmap_from_json(read_json_file(map_path));
    std::vector<locaut::SlElement> points;
    if (points_path.empty()) {
        points = default_points(map.n);
    } else {
        Json j = read_json_file(points_path);
        if (!j.is_array())
            throw locaut::InputError("points file must be a JSON array");
        for (const auto& item : j) {
            auto p = locaut::sl_from_json(item);
            if (p.n != map.n)
                throw locaut::InputError("point has mismatched n");
            points.push_back(std::move(p));
        }
    }
    locaut::SearchBudget sb{budget, seed};
    auto report = locaut::certify_on_points(map, points, sb);
    emit_report(locaut::certify_report_to_json(report, seed), out_path);
    std::cerr << "certify: " << points.size() << " points, "
              << report.certificates.size() << " certified, "
              << report.refutations.size() << " refuted, "
              << report.budget_exhausted.size() << " exhausted\n";
    return report.verdict == locaut::SetVerdict::Inconclusive ? 2 : 0;
}

int run_refute(const std::string& map_path, std::size_t budget, unsigned seed,
               const std::string& out_path) {
    locaut::LinMap map = locaut::linmap_from_json(read_json_file(map_path));
    locaut::SearchBudget sb{1000, seed};
    auto refutation = locaut::refute_search(map, budget, sb);
    Json report;
    report["verdict"] = refutation ? "not a local automorphism" : "inconclusive";
    report["refutation"] = refutation ? locaut::refutation_to_json(*refutation) : Json(nullptr);
    report["seed"] = seed;
    emit_report(report, out_path);
    std::cerr << "refute: " << (refutation ? "refutation found" : "inconclusive") << "\n";
    return refutation ? 0 : 2;
}

int run_witness(const std::string& x_path, const std::string& y_path,
                std::size_t budget, unsigned seed, const std::string& out_path) {
    locaut::Mat x = locaut::mat_from_json(read_json_file(x_path));
    locaut::Mat y = locaut::mat_from_json(read_json_file(y_path));
    if (!x.is_square() || x.rows() != y.rows() || y.rows() != y.cols())
        throw locaut::InputError("witness: matrices must be square of equal size");
    locaut::SearchBudget sb{budget, seed};
    auto result = locaut::similarity_witness(x, y, sb);
    Json report;
    int code = 0;
    switch (result.status) {
    case locaut::WitnessStatus::Found:
        report["verdict"] = "similar";
        report["witness"] = Json{{"T", locaut::mat_to_json(result.witness->T)}};
        break;
    case locaut::WitnessStatus::NotSimilar:
        report["verdict"] = "not similar";
        report["witness"] = nullptr;
        break;
    default:
        report["verdict"] = "budget exhausted";
        report["witness"] = nullptr;
        code = 2;
    }
    emit_report(report, out_path);
    std::cerr << "witness: " << report["verdict"].get<std::string>() << "\n";
    return code;
}

int run_counterexample(std::size_t n, const std::string& alpha_text,
                       const std::string& out_path) {
    locaut::Rational alpha;
    try {
        alpha = locaut::parse_rational(alpha_text);
    } catch (const std::invalid_argument& e) {
        throw locaut::InputError(e.what());
    }
    locaut::DeltaAlphaSpec spec(n, alpha);
    locaut::LinMap delta = locaut::build_delta_alpha(spec);
    bool identities = locaut::verify_identities(spec);
    auto basis_report = locaut::certify_on_points(delta, default_points(n));
    auto refutation = locaut::refute_delta_alpha(spec);

    Json report;
    report["n"] = n;
    report["alpha"] = locaut::to_string(alpha);
    report["identities_verified"] = identities;
    report["basis_certified"] =
        basis_report.verdict == locaut::SetVerdict::CertifiedOnSet;
    report["rank_of_delta_squared_image"] = refutation.delta_squared_rank;
    report["direct_refutation_point"] =
        refutation.direct ? locaut::sl_to_json(refutation.direct->x) : Json(nullptr);
    report["verdict"] = refutation.direct || refutation.delta_squared_rank != refutation.moved_rank
                            ? "not a local automorphism"
                            : "inconclusive";
    emit_report(report, out_path);
    std::cerr << "counterexample: n=" << n << " alpha=" << locaut::to_string(alpha)
              << " -> " << report["verdict"].get<std::string>() << "\n";
    return report["verdict"] == "not a local automorphism" ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certificates for local automorphisms of sl_n"};
    app.require_subcommand(1);

    std::string map_path, points_path, x_path, y_path, out_path, alpha_text = "1";
    std::size_t budget = 1000, n = 3;
    unsigned seed = 0;

    auto* classify = app.add_subcommand("classify-sl2", "Classify a linear map on sl_2");
    classify->add_option("--map", map_path, "LinMap JSON file")->required();
    classify->add_option("--out", out_path, "Write report to file");

    auto* certify = app.add_subcommand("certify", "Certify a map pointwise");
    certify->add_option("--map", map_path, "LinMap JSON file")->required();
    certify->add_option("--points", points_path, "JSON array of SlElements (default: basis)");
    certify->add_option("--budget", budget, "Invertibility search budget");
    certify->add_option("--seed", seed, "Random seed");
    certify->add_option("--out", out_path, "Write report to file");

    auto* refute = app.add_subcommand("refute", "Search for a refutation point");
    refute->add_option("--map", map_path, "LinMap JSON file")->required();
    refute->add_option("--budget", budget, "Random points after the deterministic tiers");
    refute->add_option("--seed", seed, "Random seed");
    refute->add_option("--out", out_path, "Write report to file");

    auto* witness = app.add_subcommand("witness", "Similarity witness for two matrices");
    witness->add_option("--x", x_path, "First matrix JSON file")->required();
    witness->add_option("--y", y_path, "Second matrix JSON file")->required();
    witness->add_option("--budget", budget, "Invertibility search budget");
    witness->add_option("--seed", seed, "Random seed");
    witness->add_option("--out", out_path, "Write report to file");

    auto* counter = app.add_subcommand("counterexample", "Run the permuting-map demo");
    counter->add_option("--n", n, "Algebra size (>= 3)");
    counter->add_option("--alpha", alpha_text, "Nonzero rational parameter, e.g. 1 or 1/2");
    counter->add_option("--out", out_path, "Write report to file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed())
            return run_classify_sl2(map_path, out_path);
        if (certify->parsed())
            return run_certify(map_path, points_path, budget, seed, out_path);
        if (refute->parsed())
            return run_refute(map_path, budget, seed, out_path);
        if (witness->parsed())
            return run_witness(x_path, y_path, budget, seed, out_path);
        return run_counterexample(n, alpha_text, out_path);
    } catch (const locaut::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
