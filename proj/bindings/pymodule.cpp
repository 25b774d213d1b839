// Python bindings. Matrices cross the boundary as lists of lists of
// rational strings ("p/q"); structured results come back as JSON strings
// matching the CLI report schemas.

#include "locaut/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace locaut;

namespace {

using StrMat = std::vector<std::vector<std::string>>;

Mat mat_from_py(const StrMat& rows) {
    if (rows.empty())
        throw InputError("empty matrix");
    Mat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw InputError("ragged matrix");
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = parse_rational(rows[i][j]);
    }
    return m;
}

StrMat mat_to_py(const Mat& m) {
    StrMat rows(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            rows[i][j] = to_string(m.at(i, j));
    return rows;
}

std::vector<SlElement> points_from_json_text(const std::string& text, std::size_t n) {
    if (text.empty()) {
        std::vector<SlElement> pts;
        for (std::size_t k = 0; k < n * n - 1; ++k)
            pts.push_back(basis_element(n, k));
        return pts;
    }
    Json j = Json::parse(text);
    std::vector<SlElement> pts;
    for (const auto& item : j)
        pts.push_back(sl_from_json(item));
    return pts;
}

} // namespace

PYBIND11_MODULE(_locaut, m) {
    m.doc() = "Exact certificates for local automorphisms of sl_n";

    m.def("det", [](const StrMat& a) { return to_string(det(mat_from_py(a))); });
    m.def("rank", [](const StrMat& a) { return rank(mat_from_py(a)); });
    m.def("inverse", [](const StrMat& a) { return mat_to_py(inverse(mat_from_py(a))); });
    m.def("charpoly", [](const StrMat& a) { return charpoly(mat_from_py(a)).str(); });
    m.def("invariant_factors", [](const StrMat& a) {
        std::vector<std::string> out;
        for (const auto& f : invariant_factors(mat_from_py(a)))
            out.push_back(f.str());
        return out;
    });

    m.def("bracket", [](std::size_t n, const std::vector<std::string>& x,
                        const std::vector<std::string>& y) {
        SlElement a{n, {}}, b{n, {}};
        for (const auto& c : x)
            a.coords.push_back(parse_rational(c));
        for (const auto& c : y)
            b.coords.push_back(parse_rational(c));
        std::vector<std::string> out;
        for (const auto& c : bracket(a, b).coords)
            out.push_back(to_string(c));
        return out;
    });

    m.def("is_similar", [](const StrMat& x, const StrMat& y) {
        return is_similar(mat_from_py(x), mat_from_py(y));
    });
    m.def(
        "similarity_witness",
        [](const StrMat& x, const StrMat& y, std::size_t budget, unsigned seed) {
            auto result = similarity_witness(mat_from_py(x), mat_from_py(y),
                                             SearchBudget{budget, seed});
            Json out;
            out["verdict"] = result.status == WitnessStatus::Found ? "similar"
                             : result.status == WitnessStatus::NotSimilar
                                 ? "not similar"
                                 : "budget exhausted";
            out["witness"] = result.witness
                                 ? Json{{"T", mat_to_json(result.witness->T)}}
                                 : Json(nullptr);
            return out.dump();
        },
        py::arg("x"), py::arg("y"), py::arg("budget") = 1000, py::arg("seed") = 0);

    m.def("classify_sl2", [](const std::string& map_json) {
        LinMap map = linmap_from_json(Json::parse(map_json));
        switch (sl2_classify(map)) {
        case Sl2Verdict::Automorphism:
            return std::string("automorphism");
        case Sl2Verdict::AntiAutomorphism:
            return std::string("anti-automorphism");
        default:
            return std::string("not a local automorphism");
        }
    });

    m.def(
        "certify",
        [](const std::string& map_json, const std::string& points_json,
           std::size_t budget, unsigned seed) {
            LinMap map = linmap_from_json(Json::parse(map_json));
            auto points = points_from_json_text(points_json, map.n);
            auto report = certify_on_points(map, points, SearchBudget{budget, seed});
            return certify_report_to_json(report, seed).dump();
        },
        py::arg("map_json"), py::arg("points_json") = std::string(),
        py::arg("budget") = 1000, py::arg("seed") = 0);

    m.def(
        "refute",
        [](const std::string& map_json, std::size_t budget, unsigned seed) {
            LinMap map = linmap_from_json(Json::parse(map_json));
            auto r = refute_search(map, budget, SearchBudget{1000, seed});
            Json out;
            out["verdict"] = r ? "not a local automorphism" : "inconclusive";
            out["refutation"] = r ? refutation_to_json(*r) : Json(nullptr);
            out["seed"] = seed;
            return out.dump();
        },
        py::arg("map_json"), py::arg("budget") = 1000, py::arg("seed") = 0);

    m.def(
        "counterexample",
        [](std::size_t n, const std::string& alpha) {
            DeltaAlphaSpec spec(n, parse_rational(alpha));
            LinMap delta = build_delta_alpha(spec);
            std::vector<SlElement> pts;
            for (std::size_t k = 0; k < n * n - 1; ++k)
                pts.push_back(basis_element(n, k));
            auto basis_report = certify_on_points(delta, pts);
            auto refutation = refute_delta_alpha(spec);
            Json out;
            out["n"] = n;
            out["alpha"] = to_string(spec.alpha);
            out["identities_verified"] = verify_identities(spec);
            out["basis_certified"] =
                basis_report.verdict == SetVerdict::CertifiedOnSet;
            out["rank_of_delta_squared_image"] = refutation.delta_squared_rank;
            out["direct_refutation_point"] =
                refutation.direct ? sl_to_json(refutation.direct->x) : Json(nullptr);
            return out.dump();
        },
        py::arg("n") = 3, py::arg("alpha") = std::string("1"));
}
