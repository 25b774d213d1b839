#include "locaut/json_io.hpp"

namespace locaut {

namespace {

Rational rational_from_json(const Json& j) {
    if (!j.is_string())
        throw InputError("expected rational string, got " + j.dump());
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

Json factors_to_json(const std::vector<Poly>& fs) {
    Json out = Json::array();
    for (const auto& f : fs)
        out.push_back(f.str());
    return out;
}

} // namespace

Json mat_to_json(const Mat& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(to_string(m.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

Mat mat_from_json(const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw InputError("matrix must be a non-empty array of arrays");
    const std::size_t rows = j.size(), cols = j[0].size();
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw InputError("matrix row " + std::to_string(i) + " has wrong length");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(i, c) = rational_from_json(j[i][c]);
    }
    return m;
}

Json sl_to_json(const SlElement& x) {
    Json out;
    out["n"] = x.n;
    Json coords = Json::array();
    for (const auto& c : x.coords)
        coords.push_back(to_string(c));
    out["coords"] = std::move(coords);
    return out;
}

SlElement sl_from_json(const Json& j) {
    if (!j.contains("n") || !j["n"].is_number_unsigned())
        throw InputError("SlElement: missing or invalid \"n\"");
    const std::size_t n = j["n"].get<std::size_t>();
    if (n < 2)
        throw InputError("SlElement: n must be >= 2");
    if (j.contains("matrix")) {
        Mat m = mat_from_json(j["matrix"]);
        if (m.rows() != n || m.cols() != n)
            throw InputError("SlElement: matrix is not n x n");
        if (m.trace() != 0)
            throw InputError("SlElement: matrix has nonzero trace");
        return to_coords(m, n);
    }
    if (!j.contains("coords") || !j["coords"].is_array())
        throw InputError("SlElement: need \"coords\" or \"matrix\"");
    if (j["coords"].size() != n * n - 1)
        throw InputError("SlElement: expected " + std::to_string(n * n - 1) + " coords");
    SlElement x{n, {}};
    for (const auto& c : j["coords"])
        x.coords.push_back(rational_from_json(c));
    return x;
}

Json linmap_to_json(const LinMap& map) {
    Json out;
    out["n"] = map.n;
    out["M"] = mat_to_json(map.M);
    return out;
}

LinMap linmap_from_json(const Json& j) {
    if (!j.contains("n") || !j["n"].is_number_unsigned())
        throw InputError("LinMap: missing or invalid \"n\"");
    const std::size_t n = j["n"].get<std::size_t>();
    if (n < 2)
        throw InputError("LinMap: n must be >= 2");
    if (!j.contains("M"))
        throw InputError("LinMap: missing \"M\"");
    Mat m = mat_from_json(j["M"]);
    const std::size_t d = n * n - 1;
    if (m.rows() != d || m.cols() != d)
        throw InputError("LinMap: M must be " + std::to_string(d) + "x" + std::to_string(d));
    return LinMap{n, std::move(m)};
}

Json signed_auto_to_json(const SignedAuto& phi) {
    Json out;
    out["n"] = phi.n;
    out["sign"] = phi.sign;
    out["twist"] = phi.twist == Twist::Identity ? "id" : "transpose";
    out["A"] = mat_to_json(phi.A);
    return out;
}

SignedAuto signed_auto_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("sign") || !j.contains("twist") || !j.contains("A"))
        throw InputError("SignedAuto: need \"n\", \"sign\", \"twist\", \"A\"");
    const int sign = j["sign"].get<int>();
    if (sign != 1 && sign != -1)
        throw InputError("SignedAuto: sign must be 1 or -1");
    const std::string twist = j["twist"].get<std::string>();
    if (twist != "id" && twist != "transpose")
        throw InputError("SignedAuto: twist must be \"id\" or \"transpose\"");
    Mat a = mat_from_json(j["A"]);
    const std::size_t n = j["n"].get<std::size_t>();
    if (a.rows() != n || a.cols() != n)
        throw InputError("SignedAuto: A is not n x n");
    if (det(a) == 0)
        throw InputError("SignedAuto: A is singular");
    return SignedAuto{n, sign, twist == "id" ? Twist::Identity : Twist::Transpose,
                      std::move(a)};
}

Json refutation_to_json(const Refutation& r) {
    Json out;
    out["point"] = sl_to_json(r.x);
    out["image"] = sl_to_json(r.image);
    Json evidence;
    evidence["image_invariant_factors"] = factors_to_json(r.image_factors);
    evidence["inner_invariant_factors"] = factors_to_json(r.inner_factors);
    if (r.outer_factors)
        evidence["outer_invariant_factors"] = factors_to_json(*r.outer_factors);
    out["evidence"] = std::move(evidence);
    return out;
}

Json certify_report_to_json(const CertifyReport& report, unsigned seed) {
    Json out;
    switch (report.verdict) {
    case SetVerdict::CertifiedOnSet:
        out["verdict"] = "certified-on-set";
        break;
    case SetVerdict::NotLocalAutomorphism:
        out["verdict"] = "not a local automorphism";
        break;
    default:
        out["verdict"] = "inconclusive";
    }
    Json certs = Json::array();
    for (const auto& c : report.certificates) {
        Json item;
        item["point"] = sl_to_json(c.x);
        item["witness"] = signed_auto_to_json(c.witness);
        certs.push_back(std::move(item));
    }
    out["certificates"] = std::move(certs);
    Json refs = Json::array();
    for (const auto& r : report.refutations)
        refs.push_back(refutation_to_json(r));
    out["refutations"] = std::move(refs);
    Json skipped = Json::array();
    for (const auto& p : report.budget_exhausted)
        skipped.push_back(sl_to_json(p));
    out["budget_exhausted"] = std::move(skipped);
    out["seed"] = seed;
    return out;
}

} // namespace locaut
