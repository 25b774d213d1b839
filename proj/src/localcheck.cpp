#include "locaut/localcheck.hpp"

#include <random>

namespace locaut {

PointOutcome point_witness(const LinMap& map, const SlElement& x,
                           const SearchBudget& budget) {
    if (map.n != x.n)
        throw DimensionError("point_witness: sl_n size mismatch");
    Mat xm = to_matrix(x);
    Mat y = to_matrix(map(x));
    bool exhausted = false;

    auto inner = similarity_witness(xm, y, budget);
    if (inner.status == WitnessStatus::Found)
        return PointCertificate{x, make_inner(inner.witness->T)};
    exhausted |= inner.status == WitnessStatus::BudgetExhausted;

    if (map.n >= 3) {
        // Outer form: Y = -T^{-1} X^T T, i.e. (-X^T) T = T Y.
        Mat neg_xt = -xm.transposed();
        auto outer = similarity_witness(neg_xt, y, budget);
        if (outer.status == WitnessStatus::Found)
            return PointCertificate{x, make_outer(outer.witness->T)};
        exhausted |= outer.status == WitnessStatus::BudgetExhausted;
    }
    if (exhausted)
        return BudgetExhausted{x};

    Refutation r{x, map(x), invariant_factors(y), invariant_factors(xm), std::nullopt};
    if (map.n >= 3)
        r.outer_factors = invariant_factors(-xm.transposed());
    return r;
}

CertifyReport certify_on_points(const LinMap& map, const std::vector<SlElement>& points,
                                const SearchBudget& budget) {
    CertifyReport report{SetVerdict::CertifiedOnSet, {}, {}, {}};
    for (const auto& p : points) {
        PointOutcome outcome = point_witness(map, p, budget);
        if (auto* cert = std::get_if<PointCertificate>(&outcome))
            report.certificates.push_back(std::move(*cert));
        else if (auto* ref = std::get_if<Refutation>(&outcome))
            report.refutations.push_back(std::move(*ref));
        else
            report.budget_exhausted.push_back(p);
    }
    if (!report.refutations.empty())
        report.verdict = SetVerdict::NotLocalAutomorphism;
    else if (!report.budget_exhausted.empty())
        report.verdict = SetVerdict::Inconclusive;
    return report;
}

Sl2Verdict sl2_classify(const LinMap& map) {
    if (map.n != 2)
        throw std::domain_error("sl2_classify requires n = 2");
    switch (check_bracket_morphism(map)) {
    case MorphismVerdict::Automorphism:
        return Sl2Verdict::Automorphism;
    case MorphismVerdict::AntiAutomorphism:
        return Sl2Verdict::AntiAutomorphism;
    default:
        return Sl2Verdict::NotLocal;
    }
}

bool det_preserving_sl2(const LinMap& map) {
    if (map.n != 2)
        throw std::domain_error("det_preserving_sl2 requires n = 2");
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) {
            SlElement bi = basis_element(2, i), bj = basis_element(2, j);
            if (trace_form(map(bi), map(bj)) != trace_form(bi, bj))
                return false;
        }
    return true;
}

std::optional<Refutation> refute_search(const LinMap& map, std::size_t random_points,
                                        const SearchBudget& budget) {
    const std::size_t d = map.n * map.n - 1;
    auto test = [&](const SlElement& x) -> std::optional<Refutation> {
        PointOutcome outcome = point_witness(map, x, budget);
        if (auto* ref = std::get_if<Refutation>(&outcome))
            return *ref;
        return std::nullopt;
    };

    for (std::size_t i = 0; i < d; ++i)
        if (auto r = test(basis_element(map.n, i)))
            return r;

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (int s : {1, -1}) {
                SlElement x = basis_element(map.n, i) + basis_element(map.n, j) * Rational(s);
                if (auto r = test(x))
                    return r;
            }

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k)
                for (int sj : {1, -1})
                    for (int sk : {1, -1}) {
                        SlElement x = basis_element(map.n, i) +
                                      basis_element(map.n, j) * Rational(sj) +
                                      basis_element(map.n, k) * Rational(sk);
                        if (auto r = test(x))
                            return r;
                    }

    std::mt19937 rng(budget.seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (std::size_t draw = 0; draw < random_points; ++draw) {
        SlElement x{map.n, std::vector<Rational>(d)};
        for (auto& c : x.coords)
            c = coeff(rng);
        if (x.is_zero())
            continue;
        if (auto r = test(x))
            return r;
    }
    return std::nullopt;
}

} // namespace locaut
