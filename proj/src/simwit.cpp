#include "locaut/simwit.hpp"

#include <random>

namespace locaut {

bool is_similar(const Mat& x, const Mat& y) {
    if (!x.is_square() || !y.is_square())
        throw DimensionError("is_similar: non-square input");
    if (x.rows() != y.rows())
        throw DimensionError("is_similar: size mismatch");
    return invariant_factors(x) == invariant_factors(y);
}

namespace {

Mat combine(const std::vector<Mat>& vectors, const std::vector<Rational>& coeffs) {
    Mat acc(vectors[0].rows(), vectors[0].cols());
    for (std::size_t k = 0; k < vectors.size(); ++k)
        if (coeffs[k] != 0)
            acc = acc + vectors[k] * coeffs[k];
    return acc;
}

} // namespace

std::optional<Mat> invertible_in_span(const std::vector<Mat>& vectors,
                                      const SearchBudget& budget) {
    if (vectors.empty())
        return std::nullopt;
    for (const auto& v : vectors)
        if (det(v) != 0)
            return v;
    const std::size_t k = vectors.size();
    if (k >= 2 && k <= 4) {
        static const Rational small[] = {-2, -1, 1, 2};
        std::vector<std::size_t> odometer(k, 0);
        std::vector<Rational> coeffs(k);
        for (;;) {
            for (std::size_t i = 0; i < k; ++i)
                coeffs[i] = small[odometer[i]];
            Mat cand = combine(vectors, coeffs);
            if (det(cand) != 0)
                return cand;
            std::size_t pos = 0;
            while (pos < k && ++odometer[pos] == 4)
                odometer[pos++] = 0;
            if (pos == k)
                break;
        }
    }
    std::mt19937 rng(budget.seed);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::vector<Rational> coeffs(k);
    for (std::size_t draw = 0; draw < budget.random_draws; ++draw) {
        for (auto& c : coeffs)
            c = coeff(rng);
        Mat cand = combine(vectors, coeffs);
        if (!cand.is_zero() && det(cand) != 0)
            return cand;
    }
    return std::nullopt;
}

WitnessResult similarity_witness(const Mat& x, const Mat& y,
                                 const SearchBudget& budget) {
    if (!x.is_square() || !y.is_square() || x.rows() != y.rows())
        throw DimensionError("similarity_witness: size mismatch");
    // Kernel of the Sylvester operator T -> XT - TY, unknowns row-major.
    const std::size_t n = x.rows();
    Mat sylvester(n * n, n * n);
    // (X E_pq - E_pq Y)_{ij} = X_{ip} [j=q] - [i=p] Y_{qj}
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            for (std::size_t i = 0; i < n; ++i)
                sylvester.at(i * n + q, p * n + q) += x.at(i, p);
            for (std::size_t j = 0; j < n; ++j)
                sylvester.at(p * n + j, p * n + q) -= y.at(q, j);
        }
    auto kernel = kernel_basis(sylvester);
    std::vector<Mat> intertwiners;
    for (const auto& v : kernel) {
        Mat t(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                t.at(i, j) = v[i * n + j];
        intertwiners.push_back(std::move(t));
    }
    // Any invertible intertwiner proves similarity outright, so the decision
    // by invariant factors is only needed when the deterministic tiers come
    // up empty; the random tier runs only for pairs known to be similar.
    if (!intertwiners.empty())
        if (auto t = invertible_in_span(intertwiners, SearchBudget{0, budget.seed}))
            return {WitnessStatus::Found, SimilarityWitness{*t}};
    if (!is_similar(x, y))
        return {WitnessStatus::NotSimilar, std::nullopt};
    if (!intertwiners.empty())
        if (auto t = invertible_in_span(intertwiners, budget))
            return {WitnessStatus::Found, SimilarityWitness{*t}};
    return {WitnessStatus::BudgetExhausted, std::nullopt};
}

bool verify_witness(const Mat& x, const Mat& y, const SimilarityWitness& w) {
    if (w.T.rows() != x.rows() || w.T.cols() != y.rows())
        return false;
    return det(w.T) != 0 && x * w.T == w.T * y;
}

} // namespace locaut
