#ifndef LOCAUT_SIMWIT_HPP
#define LOCAUT_SIMWIT_HPP

#include "locaut/mat.hpp"

#include <optional>

namespace locaut {

/// Invertible T with X * T = T * Y, certifying X ~ Y.
struct SimilarityWitness {
    Mat T;
};

struct SearchBudget {
    std::size_t random_draws = 1000;
    unsigned seed = 0;
};

/// Complete similarity test over the rationals: equality of the nontrivial
/// invariant factors of xI - X and xI - Y.
bool is_similar(const Mat& x, const Mat& y);

/// Deterministic search for an invertible linear combination of the given
/// square matrices: each vector alone, then all {-2,-1,1,2} coefficient
/// tuples (spans of dimension <= 4), then seeded random draws with
/// coefficients in [-9, 9].
std::optional<Mat> invertible_in_span(const std::vector<Mat>& vectors,
                                      const SearchBudget& budget = {});

enum class WitnessStatus { Found, NotSimilar, BudgetExhausted };

struct WitnessResult {
    WitnessStatus status;
    std::optional<SimilarityWitness> witness;
};

/// NotSimilar is definitive (invariant factors differ). Over the rationals a
/// witness exists whenever is_similar holds, so BudgetExhausted only reports
/// that the invertibility search gave up, never non-similarity.
WitnessResult similarity_witness(const Mat& x, const Mat& y,
                                 const SearchBudget& budget = {});

bool verify_witness(const Mat& x, const Mat& y, const SimilarityWitness& w);

} // namespace locaut

#endif
