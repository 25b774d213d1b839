#ifndef LOCAUT_COUNTEREXAMPLE_HPP
#define LOCAUT_COUNTEREXAMPLE_HPP

#include "locaut/localcheck.hpp"

#include <array>

namespace locaut {

/// Parameters for the permuting map on sl_n (n >= 3) that conjugates on
/// every basis element yet fails to be a local automorphism.
struct DeltaAlphaSpec {
    std::size_t n;
    Rational alpha;

    DeltaAlphaSpec(std::size_t n_, Rational alpha_);
};

/// E_{1,n-1} -> E_{n1} + alpha E_{n,n-1}; E_{1n} -> E_{1,n-1};
/// E_{n1} -> E_{n,n-1}; E_{n,n-1} -> E_{1n}; identity elsewhere
/// (including the Cartan elements).
LinMap build_delta_alpha(const DeltaAlphaSpec& spec);

/// The four conjugating matrices certifying the map on its moved basis
/// elements, exactly as constructed from matrix units.
std::array<Mat, 4> paper_witnesses(const DeltaAlphaSpec& spec);

/// Checks the four intertwining equalities b_i T_i = T_i image_i and the
/// conjugation forms image_i = T_i^{-1} b_i T_i.
bool verify_identities(const DeltaAlphaSpec& spec);

/// Two independent refutation routes, bundled.
struct DeltaAlphaRefutation {
    Mat delta_squared_image;        // the map applied twice to E_{1,n-1}
    std::size_t delta_squared_rank; // 2, against rank 1 of E_{1,n-1}
    std::size_t moved_rank;         // rank of E_{1,n-1}
    std::optional<Refutation> direct; // point found by refute_search
};

DeltaAlphaRefutation refute_delta_alpha(const DeltaAlphaSpec& spec,
                                        const SearchBudget& budget = {});

} // namespace locaut

#endif
