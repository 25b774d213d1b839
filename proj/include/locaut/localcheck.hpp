#ifndef LOCAUT_LOCALCHECK_HPP
#define LOCAUT_LOCALCHECK_HPP

#include "locaut/autgroup.hpp"
#include "locaut/simwit.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace locaut {

/// An automorphism agreeing with the map at one point.
struct PointCertificate {
    SlElement x;
    SignedAuto witness;
};

/// Invariant-factor evidence that no automorphism can agree at x:
/// the image is similar neither to x nor (n >= 3) to -x^T.
struct Refutation {
    SlElement x;
    SlElement image;
    std::vector<Poly> image_factors;
    std::vector<Poly> inner_factors;                // of to_matrix(x)
    std::optional<std::vector<Poly>> outer_factors; // of -to_matrix(x)^T, n >= 3
};

struct BudgetExhausted {
    SlElement x;
};

using PointOutcome = std::variant<PointCertificate, Refutation, BudgetExhausted>;

/// Certifies or refutes "the map acts at x as an automorphism". Inner form
/// first; the outer form -A^{-1}X^TA only for n >= 3 (for sl_2 every
/// automorphism is a conjugation, so the twisted form adds nothing).
PointOutcome point_witness(const LinMap& map, const SlElement& x,
                           const SearchBudget& budget = {});

enum class SetVerdict { CertifiedOnSet, NotLocalAutomorphism, Inconclusive };

struct CertifyReport {
    SetVerdict verdict;
    std::vector<PointCertificate> certificates;
    std::vector<Refutation> refutations;
    std::vector<SlElement> budget_exhausted;
};

CertifyReport certify_on_points(const LinMap& map, const std::vector<SlElement>& points,
                                const SearchBudget& budget = {});

enum class Sl2Verdict { Automorphism, AntiAutomorphism, NotLocal };

/// Complete classification for sl_2: by the coincidence of local
/// automorphisms with signed automorphisms, the bracket-morphism check
/// decides membership.
Sl2Verdict sl2_classify(const LinMap& map);

/// True iff the map preserves the trace form on all basis pairs; for
/// trace-zero 2x2 matrices this is exactly pointwise characteristic
/// polynomial preservation.
bool det_preserving_sl2(const LinMap& map);

/// Deterministic refutation scan: basis elements, then sums/differences of
/// two, then {-1,1} combinations of three, then up to random_points seeded
/// random points. nullopt is inconclusive, never a certification.
std::optional<Refutation> refute_search(const LinMap& map, std::size_t random_points = 1000,
                                        const SearchBudget& budget = {});

} // namespace locaut

#endif
