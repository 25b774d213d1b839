#include "locaut/counterexample.hpp"

namespace locaut {

DeltaAlphaSpec::DeltaAlphaSpec(std::size_t n_, Rational alpha_)
    : n(n_), alpha(std::move(alpha_)) {
    if (n < 3)
        throw std::domain_error("delta_alpha requires n >= 3");
    if (alpha == 0)
        throw std::domain_error("delta_alpha requires alpha != 0");
}

namespace {

Mat eunit(std::size_t n, std::size_t i, std::size_t j) {
    return Mat::unit(n, i - 1, j - 1); // 1-based
}

} // namespace

LinMap build_delta_alpha(const DeltaAlphaSpec& spec) {
    const std::size_t n = spec.n;
    const std::size_t d = n * n - 1;
    const auto idx = basis(n);
    Mat m(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        const auto& b = idx[k];
        Mat image;
        if (!b.cartan && b.i == 1 && b.j == n - 1)
            image = eunit(n, n, 1) + eunit(n, n, n - 1) * spec.alpha;
        else if (!b.cartan && b.i == 1 && b.j == n)
            image = eunit(n, 1, n - 1);
        else if (!b.cartan && b.i == n && b.j == 1)
            image = eunit(n, n, n - 1);
        else if (!b.cartan && b.i == n && b.j == n - 1)
            image = eunit(n, 1, n);
        else
            image = basis_matrix(n, k);
        SlElement coords = to_coords(image, n);
        for (std::size_t r = 0; r < d; ++r)
            m.at(r, k) = coords.coords[r];
    }
    return LinMap{n, std::move(m)};
}

std::array<Mat, 4> paper_witnesses(const DeltaAlphaSpec& spec) {
    const std::size_t n = spec.n;
    const Mat id = Mat::identity(n);
    Mat t1 = id + eunit(n, 1, n) + eunit(n, n - 1, 1) +
             eunit(n, n - 1, n - 1) * (spec.alpha - 1) + eunit(n, n, n - 1) -
             eunit(n, n, n);
    Mat t2 = id - eunit(n, n - 1, n - 1) - eunit(n, n, n) + eunit(n, n - 1, n) +
             eunit(n, n, n - 1);
    Mat t3 = id - eunit(n, 1, 1) + eunit(n, 1, n - 1) + eunit(n, n - 1, 1) -
             eunit(n, n - 1, n - 1);
    Mat t4 = id - eunit(n, 1, 1) + eunit(n, 1, n - 1) - eunit(n, n - 1, n - 1) +
             eunit(n, n - 1, n) + eunit(n, n, 1) - eunit(n, n, n);
    return {std::move(t1), std::move(t2), std::move(t3), std::move(t4)};
}

bool verify_identities(const DeltaAlphaSpec& spec) {
    const std::size_t n = spec.n;
    auto ts = paper_witnesses(spec);
    const std::array<Mat, 4> moved = {
        eunit(n, 1, n - 1), eunit(n, 1, n), eunit(n, n, 1), eunit(n, n, n - 1)};
    const std::array<Mat, 4> images = {
        eunit(n, n, 1) + eunit(n, n, n - 1) * spec.alpha, eunit(n, 1, n - 1),
        eunit(n, n, n - 1), eunit(n, 1, n)};
    for (std::size_t k = 0; k < 4; ++k) {
        if (det(ts[k]) == 0)
            return false;
        if (moved[k] * ts[k] != ts[k] * images[k])
            return false;
        if (inverse(ts[k]) * moved[k] * ts[k] != images[k])
            return false;
    }
    return true;
}

DeltaAlphaRefutation refute_delta_alpha(const DeltaAlphaSpec& spec,
                                        const SearchBudget& budget) {
    const std::size_t n = spec.n;
    LinMap delta = build_delta_alpha(spec);
    SlElement moved = to_coords(eunit(n, 1, n - 1), n);
    Mat twice = to_matrix(delta(delta(moved)));
    DeltaAlphaRefutation out{twice, rank(twice), rank(eunit(n, 1, n - 1)),
                             refute_search(delta, 0, budget)};
    return out;
}

} // namespace locaut
