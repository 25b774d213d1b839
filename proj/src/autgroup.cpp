#include "locaut/autgroup.hpp"

#include "locaut/simwit.hpp"

namespace locaut {

namespace {

SignedAuto make_form(Mat a, int sign, Twist twist) {
    if (!a.is_square())
        throw DimensionError("SignedAuto: A must be square");
    if (det(a) == 0)
        throw SingularMatrixError("SignedAuto: A must be invertible");
    return SignedAuto{a.rows(), sign, twist, std::move(a)};
}

// Scale so the first nonzero entry (row-major) is 1. Conjugation is
// scale-invariant in A, so this canonicalizes without changing the action.
Mat normalize_conjugator(const Mat& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0)
                return a * (Rational(1) / a.at(i, j));
    return a;
}

} // namespace

SignedAuto make_inner(Mat a) { return make_form(std::move(a), +1, Twist::Identity); }
SignedAuto make_outer(Mat a) { return make_form(std::move(a), -1, Twist::Transpose); }
SignedAuto make_anti(Mat a) { return make_form(std::move(a), +1, Twist::Transpose); }
SignedAuto make_neg_inner(Mat a) { return make_form(std::move(a), -1, Twist::Identity); }

SlElement LinMap::operator()(const SlElement& x) const {
    if (x.n != n)
        throw DimensionError("LinMap: sl_n size mismatch");
    SlElement y{n, std::vector<Rational>(x.coords.size())};
    for (std::size_t i = 0; i < y.coords.size(); ++i)
        for (std::size_t j = 0; j < x.coords.size(); ++j)
            if (M.at(i, j) != 0 && x.coords[j] != 0)
                y.coords[i] += M.at(i, j) * x.coords[j];
    return y;
}

SlElement apply(const SignedAuto& phi, const SlElement& x) {
    if (phi.n != x.n)
        throw DimensionError("apply: sl_n size mismatch");
    Mat xm = to_matrix(x);
    if (phi.twist == Twist::Transpose)
        xm = xm.transposed();
    Mat image = inverse(phi.A) * xm * phi.A;
    if (phi.sign < 0)
        image = -image;
    return to_coords(image, phi.n);
}

SignedAuto compose(const SignedAuto& phi, const SignedAuto& psi) {
    if (phi.n != psi.n)
        throw DimensionError("compose: sl_n size mismatch");
    int sign = phi.sign * psi.sign;
    if (phi.twist == Twist::Identity)
        return SignedAuto{phi.n, sign, psi.twist, psi.A * phi.A};
    // phi transposes: (A2^{-1} X^t A2)^T = A2^T X^{t'} (A2^T)^{-1}.
    Twist twist = psi.twist == Twist::Identity ? Twist::Transpose : Twist::Identity;
    return SignedAuto{phi.n, sign, twist, inverse(psi.A.transposed()) * phi.A};
}

SignedAuto inverse_auto(const SignedAuto& phi) {
    if (phi.twist == Twist::Identity)
        return SignedAuto{phi.n, phi.sign, phi.twist, inverse(phi.A)};
    return SignedAuto{phi.n, phi.sign, phi.twist, phi.A.transposed()};
}

LinMap induced_matrix(const SignedAuto& phi) {
    const std::size_t d = phi.n * phi.n - 1;
    Mat m(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        SlElement image = apply(phi, basis_element(phi.n, k));
        for (std::size_t i = 0; i < d; ++i)
            m.at(i, k) = image.coords[i];
    }
    return LinMap{phi.n, std::move(m)};
}

MorphismVerdict check_bracket_morphism(const LinMap& map) {
    const std::size_t d = map.n * map.n - 1;
    if (map.M.rows() != d || map.M.cols() != d)
        throw DimensionError("LinMap matrix has wrong size");
    if (det(map.M) == 0)
        return MorphismVerdict::Neither;
    std::vector<SlElement> images;
    images.reserve(d);
    for (std::size_t k = 0; k < d; ++k)
        images.push_back(map(basis_element(map.n, k)));
    bool direct = true, reversed = true;
    for (std::size_t i = 0; i < d && (direct || reversed); ++i)
        for (std::size_t j = i + 1; j < d && (direct || reversed); ++j) {
            SlElement lhs = map(basis_bracket(map.n, i, j));
            SlElement rhs = bracket(images[i], images[j]);
            if (lhs != rhs)
                direct = false;
            if (lhs != rhs * Rational(-1))
                reversed = false;
        }
    if (direct)
        return MorphismVerdict::Automorphism;
    if (reversed)
        return MorphismVerdict::AntiAutomorphism;
    return MorphismVerdict::Neither;
}

namespace {

// Solves L(b) = sign * T^{-1} b^twist T for invertible T across all basis
// elements, i.e. the joint Sylvester system Y_b T = T (sign * b^twist).
std::optional<Mat> solve_conjugator(const LinMap& map, int sign, Twist twist) {
    const std::size_t n = map.n;
    const std::size_t d = n * n - 1;
    Mat system(d * n * n, n * n);
    for (std::size_t k = 0; k < d; ++k) {
        Mat y = to_matrix(map(basis_element(n, k)));
        Mat b = basis_matrix(n, k);
        if (twist == Twist::Transpose)
            b = b.transposed();
        if (sign < 0)
            b = -b;
        // (Y E_pq - E_pq B)_{ij} = Y_{ip} [j=q] - [i=p] B_{qj}
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                for (std::size_t i = 0; i < n; ++i)
                    system.at(k * n * n + i * n + q, p * n + q) += y.at(i, p);
                for (std::size_t j = 0; j < n; ++j)
                    system.at(k * n * n + p * n + j, p * n + q) -= b.at(q, j);
            }
    }
    auto kernel = kernel_basis(system);
    std::vector<Mat> candidates;
    for (const auto& v : kernel) {
        Mat t(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                t.at(i, j) = v[i * n + j];
        candidates.push_back(std::move(t));
    }
    return invertible_in_span(candidates);
}

} // namespace

std::optional<SignedAuto> recognize(const LinMap& map) {
    return recognize(map, check_bracket_morphism(map));
}

std::optional<SignedAuto> recognize(const LinMap& map, MorphismVerdict verdict) {
    if (verdict == MorphismVerdict::Neither)
        return std::nullopt;
    std::vector<std::pair<int, Twist>> forms;
    if (verdict == MorphismVerdict::Automorphism) {
        forms.push_back({+1, Twist::Identity});
        if (map.n >= 3)
            forms.push_back({-1, Twist::Transpose});
    } else {
        forms.push_back({-1, Twist::Identity});
        if (map.n >= 3)
            forms.push_back({+1, Twist::Transpose});
    }
    for (auto [sign, twist] : forms) {
        // The system solves for T = A^{-1}: L(b) = T b^twist T^{-1}.
        if (auto t = solve_conjugator(map, sign, twist)) {
            SignedAuto phi{map.n, sign, twist, normalize_conjugator(inverse(*t))};
            if (induced_matrix(phi).M == map.M)
                return phi;
        }
    }
    return std::nullopt;
}

} // namespace locaut
