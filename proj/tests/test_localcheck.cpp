#include "locaut/localcheck.hpp"

#include "locaut/counterexample.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace locaut;

namespace {

SlElement sl2(int e, int f, int h) {
    return SlElement{2, {Rational(e), Rational(f), Rational(h)}};
}

LinMap transpose_map(std::size_t n) {
    const std::size_t d = n * n - 1;
    Mat m(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        SlElement image = to_coords(basis_matrix(n, k).transposed(), n);
        for (std::size_t i = 0; i < d; ++i)
            m.at(i, k) = image.coords[i];
    }
    return LinMap{n, std::move(m)};
}

LinMap delta1(const Rational& lambda) {
    Mat m(3, 3);
    m.at(0, 0) = lambda;
    m.at(1, 1) = Rational(1) / lambda;
    m.at(2, 2) = 1;
    return LinMap{2, std::move(m)};
}

LinMap delta2(const Rational& mu) {
    Mat m(3, 3);
    m.at(1, 0) = mu;
    m.at(0, 1) = Rational(1) / mu;
    m.at(2, 2) = 1;
    return LinMap{2, std::move(m)};
}

std::vector<SlElement> basis_points(std::size_t n) {
    std::vector<SlElement> pts;
    for (std::size_t k = 0; k < n * n - 1; ++k)
        pts.push_back(basis_element(n, k));
    return pts;
}

} // namespace

TEST_CASE("point_witness certifies the permuting map on its moved element") {
    DeltaAlphaSpec spec(3, 1);
    LinMap delta = build_delta_alpha(spec);
    SlElement e12 = to_coords(Mat::unit(3, 0, 1), 3);
    auto outcome = point_witness(delta, e12);
    auto* cert = std::get_if<PointCertificate>(&outcome);
    REQUIRE(cert);
    CHECK(cert->witness.is_automorphism_form());
    CHECK(apply(cert->witness, e12) == delta(e12));
}

TEST_CASE("point_witness certifies the transpose map everywhere sampled") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + trial % 3;
        LinMap t = transpose_map(n);
        SlElement x = testutil::random_sl_element(rng, n);
        auto outcome = point_witness(t, x);
        auto* cert = std::get_if<PointCertificate>(&outcome);
        REQUIRE(cert);
        CHECK(apply(cert->witness, x) == t(x));
    }
}

TEST_CASE("point_witness refutes a scaled identity") {
    LinMap twice{2, Mat::identity(3) * Rational(2)};
    auto outcome = point_witness(twice, sl2(0, 0, 1));
    auto* ref = std::get_if<Refutation>(&outcome);
    REQUIRE(ref);
    // x^2 - 4 against x^2 - 1.
    CHECK(ref->image_factors == std::vector<Poly>{Poly({-4, 0, 1})});
    CHECK(ref->inner_factors == std::vector<Poly>{Poly({-1, 0, 1})});
    CHECK_FALSE(ref->outer_factors);
}

TEST_CASE("certify_on_points") {
    DeltaAlphaSpec spec(3, 1);
    LinMap delta = build_delta_alpha(spec);
    auto basis_report = certify_on_points(delta, basis_points(3));
    CHECK(basis_report.verdict == SetVerdict::CertifiedOnSet);
    CHECK(basis_report.certificates.size() == 8);

    std::mt19937 rng(67);
    LinMap inner = induced_matrix(make_inner(testutil::random_invertible(rng, 3)));
    auto member_report = certify_on_points(inner, basis_points(3));
    CHECK(member_report.verdict == SetVerdict::CertifiedOnSet);

    // Adding the two-unit sum exposes the counterexample.
    auto points = basis_points(3);
    points.push_back(to_coords(Mat::unit(3, 0, 1) + Mat::unit(3, 2, 1), 3));
    auto full_report = certify_on_points(delta, points);
    CHECK(full_report.verdict == SetVerdict::NotLocalAutomorphism);
    REQUIRE(full_report.refutations.size() == 1);
    CHECK(full_report.refutations[0].x == points.back());
}

TEST_CASE("sl2_classify") {
    CHECK(sl2_classify(delta1(5)) == Sl2Verdict::Automorphism);
    CHECK(sl2_classify(delta2(3)) == Sl2Verdict::AntiAutomorphism);
    CHECK(sl2_classify(LinMap{2, Mat::identity(3) * Rational(2)}) ==
          Sl2Verdict::NotLocal);
    CHECK_THROWS_AS(sl2_classify(LinMap{3, Mat::identity(8)}), std::domain_error);
}

TEST_CASE("det_preserving_sl2") {
    CHECK(det_preserving_sl2(delta2(3)));
    CHECK(det_preserving_sl2(LinMap{2, Mat::identity(3) * Rational(-1)}));
    CHECK_FALSE(det_preserving_sl2(LinMap{2, Mat::identity(3) * Rational(2)}));
}

TEST_CASE("classification and trace-form preservation agree on samples") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        LinMap map{2, testutil::random_matrix(rng, 3, 3, -3, 3)};
        if (det(map.M) == 0)
            continue;
        CHECK((sl2_classify(map) != Sl2Verdict::NotLocal) == det_preserving_sl2(map));
    }
    for (int trial = 0; trial < 10; ++trial) {
        Mat a = testutil::random_invertible(rng, 2);
        CHECK(det_preserving_sl2(induced_matrix(make_inner(a))));
        CHECK(det_preserving_sl2(induced_matrix(make_anti(a))));
    }
}

TEST_CASE("refute_search") {
    DeltaAlphaSpec spec(3, 1);
    auto refutation = refute_search(build_delta_alpha(spec), 0);
    REQUIRE(refutation);
    // Found in the two-term tier: a unit plus another unit.
    Mat point = to_matrix(refutation->x);
    CHECK(rank(point) <= 2);
    CHECK_FALSE(is_similar(point, to_matrix(refutation->image)));
    CHECK_FALSE(is_similar(-point.transposed(), to_matrix(refutation->image)));

    CHECK_FALSE(refute_search(transpose_map(3), 0));

    std::mt19937 rng(73);
    LinMap inner = induced_matrix(make_inner(testutil::random_invertible(rng, 2)));
    CHECK_FALSE(refute_search(inner, 20));
}

TEST_CASE("group closure of certified sl2 members") {
    std::mt19937 rng(79);
    for (int trial = 0; trial < 15; ++trial) {
        Mat a = testutil::random_invertible(rng, 2);
        Mat b = testutil::random_invertible(rng, 2);
        LinMap phi = induced_matrix(trial % 2 ? make_inner(a) : make_anti(a));
        LinMap psi = induced_matrix(trial % 3 ? make_inner(b) : make_neg_inner(b));
        CHECK(sl2_classify(phi) != Sl2Verdict::NotLocal);
        CHECK(sl2_classify(LinMap{2, phi.M * psi.M}) != Sl2Verdict::NotLocal);
        CHECK(sl2_classify(LinMap{2, inverse(phi.M)}) != Sl2Verdict::NotLocal);
    }
}
