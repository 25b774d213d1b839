#ifndef LOCAUT_SLN_HPP
#define LOCAUT_SLN_HPP

#include "locaut/mat.hpp"

#include <vector>

namespace locaut {

/// Index into the canonical basis of sl_n: either a matrix unit E_ij (i != j)
/// or a Cartan element h_i = E_ii - E_{i+1,i+1}. 1-based, matching the usual E_{ij} notation.
struct BasisIndex {
    bool cartan;
    std::size_t i; // off-diag row, or Cartan index 1..n-1
    std::size_t j; // off-diag column; unused for Cartan

    bool operator==(const BasisIndex&) const = default;
};

/// Element of sl_n as coordinates in the canonical basis.
/// Order: (e, f, h) for n = 2; for n >= 3 all E_ij lexicographically in
/// (i, j), then h_1..h_{n-1}.
struct SlElement {
    std::size_t n = 0;
    std::vector<Rational> coords;

    std::size_t dim() const { return n * n - 1; }
    bool is_zero() const;
    bool operator==(const SlElement&) const = default;

    SlElement operator+(const SlElement& other) const;
    SlElement operator-(const SlElement& other) const;
    SlElement operator*(const Rational& scalar) const;
};

std::vector<BasisIndex> basis(std::size_t n);
/// Coordinate vector of the k-th basis element.
SlElement basis_element(std::size_t n, std::size_t k);
Mat basis_matrix(std::size_t n, std::size_t k);

Mat to_matrix(const SlElement& x);
/// Inverse chart; m must be n x n with trace exactly zero.
SlElement to_coords(const Mat& m, std::size_t n);

SlElement bracket(const SlElement& x, const SlElement& y);
/// Memoized bracket of the i-th and j-th basis elements.
const SlElement& basis_bracket(std::size_t n, std::size_t i, std::size_t j);
/// Tr(XY), the symmetric invariant bilinear form.
Rational trace_form(const SlElement& x, const SlElement& y);

} // namespace locaut

#endif
