#ifndef LOCAUT_MAT_HPP
#define LOCAUT_MAT_HPP

#include "locaut/poly.hpp"
#include "locaut/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace locaut {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularMatrixError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Dense row-major rational matrix.
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols);
    Mat(std::initializer_list<std::initializer_list<Rational>> rows);
    static Mat identity(std::size_t n);
    /// n x n matrix unit E_ij (0-based indices).
    static Mat unit(std::size_t n, std::size_t i, std::size_t j);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    const Rational& at(std::size_t i, std::size_t j) const;
    Rational& at(std::size_t i, std::size_t j);

    Mat operator+(const Mat& other) const;
    Mat operator-(const Mat& other) const;
    Mat operator*(const Mat& other) const;
    Mat operator*(const Rational& scalar) const;
    Mat operator-() const;
    bool operator==(const Mat& other) const = default;

    Mat transposed() const;
    Rational trace() const;
    std::string str() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> entries_;
};

Rational det(const Mat& m);
std::size_t rank(const Mat& m);
/// Throws SingularMatrixError when det = 0.
Mat inverse(const Mat& m);
/// Basis of the right null space; empty iff m is injective.
std::vector<std::vector<Rational>> kernel_basis(const Mat& m);
/// Solves m * x = rhs; empty optional shape signalled by throwing is avoided:
/// returns true and fills x when consistent.
bool solve(const Mat& m, const std::vector<Rational>& rhs, std::vector<Rational>& x);
/// det(xI - m), monic.
Poly charpoly(const Mat& m);
/// Nontrivial invariant factors of xI - m, monic, each dividing the next.
/// A complete similarity invariant over the rationals.
std::vector<Poly> invariant_factors(const Mat& m);

} // namespace locaut

#endif
