#ifndef LOCAUT_POLY_HPP
#define LOCAUT_POLY_HPP

#include "locaut/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace locaut {

/// Univariate polynomial with rational coefficients, lowest degree first.
/// The zero polynomial is canonically the empty coefficient vector, so
/// the invariant "leading coefficient nonzero" holds structurally.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    static Poly constant(const Rational& c);
    /// Monomial c * x^k.
    static Poly monomial(const Rational& c, std::size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& leading() const;
    Rational coeff(std::size_t k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    Poly operator*(const Rational& scalar) const;
    Poly operator-() const;
    bool operator==(const Poly& other) const = default;

    /// Quotient and remainder with deg(rem) < deg(divisor).
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    bool divisible_by(const Poly& divisor) const;
    Poly monic() const;

    Rational eval(const Rational& x) const;
    /// Rendered like "x^2 - 1", variable fixed to x.
    std::string str() const;

  private:
    void normalize();
    std::vector<Rational> coeffs_;
};

/// Monic gcd, zero if both inputs are zero.
Poly poly_gcd(Poly a, Poly b);

} // namespace locaut

#endif
