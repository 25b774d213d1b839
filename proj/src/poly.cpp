#include "locaut/poly.hpp"

#include <sstream>

namespace locaut {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const Rational& Poly::leading() const {
    if (coeffs_.empty())
        throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rational Poly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Poly Poly::operator+(const Poly& other) const {
    std::vector<Rational> v(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = coeff(i) + other.coeff(i);
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator-() const {
    std::vector<Rational> v(coeffs_);
    for (auto& c : v)
        c = -c;
    return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& other) const {
    if (is_zero() || other.is_zero())
        return Poly();
    std::vector<Rational> v(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * other.coeffs_[j];
    return Poly(std::move(v));
}

Poly Poly::operator*(const Rational& scalar) const {
    std::vector<Rational> v(coeffs_);
    for (auto& c : v)
        c *= scalar;
    return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero())
        throw std::domain_error("polynomial division by zero");
    Poly rem = *this;
    if (rem.degree() < divisor.degree())
        return {Poly(), rem};
    std::vector<Rational> q(rem.coeffs_.size() - divisor.coeffs_.size() + 1);
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        std::size_t shift = rem.coeffs_.size() - divisor.coeffs_.size();
        Rational factor = rem.leading() / divisor.leading();
        q[shift] = factor;
        rem = rem - Poly::monomial(factor, shift) * divisor;
    }
    return {Poly(std::move(q)), rem};
}

bool Poly::divisible_by(const Poly& divisor) const {
    return divmod(divisor).second.is_zero();
}

Poly Poly::monic() const {
    if (is_zero())
        return *this;
    return *this * (Rational(1) / leading());
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::string Poly::str() const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational c = coeff(static_cast<std::size_t>(k));
        if (c == 0)
            continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0 || mag != 1)
            out << to_string(mag);
        if (k > 0) {
            out << "x";
            if (k > 1)
                out << "^" << k;
        }
    }
    return out.str();
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

} // namespace locaut
