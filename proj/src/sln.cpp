#include "locaut/sln.hpp"

#include <mutex>
#include <unordered_map>

namespace locaut {

namespace {

// Basis index lists and basis-pair brackets are requested in tight loops;
// memoize them per n.
const std::vector<BasisIndex>& basis_ref(std::size_t n) {
    static std::mutex mutex;
    static std::unordered_map<std::size_t, std::vector<BasisIndex>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, basis(n)).first;
    return it->second;
}

} // namespace

bool SlElement::is_zero() const {
    for (const auto& c : coords)
        if (c != 0)
            return false;
    return true;
}

SlElement SlElement::operator+(const SlElement& other) const {
    if (n != other.n)
        throw DimensionError("sl_n size mismatch");
    SlElement r = *this;
    for (std::size_t k = 0; k < coords.size(); ++k)
        r.coords[k] += other.coords[k];
    return r;
}

SlElement SlElement::operator-(const SlElement& other) const {
    return *this + other * Rational(-1);
}

SlElement SlElement::operator*(const Rational& scalar) const {
    SlElement r = *this;
    for (auto& c : r.coords)
        c *= scalar;
    return r;
}

std::vector<BasisIndex> basis(std::size_t n) {
    if (n < 2)
        throw std::domain_error("sl_n requires n >= 2");
    std::vector<BasisIndex> b;
    if (n == 2) {
        // (e, f, h), the usual sl_2 ordering.
        b.push_back({false, 1, 2});
        b.push_back({false, 2, 1});
        b.push_back({true, 1, 0});
        return b;
    }
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            if (i != j)
                b.push_back({false, i, j});
    for (std::size_t i = 1; i < n; ++i)
        b.push_back({true, i, 0});
    return b;
}

SlElement basis_element(std::size_t n, std::size_t k) {
    SlElement x{n, std::vector<Rational>(n * n - 1)};
    x.coords.at(k) = 1;
    return x;
}

Mat basis_matrix(std::size_t n, std::size_t k) {
    const BasisIndex b = basis_ref(n).at(k);
    if (!b.cartan)
        return Mat::unit(n, b.i - 1, b.j - 1);
    Mat m(n, n);
    m.at(b.i - 1, b.i - 1) = 1;
    m.at(b.i, b.i) = -1;
    return m;
}

Mat to_matrix(const SlElement& x) {
    const auto& idx = basis_ref(x.n);
    if (x.coords.size() != idx.size())
        throw DimensionError("SlElement coordinate length mismatch");
    Mat m(x.n, x.n);
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const auto& b = idx[k];
        if (b.cartan) {
            m.at(b.i - 1, b.i - 1) += x.coords[k];
            m.at(b.i, b.i) -= x.coords[k];
        } else {
            m.at(b.i - 1, b.j - 1) += x.coords[k];
        }
    }
    return m;
}

SlElement to_coords(const Mat& m, std::size_t n) {
    if (m.rows() != n || m.cols() != n)
        throw DimensionError("to_coords: matrix is not n x n");
    if (m.trace() != 0)
        throw std::domain_error("to_coords: matrix has nonzero trace");
    const auto& idx = basis_ref(n);
    SlElement x{n, std::vector<Rational>(n * n - 1)};
    // Diagonal part: diag = sum c_i h_i with c_i the partial sums of entries.
    std::vector<Rational> partial(n - 1);
    Rational acc = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        acc += m.at(i, i);
        partial[i] = acc;
    }
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const auto& b = idx[k];
        x.coords[k] = b.cartan ? partial[b.i - 1] : m.at(b.i - 1, b.j - 1);
    }
    return x;
}

SlElement bracket(const SlElement& x, const SlElement& y) {
    if (x.n != y.n)
        throw DimensionError("bracket: sl_n size mismatch");
    Mat a = to_matrix(x), b = to_matrix(y);
    return to_coords(a * b - b * a, x.n);
}

const SlElement& basis_bracket(std::size_t n, std::size_t i, std::size_t j) {
    static std::mutex mutex;
    static std::unordered_map<std::size_t, std::vector<SlElement>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        const std::size_t d = n * n - 1;
        std::vector<SlElement> table;
        table.reserve(d * d);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                table.push_back(bracket(basis_element(n, a), basis_element(n, b)));
        it = cache.emplace(n, std::move(table)).first;
    }
    return it->second[i * (n * n - 1) + j];
}

Rational trace_form(const SlElement& x, const SlElement& y) {
    if (x.n != y.n)
        throw DimensionError("trace_form: sl_n size mismatch");
    return (to_matrix(x) * to_matrix(y)).trace();
}

} // namespace locaut
