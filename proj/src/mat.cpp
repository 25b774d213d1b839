#include "locaut/mat.hpp"

#include <sstream>

namespace locaut {

Mat::Mat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Mat::Mat(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw DimensionError("ragged initializer for Mat");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Mat Mat::unit(std::size_t n, std::size_t i, std::size_t j) {
    Mat m(n, n);
    m.at(i, j) = 1;
    return m;
}

bool Mat::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0)
            return false;
    return true;
}

const Rational& Mat::at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
}

Rational& Mat::at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

Mat Mat::operator+(const Mat& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionError("matrix addition shape mismatch");
    Mat r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] += other.entries_[i];
    return r;
}

Mat Mat::operator-(const Mat& other) const { return *this + (-other); }

Mat Mat::operator-() const {
    Mat r = *this;
    for (auto& e : r.entries_)
        e = -e;
    return r;
}

Mat Mat::operator*(const Mat& other) const {
    if (cols_ != other.rows_)
        throw DimensionError("matrix product shape mismatch");
    Mat r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                r.at(i, j) += a * other.at(k, j);
        }
    return r;
}

Mat Mat::operator*(const Rational& scalar) const {
    Mat r = *this;
    for (auto& e : r.entries_)
        e *= scalar;
    return r;
}

Mat Mat::transposed() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

Rational Mat::trace() const {
    if (!is_square())
        throw DimensionError("trace of non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i)
        t += at(i, i);
    return t;
}

std::string Mat::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i ? "; " : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            out << (j ? " " : "") << to_string(at(i, j));
    }
    out << "]";
    return out.str();
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(pivot, j), m.at(row, j));
        Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0)
                continue;
            Rational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

Rational det(const Mat& m) {
    if (!m.is_square())
        throw DimensionError("determinant of non-square matrix");
    Mat w = m;
    const std::size_t n = w.rows();
    Rational d = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && w.at(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(w.at(pivot, j), w.at(col, j));
            d = -d;
        }
        d *= w.at(col, col);
        Rational inv = Rational(1) / w.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (w.at(i, col) == 0)
                continue;
            Rational f = w.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                w.at(i, j) -= f * w.at(col, j);
        }
    }
    return d;
}

std::size_t rank(const Mat& m) {
    Mat w = m;
    return rref(w).size();
}

Mat inverse(const Mat& m) {
    if (!m.is_square())
        throw DimensionError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw SingularMatrixError("matrix is singular (det = 0)");
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::vector<std::vector<Rational>> kernel_basis(const Mat& m) {
    Mat w = m;
    auto pivots = rref(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -w.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool solve(const Mat& m, const std::vector<Rational>& rhs, std::vector<Rational>& x) {
    if (rhs.size() != m.rows())
        throw DimensionError("solve: rhs length mismatch");
    Mat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols())
        return false;
    x.assign(m.cols(), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug.at(r, m.cols());
    return true;
}

Poly charpoly(const Mat& m) {
    if (!m.is_square())
        throw DimensionError("charpoly of non-square matrix");
    // Faddeev-LeVerrier: exact over the rationals.
    const std::size_t n = m.rows();
    std::vector<Rational> coeffs(n + 1);
    coeffs[n] = 1;
    Mat acc = Mat::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        acc = m * acc;
        Rational c = -acc.trace() / Rational(k);
        coeffs[n - k] = c;
        for (std::size_t i = 0; i < n; ++i)
            acc.at(i, i) += c;
    }
    return Poly(std::move(coeffs));
}

namespace {

// Matrix over Q[x], used only for the Smith normal form of xI - m.
using PolyMat = std::vector<std::vector<Poly>>;

void smith_step(PolyMat& a, std::size_t k) {
    const std::size_t n = a.size();
    for (;;) {
        // Minimal-degree nonzero pivot in the trailing submatrix.
        std::size_t pi = n, pj = n;
        for (std::size_t i = k; i < n; ++i)
            for (std::size_t j = k; j < n; ++j)
                if (!a[i][j].is_zero() &&
                    (pi == n || a[i][j].degree() < a[pi][pj].degree())) {
                    pi = i;
                    pj = j;
                }
        if (pi == n)
            return;
        std::swap(a[k], a[pi]);
        for (std::size_t i = k; i < n; ++i)
            std::swap(a[i][k], a[i][pj]);

        bool reduced = true;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero())
                continue;
            Poly q = a[i][k].divmod(a[k][k]).first;
            for (std::size_t j = k; j < n; ++j)
                a[i][j] = a[i][j] - q * a[k][j];
            if (!a[i][k].is_zero())
                reduced = false;
        }
        for (std::size_t j = k + 1; j < n; ++j) {
            if (a[k][j].is_zero())
                continue;
            Poly q = a[k][j].divmod(a[k][k]).first;
            for (std::size_t i = k; i < n; ++i)
                a[i][j] = a[i][j] - a[i][k] * q;
            if (!a[k][j].is_zero())
                reduced = false;
        }
        if (!reduced)
            continue;

        // Pivot must divide every remaining entry; if not, fold the offending
        // row into row k and restart the reduction.
        bool divides_all = true;
        for (std::size_t i = k + 1; i < n && divides_all; ++i)
            for (std::size_t j = k + 1; j < n && divides_all; ++j)
                if (!a[i][j].is_zero() && !a[i][j].divisible_by(a[k][k])) {
                    for (std::size_t c = k; c < n; ++c)
                        a[k][c] = a[k][c] + a[i][c];
                    divides_all = false;
                }
        if (divides_all)
            return;
    }
}

} // namespace

std::vector<Poly> invariant_factors(const Mat& m) {
    if (!m.is_square())
        throw DimensionError("invariant factors of non-square matrix");
    const std::size_t n = m.rows();
    PolyMat a(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = Poly::constant(-m.at(i, j));
            if (i == j)
                a[i][j] = a[i][j] + Poly::monomial(1, 1);
        }
    for (std::size_t k = 0; k < n; ++k)
        smith_step(a, k);
    std::vector<Poly> factors;
    for (std::size_t k = 0; k < n; ++k)
        if (a[k][k].degree() >= 1)
            factors.push_back(a[k][k].monic());
    return factors;
}

} // namespace locaut
