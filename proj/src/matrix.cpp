#include "slopes/matrix.hpp"

#include <sstream>
#include <utility>

#include "slopes/errors.hpp"

namespace slopes {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols_if_empty) {
    const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw InvalidInput("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::diagonal(const Vector& d) {
    RatMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Vector RatMatrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector RatMatrix::col(std::size_t j) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
}

std::vector<Vector> RatMatrix::row_list() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : data_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Rational RatMatrix::trace() const {
    if (!square()) throw InvalidInput("trace of a non-square matrix");
    Rational t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

Rational RatMatrix::det() const {
    if (!square()) throw InvalidInput("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return Rational(1);

    // Clear denominators row by row, then run Bareiss over the integers.
    std::vector<Integer> a(n * n);
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < n; ++j) l = lcm(l, (*this)(i, j).denominator());
        scale *= l;
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& x = (*this)(i, j);
            a[i * n + j] = x.numerator() * (l / x.denominator());
        }
    }

    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row * n + k] == 0) ++swap_row;
            if (swap_row == n) return Rational(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[swap_row * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i * n + j] = std::move(v);
            }
        }
        prev = a[k * n + k];
    }
    return Rational(Integer(sign * a[n * n - 1]), scale);
}

RatMatrix RatMatrix::inverse() const {
    if (!square()) throw InvalidInput("inverse of a non-square matrix");
    const std::size_t n = rows_;
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<std::size_t> pivots;
    const RatMatrix r = rref(aug, &pivots);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw InvalidInput("matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

std::size_t RatMatrix::rank() const {
    std::vector<std::size_t> pivots;
    rref(*this, &pivots);
    return pivots.size();
}

RatMatrix RatMatrix::pow(unsigned exponent) const {
    if (!square()) throw InvalidInput("power of a non-square matrix");
    RatMatrix result = identity(rows_);
    RatMatrix base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        base = base * base;
        exponent >>= 1U;
    }
    return result;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix size mismatch in +");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix size mismatch in -");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix size mismatch in *");
    RatMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

Vector operator*(const RatMatrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw InvalidInput("matrix/vector size mismatch");
    Vector out(a.rows_, Rational(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    }
    os << ']';
    return os.str();
}

RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t s = 0; s < b.cols(); ++s)
                    k(i * b.rows() + r, j * b.cols() + s) = a(i, j) * b(r, s);
    return k;
}

RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots) {
    RatMatrix r = m;
    std::vector<std::size_t> piv;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < r.cols() && lead_row < r.rows(); ++c) {
        std::size_t sel = lead_row;
        while (sel < r.rows() && r(sel, c).is_zero()) ++sel;
        if (sel == r.rows()) continue;
        if (sel != lead_row) {
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(sel, j), r(lead_row, j));
        }
        const Rational inv = Rational(1) / r(lead_row, c);
        for (std::size_t j = c; j < r.cols(); ++j) r(lead_row, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead_row || r(i, c).is_zero()) continue;
            const Rational f = r(i, c);
            for (std::size_t j = c; j < r.cols(); ++j) r(i, j) -= f * r(lead_row, j);
        }
        piv.push_back(c);
        ++lead_row;
    }
    if (pivots) *pivots = std::move(piv);
    return r;
}

std::vector<Vector> nullspace(const RatMatrix& m) {
    std::vector<std::size_t> pivots;
    const RatMatrix r = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

RatMatrix companion(const Vector& ascending_coefficients) {
    if (ascending_coefficients.size() < 2 || ascending_coefficients.back() != Rational(1)) {
        throw InvalidInput("companion needs a monic polynomial of degree >= 1");
    }
    const std::size_t n = ascending_coefficients.size() - 1;
    RatMatrix c(n, n);
    for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -ascending_coefficients[i];
    return c;
}

}  // namespace slopes
