#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "slopes/rational.hpp"

namespace slopes {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals. Matrices act on column vectors.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols_if_empty = 0);
    static RatMatrix diagonal(const Vector& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;
    std::vector<Vector> row_list() const;

    bool is_zero() const;
    RatMatrix transpose() const;
    Rational trace() const;

    /// Exact determinant by fraction-free (Bareiss) elimination.
    Rational det() const;
    /// Throws InvalidInput when singular.
    RatMatrix inverse() const;
    std::size_t rank() const;
    RatMatrix pow(unsigned exponent) const;

    RatMatrix& operator+=(const RatMatrix& o);
    RatMatrix& operator-=(const RatMatrix& o);
    RatMatrix& operator*=(const Rational& s);

    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
    friend RatMatrix operator*(const Rational& s, RatMatrix a) { return a *= s; }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend Vector operator*(const RatMatrix& a, const Vector& v);

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b);

/// Block-diagonal sum.
RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b);

/// Reduced row echelon form; `pivots` receives pivot column indices.
RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Basis (as row vectors) of { x : m x = 0 }.
std::vector<Vector> nullspace(const RatMatrix& m);

/// Companion matrix of a monic polynomial given by ascending coefficients,
/// leading 1 included.
RatMatrix companion(const Vector& ascending_coefficients);

}  // namespace slopes
