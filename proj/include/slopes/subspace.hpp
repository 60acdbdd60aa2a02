#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "slopes/matrix.hpp"

namespace slopes {

/// A subspace of Q^n stored by its reduced-row-echelon basis, so equal
/// subspaces compare equal and ordering is the lexicographic order on bases.
class Subspace {
public:
    Subspace() = default;
    /// Span of arbitrary (possibly dependent) vectors in Q^ambient.
    Subspace(std::size_t ambient, const std::vector<Vector>& generators);

    static Subspace zero(std::size_t ambient) { return Subspace(ambient, {}); }
    static Subspace whole(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    bool is_whole() const { return basis_.size() == ambient_; }
    const std::vector<Vector>& basis() const& { return basis_; }
    std::vector<Vector> basis() && { return std::move(basis_); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    /// Coordinates of v in this basis; v must lie in the subspace.
    Vector coordinates(const Vector& v) const;

    /// Standard basis vectors at the non-pivot columns: a complement.
    std::vector<Vector> complement_basis() const;

    /// Image of the quotient map Q^n -> Q^n / this, in complement coordinates.
    Vector project_to_quotient(const Vector& v) const;

    Subspace image(const RatMatrix& m) const;
    bool is_stable(const RatMatrix& m) const;

    /// Matrix of m restricted to this (stable) subspace, in basis coordinates.
    RatMatrix restrict(const RatMatrix& m) const;
    /// Matrix induced by m on the quotient, in complement coordinates.
    RatMatrix quotient(const RatMatrix& m) const;

    /// { x : <x, u> = 0 for all u in this } under the standard pairing.
    Subspace orthogonal() const;

    friend Subspace operator+(const Subspace& a, const Subspace& b);
    friend Subspace intersect(const Subspace& a, const Subspace& b);

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

    std::string str() const;

private:
    std::size_t ambient_ = 0;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

Subspace intersect(const Subspace& a, const Subspace& b);

}  // namespace slopes
