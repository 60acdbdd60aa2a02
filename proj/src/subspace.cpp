#include "slopes/subspace.hpp"

#include <sstream>

#include "slopes/errors.hpp"

namespace slopes {

Subspace::Subspace(std::size_t ambient, const std::vector<Vector>& generators) : ambient_(ambient) {
    for (const auto& g : generators) {
        if (g.size() != ambient) throw InvalidInput("vector length does not match ambient dimension");
    }
    if (generators.empty()) return;
    const RatMatrix r = rref(RatMatrix::from_rows(generators, ambient), &pivots_);
    for (std::size_t i = 0; i < pivots_.size(); ++i) basis_.push_back(r.row(i));
}

Subspace Subspace::whole(std::size_t ambient) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < ambient; ++i) {
        Vector e(ambient, Rational(0));
        e[i] = 1;
        rows.push_back(std::move(e));
    }
    return Subspace(ambient, rows);
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_) throw InvalidInput("vector length does not match ambient dimension");
    Vector rest = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Rational c = rest[pivots_[i]];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < ambient_; ++j) rest[j] -= c * basis_[i][j];
    }
    for (const auto& x : rest) {
        if (!x.is_zero()) return false;
    }
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw InvalidInput("ambient dimension mismatch");
    for (const auto& v : other.basis_) {
        if (!contains(v)) return false;
    }
    return true;
}

Vector Subspace::coordinates(const Vector& v) const {
    if (!contains(v)) throw InvalidInput("vector is not in the subspace");
    Vector c;
    c.reserve(basis_.size());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
}

std::vector<Vector> Subspace::complement_basis() const {
    std::vector<bool> pivot(ambient_, false);
    for (auto p : pivots_) pivot[p] = true;
    std::vector<Vector> out;
    for (std::size_t j = 0; j < ambient_; ++j) {
        if (pivot[j]) continue;
        Vector e(ambient_, Rational(0));
        e[j] = 1;
        out.push_back(std::move(e));
    }
    return out;
}

Vector Subspace::project_to_quotient(const Vector& v) const {
    Vector rest = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Rational c = rest[pivots_[i]];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < ambient_; ++j) rest[j] -= c * basis_[i][j];
    }
    std::vector<bool> pivot(ambient_, false);
    for (auto p : pivots_) pivot[p] = true;
    Vector out;
    for (std::size_t j = 0; j < ambient_; ++j) {
        if (!pivot[j]) out.push_back(rest[j]);
    }
    return out;
}

Subspace Subspace::image(const RatMatrix& m) const {
    std::vector<Vector> gens;
    gens.reserve(basis_.size());
    for (const auto& b : basis_) gens.push_back(m * b);
    return Subspace(m.rows(), gens);
}

bool Subspace::is_stable(const RatMatrix& m) const {
    for (const auto& b : basis_) {
        if (!contains(m * b)) return false;
    }
    return true;
}

RatMatrix Subspace::restrict(const RatMatrix& m) const {
    const std::size_t k = basis_.size();
    RatMatrix r(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        const Vector c = coordinates(m * basis_[j]);
        for (std::size_t i = 0; i < k; ++i) r(i, j) = c[i];
    }
    return r;
}

RatMatrix Subspace::quotient(const RatMatrix& m) const {
    const auto comp = complement_basis();
    RatMatrix q(comp.size(), comp.size());
    for (std::size_t j = 0; j < comp.size(); ++j) {
        const Vector c = project_to_quotient(m * comp[j]);
        for (std::size_t i = 0; i < comp.size(); ++i) q(i, j) = c[i];
    }
    return q;
}

Subspace Subspace::orthogonal() const {
    if (basis_.empty()) return whole(ambient_);
    return Subspace(ambient_, nullspace(RatMatrix::from_rows(basis_, ambient_)));
}

Subspace operator+(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw InvalidInput("ambient dimension mismatch");
    std::vector<Vector> gens = a.basis_;
    gens.insert(gens.end(), b.basis_.begin(), b.basis_.end());
    return Subspace(a.ambient_, gens);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    return (a.orthogonal() + b.orthogonal()).orthogonal();
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
    if (auto c = a.basis_.size() <=> b.basis_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.basis_.size(); ++i) {
        for (std::size_t j = 0; j < a.ambient_; ++j) {
            if (auto c = a.basis_[i][j] <=> b.basis_[i][j]; c != 0) return c;
        }
    }
    return std::strong_ordering::equal;
}

std::string Subspace::str() const {
    std::ostringstream os;
    os << "span{";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        os << (i ? ", " : "") << '(';
        for (std::size_t j = 0; j < ambient_; ++j) os << (j ? "," : "") << basis_[i][j];
        os << ')';
    }
    os << '}';
    return os.str();
}

}  // namespace slopes
