#pragma once

#include <optional>
#include <vector>

#include "slopes/matrix.hpp"
#include "slopes/polygon.hpp"

namespace slopes {

/// Dense univariate polynomial over Q, ascending coefficients, no trailing zeros
/// (the zero polynomial is the empty vector).
using Poly = std::vector<Rational>;

Poly poly_trim(Poly f);
long poly_degree(const Poly& f);  // -1 for zero
Poly poly_mul(const Poly& f, const Poly& g);
Poly poly_sub(const Poly& f, const Poly& g);
Poly poly_derivative(const Poly& f);
Rational poly_eval(const Poly& f, const Rational& x);
/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g);
Poly poly_gcd(Poly f, Poly g);  // monic
bool poly_squarefree(const Poly& f);
/// Evaluates f at a square matrix (Horner).
RatMatrix poly_eval(const Poly& f, const RatMatrix& m);

/// Root valuations of f read off its p-adic Newton polygon.
///
/// The lower convex hull of (i, v_p(a_i)) is taken and its segment slopes are
/// NEGATED, so each returned slope is the valuation of the corresponding roots
/// (the isocrystal convention: Frobenius slopes are eigenvalue valuations).
/// Multiplicities are horizontal segment lengths and sum to deg f.
/// Requires nonzero constant and leading coefficients.
SlopeMultiset newton_polygon(const Poly& coefficients, long p);

/// Points (i, v_p(a_i)) lower hull, with the hull's own (un-negated) slopes.
Polygon newton_hull(const Poly& coefficients, long p);

/// Characteristic polynomial det(xI - m), monic, ascending (Faddeev-LeVerrier).
Poly charpoly(const RatMatrix& m);

/// Distinct rational roots of f (rational root test on the primitive integer
/// multiple). Returns std::nullopt if the candidate search was abandoned
/// because a coefficient was too large to factor by trial division.
std::optional<std::vector<Rational>> rational_roots(const Poly& f);

/// True only when f is provably irreducible over Q by one of: degree 1;
/// degree 2 or 3 without rational roots; a prime q whose Newton polygon of f is
/// a single segment with slope denominator equal to deg f. False means "not
/// proven", not "reducible".
bool provably_irreducible(const Poly& f);

}  // namespace slopes
