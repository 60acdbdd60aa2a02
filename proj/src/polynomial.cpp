#include "slopes/polynomial.hpp"

#include <algorithm>
#include <set>

#include "slopes/errors.hpp"

namespace slopes {

Poly poly_trim(Poly f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    return f;
}

long poly_degree(const Poly& f) { return static_cast<long>(poly_trim(f).size()) - 1; }

Poly poly_mul(const Poly& f, const Poly& g) {
    if (f.empty() || g.empty()) return {};
    Poly h(f.size() + g.size() - 1, Rational(0));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) h[i + j] += f[i] * g[j];
    return poly_trim(std::move(h));
}

Poly poly_sub(const Poly& f, const Poly& g) {
    Poly h(std::max(f.size(), g.size()), Rational(0));
    for (std::size_t i = 0; i < f.size(); ++i) h[i] += f[i];
    for (std::size_t i = 0; i < g.size(); ++i) h[i] -= g[i];
    return poly_trim(std::move(h));
}

Poly poly_derivative(const Poly& f) {
    Poly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * Rational(static_cast<long>(i)));
    return poly_trim(std::move(d));
}

Rational poly_eval(const Poly& f, const Rational& x) {
    Rational acc(0);
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatMatrix poly_eval(const Poly& f, const RatMatrix& m) {
    if (!m.square()) throw InvalidInput("polynomial evaluation needs a square matrix");
    RatMatrix acc(m.rows(), m.cols());
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * m + RatMatrix::identity(m.rows()) * *it;
    return acc;
}

std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g) {
    const Poly d = poly_trim(g);
    if (d.empty()) throw InvalidInput("polynomial division by zero");
    Poly r = poly_trim(f);
    if (r.size() < d.size()) return {{}, r};
    Poly q(r.size() - d.size() + 1, Rational(0));
    while (!r.empty() && r.size() >= d.size()) {
        const std::size_t shift = r.size() - d.size();
        const Rational c = r.back() / d.back();
        q[shift] = c;
        for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= c * d[i];
        r = poly_trim(std::move(r));
    }
    return {poly_trim(std::move(q)), r};
}

Poly poly_gcd(Poly f, Poly g) {
    f = poly_trim(std::move(f));
    g = poly_trim(std::move(g));
    while (!g.empty()) {
        auto r = poly_divmod(f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    if (f.empty()) return f;
    const Rational lead = f.back();
    for (auto& c : f) c /= lead;
    return f;
}

bool poly_squarefree(const Poly& f) { return poly_degree(poly_gcd(f, poly_derivative(f))) == 0; }

Polygon newton_hull(const Poly& coefficients, long p) {
    require_prime(p);
    if (coefficients.empty()) throw InvalidInput("empty coefficient list");
    const Poly f = poly_trim(coefficients);
    if (f.empty()) throw InvalidInput("zero polynomial has no Newton polygon");
    if (f.size() != coefficients.size()) throw InvalidInput("leading coefficient must be nonzero");
    if (f.front().is_zero()) throw InvalidInput("constant coefficient must be nonzero (strip zero roots)");
    std::vector<PolygonVertex> pts;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i].is_zero()) continue;
        pts.push_back({static_cast<std::int64_t>(i), valuation(f[i], p).value()});
    }
    return Polygon::lower_hull(std::move(pts));
}

SlopeMultiset newton_polygon(const Poly& coefficients, long p) {
    const Polygon hull = newton_hull(coefficients, p);
    const SlopeMultiset segs = hull.segment_slopes();
    std::vector<SlopeMultiset::Entry> out;
    for (const auto& [slope, len] : segs.entries()) out.emplace_back(-slope, len);
    return SlopeMultiset(std::move(out));
}

Poly charpoly(const RatMatrix& m) {
    if (!m.square()) throw InvalidInput("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    Poly c(n + 1, Rational(0));
    c[n] = 1;
    RatMatrix mk(n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk + RatMatrix::identity(n) * c[n - k + 1];
        c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
    }
    return c;
}

namespace {

constexpr unsigned long kTrialDivisionLimit = 1UL << 20;

// Positive divisors of |n|, or nullopt when trial division would not finish.
std::optional<std::vector<Integer>> divisors(const Integer& n) {
    Integer m = abs(n);
    std::vector<std::pair<Integer, unsigned>> factors;
    for (unsigned long d = 2; Integer(d) * d <= m; ++d) {
        if (d > kTrialDivisionLimit) return std::nullopt;
        if (mpz_divisible_ui_p(m.get_mpz_t(), d) == 0) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), d) != 0) {
            m /= static_cast<unsigned long>(d);
            ++e;
        }
        factors.emplace_back(Integer(d), e);
    }
    if (m > 1) factors.emplace_back(m, 1U);
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [prime, e] : factors) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

// Primitive integer polynomial proportional to f.
std::vector<Integer> primitive_integer(const Poly& f) {
    Integer l = 1;
    for (const auto& c : f) l = lcm(l, c.denominator());
    std::vector<Integer> z;
    Integer g = 0;
    for (const auto& c : f) {
        z.push_back(c.numerator() * (l / c.denominator()));
        g = gcd(g, z.back());
    }
    if (g != 0)
        for (auto& x : z) x /= g;
    return z;
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots(const Poly& f_in) {
    Poly f = poly_trim(f_in);
    if (f.empty()) throw InvalidInput("roots of the zero polynomial");
    std::set<Rational> roots;
    std::size_t zeros = 0;
    while (zeros < f.size() && f[zeros].is_zero()) ++zeros;
    if (zeros > 0) {
        roots.insert(Rational(0));
        f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(zeros));
    }
    if (f.size() > 1) {
        const auto z = primitive_integer(f);
        const auto num_divs = divisors(z.front());
        const auto den_divs = divisors(z.back());
        if (!num_divs || !den_divs) return std::nullopt;
        for (const auto& a : *num_divs) {
            for (const auto& b : *den_divs) {
                for (int s : {1, -1}) {
                    const Rational cand(Integer(s * a), b);
                    if (poly_eval(f, cand).is_zero()) roots.insert(cand);
                }
            }
        }
    }
    return std::vector<Rational>(roots.begin(), roots.end());
}

bool provably_irreducible(const Poly& f_in) {
    const Poly f = poly_trim(f_in);
    const long deg = poly_degree(f);
    if (deg < 1) return false;
    if (deg == 1) return true;
    if (f.front().is_zero()) return false;
    if (deg <= 3) {
        const auto roots = rational_roots(f);
        return roots && roots->empty();
    }
    // Single-segment Newton polygon test at primes dividing the extreme coefficients.
    const auto z = primitive_integer(f);
    std::set<long> primes;
    for (const Integer& c : {z.front(), z.back()}) {
        Integer m = abs(c);
        for (unsigned long d = 2; d <= 1000 && Integer(d) <= m; ++d) {
            if (mpz_divisible_ui_p(m.get_mpz_t(), d) != 0) {
                primes.insert(static_cast<long>(d));
                while (mpz_divisible_ui_p(m.get_mpz_t(), d) != 0) m /= d;
            }
        }
    }
    for (long q : primes) {
        const auto segs = newton_hull(f, q).segment_slopes();
        if (segs.entries().size() != 1) continue;
        if (segs.entries().front().first.denominator() == deg) return true;
    }
    return false;
}

}  // namespace slopes
