#include "slopes/rational.hpp"

#include <functional>
#include <limits>
#include <ostream>

#include "slopes/errors.hpp"

namespace slopes {

namespace {

bool is_decimal_integer(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!is_decimal_integer(s)) {
        throw InvalidInput("not a rational literal: '" + std::string(s) + "'");
    }
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw InvalidInput("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const Integer num = parse_integer(text.substr(0, slash));
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
        throw InvalidInput("signed denominator in '" + std::string(text) + "'");
    }
    return Rational(num, parse_integer(den_text));
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw InvalidInput("expected an integer, got " + str());
    const Integer& n = q_.get_num();
    if (!n.fits_slong_p()) throw InvalidInput("integer out of range: " + str());
    return n.get_si();
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidInput("division by zero");
    q_ /= o.q_;
    return *this;
}

std::size_t Rational::hash() const {
    const std::size_t h1 = std::hash<std::string>{}(q_.get_num().get_str(16));
    const std::size_t h2 = std::hash<std::string>{}(q_.get_den().get_str(16));
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) return Rational(1) / pow(base, -exponent);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

void require_prime(long p) {
    if (p < 2) throw InvalidInput("p must be a prime >= 2, got " + std::to_string(p));
    const Integer n(p);
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0) {
        throw InvalidInput("p must be prime, got " + std::to_string(p));
    }
}

const Rational& ExtendedValuation::value() const {
    if (!value_) throw InvalidInput("valuation is +infinity");
    return *value_;
}

long integer_valuation(const Integer& n, long p) {
    if (n == 0) throw InvalidInput("valuation of zero is infinite");
    Integer rest;
    const Integer prime(p);
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

ExtendedValuation valuation(const Rational& q, long p) {
    require_prime(p);
    if (q.is_zero()) return ExtendedValuation::infinity();
    return ExtendedValuation::finite(
        Rational(integer_valuation(q.numerator(), p) - integer_valuation(q.denominator(), p)));
}

}  // namespace slopes
