#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace slopes {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(int n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "a", "-a", "a/b". Whitespace is not accepted.
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Integer value; throws InvalidInput when the denominator is not 1 or
    /// the value does not fit in 64 bits.
    std::int64_t to_int64() const;
    /// Nearest double; for rendering only.
    double to_double() const { return q_.get_d(); }

    /// "a/b", or "a" when b == 1.
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::size_t hash() const;

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

Rational abs(const Rational& q);
Rational pow(const Rational& base, long exponent);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Throws InvalidInput unless p is a prime >= 2.
void require_prime(long p);

/// v_p of a rational; std::nullopt encodes +infinity (q == 0).
class ExtendedValuation {
public:
    static ExtendedValuation infinity() { return ExtendedValuation(); }
    static ExtendedValuation finite(Rational v) { return ExtendedValuation(std::move(v)); }

    bool is_infinite() const { return !value_.has_value(); }
    const Rational& value() const;  // throws on infinity
    std::string str() const { return value_ ? value_->str() : "inf"; }

    friend bool operator==(const ExtendedValuation&, const ExtendedValuation&) = default;

private:
    ExtendedValuation() = default;
    explicit ExtendedValuation(Rational v) : value_(std::move(v)) {}
    std::optional<Rational> value_;
};

ExtendedValuation valuation(const Rational& q, long p);

/// Exponent of p in a nonzero integer.
long integer_valuation(const Integer& n, long p);

}  // namespace slopes

template <>
struct std::hash<slopes::Rational> {
    std::size_t operator()(const slopes::Rational& q) const noexcept { return q.hash(); }
};
