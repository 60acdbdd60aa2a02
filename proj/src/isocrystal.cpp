#include "slopes/isocrystal.hpp"

#include "slopes/errors.hpp"
#include "slopes/polynomial.hpp"

namespace slopes {

std::string to_string(PhiForm form) { return form == PhiForm::Matrix ? "matrix" : "dm-normal"; }

PhiForm parse_phi_form(const std::string& text) {
    if (text == "matrix") return PhiForm::Matrix;
    if (text == "dm-normal") return PhiForm::DmNormal;
    throw InvalidInput("unknown module form \"" + text + "\"");
}

namespace {

RatMatrix dm_block(long p, const Rational& slope) {
    const long h = static_cast<long>(slope.denominator().get_si());
    const long a = static_cast<long>(slope.numerator().get_si());
    Vector coeffs(static_cast<std::size_t>(h) + 1, Rational(0));
    coeffs.front() = -pow(Rational(p), a);
    coeffs.back() = 1;
    return companion(coeffs);
}

// Reads the block structure of a dm-normal phi and checks phi equals it exactly.
std::vector<DmBlock> parse_blocks(long p, const RatMatrix& phi) {
    const std::size_t n = phi.rows();
    std::vector<DmBlock> blocks;
    RatMatrix rebuilt;
    std::size_t offset = 0;
    while (offset < n) {
        std::size_t size = 1;
        while (offset + size < n && phi(offset + size, offset + size - 1) == Rational(1)) ++size;
        const Rational c = phi(offset, offset + size - 1);
        if (c.sign() <= 0) throw InvalidInput("dm-normal block constant must be a positive power of p");
        const Rational a = valuation(c, p).value();
        if (pow(Rational(p), a.to_int64()) != c)
            throw InvalidInput("dm-normal block constant " + c.str() + " is not a power of p");
        const Rational slope = a / Rational(static_cast<long>(size));
        if (slope.denominator() != static_cast<long>(size))
            throw InvalidInput("dm-normal block of size " + std::to_string(size) + " has non-reduced slope");
        if (!blocks.empty() && slope < blocks.back().slope)
            throw InvalidInput("dm-normal blocks must be ordered by ascending slope");
        blocks.push_back({slope, offset, size});
        const RatMatrix b = dm_block(p, slope);
        rebuilt = rebuilt.empty() ? b : direct_sum(rebuilt, b);
        offset += size;
    }
    if (!(rebuilt == phi)) throw InvalidInput("phi is not in Dieudonne-Manin block-companion form");
    return blocks;
}

}  // namespace

bool check_phi_n(long p, const RatMatrix& phi, const RatMatrix& nilpotent) {
    require_prime(p);
    if (!phi.square() || !nilpotent.square() || phi.rows() != nilpotent.rows())
        throw InvalidInput("phi and N must be square matrices of equal size");
    if (phi.det().is_zero()) throw InvalidInput("phi must be invertible");
    if (!(nilpotent * phi == Rational(p) * (phi * nilpotent))) return false;
    return nilpotent.pow(static_cast<unsigned>(phi.rows())).is_zero();
}

PhiModule::PhiModule(long p, RatMatrix phi, RatMatrix nilpotent, PhiForm form)
    : p_(p), phi_(std::move(phi)), n_(std::move(nilpotent)), form_(form) {
    if (phi_.rows() == 0) throw InvalidInput("a (phi,N)-module must have positive rank");
    if (!check_phi_n(p_, phi_, n_)) throw InvalidInput("N must be nilpotent with N phi = p phi N");
    if (form_ == PhiForm::DmNormal) blocks_ = parse_blocks(p_, phi_);
}

PhiModule PhiModule::from_slopes(const SlopeMultiset& slopes, long p) {
    require_prime(p);
    if (slopes.empty()) throw InvalidInput("empty slope multiset");
    RatMatrix phi;
    for (const auto& [slope, mult] : slopes.entries()) {
        const auto h = slope.denominator().get_si();
        if (mult % h != 0)
            throw InvalidInput("slope " + slope.str() + " needs multiplicity divisible by " + std::to_string(h));
        const RatMatrix b = dm_block(p, slope);
        for (std::int64_t k = 0; k < mult / h; ++k) phi = phi.empty() ? b : direct_sum(phi, b);
    }
    const std::size_t n = phi.rows();
    return PhiModule(p, std::move(phi), RatMatrix(n, n), PhiForm::DmNormal);
}

SlopeMultiset PhiModule::newton_slopes() const { return newton_polygon(charpoly(phi_), p_); }

Rational PhiModule::t_n() const { return valuation(phi_.det(), p_).value(); }

namespace {

void require_same_prime(const PhiModule& a, const PhiModule& b) {
    if (a.p() != b.p()) throw InvalidInput("modules over different primes");
}

}  // namespace

PhiModule tensor(const PhiModule& a, const PhiModule& b) {
    require_same_prime(a, b);
    const auto ia = RatMatrix::identity(a.rank());
    const auto ib = RatMatrix::identity(b.rank());
    return PhiModule(a.p(), kronecker(a.phi(), b.phi()),
                     kronecker(a.nilpotent(), ib) + kronecker(ia, b.nilpotent()));
}

PhiModule dual(const PhiModule& a) {
    return PhiModule(a.p(), a.phi().inverse().transpose(), Rational(-1) * a.nilpotent().transpose());
}

PhiModule det(const PhiModule& a) {
    return PhiModule(a.p(), RatMatrix::diagonal({a.phi().det()}), RatMatrix(1, 1));
}

PhiModule direct_sum(const PhiModule& a, const PhiModule& b) {
    require_same_prime(a, b);
    return PhiModule(a.p(), direct_sum(a.phi(), b.phi()), direct_sum(a.nilpotent(), b.nilpotent()));
}

PhiModule change_basis(const PhiModule& a, const RatMatrix& s) {
    const RatMatrix inv = s.inverse();
    return PhiModule(a.p(), s * a.phi() * inv, s * a.nilpotent() * inv);
}

}  // namespace slopes
