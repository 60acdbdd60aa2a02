#include "slopes/ff_sheaf.hpp"

#include <algorithm>

#include "slopes/errors.hpp"

namespace slopes {

namespace {

std::int64_t num(const Rational& q) { return Rational(q.numerator()).to_int64(); }
std::int64_t den(const Rational& q) { return Rational(q.denominator()).to_int64(); }

void normalize_torsion(std::map<std::string, std::vector<std::int64_t>>& t) {
    for (auto it = t.begin(); it != t.end();) {
        for (auto len : it->second)
            if (len <= 0) throw InvalidInput("torsion lengths must be positive");
        if (it->first.empty()) throw InvalidInput("torsion point label must be nonempty");
        std::sort(it->second.begin(), it->second.end(), std::greater<>());
        it = it->second.empty() ? t.erase(it) : std::next(it);
    }
}

}  // namespace

FFSheaf FFSheaf::from_copies(const std::vector<Summand>& summands,
                             std::map<std::string, std::vector<std::int64_t>> torsion) {
    std::map<Rational, std::int64_t, std::greater<>> merged;
    for (const auto& s : summands) {
        if (s.copies < 0) throw InvalidInput("negative number of copies");
        if (s.copies > 0) merged[s.slope] += s.copies;
    }
    FFSheaf f;
    for (const auto& [slope, copies] : merged) f.bundle_.push_back({slope, copies});
    normalize_torsion(torsion);
    f.torsion_ = std::move(torsion);
    return f;
}

FFSheaf FFSheaf::canonicalize(const std::vector<std::pair<Rational, std::int64_t>>& slope_ranks,
                              std::map<std::string, std::vector<std::int64_t>> torsion) {
    std::vector<Summand> s;
    for (const auto& [slope, rank] : slope_ranks) {
        if (rank < 0 || rank % den(slope) != 0)
            throw InvalidInput("slope " + slope.str() + " cannot have rank " + std::to_string(rank) +
                               ": rank must be a multiple of " + std::to_string(den(slope)));
        s.push_back({slope, rank / den(slope)});
    }
    return from_copies(s, std::move(torsion));
}

std::int64_t FFSheaf::rank() const {
    std::int64_t r = 0;
    for (const auto& s : bundle_) r += s.copies * den(s.slope);
    return r;
}

std::int64_t FFSheaf::degree() const {
    std::int64_t d = 0;
    for (const auto& s : bundle_) d += s.copies * num(s.slope);
    for (const auto& [point, lengths] : torsion_)
        for (auto len : lengths) d += len;
    return d;
}

SlopeMultiset FFSheaf::slopes() const {
    std::vector<SlopeMultiset::Entry> e;
    for (const auto& s : bundle_) e.emplace_back(s.slope, s.copies * den(s.slope));
    return SlopeMultiset(std::move(e));
}

FFSheaf direct_sum(const FFSheaf& a, const FFSheaf& b) {
    std::vector<FFSheaf::Summand> s = a.bundle();
    s.insert(s.end(), b.bundle().begin(), b.bundle().end());
    auto t = a.torsion();
    for (const auto& [point, lengths] : b.torsion()) t[point].insert(t[point].end(), lengths.begin(), lengths.end());
    return FFSheaf::from_copies(s, std::move(t));
}

FFSheaf dual(const FFSheaf& a) {
    if (a.has_torsion()) throw InvalidInput("dual of a torsion sheaf is not a coherent sheaf here");
    std::vector<FFSheaf::Summand> s;
    for (const auto& x : a.bundle()) s.push_back({-x.slope, x.copies});
    return FFSheaf::from_copies(s);
}

FFSheaf tensor(const FFSheaf& a, const FFSheaf& b) {
    if (a.has_torsion() && b.has_torsion()) throw InvalidInput("torsion tensor torsion is out of scope");
    std::vector<FFSheaf::Summand> s;
    for (const auto& x : a.bundle())
        for (const auto& y : b.bundle()) {
            const Rational sum = x.slope + y.slope;
            const std::int64_t n = den(x.slope) * den(y.slope) / den(sum);
            s.push_back({sum, x.copies * y.copies * n});
        }
    std::map<std::string, std::vector<std::int64_t>> t;
    auto spread = [&t](const FFSheaf& tors, std::int64_t times) {
        for (const auto& [point, lengths] : tors.torsion())
            for (std::int64_t k = 0; k < times; ++k) t[point].insert(t[point].end(), lengths.begin(), lengths.end());
    };
    spread(a, b.rank());
    spread(b, a.rank());
    return FFSheaf::from_copies(s, std::move(t));
}

CohomologyDims cohomology_dim(const FFSheaf& s) {
    CohomologyDims c;
    for (const auto& x : s.bundle()) {
        const Dimension piece{num(x.slope), den(x.slope)};
        if (x.slope.sign() >= 0) {
            c.h0 += x.copies * piece;
        } else {
            c.h1 += x.copies * Dimension{-piece.dim, -piece.ht};
            c.h1_quotient_type = true;
        }
    }
    for (const auto& [point, lengths] : s.torsion())
        for (auto len : lengths) c.h0 += Dimension{len, 0};
    return c;
}

HomRecord hom_dim(const FFSheaf& a, const FFSheaf& b) {
    HomRecord r;
    FFSheaf a_bundle = FFSheaf::from_copies(a.bundle());
    FFSheaf b_bundle = FFSheaf::from_copies(b.bundle());
    r.dimension += cohomology_dim(tensor(dual(a_bundle), b_bundle)).h0;
    // Bundle to torsion: the fibre at the point, once per unit of rank.
    for (const auto& [point, lengths] : b.torsion())
        for (auto len : lengths) r.dimension += Dimension{a_bundle.rank() * len, 0};
    // Torsion to torsion only at a common point: Hom(B_m, B_n) = B_min(m,n).
    for (const auto& [point, la] : a.torsion()) {
        const auto it = b.torsion().find(point);
        if (it == b.torsion().end()) continue;
        for (auto m : la)
            for (auto n : it->second) {
                r.dimension += Dimension{std::min(m, n), 0};
                ++r.module_rank;
            }
    }
    if (r.dimension.dim == 0) r.qp_dimension = r.dimension.ht;
    if (a == b && !a.has_torsion() && a.bundle().size() == 1 && a.bundle().front().copies == 1)
        r.kind = "division-algebra";
    else if (r.module_rank > 0 && a.bundle().empty() && b.bundle().empty())
        r.kind = "torsion-module";
    return r;
}

}  // namespace slopes
