#include "slopes/polygon.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "slopes/errors.hpp"

namespace slopes {

SlopeMultiset::SlopeMultiset(std::vector<Entry> entries) {
    std::map<Rational, std::int64_t> merged;
    for (auto& [slope, mult] : entries) {
        if (mult <= 0) throw InvalidInput("slope multiplicity must be positive");
        merged[slope] += mult;
    }
    for (auto& [slope, mult] : merged) entries_.emplace_back(slope, mult);
}

std::int64_t SlopeMultiset::total() const {
    std::int64_t t = 0;
    for (const auto& e : entries_) t += e.second;
    return t;
}

Rational SlopeMultiset::weighted_sum() const {
    Rational s(0);
    for (const auto& [slope, mult] : entries_) s += slope * Rational(static_cast<long>(mult));
    return s;
}

std::vector<Rational> SlopeMultiset::expanded() const {
    std::vector<Rational> out;
    for (const auto& [slope, mult] : entries_)
        for (std::int64_t i = 0; i < mult; ++i) out.push_back(slope);
    return out;
}

SlopeMultiset operator+(const SlopeMultiset& a, const SlopeMultiset& b) {
    auto all = a.entries_;
    all.insert(all.end(), b.entries_.begin(), b.entries_.end());
    return SlopeMultiset(std::move(all));
}

std::string SlopeMultiset::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < entries_.size(); ++i)
        os << (i ? ", " : "") << entries_[i].first << ':' << entries_[i].second;
    os << '}';
    return os.str();
}

Polygon::Polygon(std::vector<PolygonVertex> vertices) : vertices_(std::move(vertices)) {
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        if (vertices_[i].x <= vertices_[i - 1].x) throw InvalidInput("polygon x must increase strictly");
    }
    for (std::size_t i = 2; i < vertices_.size(); ++i) {
        const auto& a = vertices_[i - 2];
        const auto& b = vertices_[i - 1];
        const auto& c = vertices_[i];
        const Rational s1 = (b.y - a.y) / Rational(static_cast<long>(b.x - a.x));
        const Rational s2 = (c.y - b.y) / Rational(static_cast<long>(c.x - b.x));
        if (s2 < s1) throw InvalidInput("polygon is not convex from below");
    }
}

Polygon Polygon::lower_hull(std::vector<PolygonVertex> points) {
    std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    points.erase(std::unique(points.begin(), points.end(),
                             [](const auto& a, const auto& b) { return a.x == b.x; }),
                 points.end());

    // Monotone chain, lower half only; collinear middle points are dropped.
    std::vector<PolygonVertex> hull;
    for (const auto& pt : points) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            const Rational cross = Rational(static_cast<long>(b.x - a.x)) * (pt.y - a.y) -
                                   (b.y - a.y) * Rational(static_cast<long>(pt.x - a.x));
            if (cross.sign() <= 0) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(pt);
    }
    return Polygon(std::move(hull));
}

Polygon Polygon::from_slopes(const SlopeMultiset& slopes) {
    std::vector<PolygonVertex> v{{0, Rational(0)}};
    for (const auto& [slope, mult] : slopes.entries()) {
        const auto& last = v.back();
        v.push_back({last.x + mult, last.y + slope * Rational(static_cast<long>(mult))});
    }
    return Polygon(std::move(v));
}

SlopeMultiset Polygon::segment_slopes() const {
    std::vector<SlopeMultiset::Entry> out;
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        const auto dx = vertices_[i].x - vertices_[i - 1].x;
        out.emplace_back((vertices_[i].y - vertices_[i - 1].y) / Rational(static_cast<long>(dx)), dx);
    }
    return SlopeMultiset(std::move(out));
}

}  // namespace slopes
