#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "slopes/rational.hpp"

namespace slopes {

/// Sorted (ascending) list of (slope, multiplicity) with positive multiplicities.
class SlopeMultiset {
public:
    using Entry = std::pair<Rational, std::int64_t>;

    SlopeMultiset() = default;
    /// Merges duplicates and sorts; rejects non-positive multiplicities.
    explicit SlopeMultiset(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const& { return entries_; }
    std::vector<Entry> entries() && { return std::move(entries_); }
    std::int64_t total() const;
    /// Sum of slope * multiplicity.
    Rational weighted_sum() const;
    bool empty() const { return entries_.empty(); }
    /// One slope per unit of multiplicity, ascending.
    std::vector<Rational> expanded() const;

    friend SlopeMultiset operator+(const SlopeMultiset& a, const SlopeMultiset& b);
    friend bool operator==(const SlopeMultiset&, const SlopeMultiset&) = default;

    std::string str() const;

private:
    std::vector<Entry> entries_;
};

struct PolygonVertex {
    std::int64_t x;
    Rational y;
    friend bool operator==(const PolygonVertex&, const PolygonVertex&) = default;
};

/// Convex-from-below polyline with strictly increasing integer abscissae.
class Polygon {
public:
    Polygon() = default;
    /// Validates the invariants (x strictly increasing, slopes non-decreasing).
    explicit Polygon(std::vector<PolygonVertex> vertices);

    /// Lower convex hull of a point set (duplicate x keep the lowest y).
    static Polygon lower_hull(std::vector<PolygonVertex> points);
    /// Polygon starting at (0,0) whose segments have the given slopes in order.
    static Polygon from_slopes(const SlopeMultiset& slopes);

    const std::vector<PolygonVertex>& vertices() const { return vertices_; }
    /// Segment slopes with horizontal lengths as multiplicities.
    SlopeMultiset segment_slopes() const;

    friend bool operator==(const Polygon&, const Polygon&) = default;

private:
    std::vector<PolygonVertex> vertices_;
};

}  // namespace slopes
