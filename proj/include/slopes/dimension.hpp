#pragma once

#include <cstdint>
#include <string>

namespace slopes {

/// Dimension (dim, ht) of a Banach-Colmez space. ht may be negative.
struct Dimension {
    std::int64_t dim = 0;
    std::int64_t ht = 0;

    Dimension& operator+=(const Dimension& o) {
        dim += o.dim;
        ht += o.ht;
        return *this;
    }
    Dimension& operator-=(const Dimension& o) {
        dim -= o.dim;
        ht -= o.ht;
        return *this;
    }
    friend Dimension operator+(Dimension a, const Dimension& b) { return a += b; }
    friend Dimension operator-(Dimension a, const Dimension& b) { return a -= b; }
    friend Dimension operator*(std::int64_t k, const Dimension& d) { return {k * d.dim, k * d.ht}; }
    friend bool operator==(const Dimension&, const Dimension&) = default;
    bool is_zero() const { return dim == 0 && ht == 0; }
    std::string str() const { return "(" + std::to_string(dim) + "," + std::to_string(ht) + ")"; }
};

}  // namespace slopes
