#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slopes/dimension.hpp"
#include "slopes/polygon.hpp"

namespace slopes {

inline constexpr const char* kInfty = "infty";

/// Coherent sheaf on the Fargues-Fontaine curve in classification normal form:
/// a direct sum of stable bundles O(d/h) plus torsion at labelled points.
class FFSheaf {
public:
    struct Summand {
        Rational slope;
        std::int64_t copies;
        friend bool operator==(const Summand&, const Summand&) = default;
    };

    FFSheaf() = default;

    /// From (slope, rank) pairs: a slope d/h of rank rho needs h | rho and
    /// contributes rho/h copies of O(d/h).
    static FFSheaf canonicalize(const std::vector<std::pair<Rational, std::int64_t>>& slope_ranks,
                                std::map<std::string, std::vector<std::int64_t>> torsion = {});
    /// From explicit copy counts of stable bundles.
    static FFSheaf from_copies(const std::vector<Summand>& summands,
                               std::map<std::string, std::vector<std::int64_t>> torsion = {});

    /// Descending by slope, one entry per distinct slope.
    const std::vector<Summand>& bundle() const& { return bundle_; }
    std::vector<Summand> bundle() && { return std::move(bundle_); }
    /// Lengths sorted descending per point; points without torsion omitted.
    const std::map<std::string, std::vector<std::int64_t>>& torsion() const& { return torsion_; }
    std::map<std::string, std::vector<std::int64_t>> torsion() && { return std::move(torsion_); }
    bool has_torsion() const { return !torsion_.empty(); }

    std::int64_t rank() const;
    /// Bundle degree plus total torsion length.
    std::int64_t degree() const;
    /// Slope multiset of the bundle part, multiplicities = ranks.
    SlopeMultiset slopes() const;

    friend bool operator==(const FFSheaf&, const FFSheaf&) = default;

private:
    std::vector<Summand> bundle_;
    std::map<std::string, std::vector<std::int64_t>> torsion_;
};

FFSheaf direct_sum(const FFSheaf& a, const FFSheaf& b);
/// Bundle dual O(l) -> O(-l); torsion is rejected.
FFSheaf dual(const FFSheaf& a);
/// O(l1) (x) O(l2) = O(l1 + l2)^(h1 h2 / h) extended bilinearly; a torsion
/// factor against a bundle of rank r repeats the torsion r times; torsion
/// against torsion is rejected.
FFSheaf tensor(const FFSheaf& a, const FFSheaf& b);

struct CohomologyDims {
    Dimension h0;
    /// Signed: a summand O(d/h) with d < 0 adds (-d, -h).
    Dimension h1;
    /// Set when h1 comes from quotient-type pieces (always, when h1 is nonzero).
    bool h1_quotient_type = false;
};

CohomologyDims cohomology_dim(const FFSheaf& s);

struct HomRecord {
    Dimension dimension;
    /// Q_p-dimension, present when the Hom space is finite dimensional (dim = 0).
    std::optional<std::int64_t> qp_dimension;
    /// "division-algebra" for End of a stable bundle, "torsion-module" for
    /// torsion at a common point, otherwise empty.
    std::string kind;
    /// For torsion-module: rank over the B_m-module structure, one per length pair.
    std::int64_t module_rank = 0;
};

HomRecord hom_dim(const FFSheaf& a, const FFSheaf& b);

}  // namespace slopes
