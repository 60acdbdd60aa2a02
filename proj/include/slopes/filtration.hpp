#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "slopes/subspace.hpp"

namespace slopes {

/// One listed step of a descending filtration: Fil^index = space.
struct FlagStep {
    std::int64_t index;
    Subspace space;
    friend bool operator==(const FlagStep&, const FlagStep&) = default;
};

/// Hodge data: a weight multiset, optionally backed by an explicit flag.
///
/// A flag is stored as steps with strictly increasing index and strictly
/// decreasing dimension, the first step being the whole space. Fil^j is the
/// listed step with the smallest index >= j, and 0 above the last step, so
/// each listed index is a weight of multiplicity dim(step) - dim(next step).
class HodgeData {
public:
    HodgeData() = default;

    static HodgeData from_weights(std::vector<std::int64_t> weights);
    /// Normalizes: drops zero steps, merges equal consecutive steps, and adds
    /// Fil^0 = whole when the lowest step is proper with positive index.
    static HodgeData from_flag(std::size_t rank, std::vector<FlagStep> steps);
    /// Fil^i = span of the vectors whose weight is >= i.
    static HodgeData from_weighted_basis(const std::vector<Vector>& basis,
                                         const std::vector<std::int64_t>& weights);

    std::size_t rank() const { return rank_; }
    bool has_flag() const { return flag_.has_value(); }
    /// Ascending.
    const std::vector<std::int64_t>& weights() const& { return weights_; }
    std::vector<std::int64_t> weights() && { return std::move(weights_); }
    /// Throws FlagRequired for weights-only data with distinct weights.
    const std::vector<FlagStep>& steps() const&;
    std::vector<FlagStep> steps() && { return std::as_const(*this).steps(); }
    Subspace fil(std::int64_t i) const;
    std::int64_t t_h() const;
    std::int64_t min_weight() const;
    std::int64_t max_weight() const;

    friend bool operator==(const HodgeData&, const HodgeData&) = default;

private:
    std::size_t rank_ = 0;
    std::vector<std::int64_t> weights_;
    std::optional<std::vector<FlagStep>> flag_;
};

/// Weights w -> -w; on flags Fil_dual^i = (Fil^{1-i})^perp under the standard pairing.
HodgeData dual_hodge(const HodgeData& h);
HodgeData shift(const HodgeData& h, std::int64_t r);
/// Filtration Fil^i cap W, in the coordinates of W's reduced basis. Whole and
/// zero subspaces work for weights-only data; anything else needs a flag.
HodgeData induced_on_subspace(const HodgeData& h, const Subspace& w);
/// Filtration induced on Q^n / W, in the complement coordinates of W.
HodgeData induced_on_quotient(const HodgeData& h, const Subspace& w);

}  // namespace slopes
