#include "slopes/filtration.hpp"

#include <algorithm>
#include <numeric>

#include "slopes/errors.hpp"

namespace slopes {

namespace {

std::vector<std::int64_t> weights_of(const std::vector<FlagStep>& steps) {
    std::vector<std::int64_t> w;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const std::size_t next = k + 1 < steps.size() ? steps[k + 1].space.dim() : 0;
        w.insert(w.end(), steps[k].space.dim() - next, steps[k].index);
    }
    return w;
}

}  // namespace

HodgeData HodgeData::from_weights(std::vector<std::int64_t> weights) {
    HodgeData h;
    std::sort(weights.begin(), weights.end());
    h.rank_ = weights.size();
    h.weights_ = std::move(weights);
    if (h.rank_ > 0 && h.weights_.front() == h.weights_.back())
        h.flag_ = std::vector<FlagStep>{{h.weights_.front(), Subspace::whole(h.rank_)}};
    else if (h.rank_ == 0)
        h.flag_ = std::vector<FlagStep>{};
    return h;
}

HodgeData HodgeData::from_flag(std::size_t rank, std::vector<FlagStep> steps) {
    for (const auto& s : steps)
        if (s.space.ambient() != rank) throw InvalidInput("flag step lives in the wrong ambient dimension");
    std::sort(steps.begin(), steps.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
    std::vector<FlagStep> norm;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        if (k > 0 && steps[k].index == steps[k - 1].index)
            throw InvalidInput("flag index " + std::to_string(steps[k].index) + " listed twice");
        if (k > 0 && !steps[k - 1].space.contains(steps[k].space))
            throw InvalidInput("flag steps are not nested at index " + std::to_string(steps[k].index));
        if (steps[k].space.is_zero()) continue;
        if (!norm.empty() && norm.back().space == steps[k].space) norm.pop_back();
        norm.push_back(steps[k]);
    }
    if (!norm.empty() && !norm.front().space.is_whole()) {
        if (norm.front().index <= 0)
            throw InvalidInput("lowest flag step must be the whole space");
        norm.insert(norm.begin(), FlagStep{0, Subspace::whole(rank)});
    }
    if (norm.empty() && rank > 0) throw InvalidInput("flag must contain a nonzero step");
    HodgeData h;
    h.rank_ = rank;
    h.weights_ = weights_of(norm);
    std::sort(h.weights_.begin(), h.weights_.end());
    h.flag_ = std::move(norm);
    return h;
}

HodgeData HodgeData::from_weighted_basis(const std::vector<Vector>& basis,
                                         const std::vector<std::int64_t>& weights) {
    if (basis.size() != weights.size()) throw InvalidInput("one weight per basis vector required");
    const std::size_t n = basis.size();
    if (n > 0 && Subspace(n, basis).dim() != n) throw InvalidInput("weighted basis is not a basis");
    std::vector<std::int64_t> levels(weights);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    std::vector<FlagStep> steps;
    for (auto i : levels) {
        std::vector<Vector> gens;
        for (std::size_t k = 0; k < n; ++k)
            if (weights[k] >= i) gens.push_back(basis[k]);
        steps.push_back({i, Subspace(n, gens)});
    }
    return from_flag(n, std::move(steps));
}

const std::vector<FlagStep>& HodgeData::steps() const& {
    if (!flag_) throw FlagRequired("operation needs an explicit Hodge flag, not just weights");
    return *flag_;
}

Subspace HodgeData::fil(std::int64_t i) const {
    for (const auto& s : steps())
        if (s.index >= i) return s.space;
    return Subspace::zero(rank_);
}

std::int64_t HodgeData::t_h() const { return std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0}); }

std::int64_t HodgeData::min_weight() const {
    if (weights_.empty()) throw InvalidInput("rank-0 Hodge data has no weights");
    return weights_.front();
}

std::int64_t HodgeData::max_weight() const {
    if (weights_.empty()) throw InvalidInput("rank-0 Hodge data has no weights");
    return weights_.back();
}

HodgeData dual_hodge(const HodgeData& h) {
    if (!h.has_flag()) {
        std::vector<std::int64_t> w;
        for (auto x : h.weights()) w.push_back(-x);
        return HodgeData::from_weights(std::move(w));
    }
    // Fil_dual jumps only at -k for listed indices k.
    std::vector<FlagStep> steps;
    for (const auto& s : h.steps()) steps.push_back({-s.index, h.fil(s.index + 1).orthogonal()});
    return HodgeData::from_flag(h.rank(), std::move(steps));
}

HodgeData shift(const HodgeData& h, std::int64_t r) {
    if (!h.has_flag()) {
        std::vector<std::int64_t> w;
        for (auto x : h.weights()) w.push_back(x + r);
        return HodgeData::from_weights(std::move(w));
    }
    std::vector<FlagStep> steps;
    for (const auto& s : h.steps()) steps.push_back({s.index + r, s.space});
    return HodgeData::from_flag(h.rank(), std::move(steps));
}

HodgeData induced_on_subspace(const HodgeData& h, const Subspace& w) {
    if (w.ambient() != h.rank()) throw InvalidInput("subspace and Hodge data have different ambient rank");
    if (w.is_whole()) return h;
    if (w.is_zero()) return HodgeData::from_weights({});
    std::vector<FlagStep> steps;
    for (const auto& s : h.steps()) {
        const Subspace cap = intersect(s.space, w);
        std::vector<Vector> coords;
        for (const auto& v : cap.basis()) coords.push_back(w.coordinates(v));
        steps.push_back({s.index, Subspace(w.dim(), coords)});
    }
    return HodgeData::from_flag(w.dim(), std::move(steps));
}

HodgeData induced_on_quotient(const HodgeData& h, const Subspace& w) {
    if (w.ambient() != h.rank()) throw InvalidInput("subspace and Hodge data have different ambient rank");
    if (w.is_zero()) return h;
    const std::size_t q = h.rank() - w.dim();
    if (q == 0) return HodgeData::from_weights({});
    std::vector<FlagStep> steps;
    for (const auto& s : h.steps()) {
        std::vector<Vector> images;
        for (const auto& v : s.space.basis()) images.push_back(w.project_to_quotient(v));
        steps.push_back({s.index, Subspace(q, images)});
    }
    return HodgeData::from_flag(q, std::move(steps));
}

}  // namespace slopes
