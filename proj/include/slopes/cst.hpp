#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slopes/bc.hpp"
#include "slopes/ff_sheaf.hpp"
#include "slopes/hn.hpp"

namespace slopes {

/// Hyodo-Kato module and lattice weights in one cohomological degree i.
/// Newton slopes and weights must lie in [0, i].
struct DegreeData {
    PhiModule hk;
    HodgeData lattice;
};

/// Degrees r-1 and r; a missing degree r-1 is the zero module (forced for r = 0).
struct SyntheticCohomology {
    std::int64_t r = 0;
    std::optional<DegreeData> previous;
    DegreeData top;
};

/// Throws HypothesisViolation listing every slope or weight outside [0, window].
void check_window(const PhiModule& hk, const HodgeData& lattice, std::int64_t window);

/// The bundle whose slopes are the HN graded pieces of (hk, lattice).
/// Throws Uncertified when the HN filtration is not certified.
FFSheaf build_modification(const PhiModule& hk, const HodgeData& lattice, std::int64_t r,
                           const SearchOptions& opts = {});

struct BatteryReport {
    Verdict a;       // both key-square cokernels vanish
    Verdict b_rm1;   // acyclic at degree r-1
    Verdict b_r;     // acyclic at degree r
    Verdict cprime;  // kernel and cokernel have height 0
    Verdict d;       // ht(H^{r,r}) = dim H_dR^r
    bool consistent = true;
    Status overall = Status::Uncertified;
    std::optional<std::int64_t> height;  // ht(H^{r,r}) when known
    std::int64_t dim_hdr = 0;
};

BatteryReport battery(const SyntheticCohomology& s, const SearchOptions& opts = {});

struct DichotomyResult {
    enum class Branch { Surjective, PositiveHeightImage } branch;
    /// Height deficit of the image; absent when only the branch is certified.
    std::optional<std::int64_t> deficit;
};
std::string to_string(DichotomyResult::Branch b);

/// Throws HypothesisViolation outside the window and Uncertified when neither
/// branch can be certified.
DichotomyResult dichotomy(const PhiModule& hk, const HodgeData& lattice, std::int64_t r,
                          const SearchOptions& opts = {});

/// One row 0 -> X_0 -> ... -> X_{3r+2} of a height comparison. arrows follows
/// check_exact; with one arrow per node the row continues past X_{3r+2}
/// through the declared image of the last arrow.
struct MvRow {
    std::vector<QBCObject> nodes;
    std::vector<SeqArrow> arrows;
};

struct MvResult {
    /// Height of the middle terms, recomputed from their neighbours.
    std::int64_t height = 0;
    HeightRank rank_a;
    HeightRank rank_b;
};

/// Compares ht(A_{3r}) and ht(B_{3r}). Requires exact rows of 3r+3 nodes,
/// equal heights at every other index, and curvature <= 0 at A_{3r};
/// failures throw HypothesisViolation.
MvResult mv_check(const MvRow& a, const MvRow& b, std::int64_t r);

}  // namespace slopes
