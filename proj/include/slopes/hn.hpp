#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slopes/filtration.hpp"
#include "slopes/isocrystal.hpp"

namespace slopes {

/// A (phi, N)-module with Hodge data of the same rank.
class FilteredPhiModule {
public:
    FilteredPhiModule(PhiModule module, HodgeData hodge);

    const PhiModule& module() const { return module_; }
    const HodgeData& hodge() const { return hodge_; }
    std::size_t rank() const { return module_.rank(); }

private:
    PhiModule module_;
    HodgeData hodge_;
};

/// deg := t_H - t_N. This is the sign under which shrinking the Hodge filtration
/// lowers the degree and a rank-1 module is acyclic iff weight >= slope.
Rational degree(const FilteredPhiModule& m);
/// Degree of a (phi, N)-stable subspace with the induced structure.
Rational subobject_degree(const FilteredPhiModule& m, const Subspace& w);
/// Restriction to, and quotient by, a (phi, N)-stable subspace.
FilteredPhiModule sub_module(const FilteredPhiModule& m, const Subspace& w);
FilteredPhiModule quotient_module(const FilteredPhiModule& m, const Subspace& w);
FilteredPhiModule dual(const FilteredPhiModule& m);

struct SearchOptions {
    std::uint64_t seed = 0;
    /// Force exhaustive scans over the subobject list instead of HN-based answers.
    bool oracle = false;
    std::size_t samples = 48;
};

struct SubobjectList {
    /// Sorted by the Subspace order, duplicates removed.
    std::vector<Subspace> subobjects;
    /// True when the list is every (phi, N)-stable subspace.
    bool certified = false;
};

/// All (phi, N)-stable subspaces when phi has a squarefree characteristic
/// polynomial whose factors are certified irreducible (rational roots plus at
/// most one provably irreducible residual, or distinct Dieudonne-Manin
/// blocks); otherwise a seeded sample of stable subspaces, uncertified.
SubobjectList enumerate_subobjects(const PhiModule& m, const SearchOptions& opts = {});

enum class Status { CertifiedTrue, CertifiedFalse, Uncertified };
std::string to_string(Status s);

struct Verdict {
    Status status = Status::Uncertified;
    /// Present for CertifiedFalse answers of the subobject deciders.
    std::optional<Subspace> witness;
};

Verdict is_weakly_admissible(const FilteredPhiModule& m, const SearchOptions& opts = {});
Verdict is_acyclic(const FilteredPhiModule& m, const SearchOptions& opts = {});

/// Step k: cumulative subobject M_k, the slope of M_k / M_{k-1}, and rank and
/// degree of M_k (both cumulative).
struct HNStep {
    Subspace space;
    Rational slope;
    std::size_t rank;
    Rational degree;
};

struct HNFiltration {
    bool certified = false;
    std::vector<HNStep> steps;  // empty when uncertified
    /// Graded slopes with graded ranks as multiplicities.
    SlopeMultiset graded_slopes() const;
};

/// Greedy maximal destabilizing construction; ties go to maximal rank, then
/// to the lexicographically smallest reduced basis.
HNFiltration hn_filtration(const FilteredPhiModule& m, const SearchOptions& opts = {});

/// Lowers the Hodge filtration one dimension at a time until the degree is 0,
/// keeping the module acyclic, so the result is weakly admissible with
/// Fil_1^i inside Fil^i. Throws InvalidInput on non-acyclic input and
/// Uncertified when acyclicity cannot be certified.
FilteredPhiModule reduce_to_admissible(const FilteredPhiModule& m, const SearchOptions& opts = {});

struct VstDimension {
    std::int64_t dim = 0;
    std::int64_t ht = 0;
    bool h1_nonzero = false;
};

/// H^0 Dimension of the associated bundle: sum over HN pieces of slope >= 0 of
/// (degree, rank); the H^1 flag is set iff some HN slope is negative. Throws
/// Uncertified without a certified HN filtration.
VstDimension vst_dimension(const FilteredPhiModule& m, const SearchOptions& opts = {});

}  // namespace slopes
