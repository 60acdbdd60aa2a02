#include "slopes/cst.hpp"

#include <algorithm>

#include "slopes/errors.hpp"

namespace slopes {

namespace {

enum class Tri { True, False, Unknown };

Tri tri_and(Tri x, Tri y) {
    if (x == Tri::False || y == Tri::False) return Tri::False;
    if (x == Tri::True && y == Tri::True) return Tri::True;
    return Tri::Unknown;
}

Status to_status(Tri t) {
    switch (t) {
        case Tri::True: return Status::CertifiedTrue;
        case Tri::False: return Status::CertifiedFalse;
        default: return Status::Uncertified;
    }
}

// Everything the battery needs from one degree of the key diagram.
struct DegreeInfo {
    std::int64_t rank = 0;
    Verdict acyclic{Status::CertifiedTrue, std::nullopt};
    // H^0 and signed H^1 of the modification; absent without a certified HN filtration.
    std::optional<Dimension> kernel;
    std::optional<Dimension> cokernel;

    Tri cokernel_zero() const {
        if (cokernel) return cokernel->is_zero() ? Tri::True : Tri::False;
        return acyclic.status == Status::CertifiedFalse ? Tri::False : Tri::Unknown;
    }
    Tri cokernel_height_zero() const {
        if (cokernel) return cokernel->ht == 0 ? Tri::True : Tri::False;
        return cokernel_zero();
    }
};

DegreeInfo analyse(const DegreeData& data, std::int64_t r, const SearchOptions& opts) {
    DegreeInfo info;
    info.rank = static_cast<std::int64_t>(data.hk.rank());
    const FilteredPhiModule fm(data.hk, data.lattice);
    info.acyclic = is_acyclic(fm, opts);
    FFSheaf e;
    try {
        e = build_modification(data.hk, data.lattice, r, opts);
    } catch (const Uncertified&) {
        return info;
    }
    const CohomologyDims coh = cohomology_dim(e);
    const VstDimension vst = vst_dimension(fm, opts);
    if (Dimension{vst.dim, vst.ht} != coh.h0 || vst.h1_nonzero == coh.h1.is_zero())
        throw InternalError("H^0 of the modification disagrees with V_st");

    // 0 -> H^0(E) -> X^{r,i} -> DR^{r,i} -> H^1(E) -> 0 must be exact.
    const std::int64_t t_n = fm.module().t_n().to_int64();
    const Dimension x{r * info.rank - t_n, info.rank};
    const Dimension dr{r * info.rank - data.lattice.t_h(), 0};
    const ExactnessReport rep = check_exact(
        {SeqNode::of(coh.h0), SeqNode::of(x), SeqNode::of(dr), SeqNode::of(coh.h1)});
    if (!rep.exact) throw InternalError("key diagram row is not exact: " + rep.violations.front());
    info.kernel = coh.h0;
    info.cokernel = coh.h1;
    return info;
}

}  // namespace

void check_window(const PhiModule& hk, const HodgeData& lattice, std::int64_t window) {
    std::vector<std::string> bad;
    if (window < 0) bad.push_back("window " + std::to_string(window) + " is negative");
    if (hk.rank() != lattice.rank())
        bad.push_back("lattice rank " + std::to_string(lattice.rank()) + " != module rank " +
                      std::to_string(hk.rank()));
    for (const auto& [slope, mult] : hk.newton_slopes().entries())
        if (slope < Rational(0) || slope > Rational(window))
            bad.push_back("Newton slope " + slope.str() + " outside [0," + std::to_string(window) + "]");
    if (lattice.rank() > 0 && (lattice.min_weight() < 0 || lattice.max_weight() > window))
        bad.push_back("weights [" + std::to_string(lattice.min_weight()) + "," + std::to_string(lattice.max_weight()) +
                      "] outside [0," + std::to_string(window) + "]");
    if (!bad.empty()) throw HypothesisViolation(std::move(bad));
}

FFSheaf build_modification(const PhiModule& hk, const HodgeData& lattice, std::int64_t r,
                           const SearchOptions& opts) {
    check_window(hk, lattice, r);
    const HNFiltration hn = hn_filtration(FilteredPhiModule(hk, lattice), opts);
    if (!hn.certified) throw Uncertified("HN filtration of the modification is not certified");
    std::vector<std::pair<Rational, std::int64_t>> pieces;
    for (const auto& [slope, rank] : hn.graded_slopes().entries()) pieces.emplace_back(slope, rank);
    return FFSheaf::canonicalize(pieces);
}

BatteryReport battery(const SyntheticCohomology& s, const SearchOptions& opts) {
    std::vector<std::string> bad;
    if (s.r < 0) bad.push_back("r = " + std::to_string(s.r) + " is negative");
    if (s.r == 0 && s.previous) bad.push_back("degree r-1 must be absent when r = 0");
    if (!bad.empty()) throw HypothesisViolation(std::move(bad));
    check_window(s.top.hk, s.top.lattice, s.r);
    if (s.previous) check_window(s.previous->hk, s.previous->lattice, s.r - 1);

    DegreeInfo prev;
    prev.kernel = Dimension{};
    prev.cokernel = Dimension{};
    if (s.previous) prev = analyse(*s.previous, s.r, opts);
    const DegreeInfo top = analyse(s.top, s.r, opts);

    BatteryReport rep;
    rep.dim_hdr = top.rank;
    rep.b_rm1 = prev.acyclic;
    rep.b_r = top.acyclic;
    rep.a.status = to_status(tri_and(prev.cokernel_zero(), top.cokernel_zero()));
    rep.cprime.status = to_status(tri_and(prev.cokernel_height_zero(), top.cokernel_height_zero()));

    // Dim H^{r,r} = Dim Ker in degree r + Dim Coker from degree r-1.
    Tri d = tri_and(prev.cokernel_zero(), top.cokernel_zero());
    if (top.kernel && prev.cokernel) {
        rep.height = top.kernel->ht + prev.cokernel->ht;
        d = *rep.height == top.rank ? Tri::True : Tri::False;
    }
    rep.d.status = to_status(d);

    const Tri b = tri_and(prev.acyclic.status == Status::CertifiedTrue    ? Tri::True
                          : prev.acyclic.status == Status::CertifiedFalse ? Tri::False
                                                                          : Tri::Unknown,
                          top.acyclic.status == Status::CertifiedTrue    ? Tri::True
                          : top.acyclic.status == Status::CertifiedFalse ? Tri::False
                                                                         : Tri::Unknown);
    std::vector<Status> certified;
    for (Status st : {rep.a.status, to_status(b), rep.cprime.status, rep.d.status})
        if (st != Status::Uncertified) certified.push_back(st);
    rep.consistent = std::adjacent_find(certified.begin(), certified.end(), std::not_equal_to<>()) == certified.end();

    const std::vector<Status> all{rep.a.status, rep.b_rm1.status, rep.b_r.status, rep.cprime.status, rep.d.status};
    if (std::ranges::find(all, Status::CertifiedFalse) != all.end())
        rep.overall = Status::CertifiedFalse;
    else if (std::ranges::all_of(all, [](Status st) { return st == Status::CertifiedTrue; }))
        rep.overall = Status::CertifiedTrue;
    return rep;
}

std::string to_string(DichotomyResult::Branch b) {
    return b == DichotomyResult::Branch::Surjective ? "surjective" : "positive-height-image";
}

DichotomyResult dichotomy(const PhiModule& hk, const HodgeData& lattice, std::int64_t r, const SearchOptions& opts) {
    using Branch = DichotomyResult::Branch;
    check_window(hk, lattice, r);
    try {
        const CohomologyDims coh = cohomology_dim(build_modification(hk, lattice, r, opts));
        if (coh.h1.is_zero()) return {Branch::Surjective, std::nullopt};
        return {Branch::PositiveHeightImage, -coh.h1.ht};
    } catch (const Uncertified&) {
        if (is_acyclic(FilteredPhiModule(hk, lattice), opts).status == Status::CertifiedFalse)
            return {Branch::PositiveHeightImage, std::nullopt};
        throw;
    }
}

namespace {

std::vector<SeqNode> row_nodes(const MvRow& row) {
    std::vector<SeqNode> out;
    for (const auto& q : row.nodes)
        out.push_back(q.torsion_core.empty() ? SeqNode::of(q.quotient) : SeqNode::of(q));
    return out;
}

Dimension outgoing_image(const MvRow& row) {
    if (!row.arrows.empty() && row.arrows.size() == row.nodes.size()) return *row.arrows.back().image;
    return {};
}

// ht of the middle node recomputed as ht(incoming image) + ht(outgoing image),
// the incoming side read from the left end and the outgoing side from the right.
std::int64_t middle_height(const MvRow& row, std::size_t mid) {
    const auto nodes = row_nodes(row);
    const auto images = arrow_images(nodes, row.arrows);
    const std::int64_t incoming = mid == 0 ? 0 : images[mid - 1].ht;
    Dimension image = outgoing_image(row);
    for (std::size_t k = nodes.size() - 1; k > mid; --k) {
        const SeqArrow arrow = k < row.arrows.size() ? row.arrows[k] : SeqArrow{};
        const Dimension kernel = arrow.kernel.value_or(nodes[k].dimension - image);
        image = row.arrows.empty() ? kernel : row.arrows[k - 1].image.value_or(kernel);
    }
    return incoming + image.ht;
}

bool positive_curvature(const QBCObject& q) { return !canonical_filtration(q.quotient).gt0.pieces.empty(); }

}  // namespace

MvResult mv_check(const MvRow& a, const MvRow& b, std::int64_t r) {
    if (r < 0) throw HypothesisViolation({"r = " + std::to_string(r) + " is negative"});
    const std::size_t len = static_cast<std::size_t>(3 * r + 3);
    const std::size_t mid = static_cast<std::size_t>(3 * r);
    std::vector<std::string> bad;
    for (const auto& [name, row] : {std::pair{"A", &a}, std::pair{"B", &b}}) {
        if (row->nodes.size() != len) {
            bad.push_back(std::string("row ") + name + " has " + std::to_string(row->nodes.size()) +
                          " nodes, expected " + std::to_string(len));
            continue;
        }
        try {
            for (const auto& v : check_exact(row_nodes(*row), row->arrows).violations)
                bad.push_back(std::string("row ") + name + ": " + v);
        } catch (const InvalidInput& e) {
            bad.push_back(std::string("row ") + name + ": " + e.what());
        }
    }
    if (!bad.empty()) throw HypothesisViolation(std::move(bad));

    for (std::size_t k = 0; k < len; ++k) {
        if (k == mid) continue;
        const auto ha = a.nodes[k].dimension().ht, hb = b.nodes[k].dimension().ht;
        if (ha != hb)
            bad.push_back("index " + std::to_string(k) + ": ht(A) = " + std::to_string(ha) +
                          " != ht(B) = " + std::to_string(hb));
    }
    if (positive_curvature(a.nodes[mid]))
        bad.push_back("index " + std::to_string(mid) + ": A has positive curvature");
    if (!bad.empty()) throw HypothesisViolation(std::move(bad));

    const std::int64_t ha = middle_height(a, mid), hb = middle_height(b, mid);
    if (ha != hb) throw InternalError("middle heights differ after validation");
    MvResult res{ha, height_functor_rank(a.nodes[mid]), height_functor_rank(b.nodes[mid])};
    if (res.rank_a.rank != ha || res.rank_b.rank != hb)
        throw InternalError("height functor rank disagrees with exactness bookkeeping");
    return res;
}

}  // namespace slopes
