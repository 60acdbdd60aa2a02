#include "slopes/hn.hpp"

#include <algorithm>
#include <random>

#include "slopes/errors.hpp"
#include "slopes/polynomial.hpp"

namespace slopes {

FilteredPhiModule::FilteredPhiModule(PhiModule module, HodgeData hodge)
    : module_(std::move(module)), hodge_(std::move(hodge)) {
    if (hodge_.rank() != module_.rank())
        throw InvalidInput("Hodge data of rank " + std::to_string(hodge_.rank()) + " on a module of rank " +
                           std::to_string(module_.rank()));
}

Rational degree(const FilteredPhiModule& m) { return Rational(m.hodge().t_h()) - m.module().t_n(); }

namespace {

bool is_stable(const PhiModule& m, const Subspace& w) {
    return w.is_stable(m.phi()) && w.is_stable(m.nilpotent());
}

void require_stable(const PhiModule& m, const Subspace& w) {
    if (w.ambient() != m.rank()) throw InvalidInput("subspace lives in the wrong ambient dimension");
    if (!is_stable(m, w)) throw InvalidInput("subspace " + w.str() + " is not (phi,N)-stable");
}

}  // namespace

Rational subobject_degree(const FilteredPhiModule& m, const Subspace& w) {
    require_stable(m.module(), w);
    if (w.is_zero()) return Rational(0);
    const Rational t_n = valuation(w.restrict(m.module().phi()).det(), m.module().p()).value();
    return Rational(induced_on_subspace(m.hodge(), w).t_h()) - t_n;
}

FilteredPhiModule sub_module(const FilteredPhiModule& m, const Subspace& w) {
    require_stable(m.module(), w);
    if (w.is_zero()) throw InvalidInput("zero subobject has no module structure");
    const auto& mod = m.module();
    return {PhiModule(mod.p(), w.restrict(mod.phi()), w.restrict(mod.nilpotent())),
            induced_on_subspace(m.hodge(), w)};
}

FilteredPhiModule quotient_module(const FilteredPhiModule& m, const Subspace& w) {
    require_stable(m.module(), w);
    if (w.is_whole()) throw InvalidInput("zero quotient has no module structure");
    const auto& mod = m.module();
    return {PhiModule(mod.p(), w.quotient(mod.phi()), w.quotient(mod.nilpotent())),
            induced_on_quotient(m.hodge(), w)};
}

FilteredPhiModule dual(const FilteredPhiModule& m) { return {dual(m.module()), dual_hodge(m.hodge())}; }

std::string to_string(Status s) {
    switch (s) {
        case Status::CertifiedTrue: return "certified-true";
        case Status::CertifiedFalse: return "certified-false";
        case Status::Uncertified: return "uncertified";
    }
    throw InternalError("unknown status");
}

namespace {

// Pairwise coprime irreducible factors of a squarefree charpoly, when certifiable.
std::optional<std::vector<Poly>> certified_factors(const PhiModule& m) {
    const Poly chi = charpoly(m.phi());
    if (!poly_squarefree(chi)) return std::nullopt;
    std::vector<Poly> factors;
    if (m.form() == PhiForm::DmNormal) {
        // Distinct slopes give distinct blocks x^h - p^a, irreducible since gcd(a, h) = 1.
        for (const auto& b : m.blocks()) {
            Poly f(b.size + 1, Rational(0));
            f.front() = -m.phi()(b.offset, b.offset + b.size - 1);
            f.back() = 1;
            factors.push_back(std::move(f));
        }
        return factors;
    }
    const auto roots = rational_roots(chi);
    if (!roots) return std::nullopt;
    Poly residual = chi;
    for (const auto& r : *roots) {
        factors.push_back(Poly{-r, Rational(1)});
        residual = poly_divmod(residual, factors.back()).first;
    }
    if (poly_degree(residual) > 0) {
        if (!provably_irreducible(residual)) return std::nullopt;
        factors.push_back(residual);
    }
    return factors;
}

Subspace kernel_of(const Poly& f, const RatMatrix& phi) {
    return Subspace(phi.rows(), nullspace(poly_eval(f, phi)));
}

Subspace closure(const PhiModule& m, Subspace s) {
    for (;;) {
        const Subspace next = s + s.image(m.phi()) + s.image(m.nilpotent());
        if (next.dim() == s.dim()) return s;
        s = next;
    }
}

bool is_scalar(const RatMatrix& phi) {
    return phi == RatMatrix::identity(phi.rows()) * phi(0, 0);
}

void sort_unique(std::vector<Subspace>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Subspace> subset_sums(const std::vector<Subspace>& parts, const PhiModule& m) {
    std::vector<Subspace> out;
    const std::size_t k = parts.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        Subspace s = Subspace::zero(m.rank());
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t{1} << i)) s = s + parts[i];
        if (s.is_stable(m.nilpotent())) out.push_back(std::move(s));
    }
    return out;
}

Vector random_vector(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> d(-3, 3);
    Vector v(n);
    for (auto& x : v) x = Rational(d(rng));
    return v;
}

std::vector<Subspace> sample_subobjects(const PhiModule& m, const HodgeData* hodge, const SearchOptions& opts) {
    const std::size_t n = m.rank();
    std::mt19937_64 rng(opts.seed);
    std::vector<Subspace> out{Subspace::zero(n), Subspace::whole(n)};

    std::vector<Subspace> eigen;
    if (const auto roots = rational_roots(charpoly(m.phi()))) {
        for (const auto& r : *roots) eigen.push_back(kernel_of(Poly{-r, Rational(1)}, m.phi()));
        if (eigen.size() <= 10)
            for (auto& s : subset_sums(eigen, m)) out.push_back(std::move(s));
    }
    if (hodge != nullptr && hodge->has_flag())
        for (const auto& step : hodge->steps()) {
            out.push_back(closure(m, step.space));
            for (const auto& v : step.space.basis()) out.push_back(closure(m, Subspace(n, {v})));
        }
    for (std::size_t i = 0; i < n; ++i) {
        Vector e(n, Rational(0));
        e[i] = 1;
        out.push_back(closure(m, Subspace(n, {e})));
    }
    for (std::size_t k = 0; k < opts.samples; ++k) {
        Vector v;
        if (!eigen.empty() && k % 2 == 0) {
            const auto& space = eigen[k / 2 % eigen.size()];
            v.assign(n, Rational(0));
            for (const auto& b : space.basis()) {
                const Rational c(static_cast<long>(rng() % 7) - 3);
                for (std::size_t j = 0; j < n; ++j) v[j] += c * b[j];
            }
        } else {
            v = random_vector(rng, n);
        }
        out.push_back(closure(m, Subspace(n, {v})));
    }
    sort_unique(out);
    return out;
}

// A family of stable subspaces over which every degree maximization needed by
// the deciders and the HN construction is attained.
struct Family {
    std::vector<Subspace> members;
    bool sufficient = false;
};

Family decision_family(const FilteredPhiModule& fm, const SearchOptions& opts) {
    const PhiModule& m = fm.module();
    const std::size_t n = m.rank();
    if (n == 1) return {{Subspace::zero(1), Subspace::whole(1)}, true};
    if (const auto factors = certified_factors(m)) {
        std::vector<Subspace> kernels;
        for (const auto& f : *factors) kernels.push_back(kernel_of(f, m.phi()));
        auto all = subset_sums(kernels, m);
        sort_unique(all);
        return {std::move(all), true};
    }
    if (is_scalar(m.phi()) && fm.hodge().has_flag()) {
        // Every subspace is stable and degree depends only on the position
        // relative to the flag; maxima sit on the flag itself.
        std::vector<Subspace> chain{Subspace::zero(n)};
        for (const auto& s : fm.hodge().steps()) chain.push_back(s.space);
        sort_unique(chain);
        return {std::move(chain), true};
    }
    return {sample_subobjects(m, &fm.hodge(), opts), false};
}

struct Scored {
    const Subspace* space;
    Rational degree;
};

std::vector<Scored> score(const FilteredPhiModule& fm, const std::vector<Subspace>& family) {
    std::vector<Scored> out;
    out.reserve(family.size());
    for (const auto& w : family) out.push_back({&w, subobject_degree(fm, w)});
    return out;
}

// Slope of a / b relative to base, or nullopt when the ranks coincide.
Rational relative_slope(const Scored& w, const Scored& base) {
    return (w.degree - base.degree) /
           Rational(static_cast<long>(w.space->dim() - base.space->dim()));
}

// Greedy HN steps over a family that contains 0 and the whole space.
std::vector<HNStep> hn_over(const std::vector<Scored>& scored, std::size_t n) {
    std::vector<HNStep> steps;
    const Scored* current = nullptr;
    for (const auto& s : scored)
        if (s.space->is_zero()) current = &s;
    if (current == nullptr) throw InternalError("decision family lacks the zero subspace");
    while (current->space->dim() < n) {
        const Scored* best = nullptr;
        Rational best_slope;
        for (const auto& s : scored) {
            if (s.space->dim() <= current->space->dim() || !s.space->contains(*current->space)) continue;
            const Rational slope = relative_slope(s, *current);
            const bool better = best == nullptr || slope > best_slope ||
                                (slope == best_slope && (s.space->dim() > best->space->dim() ||
                                                         (s.space->dim() == best->space->dim() &&
                                                          *s.space < *best->space)));
            if (better) {
                best = &s;
                best_slope = slope;
            }
        }
        if (best == nullptr) throw InternalError("decision family lacks the whole space");
        steps.push_back({*best->space, best_slope, best->space->dim(), best->degree});
        current = best;
    }
    return steps;
}

}  // namespace

SubobjectList enumerate_subobjects(const PhiModule& m, const SearchOptions& opts) {
    const std::size_t n = m.rank();
    if (n == 1) return {{Subspace::zero(1), Subspace::whole(1)}, true};
    if (const auto factors = certified_factors(m)) {
        std::vector<Subspace> kernels;
        for (const auto& f : *factors) kernels.push_back(kernel_of(f, m.phi()));
        auto all = subset_sums(kernels, m);
        sort_unique(all);
        return {std::move(all), true};
    }
    return {sample_subobjects(m, nullptr, opts), false};
}

SlopeMultiset HNFiltration::graded_slopes() const {
    std::vector<SlopeMultiset::Entry> e;
    std::size_t prev = 0;
    for (const auto& s : steps) {
        e.emplace_back(s.slope, static_cast<std::int64_t>(s.rank - prev));
        prev = s.rank;
    }
    return SlopeMultiset(std::move(e));
}

HNFiltration hn_filtration(const FilteredPhiModule& m, const SearchOptions& opts) {
    const Family fam = decision_family(m, opts);
    if (!fam.sufficient) return {false, {}};
    return {true, hn_over(score(m, fam.members), m.rank())};
}

namespace {

// Among violators, the preferred witness: maximal slope, then rank, then basis order.
const Scored* pick_max_slope(const std::vector<Scored>& cands) {
    const Scored* best = nullptr;
    for (const auto& c : cands) {
        if (best == nullptr) {
            best = &c;
            continue;
        }
        const Rational sc = c.degree / Rational(static_cast<long>(c.space->dim()));
        const Rational sb = best->degree / Rational(static_cast<long>(best->space->dim()));
        if (sc > sb || (sc == sb && (c.space->dim() > best->space->dim() ||
                                     (c.space->dim() == best->space->dim() && *c.space < *best->space))))
            best = &c;
    }
    return best;
}

// Among W with deg(M/W) < 0: minimal quotient slope, then maximal quotient rank, then basis order.
const Scored* pick_min_quotient(const std::vector<Scored>& cands, const Rational& total, std::size_t n) {
    const Scored* best = nullptr;
    Rational best_slope;
    for (const auto& c : cands) {
        const Rational slope = (total - c.degree) / Rational(static_cast<long>(n - c.space->dim()));
        if (best == nullptr || slope < best_slope ||
            (slope == best_slope && (c.space->dim() < best->space->dim() ||
                                     (c.space->dim() == best->space->dim() && *c.space < *best->space)))) {
            best = &c;
            best_slope = slope;
        }
    }
    return best;
}

}  // namespace

Verdict is_weakly_admissible(const FilteredPhiModule& m, const SearchOptions& opts) {
    const Rational total = degree(m);
    const Family fam = decision_family(m, opts);
    const auto scored = score(m, fam.members);
    std::vector<Scored> violators;
    for (const auto& s : scored)
        if (!s.space->is_zero() && s.degree.sign() > 0) violators.push_back(s);

    if (fam.sufficient && !opts.oracle) {
        const auto steps = hn_over(scored, m.rank());
        if (steps.front().slope.sign() > 0) return {Status::CertifiedFalse, steps.front().space};
        if (!total.is_zero()) return {Status::CertifiedFalse, Subspace::whole(m.rank())};
        return {Status::CertifiedTrue, std::nullopt};
    }
    if (!violators.empty()) return {Status::CertifiedFalse, *pick_max_slope(violators)->space};
    if (!total.is_zero()) return {Status::CertifiedFalse, Subspace::whole(m.rank())};
    return {fam.sufficient ? Status::CertifiedTrue : Status::Uncertified, std::nullopt};
}

Verdict is_acyclic(const FilteredPhiModule& m, const SearchOptions& opts) {
    const Rational total = degree(m);
    const std::size_t n = m.rank();
    const Family fam = decision_family(m, opts);
    const auto scored = score(m, fam.members);

    if (fam.sufficient && !opts.oracle) {
        const auto steps = hn_over(scored, n);
        if (steps.back().slope.sign() >= 0) return {Status::CertifiedTrue, std::nullopt};
        return {Status::CertifiedFalse, steps.size() > 1 ? steps[steps.size() - 2].space : Subspace::zero(n)};
    }
    std::vector<Scored> violators;
    for (const auto& s : scored)
        if (!s.space->is_whole() && (total - s.degree).sign() < 0) violators.push_back(s);
    if (!violators.empty()) return {Status::CertifiedFalse, *pick_min_quotient(violators, total, n)->space};
    return {fam.sufficient ? Status::CertifiedTrue : Status::Uncertified, std::nullopt};
}

namespace {

// Drops v from Fil^i: Fil^i becomes a hyperplane containing Fil^{i+1} and missing v.
HodgeData lower_once(const HodgeData& h, std::int64_t i, const Vector& v) {
    const std::size_t n = h.rank();
    const Subspace top = h.fil(i);
    const Subspace above = h.fil(i + 1);
    Subspace span = above + Subspace(n, {v});
    std::vector<Vector> extra;
    for (const auto& b : top.basis()) {
        if (span.contains(b)) continue;
        span = span + Subspace(n, {b});
        extra.push_back(b);
    }
    const Subspace hyper = above + Subspace(n, extra);

    std::vector<FlagStep> steps;
    for (const auto& s : h.steps())
        if (s.index != i && s.index != i - 1) steps.push_back(s);
    steps.push_back({i - 1, h.fil(i - 1)});
    steps.push_back({i, hyper});
    return HodgeData::from_flag(n, std::move(steps));
}

}  // namespace

FilteredPhiModule reduce_to_admissible(const FilteredPhiModule& m, const SearchOptions& opts) {
    const Verdict start = is_acyclic(m, opts);
    if (start.status == Status::Uncertified) throw Uncertified("acyclicity of the input is not certified");
    if (start.status == Status::CertifiedFalse) throw InvalidInput("filtration reduction needs an acyclic module");

    FilteredPhiModule cur = m;
    while (degree(cur).sign() > 0) {
        const HNFiltration hn = hn_filtration(cur, opts);
        if (!hn.certified) throw Uncertified("HN filtration of an intermediate module is not certified");
        // Degree-0 quotients all contain the positive-slope part, so the removed
        // vector must come from it when the minimal slope is 0.
        const Subspace part = hn.steps.back().slope.is_zero() ? hn.steps[hn.steps.size() - 2].space
                                                               : Subspace::whole(cur.rank());
        const HodgeData induced = induced_on_subspace(cur.hodge(), part);
        const std::int64_t i0 = induced.max_weight();
        const Subspace pick = intersect(part, cur.hodge().fil(i0));
        if (pick.is_zero()) throw InternalError("top induced weight has no vector");
        FilteredPhiModule next(cur.module(), lower_once(cur.hodge(), i0, pick.basis().front()));
        if (degree(next) != degree(cur) - Rational(1))
            throw InternalError("filtration lowering did not drop the degree by one");
        if (is_acyclic(next, opts).status != Status::CertifiedTrue)
            throw InternalError("filtration lowering lost acyclicity");
        cur = std::move(next);
    }
    return cur;
}

VstDimension vst_dimension(const FilteredPhiModule& m, const SearchOptions& opts) {
    const HNFiltration hn = hn_filtration(m, opts);
    if (!hn.certified) throw Uncertified("HN filtration is not certified");
    VstDimension d;
    std::size_t prev_rank = 0;
    Rational prev_deg(0);
    for (const auto& s : hn.steps) {
        const Rational deg = s.degree - prev_deg;
        const auto rank = static_cast<std::int64_t>(s.rank - prev_rank);
        if (s.slope.sign() >= 0) {
            d.dim += deg.to_int64();
            d.ht += rank;
        } else {
            d.h1_nonzero = true;
        }
        prev_rank = s.rank;
        prev_deg = s.degree;
    }
    return d;
}

}  // namespace slopes
