#include "slopes/bc.hpp"

#include <algorithm>
#include <map>
#include <regex>

#include "slopes/errors.hpp"

namespace slopes {

BCPiece BCPiece::ueff(std::int64_t d, std::int64_t h) {
    if (d < 0 || h < 1) throw InvalidInput("Ueff needs d >= 0 and h >= 1");
    return {PieceKind::Ueff, d, h, 0, {}};
}

BCPiece BCPiece::uquot(std::int64_t d, std::int64_t h) {
    if (d < 1 || h < 1) throw InvalidInput("Uquot needs d >= 1 and h >= 1");
    return {PieceKind::Uquot, d, h, 0, {}};
}

BCPiece BCPiece::tors(std::string point, std::int64_t length) {
    if (length < 1) throw InvalidInput("torsion length must be positive");
    if (point.empty()) throw InvalidInput("torsion point label must be nonempty");
    return {PieceKind::Tors, 0, 0, length, std::move(point)};
}

BCPiece BCPiece::qp(std::int64_t n) {
    if (n < 1) throw InvalidInput("Qp multiplicity must be positive");
    return {PieceKind::Qp, 0, 0, n, {}};
}

Dimension BCPiece::dimension() const {
    switch (kind) {
        case PieceKind::Ueff: return {d, h};
        case PieceKind::Uquot: return {d, -h};
        case PieceKind::Tors: return {m, 0};
        case PieceKind::Qp: return {0, m};
    }
    throw InternalError("unknown piece kind");
}

std::string BCPiece::str() const {
    switch (kind) {
        case PieceKind::Ueff: return "Ueff(" + std::to_string(d) + "," + std::to_string(h) + ")";
        case PieceKind::Uquot: return "Uquot(" + std::to_string(d) + "," + std::to_string(h) + ")";
        case PieceKind::Tors: return "Tors(" + point + "," + std::to_string(m) + ")";
        case PieceKind::Qp: return "Qp(" + std::to_string(m) + ")";
    }
    throw InternalError("unknown piece kind");
}

Dimension BCObject::dimension() const {
    Dimension d;
    for (const auto& p : pieces) d += p.dimension();
    return d;
}

Dimension QBCObject::dimension() const {
    Dimension d = quotient.dimension();
    for (auto len : torsion_core) {
        if (len < 1) throw InvalidInput("torsion core lengths must be positive");
        d.dim += len;
    }
    return d;
}

std::vector<BCSlope> hn_slopes(const BCObject& w) {
    // Key: nullopt (-inf) sorts first.
    std::map<std::optional<Rational>, std::int64_t> acc;
    for (const auto& p : w.pieces) {
        switch (p.kind) {
            case PieceKind::Ueff:
                if (p.d == 0)
                    acc[std::nullopt] += p.h;
                else
                    acc[Rational(Integer(-p.h), Integer(p.d))] += p.d;
                break;
            case PieceKind::Uquot: acc[Rational(Integer(p.h), Integer(p.d))] += p.d; break;
            case PieceKind::Tors: acc[Rational(0)] += p.m; break;
            case PieceKind::Qp: acc[std::nullopt] += p.m; break;
        }
    }
    std::vector<BCSlope> out;
    for (const auto& [s, mult] : acc) out.push_back({s, mult});
    return out;
}

int curvature_sign(const BCPiece& piece) {
    switch (piece.kind) {
        case PieceKind::Uquot: return 1;
        case PieceKind::Tors: return piece.point == "infty" ? 0 : 1;
        case PieceKind::Ueff:
        case PieceKind::Qp: return -1;
    }
    throw InternalError("unknown piece kind");
}

CanonicalFiltration canonical_filtration(const BCObject& w) {
    CanonicalFiltration f;
    for (const auto& p : w.pieces) {
        const int s = curvature_sign(p);
        (s > 0 ? f.gt0 : s == 0 ? f.eq0 : f.lt0).pieces.push_back(p);
    }
    return f;
}

namespace {

bool valid_bc_dimension(const Dimension& d) { return d.dim >= 0 && (d.dim > 0 || d.ht >= 0); }

bool is_power_of_c(const std::optional<BCObject>& w) {
    if (!w || w->pieces.empty()) return false;
    return std::all_of(w->pieces.begin(), w->pieces.end(), [](const BCPiece& p) {
        return p.kind == PieceKind::Tors && p.point == "infty" && p.m == 1;
    });
}

}  // namespace

namespace {

void check_arrow_count(const std::vector<SeqNode>& nodes, const std::vector<SeqArrow>& arrows) {
    if (nodes.empty()) throw InvalidInput("exact sequence needs at least one node");
    if (!arrows.empty() && arrows.size() + 1 != nodes.size() && arrows.size() != nodes.size())
        throw InvalidInput("expected " + std::to_string(nodes.size() - 1) + " or " + std::to_string(nodes.size()) +
                           " arrows, got " + std::to_string(arrows.size()));
    if (arrows.size() == nodes.size() && !arrows.back().image)
        throw InvalidInput("the outgoing arrow of an open sequence needs a declared image");
}

}  // namespace

std::vector<Dimension> arrow_images(const std::vector<SeqNode>& nodes, const std::vector<SeqArrow>& arrows) {
    check_arrow_count(nodes, arrows);
    const std::size_t count = std::max(nodes.size() - 1, arrows.size());
    std::vector<Dimension> images;
    Dimension prev;
    for (std::size_t i = 0; i < count; ++i) {
        const SeqArrow arrow = arrows.empty() ? SeqArrow{} : arrows[i];
        const Dimension kernel = arrow.kernel.value_or(prev);
        prev = arrow.image.value_or(nodes[i].dimension - kernel);
        images.push_back(prev);
    }
    return images;
}

ExactnessReport check_exact(const std::vector<SeqNode>& nodes, const std::vector<SeqArrow>& arrows) {
    check_arrow_count(nodes, arrows);
    const bool open = arrows.size() == nodes.size();
    ExactnessReport r;
    auto fail = [&r](std::string msg) {
        r.exact = false;
        r.violations.push_back(std::move(msg));
    };
    Dimension prev_image;
    const std::size_t count = open ? nodes.size() : nodes.size() - 1;
    for (std::size_t i = 0; i < count; ++i) {
        const std::string at = "arrow " + std::to_string(i);
        const SeqArrow arrow = arrows.empty() ? SeqArrow{} : arrows[i];
        const Dimension kernel = arrow.kernel.value_or(prev_image);
        if (kernel != prev_image)
            fail("node " + std::to_string(i) + ": Dim Ker " + kernel.str() + " != Dim Im of previous arrow " +
                 prev_image.str());
        const Dimension image = arrow.image.value_or(nodes[i].dimension - kernel);
        if (nodes[i].dimension != kernel + image)
            fail(at + ": Dim source " + nodes[i].dimension.str() + " != Dim Ker + Dim Im " + (kernel + image).str());
        std::vector<std::pair<const char*, Dimension>> parts{{"Ker", kernel}, {"Im", image}};
        const bool has_target = i + 1 < nodes.size();
        if (has_target) parts.emplace_back("Coker", nodes[i + 1].dimension - image);
        for (const auto& [name, d] : parts)
            if (!valid_bc_dimension(d)) fail(at + ": Dim " + name + " " + d.str() + " is not a valid Dimension");
        if (has_target && kernel.is_zero() && is_power_of_c(nodes[i + 1].object) && nodes[i].object)
            for (const auto& p : nodes[i].object->pieces)
                if (p.kind == PieceKind::Ueff && p.d > 0 && p.h <= p.d)
                    fail(at + ": " + p.str() + " cannot inject into a power of C (needs h > d)");
        prev_image = image;
    }
    if (!open && nodes.back().dimension != prev_image)
        fail("node " + std::to_string(nodes.size() - 1) + ": Dim " + nodes.back().dimension.str() +
             " != Dim Im of incoming arrow " + prev_image.str());
    return r;
}

HeightRank height_functor_rank(const BCObject& w, std::int64_t correction) {
    const bool flat = canonical_filtration(w).gt0.pieces.empty();
    const std::int64_t ht = w.dimension().ht;
    return flat ? HeightRank{ht, true} : HeightRank{ht + correction, false};
}

HeightRank height_functor_rank(const QBCObject& w, std::int64_t correction) {
    return height_functor_rank(w.quotient, correction);
}

AlmostC AlmostC::parse(const std::string& label) {
    static const std::regex re(R"(^(C|B|Qp)(?:\((-?\d+)\))?(?:\((-?\d+)\))?$)");
    std::smatch m;
    if (!std::regex_match(label, m, re)) throw InvalidInput("unsupported almost-C label \"" + label + "\"");
    const std::string kind = m[1];
    auto num = [&](int i) { return std::stoll(m[i].str()); };
    if (kind == "C") {
        if (m[3].matched) throw InvalidInput("C takes a single twist: \"" + label + "\"");
        return c(m[2].matched ? num(2) : 0);
    }
    if (!m[2].matched) throw InvalidInput("\"" + label + "\" needs a parameter");
    const std::int64_t a = num(2);
    const std::int64_t twist = m[3].matched ? num(3) : 0;
    if (a < 1) throw InvalidInput("\"" + label + "\" needs a positive parameter");
    if (kind == "B") return b(a, twist);
    AlmostC q = qp(a);
    q.twist = twist;
    return q;
}

AlmostC AlmostC::twisted(std::int64_t r) const {
    AlmostC t = *this;
    t.twist += r;
    return t;
}

std::string AlmostC::str() const {
    const std::string tw = twist == 0 ? "" : "(" + std::to_string(twist) + ")";
    if (kind == Kind::Qp) return "Qp(" + std::to_string(n) + ")" + tw;
    if (k == 1) return "C(" + std::to_string(twist) + ")";
    return "B(" + std::to_string(k) + ")" + tw;
}

namespace {

// Ext^i(B_dR^+/t^k, C(j)) over K.
std::array<std::int64_t, 3> torsion_vs_twist(std::int64_t k, std::int64_t j) {
    return {j == 0 ? 1 : 0, (j == 0 || j == k) ? 1 : 0, j == k ? 1 : 0};
}

}  // namespace

ExtTable ext_tables(const AlmostC& x, const AlmostC& y, std::int64_t k_degree) {
    if (k_degree < 1) throw InvalidInput("[K:Q_p] must be positive");
    ExtTable t;
    t.euler_characteristic = -k_degree * x.height() * y.height();
    if (x.kind != AlmostC::Kind::B || y.kind != AlmostC::Kind::B) return t;

    std::optional<std::array<std::int64_t, 3>> over_k;
    if (y.k == 1) {
        over_k = torsion_vs_twist(x.k, y.twist - x.twist);
        t.source = "twist-table";
    } else if (x.k == 1) {
        // Perfect pairing Ext^i(X, Y) x Ext^{2-i}(Y, X(1)).
        const auto d = torsion_vs_twist(y.k, x.twist + 1 - y.twist);
        over_k = std::array<std::int64_t, 3>{d[2], d[1], d[0]};
        t.source = "dual-twist-table";
    } else {
        // B(i) against t^{-N} B_dR^+/t^j = B(N+j)(-N) with N >= 0 and i < j.
        const std::int64_t n = x.twist - y.twist;
        if (n >= 0 && y.k - n > x.k) {
            over_k = std::array<std::int64_t, 3>{0, 0, 0};
            t.source = "length-vanishing";
        }
    }
    if (over_k) {
        t.dims_over_k = over_k;
        t.dims = std::array<std::int64_t, 3>{k_degree * (*over_k)[0], k_degree * (*over_k)[1],
                                              k_degree * (*over_k)[2]};
    }
    return t;
}

}  // namespace slopes
