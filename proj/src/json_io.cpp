#include "slopes/json_io.hpp"

#include <algorithm>

#include "slopes/errors.hpp"

namespace slopes::io {

namespace {

[[noreturn]] void bad(const std::string& at, const std::string& what) {
    throw InvalidInput("at " + (at.empty() ? std::string("/") : at) + ": " + what);
}

std::string child(const std::string& at, const std::string& key) { return at + "/" + key; }
std::string child(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

const Json& array_at(const Json& j, const std::string& at) {
    if (!j.is_array()) bad(at, "expected an array");
    return j;
}

std::optional<std::reference_wrapper<const Json>> optional_member(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    return std::cref(*it);
}

std::string read_string(const Json& j, const std::string& at) {
    if (!j.is_string()) bad(at, "expected a string");
    return j.get<std::string>();
}

}  // namespace

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // Byte offsets from the parser are 1-based and point past the bad token.
        const std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + pos, '\n'));
        const std::size_t bol = text.rfind('\n', pos == 0 ? 0 : pos - 1);
        const std::size_t column = pos - (bol == std::string::npos || pos == 0 ? 0 : bol + 1) + 1;
        throw InvalidInput("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column) +
                           " (byte " + std::to_string(e.byte) + "): " + e.what());
    }
}

const Json& member(const Json& j, const char* key, const std::string& at) {
    if (!j.is_object()) bad(at, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(at, std::string("missing field \"") + key + "\"");
    return *it;
}

std::int64_t read_int(const Json& j, const std::string& at) {
    if (!j.is_number_integer()) bad(at, "expected an integer");
    return j.get<std::int64_t>();
}

Rational read_rational(const Json& j, const std::string& at) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    if (!j.is_string()) bad(at, "expected a rational string \"a/b\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const InvalidInput& e) {
        bad(at, e.what());
    }
}

Vector read_vector(const Json& j, const std::string& at) {
    Vector v;
    for (std::size_t i = 0; i < array_at(j, at).size(); ++i) v.push_back(read_rational(j[i], child(at, i)));
    return v;
}

RatMatrix read_matrix(const Json& j, const std::string& at) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < array_at(j, at).size(); ++i) rows.push_back(read_vector(j[i], child(at, i)));
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].size() != rows[0].size()) bad(child(at, i), "ragged matrix row");
    return RatMatrix::from_rows(rows);
}

PhiModule read_phi_module(const Json& j, const std::string& at) {
    const std::int64_t p = read_int(member(j, "p", at), child(at, "p"));
    const RatMatrix phi = read_matrix(member(j, "phi", at), child(at, "phi"));
    if (phi.rows() != phi.cols()) bad(child(at, "phi"), "phi must be square");
    const auto n = optional_member(j, "N");
    const RatMatrix nil = n ? read_matrix(n->get(), child(at, "N")) : RatMatrix(phi.rows(), phi.rows());
    PhiForm form = PhiForm::Matrix;
    if (const auto f = optional_member(j, "form")) {
        try {
            form = parse_phi_form(read_string(f->get(), child(at, "form")));
        } catch (const InvalidInput& e) {
            bad(child(at, "form"), e.what());
        }
    }
    try {
        return PhiModule(static_cast<long>(p), phi, nil, form);
    } catch (const InvalidInput& e) {
        bad(at, e.what());
    }
}

HodgeData read_hodge(const Json& j, std::size_t rank, const std::string& at) {
    if (!j.is_object()) bad(at, "expected an object");
    try {
        if (const auto w = optional_member(j, "weights")) {
            std::vector<std::int64_t> weights;
            for (std::size_t i = 0; i < array_at(w->get(), child(at, "weights")).size(); ++i)
                weights.push_back(read_int(w->get()[i], child(child(at, "weights"), i)));
            return HodgeData::from_weights(std::move(weights));
        }
        const std::string fat = child(at, "flag");
        const Json& flag = array_at(member(j, "flag", at), fat);
        std::vector<FlagStep> steps;
        for (std::size_t i = 0; i < flag.size(); ++i) {
            const std::string sat = child(fat, i);
            const std::int64_t index = read_int(member(flag[i], "index", sat), child(sat, "index"));
            std::vector<Vector> basis;
            const Json& b = array_at(member(flag[i], "basis", sat), child(sat, "basis"));
            for (std::size_t k = 0; k < b.size(); ++k) {
                basis.push_back(read_vector(b[k], child(child(sat, "basis"), k)));
                if (basis.back().size() != rank)
                    bad(child(child(sat, "basis"), k), "vector length " + std::to_string(basis.back().size()) +
                                                           " != rank " + std::to_string(rank));
            }
            steps.push_back({index, Subspace(rank, basis)});
        }
        return HodgeData::from_flag(rank, std::move(steps));
    } catch (const InvalidInput& e) {
        if (std::string(e.what()).starts_with("at ")) throw;
        bad(at, e.what());
    }
}

FilteredPhiModule read_filtered(const Json& j, const std::string& at) {
    PhiModule m = read_phi_module(member(j, "module", at), child(at, "module"));
    HodgeData h = read_hodge(member(j, "hodge", at), m.rank(), child(at, "hodge"));
    try {
        return {std::move(m), std::move(h)};
    } catch (const InvalidInput& e) {
        bad(at, e.what());
    }
}

FFSheaf read_sheaf(const Json& j, const std::string& at) {
    if (!j.is_object()) bad(at, "expected an object");
    std::vector<FFSheaf::Summand> summands;
    if (const auto b = optional_member(j, "bundle")) {
        const std::string bat = child(at, "bundle");
        for (std::size_t i = 0; i < array_at(b->get(), bat).size(); ++i) {
            const Json& s = b->get()[i];
            const std::string sat = child(bat, i);
            summands.push_back({read_rational(member(s, "slope", sat), child(sat, "slope")),
                                read_int(member(s, "copies", sat), child(sat, "copies"))});
        }
    }
    std::map<std::string, std::vector<std::int64_t>> torsion;
    if (const auto t = optional_member(j, "torsion")) {
        const std::string tat = child(at, "torsion");
        for (std::size_t i = 0; i < array_at(t->get(), tat).size(); ++i) {
            const Json& s = t->get()[i];
            const std::string sat = child(tat, i);
            const std::string point = read_string(member(s, "point", sat), child(sat, "point"));
            const Json& lengths = array_at(member(s, "lengths", sat), child(sat, "lengths"));
            auto& dst = torsion[point];
            for (std::size_t k = 0; k < lengths.size(); ++k)
                dst.push_back(read_int(lengths[k], child(child(sat, "lengths"), k)));
        }
    }
    try {
        return FFSheaf::from_copies(summands, std::move(torsion));
    } catch (const InvalidInput& e) {
        bad(at, e.what());
    }
}

BCPiece read_piece(const Json& j, const std::string& at) {
    const std::string type = read_string(member(j, "type", at), child(at, "type"));
    auto get = [&](const char* key) { return read_int(member(j, key, at), child(at, key)); };
    try {
        if (type == "Ueff") return BCPiece::ueff(get("d"), get("h"));
        if (type == "Uquot") return BCPiece::uquot(get("d"), get("h"));
        if (type == "Tors") return BCPiece::tors(read_string(member(j, "point", at), child(at, "point")), get("length"));
        if (type == "Qp") return BCPiece::qp(get("n"));
    } catch (const InvalidInput& e) {
        if (std::string(e.what()).starts_with("at ")) throw;
        bad(at, e.what());
    }
    bad(child(at, "type"), "unknown piece type \"" + type + "\"");
}

BCObject read_bc(const Json& j, const std::string& at) {
    BCObject w;
    const std::string pat = child(at, "pieces");
    const Json& pieces = array_at(member(j, "pieces", at), pat);
    for (std::size_t i = 0; i < pieces.size(); ++i) w.pieces.push_back(read_piece(pieces[i], child(pat, i)));
    return w;
}

QBCObject read_qbc(const Json& j, const std::string& at) {
    QBCObject q;
    q.quotient = read_bc(j, at);
    if (const auto c = optional_member(j, "core")) {
        for (std::size_t i = 0; i < array_at(c->get(), child(at, "core")).size(); ++i) {
            const std::int64_t len = read_int(c->get()[i], child(child(at, "core"), i));
            if (len < 1) bad(child(child(at, "core"), i), "torsion length must be positive");
            q.torsion_core.push_back(len);
        }
    }
    return q;
}

Dimension read_dimension(const Json& j, const std::string& at) {
    return {read_int(member(j, "dim", at), child(at, "dim")), read_int(member(j, "ht", at), child(at, "ht"))};
}

SeqArrow read_arrow(const Json& j, const std::string& at) {
    if (!j.is_object()) bad(at, "expected an object");
    SeqArrow a;
    if (const auto k = optional_member(j, "kernel")) a.kernel = read_dimension(k->get(), child(at, "kernel"));
    if (const auto i = optional_member(j, "image")) a.image = read_dimension(i->get(), child(at, "image"));
    return a;
}

SyntheticCohomology read_synthetic(const Json& j, const std::string& at) {
    const std::int64_t r = read_int(member(j, "r", at), child(at, "r"));
    const std::string dat = child(at, "degrees");
    const Json& degrees = member(j, "degrees", at);
    auto degree = [&](const Json& d, const std::string& dpath) {
        PhiModule hk = read_phi_module(member(d, "hk", dpath), child(dpath, "hk"));
        HodgeData lattice = read_hodge(member(d, "lattice", dpath), hk.rank(), child(dpath, "lattice"));
        return DegreeData{std::move(hk), std::move(lattice)};
    };
    std::optional<DegreeData> previous;
    if (const auto prev = optional_member(degrees, "r-1")) previous = degree(prev->get(), child(dat, "r-1"));
    return {r, std::move(previous), degree(member(degrees, "r", dat), child(dat, "r"))};
}

MvRow read_row(const Json& j, const std::string& at) {
    MvRow row;
    const std::string nat = child(at, "nodes");
    const Json& nodes = array_at(member(j, "nodes", at), nat);
    for (std::size_t i = 0; i < nodes.size(); ++i) row.nodes.push_back(read_qbc(nodes[i], child(nat, i)));
    if (const auto a = optional_member(j, "arrows")) {
        const std::string aat = child(at, "arrows");
        for (std::size_t i = 0; i < array_at(a->get(), aat).size(); ++i)
            row.arrows.push_back(read_arrow(a->get()[i], child(aat, i)));
    }
    return row;
}

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const RatMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m.row_list()) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.str());
        out.push_back(std::move(r));
    }
    return out;
}

Json to_json(const Subspace& s) {
    Json out = Json::array();
    for (const auto& v : s.basis()) {
        Json r = Json::array();
        for (const auto& x : v) r.push_back(x.str());
        out.push_back(std::move(r));
    }
    return out;
}

Json to_json(const SlopeMultiset& s) {
    Json out = Json::array();
    for (const auto& [slope, mult] : s.entries()) out.push_back(Json::array({slope.str(), mult}));
    return out;
}

Json to_json(const PhiModule& m) {
    return Json{{"p", m.p()}, {"phi", to_json(m.phi())}, {"N", to_json(m.nilpotent())}, {"form", to_string(m.form())}};
}

Json to_json(const HodgeData& h) {
    if (!h.has_flag()) return Json{{"weights", h.weights()}};
    Json flag = Json::array();
    for (const auto& step : h.steps()) flag.push_back(Json{{"index", step.index}, {"basis", to_json(step.space)}});
    return Json{{"flag", std::move(flag)}};
}

Json to_json(const FilteredPhiModule& m) { return Json{{"module", to_json(m.module())}, {"hodge", to_json(m.hodge())}}; }

Json to_json(const FFSheaf& s) {
    Json bundle = Json::array();
    for (const auto& [slope, copies] : s.bundle()) bundle.push_back(Json{{"slope", slope.str()}, {"copies", copies}});
    Json torsion = Json::array();
    for (const auto& [point, lengths] : s.torsion()) torsion.push_back(Json{{"point", point}, {"lengths", lengths}});
    return Json{{"bundle", std::move(bundle)}, {"torsion", std::move(torsion)}};
}

Json to_json(const BCPiece& p) {
    switch (p.kind) {
        case PieceKind::Ueff: return Json{{"type", "Ueff"}, {"d", p.d}, {"h", p.h}};
        case PieceKind::Uquot: return Json{{"type", "Uquot"}, {"d", p.d}, {"h", p.h}};
        case PieceKind::Tors: return Json{{"type", "Tors"}, {"point", p.point}, {"length", p.m}};
        case PieceKind::Qp: return Json{{"type", "Qp"}, {"n", p.m}};
    }
    throw InternalError("unknown piece kind");
}

Json to_json(const BCObject& w) {
    Json pieces = Json::array();
    for (const auto& p : w.pieces) pieces.push_back(to_json(p));
    return Json{{"pieces", std::move(pieces)}};
}

Json to_json(const Dimension& d) { return Json{{"dim", d.dim}, {"ht", d.ht}}; }

Json to_json(const Verdict& v) {
    Json out{{"status", to_string(v.status)}};
    if (v.witness) out["witness"] = to_json(*v.witness);
    return out;
}

Json to_json(const HNFiltration& hn) {
    Json steps = Json::array();
    for (const auto& s : hn.steps)
        steps.push_back(Json{{"basis", to_json(s.space)},
                             {"slope", s.slope.str()},
                             {"rank", s.rank},
                             {"degree", s.degree.str()}});
    return Json{{"certified", hn.certified}, {"steps", std::move(steps)}, {"slopes", to_json(hn.graded_slopes())}};
}

Json to_json(const BatteryReport& r) {
    Json out{{"verdict_a", to_json(r.a)},
             {"verdict_b_rm1", to_json(r.b_rm1)},
             {"verdict_b_r", to_json(r.b_r)},
             {"verdict_cprime", to_json(r.cprime)},
             {"verdict_d", to_json(r.d)},
             {"consistent", r.consistent},
             {"status", to_string(r.overall)}};
    out["height"] = r.height ? Json(*r.height) : Json(nullptr);
    out["dim_hdr"] = r.dim_hdr;
    return out;
}

}  // namespace slopes::io
