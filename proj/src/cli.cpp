#include "slopes/cli.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "slopes/errors.hpp"
#include "slopes/json_io.hpp"
#include "slopes/polynomial.hpp"

namespace slopes::cli {

namespace {

using io::Json;

struct Output {
    Output(int c, Json j) : code(c), json(std::move(j)) {}
    Output(int c, std::string t) : code(c), text(std::move(t)) {}

    int code;
    Json json;
    std::optional<std::string> text;  // replaces json when set
};

int status_code(Status s) {
    switch (s) {
        case Status::CertifiedTrue: return kSuccess;
        case Status::CertifiedFalse: return kFalse;
        default: return kUncertified;
    }
}

struct Context {
    const Json& in;
    SearchOptions opts;
    std::string format;
};

bool has(const Json& j, const char* key) { return j.is_object() && j.contains(key); }

FilteredPhiModule filtered(const Context& c) { return io::read_filtered(c.in); }

HodgeData standalone_hodge(const Json& j) {
    std::size_t rank = 0;
    if (has(j, "rank")) {
        rank = static_cast<std::size_t>(io::read_int(j["rank"], "/rank"));
    } else if (has(j, "weights")) {
        rank = j["weights"].is_array() ? j["weights"].size() : 0;
    } else if (has(j, "flag") && j["flag"].is_array() && !j["flag"].empty() && has(j["flag"][0], "basis") &&
               j["flag"][0]["basis"].is_array() && !j["flag"][0]["basis"].empty() &&
               j["flag"][0]["basis"][0].is_array()) {
        rank = j["flag"][0]["basis"][0].size();
    } else {
        throw InvalidInput("at /: flag input needs \"rank\" or a nonempty first basis");
    }
    return io::read_hodge(j, rank);
}

Json polygon_json(const Polygon& poly) {
    Json out = Json::array();
    for (const auto& v : poly.vertices()) out.push_back(Json::array({v.x, v.y.str()}));
    return out;
}

SlopeMultiset weight_slopes(const HodgeData& h) {
    std::vector<SlopeMultiset::Entry> e;
    for (std::int64_t w : h.weights()) e.emplace_back(Rational(static_cast<long>(w)), 1);
    return SlopeMultiset(std::move(e));
}

Output cmd_newton(const Context& c) {
    const Json& j = c.in;
    if (has(j, "coefficients"))
        return {kSuccess, io::to_json(newton_polygon(io::read_vector(j["coefficients"], "/coefficients"),
                                                     static_cast<long>(io::read_int(io::member(j, "p", ""), "/p"))))};
    if (has(j, "module")) return {kSuccess, io::to_json(filtered(c).module().newton_slopes())};
    return {kSuccess, io::to_json(io::read_phi_module(j).newton_slopes())};
}

Output cmd_hodge(const Context& c) {
    const HodgeData h = has(c.in, "module") ? filtered(c).hodge() : standalone_hodge(c.in);
    Json out{{"weights", h.weights()}, {"t_h", h.t_h()}};
    out["polygon"] = polygon_json(Polygon::from_slopes(weight_slopes(h)));
    out["dual"] = io::to_json(dual_hodge(h));
    return {kSuccess, std::move(out)};
}

Output cmd_hn(const Context& c) {
    const HNFiltration hn = hn_filtration(filtered(c), c.opts);
    return {hn.certified ? kSuccess : kUncertified, io::to_json(hn)};
}

Output cmd_wa(const Context& c) {
    const Verdict v = is_weakly_admissible(filtered(c), c.opts);
    return {status_code(v.status), io::to_json(v)};
}

Output cmd_acyclic(const Context& c) {
    const Verdict v = is_acyclic(filtered(c), c.opts);
    return {status_code(v.status), io::to_json(v)};
}

Output cmd_reduce(const Context& c) { return {kSuccess, io::to_json(reduce_to_admissible(filtered(c), c.opts))}; }

Output cmd_vst(const Context& c) {
    const VstDimension v = vst_dimension(filtered(c), c.opts);
    return {kSuccess, Json{{"dim", v.dim}, {"ht", v.ht}, {"h1_nonzero", v.h1_nonzero}}};
}

Output cmd_tensor(const Context& c) {
    const Json& a = io::member(c.in, "a", "");
    const Json& b = io::member(c.in, "b", "");
    if (has(a, "phi")) return {kSuccess, io::to_json(tensor(io::read_phi_module(a, "/a"), io::read_phi_module(b, "/b")))};
    return {kSuccess, io::to_json(tensor(io::read_sheaf(a, "/a"), io::read_sheaf(b, "/b")))};
}

Output cmd_cohdim(const Context& c) {
    if (has(c.in, "a") && has(c.in, "b")) {
        const HomRecord h = hom_dim(io::read_sheaf(c.in["a"], "/a"), io::read_sheaf(c.in["b"], "/b"));
        Json out{{"dimension", io::to_json(h.dimension)}};
        out["qp_dimension"] = h.qp_dimension ? Json(*h.qp_dimension) : Json(nullptr);
        out["kind"] = h.kind;
        if (h.kind == "torsion-module") out["module_rank"] = h.module_rank;
        return {kSuccess, std::move(out)};
    }
    const CohomologyDims d = cohomology_dim(io::read_sheaf(c.in));
    return {kSuccess,
            Json{{"h0", io::to_json(d.h0)}, {"h1", io::to_json(d.h1)}, {"h1_quotient_type", d.h1_quotient_type}}};
}

Json height_json(const HeightRank& h) { return Json{{"rank", h.rank}, {"certified", h.certified}}; }

Output cmd_bc_dim(const Context& c) {
    const Json& j = c.in;
    if (has(j, "sequence")) {
        const Json& seq = j["sequence"];
        const Json& nodes = io::member(seq, "nodes", "/sequence");
        if (!nodes.is_array()) throw InvalidInput("at /sequence/nodes: expected an array");
        std::vector<SeqNode> sn;
        Json dims = Json::array();
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const QBCObject q = io::read_qbc(nodes[i], "/sequence/nodes/" + std::to_string(i));
            sn.push_back(q.torsion_core.empty() ? SeqNode::of(q.quotient) : SeqNode::of(q));
            dims.push_back(io::to_json(q.dimension()));
        }
        std::vector<SeqArrow> arrows;
        if (has(seq, "arrows")) {
            const Json& a = seq["arrows"];
            if (!a.is_array()) throw InvalidInput("at /sequence/arrows: expected an array");
            for (std::size_t i = 0; i < a.size(); ++i)
                arrows.push_back(io::read_arrow(a[i], "/sequence/arrows/" + std::to_string(i)));
        }
        const ExactnessReport rep = check_exact(sn, arrows);
        return {rep.exact ? kSuccess : kFalse,
                Json{{"exact", rep.exact}, {"violations", rep.violations}, {"dimensions", std::move(dims)}}};
    }
    const Json& obj = has(j, "object") ? j["object"] : j;
    const std::string at = has(j, "object") ? "/object" : "";
    const QBCObject q = io::read_qbc(obj, at);
    const std::int64_t correction = has(j, "correction") ? io::read_int(j["correction"], "/correction") : 0;
    Json out{{"dimension", io::to_json(q.dimension())}};
    if (q.torsion_core.empty()) {
        Json slopes = Json::array();
        for (const auto& s : hn_slopes(q.quotient))
            slopes.push_back(Json::array({s.slope ? s.slope->str() : std::string("-inf"), s.multiplicity}));
        out["hn_slopes"] = std::move(slopes);
    }
    out["height_rank"] = height_json(height_functor_rank(q, correction));
    return {kSuccess, std::move(out)};
}

Output cmd_canfil(const Context& c) {
    const Json& obj = has(c.in, "object") ? c.in["object"] : c.in;
    const CanonicalFiltration f = canonical_filtration(io::read_bc(obj, has(c.in, "object") ? "/object" : ""));
    return {kSuccess, Json{{"gt0", io::to_json(f.gt0)}, {"eq0", io::to_json(f.eq0)}, {"lt0", io::to_json(f.lt0)}}};
}

Output cmd_ext(const Context& c) {
    auto label = [&](const char* key) {
        const Json& v = io::member(c.in, key, "");
        if (!v.is_string()) throw InvalidInput(std::string("at /") + key + ": expected a label string");
        try {
            return AlmostC::parse(v.get<std::string>());
        } catch (const InvalidInput& e) {
            throw InvalidInput(std::string("at /") + key + ": " + e.what());
        }
    };
    const std::int64_t k_degree = has(c.in, "k_degree") ? io::read_int(c.in["k_degree"], "/k_degree") : 1;
    const AlmostC x = label("x"), y = label("y");
    const ExtTable t = ext_tables(x, y, k_degree);
    Json out{{"x", x.str()}, {"y", y.str()}};
    out["dims"] = t.dims ? Json(*t.dims) : Json(nullptr);
    out["dims_over_k"] = t.dims_over_k ? Json(*t.dims_over_k) : Json(nullptr);
    out["euler_characteristic"] = t.euler_characteristic;
    out["source"] = t.source;
    return {kSuccess, std::move(out)};
}

Output cmd_battery(const Context& c) {
    const BatteryReport r = battery(io::read_synthetic(c.in), c.opts);
    return {status_code(r.overall), io::to_json(r)};
}

Output cmd_dichotomy(const Context& c) {
    const PhiModule hk = io::read_phi_module(io::member(c.in, "hk", ""), "/hk");
    const HodgeData lattice = io::read_hodge(io::member(c.in, "lattice", ""), hk.rank(), "/lattice");
    const std::int64_t r = io::read_int(io::member(c.in, "r", ""), "/r");
    const DichotomyResult d = dichotomy(hk, lattice, r, c.opts);
    Json out{{"branch", to_string(d.branch)}};
    out["deficit"] = d.deficit ? Json(*d.deficit) : Json(nullptr);
    return {kSuccess, std::move(out)};
}

Output cmd_mv_check(const Context& c) {
    const std::int64_t r = io::read_int(io::member(c.in, "r", ""), "/r");
    const Json& rows = io::member(c.in, "rows", "");
    const MvResult res = mv_check(io::read_row(io::member(rows, "A", "/rows"), "/rows/A"),
                                  io::read_row(io::member(rows, "B", "/rows"), "/rows/B"), r);
    return {kSuccess, Json{{"status", to_string(Status::CertifiedTrue)},
                           {"height", res.height},
                           {"rank_a", height_json(res.rank_a)},
                           {"rank_b", height_json(res.rank_b)}}};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string render_svg(const std::vector<std::pair<std::string, Polygon>>& polys) {
    std::int64_t xmin = 0, xmax = 1;
    double ymin = 0, ymax = 1;
    for (const auto& [name, p] : polys)
        for (const auto& v : p.vertices()) {
            xmin = std::min(xmin, v.x);
            xmax = std::max(xmax, v.x);
            ymin = std::min(ymin, v.y.to_double());
            ymax = std::max(ymax, v.y.to_double());
        }
    const auto y0 = static_cast<std::int64_t>(std::floor(ymin)), y1 = static_cast<std::int64_t>(std::ceil(ymax));
    constexpr int kUnit = 40, kPad = 20;
    const std::int64_t w = (xmax - xmin) * kUnit + 2 * kPad, h = (y1 - y0) * kUnit + 2 * kPad;
    auto sx = [&](double x) { return fmt(kPad + (x - static_cast<double>(xmin)) * kUnit); };
    auto sy = [&](double y) { return fmt(kPad + (static_cast<double>(y1) - y) * kUnit); };
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
      << ' ' << h << "\">\n";
    s << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (std::int64_t x = xmin; x <= xmax; ++x)
        s << "<line x1=\"" << sx(static_cast<double>(x)) << "\" y1=\"" << sy(static_cast<double>(y0)) << "\" x2=\""
          << sx(static_cast<double>(x)) << "\" y2=\"" << sy(static_cast<double>(y1)) << "\"/>\n";
    for (std::int64_t y = y0; y <= y1; ++y)
        s << "<line x1=\"" << sx(static_cast<double>(xmin)) << "\" y1=\"" << sy(static_cast<double>(y)) << "\" x2=\""
          << sx(static_cast<double>(xmax)) << "\" y2=\"" << sy(static_cast<double>(y)) << "\"/>\n";
    s << "</g>\n";
    const char* colors[] = {"#1f4e99", "#b03a2e"};
    std::size_t i = 0;
    for (const auto& [name, p] : polys) {
        s << "<polyline class=\"" << name << "\" fill=\"none\" stroke=\"" << colors[i++ % 2]
          << "\" stroke-width=\"2\" points=\"";
        for (std::size_t k = 0; k < p.vertices().size(); ++k)
            s << (k ? " " : "") << sx(static_cast<double>(p.vertices()[k].x)) << ','
              << sy(p.vertices()[k].y.to_double());
        s << "\"/>\n";
    }
    s << "</svg>\n";
    return s.str();
}

Output cmd_plot(const Context& c) {
    std::vector<std::pair<std::string, Polygon>> polys;
    const Json& j = c.in;
    if (has(j, "coefficients")) {
        polys.emplace_back("newton", newton_hull(io::read_vector(j["coefficients"], "/coefficients"),
                                                 static_cast<long>(io::read_int(io::member(j, "p", ""), "/p"))));
    } else if (has(j, "module")) {
        const FilteredPhiModule m = filtered(c);
        polys.emplace_back("newton", Polygon::from_slopes(m.module().newton_slopes()));
        polys.emplace_back("hodge", Polygon::from_slopes(weight_slopes(m.hodge())));
    } else {
        polys.emplace_back("newton", Polygon::from_slopes(io::read_phi_module(j).newton_slopes()));
    }
    if (c.format == "json") {
        Json out = Json::object();
        for (const auto& [name, p] : polys) out[name] = polygon_json(p);
        return {kSuccess, std::move(out)};
    }
    return {kSuccess, render_svg(polys)};
}

using Handler = std::function<Output(const Context&)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table{
        {"newton", cmd_newton}, {"hodge", cmd_hodge},         {"hn", cmd_hn},
        {"wa", cmd_wa},         {"acyclic", cmd_acyclic},     {"fn4-reduce", cmd_reduce},
        {"vst", cmd_vst},       {"tensor", cmd_tensor},       {"cohdim", cmd_cohdim},
        {"bc-dim", cmd_bc_dim}, {"canfil", cmd_canfil},       {"ext", cmd_ext},
        {"battery", cmd_battery}, {"dichotomy", cmd_dichotomy}, {"mv-check", cmd_mv_check},
        {"plot", cmd_plot}};
    return table;
}

int fail(std::ostream& err, int code, const std::string& kind, const std::string& message,
         const std::vector<std::string>& violations = {}) {
    Json e{{"error", kind}, {"message", message}};
    if (!violations.empty()) e["violations"] = violations;
    err << e.dump() << '\n';
    return code;
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, h] : handlers()) v.push_back(name);
        return v;
    }();
    return names;
}

int run(const Command& cmd, std::istream& in, std::ostream& out, std::ostream& err) {
    const auto it = handlers().find(cmd.name);
    if (it == handlers().end()) return fail(err, kInputError, "invalid-input", "unknown command \"" + cmd.name + "\"");
    const std::string format = cmd.format.value_or(cmd.name == "plot" ? "svg" : "json");
    if (format != "json" && format != "svg")
        return fail(err, kInputError, "invalid-input", "unknown format \"" + format + "\"");
    if (format == "svg" && cmd.name != "plot")
        return fail(err, kInputError, "invalid-input", "only plot renders svg");

    std::string text;
    if (cmd.input == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        std::ifstream file(cmd.input, std::ios::binary);
        if (!file) return fail(err, kInputError, "invalid-input", "cannot read input file \"" + cmd.input + "\"");
        text.assign(std::istreambuf_iterator<char>(file), {});
    }

    try {
        const Json input = io::parse(text);
        const Context ctx{input, SearchOptions{cmd.seed, cmd.oracle}, format};
        const Output res = it->second(ctx);
        if (res.text)
            out << *res.text;
        else
            out << res.json.dump() << '\n';
        return res.code;
    } catch (const HypothesisViolation& e) {
        return fail(err, kInputError, "hypothesis-violation", e.what(), e.violations());
    } catch (const InvalidInput& e) {
        return fail(err, kInputError, "invalid-input", e.what());
    } catch (const Uncertified& e) {
        out << Json{{"status", to_string(Status::Uncertified)}, {"reason", e.what()}}.dump() << '\n';
        return kUncertified;
    } catch (const std::exception& e) {
        return fail(err, kInputError, "internal-error", e.what());
    }
}

}  // namespace slopes::cli
