#include "bandix/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace bandix {

namespace {

using Kind = BoundWitness::Kind;
using Quantity = BoundWitness::Quantity;

void check_consistency(const BandIndexReport& r) {
    auto bad = [](const std::optional<int>& lo, const std::optional<int>& hi) {
        return lo && hi && *lo > *hi;
    };
    if (bad(r.B_lower, r.B_upper) || bad(r.FB_lower, r.FB_upper))
        throw InternalError("assembled report has a lower bound above an upper bound");
    for (const BoundWitness& w : r.witnesses)
        if (w.value < 0) throw InternalError("bound witness with negative value");
}

void finish(BandIndexReport& r) {
    r.B_exact = r.B_lower && r.B_upper && *r.B_lower == *r.B_upper;
    r.FB_exact = r.FB_lower && r.FB_upper && *r.FB_lower == *r.FB_upper;
    if (r.FB_lower && r.FB_upper && !r.FB_exact)
        r.notes.push_back(
            "flat band bounds are not tight: surfaces outside the braid and "
            "spanning-tree search family may realize values below the upper bound");
    if (r.l == 1 && r.B_lower && r.B_upper && (*r.B_lower % 2 != 0 || *r.B_upper % 2 != 0))
        r.notes.push_back("parity violation: band bounds of a knot should be even");
    check_consistency(r);
}

}  // namespace

BandIndexReport analyze_braid(const BraidWord& w, const AnalyzeOptions& opts) {
    if (opts.known_genus && *opts.known_genus < 0)
        throw RangeError("genus must be nonnegative");

    BandIndexReport r;
    r.input = "braid \"" + braid_to_string(w) + "\" on " + std::to_string(w.strands) +
              " strands";
    r.l = closure_components(w);

    SignedMultigraph g = graph_from_braid(w);
    EulerData euler = euler_data(g, r.l);
    r.s = euler.s;
    r.c = euler.c;
    r.canonical_genus = euler.canonical_genus;

    BoundWitness graph_band = band_upper_bound(g);
    BoundWitness braid_band = braid_band_bound(w);
    if (graph_band.value != braid_band.value)
        throw InternalError("braid and graph band bounds disagree");
    r.B_upper = braid_band.value;
    r.witnesses.push_back(graph_band);
    r.witnesses.push_back(braid_band);

    BoundWitness braid_flat = braid_flat_bound(w);
    auto [tree_flat, analysis] = minimize_flat_bound(g, opts.budget);
    r.FB_upper = std::min(braid_flat.value, tree_flat.value);
    if (braid_flat.value <= tree_flat.value) r.witnesses.push_back(braid_flat);
    if (tree_flat.value <= braid_flat.value) r.witnesses.push_back(tree_flat);

    ConwayPolynomial nabla = conway_from_seifert(seifert_matrix_from_braid(w));
    r.conway = nabla;
    std::optional<int> conway_degree;
    if (!nabla.is_zero()) conway_degree = nabla.degree();
    std::optional<int> genus_lower = opts.known_genus;
    if (!genus_lower) genus_lower = conway_degree_genus_bound(nabla, r.l);

    auto [b_low, fb_low] = band_lower_bounds(r.l, conway_degree, genus_lower);
    r.B_lower = b_low.value;
    r.FB_lower = fb_low.value;
    r.witnesses.push_back(b_low);
    r.witnesses.push_back(fb_low);

    if (r.l == 1 && !flat2_form_check(nabla) && *r.FB_lower == 2) {
        r.FB_lower = 4;
        r.witnesses.push_back(
            {Kind::lower, Quantity::flat_band, 4,
             "flat two-band Conway obstruction excludes 2; next admissible parity value"});
    }

    if (band_index_one_check(w)) {
        if (*r.B_lower > 1 || *r.B_upper < 1)
            throw InternalError("two-braid classification contradicts the computed bounds");
        r.B_lower = 1;
        r.B_upper = 1;
        r.witnesses.push_back({Kind::lower, Quantity::band, 1,
                               "closed 2-braid even-power classification"});
        r.witnesses.push_back({Kind::upper, Quantity::band, 1,
                               "closed 2-braid even-power classification"});
    }

    if (opts.known_genus && 2 * *opts.known_genus + r.l - 1 == *r.B_upper)
        r.notes.push_back(
            "band index exact: the supplied genus meets the canonical surface bound");

    finish(r);
    return r;
}

BandIndexReport analyze_pretzel(const PretzelSpec& spec, const AnalyzeOptions& opts) {
    BandIndexReport r;
    {
        std::ostringstream os;
        os << "pretzel ";
        for (size_t i = 0; i < spec.params.size(); ++i) {
            if (i) os << ",";
            os << spec.params[i];
        }
        r.input = os.str();
    }
    r.l = trace_components(spec);

    if (all_even(spec)) {
        SignedMultigraph g = theta_graph(spec);
        EulerData euler = euler_data(g, r.l);
        r.s = euler.s;
        r.c = euler.c;
        r.canonical_genus = euler.canonical_genus;

        BoundWitness band = band_upper_bound(g);
        r.B_upper = band.value;
        r.witnesses.push_back(band);

        auto [flat, analysis] = minimize_flat_bound(g, opts.budget);
        r.FB_upper = flat.value;
        r.witnesses.push_back(flat);

        auto [b_low, fb_low] = band_lower_bounds(r.l, std::nullopt, std::nullopt);
        r.B_lower = b_low.value;
        r.FB_lower = fb_low.value;
        r.witnesses.push_back(b_low);
        r.witnesses.push_back(fb_low);

        finish(r);
        return r;
    }

    std::optional<CorollaryInput> in = as_corollary_input(spec);
    if (!in)
        throw InvalidInput(
            "unsupported pretzel shape: parameters must be all even or contain exactly "
            "one even entry");
    if (r.l != 1)
        throw InvalidInput("the pretzel band index formula applies to knots; this diagram has " +
                           std::to_string(r.l) + " components");
    CorollaryResult res = corollary_band_index(*in);
    r.B_lower = res.value;
    r.B_upper = res.value;
    std::string source = "pretzel band index formula, case " + res.case_label;
    r.witnesses.push_back({Kind::lower, Quantity::band, res.value, source});
    r.witnesses.push_back({Kind::upper, Quantity::band, res.value, source});

    auto [b_low, fb_low] = band_lower_bounds(r.l, std::nullopt, std::nullopt);
    r.FB_lower = fb_low.value;
    r.witnesses.push_back(fb_low);
    r.notes.push_back("flat band upper bounds are not available for this pretzel form");

    finish(r);
    return r;
}

BandIndexReport analyze_graph(const SignedMultigraph& g, int l, const AnalyzeOptions& opts) {
    if (!is_connected(g)) throw NotConnected("graph is not connected");

    BandIndexReport r;
    r.input = "graph with " + std::to_string(g.vertex_count) + " vertices and " +
              std::to_string(g.edge_count()) + " edges";
    r.l = l;

    EulerData euler;
    try {
        euler = euler_data(g, l);
    } catch (const ParityError& e) {
        throw InvalidInput(e.what());
    } catch (const NegativeGenus& e) {
        throw InvalidInput(e.what());
    }
    r.s = euler.s;
    r.c = euler.c;
    r.canonical_genus = euler.canonical_genus;

    BoundWitness band = band_upper_bound(g);
    r.B_upper = band.value;
    r.witnesses.push_back(band);

    auto [b_low, fb_low] = band_lower_bounds(l, std::nullopt, std::nullopt);
    r.B_lower = b_low.value;
    r.witnesses.push_back(b_low);
    if (*r.B_lower > *r.B_upper)
        throw InvalidInput("component count " + std::to_string(l) +
                           " is inconsistent with this surface: the lower bound exceeds "
                           "the cycle rank");

    if (is_bipartite(g)) {
        auto [flat, analysis] = minimize_flat_bound(g, opts.budget);
        r.FB_upper = flat.value;
        r.FB_lower = fb_low.value;
        r.witnesses.push_back(flat);
        r.witnesses.push_back(fb_low);
    } else {
        r.notes.push_back(
            "graph is not bipartite, so it is not induced by an orientable canonical "
            "surface; flat bounds omitted");
    }

    finish(r);
    return r;
}

namespace {

nlohmann::ordered_json opt_json(const std::optional<int>& v) {
    if (v) return *v;
    return nullptr;
}

nlohmann::ordered_json side_json(const BandIndexReport& r, Quantity q,
                                 const std::optional<int>& lower,
                                 const std::optional<int>& upper, bool exact) {
    nlohmann::ordered_json side;
    side["lower"] = opt_json(lower);
    side["upper"] = opt_json(upper);
    side["exact"] = exact;
    side["witnesses"] = nlohmann::ordered_json::array();
    for (const BoundWitness& w : r.witnesses) {
        if (w.quantity != q) continue;
        nlohmann::ordered_json jw;
        jw["kind"] = to_string(w.kind);
        jw["value"] = w.value;
        jw["source"] = w.source;
        side["witnesses"].push_back(jw);
    }
    return side;
}

std::string render_json(const BandIndexReport& r) {
    nlohmann::ordered_json j;
    j["input"] = r.input;
    j["l"] = r.l;
    j["seifert"]["s"] = opt_json(r.s);
    j["seifert"]["c"] = opt_json(r.c);
    j["seifert"]["canonical_genus"] = opt_json(r.canonical_genus);
    if (r.conway)
        j["conway"]["coeffs"] = r.conway->coeffs();
    else
        j["conway"] = nullptr;
    j["B"] = side_json(r, Quantity::band, r.B_lower, r.B_upper, r.B_exact);
    j["FB"] = side_json(r, Quantity::flat_band, r.FB_lower, r.FB_upper, r.FB_exact);
    j["notes"] = r.notes;
    return j.dump(2) + "\n";
}

void render_side_text(std::ostringstream& os, const std::string& name,
                      const std::optional<int>& lower, const std::optional<int>& upper,
                      bool exact) {
    os << name << ": ";
    if (exact) {
        os << "exact " << *lower;
    } else {
        os << "lower=" << (lower ? std::to_string(*lower) : "?");
        os << " upper=" << (upper ? std::to_string(*upper) : "?");
    }
    os << "\n";
}

std::string render_text(const BandIndexReport& r) {
    std::ostringstream os;
    os << "input: " << r.input << "\n";
    os << "components (l): " << r.l << "\n";
    if (r.s && r.c)
        os << "seifert: s=" << *r.s << " c=" << *r.c
           << " canonical_genus=" << (r.canonical_genus ? std::to_string(*r.canonical_genus) : "?")
           << "\n";
    if (r.conway) os << "conway: " << r.conway->to_string() << "\n";
    render_side_text(os, "band index B", r.B_lower, r.B_upper, r.B_exact);
    render_side_text(os, "flat band index FB", r.FB_lower, r.FB_upper, r.FB_exact);
    os << "witnesses:\n";
    for (const BoundWitness& w : r.witnesses)
        os << "  " << to_string(w.quantity) << " " << to_string(w.kind) << " " << w.value
           << "  [" << w.source << "]\n";
    if (!r.notes.empty()) {
        os << "notes:\n";
        for (const std::string& n : r.notes) os << "  - " << n << "\n";
    }
    return os.str();
}

}  // namespace

std::string render(const BandIndexReport& report, RenderFormat format) {
    return format == RenderFormat::json ? render_json(report) : render_text(report);
}

std::string render_error(const Error& err, RenderFormat format) {
    if (format == RenderFormat::json) {
        nlohmann::ordered_json j;
        j["error"]["code"] = err.code();
        j["error"]["message"] = err.what();
        return j.dump(2) + "\n";
    }
    return "error [" + err.code() + "]: " + err.what() + "\n";
}

}  // namespace bandix
