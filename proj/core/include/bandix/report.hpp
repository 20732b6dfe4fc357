#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bandix/bands.hpp"
#include "bandix/braid.hpp"
#include "bandix/conway.hpp"
#include "bandix/pretzel.hpp"
#include "bandix/seifert_graph.hpp"

namespace bandix {

struct AnalyzeOptions {
    std::optional<int> known_genus;
    long long budget = 10000;
};

/// Assembled lower/upper bounds for the band index B and the flat band
/// index FB, with one witness per certified bound. Exactness means
/// lower = upper.
struct BandIndexReport {
    std::string input;
    int l = 0;
    std::optional<int> s;
    std::optional<int> c;
    std::optional<int> canonical_genus;
    std::optional<ConwayPolynomial> conway;
    std::optional<int> B_lower, B_upper;
    std::optional<int> FB_lower, FB_upper;
    bool B_exact = false;
    bool FB_exact = false;
    std::vector<BoundWitness> witnesses;
    std::vector<std::string> notes;
};

BandIndexReport analyze_braid(const BraidWord& w, const AnalyzeOptions& opts = {});
BandIndexReport analyze_pretzel(const PretzelSpec& spec, const AnalyzeOptions& opts = {});
BandIndexReport analyze_graph(const SignedMultigraph& g, int l,
                              const AnalyzeOptions& opts = {});

enum class RenderFormat { text, json };

/// Deterministic serialization; repeated calls on equal reports are
/// byte-identical.
std::string render(const BandIndexReport& report, RenderFormat format);

/// Error object with a machine-readable code, in the requested format.
std::string render_error(const Error& err, RenderFormat format);

}  // namespace bandix
