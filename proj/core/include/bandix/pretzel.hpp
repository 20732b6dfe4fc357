#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bandix/errors.hpp"
#include "bandix/seifert_graph.hpp"

namespace bandix {

/// Pretzel link L(p_1, ..., p_n): n vertical twist regions, p_i crossings
/// each, closed by the standard diagram.
struct PretzelSpec {
    std::vector<int> params;

    PretzelSpec() = default;
    explicit PretzelSpec(std::vector<int> params_);

    int n() const { return static_cast<int>(params.size()); }

    bool operator==(const PretzelSpec&) const = default;
};

PretzelSpec parse_pretzel(std::string_view text);

/// Normalized input of the pretzel knot band index formula: one even
/// parameter first, the rest odd with magnitude at least 3.
struct CorollaryInput {
    int p1 = 0;
    std::vector<int> odds;  // o_2 ... o_n

    CorollaryInput(int p1_, std::vector<int> odds_);

    int n() const { return 1 + static_cast<int>(odds.size()); }
    /// Sum of the signs of the odd parameters.
    int alpha() const;
    /// Sign of the even parameter.
    int b() const;
    /// Sum of |o_i| - 1.
    int delta() const;
};

struct CorollaryResult {
    int value = 0;
    std::string case_label;
};

/// Closed-form band index of the one-even pretzel knot. The four cases are
/// matched in order; n odd with alpha = 0 raises UncoveredCase.
CorollaryResult corollary_band_index(const CorollaryInput& in);

/// Rotates the parameters so the single even entry comes first and builds
/// the formula input. Returns nullopt when the spec does not have exactly
/// one even parameter; throws InvalidInput when it does but an odd
/// parameter has magnitude below 3.
std::optional<CorollaryInput> as_corollary_input(const PretzelSpec& spec);

bool all_even(const PretzelSpec& spec);

/// Induced graph of the canonical Seifert surface of an all-even pretzel:
/// two hubs joined by n internally disjoint paths, path i carrying |p_i|
/// edges of sign -sign(p_i) (inverted when `invert_signs`). Vertices 0 and
/// 1 are the hubs; path vertices and edges are numbered path by path.
SignedMultigraph theta_graph(const PretzelSpec& spec, bool invert_signs = false);

/// Number of link components of the standard pretzel diagram, by tracing
/// the four endpoints of every twist region: an even region joins its
/// endpoints top-left to bottom-left and top-right to bottom-right, an odd
/// region joins them diagonally.
int trace_components(const PretzelSpec& spec);

}  // namespace bandix
