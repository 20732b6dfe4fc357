#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bandix/braid.hpp"
#include "bandix/errors.hpp"

namespace bandix {

struct SignedEdge {
    int u = 0;
    int v = 0;
    int sign = 1;  // +1 or -1

    bool operator==(const SignedEdge&) const = default;
};

/// Induced graph of a canonical Seifert surface: vertices are Seifert
/// circles, signed edges are half twisted bands (one per crossing).
/// Parallel edges are allowed; self-loops are rejected since a crossing
/// always joins two distinct Seifert circles. Edge order is preserved
/// from the input and edge ids are positions in `edges`.
struct SignedMultigraph {
    int vertex_count = 1;
    std::vector<SignedEdge> edges;

    SignedMultigraph() = default;
    SignedMultigraph(int vertex_count_, std::vector<SignedEdge> edges_);

    int edge_count() const { return static_cast<int>(edges.size()); }

    bool operator==(const SignedMultigraph&) const = default;
};

/// Euler data of the canonical surface carrying the graph: s Seifert
/// circles, c bands, l boundary components, and the canonical genus
/// g_c = (c - s + 2 - l) / 2.
struct EulerData {
    int s = 0;
    int c = 0;
    int l = 0;
    int canonical_genus = 0;
};

/// Induced graph of the canonical Seifert surface of the braid closure:
/// one vertex per strand, one edge (i-1, i, sign e) per letter |e| = i.
/// Throws DisconnectedDiagram when some generator never occurs.
SignedMultigraph graph_from_braid(const BraidWord& w);

/// Parses the line-oriented graph file grammar:
///   vertices <N>
///   edge <u> <v> <+|->
/// '#' starts a comment; blank lines are ignored.
SignedMultigraph parse_graph(std::string_view text);

/// Canonical rendering in the graph file grammar; parse_graph round-trips it.
std::string render_graph(const SignedMultigraph& g);

bool is_connected(const SignedMultigraph& g);

/// Two-coloring test. Returns the color vector when bipartite, nullopt
/// otherwise. Throws NotConnected for disconnected graphs.
std::optional<std::vector<int>> is_bipartite(const SignedMultigraph& g);

/// Throws ParityError when c - s + 2 - l is odd, NegativeGenus when it is
/// negative, NotConnected when g is disconnected.
EulerData euler_data(const SignedMultigraph& g, int l);

}  // namespace bandix
