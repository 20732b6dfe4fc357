#include "bandix/seifert_graph.hpp"

#include <charconv>
#include <cstdlib>
#include <queue>
#include <sstream>

namespace bandix {

SignedMultigraph::SignedMultigraph(int vertex_count_, std::vector<SignedEdge> edges_)
    : vertex_count(vertex_count_), edges(std::move(edges_)) {
    if (vertex_count < 1)
        throw RangeError("graph needs at least one vertex");
    for (const SignedEdge& e : edges) {
        if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
            throw RangeError("edge endpoint out of range: " + std::to_string(e.u) +
                             " " + std::to_string(e.v));
        if (e.u == e.v)
            throw SelfLoopError("self-loop at vertex " + std::to_string(e.u) +
                                ": a crossing joins two distinct Seifert circles");
        if (e.sign != 1 && e.sign != -1)
            throw RangeError("edge sign must be +1 or -1");
    }
}

SignedMultigraph graph_from_braid(const BraidWord& w) {
    std::vector<char> present(static_cast<size_t>(w.strands), 0);
    present[0] = 1;  // strand 1 always exists
    for (int e : w.letters) present[static_cast<size_t>(std::abs(e))] = 1;
    for (int i = 1; i < w.strands; ++i) {
        if (!present[static_cast<size_t>(i)])
            throw DisconnectedDiagram("generator " + std::to_string(i) +
                                      " never occurs; the closure diagram is disconnected");
    }
    std::vector<SignedEdge> edges;
    edges.reserve(w.letters.size());
    for (int e : w.letters) {
        int i = std::abs(e);
        edges.push_back({i - 1, i, e > 0 ? 1 : -1});
    }
    return SignedMultigraph(w.strands, std::move(edges));
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

int parse_int_token(const std::string& tok) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw SyntaxError("not an integer: '" + tok + "'");
    return value;
}

}  // namespace

SignedMultigraph parse_graph(std::string_view text) {
    std::istringstream input{std::string(text)};
    std::string line;
    bool have_vertices = false;
    int vertex_count = 0;
    std::vector<SignedEdge> edges;
    int lineno = 0;
    while (std::getline(input, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::vector<std::string> toks = split_ws(line);
        if (toks.empty()) continue;
        if (!have_vertices) {
            if (toks[0] != "vertices" || toks.size() != 2)
                throw SyntaxError("line " + std::to_string(lineno) +
                                  ": expected 'vertices <N>' first");
            vertex_count = parse_int_token(toks[1]);
            if (vertex_count < 1) throw RangeError("vertex count must be positive");
            have_vertices = true;
            continue;
        }
        if (toks[0] != "edge" || toks.size() != 4)
            throw SyntaxError("line " + std::to_string(lineno) +
                              ": expected 'edge <u> <v> <+|->'");
        int u = parse_int_token(toks[1]);
        int v = parse_int_token(toks[2]);
        int sign = 0;
        if (toks[3] == "+")
            sign = 1;
        else if (toks[3] == "-")
            sign = -1;
        else
            throw SyntaxError("line " + std::to_string(lineno) +
                              ": edge sign must be '+' or '-'");
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw RangeError("line " + std::to_string(lineno) + ": vertex id out of range");
        if (u == v)
            throw SelfLoopError("line " + std::to_string(lineno) + ": self-loop at vertex " +
                                std::to_string(u));
        edges.push_back({u, v, sign});
    }
    if (!have_vertices) throw SyntaxError("missing 'vertices <N>' line");
    return SignedMultigraph(vertex_count, std::move(edges));
}

std::string render_graph(const SignedMultigraph& g) {
    std::ostringstream os;
    os << "vertices " << g.vertex_count << "\n";
    for (const SignedEdge& e : g.edges)
        os << "edge " << e.u << " " << e.v << " " << (e.sign > 0 ? '+' : '-') << "\n";
    return os.str();
}

bool is_connected(const SignedMultigraph& g) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.vertex_count));
    for (const SignedEdge& e : g.edges) {
        adj[static_cast<size_t>(e.u)].push_back(e.v);
        adj[static_cast<size_t>(e.v)].push_back(e.u);
    }
    std::vector<char> seen(static_cast<size_t>(g.vertex_count), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[static_cast<size_t>(u)]) {
            if (!seen[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = 1;
                ++reached;
                q.push(v);
            }
        }
    }
    return reached == g.vertex_count;
}

std::optional<std::vector<int>> is_bipartite(const SignedMultigraph& g) {
    if (!is_connected(g)) throw NotConnected("graph is not connected");
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.vertex_count));
    for (const SignedEdge& e : g.edges) {
        adj[static_cast<size_t>(e.u)].push_back(e.v);
        adj[static_cast<size_t>(e.v)].push_back(e.u);
    }
    std::vector<int> color(static_cast<size_t>(g.vertex_count), -1);
    std::queue<int> q;
    q.push(0);
    color[0] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[static_cast<size_t>(u)]) {
            if (color[static_cast<size_t>(v)] == -1) {
                color[static_cast<size_t>(v)] = 1 - color[static_cast<size_t>(u)];
                q.push(v);
            } else if (color[static_cast<size_t>(v)] == color[static_cast<size_t>(u)]) {
                return std::nullopt;
            }
        }
    }
    return color;
}

EulerData euler_data(const SignedMultigraph& g, int l) {
    if (l < 1) throw RangeError("component count must be positive");
    if (!is_connected(g)) throw NotConnected("graph is not connected");
    int s = g.vertex_count;
    int c = g.edge_count();
    int twice_genus = c - s + 2 - l;
    if (twice_genus % 2 != 0)
        throw ParityError("c - s + 2 - l = " + std::to_string(twice_genus) +
                          " is odd: component count " + std::to_string(l) +
                          " is inconsistent with this surface");
    if (twice_genus < 0)
        throw NegativeGenus("c - s + 2 - l = " + std::to_string(twice_genus) +
                            " is negative: component count " + std::to_string(l) +
                            " is inconsistent with this surface");
    return EulerData{s, c, l, twice_genus / 2};
}

}  // namespace bandix
