#pragma once

// Deterministic random generators and brute-force oracles shared by the
// test suites. Everything here is independent of the library code paths it
// is used to check.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "bandix/bands.hpp"
#include "bandix/braid.hpp"
#include "bandix/seifert_graph.hpp"

namespace testutil {

using bandix::BraidWord;
using bandix::SignedEdge;
using bandix::SignedMultigraph;

// Braid word in which every generator occurs at least once.
inline BraidWord random_braid(std::mt19937& rng, int max_strands = 4, int max_len = 8) {
    int strands = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_strands - 1));
    int min_len = strands - 1;
    int len = min_len + static_cast<int>(rng() % static_cast<unsigned>(max_len - min_len + 1));
    std::vector<int> letters;
    for (int g = 1; g < strands; ++g) letters.push_back(g);
    while (static_cast<int>(letters.size()) < len)
        letters.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(strands - 1)));
    std::shuffle(letters.begin(), letters.end(), rng);
    for (int& e : letters)
        if (rng() % 2) e = -e;
    return BraidWord(strands, std::move(letters));
}

// Connected bipartite signed multigraph: a random tree whose edges cross a
// random two-coloring, plus extra cross-color edges.
inline SignedMultigraph random_bipartite_graph(std::mt19937& rng, int max_vertices = 10,
                                               int max_extra = 5) {
    int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_vertices - 1));
    std::vector<int> color(static_cast<size_t>(n));
    color[0] = 0;
    std::vector<SignedEdge> edges;
    for (int v = 1; v < n; ++v) {
        color[static_cast<size_t>(v)] = static_cast<int>(rng() % 2);
        std::vector<int> candidates;
        for (int u = 0; u < v; ++u)
            if (color[static_cast<size_t>(u)] != color[static_cast<size_t>(v)])
                candidates.push_back(u);
        if (candidates.empty()) {
            color[static_cast<size_t>(v)] = 1 - color[static_cast<size_t>(v)];
            for (int u = 0; u < v; ++u)
                if (color[static_cast<size_t>(u)] != color[static_cast<size_t>(v)])
                    candidates.push_back(u);
        }
        int u = candidates[rng() % candidates.size()];
        edges.push_back({u, v, (rng() % 2) ? 1 : -1});
    }
    int extra = static_cast<int>(rng() % static_cast<unsigned>(max_extra + 1));
    for (int k = 0; k < extra; ++k) {
        int u = static_cast<int>(rng() % static_cast<unsigned>(n));
        std::vector<int> candidates;
        for (int v = 0; v < n; ++v)
            if (color[static_cast<size_t>(v)] != color[static_cast<size_t>(u)])
                candidates.push_back(v);
        if (candidates.empty()) continue;
        int v = candidates[rng() % candidates.size()];
        edges.push_back({u, v, (rng() % 2) ? 1 : -1});
    }
    return SignedMultigraph(n, std::move(edges));
}

// All spanning trees by testing every (n-1)-subset of edge ids.
inline std::vector<std::vector<int>> brute_force_spanning_trees(const SignedMultigraph& g) {
    const int n = g.vertex_count;
    const int c = g.edge_count();
    std::vector<std::vector<int>> trees;
    std::vector<int> subset(static_cast<size_t>(n - 1));
    std::iota(subset.begin(), subset.end(), 0);
    if (n - 1 > c) return trees;
    auto is_tree = [&](const std::vector<int>& edges) {
        std::vector<int> parent(static_cast<size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
            return x;
        };
        for (int e : edges) {
            int a = find(g.edges[e].u), b = find(g.edges[e].v);
            if (a == b) return false;
            parent[static_cast<size_t>(a)] = b;
        }
        return true;
    };
    while (true) {
        if (is_tree(subset)) trees.push_back(subset);
        int i = n - 2;
        while (i >= 0 && subset[static_cast<size_t>(i)] == c - (n - 1) + i) --i;
        if (i < 0) break;
        ++subset[static_cast<size_t>(i)];
        for (int j = i + 1; j < n - 1; ++j)
            subset[static_cast<size_t>(j)] = subset[static_cast<size_t>(j - 1)] + 1;
    }
    return trees;
}

}  // namespace testutil
