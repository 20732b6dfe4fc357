#include "bandix/bands.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace bandix {

using boost::multiprecision::cpp_int;

std::string to_string(BoundWitness::Kind k) {
    return k == BoundWitness::Kind::lower ? "lower" : "upper";
}

std::string to_string(BoundWitness::Quantity q) {
    return q == BoundWitness::Quantity::band ? "B" : "FB";
}

namespace {

// (edge id, other endpoint) lists per vertex, in edge id order.
std::vector<std::vector<std::pair<int, int>>> incidence(const SignedMultigraph& g) {
    std::vector<std::vector<std::pair<int, int>>> inc(static_cast<size_t>(g.vertex_count));
    for (int e = 0; e < g.edge_count(); ++e) {
        inc[static_cast<size_t>(g.edges[e].u)].push_back({e, g.edges[e].v});
        inc[static_cast<size_t>(g.edges[e].v)].push_back({e, g.edges[e].u});
    }
    return inc;
}

struct TreeView {
    std::vector<int> parent;       // -1 at the root
    std::vector<int> parent_edge;  // -1 at the root
    std::vector<int> depth;
};

TreeView build_tree_view(const SignedMultigraph& g, const std::vector<int>& tree, int root) {
    const size_t n = static_cast<size_t>(g.vertex_count);
    if (root < 0 || root >= g.vertex_count) throw RangeError("root vertex out of range");
    if (static_cast<int>(tree.size()) != g.vertex_count - 1)
        throw InvalidInput("edge set of size " + std::to_string(tree.size()) +
                           " cannot span " + std::to_string(g.vertex_count) + " vertices");
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int e : tree) {
        if (e < 0 || e >= g.edge_count()) throw RangeError("tree edge id out of range");
        adj[static_cast<size_t>(g.edges[e].u)].push_back({e, g.edges[e].v});
        adj[static_cast<size_t>(g.edges[e].v)].push_back({e, g.edges[e].u});
    }
    TreeView view{std::vector<int>(n, -1), std::vector<int>(n, -1), std::vector<int>(n, -1)};
    std::queue<int> q;
    q.push(root);
    view.depth[static_cast<size_t>(root)] = 0;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (auto [e, v] : adj[static_cast<size_t>(u)]) {
            if (view.depth[static_cast<size_t>(v)] == -1) {
                view.depth[static_cast<size_t>(v)] = view.depth[static_cast<size_t>(u)] + 1;
                view.parent[static_cast<size_t>(v)] = u;
                view.parent_edge[static_cast<size_t>(v)] = e;
                ++reached;
                q.push(v);
            }
        }
    }
    if (reached != g.vertex_count) throw InvalidInput("edge set is not a spanning tree");
    return view;
}

// Sum of `values` (indexed by edge id) over the tree path between the
// endpoints of `edge`; also collects the path's edge ids when asked.
int tree_path_sum(const SignedMultigraph& g, const TreeView& view,
                  const std::vector<int>& values, int edge,
                  std::vector<int>* path_edges = nullptr) {
    int a = g.edges[edge].u;
    int b = g.edges[edge].v;
    int sum = 0;
    while (view.depth[static_cast<size_t>(a)] > view.depth[static_cast<size_t>(b)]) {
        int e = view.parent_edge[static_cast<size_t>(a)];
        sum += values[static_cast<size_t>(e)];
        if (path_edges) path_edges->push_back(e);
        a = view.parent[static_cast<size_t>(a)];
    }
    while (view.depth[static_cast<size_t>(b)] > view.depth[static_cast<size_t>(a)]) {
        int e = view.parent_edge[static_cast<size_t>(b)];
        sum += values[static_cast<size_t>(e)];
        if (path_edges) path_edges->push_back(e);
        b = view.parent[static_cast<size_t>(b)];
    }
    while (a != b) {
        int ea = view.parent_edge[static_cast<size_t>(a)];
        int eb = view.parent_edge[static_cast<size_t>(b)];
        sum += values[static_cast<size_t>(ea)] + values[static_cast<size_t>(eb)];
        if (path_edges) {
            path_edges->push_back(ea);
            path_edges->push_back(eb);
        }
        a = view.parent[static_cast<size_t>(a)];
        b = view.parent[static_cast<size_t>(b)];
    }
    return sum;
}

std::vector<int> labeling_for(const SignedMultigraph& g, const std::vector<int>& tree,
                              const TreeView& view, int start_sign) {
    std::vector<int> labels(static_cast<size_t>(g.edge_count()), 0);
    for (int e : tree) {
        int deeper = std::max(view.depth[static_cast<size_t>(g.edges[e].u)],
                              view.depth[static_cast<size_t>(g.edges[e].v)]);
        labels[static_cast<size_t>(e)] = ((deeper - 1) % 2 == 0) ? start_sign : -start_sign;
    }
    return labels;
}

void require_connected(const SignedMultigraph& g) {
    if (!is_connected(g)) throw NotConnected("graph is not connected");
}

void require_bipartite(const SignedMultigraph& g) {
    if (!is_bipartite(g)) throw NotBipartite("graph is not bipartite");
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(b)] = a;
        return true;
    }
};

cpp_int integer_determinant(std::vector<std::vector<cpp_int>> m) {
    const size_t n = m.size();
    cpp_int prev = 1;
    int sign = 1;
    for (size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    cpp_int det = (n == 0) ? cpp_int(1) : m[n - 1][n - 1];
    return sign > 0 ? det : -det;
}

cpp_int matrix_tree_count(const SignedMultigraph& g) {
    const int n = g.vertex_count;
    if (n == 1) return 1;
    std::vector<std::vector<cpp_int>> lap(static_cast<size_t>(n),
                                          std::vector<cpp_int>(static_cast<size_t>(n), 0));
    for (const SignedEdge& e : g.edges) {
        lap[static_cast<size_t>(e.u)][static_cast<size_t>(e.u)] += 1;
        lap[static_cast<size_t>(e.v)][static_cast<size_t>(e.v)] += 1;
        lap[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)] -= 1;
        lap[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)] -= 1;
    }
    std::vector<std::vector<cpp_int>> minor(static_cast<size_t>(n - 1),
                                            std::vector<cpp_int>(static_cast<size_t>(n - 1)));
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            minor[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                lap[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return integer_determinant(std::move(minor));
}

void enumerate_rec(const SignedMultigraph& g, int idx, Dsu dsu, int joined,
                   std::vector<int>& chosen, std::vector<std::vector<int>>& out,
                   long long limit) {
    const int need = g.vertex_count - 1;
    if (static_cast<int>(chosen.size()) == need) {
        if (static_cast<long long>(out.size()) >= limit)
            throw RangeError("spanning tree enumeration exceeds limit of " +
                             std::to_string(limit));
        out.push_back(chosen);
        return;
    }
    if (idx == g.edge_count()) return;
    // Prune when the remaining edges can no longer complete a tree.
    Dsu probe = dsu;
    int probe_joined = joined;
    for (int e = idx; e < g.edge_count() && probe_joined < need; ++e)
        if (probe.unite(g.edges[e].u, g.edges[e].v)) ++probe_joined;
    if (probe_joined < need) return;

    if (Dsu with = dsu; with.unite(g.edges[idx].u, g.edges[idx].v)) {
        chosen.push_back(idx);
        enumerate_rec(g, idx + 1, std::move(with), joined + 1, chosen, out, limit);
        chosen.pop_back();
    }
    enumerate_rec(g, idx + 1, std::move(dsu), joined, chosen, out, limit);
}

// Flat bound of one (tree, root, start sign); assumes validated input.
int evaluate_flat(const SignedMultigraph& g, const std::vector<int>& tree,
                  const TreeView& view, int start_sign, int base) {
    std::vector<int> labels = labeling_for(g, tree, view, start_sign);
    int beta = 0;
    for (int e : tree)
        if (labels[static_cast<size_t>(e)] != g.edges[e].sign) ++beta;
    std::vector<char> in_tree(static_cast<size_t>(g.edge_count()), 0);
    for (int e : tree) in_tree[static_cast<size_t>(e)] = 1;
    int gamma = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (in_tree[static_cast<size_t>(e)]) continue;
        if (tree_path_sum(g, view, labels, e) == g.edges[e].sign) ++gamma;
    }
    return base + 4 * beta + 2 * gamma;
}

struct SearchBest {
    int value = 0;
    std::vector<int> tree;
    int root = 0;
    int start_sign = -1;
    bool set = false;
};

void consider_tree(const SignedMultigraph& g, const std::vector<int>& tree, int base,
                   SearchBest& best) {
    for (int root = 0; root < g.vertex_count; ++root) {
        TreeView view = build_tree_view(g, tree, root);
        for (int sign : {-1, +1}) {
            int value = evaluate_flat(g, tree, view, sign, base);
            if (!best.set || value < best.value) {
                best = SearchBest{value, tree, root, sign, true};
            }
        }
    }
}

}  // namespace

BoundWitness band_upper_bound(const SignedMultigraph& g) {
    require_connected(g);
    int value = g.edge_count() - g.vertex_count + 1;
    return BoundWitness{BoundWitness::Kind::upper, BoundWitness::Quantity::band, value,
                        "cycle rank c - s + 1 of the induced graph"};
}

std::vector<int> spanning_tree(const SignedMultigraph& g, int root) {
    if (root < 0 || root >= g.vertex_count) throw RangeError("root vertex out of range");
    require_connected(g);
    auto inc = incidence(g);
    std::vector<char> seen(static_cast<size_t>(g.vertex_count), 0);
    std::vector<int> tree;
    std::queue<int> q;
    q.push(root);
    seen[static_cast<size_t>(root)] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (auto [e, v] : inc[static_cast<size_t>(u)]) {
            if (!seen[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = 1;
                tree.push_back(e);
                q.push(v);
            }
        }
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

std::vector<int> alternating_labeling(const SignedMultigraph& g, const std::vector<int>& tree,
                                      int root, int start_sign) {
    if (start_sign != 1 && start_sign != -1)
        throw RangeError("start sign must be +1 or -1");
    TreeView view = build_tree_view(g, tree, root);
    return labeling_for(g, tree, view, start_sign);
}

int path_sign_sum(const SignedMultigraph& g, const std::vector<int>& tree,
                  const std::vector<int>& labeling, int edge) {
    require_bipartite(g);
    if (edge < 0 || edge >= g.edge_count()) throw RangeError("edge id out of range");
    if (std::find(tree.begin(), tree.end(), edge) != tree.end())
        throw InvalidInput("edge " + std::to_string(edge) + " is a tree edge");
    if (static_cast<int>(labeling.size()) != g.edge_count())
        throw InvalidInput("labeling size does not match edge count");
    TreeView view = build_tree_view(g, tree, 0);
    return tree_path_sum(g, view, labeling, edge);
}

int beta_count(const SignedMultigraph& g, const std::vector<int>& tree,
               const std::vector<int>& labeling) {
    if (static_cast<int>(labeling.size()) != g.edge_count())
        throw InvalidInput("labeling size does not match edge count");
    int beta = 0;
    for (int e : tree) {
        if (e < 0 || e >= g.edge_count()) throw RangeError("tree edge id out of range");
        if (labeling[static_cast<size_t>(e)] != g.edges[e].sign) ++beta;
    }
    return beta;
}

int gamma_count(const SignedMultigraph& g, const std::vector<int>& tree,
                const std::vector<int>& labeling) {
    require_bipartite(g);
    if (static_cast<int>(labeling.size()) != g.edge_count())
        throw InvalidInput("labeling size does not match edge count");
    TreeView view = build_tree_view(g, tree, 0);
    std::vector<char> in_tree(static_cast<size_t>(g.edge_count()), 0);
    for (int e : tree) in_tree[static_cast<size_t>(e)] = 1;
    int gamma = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (in_tree[static_cast<size_t>(e)]) continue;
        if (tree_path_sum(g, view, labeling, e) == g.edges[e].sign) ++gamma;
    }
    return gamma;
}

int framing(const SignedMultigraph& g, const std::vector<int>& tree, int edge,
            bool use_actual_signs, const std::vector<int>& labeling) {
    require_bipartite(g);
    if (edge < 0 || edge >= g.edge_count()) throw RangeError("edge id out of range");
    if (std::find(tree.begin(), tree.end(), edge) != tree.end())
        throw InvalidInput("edge " + std::to_string(edge) + " is a tree edge");
    TreeView view = build_tree_view(g, tree, 0);
    int k = 0;
    if (use_actual_signs) {
        std::vector<int> signs(static_cast<size_t>(g.edge_count()));
        for (int e = 0; e < g.edge_count(); ++e) signs[static_cast<size_t>(e)] = g.edges[e].sign;
        k = tree_path_sum(g, view, signs, edge);
    } else {
        if (static_cast<int>(labeling.size()) != g.edge_count())
            throw InvalidInput("labeling required when use_actual_signs is false");
        k = tree_path_sum(g, view, labeling, edge);
    }
    int total = k + g.edges[edge].sign;
    if (total % 2 != 0)
        throw InternalError("framing (k + sign)/2 is not an integer on a bipartite graph");
    return total / 2;
}

BoundWitness flat_upper_bound(const SignedMultigraph& g, const std::vector<int>& tree,
                              int root, int start_sign) {
    require_connected(g);
    require_bipartite(g);
    if (start_sign != 1 && start_sign != -1)
        throw RangeError("start sign must be +1 or -1");
    TreeView view = build_tree_view(g, tree, root);
    int base = g.edge_count() - g.vertex_count + 1;
    int value = evaluate_flat(g, tree, view, start_sign, base);
    return BoundWitness{BoundWitness::Kind::upper, BoundWitness::Quantity::flat_band, value,
                        "alternating spanning tree bound: c - s + 1 + 4*beta + 2*gamma"};
}

std::vector<std::vector<int>> enumerate_spanning_trees(const SignedMultigraph& g,
                                                       long long limit) {
    require_connected(g);
    std::vector<std::vector<int>> out;
    std::vector<int> chosen;
    enumerate_rec(g, 0, Dsu(g.vertex_count), 0, chosen, out, limit);
    return out;
}

long long count_spanning_trees_capped(const SignedMultigraph& g, long long cap) {
    cpp_int count = matrix_tree_count(g);
    if (count > cap) return cap + 1;
    return static_cast<long long>(count);
}

std::pair<BoundWitness, SpanningTreeAnalysis> minimize_flat_bound(const SignedMultigraph& g,
                                                                  long long budget) {
    if (budget < 1) throw RangeError("budget must be positive");
    require_connected(g);
    require_bipartite(g);
    const int base = g.edge_count() - g.vertex_count + 1;

    SearchBest best;
    if (matrix_tree_count(g) <= budget) {
        for (const std::vector<int>& tree : enumerate_spanning_trees(g, budget))
            consider_tree(g, tree, base, best);
    } else {
        // BFS trees from every root, then first-improvement edge swaps on the
        // best of them.
        std::set<std::vector<int>> seen;
        for (int root = 0; root < g.vertex_count; ++root) {
            std::vector<int> tree = spanning_tree(g, root);
            if (seen.insert(tree).second) consider_tree(g, tree, base, best);
        }
        bool improved = true;
        while (improved) {
            improved = false;
            std::vector<int> tree = best.tree;
            TreeView view = build_tree_view(g, tree, 0);
            std::vector<char> in_tree(static_cast<size_t>(g.edge_count()), 0);
            for (int e : tree) in_tree[static_cast<size_t>(e)] = 1;
            std::vector<int> zeros(static_cast<size_t>(g.edge_count()), 0);
            for (int e = 0; e < g.edge_count() && !improved; ++e) {
                if (in_tree[static_cast<size_t>(e)]) continue;
                std::vector<int> path;
                tree_path_sum(g, view, zeros, e, &path);
                std::sort(path.begin(), path.end());
                for (int f : path) {
                    std::vector<int> swapped;
                    swapped.reserve(tree.size());
                    for (int t : tree)
                        if (t != f) swapped.push_back(t);
                    swapped.push_back(e);
                    std::sort(swapped.begin(), swapped.end());
                    int before = best.value;
                    consider_tree(g, swapped, base, best);
                    if (best.value < before) {
                        improved = true;
                        break;
                    }
                }
            }
        }
    }

    TreeView view = build_tree_view(g, best.tree, best.root);
    std::vector<int> labels = labeling_for(g, best.tree, view, best.start_sign);
    SpanningTreeAnalysis analysis;
    analysis.tree = best.tree;
    analysis.root = best.root;
    analysis.start_sign = best.start_sign;
    analysis.labeling = labels;
    analysis.beta = beta_count(g, best.tree, labels);
    analysis.band_bound = base;
    analysis.flat_bound = best.value;
    std::vector<char> in_tree(static_cast<size_t>(g.edge_count()), 0);
    for (int e : best.tree) in_tree[static_cast<size_t>(e)] = 1;
    int gamma = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (in_tree[static_cast<size_t>(e)]) continue;
        int k = tree_path_sum(g, view, labels, e);
        int ne = (k + g.edges[e].sign) / 2;
        analysis.framings.push_back({e, ne});
        if (ne != 0) ++gamma;
    }
    analysis.gamma = gamma;
    if (best.value != base + 4 * analysis.beta + 2 * analysis.gamma)
        throw InternalError("minimized flat bound disagrees with its own analysis");

    BoundWitness witness{BoundWitness::Kind::upper, BoundWitness::Quantity::flat_band,
                         best.value,
                         "minimum alternating spanning tree bound over trees, roots and "
                         "start signs"};
    return {witness, analysis};
}

BoundWitness braid_band_bound(const BraidWord& w) {
    SignedMultigraph g = graph_from_braid(w);
    int m = static_cast<int>(w.letters.size()) - (w.strands - 1);
    if (m != band_upper_bound(g).value)
        throw InternalError("braid band bound disagrees with the graph cycle rank");
    return BoundWitness{BoundWitness::Kind::upper, BoundWitness::Quantity::band, m,
                        "braid word bound: letters - (strands - 1)"};
}

BoundWitness braid_flat_bound(const BraidWord& w) {
    graph_from_braid(w);  // validates that every generator occurs
    int total = 0;
    for (int i = 1; i < w.strands; ++i) {
        int pos = 0, neg = 0;
        for (int e : w.letters) {
            if (e == i) ++pos;
            if (e == -i) ++neg;
        }
        int cost = -1;
        for (int count_d : {pos, neg}) {
            int c = (count_d >= 1) ? (pos + neg - 1) + 2 * (count_d - 1) : (pos + neg + 1);
            if (cost < 0 || c < cost) cost = c;
        }
        total += cost;
    }
    return BoundWitness{BoundWitness::Kind::upper, BoundWitness::Quantity::flat_band, total,
                        "braid word flat bound: disc letter per generator, two bands per "
                        "repeated disc sign"};
}

std::pair<BoundWitness, BoundWitness> band_lower_bounds(int l,
                                                        std::optional<int> conway_degree,
                                                        std::optional<int> genus_lower) {
    if (l < 1) throw RangeError("component count must be positive");
    int base = l - 1;
    if (genus_lower) base = std::max(base, 2 * *genus_lower + l - 1);
    if (conway_degree) base = std::max(base, *conway_degree);
    base = std::max(base, 0);
    // n bands bound a surface with l boundary components only when
    // n = l + 1 (mod 2).
    if (base % 2 != (l + 1) % 2) ++base;
    std::string source =
        "largest of component, genus and Conway degree bounds, rounded to admissible "
        "band parity";
    return {BoundWitness{BoundWitness::Kind::lower, BoundWitness::Quantity::band, base, source},
            BoundWitness{BoundWitness::Kind::lower, BoundWitness::Quantity::flat_band, base,
                         source}};
}

}  // namespace bandix
