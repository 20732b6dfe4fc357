#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bandix/braid.hpp"
#include "bandix/seifert_graph.hpp"

namespace bandix {

/// A single certified bound together with its provenance.
struct BoundWitness {
    enum class Kind { lower, upper };
    enum class Quantity { band, flat_band };

    Kind kind = Kind::upper;
    Quantity quantity = Quantity::band;
    int value = 0;
    std::string source;
};

std::string to_string(BoundWitness::Kind k);
std::string to_string(BoundWitness::Quantity q);

/// One spanning tree with root, alternating labeling and the derived
/// quantities of the flat bound. `labeling` holds +/-1 on tree edges and 0
/// elsewhere. `framings` lists (non-tree edge id, full twists) computed
/// against the labeling, i.e. in the modified diagram whose tree signs have
/// been converted into the labels; gamma equals the number of nonzero
/// entries.
struct SpanningTreeAnalysis {
    std::vector<int> tree;  // edge ids, ascending; |tree| = vertex_count - 1
    int root = 0;
    int start_sign = -1;
    std::vector<int> labeling;
    int beta = 0;
    int gamma = 0;
    std::vector<std::pair<int, int>> framings;
    int band_bound = 0;
    int flat_bound = 0;
};

/// Band index upper bound c - s + 1 (the cycle rank of the induced graph).
BoundWitness band_upper_bound(const SignedMultigraph& g);

/// Breadth-first spanning tree from `root`; among parallel candidates the
/// lowest edge id wins. Returns ascending edge ids.
std::vector<int> spanning_tree(const SignedMultigraph& g, int root);

/// Labels tree edges alternately by depth: the edge whose deeper endpoint
/// has depth d gets start_sign * (-1)^(d-1). Entries are 0 off the tree.
std::vector<int> alternating_labeling(const SignedMultigraph& g,
                                      const std::vector<int>& tree, int root,
                                      int start_sign);

/// Sum of `labeling` over the unique tree path joining the endpoints of the
/// non-tree edge `edge`. For bipartite graphs and alternating labelings the
/// result is +1 or -1.
int path_sign_sum(const SignedMultigraph& g, const std::vector<int>& tree,
                  const std::vector<int>& labeling, int edge);

/// Number of tree edges whose actual sign differs from the labeling.
int beta_count(const SignedMultigraph& g, const std::vector<int>& tree,
               const std::vector<int>& labeling);

/// Number of non-tree edges whose sign equals their path sign sum.
int gamma_count(const SignedMultigraph& g, const std::vector<int>& tree,
                const std::vector<int>& labeling);

/// Full twists n_e = (k + sign(e)) / 2 of the band presented by the
/// non-tree edge, where k sums the tree path either over actual edge signs
/// or over `labeling`. Bipartiteness makes k + sign(e) even.
int framing(const SignedMultigraph& g, const std::vector<int>& tree, int edge,
            bool use_actual_signs, const std::vector<int>& labeling = {});

/// Flat band upper bound (c - s + 1) + 4*beta + 2*gamma for one tree, root
/// and start sign.
BoundWitness flat_upper_bound(const SignedMultigraph& g,
                              const std::vector<int>& tree, int root,
                              int start_sign);

/// Minimum of flat_upper_bound over both start signs, all roots and all
/// spanning trees. Enumerates exactly when the spanning tree count is at
/// most `budget`; otherwise evaluates BFS trees from every root followed by
/// deterministic edge-swap hill climbing. Ties break toward the
/// lexicographically least tree, then the lowest root, then start sign -1.
std::pair<BoundWitness, SpanningTreeAnalysis> minimize_flat_bound(
    const SignedMultigraph& g, long long budget = 10000);

/// All spanning trees as ascending edge-id sets, in lexicographic order.
/// Throws RangeError when more than `limit` trees exist.
std::vector<std::vector<int>> enumerate_spanning_trees(
    const SignedMultigraph& g, long long limit);

/// Exact spanning tree count (matrix-tree theorem) when it is at most
/// `cap`, otherwise cap + 1.
long long count_spanning_trees_capped(const SignedMultigraph& g,
                                      long long cap);

/// Band index upper bound m = letters - (strands - 1) from the braid word;
/// equals band_upper_bound(graph_from_braid(w)) and that equality is
/// asserted.
BoundWitness braid_band_bound(const BraidWord& w);

/// Flat band upper bound from the braid word. For each generator one
/// occurrence is absorbed into the disc; every remaining occurrence of the
/// disc letter's sign costs two extra flat bands. When a generator has no
/// occurrence of the better disc sign, a cancelling pair is inserted and
/// its surplus letter is counted instead.
BoundWitness braid_flat_bound(const BraidWord& w);

/// Lower bounds shared by B and FB: the largest of l - 1,
/// 2*genus_lower + l - 1 and the Conway degree, rounded up to the parity a
/// banded surface boundary with l components permits (n = l + 1 mod 2).
std::pair<BoundWitness, BoundWitness> band_lower_bounds(
    int l, std::optional<int> conway_degree, std::optional<int> genus_lower);

}  // namespace bandix
