#pragma once

#include "spectree/graph.hpp"
#include "spectree/trees.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace spectree {

struct star_image {
    vertex center = 0;
    std::vector<vertex> leaves;
};

/// Witness that a tree (or star forest) is a subgraph of a host.
/// For a tree, stars[i] realises pattern.sizes()[i] and every centre is
/// adjacent to the root. Star forests have no root.
struct embedding {
    std::optional<vertex> root;
    std::vector<star_image> stars;

    /// "root=v; star 0: center=c leaves=[a,b]; star 1: ..."
    std::string to_string() const;
};

/// Independent check of a tree witness: injectivity, root–centre and
/// centre–leaf adjacency, star sizes matching the pattern.
bool is_valid_embedding(const graph& host, const star_pattern& pattern, const embedding& e, std::string* why = nullptr);

/// Same for a star forest: star i has forest_sizes[i] leaves and, when given,
/// its centre lies in `allowed_centers`.
bool is_valid_star_forest(const graph& host, std::span<const std::size_t> forest_sizes, const embedding& e,
                          const vertex_set* allowed_centers = nullptr, std::string* why = nullptr);

/// Exact decision: a witness iff the tree of `pattern` is a subgraph of g.
///
/// Roots are tried in increasing order (one per twin class, degree >= p, at
/// least order-1 vertices within distance two). Nontrivial star centres are
/// chosen among the root's neighbours, one size class at a time as
/// combinations; leaves and trivial stars are then placed by bipartite
/// matching, which is also run on every partial assignment to prune.
std::optional<embedding> contains_diam4_tree(const graph& g, const star_pattern& pattern);

/// Vertex-disjoint stars K_{1,m_i} with every centre in `allowed_centers`
/// (leaves unrestricted). Exact.
std::optional<embedding> star_forest_embed_constrained(const graph& g, std::span<const std::size_t> forest_sizes,
                                                       const vertex_set& allowed_centers);

/// Bipartite host restricted to edges between X and Y.
struct bipartite_view {
    const graph* host = nullptr;
    vertex_set x;
    vertex_set y;
};

/// Greedy star-forest placement for forests with p' >= 2 stars sized
/// m_1 >= ... >= m_{p'}: special[i] (i >= 1) takes m_i unused X-neighbours
/// in increasing label order, then special[0] takes m_{p'}.
///
/// Preconditions, checked and reported by inequality: X ∩ Y = ∅, p' >= 2,
/// special vertices distinct and in Y, |X| >= Σm, d_X(special[0]) >= Σm,
/// d_X(special[i]) >= Σm - 1. Under them the procedure cannot run out of
/// vertices; if it does, defect_error is thrown.
/// Returned stars are ordered special[1], ..., special[p'-1], special[0].
embedding lemma4_greedy_embed(const bipartite_view& h, std::span<const std::size_t> forest_sizes,
                              std::span<const vertex> special);

struct brute_force_options {
    /// Try only the smallest unused member of each twin class at every step.
    bool twin_pruning = true;
};

/// Subtree test by plain backtracking: T's vertices in BFS order from a
/// centre, each mapped to an unused neighbour of its parent's image.
bool brute_force_contains(const graph& g, const graph& tree, const brute_force_options& options = {});

} // namespace spectree
