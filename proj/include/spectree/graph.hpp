#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace spectree {

using vertex = std::size_t;
using edge = std::pair<vertex, vertex>;

namespace detail {
inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }
} // namespace detail

/// Subset of {0, ..., universe-1}, stored as a bit row.
class vertex_set {
public:
    vertex_set() = default;
    explicit vertex_set(std::size_t universe);
    vertex_set(std::size_t universe, std::initializer_list<vertex> members);
    vertex_set(std::size_t universe, std::span<const vertex> members);

    static vertex_set full(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept { return size() == 0; }
    bool contains(vertex v) const noexcept;

    void insert(vertex v);
    void erase(vertex v);

    /// Members in increasing order.
    std::vector<vertex> members() const;

    bool intersects(const vertex_set& other) const noexcept;
    vertex_set operator|(const vertex_set& other) const;
    vertex_set operator&(const vertex_set& other) const;
    vertex_set operator-(const vertex_set& other) const;

    std::span<const std::uint64_t> words() const noexcept { return bits_; }

    friend bool operator==(const vertex_set&, const vertex_set&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Simple undirected graph on vertices 0..n-1 with bit-row adjacency.
///
/// Labels are dense integers. Equality compares labelled adjacency; use
/// `isomorphic` (canonical.hpp) when labels should not matter.
class graph {
public:
    graph() = default;
    explicit graph(std::size_t n);
    graph(std::size_t n, std::span<const edge> edges);
    graph(std::size_t n, std::initializer_list<edge> edges);

    std::size_t order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_; }

    bool adjacent(vertex u, vertex v) const noexcept
    {
        return (rows_[u * words_ + v / 64] >> (v % 64)) & 1U;
    }

    std::size_t degree(vertex u) const noexcept { return degree_[u]; }
    std::size_t max_degree() const noexcept;

    /// Adds {u, v}; returns false if it was already present.
    bool add_edge(vertex u, vertex v);
    bool remove_edge(vertex u, vertex v);
    void toggle_edge(vertex u, vertex v);

    std::span<const std::uint64_t> row(vertex u) const noexcept
    {
        return {rows_.data() + u * words_, words_};
    }

    vertex_set neighborhood(vertex u) const;
    std::vector<vertex> neighbors(vertex u) const;
    std::vector<edge> edges() const;

    graph complement() const;
    /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
    graph induced(std::span<const vertex> vertices) const;
    /// Relabels so that vertex v of *this becomes perm[v] in the result.
    graph permuted(std::span<const vertex> perm) const;

    friend bool operator==(const graph& a, const graph& b)
    {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::size_t edges_ = 0;
    std::vector<std::uint64_t> rows_;
    std::vector<std::size_t> degree_;
};

// ---- named constructions ----

enum class family { complete, empty, star, split, split_plus, join };

graph complete_graph(std::size_t n);
graph empty_graph(std::size_t n);
/// K_{1,leaves}; the centre is vertex 0.
graph star_graph(std::size_t leaves);
/// K_k joined to an independent set of n-k vertices; vertices 0..k-1 are the clique.
graph split_graph(std::size_t n, std::size_t k);
/// split_graph(n, k) plus the edge {k, k+1}.
graph split_plus_graph(std::size_t n, std::size_t k);
/// Complete multipartite graph with the given part sizes (join of independent sets).
graph complete_multipartite(std::span<const std::size_t> parts);
graph path_graph(std::size_t n);
graph cycle_graph(std::size_t n);
graph disjoint_union(const graph& a, const graph& b);
/// Every vertex of a joined to every vertex of b; b's vertices are shifted by a.order().
graph join(const graph& a, const graph& b);

/// Dispatches to the constructors above. Parameters:
/// complete/empty: {n}; star: {leaves}; split/split_plus: {n, k}; join: part sizes.
graph construct_family(family which, std::span<const std::size_t> params);

// ---- distance structure ----

/// Breadth-first distance layers from `origin`: layers[d] = N^d(origin).
/// Only reachable distances are present, so layers.back() is non-empty.
struct layered_view {
    vertex origin = 0;
    std::vector<std::vector<vertex>> layers;
};

layered_view distance_layers(const graph& g, vertex origin);
/// Exact distance-d set; empty when no vertex lies at distance d.
vertex_set neighborhood_layer(const graph& g, vertex u, std::size_t d);

/// Auxiliary graph on N^1(u) ∪ N^2(u) that keeps the edges inside N^1(u)
/// and between N^1(u) and N^2(u).
struct proof_subgraph {
    graph g;
    /// Host label of each local vertex; N^1(u) first (ascending), then N^2(u).
    std::vector<vertex> to_host;
    std::size_t first_layer_size = 0;
};

proof_subgraph build_proof_subgraph(const graph& g, vertex u);

/// e(U): edges with both ends in U.
std::size_t edge_count_within(const graph& g, const vertex_set& u);
/// e(U, V) for disjoint U and V; throws invalid_parameter on overlap.
std::size_t edge_count_between(const graph& g, const vertex_set& u, const vertex_set& v);
/// e(U) when `v` is absent, e(U, V) otherwise.
std::size_t edge_counts(const graph& g, const vertex_set& u, const std::optional<vertex_set>& v = {});

std::vector<std::vector<vertex>> connected_components(const graph& g);
std::size_t component_count(const graph& g);
bool is_connected(const graph& g);

/// Longest shortest-path length; requires a connected graph. Returns 0 for n <= 1.
std::size_t diameter(const graph& g);

/// Twin classes: u and v share a class when N(u) = N(v) or N[u] = N[v].
/// Swapping two twins is an automorphism. class_of[v] is the smallest member of v's class.
std::vector<vertex> twin_classes(const graph& g);

} // namespace spectree
