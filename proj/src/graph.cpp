#include "spectree/graph.hpp"

#include "spectree/errors.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <string>

namespace spectree {

// ---- vertex_set ----

vertex_set::vertex_set(std::size_t universe) : universe_(universe), bits_(detail::words_for(universe), 0) {}

vertex_set::vertex_set(std::size_t universe, std::initializer_list<vertex> members) : vertex_set(universe)
{
    for (vertex v : members)
        insert(v);
}

vertex_set::vertex_set(std::size_t universe, std::span<const vertex> members) : vertex_set(universe)
{
    for (vertex v : members)
        insert(v);
}

vertex_set vertex_set::full(std::size_t universe)
{
    vertex_set s(universe);
    for (vertex v = 0; v < universe; ++v)
        s.insert(v);
    return s;
}

std::size_t vertex_set::size() const noexcept
{
    std::size_t count = 0;
    for (auto w : bits_)
        count += static_cast<std::size_t>(std::popcount(w));
    return count;
}

bool vertex_set::contains(vertex v) const noexcept
{
    return v < universe_ && ((bits_[v / 64] >> (v % 64)) & 1U);
}

void vertex_set::insert(vertex v)
{
    if (v >= universe_)
        throw invalid_parameter("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
    bits_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void vertex_set::erase(vertex v)
{
    if (v < universe_)
        bits_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

std::vector<vertex> vertex_set::members() const
{
    std::vector<vertex> out;
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t word = bits_[w];
        while (word) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
            word &= word - 1;
        }
    }
    return out;
}

bool vertex_set::intersects(const vertex_set& other) const noexcept
{
    auto n = std::min(bits_.size(), other.bits_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (bits_[i] & other.bits_[i])
            return true;
    return false;
}

namespace {
void check_same_universe(const vertex_set& a, const vertex_set& b)
{
    if (a.universe() != b.universe())
        throw invalid_parameter("vertex sets over different universes");
}
} // namespace

vertex_set vertex_set::operator|(const vertex_set& other) const
{
    check_same_universe(*this, other);
    vertex_set out = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        out.bits_[i] |= other.bits_[i];
    return out;
}

vertex_set vertex_set::operator&(const vertex_set& other) const
{
    check_same_universe(*this, other);
    vertex_set out = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        out.bits_[i] &= other.bits_[i];
    return out;
}

vertex_set vertex_set::operator-(const vertex_set& other) const
{
    check_same_universe(*this, other);
    vertex_set out = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        out.bits_[i] &= ~other.bits_[i];
    return out;
}

// ---- graph ----

graph::graph(std::size_t n) : n_(n), words_(detail::words_for(n)), rows_(n * words_, 0), degree_(n, 0) {}

graph::graph(std::size_t n, std::span<const edge> edges) : graph(n)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

graph::graph(std::size_t n, std::initializer_list<edge> edges) : graph(n, std::span<const edge>(edges.begin(), edges.size())) {}

std::size_t graph::max_degree() const noexcept
{
    return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

bool graph::add_edge(vertex u, vertex v)
{
    if (u >= n_ || v >= n_)
        throw invalid_parameter("edge {" + std::to_string(u) + "," + std::to_string(v) + "} outside graph of order " + std::to_string(n_));
    if (u == v)
        throw invalid_parameter("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v))
        return false;
    rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    rows_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    ++degree_[u];
    ++degree_[v];
    ++edges_;
    return true;
}

bool graph::remove_edge(vertex u, vertex v)
{
    if (u >= n_ || v >= n_ || u == v || !adjacent(u, v))
        return false;
    rows_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    rows_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
    --degree_[u];
    --degree_[v];
    --edges_;
    return true;
}

void graph::toggle_edge(vertex u, vertex v)
{
    if (!remove_edge(u, v))
        add_edge(u, v);
}

vertex_set graph::neighborhood(vertex u) const
{
    vertex_set s(n_);
    for (vertex v : neighbors(u))
        s.insert(v);
    return s;
}

std::vector<vertex> graph::neighbors(vertex u) const
{
    std::vector<vertex> out;
    out.reserve(degree_[u]);
    auto r = row(u);
    for (std::size_t w = 0; w < r.size(); ++w) {
        std::uint64_t word = r[w];
        while (word) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
            word &= word - 1;
        }
    }
    return out;
}

std::vector<edge> graph::edges() const
{
    std::vector<edge> out;
    out.reserve(edges_);
    for (vertex u = 0; u < n_; ++u)
        for (vertex v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

graph graph::complement() const
{
    graph c(n_);
    for (vertex u = 0; u < n_; ++u)
        for (vertex v = u + 1; v < n_; ++v)
            if (!adjacent(u, v))
                c.add_edge(u, v);
    return c;
}

graph graph::induced(std::span<const vertex> vertices) const
{
    graph h(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j]))
                h.add_edge(i, j);
    return h;
}

graph graph::permuted(std::span<const vertex> perm) const
{
    if (perm.size() != n_)
        throw invalid_parameter("permutation size does not match graph order");
    graph h(n_);
    for (auto [u, v] : edges())
        h.add_edge(perm[u], perm[v]);
    return h;
}

// ---- constructions ----

graph complete_graph(std::size_t n)
{
    graph g(n);
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

graph empty_graph(std::size_t n) { return graph(n); }

graph star_graph(std::size_t leaves)
{
    graph g(leaves + 1);
    for (vertex v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

graph split_graph(std::size_t n, std::size_t k)
{
    if (k < 1 || k >= n)
        throw invalid_parameter("split graph needs 1 <= k < n (got n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
    graph g(n);
    for (vertex u = 0; u < k; ++u)
        for (vertex v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

graph split_plus_graph(std::size_t n, std::size_t k)
{
    if (k < 1 || k >= n || n - k < 2)
        throw invalid_parameter("split_plus graph needs 1 <= k and n-k >= 2 (got n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
    graph g = split_graph(n, k);
    g.add_edge(k, k + 1);
    return g;
}

graph complete_multipartite(std::span<const std::size_t> parts)
{
    std::size_t n = 0;
    std::vector<std::size_t> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        n += parts[i];
        part_of.insert(part_of.end(), parts[i], i);
    }
    graph g(n);
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v])
                g.add_edge(u, v);
    return g;
}

graph path_graph(std::size_t n)
{
    graph g(n);
    for (vertex v = 1; v < n; ++v)
        g.add_edge(v - 1, v);
    return g;
}

graph cycle_graph(std::size_t n)
{
    if (n < 3)
        throw invalid_parameter("cycle needs at least 3 vertices");
    graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

graph disjoint_union(const graph& a, const graph& b)
{
    graph g(a.order() + b.order());
    for (auto [u, v] : a.edges())
        g.add_edge(u, v);
    for (auto [u, v] : b.edges())
        g.add_edge(u + a.order(), v + a.order());
    return g;
}

graph join(const graph& a, const graph& b)
{
    graph g = disjoint_union(a, b);
    for (vertex u = 0; u < a.order(); ++u)
        for (vertex v = 0; v < b.order(); ++v)
            g.add_edge(u, a.order() + v);
    return g;
}

graph construct_family(family which, std::span<const std::size_t> params)
{
    auto need = [&](std::size_t count, const char* name) {
        if (params.size() != count)
            throw invalid_parameter(std::string(name) + " expects " + std::to_string(count) + " parameter(s), got " + std::to_string(params.size()));
    };
    switch (which) {
    case family::complete:
        need(1, "complete");
        return complete_graph(params[0]);
    case family::empty:
        need(1, "empty");
        return empty_graph(params[0]);
    case family::star:
        need(1, "star");
        return star_graph(params[0]);
    case family::split:
        need(2, "split");
        return split_graph(params[0], params[1]);
    case family::split_plus:
        need(2, "split_plus");
        return split_plus_graph(params[0], params[1]);
    case family::join:
        if (params.empty())
            throw invalid_parameter("join expects at least one part size");
        return complete_multipartite(params);
    }
    throw invalid_parameter("unknown family");
}

// ---- distance structure ----

layered_view distance_layers(const graph& g, vertex origin)
{
    if (origin >= g.order())
        throw invalid_parameter("origin " + std::to_string(origin) + " outside graph of order " + std::to_string(g.order()));
    layered_view view{origin, {{origin}}};
    std::vector<bool> seen(g.order(), false);
    seen[origin] = true;
    while (true) {
        std::vector<vertex> next;
        for (vertex u : view.layers.back())
            for (vertex v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = true;
                    next.push_back(v);
                }
        if (next.empty())
            break;
        std::sort(next.begin(), next.end());
        view.layers.push_back(std::move(next));
    }
    return view;
}

vertex_set neighborhood_layer(const graph& g, vertex u, std::size_t d)
{
    auto view = distance_layers(g, u);
    vertex_set out(g.order());
    if (d < view.layers.size())
        for (vertex v : view.layers[d])
            out.insert(v);
    return out;
}

proof_subgraph build_proof_subgraph(const graph& g, vertex u)
{
    auto view = distance_layers(g, u);
    proof_subgraph out;
    if (view.layers.size() > 1)
        out.to_host = view.layers[1];
    out.first_layer_size = out.to_host.size();
    if (view.layers.size() > 2)
        out.to_host.insert(out.to_host.end(), view.layers[2].begin(), view.layers[2].end());

    out.g = graph(out.to_host.size());
    const std::size_t first = out.first_layer_size;
    for (std::size_t i = 0; i < first; ++i)
        for (std::size_t j = i + 1; j < out.to_host.size(); ++j)
            if (g.adjacent(out.to_host[i], out.to_host[j]))
                out.g.add_edge(i, j);
    return out;
}

std::size_t edge_count_within(const graph& g, const vertex_set& u)
{
    std::size_t twice = 0;
    for (vertex x : u.members()) {
        auto r = g.row(x);
        auto w = u.words();
        for (std::size_t i = 0; i < r.size(); ++i)
            twice += static_cast<std::size_t>(std::popcount(r[i] & w[i]));
    }
    return twice / 2;
}

std::size_t edge_count_between(const graph& g, const vertex_set& u, const vertex_set& v)
{
    if (u.intersects(v))
        throw invalid_parameter("e(U,V) requires disjoint U and V");
    std::size_t count = 0;
    for (vertex x : u.members()) {
        auto r = g.row(x);
        auto w = v.words();
        for (std::size_t i = 0; i < r.size(); ++i)
            count += static_cast<std::size_t>(std::popcount(r[i] & w[i]));
    }
    return count;
}

std::size_t edge_counts(const graph& g, const vertex_set& u, const std::optional<vertex_set>& v)
{
    return v ? edge_count_between(g, u, *v) : edge_count_within(g, u);
}

std::vector<std::vector<vertex>> connected_components(const graph& g)
{
    std::vector<std::vector<vertex>> out;
    std::vector<bool> seen(g.order(), false);
    for (vertex s = 0; s < g.order(); ++s) {
        if (seen[s])
            continue;
        std::vector<vertex> comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (vertex v : g.neighbors(comp[i]))
                if (!seen[v]) {
                    seen[v] = true;
                    comp.push_back(v);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::size_t component_count(const graph& g) { return connected_components(g).size(); }

bool is_connected(const graph& g) { return g.order() <= 1 || component_count(g) == 1; }

std::size_t diameter(const graph& g)
{
    if (!is_connected(g))
        throw precondition_error("diameter of a disconnected graph is undefined");
    std::size_t best = 0;
    for (vertex v = 0; v < g.order(); ++v)
        best = std::max(best, distance_layers(g, v).layers.size() - 1);
    return best;
}

std::vector<vertex> twin_classes(const graph& g)
{
    const std::size_t n = g.order();
    std::vector<vertex> cls(n);
    std::map<std::vector<std::uint64_t>, vertex> open_rows, closed_rows;
    for (vertex v = 0; v < n; ++v) {
        std::vector<std::uint64_t> open(g.row(v).begin(), g.row(v).end());
        std::vector<std::uint64_t> closed = open;
        closed[v / 64] |= std::uint64_t{1} << (v % 64);
        auto [it_open, fresh_open] = open_rows.emplace(std::move(open), v);
        auto [it_closed, fresh_closed] = closed_rows.emplace(std::move(closed), v);
        if (!fresh_open)
            cls[v] = it_open->second;
        else if (!fresh_closed)
            cls[v] = it_closed->second;
        else
            cls[v] = v;
    }
    return cls;
}

} // namespace spectree
