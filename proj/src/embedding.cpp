#include "spectree/embedding.hpp"

#include "spectree/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace spectree {

std::string embedding::to_string() const
{
    std::ostringstream out;
    bool first = true;
    if (root) {
        out << "root=" << *root;
        first = false;
    }
    for (std::size_t i = 0; i < stars.size(); ++i) {
        if (!first)
            out << "; ";
        first = false;
        out << "star " << i << ": center=" << stars[i].center << " leaves=[";
        for (std::size_t j = 0; j < stars[i].leaves.size(); ++j)
            out << (j ? "," : "") << stars[i].leaves[j];
        out << "]";
    }
    return out.str();
}

namespace {

bool fail(std::string* why, std::string msg)
{
    if (why)
        *why = std::move(msg);
    return false;
}

bool check_stars(const graph& host, std::span<const std::size_t> sizes, const embedding& e, std::set<vertex>& seen, std::string* why)
{
    if (e.stars.size() != sizes.size())
        return fail(why, "expected " + std::to_string(sizes.size()) + " stars, got " + std::to_string(e.stars.size()));
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const auto& s = e.stars[i];
        if (s.center >= host.order() || !seen.insert(s.center).second)
            return fail(why, "star " + std::to_string(i) + " centre out of range or reused");
        if (s.leaves.size() != sizes[i])
            return fail(why, "star " + std::to_string(i) + " has " + std::to_string(s.leaves.size()) + " leaves, expected " + std::to_string(sizes[i]));
        for (vertex l : s.leaves) {
            if (l >= host.order() || !seen.insert(l).second)
                return fail(why, "leaf " + std::to_string(l) + " out of range or reused");
            if (!host.adjacent(s.center, l))
                return fail(why, "leaf " + std::to_string(l) + " not adjacent to centre " + std::to_string(s.center));
        }
    }
    return true;
}

// Bipartite matching of demand slots onto distinct host vertices (Kuhn).
class slot_matching {
public:
    explicit slot_matching(std::size_t n) : owner_(n, -1) {}

    bool add_slot(const std::vector<vertex>& candidates)
    {
        slots_.push_back(&candidates);
        assigned_.push_back(0);
        stamp_.assign(owner_.size(), 0);
        ++round_;
        return augment(static_cast<int>(slots_.size() - 1));
    }

    vertex assigned(std::size_t slot) const { return assigned_[slot]; }

private:
    bool augment(int s)
    {
        for (vertex v : *slots_[static_cast<std::size_t>(s)]) {
            if (stamp_[v] == round_)
                continue;
            stamp_[v] = round_;
            if (owner_[v] < 0 || augment(owner_[v])) {
                owner_[v] = s;
                assigned_[static_cast<std::size_t>(s)] = v;
                return true;
            }
        }
        return false;
    }

    std::vector<const std::vector<vertex>*> slots_;
    std::vector<vertex> assigned_;
    std::vector<int> owner_;
    std::vector<unsigned> stamp_;
    unsigned round_ = 0;
};

std::vector<std::vector<vertex>> members_by_class(const std::vector<vertex>& cls)
{
    std::vector<std::vector<vertex>> members(cls.size());
    for (vertex v = 0; v < cls.size(); ++v)
        members[cls[v]].push_back(v);
    return members;
}

// Shared centre-selection search for rooted trees and free star forests.
struct star_search {
    const graph& g;
    std::vector<std::size_t> sizes; // nontrivial, nonincreasing
    std::size_t trivial = 0;
    std::optional<vertex> root;
    std::vector<vertex> candidates; // possible centres, increasing
    std::vector<vertex> twin_of;
    std::vector<std::vector<vertex>> twin_members;

    std::vector<bool> used;
    std::vector<vertex> centers;
    std::vector<std::size_t> center_index;
    std::optional<embedding> result;

    star_search(const graph& host, std::vector<std::size_t> nontrivial, std::vector<vertex> twins)
        : g(host), sizes(std::move(nontrivial)), twin_of(std::move(twins)), used(host.order(), false)
    {
        twin_members = members_by_class(twin_of);
    }

    std::vector<vertex> free_neighbors(vertex c) const
    {
        std::vector<vertex> out;
        for (vertex v : g.neighbors(c))
            if (!used[v])
                out.push_back(v);
        return out;
    }

    // Places leaves (and trivial stars when `complete`) for the chosen centres.
    bool place_leaves(bool complete)
    {
        slot_matching m(g.order());
        std::vector<std::vector<vertex>> cands;
        cands.reserve(centers.size() + 1);
        for (vertex c : centers)
            cands.push_back(free_neighbors(c));
        if (complete && trivial > 0)
            cands.push_back(free_neighbors(*root));
        for (std::size_t i = 0; i < centers.size(); ++i)
            for (std::size_t j = 0; j < sizes[i]; ++j)
                if (!m.add_slot(cands[i]))
                    return false;
        if (complete)
            for (std::size_t j = 0; j < trivial; ++j)
                if (!m.add_slot(cands.back()))
                    return false;
        if (!complete)
            return true;

        embedding e;
        e.root = root;
        std::size_t slot = 0;
        for (std::size_t i = 0; i < centers.size(); ++i) {
            star_image s{centers[i], {}};
            for (std::size_t j = 0; j < sizes[i]; ++j)
                s.leaves.push_back(m.assigned(slot++));
            e.stars.push_back(std::move(s));
        }
        for (std::size_t j = 0; j < trivial; ++j)
            e.stars.push_back({m.assigned(slot++), {}});
        result = std::move(e);
        return true;
    }

    bool has_smaller_free_twin(vertex w) const
    {
        for (vertex t : twin_members[twin_of[w]]) {
            if (t >= w)
                break;
            if (!used[t])
                return true;
        }
        return false;
    }

    bool choose(std::size_t s)
    {
        if (s == sizes.size())
            return place_leaves(true);
        std::size_t start = (s > 0 && sizes[s] == sizes[s - 1]) ? center_index[s - 1] + 1 : 0;
        const std::size_t needed_degree = sizes[s] + (root ? 1 : 0);
        for (std::size_t i = start; i < candidates.size(); ++i) {
            vertex w = candidates[i];
            if (used[w] || g.degree(w) < needed_degree || has_smaller_free_twin(w))
                continue;
            used[w] = true;
            centers.push_back(w);
            center_index.push_back(i);
            bool done = place_leaves(false) && choose(s + 1);
            centers.pop_back();
            center_index.pop_back();
            used[w] = false;
            if (done)
                return true;
        }
        return false;
    }
};

std::size_t within_two(const graph& g, vertex r)
{
    auto row = g.row(r);
    std::vector<std::uint64_t> reach(row.begin(), row.end());
    for (vertex w : g.neighbors(r)) {
        auto wr = g.row(w);
        for (std::size_t i = 0; i < reach.size(); ++i)
            reach[i] |= wr[i];
    }
    reach[r / 64] &= ~(std::uint64_t{1} << (r % 64));
    std::size_t count = 0;
    for (auto w : reach)
        count += static_cast<std::size_t>(std::popcount(w));
    return count;
}

} // namespace

bool is_valid_embedding(const graph& host, const star_pattern& pattern, const embedding& e, std::string* why)
{
    if (!e.root || *e.root >= host.order())
        return fail(why, "missing or out-of-range root");
    std::set<vertex> seen{*e.root};
    if (!check_stars(host, pattern.sizes(), e, seen, why))
        return false;
    for (const auto& s : e.stars)
        if (!host.adjacent(*e.root, s.center))
            return fail(why, "centre " + std::to_string(s.center) + " not adjacent to root");
    return true;
}

bool is_valid_star_forest(const graph& host, std::span<const std::size_t> forest_sizes, const embedding& e,
                          const vertex_set* allowed_centers, std::string* why)
{
    std::vector<std::size_t> sizes(forest_sizes.begin(), forest_sizes.end());
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    std::set<vertex> seen;
    if (!check_stars(host, sizes, e, seen, why))
        return false;
    if (allowed_centers)
        for (const auto& s : e.stars)
            if (!allowed_centers->contains(s.center))
                return fail(why, "centre " + std::to_string(s.center) + " outside the allowed set");
    return true;
}

std::optional<embedding> contains_diam4_tree(const graph& g, const star_pattern& pattern)
{
    const std::size_t t = pattern.order();
    if (t > g.order())
        return std::nullopt;
    if (t == 1)
        return embedding{vertex{0}, {}};

    const std::size_t p = pattern.star_count();
    auto twins = twin_classes(g);
    for (vertex r = 0; r < g.order(); ++r) {
        if (twins[r] != r || g.degree(r) < p || within_two(g, r) < t - 1)
            continue;
        star_search search(g, pattern.forest_sizes(), twins);
        search.trivial = p - pattern.nontrivial_count();
        search.root = r;
        search.candidates = g.neighbors(r);
        search.used[r] = true;
        if (search.choose(0))
            return search.result;
    }
    return std::nullopt;
}

std::optional<embedding> star_forest_embed_constrained(const graph& g, std::span<const std::size_t> forest_sizes,
                                                       const vertex_set& allowed_centers)
{
    if (forest_sizes.empty())
        throw invalid_parameter("star forest must have at least one component");
    if (std::find(forest_sizes.begin(), forest_sizes.end(), 0) != forest_sizes.end())
        throw invalid_parameter("star forest components must have at least one edge");
    if (allowed_centers.universe() != g.order())
        throw invalid_parameter("allowed centre set has the wrong universe");

    std::vector<std::size_t> sizes(forest_sizes.begin(), forest_sizes.end());
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    const std::size_t order = std::accumulate(sizes.begin(), sizes.end(), sizes.size());
    if (order > g.order())
        return std::nullopt;

    // Twins are only interchangeable if both or neither may host a centre.
    auto twins = twin_classes(g);
    std::vector<vertex> refined(g.order());
    for (vertex v = 0; v < g.order(); ++v) {
        refined[v] = v;
        for (vertex u = 0; u < v; ++u)
            if (twins[u] == twins[v] && allowed_centers.contains(u) == allowed_centers.contains(v)) {
                refined[v] = u;
                break;
            }
    }

    star_search search(g, std::move(sizes), std::move(refined));
    search.candidates = allowed_centers.members();
    if (search.choose(0))
        return search.result;
    return std::nullopt;
}

embedding lemma4_greedy_embed(const bipartite_view& h, std::span<const std::size_t> forest_sizes, std::span<const vertex> special)
{
    if (!h.host)
        throw invalid_parameter("bipartite view without host graph");
    const graph& g = *h.host;
    auto precondition = [](const std::string& msg) { throw precondition_error("greedy star-forest embedding: " + msg); };

    if (h.x.intersects(h.y))
        precondition("X and Y must be disjoint");
    const std::size_t pp = forest_sizes.size();
    if (pp < 2)
        precondition("needs p' >= 2 (got p'=" + std::to_string(pp) + ")");
    for (std::size_t i = 0; i < pp; ++i) {
        if (forest_sizes[i] < 1)
            precondition("star sizes must be positive");
        if (i > 0 && forest_sizes[i] > forest_sizes[i - 1])
            precondition("star sizes must be nonincreasing");
    }
    if (special.size() != pp)
        precondition("needs exactly p'=" + std::to_string(pp) + " special vertices (got " + std::to_string(special.size()) + ")");
    const std::size_t total = std::accumulate(forest_sizes.begin(), forest_sizes.end(), std::size_t{0});
    if (h.x.size() < total)
        precondition("|X| >= e(F) fails: " + std::to_string(h.x.size()) + " < " + std::to_string(total));

    std::vector<std::vector<vertex>> x_neighbors(pp);
    std::set<vertex> distinct;
    for (std::size_t i = 0; i < pp; ++i) {
        vertex y = special[i];
        if (!h.y.contains(y))
            precondition("special vertex " + std::to_string(y) + " is not in Y");
        if (!distinct.insert(y).second)
            precondition("special vertex " + std::to_string(y) + " repeated");
        for (vertex x : g.neighbors(y))
            if (h.x.contains(x))
                x_neighbors[i].push_back(x);
        const std::size_t need = i == 0 ? total : total - 1;
        if (x_neighbors[i].size() < need)
            precondition("d_X(y_" + std::to_string(i) + ") >= " + std::to_string(need) + " fails: degree " + std::to_string(x_neighbors[i].size()));
    }

    std::vector<bool> taken(g.order(), false);
    embedding e;
    auto take = [&](std::size_t which, std::size_t count) {
        star_image s{special[which], {}};
        for (vertex x : x_neighbors[which]) {
            if (s.leaves.size() == count)
                break;
            if (!taken[x]) {
                taken[x] = true;
                s.leaves.push_back(x);
            }
        }
        if (s.leaves.size() < count)
            throw defect_error("greedy star-forest embedding ran out of X-neighbours for y_" + std::to_string(which) +
                               " despite satisfied degree bounds");
        e.stars.push_back(std::move(s));
    };
    for (std::size_t i = 1; i < pp; ++i)
        take(i, forest_sizes[i - 1]);
    take(0, forest_sizes[pp - 1]);
    return e;
}

bool brute_force_contains(const graph& g, const graph& tree, const brute_force_options& options)
{
    const std::size_t t = tree.order();
    if (t == 0)
        return true;
    if (t > g.order())
        return false;
    if (tree.edge_count() != t - 1 || !is_connected(tree))
        throw invalid_parameter("pattern graph is not a tree");

    // BFS order from a centre of the tree.
    vertex centre = 0;
    std::size_t best_ecc = t;
    for (vertex v = 0; v < t; ++v) {
        auto ecc = distance_layers(tree, v).layers.size() - 1;
        if (ecc < best_ecc) {
            best_ecc = ecc;
            centre = v;
        }
    }
    std::vector<vertex> order{centre};
    std::vector<vertex> parent(t, centre);
    std::vector<bool> placed(t, false);
    placed[centre] = true;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (vertex w : tree.neighbors(order[i]))
            if (!placed[w]) {
                placed[w] = true;
                parent[w] = order[i];
                order.push_back(w);
            }

    auto twins = twin_classes(g);
    auto twin_members = members_by_class(twins);
    std::vector<vertex> image(t, 0);
    std::vector<bool> used(g.order(), false);

    std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
        if (i == t)
            return true;
        const vertex tv = order[i];
        std::vector<vertex> cands;
        if (i == 0) {
            cands.resize(g.order());
            std::iota(cands.begin(), cands.end(), vertex{0});
        } else {
            cands = g.neighbors(image[parent[tv]]);
        }
        for (vertex c : cands) {
            if (used[c] || g.degree(c) < tree.degree(tv))
                continue;
            if (options.twin_pruning) {
                bool skip = false;
                for (vertex s : twin_members[twins[c]]) {
                    if (s >= c)
                        break;
                    if (!used[s]) {
                        skip = true;
                        break;
                    }
                }
                if (skip)
                    continue;
            }
            used[c] = true;
            image[tv] = c;
            if (extend(i + 1))
                return true;
            used[c] = false;
        }
        return false;
    };
    return extend(0);
}

} // namespace spectree
