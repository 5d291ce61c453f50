#include "spectree/trees.hpp"

#include "spectree/errors.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <set>

namespace spectree {

star_pattern::star_pattern(std::vector<std::size_t> sizes) : sizes_(std::move(sizes))
{
    std::sort(sizes_.begin(), sizes_.end(), std::greater<>());
}

std::size_t star_pattern::order() const noexcept
{
    return 1 + sizes_.size() + forest_edges();
}

std::size_t star_pattern::nontrivial_count() const noexcept
{
    return static_cast<std::size_t>(std::count_if(sizes_.begin(), sizes_.end(), [](auto m) { return m > 0; }));
}

std::size_t star_pattern::forest_edges() const noexcept
{
    return std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0});
}

std::vector<std::size_t> star_pattern::forest_sizes() const
{
    std::vector<std::size_t> out;
    for (auto m : sizes_)
        if (m > 0)
            out.push_back(m);
    return out;
}

std::string star_pattern::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (i)
            out.push_back(',');
        out += std::to_string(sizes_[i]);
    }
    return out;
}

star_pattern star_pattern::parse(std::string_view text)
{
    std::vector<std::size_t> sizes;
    if (text.empty())
        return star_pattern{};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!field.empty() && field.front() == ' ')
            field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ')
            field.remove_suffix(1);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
            throw parse_error("bad star size '" + std::string(field) + "'", pos);
        sizes.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return star_pattern(std::move(sizes));
}

std::string_view to_string(named_tree name)
{
    switch (name) {
    case named_tree::s22:
        return "S22";
    case named_tree::t2:
        return "T2";
    case named_tree::t3:
        return "T3";
    case named_tree::t4:
        return "T4";
    case named_tree::t5:
        return "T5";
    }
    return "?";
}

named_tree parse_named_tree(std::string_view text)
{
    for (auto name : {named_tree::s22, named_tree::t2, named_tree::t3, named_tree::t4, named_tree::t5})
        if (text == to_string(name))
            return name;
    throw invalid_parameter("unknown tree name '" + std::string(text) + "'");
}

graph pattern_to_graph(const star_pattern& pattern)
{
    const auto& sizes = pattern.sizes();
    graph g(pattern.order());
    vertex next_leaf = 1 + sizes.size();
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        vertex center = 1 + i;
        g.add_edge(0, center);
        for (std::size_t j = 0; j < sizes[i]; ++j)
            g.add_edge(center, next_leaf++);
    }
    return g;
}

namespace {

std::vector<std::size_t> eccentricities(const graph& g)
{
    std::vector<std::size_t> ecc(g.order());
    for (vertex v = 0; v < g.order(); ++v)
        ecc[v] = distance_layers(g, v).layers.size() - 1;
    return ecc;
}

// Star sizes seen from `root`; every neighbour's subtree must be a star.
std::vector<std::size_t> sizes_from_root(const graph& g, vertex root)
{
    std::vector<std::size_t> sizes;
    for (vertex w : g.neighbors(root)) {
        for (vertex x : g.neighbors(w))
            if (x != root && g.degree(x) != 1)
                throw invalid_parameter("tree has radius above two around its centre");
        sizes.push_back(g.degree(w) - 1);
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

} // namespace

star_pattern canonicalize_pattern(std::vector<std::size_t> sizes)
{
    graph tree = pattern_to_graph(star_pattern(std::move(sizes)));
    if (tree.order() == 1)
        return star_pattern{};
    auto ecc = eccentricities(tree);
    const auto radius = *std::min_element(ecc.begin(), ecc.end());

    std::optional<std::pair<std::size_t, std::vector<std::size_t>>> best;
    for (vertex c = 0; c < tree.order(); ++c) {
        if (ecc[c] != radius)
            continue;
        std::pair<std::size_t, std::vector<std::size_t>> candidate{tree.degree(c), sizes_from_root(tree, c)};
        if (!best || candidate > *best)
            best = std::move(candidate);
    }
    return star_pattern(std::move(best->second));
}

bool is_canonical(const star_pattern& pattern)
{
    return canonicalize_pattern(pattern.sizes()) == pattern;
}

std::vector<star_pattern> enumerate_diam4_trees(std::size_t t)
{
    if (t < 1)
        throw invalid_parameter("tree order must be at least 1");
    std::set<star_pattern> found;
    std::vector<std::size_t> parts;
    // Nonincreasing sequences of `slots` nonnegative parts summing to `remaining`.
    std::function<void(std::size_t, std::size_t, std::size_t)> walk = [&](std::size_t slots, std::size_t remaining, std::size_t cap) {
        if (slots == 0) {
            if (remaining == 0)
                found.insert(canonicalize_pattern(parts));
            return;
        }
        if (remaining > slots * cap)
            return;
        for (std::size_t m = std::min(cap, remaining) + 1; m-- > 0;) {
            parts.push_back(m);
            walk(slots - 1, remaining - m, m);
            parts.pop_back();
        }
    };
    if (t == 1)
        return {star_pattern{}};
    for (std::size_t p = 1; p <= t - 1; ++p)
        walk(p, t - 1 - p, t - 1 - p);
    return {found.begin(), found.end()};
}

std::size_t min_k_for(named_tree name)
{
    switch (name) {
    case named_tree::s22:
    case named_tree::t2:
        return 1;
    case named_tree::t3:
    case named_tree::t4:
    case named_tree::t5:
        return 2;
    }
    return 2;
}

star_pattern make_named_tree(named_tree name, std::size_t k)
{
    if (k < min_k_for(name))
        throw invalid_parameter(std::string(to_string(name)) + " needs k >= " + std::to_string(min_k_for(name)) + " (got " + std::to_string(k) + ")");
    std::vector<std::size_t> sizes;
    auto ones = [&](std::size_t count) { sizes.insert(sizes.end(), count, 1); };
    switch (name) {
    case named_tree::s22:
        ones(k + 1);
        break;
    case named_tree::t2:
        ones(k);
        sizes.push_back(0);
        sizes.push_back(0);
        break;
    case named_tree::t3:
        sizes.push_back(2);
        ones(k - 1);
        sizes.push_back(0);
        break;
    case named_tree::t4:
        sizes.push_back(2);
        sizes.push_back(2);
        ones(k - 2);
        break;
    case named_tree::t5:
        sizes.push_back(3);
        ones(k - 1);
        break;
    }
    return star_pattern(std::move(sizes));
}

tree_classification classify(const star_pattern& pattern)
{
    tree_classification c;
    c.p = pattern.star_count();
    c.p_prime = pattern.nontrivial_count();
    c.forest_edges = pattern.forest_edges();
    c.diameter = diameter(pattern_to_graph(pattern));
    const auto order = pattern.order();
    if (order >= 5 && order % 2 == 1) {
        const std::size_t k = (order - 3) / 2;
        for (auto name : {named_tree::s22, named_tree::t2, named_tree::t3, named_tree::t4, named_tree::t5})
            if (k >= min_k_for(name) && make_named_tree(name, k) == pattern) {
                c.name = name;
                break;
            }
    }
    return c;
}

std::vector<star_pattern> family_set(std::size_t k, family_kind which)
{
    if (k < 2)
        throw invalid_parameter("tree families are defined for k >= 2 (got " + std::to_string(k) + ")");
    auto all = enumerate_diam4_trees(2 * k + 3);
    if (which == family_kind::all)
        return all;
    std::vector<star_pattern> out;
    const auto s22 = make_named_tree(named_tree::s22, k);
    for (auto& t : all) {
        if (which == family_kind::t_script && t != s22)
            out.push_back(t);
        if (which == family_kind::t_star && t.nontrivial_count() + 1 <= k)
            out.push_back(t);
    }
    return out;
}

} // namespace spectree
