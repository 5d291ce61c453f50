#include "spectree/canonical.hpp"

#include <algorithm>
#include <map>

namespace spectree {

namespace {

using coloring = std::vector<std::size_t>;

std::size_t color_count(const coloring& c)
{
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Iterated colour refinement. New colours are ranks of (old colour,
// neighbour-colour histogram), so the result is label-equivariant.
void refine(const graph& g, coloring& colors)
{
    const std::size_t n = g.order();
    std::size_t classes = color_count(colors);
    std::vector<std::vector<std::size_t>> keys(n);
    while (true) {
        for (vertex v = 0; v < n; ++v) {
            auto& key = keys[v];
            key.assign(classes + 1, 0);
            key[0] = colors[v];
            for (vertex w : g.neighbors(v))
                ++key[1 + colors[w]];
        }
        std::vector<const std::vector<std::size_t>*> distinct;
        distinct.reserve(n);
        for (auto& k : keys)
            distinct.push_back(&k);
        std::sort(distinct.begin(), distinct.end(), [](auto* a, auto* b) { return *a < *b; });
        distinct.erase(std::unique(distinct.begin(), distinct.end(), [](auto* a, auto* b) { return *a == *b; }), distinct.end());
        if (distinct.size() == classes)
            return;
        for (vertex v = 0; v < n; ++v)
            colors[v] = static_cast<std::size_t>(
                std::lower_bound(distinct.begin(), distinct.end(), &keys[v], [](auto* a, auto* b) { return *a < *b; }) - distinct.begin());
        classes = distinct.size();
    }
}

std::vector<std::uint64_t> certificate_under(const graph& g, const coloring& position)
{
    const std::size_t n = g.order();
    const std::size_t words = detail::words_for(n);
    std::vector<std::uint64_t> cert(n * words, 0);
    for (auto [u, v] : g.edges()) {
        auto pu = position[u], pv = position[v];
        cert[pu * words + pv / 64] |= std::uint64_t{1} << (pv % 64);
        cert[pv * words + pu / 64] |= std::uint64_t{1} << (pu % 64);
    }
    return cert;
}

struct searcher {
    const graph& g;
    std::vector<vertex> twins;
    bool have_best = false;
    std::vector<std::uint64_t> best_cert;
    coloring best_position;

    void run(coloring colors)
    {
        refine(g, colors);
        const std::size_t n = g.order();
        const std::size_t classes = color_count(colors);
        if (classes == n) {
            auto cert = certificate_under(g, colors);
            if (!have_best || cert > best_cert) {
                have_best = true;
                best_cert = std::move(cert);
                best_position = colors;
            }
            return;
        }

        std::vector<std::size_t> cell_size(classes, 0);
        for (auto c : colors)
            ++cell_size[c];
        std::size_t target = 0;
        while (cell_size[target] < 2)
            ++target;

        std::vector<vertex> cell;
        for (vertex v = 0; v < n; ++v)
            if (colors[v] == target)
                cell.push_back(v);

        std::vector<vertex> seen_twin_classes;
        for (vertex v : cell) {
            if (std::find(seen_twin_classes.begin(), seen_twin_classes.end(), twins[v]) != seen_twin_classes.end())
                continue;
            seen_twin_classes.push_back(twins[v]);

            coloring next = colors;
            for (vertex w = 0; w < n; ++w)
                if (colors[w] > target || (colors[w] == target && w != v))
                    ++next[w];
            run(std::move(next));
        }
    }
};

} // namespace

canonical_labeling canonical_form(const graph& g)
{
    searcher s{g, twin_classes(g), false, {}, {}};
    s.run(coloring(g.order(), 0));
    canonical_labeling out;
    out.labeling = s.best_position;
    out.canonical = g.permuted(out.labeling);
    out.certificate = std::move(s.best_cert);
    return out;
}

std::vector<std::uint64_t> certificate(const graph& g)
{
    return canonical_form(g).certificate;
}

bool isomorphic(const graph& a, const graph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    std::vector<std::size_t> da, db;
    for (vertex v = 0; v < a.order(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db)
        return false;
    return certificate(a) == certificate(b);
}

namespace {
bool degree_multiset_is(const graph& g, std::map<std::size_t, std::size_t> expected)
{
    std::map<std::size_t, std::size_t> actual;
    for (vertex v = 0; v < g.order(); ++v)
        ++actual[g.degree(v)];
    std::erase_if(expected, [](const auto& kv) { return kv.second == 0; });
    return actual == expected;
}
} // namespace

bool is_isomorphic_to_split(const graph& g, std::size_t k)
{
    const std::size_t n = g.order();
    if (k < 1 || k >= n)
        return false;
    std::map<std::size_t, std::size_t> expected;
    expected[n - 1] += k;
    expected[k] += n - k;
    return degree_multiset_is(g, expected);
}

bool is_isomorphic_to_split_plus(const graph& g, std::size_t k)
{
    const std::size_t n = g.order();
    if (k < 1 || k >= n || n - k < 2)
        return false;
    std::map<std::size_t, std::size_t> expected;
    expected[n - 1] += k;
    expected[k + 1] += 2;
    expected[k] += n - k - 2;
    return degree_multiset_is(g, expected);
}

} // namespace spectree
