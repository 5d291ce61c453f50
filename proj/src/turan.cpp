#include "spectree/turan.hpp"

#include "spectree/embedding.hpp"
#include "spectree/enumerate.hpp"
#include "spectree/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace spectree {

star_forest_spec::star_forest_spec(std::vector<std::size_t> sizes) : sizes_(std::move(sizes))
{
    if (sizes_.empty())
        throw invalid_parameter("star forest needs at least one star");
    if (std::find(sizes_.begin(), sizes_.end(), 0) != sizes_.end())
        throw invalid_parameter("star forest sizes must be positive");
    std::sort(sizes_.begin(), sizes_.end(), std::greater<>());
}

std::size_t star_forest_spec::order() const noexcept
{
    return std::accumulate(sizes_.begin(), sizes_.end(), sizes_.size());
}

std::string star_forest_spec::to_string() const
{
    return star_pattern(sizes_).to_string();
}

star_forest_spec star_forest_spec::parse(std::string_view text)
{
    return star_forest_spec(star_pattern::parse(text).sizes());
}

turan_result star_forest_turan(std::size_t m, const star_forest_spec& f)
{
    turan_result r;
    r.m = m;
    const auto mi = static_cast<std::int64_t>(m);
    if (m < f.order()) {
        r.value = mi * (mi - 1) / 2;
        r.trivial_regime = true;
        return r;
    }
    const auto& sizes = f.sizes();
    for (std::size_t i = 1; i <= sizes.size(); ++i) {
        const auto ii = static_cast<std::int64_t>(i);
        const std::int64_t rest = mi - ii + 1;
        const std::int64_t term = (ii - 1) * rest + (ii - 1) * (ii - 2) / 2 +
                                  (static_cast<std::int64_t>(sizes[i - 1]) - 1) * rest / 2;
        if (r.arg_i == 0 || term > r.value) {
            r.value = term;
            r.arg_i = i;
        }
    }
    return r;
}

namespace {

// Graph on `count` vertices with maximum degree d and floor(d*count/2) edges.
graph near_regular(std::size_t count, std::size_t d)
{
    graph h(count);
    if (d == 0)
        return h;
    auto circulant = [&](std::size_t size) {
        for (std::size_t s = 1; s <= d / 2; ++s)
            for (vertex v = 0; v < size; ++v)
                h.add_edge(v, (v + s) % size);
        if (d % 2 == 1)
            for (vertex v = 0; v < size / 2; ++v)
                h.add_edge(v, v + size / 2);
    };
    if (d % 2 == 0 || count % 2 == 0) {
        circulant(count);
        return h;
    }
    // Odd degree on an odd vertex count: d-regular on count-1 vertices, then
    // trade (d-1)/2 matching edges for edges to the last vertex.
    circulant(count - 1);
    const vertex extra = count - 1;
    for (vertex v = 0; v + 1 < d; v += 2) {
        h.remove_edge(v, v + 1);
        h.add_edge(extra, v);
        h.add_edge(extra, v + 1);
    }
    return h;
}

} // namespace

graph extremal_construction(std::size_t m, const star_forest_spec& f)
{
    auto r = star_forest_turan(m, f);
    if (r.trivial_regime)
        throw invalid_parameter("extremal construction needs m >= order(F) (m=" + std::to_string(m) +
                                ", order=" + std::to_string(f.order()) + ")");
    const std::size_t i = r.arg_i;
    return join(complete_graph(i - 1), near_regular(m - i + 1, f.sizes()[i - 1] - 1));
}

turan_result brute_force_turan(std::size_t m, const star_forest_spec& f, std::size_t cap)
{
    if (m > cap)
        throw resource_error("exhaustive Turán search capped at m <= " + std::to_string(cap) + " (requested m=" + std::to_string(m) + ")");
    turan_result r;
    r.m = m;
    r.exact = true;
    r.trivial_regime = m < f.order();
    if (m == 0)
        return r;
    const auto& graphs = enumerate_graphs(m, cap);
    const auto all = vertex_set::full(m);
    for (auto it = graphs.rbegin(); it != graphs.rend(); ++it) {
        if (!star_forest_embed_constrained(*it, f.sizes(), all)) {
            r.value = static_cast<std::int64_t>(it->edge_count());
            r.construction = *it;
            break;
        }
    }
    return r;
}

erdos_sos_report erdos_sos_diam4_check(const graph& g, std::size_t t)
{
    if (t < 2)
        throw invalid_parameter("tree order must be at least 2");
    erdos_sos_report report;
    report.applicable = 2 * g.edge_count() > (t - 2) * g.order();
    if (!report.applicable)
        return report;
    for (const auto& tree : enumerate_diam4_trees(t))
        if (!contains_diam4_tree(g, tree))
            report.missing.push_back(tree);
    return report;
}

} // namespace spectree
