#include "spectree/enumerate.hpp"

#include "spectree/canonical.hpp"
#include "spectree/errors.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace spectree {

namespace {

using level = std::map<std::vector<std::uint64_t>, graph>;

std::vector<graph> generate(std::size_t n)
{
    const std::size_t pairs = n * (n - 1) / 2;
    const std::size_t half = pairs / 2;
    std::vector<level> levels(pairs + 1);
    {
        auto c = canonical_form(graph(n));
        levels[0].emplace(std::move(c.certificate), std::move(c.canonical));
    }
    for (std::size_t e = 0; e < half; ++e) {
        for (const auto& [cert, g] : levels[e]) {
            for (vertex u = 0; u < n; ++u)
                for (vertex v = u + 1; v < n; ++v) {
                    if (g.adjacent(u, v))
                        continue;
                    graph h = g;
                    h.add_edge(u, v);
                    auto c = canonical_form(h);
                    levels[e + 1].try_emplace(std::move(c.certificate), std::move(c.canonical));
                }
        }
    }
    for (std::size_t e = half + 1; e <= pairs; ++e)
        for (const auto& [cert, g] : levels[pairs - e]) {
            auto c = canonical_form(g.complement());
            levels[e].emplace(std::move(c.certificate), std::move(c.canonical));
        }

    std::vector<graph> out;
    for (auto& lv : levels)
        for (auto& [cert, g] : lv)
            out.push_back(std::move(g));
    return out;
}

} // namespace

const std::vector<graph>& enumerate_graphs(std::size_t n, std::size_t cap)
{
    if (n == 0)
        throw invalid_parameter("graph enumeration needs n >= 1");
    if (n > cap)
        throw resource_error("exhaustive enumeration capped at n <= " + std::to_string(cap) + " (requested n=" + std::to_string(n) + ")");

    static std::mutex mutex;
    static std::map<std::size_t, std::unique_ptr<const std::vector<graph>>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot)
        slot = std::make_unique<const std::vector<graph>>(generate(n));
    return *slot;
}

} // namespace spectree
