#pragma once

#include "spectree/graph.hpp"
#include "spectree/trees.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spectree {

/// Star forest K_{1,m_1} ∪ ... ∪ K_{1,m_t} with m_1 >= ... >= m_t >= 1.
class star_forest_spec {
public:
    /// Sorts nonincreasingly; throws invalid_parameter if empty or a size is 0.
    explicit star_forest_spec(std::vector<std::size_t> sizes);

    const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
    std::size_t components() const noexcept { return sizes_.size(); }
    /// Σ (m_i + 1).
    std::size_t order() const noexcept;

    std::string to_string() const;
    static star_forest_spec parse(std::string_view text);

private:
    std::vector<std::size_t> sizes_;
};

struct turan_result {
    std::size_t m = 0;
    std::int64_t value = 0;
    /// Maximising index i (1-based, smallest on ties); 0 when m < order(F).
    std::size_t arg_i = 0;
    std::optional<graph> construction;
    /// True only for values certified by exhaustive search.
    bool exact = false;
    /// m < order(F): every graph on m vertices is F-free, value = C(m, 2).
    bool trivial_regime = false;
};

/// max over 1 <= i <= t of (i-1)(m-i+1) + C(i-1,2) + floor((m_i - 1)(m-i+1)/2).
turan_result star_forest_turan(std::size_t m, const star_forest_spec& f);

/// K_{i-1} joined to a graph on m-i+1 vertices of maximum degree m_i - 1 with
/// floor((m_i-1)(m-i+1)/2) edges, for the maximising i. The inner graph is a
/// circulant; when both the degree and the vertex count are odd one vertex
/// has degree m_i - 2.
graph extremal_construction(std::size_t m, const star_forest_spec& f);

/// Exact ex(m, F) by scanning the non-isomorphic graphs of order m from the
/// densest edge level down. Throws resource_error when m > cap.
turan_result brute_force_turan(std::size_t m, const star_forest_spec& f, std::size_t cap = 8);

struct erdos_sos_report {
    /// e(G) > (t-2)|V(G)|/2.
    bool applicable = false;
    /// Diameter-≤4 trees of order t that G does not contain.
    std::vector<star_pattern> missing;
};

/// Throws invalid_parameter for t < 2.
erdos_sos_report erdos_sos_diam4_check(const graph& g, std::size_t t);

} // namespace spectree
