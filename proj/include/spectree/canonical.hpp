#pragma once

#include "spectree/graph.hpp"

#include <cstdint>
#include <vector>

namespace spectree {

/// Canonical relabelling of a graph.
///
/// Two graphs are isomorphic iff their certificates are equal. The
/// certificate is the adjacency bit matrix of `canonical` (row-major).
struct canonical_labeling {
    graph canonical;
    /// labeling[v] = position of v in the canonical graph.
    std::vector<vertex> labeling;
    std::vector<std::uint64_t> certificate;
};

/// Individualisation-refinement search: colour refinement to an equitable
/// ordered partition, then branching on the first non-singleton cell. Twins
/// in the target cell are explored once since swapping them is an automorphism
/// fixing the current node.
canonical_labeling canonical_form(const graph& g);

std::vector<std::uint64_t> certificate(const graph& g);

bool isomorphic(const graph& a, const graph& b);

/// Exact degree-sequence test for G ≅ split_graph(n, k): a graph has k
/// universal vertices and n-k vertices of degree k exactly when it is that join.
bool is_isomorphic_to_split(const graph& g, std::size_t k);
/// Same for split_plus_graph(n, k).
bool is_isomorphic_to_split_plus(const graph& g, std::size_t k);

} // namespace spectree
