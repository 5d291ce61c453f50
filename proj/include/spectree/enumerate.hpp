#pragma once

#include "spectree/graph.hpp"

#include <vector>

namespace spectree {

/// One representative (in canonical labelling) of every isomorphism class of
/// graphs on n vertices, ordered by edge count and then by certificate.
///
/// Levels up to half of C(n,2) edges are grown by adding one edge at a time
/// and discarding duplicates by certificate; denser levels are complements.
/// Results are cached per n and shared between threads.
/// Throws resource_error when n > cap and invalid_parameter when n == 0.
const std::vector<graph>& enumerate_graphs(std::size_t n, std::size_t cap = 8);

} // namespace spectree
