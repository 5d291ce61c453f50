#pragma once

#include "spectree/graph.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spectree {

/// A rooted tree of radius at most two: a root with p stars K_{1,m_i}
/// hanging from it (m_i = 0 is a single vertex attached to the root).
///
/// sizes are kept nonincreasing. An empty size list is the one-vertex tree.
class star_pattern {
public:
    star_pattern() = default;
    /// Sorts `sizes` nonincreasingly; does not re-root.
    explicit star_pattern(std::vector<std::size_t> sizes);

    const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }

    std::size_t order() const noexcept;
    /// p: number of stars (components after deleting the root).
    std::size_t star_count() const noexcept { return sizes_.size(); }
    /// p': number of nontrivial stars.
    std::size_t nontrivial_count() const noexcept;
    /// e(F_T) = Σ m_i.
    std::size_t forest_edges() const noexcept;
    /// Sizes of the nontrivial stars, nonincreasing.
    std::vector<std::size_t> forest_sizes() const;

    /// Comma-separated sizes, e.g. "2,2,1,1,0". The one-vertex tree is "".
    std::string to_string() const;
    static star_pattern parse(std::string_view text);

    friend auto operator<=>(const star_pattern&, const star_pattern&) = default;
    friend bool operator==(const star_pattern&, const star_pattern&) = default;

private:
    std::vector<std::size_t> sizes_;
};

enum class named_tree { s22, t2, t3, t4, t5 };

std::string_view to_string(named_tree name);
named_tree parse_named_tree(std::string_view text);

struct tree_classification {
    std::size_t p = 0;
    std::size_t p_prime = 0;
    std::size_t forest_edges = 0;
    std::size_t diameter = 0;
    std::optional<named_tree> name;
};

/// Root = vertex 0, star centres 1..p in pattern order, then the leaves of
/// each star in order.
graph pattern_to_graph(const star_pattern& pattern);

/// Re-roots the tree described by `sizes` at its centre. For two adjacent
/// centres the one whose deletion leaves more components wins; on a tie the
/// lexicographically larger size vector is kept.
star_pattern canonicalize_pattern(std::vector<std::size_t> sizes);

bool is_canonical(const star_pattern& pattern);

/// One canonical pattern per isomorphism class of trees of order t with
/// diameter at most four, in increasing pattern order.
std::vector<star_pattern> enumerate_diam4_trees(std::size_t t);

tree_classification classify(const star_pattern& pattern);

/// S_{2,...,2}: {1^{k+1}}; T2: {1^k,0,0}; T3: {2,1^{k-1},0}; T4: {2,2,1^{k-2}};
/// T5: {3,1^{k-1}}. All have order 2k+3.
star_pattern make_named_tree(named_tree name, std::size_t k);
std::size_t min_k_for(named_tree name);

enum class family_kind { all, t_script, t_star };

/// all: every diameter-≤4 tree of order 2k+3; t_script: all but S_{2,...,2};
/// t_star: the members with p' ≤ k-1.
std::vector<star_pattern> family_set(std::size_t k, family_kind which);

} // namespace spectree
