#include "oracles.hpp"
#include "spectree/canonical.hpp"
#include "spectree/errors.hpp"
#include "spectree/trees.hpp"

#include <doctest.h>

#include <set>

using namespace spectree;

namespace {

std::set<std::string> pattern_codes(const std::vector<star_pattern>& patterns)
{
    std::set<std::string> out;
    for (const auto& p : patterns)
        out.insert(oracle::tree_code(pattern_to_graph(p)));
    return out;
}

} // namespace

TEST_CASE("pattern basics")
{
    star_pattern p({1, 2, 0, 2});
    CHECK(p.sizes() == std::vector<std::size_t>{2, 2, 1, 0});
    CHECK(p.order() == 10);
    CHECK(p.star_count() == 4);
    CHECK(p.nontrivial_count() == 3);
    CHECK(p.forest_edges() == 5);
    CHECK(p.forest_sizes() == std::vector<std::size_t>{2, 2, 1});
    CHECK(p.to_string() == "2,2,1,0");
    CHECK(star_pattern::parse("2, 2,1,0") == p);
    CHECK(star_pattern::parse("") == star_pattern{});
    CHECK_THROWS_AS(star_pattern::parse("2,,1"), parse_error);
    CHECK_THROWS_AS(star_pattern::parse("x"), parse_error);
}

TEST_CASE("pattern graphs")
{
    CHECK(isomorphic(pattern_to_graph(star_pattern({0, 0})), path_graph(3)));
    CHECK(isomorphic(pattern_to_graph(star_pattern({1, 1})), path_graph(5)));
    auto g = pattern_to_graph(star_pattern({2, 2, 1}));
    CHECK(g.order() == 9);
    CHECK(g.edge_count() == 8);
    CHECK(g.degree(0) == 3);
    CHECK(g.degree(1) == 3);
    CHECK(g.degree(2) == 3);
    CHECK(g.degree(3) == 2);
}

TEST_CASE("canonical roots")
{
    CHECK(canonicalize_pattern({1}) == star_pattern({0, 0}));
    CHECK(canonicalize_pattern({1, 1}) == star_pattern({1, 1}));
    // The chair is bicentral; its degree-3 centre becomes the root.
    CHECK(canonicalize_pattern({2, 0}) == star_pattern({1, 0, 0}));
    CHECK(canonicalize_pattern({}) == star_pattern{});

    for (std::size_t t = 1; t <= 12; ++t)
        for (const auto& p : enumerate_diam4_trees(t)) {
            CHECK(is_canonical(p));
            CHECK(canonicalize_pattern(p.sizes()) == canonicalize_pattern(canonicalize_pattern(p.sizes()).sizes()));
        }
}

TEST_CASE("enumeration matches the Prüfer oracle")
{
    CHECK(enumerate_diam4_trees(1).size() == 1);
    CHECK(enumerate_diam4_trees(3).size() == 1);
    CHECK(enumerate_diam4_trees(4).size() == 2);
    CHECK(enumerate_diam4_trees(5).size() == 3);
    for (std::size_t t = 1; t <= 9; ++t) {
        auto patterns = enumerate_diam4_trees(t);
        auto expected = oracle::prufer_tree_codes(t, 4);
        CHECK(patterns.size() == expected.size());
        CHECK(pattern_codes(patterns) == expected);
    }
}

TEST_CASE("level-sequence oracle agrees with Prüfer and with enumeration")
{
    for (std::size_t t = 1; t <= 8; ++t)
        CHECK(oracle::level_sequence_tree_codes(t, 4) == oracle::prufer_tree_codes(t, 4));
    for (std::size_t t = 10; t <= 12; ++t) {
        auto patterns = enumerate_diam4_trees(t);
        auto expected = oracle::level_sequence_tree_codes(t, 4);
        CHECK(patterns.size() == expected.size());
        CHECK(pattern_codes(patterns) == expected);
    }
}

TEST_CASE("classification")
{
    auto s22 = classify(star_pattern({1, 1, 1}));
    CHECK(s22.p == 3);
    CHECK(s22.p_prime == 3);
    CHECK(s22.forest_edges == 3);
    CHECK(s22.diameter == 4);
    CHECK(s22.name == named_tree::s22);

    auto t2 = classify(star_pattern({1, 1, 1, 0, 0}));
    CHECK(t2.p == 5);
    CHECK(t2.p_prime == 3);
    CHECK(t2.forest_edges == 3);
    CHECK(t2.name == named_tree::t2);

    auto star = classify(star_pattern(std::vector<std::size_t>(8, 0)));
    CHECK(star.p == 8);
    CHECK(star.p_prime == 0);
    CHECK(star.diameter == 2);
    CHECK_FALSE(star.name.has_value());

    CHECK(classify(star_pattern{}).diameter == 0);
    CHECK(classify(star_pattern({0})).diameter == 1);
    CHECK(classify(star_pattern({1, 0})).diameter == 3);

    for (std::size_t t = 1; t <= 13; ++t)
        for (const auto& p : enumerate_diam4_trees(t)) {
            auto c = classify(p);
            CHECK(c.p + c.forest_edges == t - 1);
            CHECK(c.p_prime <= c.p);
            CHECK(c.diameter <= 4);
            CHECK(c.diameter == oracle::tree_diameter(oracle::to_adjacency(pattern_to_graph(p))));
        }
}

TEST_CASE("named trees")
{
    auto t4 = classify(make_named_tree(named_tree::t4, 8));
    CHECK(t4.p == 8);
    CHECK(t4.p_prime == 8);
    CHECK(t4.forest_edges == 10);
    CHECK(t4.name == named_tree::t4);

    auto t3 = classify(make_named_tree(named_tree::t3, 3));
    CHECK(t3.p == 4);
    CHECK(t3.p_prime == 3);
    CHECK(t3.forest_edges == 4);

    auto s22 = make_named_tree(named_tree::s22, 2);
    CHECK(s22.order() == 7);
    auto sub = graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK(isomorphic(pattern_to_graph(s22), sub));

    for (auto name : {named_tree::s22, named_tree::t2, named_tree::t3, named_tree::t4, named_tree::t5}) {
        CHECK(parse_named_tree(to_string(name)) == name);
        CHECK_THROWS_AS(make_named_tree(name, min_k_for(name) - 1), invalid_parameter);
        for (std::size_t k = min_k_for(name); k <= 7; ++k) {
            auto p = make_named_tree(name, k);
            CHECK(p.order() == 2 * k + 3);
            CHECK(is_canonical(p));
            CHECK(classify(p).name == name);
        }
    }
    CHECK_THROWS_AS(parse_named_tree("T9"), invalid_parameter);
}

TEST_CASE("family sets partition the trees of order 2k+3")
{
    for (std::size_t k = 2; k <= 5; ++k) {
        auto all = family_set(k, family_kind::all);
        auto script = family_set(k, family_kind::t_script);
        auto star = family_set(k, family_kind::t_star);
        std::size_t top = 0, next = 0;
        std::set<named_tree> names;
        for (const auto& p : all) {
            CHECK(p.nontrivial_count() <= k + 1);
            if (p.nontrivial_count() == k + 1) {
                ++top;
                CHECK(p == make_named_tree(named_tree::s22, k));
            }
            if (p.nontrivial_count() == k) {
                ++next;
                auto c = classify(p);
                REQUIRE(c.name.has_value());
                names.insert(*c.name);
            }
        }
        CHECK(top == 1);
        CHECK(next == 4);
        CHECK(names == std::set<named_tree>{named_tree::t2, named_tree::t3, named_tree::t4, named_tree::t5});
        CHECK(script.size() + 1 == all.size());
        CHECK(star.size() + 5 == all.size());
        for (const auto& p : star)
            CHECK(p.nontrivial_count() <= k - 1);
    }
    CHECK_THROWS_AS(family_set(1, family_kind::all), invalid_parameter);
}
