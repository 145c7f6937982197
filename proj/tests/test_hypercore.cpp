#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kneserlab/hypergraph.hpp"
#include "kneserlab/json_io.hpp"
#include "kneserlab/kneser.hpp"
#include "kneserlab/sweeps.hpp"

using namespace kneserlab;

namespace {

Hypergraph from_lists(int n, const std::vector<std::vector<int>>& edges) {
    std::vector<VertexSet> masks;
    for (const auto& e : edges) masks.push_back(set_from_elements(e));
    return Hypergraph(n, masks);
}

// exhaustive r-colorability over all r^n colorings, independent of the solver
bool oracle_r_colorable(const Hypergraph& h, int r) {
    int n = h.vertex_count();
    std::vector<int> color(n, 1);
    while (true) {
        bool proper = true;
        for (VertexSet e : h.edges()) {
            bool mono = true;
            int first = -1;
            for (int v : set_elements(e)) {
                if (first < 0) first = color[v - 1];
                if (color[v - 1] != first) { mono = false; break; }
            }
            if (mono) { proper = false; break; }
        }
        if (proper) return true;
        int i = 0;
        while (i < n && color[i] == r) color[i++] = 1;
        if (i == n) return false;
        ++color[i];
    }
}

}  // namespace

TEST_CASE("canonical set order refines cardinality") {
    CHECK(set_order_less(set_from_elements({1}), set_from_elements({2, 3})));
    CHECK(set_order_less(set_from_elements({3}), set_from_elements({1, 2})));
    CHECK(set_order_less(set_from_elements({1, 2}), set_from_elements({1, 3})));
    CHECK_FALSE(set_order_less(set_from_elements({1, 3}), set_from_elements({1, 3})));
    // total: any two distinct sets compare one way
    auto subsets = all_k_subsets(5, 2);
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = 0; j < subsets.size(); ++j) {
            if (i == j) continue;
            CHECK(set_order_less(subsets[i], subsets[j]) != set_order_less(subsets[j], subsets[i]));
        }
}

TEST_CASE("hypergraph construction validates input") {
    CHECK_THROWS_AS(from_lists(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(from_lists(3, {{}}), std::invalid_argument);
    CHECK_THROWS_AS(from_lists(3, {{1, 2}, {2, 1}}), std::invalid_argument);
    Hypergraph h = from_lists(3, {{1, 2, 3}, {2}, {1, 3}});
    // canonical order: sizes 1, 2, 3
    CHECK(h.edge(0) == set_from_elements({2}));
    CHECK(h.edge(1) == set_from_elements({1, 3}));
    CHECK(h.edge(2) == set_from_elements({1, 2, 3}));
    CHECK(h.uniformity() == std::nullopt);
    CHECK(complete_k_subsets(5, 2).uniformity() == 2);
}

TEST_CASE("induced subhypergraph matches definition") {
    Hypergraph k4 = complete_k_subsets(4, 2);
    SUBCASE("K_4^2 restricted to {1,2,3}") {
        InducedSubhypergraph sub = induced_sub(k4, set_from_elements({1, 2, 3}));
        CHECK(sub.sub.vertex_count() == 3);
        CHECK(sub.sub.edge_count() == 3);
        CHECK(sub.original_vertex == std::vector<int>{1, 2, 3});
    }
    SUBCASE("empty set") {
        InducedSubhypergraph sub = induced_sub(k4, 0);
        CHECK(sub.sub.vertex_count() == 0);
        CHECK(sub.sub.edge_count() == 0);
    }
    SUBCASE("K_5^2 restricted to {2,4}") {
        // independent check: 2-subsets of [5] inside {2,4}
        Hypergraph k5 = complete_k_subsets(5, 2);
        int expected = 0;
        for (VertexSet e : k5.edges())
            if ((e & ~set_from_elements({2, 4})) == 0) ++expected;
        CHECK(expected == 1);
        InducedSubhypergraph sub = induced_sub(k5, set_from_elements({2, 4}));
        CHECK(sub.sub.edge_count() == 1);
        CHECK(sub.original_vertex == std::vector<int>{2, 4});
        CHECK(sub.sub.edge(0) == set_from_elements({1, 2}));  // relabeled
    }
    SUBCASE("identity and monotonicity") {
        CHECK(induced_sub(k4, k4.vertex_set()).sub == k4);
        for (VertexSet s = 0; s <= k4.vertex_set(); ++s)
            for (VertexSet s2 = s; s2 <= k4.vertex_set(); ++s2) {
                if ((s & ~s2) != 0) continue;  // only s subset of s2
                CHECK(k4.induced_edge_count(s) <= k4.induced_edge_count(s2));
            }
    }
}

TEST_CASE("cross-partite subhypergraph") {
    Hypergraph k4 = complete_k_subsets(4, 2);
    SUBCASE("K_4^2 with parts {1,2} and {3,4}") {
        std::vector<VertexSet> parts = {set_from_elements({1, 2}), set_from_elements({3, 4})};
        Hypergraph cross = cross_partite_sub(k4, parts);
        // independent enumeration: 2-subsets meeting both parts once
        std::vector<VertexSet> expected;
        for (VertexSet e : k4.edges())
            if (set_size(e & parts[0]) == 1 && set_size(e & parts[1]) == 1) expected.push_back(e);
        CHECK(cross.edges() == expected);
        CHECK(cross.edge_count() == 4);
        for (VertexSet e : cross.edges())
            for (VertexSet p : parts) CHECK(set_size(e & p) == 1);
    }
    SUBCASE("empty part blocks all edges") {
        std::vector<VertexSet> parts = {set_from_elements({1, 2}), 0};
        CHECK(cross_partite_sub(k4, parts).edge_count() == 0);
    }
    SUBCASE("complete 3-uniform on [3] with singleton parts") {
        Hypergraph h = complete_k_subsets(3, 3);
        std::vector<VertexSet> parts = {vbit(1), vbit(2), vbit(3)};
        Hypergraph cross = cross_partite_sub(h, parts);
        CHECK(cross.edge_count() == 1);
    }
    SUBCASE("overlapping parts rejected") {
        std::vector<VertexSet> parts = {set_from_elements({1, 2}), set_from_elements({2, 3})};
        CHECK_THROWS_AS(cross_partite_sub(k4, parts), std::invalid_argument);
    }
}

TEST_CASE("proper coloring predicate") {
    Hypergraph k4 = complete_k_subsets(4, 2);
    CHECK_FALSE(is_proper(k4, Coloring{2, {1, 1, 2, 2}}));
    CHECK(is_proper(k4, Coloring{4, {1, 2, 3, 4}}));
    Hypergraph tri = from_lists(3, {{1, 2, 3}});
    CHECK(is_proper(tri, Coloring{2, {1, 1, 2}}));
    Hypergraph single = from_lists(2, {{1}});
    CHECK_FALSE(is_proper(single, Coloring{2, {1, 2}}));
}

TEST_CASE("r-colorability decision") {
    Hypergraph k4 = complete_k_subsets(4, 2);
    CHECK_FALSE(is_r_colorable(k4, 2));
    CHECK(is_r_colorable(k4, 4));
    CHECK(is_r_colorable(Hypergraph(3, {}), 1));
    CHECK(is_r_colorable(from_lists(3, {{1, 2, 3}}), 2));
    SUBCASE("agrees with exhaustive oracle") {
        for (std::uint64_t i = 0; i < 40; ++i) {
            Hypergraph h = random_hypergraph(5, 6, 17, i);
            for (int r = 1; r <= 3; ++r) CHECK(is_r_colorable(h, r) == oracle_r_colorable(h, r));
        }
    }
}

TEST_CASE("colorability defect") {
    CHECK(colorability_defect(complete_k_subsets(5, 2), 2) == 3);
    CHECK(colorability_defect(complete_k_subsets(6, 2), 3) == 3);
    CHECK(colorability_defect(Hypergraph(4, {}), 2) == 0);
    SUBCASE("closed form on complete k-subset hypergraphs") {
        for (int k = 1; k <= 3; ++k)
            for (int r = 2; r * k <= 9; ++r)
                for (int n = r * k; n <= 9; ++n)
                    CHECK(colorability_defect(complete_k_subsets(n, k), r) == n - r * (k - 1));
    }
    SUBCASE("zero defect iff r-colorable, nonincreasing in r") {
        for (std::uint64_t i = 0; i < 25; ++i) {
            Hypergraph h = random_hypergraph(5, 6, 99, i);
            int prev = -1;
            for (int r = 1; r <= 4; ++r) {
                int cd = colorability_defect(h, r);
                CHECK((cd == 0) == is_r_colorable(h, r));
                if (prev >= 0) CHECK(cd <= prev);
                prev = cd;
            }
        }
    }
}

TEST_CASE("json interchange round trip") {
    Hypergraph h = stable_subsets_hypergraph(6, 2);
    json j = hypergraph_to_json(h);
    Hypergraph back = hypergraph_from_json(j);
    CHECK(back == h);
    CHECK(back.canonical_hash() == h.canonical_hash());
    SUBCASE("rejects malformed input") {
        CHECK_THROWS(hypergraph_from_json(json{{"n", 3}, {"edges", {{1, 5}}}}));
        CHECK_THROWS(hypergraph_from_json(json{{"n", 3}, {"edges", {{1, 2}, {2, 1}}}}));
        CHECK_THROWS(hypergraph_from_json(json{{"n", 3}}));
    }
    SUBCASE("round trip is the identity on random hypergraphs") {
        for (std::uint64_t i = 0; i < 200; ++i) {
            Hypergraph r = random_hypergraph(1 + i % 8, 10, 2025, i);
            Hypergraph rt = hypergraph_from_json(hypergraph_to_json(r));
            CHECK(rt == r);
            CHECK(rt.canonical_hash() == r.canonical_hash());
        }
    }
}

TEST_CASE("canonical coloring enumeration") {
    // restricted growth strings of length 4 with at most 2 classes
    CHECK(count_canonical_colorings(4, 2) == 8);
    // Bell numbers when the class count is unconstrained
    CHECK(count_canonical_colorings(5, 5) == 52);
    std::uint64_t with_limit = count_canonical_colorings(6, 3);
    // S(6,1) + S(6,2) + S(6,3) = 1 + 31 + 90
    CHECK(with_limit == 122);
}
