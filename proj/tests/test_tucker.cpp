#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kneserlab/sweeps.hpp"
#include "kneserlab/tucker.hpp"

using namespace kneserlab;

namespace {

Coloring constant_coloring(int items, int colors, int value) {
    Coloring c;
    c.num_colors = colors;
    c.values.assign(items, value);
    return c;
}

}  // namespace

TEST_CASE("map encoding round trip") {
    std::vector<std::uint8_t> entries = {2, 0, 1, 3};
    std::uint64_t code = TuckerMap::code_of(3, entries);
    CHECK(TuckerMap::decode(3, 4, code) == entries);
    CHECK(is_prime(2));
    CHECK(is_prime(5));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(1));
}

TEST_CASE("minimal instance satisfies all three properties") {
    // n = 1, p = 2, m = 1, alpha = 0: lambda(X) = (sign of x_1, 1)
    TuckerMap map;
    map.n = 1;
    map.p = 2;
    map.m = 1;
    map.alpha = 0;
    map.table.assign(3, {0, 0});
    map.table[1] = {1, 1};
    map.table[2] = {2, 1};
    TuckerCheckReport rep = check_properties(map);
    CHECK(rep.equivariant);
    CHECK(rep.monotone_low);
    CHECK_FALSE(rep.chain.has_value());
    CHECK(conclusion_holds(map));  // 0 + 1*1 >= 1
}

TEST_CASE("conclusion arithmetic") {
    TuckerMap map;
    map.n = 5;
    map.p = 2;
    map.m = 3;
    map.alpha = 1;
    CHECK_FALSE(conclusion_holds(map));  // 1 + 2 < 5
    map.n = 4;
    map.p = 3;
    map.m = 4;
    map.alpha = 4;
    CHECK(conclusion_holds(map));  // 4 >= 4
}

TEST_CASE("equivariance violation is detected") {
    // constant lambda_1 cannot be equivariant for p = 2 on n = 2
    TuckerMap map;
    map.n = 2;
    map.p = 2;
    map.m = 2;
    map.alpha = 0;
    map.table.assign(9, {0, 0});
    for (std::uint64_t code = 1; code < 9; ++code) map.table[code] = {1, 1};
    TuckerCheckReport rep = check_properties(map);
    CHECK_FALSE(rep.equivariant);
}

TEST_CASE("popular-color map construction") {
    Hypergraph k4 = complete_k_subsets(4, 2);
    VertexOrdering id = VertexOrdering::identity(4);
    SUBCASE("total over every nonzero vector") {
        Coloring ones = constant_coloring(k4.edge_count(), 1, 1);
        TuckerMap map = build_popular_color_map(k4, id, ones, 2, 1, 4, 1);
        CHECK(map.alpha == 2);
        CHECK(map.m == 3);
        for (std::uint64_t code = 1; code < map.domain_size(); ++code) {
            CHECK(map.lambda1(code) >= 1);
            CHECK(map.lambda1(code) <= 2);
            CHECK(map.lambda2(code) >= 1);
            CHECK(map.lambda2(code) <= map.m);
        }
    }
    SUBCASE("properties hold and a chain exists when the conclusion fails") {
        Coloring ones = constant_coloring(k4.edge_count(), 1, 1);
        TuckerMap map = build_popular_color_map(k4, id, ones, 2, 1, 4, 1);
        TuckerCheckReport rep = check_properties(map);
        CHECK(rep.equivariant);
        CHECK(rep.monotone_low);
        CHECK_FALSE(conclusion_holds(map));  // 2 + 1 < 4
        REQUIRE(rep.chain.has_value());
        CHECK(rep.chain->codes.size() == 2);
    }
    SUBCASE("below the level alpha the map records the alternation") {
        Coloring ones = constant_coloring(k4.edge_count(), 1, 1);
        TuckerMap map = build_popular_color_map(k4, id, ones, 2, 1, 4, 1);
        std::vector<std::uint8_t> x = {1, 0, 0, 2};  // alt = 2 = alpha
        std::uint64_t code = TuckerMap::code_of(2, x);
        CHECK(map.lambda2(code) == 2);
        CHECK(map.lambda1(code) == 1);  // first nonzero symbol
    }
    SUBCASE("equivariance spot check on sampled vectors") {
        Hypergraph k5 = complete_k_subsets(5, 2);
        VertexOrdering id5 = VertexOrdering::identity(5);
        Coloring c = constant_coloring(k5.edge_count(), 2, 1);
        for (int i = 0; i < 5; ++i) c.values[i] = 2;
        TuckerMap map = build_popular_color_map(k5, id5, c, 2, 1, 5, 1);
        TuckerCheckReport rep = check_properties(map);
        CHECK(rep.equivariant);
        CHECK(rep.monotone_low);
    }
    SUBCASE("rejects an oversized palette") {
        Coloring c = constant_coloring(k4.edge_count(), 2, 1);
        // C = 2 violates C(p-1) < n - alpha = 2
        CHECK_THROWS_AS(build_popular_color_map(k4, id, c, 2, 1, 4, 1), std::invalid_argument);
    }
}

TEST_CASE("tuple extraction from a violating chain") {
    SUBCASE("every 2-coloring of the Petersen vertex set yields a witness") {
        Hypergraph k5 = complete_k_subsets(5, 2);
        VertexOrdering id = VertexOrdering::identity(5);
        PopularMapScaffold scaffold(k5, id, 2, 1);
        CHECK(scaffold.alpha() == 2);
        // all 2^10 colorings of the ten 2-subsets
        for (std::uint32_t bits = 0; bits < (1u << 10); ++bits) {
            Coloring c;
            c.num_colors = 2;
            for (int i = 0; i < 10; ++i) c.values.push_back(1 + ((bits >> i) & 1));
            TuckerMap map = scaffold.instantiate(c, 5);
            auto chain = find_violating_chain(map);
            REQUIRE(chain.has_value());
            TupleWitness w = extract_tuple(map, k5, id, c, *chain, 1, 1);
            CHECK(w.r == 2);
            CHECK((w.parts[0] & w.parts[1]) == 0);
        }
    }
    SUBCASE("single color on K_4^2 gives two disjoint pairs") {
        Hypergraph k4 = complete_k_subsets(4, 2);
        VertexOrdering id = VertexOrdering::identity(4);
        Coloring ones = constant_coloring(k4.edge_count(), 1, 1);
        TupleWitness w = solve_tuple(k4, id, ones, 2, 1, 4, 1);
        CHECK(w.color == 1);
        CHECK(set_size(w.part_edges[0][0]) == 2);
        CHECK((w.part_edges[0][0] & w.part_edges[1][0]) == 0);
    }
    SUBCASE("chains with repeated lambda_1 are rejected") {
        Hypergraph k4 = complete_k_subsets(4, 2);
        VertexOrdering id = VertexOrdering::identity(4);
        Coloring ones = constant_coloring(k4.edge_count(), 1, 1);
        TuckerMap map = build_popular_color_map(k4, id, ones, 2, 1, 4, 1);
        auto chain = find_violating_chain(map);
        REQUIRE(chain.has_value());
        ZpChain bogus = *chain;
        bogus.codes[0] = bogus.codes[1];  // same vector twice: lambda_1 repeats
        CHECK_THROWS_AS(extract_tuple(map, k4, id, ones, bogus, 1, 1), VerificationFailure);
    }
}

TEST_CASE("witness validation catches corruption") {
    Hypergraph k4 = complete_k_subsets(4, 2);
    VertexOrdering id = VertexOrdering::identity(4);
    Coloring ones = constant_coloring(k4.edge_count(), 1, 1);
    TupleWitness w = solve_tuple(k4, id, ones, 2, 1, 4, 1);
    SUBCASE("overlapping parts") {
        TupleWitness bad = w;
        bad.parts[1] = bad.parts[0];
        CHECK_THROWS_AS(validate_witness(k4, ones, bad), VerificationFailure);
    }
    SUBCASE("wrong color") {
        TupleWitness bad = w;
        bad.color = 2;
        CHECK_THROWS_AS(validate_witness(k4, ones, bad), VerificationFailure);
    }
    SUBCASE("edge outside its part") {
        TupleWitness bad = w;
        bad.part_edges[0][0] = bad.part_edges[1][0];
        CHECK_THROWS_AS(validate_witness(k4, ones, bad), VerificationFailure);
    }
}

TEST_CASE("composite construction") {
    SUBCASE("K_8^2 with one color yields four disjoint same-colored pairs") {
        Hypergraph k8 = complete_k_subsets(8, 2);
        VertexOrdering id = VertexOrdering::identity(8);
        Coloring ones = constant_coloring(k8.edge_count(), 1, 1);
        TupleWitness w = reduce_composite(k8, id, ones, 2, 2, 1, 8, 1);
        CHECK(w.r == 4);
        VertexSet seen = 0;
        for (int j = 0; j < 4; ++j) {
            CHECK((w.parts[j] & seen) == 0);
            seen |= w.parts[j];
            CHECK(set_size(w.part_edges[j][0]) == 2);
            CHECK((w.part_edges[j][0] & ~w.parts[j]) == 0);
        }
    }
    SUBCASE("rejects r1 < 2") {
        Hypergraph k8 = complete_k_subsets(8, 2);
        VertexOrdering id = VertexOrdering::identity(8);
        Coloring ones = constant_coloring(k8.edge_count(), 1, 1);
        CHECK_THROWS_AS(reduce_composite(k8, id, ones, 1, 4, 1, 8, 1), std::invalid_argument);
    }
    SUBCASE("agreement with direct search on singleton-edge instances") {
        Hypergraph h = complete_k_subsets(8, 1);
        LemmaSweepOptions opts;
        opts.threads = 2;
        SweepReport rep = sweep_reduction_agreement(h, 4, 8, opts);
        CHECK(rep.failures == 0);
        CHECK(rep.instances > 0);
    }
}

TEST_CASE("two-signed map machinery") {
    Hypergraph sg = stable_subsets_hypergraph(6, 2);
    VertexOrdering id = VertexOrdering::identity(6);
    SUBCASE("single color short-circuits to an immediate witness") {
        Coloring ones = constant_coloring(sg.edge_count(), 1, 1);
        auto built = build_signed_popular_map(sg, id, ones, 1, 4, 1);
        CHECK(std::holds_alternative<TupleWitness>(built));
    }
    SUBCASE("every 3-coloring yields a disjoint same-colored stable pair") {
        std::uint64_t checked = 0;
        enumerate_canonical_colorings(sg.edge_count(), 3, [&](const Coloring& c) {
            TupleWitness w = solve_pair_signed(sg, id, c, 1, 4, 1);
            validate_witness(sg, c, w);
            ++checked;
            return true;
        });
        CHECK(checked == count_canonical_colorings(sg.edge_count(), 3));
    }
    SUBCASE("level offset differs from the r-tuple map by one") {
        // m = salt + C - 1, one below the popular-color construction
        Coloring c;
        c.num_colors = 3;
        c.values = {1, 2, 3, 1, 2, 3, 1, 2, 3};
        auto built = build_signed_popular_map(sg, id, c, 1, 4, 1);
        if (std::holds_alternative<TuckerMap>(built)) {
            const TuckerMap& map = std::get<TuckerMap>(built);
            CHECK(map.m == map.alpha + c.num_colors - 1);
        }
    }
}

TEST_CASE("lemma sweeps on the acceptance instances stay clean in miniature") {
    SUBCASE("tuple lemma on K_4^2") {
        Hypergraph k4 = complete_k_subsets(4, 2);
        LemmaSweepOptions opts;
        opts.threads = 2;
        opts.check_maps = true;
        LemmaSweepReport rep =
            sweep_tuple_lemma(k4, VertexOrdering::identity(4), 2, 1, 4, 1, opts);
        CHECK(rep.failures == 0);
        CHECK(rep.map_failures == 0);
        CHECK(rep.colorings == 1);  // only C = 1 admissible
        CHECK(rep.witnesses == 1);
    }
    SUBCASE("k-subset lemma at (5,2,2,0)") {
        LemmaSweepOptions opts;
        opts.threads = 2;
        LemmaSweepReport rep = sweep_kneser_lemma(5, 2, 2, 0, opts);
        CHECK(rep.failures == 0);
        CHECK(rep.colorings > 0);
        CHECK(rep.witnesses == rep.colorings);
    }
    SUBCASE("stable lemma at (6,2,0)") {
        LemmaSweepOptions opts;
        opts.threads = 2;
        LemmaSweepReport rep = sweep_schrijver_lemma(6, 2, 0, opts);
        CHECK(rep.failures == 0);
        CHECK(rep.witnesses == rep.colorings);
    }
    SUBCASE("no admissible palette means nothing is required") {
        // d = 1 leaves no C with C < d: the sweep reports zero colorings
        Hypergraph k4 = complete_k_subsets(4, 2);
        LemmaSweepOptions opts;
        LemmaSweepReport rep =
            sweep_tuple_lemma(k4, VertexOrdering::identity(4), 2, 1, 1, 1, opts);
        CHECK(rep.colorings == 0);
        CHECK(rep.failures == 0);
    }
}
