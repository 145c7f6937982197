#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kneserlab/chromatic.hpp"
#include "kneserlab/sweeps.hpp"

using namespace kneserlab;

namespace {

ChiResult chi_of_power(int n, int k, int r) {
    KneserPower kp = kneser_power(complete_k_subsets(n, k), r);
    ChiOptions opts;
    opts.max_vertices = 128;
    opts.budget_ms = 120'000;
    return chromatic_number(kp.power, opts);
}

}  // namespace

TEST_CASE("chromatic number basics") {
    SUBCASE("Petersen graph needs three colors") { CHECK(chi_of_power(5, 2, 2).value() == 3); }
    SUBCASE("Schrijver graph SG_{5,2} is an odd cycle") {
        KneserPower kp = kneser_power(stable_subsets_hypergraph(5, 2), 2);
        CHECK(chromatic_number(kp.power).value() == 3);
    }
    SUBCASE("SG_{6,2}") {
        KneserPower kp = kneser_power(stable_subsets_hypergraph(6, 2), 2);
        CHECK(chromatic_number(kp.power).value() == 4);
    }
    SUBCASE("three-uniform power of K_7^2") { CHECK(chi_of_power(7, 2, 3).value() == 2); }
    SUBCASE("edgeless and degenerate cases") {
        PowerHypergraph g;
        g.num_vertices = 4;
        CHECK(chromatic_number(g).value() == 1);
        g.num_vertices = 0;
        CHECK(chromatic_number(g).value() == 0);
        g.num_vertices = 2;
        g.edges = {{1}};
        ChiResult res = chromatic_number(g);
        CHECK(res.infeasible);
        CHECK_THROWS_AS(res.value(), std::logic_error);
    }
    SUBCASE("vertex cap enforced") {
        KneserPower kp = kneser_power(complete_k_subsets(9, 3), 2);
        ChiOptions opts;  // default max_vertices = 64 < 84
        CHECK_THROWS_AS(chromatic_number(kp.power, opts), CapExceeded);
    }
    SUBCASE("agrees with exhaustive counting on small instances") {
        for (std::uint64_t i = 0; i < 30; ++i) {
            Hypergraph h = random_hypergraph(6, 8, 71, i);
            ChiResult res = chromatic_number(h);
            bool has_singleton = false;
            for (VertexSet e : h.edges())
                if (set_size(e) == 1) has_singleton = true;
            if (has_singleton) {
                CHECK(res.infeasible);
                continue;
            }
            REQUIRE(res.exact);
            int chi = res.value();
            CHECK(is_r_colorable(h, chi));
            if (chi > 1) CHECK_FALSE(is_r_colorable(h, chi - 1));
        }
    }
}

TEST_CASE("closed formula for Kneser powers") {
    CHECK(afl_formula(5, 2, 2) == 3);
    CHECK(afl_formula(9, 2, 3) == 3);
    CHECK(afl_formula(4, 2, 2) == 2);
    CHECK(chi_of_power(4, 2, 2).value() == 2);
    CHECK_THROWS_AS(afl_formula(5, 2, 3), std::invalid_argument);
    SUBCASE("matches the solver on a spot sample") {
        CHECK(chi_of_power(6, 2, 2).value() == afl_formula(6, 2, 2));
        CHECK(chi_of_power(7, 3, 2).value() == afl_formula(7, 3, 2));
        CHECK(chi_of_power(8, 2, 3).value() == afl_formula(8, 2, 3));
    }
}

TEST_CASE("lower bound reports") {
    Hypergraph k5 = complete_k_subsets(5, 2);
    SUBCASE("colorability-defect bound") {
        BoundReport rep = dolnikov_kriz_bound(k5, 2);
        CHECK(rep.value == 3);
        CHECK(rep.raw == 3);
        BoundReport rep3 = dolnikov_kriz_bound(complete_k_subsets(6, 2), 3);
        CHECK(rep3.value == 2);
        BoundReport edgeless = dolnikov_kriz_bound(Hypergraph(4, {}), 2);
        CHECK(edgeless.value == 0);
    }
    SUBCASE("alternation bound") {
        BoundReport rep = alt_bound(k5, 2, SigmaMode::exact);
        CHECK(rep.value == 3);
        CHECK(rep.exact);
        BoundReport k8 = alt_bound(complete_k_subsets(8, 2), 2, SigmaMode::heuristic, {}, 7);
        CHECK(k8.value <= 6);  // heuristic value is an upper bound on alt, bound stays valid
        CHECK(k8.value >= 1);
        BoundReport edgeless = alt_bound(Hypergraph(4, {}), 2, SigmaMode::exact);
        CHECK(edgeless.value == 0);
    }
    SUBCASE("two-signed bound on stable sets equals the chromatic number") {
        BoundReport rep = salt_bound(stable_subsets_hypergraph(6, 2), SigmaMode::exact);
        CHECK(rep.value == 4);
        BoundReport rep7 = salt_bound(stable_subsets_hypergraph(7, 2), SigmaMode::exact);
        CHECK(rep7.value == 5);
        CHECK(salt_bound(Hypergraph(3, {}), SigmaMode::exact).value == 1);
    }
    SUBCASE("bounds never exceed the chromatic number") {
        for (std::uint64_t i = 0; i < 20; ++i) {
            Hypergraph h = random_hypergraph(5, 5, 83, i);
            for (int r = 2; r <= 3; ++r) {
                KneserPower kp = kneser_power(h, r);
                int chi = chromatic_number(kp.power).value();
                if (kp.power.num_vertices > 0) {
                    CHECK(chi >= dolnikov_kriz_bound(h, r).value);
                    CHECK(chi >= alt_bound(h, r, SigmaMode::exact).value);
                }
            }
        }
    }
}

TEST_CASE("block-free coloring floor") {
    Hypergraph k8 = complete_k_subsets(8, 2);
    SUBCASE("reduces to the alternation bound at t = q = 1") {
        VertexOrdering id = VertexOrdering::identity(8);
        BoundReport free1 = ktt_free_bound(k8, 2, id, 1, 1, 8);
        BoundReport plain = alt_bound(k8, 2, SigmaMode::exact);
        // identity ordering achieves the exact minimum here
        CHECK(free1.value == plain.value);
    }
    SUBCASE("t = 2 recipe on K_8^2") {
        // smallest l with C(2+l,2) >= (d-1)(t-1)+1 where d = ceil((8-2(1+l))/1):
        // l = 2 gives q = 6, d = 2, and the bound collapses to d = 2
        VertexOrdering id = VertexOrdering::identity(8);
        int q = 6, d = 2, t = 2;
        REQUIRE(q >= (d - 1) * (t - 1) + 1);
        BoundReport rep = ktt_free_bound(k8, 2, id, q, t, d);
        CHECK(rep.value == 2);
    }
    SUBCASE("rejects q below the bracket") {
        VertexOrdering id = VertexOrdering::identity(8);
        CHECK_THROWS_AS(ktt_free_bound(k8, 2, id, 1, 2, 3), std::invalid_argument);
    }
}

TEST_CASE("exact block-free chromatic value") {
    KneserPower petersen = kneser_power(complete_k_subsets(5, 2), 2);
    SUBCASE("t = 1 equals the chromatic number") {
        ChiResult free1 = ktt_free_chromatic_exact(petersen, 1);
        CHECK(free1.value() == chromatic_number(petersen.power).value());
    }
    SUBCASE("t = 2 needs one color: the Petersen graph has no 2x2 block") {
        CHECK(ktt_free_chromatic_exact(petersen, 2).value() == 1);
    }
    SUBCASE("K_6^2 power: value decreases in t") {
        KneserPower kp = kneser_power(complete_k_subsets(6, 2), 2);
        KttChiOptions opts;
        opts.max_vertices = 15;
        opts.budget_ms = 120'000;
        ChiResult t1 = ktt_free_chromatic_exact(kp, 1, opts);
        ChiResult t2 = ktt_free_chromatic_exact(kp, 2, opts);
        ChiResult t3 = ktt_free_chromatic_exact(kp, 3, opts);
        CHECK(t1.value() == 4);  // the chromatic number of the power
        CHECK(t2.value() <= t1.value());
        CHECK(t3.value() <= t2.value());
        CHECK(t3.value() >= 1);
        // floor with matching parameters: q = 3, d = 2, t = 2 is admissible
        VertexOrdering id = VertexOrdering::identity(6);
        BoundReport floor2 = ktt_free_bound(kp.base, 2, id, 3, 2, 2);
        CHECK(t2.value() >= floor2.raw);
    }
    SUBCASE("vertex cap enforced") {
        KneserPower kp = kneser_power(complete_k_subsets(6, 2), 2);
        KttChiOptions opts;  // default cap 12 < 15
        CHECK_THROWS_AS(ktt_free_chromatic_exact(kp, 1, opts), CapExceeded);
    }
}
