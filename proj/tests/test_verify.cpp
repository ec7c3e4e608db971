#include "parpart/verify.hpp"
#include "parpart/clique_decomp.hpp"
#include "parpart/synth.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace parpart;
using namespace testutil;

namespace {

const ConditionReport& by_id(const std::vector<ConditionReport>& reports, const std::string& id) {
    for (const auto& r : reports)
        if (r.id == id) return r;
    throw std::logic_error("no condition " + id);
}

} // namespace

TEST_CASE("conditions are evaluated exactly") {
    SUBCASE("m=243, l=2") {
        auto reports = check_conditions(243, 2, 1, 203, 2, 2);
        CHECK(by_id(reports, "2.1").lhs == Rational(405, 2)); // 202.5
        CHECK(by_id(reports, "2.1").holds);
        CHECK(by_id(reports, "2.2").rhs == Rational(4)); // 240/60
        CHECK(by_id(reports, "2.2").holds);              // 4 <= 4, boundary
    }
    SUBCASE("m=150, l=3, q=76") {
        auto reports = check_conditions(150, 3, 76, 148, 1, 1);
        CHECK(by_id(reports, "1.1").lhs == Rational(737, 5)); // 147.4
        CHECK(by_id(reports, "1.1").holds);
        CHECK(by_id(reports, "1.2").rhs == Rational(1)); // 75/75
        CHECK(by_id(reports, "1.2").holds);
    }
    SUBCASE("q=1 forces an empty E2 or E3") {
        auto reports = check_conditions(100, 2, 1, 99, 1, 1);
        CHECK(by_id(reports, "1.2").rhs == Rational(0));
        CHECK_FALSE(by_id(reports, "1.2").holds);
    }
    SUBCASE("a +-1 perturbation of delta1 flips the verdict") {
        CHECK(by_id(check_conditions(243, 2, 1, 203, 2, 2), "2.1").holds);
        CHECK_FALSE(by_id(check_conditions(243, 2, 1, 202, 2, 2), "2.1").holds);
        CHECK(by_id(check_conditions(150, 3, 76, 148, 1, 1), "1.1").holds);
        CHECK_FALSE(by_id(check_conditions(150, 3, 76, 147, 1, 1), "1.1").holds);
    }
}

TEST_CASE("subset-parameter hypotheses") {
    auto reports = check_subset_conditions(24, 2, 2, Rational(1, 2), Rational(1, 2));
    CHECK(by_id(reports, "k^2*l<=n/3").holds); // 8 <= 8
    CHECK(by_id(reports, "alpha+beta>=1").holds);
    CHECK_FALSE(by_id(check_subset_conditions(23, 2, 2, Rational(1, 2), Rational(1, 2)),
                      "k^2*l<=n/3")
                    .holds);
    CHECK(by_id(reports, "alpha+beta>=(k+2)/k").relation == ">=");
    CHECK_THROWS_AS(require_conditions(reports), ConditionUnmet); // (k+2)/k = 2 > 1
}

TEST_CASE("decomposition verification catches tampering") {
    Graph km = complete_graph(8);
    auto family = initial_decomposition(8, 2);
    CHECK(verify_decomposition(km, family, 2).empty());

    auto overlapping = family;
    overlapping.blocks[1] = overlapping.blocks[0];
    CHECK_FALSE(verify_decomposition(km, overlapping, 2).empty());

    Graph broken = km;
    broken.remove_edge(0, 1);
    CHECK_FALSE(verify_decomposition(broken, family, 2).empty());

    auto short_family = family;
    short_family.blocks.pop_back();
    CHECK_FALSE(verify_decomposition(km, short_family, 2).empty());
}

TEST_CASE("ham power verification") {
    Graph km = complete_graph(10);
    CHECK(verify_ham_power(km, CyclicOrder::identity(10), 3).empty());
    Graph missing = km;
    missing.remove_edge(3, 4);
    CHECK_FALSE(verify_ham_power(missing, CyclicOrder::identity(10), 3).empty());
}

TEST_CASE("theorem output verification catches violations") {
    ParpartitionFamily family;
    family.n = 9;
    family.k = 3;
    family.l = 2;
    family.alpha = Rational(1, 2);
    family.beta = Rational(1, 2);
    family.parpartitions = {Parpartition{{{0, 1, 2}, {3, 4, 5}}},
                            Parpartition{{{6, 7, 8}, {0, 1, 3}}}};
    SUBCASE("clean family passes") {
        family.parpartitions[1] = Parpartition{{{6, 7, 8}, {0, 3, 6}}};
        // second parpartition reuses 6: fix to stay disjoint within itself
        family.parpartitions[1] = Parpartition{{{6, 7, 8}, {0, 3, 5}}};
        // overlaps with P1 stay at <= 1 element per block pair
        CHECK(verify_parpartition_family(family).empty());
    }
    SUBCASE("repeated subset is property-1 violation") {
        family.parpartitions.push_back(Parpartition{{{0, 1, 2}, {6, 7, 8}}});
        bool found = false;
        for (const auto& v : verify_parpartition_family(family))
            if (v.what.find("repeated") != std::string::npos) found = true;
        CHECK(found);
    }
    SUBCASE("duplicated parpartition is self-close") {
        family.parpartitions = {family.parpartitions[0], family.parpartitions[0]};
        bool found = false;
        for (const auto& v : verify_parpartition_family(family))
            if (v.what.find("close") != std::string::npos) found = true;
        CHECK(found);
    }
}

TEST_CASE("subset order verification") {
    const Threshold half{Rational(1, 2)};
    SUBCASE("overlap inside a window is reported") {
        std::vector<std::vector<int>> order = {{0, 1}, {1, 2}, {3, 4}};
        CHECK_FALSE(verify_subset_order(order, 2, half, half).empty());
    }
    SUBCASE("clean short cycle passes") {
        std::vector<std::vector<int>> order = {{0, 1}, {2, 3}, {4, 5}, {0, 2}, {1, 4}, {3, 5}};
        CHECK(verify_subset_order(order, 2, half, half).empty());
    }
}

TEST_CASE("candidate audit on complete graphs") {
    Graph km = complete_graph(20);
    auto family = initial_decomposition(20, 2);
    auto audit = audit_swap_candidates(km, family, 50, 7);
    CHECK(audit.pass);
    CHECK(audit.min_count == 18); // m - l, every other assigned vertex
}

TEST_CASE("segment audit on complete graphs") {
    Graph km = complete_graph(30);
    auto audit = audit_spanning_segments(km, CyclicOrder::identity(30), 3, 30 - 9, 25, 7);
    CHECK(audit.pass);
    CHECK(audit.min_count == 21); // m - (4l-3)
}

TEST_CASE("brute force oracle") {
    SUBCASE("perfect matching in K6") {
        TripleGraphSystem sys(complete_graph(6), Graph(6), Graph(6));
        auto result = brute_force_search(sys, 2, 3);
        CHECK(result.exists);
        CHECK(result.witness.size() == 3);
    }
    SUBCASE("no triangle in a 6-cycle") {
        Graph cycle(6);
        for (int i = 0; i < 6; ++i) cycle.add_edge(i, (i + 1) % 6);
        TripleGraphSystem sys(cycle, Graph(6), Graph(6));
        CHECK_FALSE(brute_force_search(sys, 3, 2).exists);
    }
    SUBCASE("bag constraints restrict the search") {
        // K4 with E2={(0,2)}, E3={(1,3)}: the blocks {0,1},{2,3} bag, but the
        // alternative pairing {0,2},{1,3} does not
        Graph g2(4), g3(4);
        g2.add_edge(0, 2);
        g3.add_edge(1, 3);
        TripleGraphSystem sys(complete_graph(4), g2, g3);
        auto result = brute_force_search(sys, 2, 2);
        REQUIRE(result.exists);
        CHECK(verify_bag_free_family(result.witness, sys.g2(), sys.g3()).empty());
    }
    SUBCASE("cap is enforced") {
        TripleGraphSystem sys(complete_graph(21), Graph(21), Graph(21));
        CHECK_THROWS_AS(brute_force_search(sys, 2, 10), std::domain_error);
    }
}

TEST_CASE("repair success implies oracle existence on random instances") {
    SplitMix64 rng(55);
    for (int round = 0; round < 25; ++round) {
        const int m = 8 + 2 * static_cast<int>(rng.next_below(4)); // 8..14
        Graph g1 = gen_dense(m, (5 * m + 5) / 6, rng.next());
        TripleGraphSystem sys(g1, Graph(m), Graph(m));
        auto family = repair_decomposition(sys.g1(), initial_decomposition(m, 2));
        CHECK(verify_decomposition(sys.g1(), family, 2).empty());
        CHECK(brute_force_search(sys, 2, m / 2).exists);
    }
}
