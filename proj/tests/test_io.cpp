#include "parpart/io.hpp"
#include "parpart/subsets.hpp"
#include "parpart/synth.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace parpart;
using namespace testutil;

TEST_CASE("system files round-trip and stay canonical") {
    TripleGraphSystem sys = make_synthetic_system(30, 25, 2, 2, 5);
    SystemFile file{std::move(sys), {{"seed", 5}, {"params", {{"m", 30}}}}};
    const auto j = system_to_json(file);
    const std::string text = canonical_dump(j);
    CHECK(text.back() == '\n');
    SystemFile back = system_from_json(nlohmann::json::parse(text));
    CHECK(canonical_dump(system_to_json(back)) == text);
    CHECK(back.sys.g1().edge_list() == file.sys.g1().edge_list());
    CHECK_FALSE(back.subset_provenance().has_value());
}

TEST_CASE("subset provenance is recognized") {
    KSubsetUniverse u(6, 2);
    const Threshold half{Rational(1, 2)};
    SystemFile file{build_triple_system(u, half, half),
                    {{"n", 6}, {"k", 2}, {"alpha", "1/2"}, {"beta", "1/2"}}};
    auto prov = system_from_json(system_to_json(file)).subset_provenance();
    REQUIRE(prov.has_value());
    CHECK(prov->n == 6);
    CHECK(prov->alpha == Rational(1, 2));
}

TEST_CASE("family and order files round-trip") {
    CliqueFamily family;
    family.m = 6;
    family.l = 2;
    family.blocks = {{0, 1}, {2, 3}, {4, 5}};
    auto fj = family_to_json(family);
    CliqueFamily fback = family_from_json(fj);
    CHECK(fback.blocks == family.blocks);
    CHECK(fback.m == 6);

    CyclicOrder order = CyclicOrder::from_sequence({2, 0, 1, 3});
    auto oj = order_to_json(order);
    CHECK(order_from_json(oj).seq == order.seq);
}

TEST_CASE("parpartition rendering lands in family files") {
    KSubsetUniverse u(6, 2);
    const Threshold half{Rational(1, 2)};
    TripleGraphSystem sys = build_triple_system(u, half, half);
    CliqueFamily family;
    family.m = 15;
    family.l = 2;
    family.blocks = {{static_cast<Vertex>(u.rank({0, 1})), static_cast<Vertex>(u.rank({2, 3}))}};
    auto parts = family_to_parpartitions(u, family, sys.g1(), half, half);
    auto j = family_to_json(family, &parts);
    CHECK(j["parpartitions"].size() == 1);
    CHECK(j["alpha"] == "1/2");
    CHECK(j["n"] == 6);
}

TEST_CASE("malformed files raise parse errors") {
    CHECK_THROWS(system_from_json(nlohmann::json{{"g1", 7}}));
    CHECK_THROWS(order_from_json(nlohmann::json{{"order", {0, 0, 1}}}));
    CHECK_THROWS(read_json_file("/nonexistent/path.json"));
}

TEST_CASE("parallel triple-system build matches the serial reference") {
    const Threshold quarter{Rational(1, 4)};
    const Threshold half{Rational(1, 2)};
    for (int n : {7, 9, 11}) {
        KSubsetUniverse u(n, 3);
        TripleGraphSystem a = build_triple_system(u, quarter, half);
        TripleGraphSystem b = build_triple_system_serial(u, quarter, half);
        CHECK(a.g1().edge_list() == b.g1().edge_list());
        CHECK(a.g2().edge_list() == b.g2().edge_list());
        CHECK(a.g3().edge_list() == b.g3().edge_list());
    }
}
