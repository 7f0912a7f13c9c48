#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sepcol/constructions.hpp"
#include "sepcol/solver.hpp"
#include "sepcol/structure.hpp"

using namespace sepcol;

TEST_CASE("generators have the documented vertex and edge counts")
{
    CHECK(complete(5).num_edges() == 10);
    CHECK(complete_bipartite(3, 4).num_edges() == 12);
    CHECK(complete_multipartite(3, 2).num_edges() == 12);
    CHECK(cycle(5).num_edges() == 5);
    CHECK(path(5).num_edges() == 4);
    CHECK(theta(2, 2, 3).num_vertices() == 6);
    CHECK(theta(2, 2, 3).num_edges() == 7);
    CHECK(wheel(6).num_vertices() == 6);
    CHECK(wheel(6).num_edges() == 10);
    CHECK(cactus_two_triangles().num_edges() == 7);
    CHECK(two_c4_bridge().num_edges() == 9);
}

TEST_CASE("blocking gadget parameterisations")
{
    for (const auto& [a, b, c] : {std::array<Color, 3>{1, 2, 3}, {2, 1, 3}, {3, 1, 2}}) {
        const Fig1Gadget gad = fig1_gadget(a, b, c);
        CHECK(blocking_property_check(gad));
        CHECK(gad.graph.num_edges() == 7);
        CHECK(validate_instance(gad.graph, Instance::conflict(gad.partition)).empty());
    }
    CHECK_THROWS_AS(fig1_gadget(1, 3, 3), std::invalid_argument);
}

TEST_CASE("glued blocking gadget has no colouring from its partition")
{
    const Construction c = fig1_glued();
    REQUIRE(c.instance);
    CHECK(c.graph.num_vertices() == 10);
    const WitnessCheck w = verify_witness(c.graph, *c.instance);
    CHECK(w.confirmed);
    CHECK(w.nodes <= 59049);
    CHECK_FALSE(oracle::colorable(c.graph, *c.instance));

    LocalPartition ones{3, std::vector<std::array<Color, 2>>(c.graph.num_edges(), {1, 1})};
    const WitnessCheck r = verify_witness(c.graph, Instance::conflict(ones));
    CHECK_FALSE(r.confirmed);
    CHECK(check_coloring(c.graph, Instance::conflict(ones), r.coloring).empty());
}

TEST_CASE("glued edge-coloured gadget defeats its adapted lists")
{
    const Construction c = fig2_glued();
    REQUIRE(c.instance);
    REQUIRE(c.fig2);
    CHECK(c.instance->kind == InstanceKind::adapted_list);
    CHECK(c.instance->k() == 3);
    CHECK(verify_witness(c.graph, *c.instance).confirmed);
    CHECK(c.planar);
}

TEST_CASE("strategy colouring handles sampled separated 3-lists")
{
    const Construction c = fig2_glued();
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
        const Instance inst = sample_instance(c.graph, InstanceKind::sep_list, 3, seed);
        const auto& lists = std::get<ListAssignment>(inst.data);
        const std::vector<Color> col = fig2_strategy_coloring(c.graph, *c.fig2, lists);
        REQUIRE(check_coloring(c.graph, inst, col).empty());
    }
    ListAssignment bad{3, std::vector<std::vector<Color>>(c.graph.num_vertices(), {1, 2, 3})};
    CHECK_THROWS_AS(fig2_strategy_coloring(c.graph, *c.fig2, bad), std::invalid_argument);
}

TEST_CASE("bipartite witnesses are separated and uncolourable")
{
    for (int k = 2; k <= 3; ++k) {
        const Construction c = kkn_bad(k);
        REQUIRE(c.instance);
        CHECK(c.instance->kind == InstanceKind::sep_list);
        const auto& l = std::get<ListAssignment>(c.instance->data);
        CHECK(is_separated(c.graph, l));
        CHECK(validate_instance(c.graph, *c.instance).empty());
        CHECK(verify_witness(c.graph, *c.instance).confirmed);
    }
    const auto parts = complete_bipartite_parts(kkn_bad(3).graph);
    CHECK(parts == std::array<int, 2>{3, 27});
}

TEST_CASE("registry names all build")
{
    std::set<std::string> seen;
    for (const auto& [name, desc] : construction_registry()) {
        CHECK_FALSE(desc.empty());
        seen.insert(name);
    }
    CHECK(seen.count("fig1-glued"));
    for (const char* n : {"complete:4", "bipartite:2,3", "multipartite:3,2", "cycle:5", "path:3",
                          "theta:2,2,4", "wheel:6", "cactus-two-triangles", "two-c4-bridge",
                          "fig1-gadget:1,2,3", "fig1-glued", "fig2-gadget:1,2,3", "fig2-glued",
                          "kkn-bad:2"}) {
        CAPTURE(n);
        const Construction c = build(n);
        CHECK(c.name == n);
        CHECK(c.graph.num_vertices() > 0);
    }
    CHECK_THROWS_AS(build("nothing"), std::invalid_argument);
    CHECK_THROWS_AS(build("complete:x"), std::invalid_argument);
}

TEST_CASE("construction ledgers reach the expected values")
{
    for (const char* n : {"cactus-two-triangles", "two-c4-bridge", "fig1-glued", "kkn-bad:2"}) {
        const Construction c = build(n);
        const BoundLedger l = construction_ledger(c, Budget{});
        CHECK(ledger_consistency(l, c.planar).ok);
        for (const auto& [kind, value] : c.expected) {
            CAPTURE(n);
            CAPTURE(to_string(kind));
            CHECK(l[kind].lower.value <= value);
            CHECK(value <= l[kind].upper.value);
        }
    }
}

TEST_CASE("planar triples suite")
{
    const auto suite = planar_triples_suite();
    REQUIRE(suite.size() == 5);
    const std::array<int, 3> expected[] = {{1, 1, 1}, {2, 2, 2}, {2, 3, 3}, {3, 3, 3}, {3, 4, 4}};
    for (std::size_t i = 0; i < suite.size(); ++i) {
        CHECK(suite[i].triple == expected[i]);
        CHECK(suite[i].construction.planar);
    }
}
