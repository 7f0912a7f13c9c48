#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "sepcol/constructions.hpp"
#include "sepcol/io.hpp"

using namespace sepcol;

TEST_CASE("instance JSON round-trips for every kind")
{
    const Multigraph g = complete_bipartite(2, 3);
    const std::string h = graph_hash(g);
    for (InstanceKind kind : {InstanceKind::list, InstanceKind::sep_list, InstanceKind::edge_coloring,
                              InstanceKind::adapted_list, InstanceKind::local_partition,
                              InstanceKind::dp_cover})
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const Instance inst = sample_instance(g, kind, 2, seed);
            const Json j = instance_to_json(inst, h);
            CHECK(j["kind"] == to_string(kind));
            CHECK(j["k"] == 2);
            CHECK(j["graph_hash"] == h);
            const Instance back = instance_from_json(Json::parse(j.dump()), g);
            CHECK(back == inst);
            CHECK(instance_hash(j) == instance_hash(instance_to_json(back, h)));
        }
}

TEST_CASE("instance JSON uses the documented shapes")
{
    const Multigraph g(2, {{0, 1}});
    const std::string h = graph_hash(g);
    CHECK(instance_to_json(Instance::lists({2, {{1, 2}, {2, 3}}}, true), h).dump() ==
          R"({"kind":"sep-list","k":2,"graph_hash":")" + h + R"(","data":[[1,2],[2,3]]})");
    CHECK(instance_to_json(Instance::conflict({2, {{1, 2}}}), h)["data"].dump() == "[[1,2]]");
    CHECK(instance_to_json(Instance::dp({2, {{{1, 2}, {2, 1}}}}), h)["data"].dump() == "[[[1,2],[2,1]]]");
    const Json a = instance_to_json(Instance::adapted({2, {2}}, {2, {{1, 2}, {2, 3}}}), h);
    CHECK(a["kind"] == "adapted-list");
    CHECK(a["data"]["edge_colors"].dump() == "[2]");
}

TEST_CASE("instance JSON errors are input errors")
{
    const Multigraph g(2, {{0, 1}});
    const std::string h = graph_hash(g);
    Json good = instance_to_json(Instance::lists({1, {{1}, {2}}}, false), h);
    CHECK_NOTHROW(instance_from_json(good, g));

    Json wrong_hash = good;
    wrong_hash["graph_hash"] = "0000000000000000";
    CHECK_THROWS_AS(instance_from_json(wrong_hash, g), InputError);

    Json missing = good;
    missing.erase("data");
    CHECK_THROWS_AS(instance_from_json(missing, g), InputError);

    Json bad_kind = good;
    bad_kind["kind"] = "nope";
    CHECK_THROWS_AS(instance_from_json(bad_kind, g), InputError);

    Json bad_lists = good;
    bad_lists["data"] = Json::parse("[[1],[1,2]]");
    CHECK_THROWS_AS(instance_from_json(bad_lists, g), InputError);

    Json bad_type = good;
    bad_type["data"] = "x";
    CHECK_THROWS_AS(instance_from_json(bad_type, g), InputError);
}

TEST_CASE("colouring and solver result JSON")
{
    const std::vector<Color> c{3, 1, 2};
    CHECK(coloring_to_json(c).dump() == R"({"assignment":[3,1,2]})");
    CHECK(coloring_from_json(coloring_to_json(c)) == c);
    CHECK_THROWS_AS(coloring_from_json(Json::parse(R"({"assign":[1]})")), InputError);

    SolveResult r;
    r.status = SolveStatus::sat;
    r.nodes = 12;
    r.coloring = c;
    const Json j = solve_result_to_json(r, "abc");
    CHECK(j["status"] == "sat");
    CHECK(j["nodes"] == 12);
    CHECK(j["instance_hash"] == "abc");
    CHECK(j["assignment"] == Json::parse("[3,1,2]"));
}

TEST_CASE("ledger JSON carries values and provenance for every kind")
{
    const Multigraph g = complete(3);
    const BoundLedger l = compute_all(g, {kAllInvariants.begin(), kAllInvariants.end()}, Budget{});
    const Json j = ledger_to_json(l);
    CHECK(j["graph_hash"] == graph_hash(g));
    for (InvariantKind kind : kAllInvariants) {
        const Json& b = j["bounds"][to_string(kind)];
        CHECK(b["lower"]["value"].is_number_integer());
        CHECK(b["upper"]["value"].is_number_integer());
        const std::string type = b["lower"]["provenance"]["type"];
        CHECK((type == "witness" || type == "exhaustion" || type == "theorem" || type == "chain"));
    }
    CHECK(j["bounds"]["chi_conflict"]["lower"]["value"] == 2);
    CHECK(j["bounds"]["chi_conflict"]["upper"]["value"] == 2);
}

TEST_CASE("JSON files are written deterministically")
{
    const auto dir = std::filesystem::temp_directory_path();
    const std::string a = (dir / "sepcol_io_a.json").string();
    const std::string b = (dir / "sepcol_io_b.json").string();
    const Json j = ledger_to_json(structural_bounds(wheel(6)));
    write_json_file(a, j);
    write_json_file(b, read_json_file(a));
    CHECK(read_text_file(a) == read_text_file(b));
    CHECK(read_text_file(a).back() == '\n');
    std::remove(a.c_str());
    std::remove(b.c_str());
    CHECK_THROWS_AS(read_json_file((dir / "sepcol_missing.json").string()), InputError);
}
