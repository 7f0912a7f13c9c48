#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sepcol/constructions.hpp"
#include "sepcol/enumerate.hpp"
#include "sepcol/instances.hpp"
#include "sepcol/solver.hpp"

using namespace sepcol;

namespace {

std::vector<Multigraph> small_graphs()
{
    std::vector<Multigraph> out;
    for (int n = 1; n <= 4; ++n)
        for (const Multigraph& g : simple_graphs(n, false))
            out.push_back(g);
    out.push_back(Multigraph(2, {{0, 1}, {0, 1}}));
    out.push_back(Multigraph(3, {{0, 1}, {1, 0}, {1, 2}}));
    return out;
}

std::uint64_t binomial(int n, int k)
{
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

/// Orbit keys reached by one enumeration mode; `repeats` counts keys seen
/// more than once.
template <class Key>
struct OrbitSet {
    std::set<Key> keys;
    std::uint64_t visited = 0;
    std::uint64_t repeats = 0;
    void add(const Key& k)
    {
        ++visited;
        if (!keys.insert(k).second)
            ++repeats;
    }
};

}  // namespace

TEST_CASE("canonical list enumeration reproduces raw orbits")
{
    for (const Multigraph& g : small_graphs())
        for (int k = 1; k <= 2; ++k)
            for (bool sep : {false, true}) {
                OrbitSet<std::vector<std::uint32_t>> raw, canon;
                for_each_list_assignment(g, k, sep, false, [&](const ListAssignment& l) {
                    raw.add(oracle::list_normal_form(l));
                    return true;
                });
                for_each_list_assignment(g, k, sep, true, [&](const ListAssignment& l) {
                    canon.add(oracle::list_normal_form(l));
                    return true;
                });
                CAPTURE(to_text(g));
                CAPTURE(k);
                CAPTURE(sep);
                CHECK(canon.keys == raw.keys);
                CHECK(canon.repeats == 0);
                if (!sep) {
                    const int n = g.num_vertices();
                    std::uint64_t expect = 1;
                    for (int v = 0; v < n; ++v)
                        expect *= binomial(n * k, k);
                    CHECK(raw.visited == expect);
                }
            }
}

TEST_CASE("separated enumeration equals filtered plain enumeration")
{
    for (const Multigraph& g : small_graphs())
        for (int k = 1; k <= 2; ++k)
            for (bool canonical : {false, true}) {
                std::set<std::vector<std::vector<Color>>> sep, filtered;
                for_each_list_assignment(g, k, true, canonical, [&](const ListAssignment& l) {
                    CHECK(is_separated(g, l));
                    sep.insert(l.lists);
                    return true;
                });
                for_each_list_assignment(g, k, false, canonical, [&](const ListAssignment& l) {
                    if (is_separated(g, l))
                        filtered.insert(l.lists);
                    return true;
                });
                if (canonical) {
                    // Representatives may differ; compare orbits.
                    std::set<std::vector<std::uint32_t>> a, b;
                    for (const auto& l : sep)
                        a.insert(oracle::list_normal_form({k, l}));
                    for (const auto& l : filtered)
                        b.insert(oracle::list_normal_form({k, l}));
                    CHECK(a == b);
                } else {
                    CHECK(sep == filtered);
                }
            }
}

TEST_CASE("canonical edge colourings reproduce raw orbits")
{
    for (const Multigraph& g : small_graphs())
        for (int palette = 1; palette <= 3; ++palette) {
            OrbitSet<std::vector<Color>> raw, canon;
            for_each_edge_coloring(g, palette, false, [&](const EdgeColoring& f) {
                raw.add(oracle::edge_coloring_normal_form(f));
                return true;
            });
            for_each_edge_coloring(g, palette, true, [&](const EdgeColoring& f) {
                canon.add(oracle::edge_coloring_normal_form(f));
                return true;
            });
            std::uint64_t expect = 1;
            for (int e = 0; e < g.num_edges(); ++e)
                expect *= static_cast<std::uint64_t>(palette);
            CHECK(raw.visited == expect);
            CHECK(canon.keys == raw.keys);
            CHECK(canon.repeats == 0);
        }
}

TEST_CASE("canonical local partitions reproduce raw orbits")
{
    for (const Multigraph& g : small_graphs())
        for (int k = 1; k <= 2; ++k) {
            OrbitSet<std::vector<Color>> raw, canon;
            for_each_local_partition(g, k, false, [&](const LocalPartition& p) {
                raw.add(oracle::local_partition_normal_form(g, p));
                return true;
            });
            for_each_local_partition(g, k, true, [&](const LocalPartition& p) {
                canon.add(oracle::local_partition_normal_form(g, p));
                return true;
            });
            std::uint64_t expect = 1;
            for (int e = 0; e < 2 * g.num_edges(); ++e)
                expect *= static_cast<std::uint64_t>(k);
            CHECK(raw.visited == expect);
            CHECK(canon.keys == raw.keys);
            CHECK(canon.repeats == 0);
        }
}

TEST_CASE("canonical DP covers reproduce raw orbits")
{
    using Key = std::vector<std::vector<std::array<Color, 2>>>;
    for (const Multigraph& g : small_graphs())
        for (int k = 1; k <= 2; ++k)
            for (DPMatchings mode : {DPMatchings::perfect, DPMatchings::partial}) {
                OrbitSet<Key> raw, canon;
                for_each_dp_cover(g, k, mode, false, [&](const DPCover& c) {
                    raw.add(oracle::dp_normal_form(g, c));
                    return true;
                });
                for_each_dp_cover(g, k, mode, true, [&](const DPCover& c) {
                    canon.add(oracle::dp_normal_form(g, c));
                    return true;
                });
                // Matchings of K_{k,k}: perfect k!, partial 2 for k = 1 and 7 for k = 2.
                const std::uint64_t per_edge = mode == DPMatchings::perfect ? (k == 1 ? 1 : 2)
                                                                            : (k == 1 ? 2 : 7);
                std::uint64_t expect = 1;
                for (int e = 0; e < g.num_edges(); ++e)
                    expect *= per_edge;
                CHECK(raw.visited == expect);
                CHECK(canon.keys == raw.keys);
                CHECK(canon.repeats == 0);
            }
}

TEST_CASE("DP enumeration enforces its caps")
{
    CHECK_THROWS_AS(for_each_dp_cover(complete(3), 4, DPMatchings::perfect, true,
                                      [](const DPCover&) { return true; }),
                    std::length_error);
    CHECK_THROWS_AS(for_each_dp_cover(complete(5), 2, DPMatchings::perfect, true,
                                      [](const DPCover&) { return true; }),
                    std::length_error);
}

TEST_CASE("split parts partition the enumeration")
{
    const Multigraph g = cycle(4);
    std::multiset<std::vector<std::vector<Color>>> whole, parts;
    for_each_list_assignment(g, 2, true, true, [&](const ListAssignment& l) {
        whole.insert(l.lists);
        return true;
    });
    for (int p = 0; p < 3; ++p)
        for_each_list_assignment(
            g, 2, true, true,
            [&](const ListAssignment& l) {
                parts.insert(l.lists);
                return true;
            },
            Split{p, 3});
    CHECK(whole == parts);
}

TEST_CASE("reduced adapted lists cover every adversarial choice")
{
    // With f fixed, an adapted list colouring exists for every k-list
    // assignment iff it exists for every reduced one.
    for (const Multigraph& g : small_graphs()) {
        if (g.num_vertices() > 3)
            continue;
        for (int k = 1; k <= 2; ++k)
            for_each_edge_coloring(g, std::max(1, g.num_edges()), true, [&](const EdgeColoring& f) {
                bool reduced_ok = true, raw_ok = true;
                for_each_reduced_list_assignment(g, f, k, [&](const ListAssignment& l) {
                    reduced_ok = oracle::colorable(g, Instance::adapted(f, l));
                    return reduced_ok;
                });
                for_each_list_assignment(g, k, false, true, [&](const ListAssignment& raw) {
                    raw_ok = oracle::colorable(g, Instance::adapted(f, raw));
                    return raw_ok;
                });
                CHECK(reduced_ok == raw_ok);
                return true;
            });
    }
}

TEST_CASE("validate_instance rejects malformed instances")
{
    const Multigraph g = complete(3);
    CHECK(validate_instance(g, Instance::lists({2, {{1, 2}, {1, 3}, {2, 3}}}, true)).empty());
    CHECK_FALSE(validate_instance(g, Instance::lists({2, {{1, 2}, {1, 2}, {2, 3}}}, true)).empty());
    CHECK_FALSE(validate_instance(g, Instance::lists({2, {{1, 2}, {1, 3}}}, false)).empty());
    CHECK_FALSE(validate_instance(g, Instance::lists({2, {{1, 1}, {1, 3}, {2, 3}}}, false)).empty());
    CHECK_FALSE(validate_instance(g, Instance::edge_coloring({2, {1, 2, 3}})).empty());
    CHECK_FALSE(validate_instance(g, Instance::conflict({2, {{1, 1}, {1, 3}, {2, 2}}})).empty());
    CHECK_FALSE(validate_instance(g, Instance::dp({2, {{{1, 1}, {2, 1}}, {}, {}}})).empty());
    CHECK(validate_instance(g, Instance::dp({2, {{{1, 2}, {2, 1}}, {}, {}}})).empty());
}

TEST_CASE("sampling is deterministic and valid")
{
    const Multigraph g = complete_bipartite(3, 5);
    for (InstanceKind kind : {InstanceKind::list, InstanceKind::sep_list, InstanceKind::edge_coloring,
                              InstanceKind::adapted_list, InstanceKind::local_partition,
                              InstanceKind::dp_cover}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const Instance a = sample_instance(g, kind, 3, seed);
            CHECK(a == sample_instance(g, kind, 3, seed));
            CHECK(a.kind == kind);
            CHECK(validate_instance(g, a) == "");
        }
    }
}

TEST_CASE("lifted instances keep colourability")
{
    const Multigraph g = cactus_two_triangles();
    const std::vector<Vertex> tri{0, 1, 2};
    const Subgraph sub = induced_subgraph(g, tri);
    const Instance bad = Instance::lists({1, {{1}, {1}, {1}}}, false);
    const Instance lifted = lift_instance(bad, sub, g);
    CHECK(validate_instance(g, lifted).empty());
    CHECK_FALSE(oracle::colorable(g, lifted));
    const Instance good = Instance::conflict({2, {{1, 1}, {1, 1}, {1, 1}}});
    CHECK(oracle::colorable(g, lift_instance(good, sub, g)));
}
