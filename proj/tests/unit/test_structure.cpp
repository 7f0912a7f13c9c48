#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sepcol/constructions.hpp"
#include "sepcol/enumerate.hpp"
#include "sepcol/structure.hpp"

using namespace sepcol;

namespace {

Multigraph random_multigraph(int n, int m, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    Multigraph g(n);
    for (int i = 0; i < m; ++i) {
        const int u = static_cast<int>(rng() % n);
        int v = static_cast<int>(rng() % (n - 1));
        if (v >= u)
            ++v;
        g.add_edge(u, v);
    }
    return g;
}

/// Leaf deletion in a random order; returns the surviving vertices.
std::set<Vertex> peel_randomly(const Multigraph& g, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<bool> alive(g.num_vertices(), true);
    std::vector<int> deg(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        deg[v] = g.degree(v);
    while (true) {
        std::vector<Vertex> leaves;
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (alive[v] && deg[v] == 1)
                leaves.push_back(v);
        if (leaves.empty())
            break;
        const Vertex v = leaves[rng() % leaves.size()];
        alive[v] = false;
        for (EdgeId e : g.incident(v))
            if (alive[g.other(e, v)])
                --deg[g.other(e, v)];
    }
    std::set<Vertex> out;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (alive[v])
            out.insert(v);
    return out;
}

}  // namespace

TEST_CASE("min-max outdegree orientation equals the exhaustive minimum")
{
    for (int n = 1; n <= 6; ++n)
        for (const Multigraph& g : simple_graphs(n, false)) {
            const Orientation o = min_max_outdegree_orientation(g);
            CHECK(o.max_outdegree == oracle::min_max_outdegree(g));
            const auto out = o.outdegrees(g);
            CHECK(*std::max_element(out.begin(), out.end()) == o.max_outdegree);
            CHECK(o.max_outdegree <= (g.max_degree() + 1) / 2);
        }
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Multigraph g = random_multigraph(2 + static_cast<int>(seed % 5), static_cast<int>(seed % 12), seed);
        const Orientation o = min_max_outdegree_orientation(g);
        CHECK(o.max_outdegree == oracle::min_max_outdegree(g));
        CHECK(o.max_outdegree <= (g.max_degree() + 1) / 2);
    }
}

TEST_CASE("core is independent of deletion order")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Multigraph g = random_multigraph(3 + static_cast<int>(seed % 6), static_cast<int>(seed % 9), 1000 + seed);
        const CoreResult core = core_of(g);
        const std::set<Vertex> kept(core.to_original.begin(), core.to_original.end());
        for (std::uint64_t order = 0; order < 5; ++order) {
            const std::set<Vertex> other = peel_randomly(g, order);
            // Tree components shrink to an arbitrary vertex, so compare the
            // vertices of components that contain a cycle exactly.
            for (const auto& comp : components(g)) {
                std::size_t a = 0, b = 0;
                bool same = true;
                for (Vertex v : comp) {
                    a += kept.count(v);
                    b += other.count(v);
                    same = same && kept.count(v) == other.count(v);
                }
                CHECK(a == b);
                if (a > 1)
                    CHECK(same);
            }
        }
        CHECK(core.core.min_degree() != 1);
    }
}

TEST_CASE("core keeps parallel edges")
{
    const Multigraph g(3, {{0, 1}, {0, 1}, {1, 2}});
    const CoreResult c = core_of(g);
    CHECK(c.core.num_vertices() == 2);
    CHECK(c.core.num_edges() == 2);
}

TEST_CASE("two-choosability classifier on named shapes")
{
    CHECK(classify_two_choosable(path(5)).two_choosable);
    CHECK(classify_two_choosable(path(5)).shape == ShapeClass::single_vertex);
    CHECK(classify_two_choosable(cycle(6)).shape == ShapeClass::even_cycle);
    CHECK(classify_two_choosable(cycle(6)).two_choosable);
    CHECK_FALSE(classify_two_choosable(cycle(5)).two_choosable);
    CHECK(classify_two_choosable(theta(2, 2, 2)).two_choosable);
    CHECK(classify_two_choosable(theta(2, 2, 4)).two_choosable);
    CHECK_FALSE(classify_two_choosable(theta(2, 2, 3)).two_choosable);
    CHECK_FALSE(classify_two_choosable(theta(1, 2, 2)).two_choosable);
    CHECK_FALSE(classify_two_choosable(complete_bipartite(2, 4)).two_choosable);
    CHECK_FALSE(classify_two_choosable(complete(4)).two_choosable);
    const auto t = classify_two_choosable(complete_bipartite(2, 3));
    CHECK(t.shape == ShapeClass::theta);
    CHECK(t.theta_lengths == std::array<int, 3>{2, 2, 2});
    CHECK_THROWS_AS(classify_two_choosable(Multigraph(2)), std::invalid_argument);
    CHECK_THROWS_AS(classify_two_choosable(Multigraph(2, {{0, 1}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("cycle-or-theta recognition in both modes")
{
    CHECK(classify_cycle_or_theta(cycle(4)).accepted);
    CHECK(classify_cycle_or_theta(theta(1, 2, 3)).accepted);
    CHECK_FALSE(classify_cycle_or_theta(complete(4)).accepted);
    const Multigraph two_parallel(2, {{0, 1}, {0, 1}});
    CHECK(classify_cycle_or_theta(two_parallel, GraphMode::multigraph).accepted);
    const Multigraph triple(2, {{0, 1}, {0, 1}, {0, 1}});
    CHECK(classify_cycle_or_theta(triple, GraphMode::multigraph).shape == ShapeClass::theta);
    CHECK_FALSE(classify_cycle_or_theta(triple, GraphMode::simple).accepted);
}

TEST_CASE("lollipop pair detector follows the literal conditions on Theta(2,2,2)")
{
    const LollipopPairResult r = find_lollipop_cycle_pair(theta(2, 2, 2));
    CHECK(r.status == SearchStatus::found);
    CHECK(satisfies_lollipop_pair_conditions(theta(2, 2, 2), r.first, r.second));
    CHECK(find_lollipop_cycle_pair(cycle(6)).status == SearchStatus::none);
    CHECK(find_lollipop_cycle_pair(path(4)).status == SearchStatus::none);
    CHECK(find_lollipop_cycle_pair(wheel(6)).status == SearchStatus::found);
}

TEST_CASE("two big cycles")
{
    CHECK(find_two_big_cycles(two_c4_bridge()).status == SearchStatus::found);
    CHECK(find_two_big_cycles(theta(2, 2, 2)).status == SearchStatus::none);
    CHECK(find_two_big_cycles(cactus_two_triangles()).status == SearchStatus::none);
    CHECK(find_two_big_cycles(fig1_glued().graph).status == SearchStatus::found);
    CHECK(find_two_big_cycles(complete(5), 1).status == SearchStatus::budget_exceeded);
}

TEST_CASE("degeneracy and elimination order")
{
    CHECK(degeneracy(complete(4)).value == 3);
    CHECK(degeneracy(cycle(5)).value == 2);
    CHECK(degeneracy(path(6)).value == 1);
    CHECK(degeneracy(Multigraph(2, {{0, 1}, {0, 1}})).value == 2);
    CHECK(degeneracy(fig1_glued().graph).value == 3);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Multigraph g = random_multigraph(6, 10, seed);
        const Degeneracy d = degeneracy(g);
        std::vector<int> pos(g.num_vertices());
        for (std::size_t i = 0; i < d.order.size(); ++i)
            pos[d.order[i]] = static_cast<int>(i);
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            int later = 0;
            for (EdgeId e : g.incident(v))
                later += pos[g.other(e, v)] > pos[v];
            CHECK(later <= d.value);
        }
    }
}

TEST_CASE("pattern finders on named graphs")
{
    const auto w = find_wheel(wheel(6), 6, true);
    REQUIRE(w);
    CHECK(w->rim.size() == 5);
    CHECK_FALSE(find_wheel(complete(5), 6));
    CHECK(find_wheel(complete(4), 4));

    CHECK(hell_zhu_two_colorable(cycle(5)).two_colorable);
    CHECK(hell_zhu_two_colorable(cycle(5)).edge.has_value());
    CHECK_FALSE(hell_zhu_two_colorable(complete(4)).two_colorable);
    CHECK(hell_zhu_two_colorable(cycle(4)).two_colorable);
    CHECK_FALSE(hell_zhu_two_colorable(cycle(4)).edge.has_value());
    CHECK_FALSE(hell_zhu_two_colorable(fig2_glued().graph).two_colorable);

    CHECK(complete_bipartite_parts(complete_bipartite(3, 2)) == std::array<int, 2>{2, 3});
    CHECK_FALSE(complete_bipartite_parts(cycle(6)));
    CHECK(find_two_disjoint_triangles(cactus_two_triangles()));
    CHECK_FALSE(find_two_disjoint_triangles(complete(5)));
    CHECK(is_forest(path(4)));
    CHECK_FALSE(is_forest(Multigraph(2, {{0, 1}, {0, 1}})));
}

TEST_CASE("short cycle census of K4")
{
    const CycleCensus c = short_cycle_census(complete(4));
    CHECK(c.triangles.size() == 4);
    CHECK(c.four_cycles.size() == 3);
    CHECK(c.intersecting_triangles);
    CHECK_FALSE(c.condition_i);
    CHECK_FALSE(c.condition_ii);
    const CycleCensus p = short_cycle_census(cycle(7));
    CHECK(p.condition_i);
    CHECK(p.condition_ii);
}
