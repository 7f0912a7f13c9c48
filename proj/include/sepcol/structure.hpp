#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sepcol/graph.hpp"

namespace sepcol {

/// Result of a budgeted exhaustive pattern search. `budget_exceeded` is
/// never folded into `none`.
enum class SearchStatus { found, none, budget_exceeded };

std::string to_string(SearchStatus s);

struct CoreResult {
    Multigraph core;
    std::vector<Vertex> to_original;
};

/// Repeatedly deletes vertices of degree one (parallel edges counted). A
/// component that is a tree shrinks to a single vertex.
CoreResult core_of(const Multigraph& g);

enum class ShapeClass { single_vertex, even_cycle, odd_cycle, theta, other };

std::string to_string(ShapeClass c);

struct TwoChoosableClass {
    bool two_choosable = false;
    ShapeClass shape = ShapeClass::other;
    std::array<int, 3> theta_lengths{};  // sorted, when shape == theta
};

/// Decides ch <= 2 for a connected simple graph from the shape of its core
/// (single vertex, even cycle, or theta with path lengths 2, 2, 2m).
/// Throws std::invalid_argument on disconnected or non-simple input.
TwoChoosableClass classify_two_choosable(const Multigraph& g);

enum class GraphMode { simple, multigraph };

struct CycleOrTheta {
    bool accepted = false;
    ShapeClass shape = ShapeClass::other;
    std::array<int, 3> theta_lengths{};
    Vertex theta_ends[2] = {-1, -1};
};

/// True iff g is a cycle, or two degree-3 vertices joined by three
/// internally disjoint paths. In simple mode at most one path may have
/// length one. Requires connected input with minimum degree >= 2.
CycleOrTheta classify_cycle_or_theta(const Multigraph& g, GraphMode mode = GraphMode::simple);

struct CycleWitness {
    std::vector<Vertex> vertices;  // cyclic order
    std::vector<EdgeId> edges;     // edges[i] joins vertices[i] and vertices[i+1 mod len]
};

/// Simple cycles of the underlying simple graph with length in
/// [min_len, max_len], each reported once (smallest vertex first, second
/// vertex smaller than last). `nodes` accumulates DFS steps.
std::vector<CycleWitness> enumerate_cycles(const Multigraph& g, int min_len, int max_len,
                                           std::uint64_t budget, std::uint64_t* nodes,
                                           bool* exceeded);

struct TwoCyclesResult {
    SearchStatus status = SearchStatus::none;
    std::array<CycleWitness, 2> cycles;
    std::uint64_t nodes = 0;
};

/// Two cycles of length >= 4 in one component sharing at most one vertex.
TwoCyclesResult find_two_big_cycles(const Multigraph& g, std::uint64_t budget = 1'000'000);

/// An ordered cycle (v1 .. vd, closing back to v1) or ordered lollipop
/// (v1 .. vd, closing to v_j with 2 <= j <= d-2, 1-based).
struct OrderedWalk {
    std::vector<Vertex> vertices;
    bool is_cycle = true;
    int close_index = 0;  // 0-based index of the vertex the last edge returns to

    int cycle_length() const
    {
        return static_cast<int>(vertices.size()) - close_index;
    }
    Vertex second() const { return vertices[1]; }
    Vertex second_to_last() const { return vertices.back(); }
};

struct LollipopPairResult {
    SearchStatus status = SearchStatus::none;
    OrderedWalk first;
    OrderedWalk second;
    std::uint64_t nodes = 0;
};

bool satisfies_lollipop_pair_conditions(const Multigraph& g, const OrderedWalk& h1,
                                        const OrderedWalk& h2);

/// Searches for a pair of ordered cycles/lollipops meeting the structural
/// necessary condition for failing separation 2-choosability. Finding a
/// pair does not prove failure; exhaustive `none` proves ch_sep <= 2.
LollipopPairResult find_lollipop_cycle_pair(const Multigraph& g,
                                            std::uint64_t budget = 5'000'000);

struct CycleCensus {
    std::vector<CycleWitness> triangles;
    std::vector<CycleWitness> four_cycles;
    std::vector<CycleWitness> five_cycles;
    bool intersecting_triangles = false;
    bool triangle_adjacent_triangle = false;
    bool triangle_adjacent_four_cycle = false;
    int max_four_cycles_per_triangle = 0;
    int max_triangles_per_five_cycle = 0;
    /// No two triangles intersect and every triangle is adjacent to at most
    /// one 4-cycle.
    bool condition_i = false;
    /// No triangle adjacent to a triangle or 4-cycle, and every 5-cycle is
    /// adjacent to at most three triangles.
    bool condition_ii = false;
};

CycleCensus short_cycle_census(const Multigraph& g);

struct Orientation {
    std::vector<bool> forward;  // per edge: true means stored u -> v
    int max_outdegree = 0;

    std::vector<int> outdegrees(const Multigraph& g) const;
};

/// Orientation minimising the maximum outdegree (exact; path reversal).
Orientation min_max_outdegree_orientation(const Multigraph& g);

struct Degeneracy {
    int value = 0;
    std::vector<Vertex> order;  // elimination order
};

/// Smallest-last elimination with parallel edges counted.
Degeneracy degeneracy(const Multigraph& g);

struct WheelEmbedding {
    Vertex hub = -1;
    std::vector<Vertex> rim;  // cyclic order, k-1 vertices
};

/// Embeds the k-wheel (a (k-1)-cycle plus hub) as a subgraph, or as an
/// induced subgraph when `induced` is set.
std::optional<WheelEmbedding> find_wheel(const Multigraph& g, int k = 6, bool induced = false);

struct HellZhuResult {
    bool two_colorable = false;
    std::optional<EdgeId> edge;  // empty when g is already bipartite
};

/// Adaptable 2-colourability: some single edge removal leaves g bipartite.
HellZhuResult hell_zhu_two_colorable(const Multigraph& g);

/// Part sizes (a <= b) when g is a simple complete bipartite graph K_{a,b}
/// with a, b >= 1.
std::optional<std::array<int, 2>> complete_bipartite_parts(const Multigraph& g);

std::optional<std::array<CycleWitness, 2>> find_two_disjoint_triangles(const Multigraph& g);

bool is_forest(const Multigraph& g);

struct StructureReport {
    CoreResult core;
    ShapeClass classification = ShapeClass::other;
    Degeneracy degeneracy;
    CycleCensus census;
    TwoCyclesResult two_big_cycles;
    LollipopPairResult lollipop_pair;
    std::optional<WheelEmbedding> wheel6;
    HellZhuResult hell_zhu;
    Orientation orientation;
};

StructureReport analyze_structure(const Multigraph& g, std::uint64_t budget = 1'000'000);

}  // namespace sepcol
