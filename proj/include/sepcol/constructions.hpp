#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sepcol/graph.hpp"
#include "sepcol/instances.hpp"
#include "sepcol/invariants.hpp"
#include "sepcol/solver.hpp"

namespace sepcol {

// Plain generators. Vertex numbering is documented per function.

/// K_n on 0..n-1, edges in lexicographic order.
Multigraph complete(int n);
/// K_{a,b}: side A = 0..a-1, side B = a..a+b-1; edges (i, a+j) row by row.
Multigraph complete_bipartite(int a, int b);
/// K_{k x n}: k parts of n vertices, part p = p*n .. p*n+n-1.
Multigraph complete_multipartite(int k, int n);
/// C_n, n >= 3: edges (i, i+1 mod n).
Multigraph cycle(int n);
/// Path on n >= 1 vertices.
Multigraph path(int n);
/// Theta graph: ends 0 and 1 joined by internally disjoint paths of the
/// given lengths (each >= 1, at most one equal to 1).
Multigraph theta(int i, int j, int k);
/// k-wheel: rim cycle 0..k-2 and hub k-1.
Multigraph wheel(int k);
/// Triangles 0-1-2 and 3-4-5 joined by the edge 2-3.
Multigraph cactus_two_triangles();
/// 4-cycles 0-1-2-3 and 4-5-6-7 joined by the edge 3-4.
Multigraph two_c4_bridge();

/// Four-vertex multigraph with a local 3-partition that leaves y without a
/// colour once u takes colour a.
struct Fig1Gadget {
    Multigraph graph;
    LocalPartition partition;
    Vertex u = 0, x = 1, y = 2, z = 3;
    std::array<Color, 3> params{};  // (a, b, c)
};

/// Edges: u-x, u-y, u-z with pair (a, a); x-y twice with (b, b) and (c, b);
/// y-z twice with (c, c) and (c, b). Pairs are stored (first endpoint,
/// second endpoint) in the listed order.
Fig1Gadget fig1_gadget(Color a, Color b, Color c);

/// Exhausts phi(x), phi(z) in {b, c} with phi(u) = a and reports whether
/// every colour of y is blocked.
bool blocking_property_check(const Fig1Gadget& gadget);

/// Edge colouring of the planar gadget: u = 0, v = 1, x_i = 2i, y_i = 2i+1
/// for i = 1..3. Colour 4 is the extra palette value.
struct Fig2Gadget {
    Multigraph graph;
    EdgeColoring coloring;
    std::array<Color, 3> params{};
};

Fig2Gadget fig2_gadget(Color a, Color b, Color c);

/// A named construction with its published bad instance and the values
/// it is known to have.
struct KnownBound {
    InvariantKind kind = InvariantKind::chi;
    bool upper = true;
    int value = 0;
    std::string theorem;
};

struct Construction {
    std::string name;
    Multigraph graph;
    std::optional<Instance> instance;
    /// Invariant the instance certifies a lower bound for.
    std::optional<InvariantKind> instance_kind;
    std::vector<std::pair<InvariantKind, int>> expected;
    std::vector<KnownBound> known;
    bool planar = false;
    std::optional<Fig2Layout> fig2;
};

/// Three blocking gadgets with (a, b, c) = (1,2,3), (2,1,3), (3,1,2) glued at
/// u = 0; copy i uses x = 1+3i, y = 2+3i, z = 3+3i. Throws
/// std::logic_error if a copy fails the blocking property.
Construction fig1_glued();

/// Three edge-coloured gadgets with (a, b, c) = (1,2,3), (2,3,1), (3,1,2) glued at
/// u = 0; copy r uses v = 1+7r, x_i = 2+7r+2(i-1), y_i = 3+7r+2(i-1). The
/// instance pairs the edge colouring with lists of incident colours.
Construction fig2_glued();

/// K_{k, k^k} with pairwise disjoint x-lists {k(i-1)+1, .., ki} and all
/// transversals as y-lists, in lexicographic order.
Construction kkn_bad(int k);

/// Builds a registry name such as "complete:5", "bipartite:2,4",
/// "theta:2,2,4", "fig1-glued" or "kkn-bad:3". Throws
/// std::invalid_argument on unknown names or bad parameters.
Construction build(std::string_view name);

/// Registry entries with a one-line description each.
const std::vector<std::pair<std::string, std::string>>& construction_registry();

/// Structural bounds plus the construction's known bounds and its verified
/// instance, closed under the chain.
BoundLedger construction_ledger(const Construction& c, const Budget& budget);

struct PlanarTriple {
    Construction construction;
    std::array<int, 3> triple{};  // (ch_sep, ch_ad, chi_conflict)
};

/// The five planar constructions realising (1,1,1), (2,2,2), (2,3,3),
/// (3,3,3) and (3,4,4).
std::vector<PlanarTriple> planar_triples_suite();

}  // namespace sepcol
