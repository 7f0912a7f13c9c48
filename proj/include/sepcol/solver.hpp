#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sepcol/graph.hpp"
#include "sepcol/instances.hpp"

namespace sepcol {

/// Per-vertex colour domains plus, per edge, ordered colour pairs (a at u,
/// b at v) that the two endpoints may not take simultaneously.
struct ConstraintSystem {
    struct EdgeConstraint {
        Vertex u = 0;
        Vertex v = 0;
        std::vector<std::array<Color, 2>> forbidden;
    };

    int n = 0;
    std::vector<std::vector<Color>> domains;  // sorted, distinct
    std::vector<EdgeConstraint> edges;
};

/// Exact correspondence between instance colourings and solutions:
/// lists forbid (c, c) for shared colours, adapted lists forbid
/// (f(e), f(e)) only, local partitions forbid their pair, DP covers forbid
/// their matching. Edge colourings use domains {1, .., palette}.
/// Throws std::invalid_argument when the instance does not fit g; pass
/// validate = false only for instances produced by the enumerators.
ConstraintSystem compile(const Multigraph& g, const Instance& inst, bool validate = true);

/// Proper k-colouring of the underlying simple graph.
ConstraintSystem proper_coloring_system(const Multigraph& g, int k);

enum class SolveStatus { sat, unsat, budget_exceeded };

std::string to_string(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::unsat;
    std::vector<Color> coloring;  // set when sat
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kUnlimitedNodes = ~std::uint64_t{0};

/// Backtracking with forward checking. Variables are chosen by smallest
/// remaining domain, then lowest id; values are tried lowest colour first.
/// Domains are limited to 64 colours per vertex.
SolveResult solve(const ConstraintSystem& cs, std::uint64_t node_budget = kUnlimitedNodes);

/// Proper list colouring on a fixed graph with colours 1..63, reusing its
/// buffers between calls. Search order and node counts match solve() on
/// the compiled list instance.
class ListColorer {
public:
    explicit ListColorer(const Multigraph& g);

    /// False when some colour exceeds 63; use solve() then.
    static bool fits(const std::vector<std::vector<Color>>& lists);

    SolveResult run(const std::vector<std::vector<Color>>& lists,
                    std::uint64_t node_budget = kUnlimitedNodes);

private:
    int descend(int depth);

    std::vector<std::vector<Vertex>> neighbors_;
    std::vector<std::uint64_t> mask_;
    std::vector<int> assigned_;
    std::vector<std::pair<Vertex, std::uint64_t>> trail_;
    std::uint64_t budget_ = 0;
    std::uint64_t nodes_ = 0;
};

/// Independent check of a solution against the system.
bool satisfies(const ConstraintSystem& cs, const std::vector<Color>& coloring);

/// Checks a colouring directly against the instance definition, without
/// going through compile. Returns an empty string when valid.
std::string check_coloring(const Multigraph& g, const Instance& inst,
                           const std::vector<Color>& coloring);

struct ChromaticResult {
    int value = 0;
    bool exact = false;  // false when the budget ran out; value is then a lower bound
    std::vector<Color> coloring;
    std::uint64_t nodes = 0;
};

ChromaticResult chromatic_number(const Multigraph& g,
                                 std::uint64_t node_budget = kUnlimitedNodes);

/// Vertex roles of the three-copy glued graph built from the 4-edge-coloured
/// planar gadget: a shared apex u and, per copy r, a second apex v[r] and
/// three adjacent pairs x[r][i], y[r][i], each joined to both apexes.
struct Fig2Layout {
    Vertex u = 0;
    std::array<Vertex, 3> v{};
    std::array<std::array<Vertex, 3>, 3> x{};
    std::array<std::array<Vertex, 3>, 3> y{};
};

/// Explicit two-case colouring of the glued gadget from any separated
/// 3-list assignment. Throws std::invalid_argument when the lists are not
/// separated 3-lists over the layout's graph.
std::vector<Color> fig2_strategy_coloring(const Multigraph& g, const Fig2Layout& layout,
                                          const ListAssignment& lists);

}  // namespace sepcol
