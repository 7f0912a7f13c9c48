#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sepcol/graph.hpp"

namespace sepcol {

// Colours are positive integers throughout; palettes are {1, .., k}.

/// k-list assignment; each list sorted ascending.
struct ListAssignment {
    int k = 0;
    std::vector<std::vector<Color>> lists;
    bool operator==(const ListAssignment&) const = default;
};

/// Edge colouring f with colours in {1, .., palette}.
struct EdgeColoring {
    int palette = 0;
    std::vector<Color> colors;  // per edge id
    bool operator==(const EdgeColoring&) const = default;
};

/// An edge colouring together with a list assignment: the adversarial
/// object of adaptable choosability.
struct AdaptedListInstance {
    EdgeColoring coloring;
    ListAssignment lists;
    bool operator==(const AdaptedListInstance&) const = default;
};

/// Local k-partition: per edge the conflict pair (c_u(e), c_v(e)), sides
/// following the edge's stored (u, v) order.
struct LocalPartition {
    int k = 0;
    std::vector<std::array<Color, 2>> pairs;
    bool operator==(const LocalPartition&) const = default;
};

/// DP cover: per edge a (partial) matching between the u-side palette and
/// the v-side palette, as sorted (u colour, v colour) pairs.
struct DPCover {
    int k = 0;
    std::vector<std::vector<std::array<Color, 2>>> matchings;
    bool operator==(const DPCover&) const = default;
};

enum class InstanceKind { list, sep_list, edge_coloring, adapted_list, local_partition, dp_cover };

std::string to_string(InstanceKind kind);
InstanceKind instance_kind_from_string(std::string_view name);

struct Instance {
    InstanceKind kind = InstanceKind::list;
    std::variant<ListAssignment, EdgeColoring, AdaptedListInstance, LocalPartition, DPCover> data;

    int k() const;
    bool operator==(const Instance&) const = default;

    static Instance lists(ListAssignment l, bool separated);
    static Instance edge_coloring(EdgeColoring f);
    static Instance adapted(EdgeColoring f, ListAssignment l);
    static Instance conflict(LocalPartition p);
    static Instance dp(DPCover c);
};

/// Structural validity of an instance against g (sizes, ranges, list
/// sizes, matching property, separation for sep_list). Returns an empty
/// string when valid, else the reason.
std::string validate_instance(const Multigraph& g, const Instance& inst);

bool is_separated(const Multigraph& g, const ListAssignment& lists);

/// Half-open partition of the first branching level, for independent
/// workers: a worker takes the first-level choices with index % parts == part.
struct Split {
    int part = 0;
    int parts = 1;
};

template <class T>
using Visitor = std::function<bool(const T&)>;  // return false to stop

/// k-list assignments. Canonical mode yields one representative per orbit
/// under global colour permutation (colours in {1, .., n*k}), in a fixed
/// order starting with all lists identical; raw mode yields every
/// assignment over {1, .., n*k}. Separation is enforced during generation.
void for_each_list_assignment(const Multigraph& g, int k, bool separated, bool canonical,
                              const Visitor<ListAssignment>& visit, Split split = {});

/// Edge colourings with at most `palette` colours. Canonical mode yields
/// restricted-growth sequences over the edge order.
void for_each_edge_coloring(const Multigraph& g, int palette, bool canonical,
                            const Visitor<EdgeColoring>& visit, Split split = {});

/// Local k-partitions. Canonical mode quotients by independent palette
/// relabelling at each vertex: each c_v is a restricted-growth sequence
/// over E(v).
void for_each_local_partition(const Multigraph& g, int k, bool canonical,
                              const Visitor<LocalPartition>& visit, Split split = {});

enum class DPMatchings { partial, perfect };

inline constexpr int kMaxDPPalette = 3;
inline constexpr int kMaxDPEdges = 9;

/// DP covers up to per-vertex palette permutation. Throws
/// std::length_error when k > 3 or |E| > 9. Partial canonical mode
/// additionally requires a raw space of at most 4e6 covers.
void for_each_dp_cover(const Multigraph& g, int k, DPMatchings matchings, bool canonical,
                       const Visitor<DPCover>& visit, Split split = {});

/// Per-vertex incident edge colours under f. A vertex with fewer than k
/// distinct incident colours is `free`: any k-list contains a colour that
/// no incident edge carries, so the vertex never blocks a colouring.
struct AdmissibleFamily {
    int k = 0;
    std::vector<std::vector<Color>> incident_colors;
    std::vector<bool> free;
};

AdmissibleFamily adapted_domain_reduction(const Multigraph& g, const EdgeColoring& f, int k);

/// Lists for a free vertex: its incident colours padded with fresh colours
/// above every colour in f.
std::vector<Color> free_list(const AdmissibleFamily& family, const EdgeColoring& f, Vertex v);

/// Reduced k-list assignments for a fixed f: every k-subset of incident
/// colours at constrained vertices, a fixed padded list at free vertices.
void for_each_reduced_list_assignment(const Multigraph& g, const EdgeColoring& f, int k,
                                      const Visitor<ListAssignment>& visit);

struct SampleOptions {
    int universe = 0;  // list colour universe; 0 picks 2k + 1
    int palette = 0;   // edge-colour palette for adapted lists; 0 picks k + 1
};

/// Deterministic for fixed arguments. Edge colourings and local partitions
/// are uniform over the raw space; separated lists are drawn greedily from
/// a random colour order and padded with fresh colours (not uniform).
Instance sample_instance(const Multigraph& g, InstanceKind kind, int k, std::uint64_t seed,
                         const SampleOptions& options = {});

/// Extends an instance on an induced subgraph to the parent graph with
/// non-interfering filler (fresh list colours, arbitrary edge colours,
/// empty matchings).
Instance lift_instance(const Instance& inst, const Subgraph& sub, const Multigraph& parent);

}  // namespace sepcol
