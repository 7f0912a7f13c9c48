#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sepcol {

using Vertex = int;
using EdgeId = int;
using Color = int;

struct Edge {
    Vertex u;
    Vertex v;
    bool operator==(const Edge&) const = default;
};

/// Undirected multigraph without loops. Edge ids are positions in the edge
/// sequence; parallel edges are repeated entries.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int n);
    Multigraph(int n, std::vector<Edge> edges);

    EdgeId add_edge(Vertex u, Vertex v);

    int num_vertices() const { return static_cast<int>(incidence_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const { return edges_; }

    /// E(v): incident edge ids in increasing order.
    std::span<const EdgeId> incident(Vertex v) const { return incidence_[v]; }

    /// Degree counting parallel edges.
    int degree(Vertex v) const { return static_cast<int>(incidence_[v].size()); }
    int max_degree() const;
    int min_degree() const;

    Vertex other(EdgeId e, Vertex v) const
    {
        return edges_[e].u == v ? edges_[e].v : edges_[e].u;
    }

    /// Distinct neighbours, sorted.
    std::vector<Vertex> neighbors(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;
    int multiplicity(Vertex u, Vertex v) const;
    bool is_simple() const;

    /// Collapses parallel edges, keeping the first occurrence of each pair.
    Multigraph simple() const;

    bool operator==(const Multigraph&) const = default;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
};

struct Subgraph {
    Multigraph graph;
    std::vector<Vertex> to_parent;   // subgraph vertex -> parent vertex
    std::vector<EdgeId> edge_to_parent;
};

/// Vertex-induced subgraph; vertex order follows `vertices`.
Subgraph induced_subgraph(const Multigraph& g, std::span<const Vertex> vertices);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Multigraph& g);
bool is_connected(const Multigraph& g);

/// Two-colouring of the vertices if one exists (side 0/1 per vertex).
bool bipartition(const Multigraph& g, std::vector<int>* side = nullptr);

Multigraph relabel(const Multigraph& g, std::span<const Vertex> perm);

/// Text format: `vertices <n>` followed by one `edge <u> <v>` line per edge
/// occurrence. Lines starting with `#` are comments.
Multigraph parse_graph(std::string_view text);
std::string to_text(const Multigraph& g);
Multigraph read_graph_file(const std::string& path);

/// FNV-1a over the canonical text form, as 16 hex digits.
std::string graph_hash(const Multigraph& g);

}  // namespace sepcol
