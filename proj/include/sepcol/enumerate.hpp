#pragma once

#include <cstdint>
#include <vector>

#include "sepcol/graph.hpp"

namespace sepcol {

/// Isomorphism-invariant code of a simple graph with at most 11 vertices:
/// the largest upper-triangle adjacency bitstring over all labellings that
/// order vertices by refined degree class.
std::uint64_t canonical_code(const Multigraph& g);

/// One representative per isomorphism class of simple graphs on exactly
/// n vertices (n <= 8), in increasing canonical-code order.
std::vector<Multigraph> simple_graphs(int n, bool connected_only);

/// Seeded random simple graph G(n, p).
Multigraph random_simple_graph(int n, double p, std::uint64_t seed);

}  // namespace sepcol
