#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "sepcol/graph.hpp"
#include "sepcol/instances.hpp"
#include "sepcol/invariants.hpp"
#include "sepcol/solver.hpp"

namespace sepcol {

using Json = nlohmann::ordered_json;

/// Malformed input: bad JSON, wrong shape, or an instance bound to a
/// different graph.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"kind", "k", "graph_hash", "data"}. Adapted-list data is
/// {"palette", "edge_colors", "lists"}.
Json instance_to_json(const Instance& inst, const std::string& graph_hash);

/// Parses and validates against g; throws InputError on a hash mismatch
/// or an invalid instance.
Instance instance_from_json(const Json& j, const Multigraph& g);

/// 16 hex digits of FNV-1a over the compact serialisation.
std::string instance_hash(const Json& instance_json);

Json coloring_to_json(const std::vector<Color>& coloring);
std::vector<Color> coloring_from_json(const Json& j);

Json solve_result_to_json(const SolveResult& r, const std::string& instance_hash);

Json provenance_to_json(const Provenance& p, const std::string& graph_hash);
Json ledger_to_json(const BoundLedger& ledger);

/// Reads a whole file; throws InputError when it cannot be opened.
std::string read_text_file(const std::string& path);
Json read_json_file(const std::string& path);

/// Writes JSON with two-space indentation and a trailing newline.
void write_json_file(const std::string& path, const Json& j);

}  // namespace sepcol
