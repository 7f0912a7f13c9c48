#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sepcol/invariants.hpp"
#include "sepcol/io.hpp"

namespace sepcol {

struct ExperimentOptions {
    Budget budget;
    int k = 2;                // bipartite-threshold
    int nmax = 7;             // classifier-oracle
    int count = 1000;         // ledger-fuzz
    std::uint64_t samples = 0;  // 0 picks the experiment's default
};

enum class Outcome { pass, fail, exceeded };

std::string to_string(Outcome o);

struct ExperimentReport {
    Json json;
    std::string table;  // human-readable summary
    Outcome outcome = Outcome::pass;
};

/// table1, bipartite-threshold, k3n-witness, k4n-witness, fig1, fig2,
/// wheel6, planar-triples, classifier-oracle, ledger-fuzz.
const std::vector<std::string>& experiment_names();

/// Runs a named experiment. Reports are deterministic for fixed options
/// (no timings). Throws std::invalid_argument for unknown names.
ExperimentReport run_experiment(const std::string& name, const ExperimentOptions& options);

/// Exit code for an outcome: 0 pass, 1 fail, 2 budget exceeded.
int exit_code(Outcome o);

}  // namespace sepcol
