// Command-line front end: invariant, verify, experiment, build.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sepcol/constructions.hpp"
#include "sepcol/experiments.hpp"
#include "sepcol/io.hpp"

namespace {

using namespace sepcol;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInput = 3;

void add_budget_flags(CLI::App* cmd, Budget& b)
{
    cmd->add_option("--budget-nodes", b.nodes, "Solver node limit per decision");
    cmd->add_option("--budget-instances", b.instances, "Instance limit per decision");
    cmd->add_option("--budget-seconds", b.seconds, "Wall-time limit per decision (0 = none)");
    cmd->add_option("--samples", b.samples, "Random instances tried when exhaustion stops");
    cmd->add_option("--seed", b.seed, "Seed for sampling");
    cmd->add_option("--workers", b.workers, "Worker threads for canonical scans")
        ->check(CLI::PositiveNumber);
}

std::string provenance_text(const Provenance& p)
{
    std::string s = to_string(p.type);
    switch (p.type) {
    case Provenance::Type::theorem:
    case Provenance::Type::chain:
        s += " " + p.id;
        break;
    case Provenance::Type::exhaustion:
        s += " k=" + std::to_string(p.k) + " instances=" + std::to_string(p.instances);
        break;
    case Provenance::Type::witness:
        s += " k=" + std::to_string(p.k);
        break;
    }
    return s;
}

void print_ledger(const BoundLedger& l, const std::vector<InvariantKind>& kinds)
{
    std::printf("graph %s\n", l.graph_hash.c_str());
    for (InvariantKind k : kinds) {
        const KindBounds& kb = l[k];
        if (kb.exact())
            std::printf("%-13s %d    lower: %s; upper: %s\n", to_string(k).c_str(), kb.lower.value,
                        provenance_text(kb.lower.provenance).c_str(),
                        provenance_text(kb.upper.provenance).c_str());
        else
            std::printf("%-13s [%d, %d]    lower: %s; upper: %s\n", to_string(k).c_str(),
                        kb.lower.value, kb.upper.value, provenance_text(kb.lower.provenance).c_str(),
                        provenance_text(kb.upper.provenance).c_str());
    }
    for (const auto& n : l.notes)
        std::printf("note: %s\n", n.c_str());
}

int cmd_invariant(const std::string& graph_path, const std::string& kind_name, bool planar,
                  bool exhaustion_only, const Budget& budget, const std::string& json_path)
{
    const Multigraph g = read_graph_file(graph_path);
    std::vector<InvariantKind> kinds;
    if (kind_name == "all")
        kinds.assign(kAllInvariants.begin(), kAllInvariants.end());
    else
        kinds.push_back(invariant_kind_from_string(kind_name));
    ComputeOptions opts;
    opts.structural.asserted_planar = planar;
    opts.exhaustion_only = exhaustion_only;
    const BoundLedger l = compute_all(g, kinds, budget, opts);
    print_ledger(l, kinds);
    if (!json_path.empty())
        write_json_file(json_path, ledger_to_json(l));
    for (InvariantKind k : kinds)
        if (!l[k].exact())
            return kExitBudget;
    return kExitPass;
}

int cmd_verify(const std::string& graph_path, const std::string& instance_path,
               const Budget& budget, const std::string& json_path)
{
    const Multigraph g = read_graph_file(graph_path);
    const Json ij = read_json_file(instance_path);
    const Instance inst = instance_from_json(ij, g);
    const WitnessCheck w = verify_witness(g, inst, budget.nodes);
    SolveResult r;
    r.nodes = w.nodes;
    r.status = w.confirmed ? SolveStatus::unsat
               : w.exceeded ? SolveStatus::budget_exceeded
                            : SolveStatus::sat;
    r.coloring = w.coloring;
    const Json out = solve_result_to_json(r, instance_hash(ij));
    if (!json_path.empty())
        write_json_file(json_path, out);
    if (w.confirmed) {
        std::printf("confirmed: no colouring exists (%llu nodes)\n",
                    static_cast<unsigned long long>(w.nodes));
        return kExitPass;
    }
    if (w.exceeded) {
        std::printf("budget exceeded after %llu nodes\n", static_cast<unsigned long long>(w.nodes));
        return kExitBudget;
    }
    std::printf("refuted: %s\n", coloring_to_json(w.coloring).dump().c_str());
    return kExitFail;
}

int cmd_experiment(const std::string& name, const ExperimentOptions& opts,
                   const std::string& json_path)
{
    const ExperimentReport r = run_experiment(name, opts);
    std::fputs(r.table.c_str(), stdout);
    if (!json_path.empty())
        write_json_file(json_path, r.json);
    if (r.outcome == Outcome::fail) {
        for (const Json& a : r.json["assertions"])
            if (a["status"] == "fail")
                std::printf("diff: %s expected %s, got %s\n", a["name"].get<std::string>().c_str(),
                            a["expected"].dump().c_str(), a["actual"].dump().c_str());
    }
    return exit_code(r.outcome);
}

int cmd_build(const std::string& name, bool list, const std::string& graph_out,
              const std::string& instance_out, const std::string& json_path)
{
    if (list) {
        for (const auto& [n, d] : construction_registry())
            std::printf("%-22s %s\n", n.c_str(), d.c_str());
        return kExitPass;
    }
    if (name.empty())
        throw InputError("build: a construction name is required (see --list)");
    const Construction c = build(name);
    const std::string text = to_text(c.graph);
    if (graph_out.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::FILE* f = std::fopen(graph_out.c_str(), "w");
        if (!f)
            throw InputError("cannot write " + graph_out);
        std::fputs(text.c_str(), f);
        std::fclose(f);
    }
    const std::string hash = graph_hash(c.graph);
    if (!instance_out.empty()) {
        if (!c.instance)
            throw InputError(name + " has no published instance");
        write_json_file(instance_out, instance_to_json(*c.instance, hash));
    }
    if (!json_path.empty()) {
        Json j{{"name", c.name}, {"graph_hash", hash}, {"planar", c.planar}};
        Json expected = Json::object();
        for (const auto& [k, v] : c.expected)
            expected[to_string(k)] = v;
        j["expected"] = expected;
        if (c.instance)
            j["instance"] = instance_to_json(*c.instance, hash);
        write_json_file(json_path, j);
    }
    return kExitPass;
}

std::string registry_help()
{
    std::string s = "Constructions:\n";
    for (const auto& [n, d] : construction_registry())
        s += "  " + n + "  " + d + "\n";
    s += "Experiments:";
    for (const auto& n : experiment_names())
        s += " " + n;
    return s + "\n";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact colouring invariants of small multigraphs"};
    app.require_subcommand(1);
    app.footer(registry_help());
    app.set_version_flag("--version", SEPCOL_VERSION);

    Budget budget;
    std::string json_path;

    std::string graph_path, kind = "all";
    bool planar = false, exhaustion_only = false;
    auto* inv = app.add_subcommand("invariant", "Compute an invariant with certificates");
    inv->add_option("graph", graph_path, "Graph file")->required();
    inv->add_option("--kind", kind, "chi, ch, chi_a, ch_ad, ch_sep, chi_conflict, chi_dp or all");
    inv->add_flag("--planar", planar, "Assert that the graph is planar");
    inv->add_flag("--exhaustion-only", exhaustion_only, "Use only trivial and degeneracy bounds");
    inv->add_option("--json", json_path, "Write the ledger JSON here");
    add_budget_flags(inv, budget);

    std::string instance_path;
    auto* ver = app.add_subcommand("verify", "Check that an instance has no colouring");
    ver->add_option("graph", graph_path, "Graph file")->required();
    ver->add_option("instance", instance_path, "Instance JSON")->required();
    ver->add_option("--json", json_path, "Write the solver result JSON here");
    add_budget_flags(ver, budget);

    std::string experiment;
    ExperimentOptions eopts;
    auto* exp = app.add_subcommand("experiment", "Run a named reproduction experiment");
    exp->add_option("name", experiment, "Experiment name")->required();
    exp->add_option("--k", eopts.k, "List size for bipartite-threshold");
    exp->add_option("--nmax", eopts.nmax, "Largest vertex count for classifier-oracle");
    exp->add_option("--count", eopts.count, "Graph count for ledger-fuzz");
    exp->add_option("--json", json_path, "Write the report JSON here");
    add_budget_flags(exp, budget);

    std::string construction, graph_out, instance_out;
    bool list = false;
    auto* bld = app.add_subcommand("build", "Write a named construction");
    bld->add_option("name", construction, "Construction name, e.g. complete:5 or fig1-glued");
    bld->add_flag("--list", list, "List construction names");
    bld->add_option("--graph", graph_out, "Write the graph file here instead of stdout");
    bld->add_option("--instance", instance_out, "Write the published instance JSON here");
    bld->add_option("--json", json_path, "Write construction metadata JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*inv)
            return cmd_invariant(graph_path, kind, planar, exhaustion_only, budget, json_path);
        if (*ver)
            return cmd_verify(graph_path, instance_path, budget, json_path);
        if (*exp) {
            eopts.budget = budget;
            eopts.samples = budget.samples;
            return cmd_experiment(experiment, eopts, json_path);
        }
        if (*bld)
            return cmd_build(construction, list, graph_out, instance_out, json_path);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kExitInput;
    } catch (const InputError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kExitInput;
    }
    return kExitInput;
}
