#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sepcol/graph.hpp"
#include "sepcol/instances.hpp"
#include "sepcol/solver.hpp"

namespace sepcol {

enum class InvariantKind { chi, ch, chi_a, ch_ad, ch_sep, chi_conflict, chi_dp };

inline constexpr std::array<InvariantKind, 7> kAllInvariants{
    InvariantKind::chi,    InvariantKind::ch,           InvariantKind::chi_a,
    InvariantKind::ch_ad,  InvariantKind::ch_sep,       InvariantKind::chi_conflict,
    InvariantKind::chi_dp};

std::string to_string(InvariantKind kind);
InvariantKind invariant_kind_from_string(std::string_view name);

struct Budget {
    std::uint64_t nodes = 200'000'000;      // solver nodes per decision
    std::uint64_t instances = 50'000'000;   // adversarial instances per decision
    double seconds = 0;                     // wall time per decision; 0 = unlimited
    std::uint64_t samples = 0;              // random instances tried after exhaustion stops
    std::uint64_t seed = 1;
    int workers = 1;
};

struct DecideOptions {
    /// Restrict adapted lists to subsets of incident edge colours.
    bool reduce_adapted = true;
    /// Decide on the k-core of each component and lift the witness.
    bool reduce_graph = true;
    /// Enumerate perfect matchings only for DP covers.
    bool perfect_dp = true;
};

enum class Decision { holds, fails, exceeded };

std::string to_string(Decision d);

struct DecideResult {
    Decision status = Decision::holds;
    std::optional<Instance> witness;  // when fails (not for chi)
    std::uint64_t instances = 0;
    std::uint64_t nodes = 0;
    std::uint64_t samples = 0;        // random instances tried, all colourable
    std::string note;
};

/// Whether every adversarial instance of size k admits a colouring. The
/// witness of a failure is the first failing canonical instance of the
/// reduced graph, lifted to g.
DecideResult decide_at_k(const Multigraph& g, InvariantKind kind, int k, const Budget& budget,
                         const DecideOptions& options = {});

struct Provenance {
    enum class Type { witness, exhaustion, theorem, chain };
    Type type = Type::theorem;
    std::string id;                 // theorem or chain rule id
    std::optional<Instance> instance;
    int k = 0;                      // exhaustion / witness size
    std::uint64_t instances = 0;
    std::uint64_t nodes = 0;
    std::string detail;

    static Provenance theorem(std::string id, std::string detail = {});
    static Provenance chain(std::string rule);
    static Provenance exhaustion(int k, std::uint64_t instances, std::uint64_t nodes);
    static Provenance witness(Instance inst, int k);
};

std::string to_string(Provenance::Type t);

struct Bound {
    int value = 0;
    Provenance provenance;
};

struct KindBounds {
    Bound lower;
    Bound upper;
    bool exact() const { return lower.value == upper.value; }
};

struct BoundLedger {
    std::string graph_hash;
    std::array<KindBounds, 7> bounds{};
    std::vector<std::string> notes;  // sampling evidence and similar; never bounds

    KindBounds& operator[](InvariantKind k) { return bounds[static_cast<int>(k)]; }
    const KindBounds& operator[](InvariantKind k) const { return bounds[static_cast<int>(k)]; }

    /// Raises a lower bound; returns true if it changed.
    bool raise(InvariantKind k, int value, const Provenance& p);
    /// Lowers an upper bound; returns true if it changed.
    bool lower_upper(InvariantKind k, int value, const Provenance& p);
};

struct StructuralOptions {
    /// The caller vouches for planarity; enables the planar theorems.
    bool asserted_planar = false;
    std::uint64_t pattern_budget = 2'000'000;
};

/// Documented theorem ids used in ledger provenance.
const std::vector<std::pair<std::string, std::string>>& theorem_registry();

/// Bounds from structural theorems only, closed under the chain rules.
BoundLedger structural_bounds(const Multigraph& g, const StructuralOptions& options = {});

/// Closes the ledger under the inequality chain. Returns false if some
/// kind ends with lower > upper.
bool propagate_chain(BoundLedger& ledger);

struct ComputeOptions {
    StructuralOptions structural;
    DecideOptions decide;
    /// Skip theorem bounds other than trivial ones and the plain chromatic
    /// number, so values come from exhaustion alone.
    bool exhaustion_only = false;
};

struct ComputeResult {
    InvariantKind kind = InvariantKind::chi;
    BoundLedger ledger;
    bool exact() const { return ledger[kind].exact(); }
    int lower() const { return ledger[kind].lower.value; }
    int upper() const { return ledger[kind].upper.value; }
};

/// Starts from structural bounds and decides upward from the lower bound
/// until the bounds meet or the budget runs out.
ComputeResult compute(const Multigraph& g, InvariantKind kind, const Budget& budget,
                      const ComputeOptions& options = {});

/// Computes every kind in `kinds` on one shared ledger.
BoundLedger compute_all(const Multigraph& g, const std::vector<InvariantKind>& kinds,
                        const Budget& budget, const ComputeOptions& options = {});

struct WitnessCheck {
    bool confirmed = false;          // no colouring exists
    bool exceeded = false;
    std::vector<Color> coloring;     // when refuted
    std::uint64_t nodes = 0;
};

/// Re-solves the instance from scratch; confirmed iff it has no colouring.
WitnessCheck verify_witness(const Multigraph& g, const Instance& inst,
                            std::uint64_t node_budget = kUnlimitedNodes);

struct ConsistencyReport {
    bool ok = true;
    bool planar_alarm = false;
    std::vector<std::string> violations;
};

/// Checks lower <= upper per kind, the inequality chain across kinds, and
/// that an adaptable choice number of 2 forces single conflict number 2.
/// With asserted planarity, exact values ch_sep < ch_ad < chi_conflict
/// raise the planar alarm.
ConsistencyReport ledger_consistency(const BoundLedger& ledger, bool asserted_planar = false);

}  // namespace sepcol
