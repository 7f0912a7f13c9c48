#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sepcol/constructions.hpp"
#include "sepcol/enumerate.hpp"
#include "sepcol/invariants.hpp"

using namespace sepcol;

namespace {

std::vector<Multigraph> graphs_upto(int nmax)
{
    std::vector<Multigraph> out;
    for (int n = 1; n <= nmax; ++n)
        for (const Multigraph& g : simple_graphs(n, false))
            out.push_back(g);
    return out;
}

/// Whether every size-k instance is colourable, by enumeration and the
/// brute-force colouring oracle. Returns nullopt outside the feasible range.
std::optional<bool> brute_holds(const Multigraph& g, InvariantKind kind, int k)
{
    const int n = g.num_vertices();
    const int m = g.num_edges();
    bool ok = true;
    auto lists = [&](bool sep) {
        for_each_list_assignment(g, k, sep, true, [&](const ListAssignment& l) {
            ok = oracle::colorable(g, Instance::lists(l, sep));
            return ok;
        });
    };
    switch (kind) {
    case InvariantKind::chi:
        return oracle::chromatic_number(g) <= k;
    case InvariantKind::ch:
    case InvariantKind::ch_sep:
        if (k > 2 && n > 3)
            return std::nullopt;
        lists(kind == InvariantKind::ch_sep);
        return ok;
    case InvariantKind::chi_a:
        for_each_edge_coloring(g, k, false, [&](const EdgeColoring& f) {
            ok = oracle::colorable(g, Instance::edge_coloring(f));
            return ok;
        });
        return ok;
    case InvariantKind::chi_conflict:
        if (k > 2 && m > 4)
            return std::nullopt;
        for_each_local_partition(g, k, false, [&](const LocalPartition& p) {
            ok = oracle::colorable(g, Instance::conflict(p));
            return ok;
        });
        return ok;
    case InvariantKind::chi_dp:
        if (k > 2 || m > kMaxDPEdges)
            return std::nullopt;
        // Partial matchings: also exercises the domination argument.
        for_each_dp_cover(g, k, DPMatchings::partial, false, [&](const DPCover& c) {
            ok = oracle::colorable(g, Instance::dp(c));
            return ok;
        });
        return ok;
    case InvariantKind::ch_ad:
        // Fresh list colours never conflict, so {1..n*k} is a large enough universe.
        if (n > 3 || k > 2)
            return std::nullopt;
        for_each_edge_coloring(g, std::max(1, m), true, [&](const EdgeColoring& f) {
            for_each_list_assignment(g, k, false, false, [&](const ListAssignment& l) {
                ok = oracle::colorable(g, Instance::adapted(f, l));
                return ok;
            });
            return ok;
        });
        return ok;
    }
    return std::nullopt;
}

Budget small_budget()
{
    Budget b;
    b.nodes = 20'000'000;
    b.instances = 2'000'000;
    return b;
}

int exact_value(const Multigraph& g, InvariantKind kind, bool exhaustion_only)
{
    ComputeOptions o;
    o.exhaustion_only = exhaustion_only;
    const ComputeResult r = compute(g, kind, small_budget(), o);
    REQUIRE(r.exact());
    return r.lower();
}

}  // namespace

TEST_CASE("decide_at_k agrees with brute force on all graphs up to four vertices")
{
    int compared = 0;
    for (const Multigraph& g : graphs_upto(4))
        for (InvariantKind kind : kAllInvariants)
            for (int k = 1; k <= 3; ++k) {
                const auto expect = brute_holds(g, kind, k);
                if (!expect)
                    continue;
                const DecideResult r = decide_at_k(g, kind, k, small_budget());
                CAPTURE(to_text(g));
                CAPTURE(to_string(kind));
                CAPTURE(k);
                REQUIRE(r.status != Decision::exceeded);
                CHECK((r.status == Decision::holds) == *expect);
                ++compared;
            }
    CHECK(compared > 250);
}

TEST_CASE("graph reduction does not change decisions")
{
    DecideOptions plain;
    plain.reduce_graph = false;
    for (const Multigraph& g : graphs_upto(4))
        for (InvariantKind kind : kAllInvariants)
            for (int k = 1; k <= 2; ++k) {
                const DecideResult a = decide_at_k(g, kind, k, small_budget());
                const DecideResult b = decide_at_k(g, kind, k, small_budget(), plain);
                CAPTURE(to_text(g));
                CAPTURE(to_string(kind));
                CHECK(a.status == b.status);
            }
}

TEST_CASE("reduced and unreduced adaptable choosability agree")
{
    DecideOptions unreduced;
    unreduced.reduce_adapted = false;
    for (const Multigraph& g : graphs_upto(4))
        for (int k = 1; k <= 2; ++k) {
            const DecideResult a = decide_at_k(g, InvariantKind::ch_ad, k, small_budget());
            const DecideResult b = decide_at_k(g, InvariantKind::ch_ad, k, small_budget(), unreduced);
            CAPTURE(to_text(g));
            REQUIRE(b.status != Decision::exceeded);
            CHECK(a.status == b.status);
        }
}

TEST_CASE("perfect DP covers dominate partial covers")
{
    DecideOptions partial;
    partial.perfect_dp = false;
    int compared = 0;
    std::vector<Multigraph> gs = graphs_upto(4);
    gs.push_back(Multigraph(2, {{0, 1}, {0, 1}}));
    gs.push_back(Multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}}));
    for (const Multigraph& g : gs)
        for (int k = 1; k <= 3; ++k) {
            const DecideResult a = decide_at_k(g, InvariantKind::chi_dp, k, small_budget());
            const DecideResult b = decide_at_k(g, InvariantKind::chi_dp, k, small_budget(), partial);
            REQUIRE(a.status != Decision::exceeded);
            if (b.status == Decision::exceeded)
                continue;
            CAPTURE(to_text(g));
            CHECK(a.status == b.status);
            compared += k == 3;
        }
    CHECK(compared > 5);
}

TEST_CASE("failure witnesses re-verify with a doubled budget")
{
    int witnesses = 0;
    for (const Multigraph& g : graphs_upto(4))
        for (InvariantKind kind : kAllInvariants) {
            if (kind == InvariantKind::chi)
                continue;
            for (int k = 1; k <= 2; ++k) {
                const Budget b = small_budget();
                const DecideResult r = decide_at_k(g, kind, k, b);
                if (r.status != Decision::fails)
                    continue;
                REQUIRE(r.witness);
                CHECK(validate_instance(g, *r.witness).empty());
                CHECK(r.witness->k() == k);
                const WitnessCheck w = verify_witness(g, *r.witness, 2 * b.nodes);
                CHECK(w.confirmed);
                CHECK_FALSE(oracle::colorable(g, *r.witness));
                ++witnesses;
            }
        }
    CHECK(witnesses > 50);
}

TEST_CASE("complete graphs K1 to K4 by exhaustion")
{
    // Rows K1..K4; columns ch, chi_conflict, ch_ad, ch_sep.
    const int expected[4][4] = {{1, 1, 1, 1}, {2, 2, 2, 2}, {3, 2, 2, 2}, {4, 3, 3, 2}};
    const InvariantKind cols[4] = {InvariantKind::ch, InvariantKind::chi_conflict,
                                   InvariantKind::ch_ad, InvariantKind::ch_sep};
    for (int n = 1; n <= 4; ++n)
        for (int c = 0; c < 4; ++c) {
            CAPTURE(n);
            CAPTURE(to_string(cols[c]));
            CHECK(exact_value(complete(n), cols[c], true) == expected[n - 1][c]);
        }
}

TEST_CASE("structural bounds bracket exhaustive values")
{
    std::vector<Multigraph> gs = graphs_upto(4);
    for (const Multigraph& g : simple_graphs(5, true))
        if (g.num_edges() <= 7)
            gs.push_back(g);
    for (const Multigraph& g : gs) {
        const BoundLedger s = structural_bounds(g);
        for (InvariantKind kind : kAllInvariants) {
            if (kind == InvariantKind::chi_dp && g.num_edges() > kMaxDPEdges)
                continue;
            const int v = exact_value(g, kind, true);
            CAPTURE(to_text(g));
            CAPTURE(to_string(kind));
            CHECK(s[kind].lower.value <= v);
            CHECK(v <= s[kind].upper.value);
        }
    }
}

TEST_CASE("exact values are monotone under adding an edge")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const Multigraph g = random_simple_graph(5, 0.4, 300 + trial);
        std::vector<Edge> missing;
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v)
                if (!g.adjacent(u, v))
                    missing.push_back({u, v});
        if (missing.empty())
            continue;
        Multigraph h = g;
        const Edge e = missing[rng() % missing.size()];
        h.add_edge(e.u, e.v);
        const BoundLedger a = compute_all(g, {kAllInvariants.begin(), kAllInvariants.end()}, small_budget());
        const BoundLedger b = compute_all(h, {kAllInvariants.begin(), kAllInvariants.end()}, small_budget());
        for (InvariantKind kind : kAllInvariants)
            if (a[kind].exact() && b[kind].exact()) {
                CAPTURE(to_string(kind));
                CHECK(a[kind].lower.value <= b[kind].lower.value);
            }
    }
}

TEST_CASE("exact values are invariant under relabelling")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 15; ++trial) {
        const Multigraph g = random_simple_graph(5, 0.5, 900 + trial);
        std::vector<Vertex> perm(5);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Multigraph h = relabel(g, perm);
        for (InvariantKind kind : {InvariantKind::ch, InvariantKind::ch_sep, InvariantKind::ch_ad,
                                   InvariantKind::chi_conflict, InvariantKind::chi_a})
            CHECK(exact_value(g, kind, true) == exact_value(h, kind, true));
    }
}

TEST_CASE("chain propagation and consistency")
{
    BoundLedger l = structural_bounds(complete(4));
    CHECK(propagate_chain(l));
    CHECK(ledger_consistency(l).ok);
    for (InvariantKind kind : kAllInvariants)
        CHECK(l[kind].lower.value <= l[kind].upper.value);
    CHECK(l[InvariantKind::ch_sep].upper.value <= l[InvariantKind::ch_ad].upper.value);

    BoundLedger bad = l;
    bad.raise(InvariantKind::ch_sep, 4, Provenance::theorem("test"));
    bad.lower_upper(InvariantKind::ch_ad, 3, Provenance::theorem("test"));
    CHECK_FALSE(propagate_chain(bad));
}

TEST_CASE("provenance ids come from the registries")
{
    std::set<std::string> ids;
    for (const auto& [id, _] : theorem_registry())
        ids.insert(id);
    for (const Multigraph& g : {complete(4), cycle(5), wheel(6), complete_bipartite(2, 4), two_c4_bridge()}) {
        const BoundLedger l = compute_all(g, {kAllInvariants.begin(), kAllInvariants.end()}, small_budget());
        for (InvariantKind kind : kAllInvariants)
            for (const Bound* b : {&l[kind].lower, &l[kind].upper}) {
                if (b->provenance.type == Provenance::Type::theorem)
                    CHECK(ids.count(b->provenance.id) == 1);
                if (b->provenance.type == Provenance::Type::witness) {
                    REQUIRE(b->provenance.instance);
                    CHECK(verify_witness(g, *b->provenance.instance).confirmed);
                }
            }
    }
}

TEST_CASE("budget exhaustion yields an interval")
{
    Budget tiny;
    tiny.nodes = 10;
    tiny.instances = 3;
    ComputeOptions o;
    o.exhaustion_only = true;
    const ComputeResult r = compute(complete(5), InvariantKind::chi_conflict, tiny, o);
    CHECK_FALSE(r.exact());
    CHECK(r.lower() < r.upper());
    CHECK(decide_at_k(complete(5), InvariantKind::ch, 4, tiny).status == Decision::exceeded);
}
