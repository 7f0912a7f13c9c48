#include "sepcol/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <thread>

#include "sepcol/structure.hpp"

namespace sepcol {

std::string to_string(InvariantKind kind)
{
    switch (kind) {
    case InvariantKind::chi: return "chi";
    case InvariantKind::ch: return "ch";
    case InvariantKind::chi_a: return "chi_a";
    case InvariantKind::ch_ad: return "ch_ad";
    case InvariantKind::ch_sep: return "ch_sep";
    case InvariantKind::chi_conflict: return "chi_conflict";
    case InvariantKind::chi_dp: return "chi_dp";
    }
    return "?";
}

InvariantKind invariant_kind_from_string(std::string_view name)
{
    for (InvariantKind k : kAllInvariants)
        if (to_string(k) == name)
            return k;
    throw std::invalid_argument("unknown invariant kind: " + std::string(name));
}

std::string to_string(Decision d)
{
    switch (d) {
    case Decision::holds: return "holds";
    case Decision::fails: return "fails";
    case Decision::exceeded: return "exceeded";
    }
    return "?";
}

std::string to_string(Provenance::Type t)
{
    switch (t) {
    case Provenance::Type::witness: return "witness";
    case Provenance::Type::exhaustion: return "exhaustion";
    case Provenance::Type::theorem: return "theorem";
    case Provenance::Type::chain: return "chain";
    }
    return "?";
}

Provenance Provenance::theorem(std::string id, std::string detail)
{
    Provenance p;
    p.type = Type::theorem;
    p.id = std::move(id);
    p.detail = std::move(detail);
    return p;
}

Provenance Provenance::chain(std::string rule)
{
    Provenance p;
    p.type = Type::chain;
    p.id = std::move(rule);
    return p;
}

Provenance Provenance::exhaustion(int k, std::uint64_t instances, std::uint64_t nodes)
{
    Provenance p;
    p.type = Type::exhaustion;
    p.k = k;
    p.instances = instances;
    p.nodes = nodes;
    return p;
}

Provenance Provenance::witness(Instance inst, int k)
{
    Provenance p;
    p.type = Type::witness;
    p.instance = std::move(inst);
    p.k = k;
    return p;
}

bool BoundLedger::raise(InvariantKind k, int value, const Provenance& p)
{
    Bound& b = (*this)[k].lower;
    if (value <= b.value)
        return false;
    b = {value, p};
    return true;
}

bool BoundLedger::lower_upper(InvariantKind k, int value, const Provenance& p)
{
    Bound& b = (*this)[k].upper;
    if (value >= b.value)
        return false;
    b = {value, p};
    return true;
}

// ------------------------------------------------------------- deciding

namespace {

using Clock = std::chrono::steady_clock;

bool uses_simple_degree(InvariantKind kind)
{
    return kind == InvariantKind::chi || kind == InvariantKind::ch ||
           kind == InvariantKind::ch_sep;
}

/// Vertices of the k-core: a vertex with fewer than k constraining edges
/// can always be coloured last, for every kind handled here.
std::vector<Vertex> k_core_vertices(const Multigraph& g, int k, bool simple_degree)
{
    const int n = g.num_vertices();
    std::vector<int> deg(n);
    for (Vertex v = 0; v < n; ++v)
        deg[v] = simple_degree ? static_cast<int>(g.neighbors(v).size()) : g.degree(v);
    std::vector<bool> gone(n, false);
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < n; ++v)
        if (deg[v] < k) {
            gone[v] = true;
            queue.push_back(v);
        }
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const Vertex v = queue[i];
        auto drop = [&](Vertex w) {
            if (!gone[w] && --deg[w] < k) {
                gone[w] = true;
                queue.push_back(w);
            }
        };
        if (simple_degree)
            for (Vertex w : g.neighbors(v))
                drop(w);
        else
            for (EdgeId e : g.incident(v))
                drop(g.other(e, v));
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (!gone[v])
            out.push_back(v);
    return out;
}

class Scanner {
public:
    Scanner(const Multigraph& h, const Budget& budget, Clock::time_point start,
            DecideResult& result)
        : h_(h), budget_(budget), start_(start), result_(result), colorer_(h)
    {
        batch_size_ = budget.workers > 1 ? static_cast<std::size_t>(budget.workers) * 64 : 1;
    }

    /// Returns false once the scan must stop.
    bool offer(Instance inst)
    {
        if (done_)
            return false;
        batch_.push_back(std::move(inst));
        if (batch_.size() >= batch_size_)
            flush();
        return !done_;
    }

    /// Same as offer(Instance::lists(l, separated)) without building the
    /// instance unless it is a witness.
    bool offer_lists(const ListAssignment& l, bool separated)
    {
        if (batch_size_ > 1 || !ListColorer::fits(l.lists))
            return offer(Instance::lists(l, separated));
        if (done_)
            return false;
        const SolveResult r = colorer_.run(l.lists, remaining());
        if (account(r))
            result_.witness = Instance::lists(l, separated);
        check_time();
        return !done_;
    }

    void flush()
    {
        if (batch_.empty() || done_)
            return;
        const std::uint64_t budget = remaining();
        std::vector<SolveResult> results(batch_.size());
        if (batch_.size() == 1) {
            results[0] = solve(compile(h_, batch_[0], false), budget);
        } else {
            std::atomic<std::size_t> next{0};
            auto work = [&] {
                for (std::size_t i = next++; i < batch_.size(); i = next++)
                    results[i] = solve(compile(h_, batch_[i], false), budget);
            };
            std::vector<std::thread> pool;
            for (int w = 0; w < budget_.workers; ++w)
                pool.emplace_back(work);
            for (auto& t : pool)
                t.join();
        }
        for (std::size_t i = 0; i < batch_.size() && !done_; ++i)
            if (account(results[i]))
                result_.witness = std::move(batch_[i]);
        batch_.clear();
        check_time();
    }

private:
    std::uint64_t remaining() const
    {
        return budget_.nodes > result_.nodes ? budget_.nodes - result_.nodes : 0;
    }

    /// Books one solved instance; true when it is the failing witness.
    bool account(const SolveResult& r)
    {
        if (result_.instances >= budget_.instances) {
            stop(Decision::exceeded, "instance budget exhausted");
            return false;
        }
        ++result_.instances;
        result_.nodes += r.nodes;
        if (r.status == SolveStatus::budget_exceeded || result_.nodes > budget_.nodes) {
            result_.nodes = std::min(result_.nodes, budget_.nodes);
            stop(Decision::exceeded, "node budget exhausted");
            return false;
        }
        if (r.status == SolveStatus::unsat) {
            stop(Decision::fails, {});
            return true;
        }
        return false;
    }

    void check_time()
    {
        if (!done_ && budget_.seconds > 0 &&
            std::chrono::duration<double>(Clock::now() - start_).count() > budget_.seconds)
            stop(Decision::exceeded, "time budget exhausted");
    }

    void stop(Decision d, std::string note)
    {
        done_ = true;
        result_.status = d;
        result_.note = std::move(note);
    }

    const Multigraph& h_;
    const Budget& budget_;
    Clock::time_point start_;
    DecideResult& result_;
    ListColorer colorer_;
    std::vector<Instance> batch_;
    std::size_t batch_size_ = 1;
    bool done_ = false;
};

void scan_instances(const Multigraph& h, InvariantKind kind, int k, const DecideOptions& options,
                    Scanner& scanner)
{
    switch (kind) {
    case InvariantKind::ch:
    case InvariantKind::ch_sep: {
        const bool sep = kind == InvariantKind::ch_sep;
        for_each_list_assignment(h, k, sep, true, [&](const ListAssignment& l) {
            return scanner.offer_lists(l, sep);
        });
        break;
    }
    case InvariantKind::chi_a:
        for_each_edge_coloring(h, k, true, [&](const EdgeColoring& f) {
            return scanner.offer(Instance::edge_coloring(f));
        });
        break;
    case InvariantKind::ch_ad:
        for_each_edge_coloring(h, std::max(1, h.num_edges()), true, [&](const EdgeColoring& f) {
            if (options.reduce_adapted) {
                bool go = true;
                for_each_reduced_list_assignment(h, f, k, [&](const ListAssignment& l) {
                    go = scanner.offer(Instance::adapted(f, l));
                    return go;
                });
                return go;
            }
            // Unreduced: any k-subset of the used edge colours plus k
            // outside colours, which behave interchangeably.
            const int used = *std::max_element(f.colors.begin(), f.colors.end());
            bool go = true;
            std::vector<std::vector<Color>> subsets;
            std::vector<Color> s(k);
            std::function<void(int, int)> pick = [&](int i, Color from) {
                if (i == k) {
                    subsets.push_back(s);
                    return;
                }
                for (Color c = from; c <= used + k; ++c) {
                    s[i] = c;
                    pick(i + 1, c + 1);
                }
            };
            pick(0, 1);
            ListAssignment l{k, std::vector<std::vector<Color>>(h.num_vertices())};
            std::function<void(int)> rec = [&](int v) {
                if (!go)
                    return;
                if (v == h.num_vertices()) {
                    EdgeColoring wide = f;
                    wide.palette = used + k;
                    go = scanner.offer(Instance::adapted(wide, l));
                    return;
                }
                for (const auto& sub : subsets) {
                    l.lists[v] = sub;
                    rec(v + 1);
                    if (!go)
                        return;
                }
            };
            rec(0);
            return go;
        });
        break;
    case InvariantKind::chi_conflict:
        for_each_local_partition(h, k, true, [&](const LocalPartition& p) {
            return scanner.offer(Instance::conflict(p));
        });
        break;
    case InvariantKind::chi_dp:
        for_each_dp_cover(h, k, options.perfect_dp ? DPMatchings::perfect : DPMatchings::partial,
                          true, [&](const DPCover& c) { return scanner.offer(Instance::dp(c)); });
        break;
    case InvariantKind::chi:
        break;
    }
    scanner.flush();
}

InstanceKind sample_kind(InvariantKind kind)
{
    switch (kind) {
    case InvariantKind::ch: return InstanceKind::list;
    case InvariantKind::ch_sep: return InstanceKind::sep_list;
    case InvariantKind::chi_a: return InstanceKind::edge_coloring;
    case InvariantKind::ch_ad: return InstanceKind::adapted_list;
    case InvariantKind::chi_conflict: return InstanceKind::local_partition;
    case InvariantKind::chi_dp: return InstanceKind::dp_cover;
    case InvariantKind::chi: break;
    }
    throw std::invalid_argument("no instances for the chromatic number");
}

void sample_fallback(const Multigraph& g, InvariantKind kind, int k, const Budget& budget,
                     DecideResult& result)
{
    for (std::uint64_t i = 0; i < budget.samples; ++i) {
        Instance inst = sample_instance(g, sample_kind(kind), k, budget.seed + i);
        SolveResult r = solve(compile(g, inst), budget.nodes);
        if (r.status == SolveStatus::unsat) {
            result.status = Decision::fails;
            result.witness = std::move(inst);
            result.note = "failing instance found by sampling";
            return;
        }
        if (r.status == SolveStatus::sat)
            ++result.samples;
    }
    result.note += "; no counterexample in " + std::to_string(result.samples) + " samples";
}

}  // namespace

DecideResult decide_at_k(const Multigraph& g, InvariantKind kind, int k, const Budget& budget,
                         const DecideOptions& options)
{
    if (k < 1)
        throw std::invalid_argument("k must be positive");
    DecideResult result;
    if (g.num_vertices() == 0)
        return result;
    const auto start = Clock::now();

    if (kind == InvariantKind::chi) {
        SolveResult r = solve(proper_coloring_system(g, k), budget.nodes);
        result.nodes = r.nodes;
        result.status = r.status == SolveStatus::sat     ? Decision::holds
                        : r.status == SolveStatus::unsat ? Decision::fails
                                                         : Decision::exceeded;
        return result;
    }

    std::vector<std::vector<Vertex>> parts;
    if (options.reduce_graph) {
        const std::vector<Vertex> core = k_core_vertices(g, k, uses_simple_degree(kind));
        const Subgraph sub = induced_subgraph(g, core);
        for (const auto& comp : components(sub.graph)) {
            if (comp.size() < 2)
                continue;
            std::vector<Vertex> vs;
            for (Vertex v : comp)
                vs.push_back(sub.to_parent[v]);
            parts.push_back(std::move(vs));
        }
    } else {
        std::vector<Vertex> all(g.num_vertices());
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            all[v] = v;
        parts.push_back(std::move(all));
    }

    for (const auto& part : parts) {
        const Subgraph sub = induced_subgraph(g, part);
        Scanner scanner(sub.graph, budget, start, result);
        try {
            scan_instances(sub.graph, kind, k, options, scanner);
        } catch (const std::length_error& e) {
            result.status = Decision::exceeded;
            result.note = e.what();
        }
        if (result.status == Decision::fails) {
            if (options.reduce_graph)
                result.witness = lift_instance(*result.witness, sub, g);
            return result;
        }
        if (result.status == Decision::exceeded)
            break;
    }
    if (result.status == Decision::exceeded && budget.samples > 0)
        sample_fallback(g, kind, k, budget, result);
    return result;
}

// -------------------------------------------------------- structural bounds

const std::vector<std::pair<std::string, std::string>>& theorem_registry()
{
    static const std::vector<std::pair<std::string, std::string>> registry{
        {"trivial-empty", "the empty graph has every invariant 0"},
        {"trivial-edgeless", "an edgeless graph has every invariant 1"},
        {"trivial-edge", "an edge forces every invariant to be at least 2"},
        {"degeneracy-multigraph", "d-degenerate (multiplicity counted) gives at most d+1 for "
                                  "chi_a, ch_ad, ch_sep, chi_conflict and chi_dp"},
        {"degeneracy-simple", "d-degenerate simple graph gives chi, ch, ch_sep at most d+1"},
        {"prop-2.8-maxdeg", "chi_conflict at most ceil(max degree / 2) + 1"},
        {"thm-2.9-orientation", "max outdegree D orientation gives ch_sep, ch_ad, chi_conflict "
                                "at most D+1"},
        {"thm-2.9-orientation-simple", "orientation of the simple graph bounds ch_sep"},
        {"thm-2.1", "ch <= 2 iff every component core is K1, an even cycle or theta(2,2,2m)"},
        {"thm-2.2", "ch_ad <= 2 iff every component core is a cycle or theta graph (simple)"},
        {"prop-2.3", "chi_conflict <= 2 iff every component core is a cycle or theta graph "
                     "(simple)"},
        {"thm-2.4", "no ordered cycle/lollipop pair implies ch_sep <= 2"},
        {"prop-2.5", "two cycles of length >= 4 sharing at most one vertex give ch_sep >= 3"},
        {"cor-2.6", "at most one cycle longer than 3 gives ch_sep <= 2"},
        {"prop-2.7-all-three", "connected, max degree <= 4, two disjoint cycles of length >= 4: "
                               "ch = ch_ad = ch_sep = chi_conflict = 3"},
        {"two-disjoint-triangles", "two vertex-disjoint triangles in one component give ch_ad >= 3"},
        {"abe-dp-two", "chi_dp <= 2 iff the multigraph is a forest"},
        {"hell-zhu", "chi_a <= 2 iff in every component removing one edge leaves a bipartite "
                      "graph"},
        {"prop-3.1", "K_{k,n}: n <= k^k - 1 gives at most k, n >= k^k gives k+1, for ch, "
                     "chi_conflict, ch_ad, ch_sep"},
        {"cor-3.2-k3n", "K_{3,n}: 3 <= n <= 26 gives 3 for ch, chi_conflict, ch_ad, ch_sep"},
        {"cor-3.3-k4n", "K_{4,n}: 4 <= n <= 20 gives ch = ch_ad = ch_sep = 3; 21 <= n <= 255 "
                        "gives all four = 4"},
        {"cor-3.4-k4n-conflict", "K_{4,n}: 19 <= n <= 255 gives chi_conflict = 4"},
        {"thm-4.2-planar", "planar and condition (i) or (ii) on short cycles: ch_ad <= 3"},
        {"cor-4.2.1-planar", "planar and condition (i) or (ii): chi_conflict <= 3"},
        {"lemma-4.4-wheel", "an induced 6-wheel gives ch_sep >= 3"},
        {"fig2-strategy", "explicit colouring strategy: ch_sep <= 3 on the glued 4-edge-coloured "
                          "gadget"},
    };
    return registry;
}

namespace {

struct Rule {
    InvariantKind small;
    InvariantKind big;
};

// small <= big for every graph.
constexpr std::array<Rule, 8> kChain{{
    {InvariantKind::ch_sep, InvariantKind::ch_ad},
    {InvariantKind::ch_ad, InvariantKind::chi_conflict},
    {InvariantKind::ch_ad, InvariantKind::ch},
    {InvariantKind::ch, InvariantKind::chi_dp},
    {InvariantKind::chi_conflict, InvariantKind::chi_dp},
    {InvariantKind::chi, InvariantKind::ch},
    {InvariantKind::chi_a, InvariantKind::chi},
    {InvariantKind::chi_a, InvariantKind::ch_ad},
}};

std::string rule_id(const Rule& r)
{
    return to_string(r.small) + "<=" + to_string(r.big);
}

bool has_disjoint_big_cycles(const Multigraph& s, std::uint64_t budget)
{
    std::uint64_t nodes = 0;
    bool exceeded = false;
    auto cycles = enumerate_cycles(s, 4, s.num_vertices(), budget, &nodes, &exceeded);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        std::vector<bool> mark(s.num_vertices(), false);
        for (Vertex v : cycles[i].vertices)
            mark[v] = true;
        for (std::size_t j = i + 1; j < cycles.size(); ++j)
            if (std::none_of(cycles[j].vertices.begin(), cycles[j].vertices.end(),
                             [&](Vertex v) { return mark[v]; }))
                return true;
    }
    return false;
}

}  // namespace

bool propagate_chain(BoundLedger& ledger)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Rule& r : kChain) {
            const Provenance p = Provenance::chain(rule_id(r));
            changed |= ledger.raise(r.big, ledger[r.small].lower.value, p);
            changed |= ledger.lower_upper(r.small, ledger[r.big].upper.value, p);
        }
    }
    for (const auto& kb : ledger.bounds)
        if (kb.lower.value > kb.upper.value)
            return false;
    return true;
}

namespace {

constexpr std::array<InvariantKind, 4> kFour{InvariantKind::ch, InvariantKind::chi_conflict,
                                             InvariantKind::ch_ad, InvariantKind::ch_sep};

void set_exact(BoundLedger& l, InvariantKind k, int v, const Provenance& p)
{
    l.raise(k, v, p);
    l.lower_upper(k, v, p);
}

BoundLedger trivial_ledger(const Multigraph& g, bool with_degeneracy)
{
    BoundLedger l;
    l.graph_hash = graph_hash(g);
    const int n = g.num_vertices();
    for (auto& kb : l.bounds) {
        kb.lower = {0, Provenance::theorem("trivial-empty")};
        kb.upper = {n + g.num_edges() + 1, Provenance::theorem("trivial-empty")};
    }
    if (n == 0) {
        for (auto& kb : l.bounds)
            kb.upper = {0, Provenance::theorem("trivial-empty")};
        return l;
    }
    if (g.num_edges() == 0) {
        for (InvariantKind k : kAllInvariants)
            set_exact(l, k, 1, Provenance::theorem("trivial-edgeless"));
        return l;
    }
    for (InvariantKind k : kAllInvariants)
        l.raise(k, 2, Provenance::theorem("trivial-edge"));
    if (with_degeneracy) {
        const int dm = degeneracy(g).value + 1;
        const int ds = degeneracy(g.simple()).value + 1;
        for (InvariantKind k : {InvariantKind::chi_a, InvariantKind::ch_ad, InvariantKind::ch_sep,
                                InvariantKind::chi_conflict, InvariantKind::chi_dp})
            l.lower_upper(k, dm, Provenance::theorem("degeneracy-multigraph",
                                                     "degeneracy " + std::to_string(dm - 1)));
        for (InvariantKind k : {InvariantKind::chi, InvariantKind::ch, InvariantKind::ch_sep})
            l.lower_upper(k, ds, Provenance::theorem("degeneracy-simple",
                                                     "degeneracy " + std::to_string(ds - 1)));
    }
    return l;
}

}  // namespace

BoundLedger structural_bounds(const Multigraph& g, const StructuralOptions& options)
{
    BoundLedger l = trivial_ledger(g, true);
    if (g.num_edges() == 0)
        return l;
    const Multigraph s = g.simple();
    const bool simple = g.is_simple();
    const auto comps = components(g);
    using P = Provenance;

    // Chromatic number by exhaustive search (small budget; skipped if it runs out).
    if (ChromaticResult chi = chromatic_number(g, 2'000'000); chi.exact) {
        l.raise(InvariantKind::chi, chi.value, P::exhaustion(chi.value, 0, chi.nodes));
        l.lower_upper(InvariantKind::chi, chi.value, P::exhaustion(chi.value, 0, chi.nodes));
    }

    const int delta = g.max_degree();
    l.lower_upper(InvariantKind::chi_conflict, (delta + 1) / 2 + 1,
                  P::theorem("prop-2.8-maxdeg", "max degree " + std::to_string(delta)));
    {
        const Orientation o = min_max_outdegree_orientation(g);
        const P p = P::theorem("thm-2.9-orientation",
                               "max outdegree " + std::to_string(o.max_outdegree));
        for (InvariantKind k : {InvariantKind::ch_sep, InvariantKind::ch_ad,
                                InvariantKind::chi_conflict})
            l.lower_upper(k, o.max_outdegree + 1, p);
        const Orientation os = min_max_outdegree_orientation(s);
        l.lower_upper(InvariantKind::ch_sep, os.max_outdegree + 1,
                      P::theorem("thm-2.9-orientation-simple",
                                 "max outdegree " + std::to_string(os.max_outdegree)));
    }

    // Two-colourability characterisations, component by component.
    bool all_two_choosable = true;
    bool all_cycle_or_theta = true;
    for (const auto& comp : comps) {
        const Subgraph sub = induced_subgraph(s, comp);
        if (sub.graph.num_edges() == 0)
            continue;
        if (!classify_two_choosable(sub.graph).two_choosable)
            all_two_choosable = false;
        const CoreResult core = core_of(sub.graph);
        if (core.core.num_vertices() > 1 &&
            !classify_cycle_or_theta(core.core, GraphMode::simple).accepted)
            all_cycle_or_theta = false;
    }
    if (all_two_choosable)
        l.lower_upper(InvariantKind::ch, 2, P::theorem("thm-2.1"));
    else
        l.raise(InvariantKind::ch, 3, P::theorem("thm-2.1"));
    if (simple) {
        if (all_cycle_or_theta) {
            l.lower_upper(InvariantKind::ch_ad, 2, P::theorem("thm-2.2"));
            l.lower_upper(InvariantKind::chi_conflict, 2, P::theorem("prop-2.3"));
        } else {
            l.raise(InvariantKind::ch_ad, 3, P::theorem("thm-2.2"));
            l.raise(InvariantKind::chi_conflict, 3, P::theorem("prop-2.3"));
        }
    }

    if (is_forest(g))
        l.lower_upper(InvariantKind::chi_dp, 2, P::theorem("abe-dp-two"));
    else
        l.raise(InvariantKind::chi_dp, 3, P::theorem("abe-dp-two"));

    // Both rules below hold per connected component only.
    bool all_hell_zhu = true;
    for (const auto& comp : comps) {
        const Subgraph sub = induced_subgraph(g, comp);
        if (find_two_disjoint_triangles(sub.graph.simple()))
            l.raise(InvariantKind::ch_ad, 3, P::theorem("two-disjoint-triangles"));
        if (simple && !hell_zhu_two_colorable(sub.graph).two_colorable)
            all_hell_zhu = false;
    }
    if (simple) {
        if (all_hell_zhu)
            l.lower_upper(InvariantKind::chi_a, 2, P::theorem("hell-zhu"));
        else
            l.raise(InvariantKind::chi_a, 3, P::theorem("hell-zhu"));
    }

    // Separation with lists of size two.
    {
        const TwoCyclesResult two = find_two_big_cycles(s, options.pattern_budget);
        if (two.status == SearchStatus::found)
            l.raise(InvariantKind::ch_sep, 3, P::theorem("prop-2.5"));
        if (find_wheel(s, 6, true))
            l.raise(InvariantKind::ch_sep, 3, P::theorem("lemma-4.4-wheel"));
        std::uint64_t nodes = 0;
        bool exceeded = false;
        const auto big = enumerate_cycles(s, 4, s.num_vertices(), options.pattern_budget, &nodes,
                                          &exceeded);
        if (!exceeded && big.size() <= 1) {
            l.lower_upper(InvariantKind::ch_sep, 2, P::theorem("cor-2.6"));
        } else if (l[InvariantKind::ch_sep].lower.value <= 2) {
            const LollipopPairResult pair = find_lollipop_cycle_pair(s, options.pattern_budget);
            if (pair.status == SearchStatus::none)
                l.lower_upper(InvariantKind::ch_sep, 2, P::theorem("thm-2.4"));
        }
        if (simple && comps.size() == 1 && delta <= 4 &&
            has_disjoint_big_cycles(s, options.pattern_budget)) {
            for (InvariantKind k : kFour)
                set_exact(l, k, 3, P::theorem("prop-2.7-all-three"));
        }
    }

    if (simple) {
        if (auto parts = complete_bipartite_parts(g)) {
            const int a = (*parts)[0];
            const int b = (*parts)[1];
            long long power = 1;
            for (int i = 0; i < a && power <= (1LL << 40); ++i)
                power *= a;
            const std::string d = "K_{" + std::to_string(a) + "," + std::to_string(b) + "}";
            if (a >= 2 && b <= power - 1)
                for (InvariantKind k : kFour)
                    l.lower_upper(k, a, P::theorem("prop-3.1", d));
            if (a >= 2 && b >= power)
                for (InvariantKind k : kFour)
                    set_exact(l, k, a + 1, P::theorem("prop-3.1", d));
            if (a == 3 && b >= 3 && b <= 26)
                for (InvariantKind k : kFour)
                    set_exact(l, k, 3, P::theorem("cor-3.2-k3n", d));
            if (a == 4 && b >= 4 && b <= 20)
                for (InvariantKind k : {InvariantKind::ch, InvariantKind::ch_ad,
                                        InvariantKind::ch_sep})
                    set_exact(l, k, 3, P::theorem("cor-3.3-k4n", d));
            if (a == 4 && b >= 21 && b <= 255)
                for (InvariantKind k : kFour)
                    set_exact(l, k, 4, P::theorem("cor-3.3-k4n", d));
            if (a == 4 && b >= 19 && b <= 255)
                set_exact(l, InvariantKind::chi_conflict, 4, P::theorem("cor-3.4-k4n-conflict", d));
        }
    }

    if (options.asserted_planar && simple) {
        const CycleCensus census = short_cycle_census(g);
        if (census.condition_i || census.condition_ii) {
            const std::string d = census.condition_i ? "condition (i)" : "condition (ii)";
            l.lower_upper(InvariantKind::ch_ad, 3, P::theorem("thm-4.2-planar", d));
            l.lower_upper(InvariantKind::chi_conflict, 3, P::theorem("cor-4.2.1-planar", d));
        }
    }

    propagate_chain(l);
    return l;
}

// ------------------------------------------------------------- computing

namespace {

void compute_into(BoundLedger& l, const Multigraph& g, InvariantKind kind, const Budget& budget,
                  const ComputeOptions& options, bool chain)
{
    while (!l[kind].exact()) {
        const int k = l[kind].lower.value;
        if (k < 1) {
            l.raise(kind, 1, Provenance::theorem("trivial-edgeless"));
            continue;
        }
        DecideResult r = decide_at_k(g, kind, k, budget, options.decide);
        if (r.status == Decision::holds) {
            l.lower_upper(kind, k, Provenance::exhaustion(k, r.instances, r.nodes));
        } else if (r.status == Decision::fails) {
            if (r.witness)
                l.raise(kind, k + 1, Provenance::witness(*r.witness, k));
            else
                l.raise(kind, k + 1, Provenance::exhaustion(k, r.instances, r.nodes));
        } else {
            std::string note = to_string(kind) + " at k=" + std::to_string(k) + ": " + r.note;
            l.notes.push_back(note);
            break;
        }
        if (chain && !propagate_chain(l))
            break;
    }
}

}  // namespace

ComputeResult compute(const Multigraph& g, InvariantKind kind, const Budget& budget,
                      const ComputeOptions& options)
{
    ComputeResult out;
    out.kind = kind;
    out.ledger = options.exhaustion_only ? trivial_ledger(g, true)
                                         : structural_bounds(g, options.structural);
    compute_into(out.ledger, g, kind, budget, options, !options.exhaustion_only);
    return out;
}

BoundLedger compute_all(const Multigraph& g, const std::vector<InvariantKind>& kinds,
                        const Budget& budget, const ComputeOptions& options)
{
    BoundLedger l = options.exhaustion_only ? trivial_ledger(g, true)
                                            : structural_bounds(g, options.structural);
    for (InvariantKind k : kinds)
        compute_into(l, g, k, budget, options, !options.exhaustion_only);
    return l;
}

WitnessCheck verify_witness(const Multigraph& g, const Instance& inst, std::uint64_t node_budget)
{
    WitnessCheck out;
    const SolveResult r = solve(compile(g, inst), node_budget);
    out.nodes = r.nodes;
    if (r.status == SolveStatus::budget_exceeded) {
        out.exceeded = true;
        return out;
    }
    if (r.status == SolveStatus::sat) {
        if (auto why = check_coloring(g, inst, r.coloring); !why.empty())
            throw std::logic_error("solver colouring rejected by direct check: " + why);
        out.coloring = r.coloring;
        return out;
    }
    out.confirmed = true;
    return out;
}

ConsistencyReport ledger_consistency(const BoundLedger& ledger, bool asserted_planar)
{
    ConsistencyReport rep;
    auto describe = [](const Bound& b) {
        std::string s = std::to_string(b.value) + " [" + to_string(b.provenance.type);
        if (!b.provenance.id.empty())
            s += " " + b.provenance.id;
        return s + "]";
    };
    for (InvariantKind k : kAllInvariants) {
        const KindBounds& kb = ledger[k];
        if (kb.lower.value > kb.upper.value)
            rep.violations.push_back(to_string(k) + ": lower " + describe(kb.lower) +
                                     " exceeds upper " + describe(kb.upper));
    }
    for (const Rule& r : kChain) {
        const KindBounds& a = ledger[r.small];
        const KindBounds& b = ledger[r.big];
        if (a.lower.value > b.upper.value)
            rep.violations.push_back(rule_id(r) + ": " + to_string(r.small) + " lower " +
                                     describe(a.lower) + " exceeds " + to_string(r.big) +
                                     " upper " + describe(b.upper));
    }
    const KindBounds& ad = ledger[InvariantKind::ch_ad];
    const KindBounds& sc = ledger[InvariantKind::chi_conflict];
    const KindBounds& sep = ledger[InvariantKind::ch_sep];
    if (ad.exact() && ad.upper.value == 2 && sc.lower.value > 2)
        rep.violations.push_back("ch_ad = 2 but chi_conflict lower " + describe(sc.lower));
    if (asserted_planar && sep.exact() && ad.exact() && sc.exact() &&
        sep.lower.value < ad.lower.value && ad.lower.value < sc.lower.value) {
        rep.planar_alarm = true;
        rep.violations.push_back("planar graph with ch_sep < ch_ad < chi_conflict: " +
                                 describe(sep.lower) + ", " + describe(ad.lower) + ", " +
                                 describe(sc.lower));
    }
    rep.ok = rep.violations.empty();
    return rep;
}

}  // namespace sepcol
