#include "sepcol/instances.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace sepcol {

std::string to_string(InstanceKind kind)
{
    switch (kind) {
    case InstanceKind::list: return "list";
    case InstanceKind::sep_list: return "sep-list";
    case InstanceKind::edge_coloring: return "edge-coloring";
    case InstanceKind::adapted_list: return "adapted-list";
    case InstanceKind::local_partition: return "local-partition";
    case InstanceKind::dp_cover: return "dp-cover";
    }
    return "?";
}

InstanceKind instance_kind_from_string(std::string_view name)
{
    for (auto kind : {InstanceKind::list, InstanceKind::sep_list, InstanceKind::edge_coloring,
                      InstanceKind::adapted_list, InstanceKind::local_partition,
                      InstanceKind::dp_cover})
        if (to_string(kind) == name)
            return kind;
    throw std::invalid_argument("unknown instance kind: " + std::string(name));
}

int Instance::k() const
{
    switch (kind) {
    case InstanceKind::list:
    case InstanceKind::sep_list: return std::get<ListAssignment>(data).k;
    case InstanceKind::edge_coloring: return std::get<EdgeColoring>(data).palette;
    case InstanceKind::adapted_list: return std::get<AdaptedListInstance>(data).lists.k;
    case InstanceKind::local_partition: return std::get<LocalPartition>(data).k;
    case InstanceKind::dp_cover: return std::get<DPCover>(data).k;
    }
    return 0;
}

Instance Instance::lists(ListAssignment l, bool separated)
{
    return {separated ? InstanceKind::sep_list : InstanceKind::list, std::move(l)};
}

Instance Instance::edge_coloring(EdgeColoring f)
{
    return {InstanceKind::edge_coloring, std::move(f)};
}

Instance Instance::adapted(EdgeColoring f, ListAssignment l)
{
    return {InstanceKind::adapted_list, AdaptedListInstance{std::move(f), std::move(l)}};
}

Instance Instance::conflict(LocalPartition p)
{
    return {InstanceKind::local_partition, std::move(p)};
}

Instance Instance::dp(DPCover c)
{
    return {InstanceKind::dp_cover, std::move(c)};
}

namespace {

std::size_t shared_count(const std::vector<Color>& a, const std::vector<Color>& b)
{
    std::size_t i = 0, j = 0, c = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (b[j] < a[i])
            ++j;
        else
            ++c, ++i, ++j;
    }
    return c;
}

std::string validate_lists(const Multigraph& g, const ListAssignment& l)
{
    if (l.k < 1)
        return "list size must be positive";
    if (static_cast<int>(l.lists.size()) != g.num_vertices())
        return "list count differs from vertex count";
    for (const auto& list : l.lists) {
        if (static_cast<int>(list.size()) != l.k)
            return "list of wrong size";
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (list[i] < 0)
                return "negative colour";
            if (i > 0 && list[i - 1] >= list[i])
                return "list not strictly increasing";
        }
    }
    return {};
}

std::string validate_edge_coloring(const Multigraph& g, const EdgeColoring& f)
{
    if (f.palette < 1)
        return "palette must be positive";
    if (static_cast<int>(f.colors.size()) != g.num_edges())
        return "edge colour count differs from edge count";
    for (Color c : f.colors)
        if (c < 1 || c > f.palette)
            return "edge colour outside palette";
    return {};
}

}  // namespace

bool is_separated(const Multigraph& g, const ListAssignment& lists)
{
    for (const Edge& e : g.edges())
        if (shared_count(lists.lists[e.u], lists.lists[e.v]) > 1)
            return false;
    return true;
}

std::string validate_instance(const Multigraph& g, const Instance& inst)
{
    switch (inst.kind) {
    case InstanceKind::list:
    case InstanceKind::sep_list: {
        const auto* l = std::get_if<ListAssignment>(&inst.data);
        if (!l)
            return "payload is not a list assignment";
        if (auto why = validate_lists(g, *l); !why.empty())
            return why;
        if (inst.kind == InstanceKind::sep_list && !is_separated(g, *l))
            return "lists are not separated";
        return {};
    }
    case InstanceKind::edge_coloring: {
        const auto* f = std::get_if<EdgeColoring>(&inst.data);
        return f ? validate_edge_coloring(g, *f) : "payload is not an edge colouring";
    }
    case InstanceKind::adapted_list: {
        const auto* a = std::get_if<AdaptedListInstance>(&inst.data);
        if (!a)
            return "payload is not an adapted list instance";
        if (auto why = validate_edge_coloring(g, a->coloring); !why.empty())
            return why;
        return validate_lists(g, a->lists);
    }
    case InstanceKind::local_partition: {
        const auto* p = std::get_if<LocalPartition>(&inst.data);
        if (!p)
            return "payload is not a local partition";
        if (p->k < 1)
            return "palette must be positive";
        if (static_cast<int>(p->pairs.size()) != g.num_edges())
            return "pair count differs from edge count";
        for (const auto& pr : p->pairs)
            for (Color c : pr)
                if (c < 1 || c > p->k)
                    return "conflict colour outside palette";
        return {};
    }
    case InstanceKind::dp_cover: {
        const auto* c = std::get_if<DPCover>(&inst.data);
        if (!c)
            return "payload is not a DP cover";
        if (c->k < 1)
            return "palette must be positive";
        if (static_cast<int>(c->matchings.size()) != g.num_edges())
            return "matching count differs from edge count";
        for (const auto& m : c->matchings) {
            std::vector<bool> left(c->k + 1), right(c->k + 1);
            for (const auto& pr : m) {
                if (pr[0] < 1 || pr[0] > c->k || pr[1] < 1 || pr[1] > c->k)
                    return "matched colour outside palette";
                if (left[pr[0]] || right[pr[1]])
                    return "pairs do not form a matching";
                left[pr[0]] = right[pr[1]] = true;
            }
        }
        return {};
    }
    }
    return "unknown kind";
}

// ---------------------------------------------------------------- lists

namespace {

struct ListEnumerator {
    const Multigraph& g;
    int n;
    int k;
    bool separated;
    const Visitor<ListAssignment>& visit;
    Split split;

    std::vector<std::uint32_t> adj;
    std::vector<int> count;
    std::vector<std::uint32_t> shared;
    std::vector<std::uint32_t> columns;
    std::uint32_t full = 0;
    bool stopped = false;

    std::uint32_t mask_of_key(std::uint32_t key) const
    {
        std::uint32_t m = 0;
        for (int w = 0; w < n; ++w)
            if (key >> (n - 1 - w) & 1u)
                m |= 1u << w;
        return m;
    }

    void emit()
    {
        ListAssignment l{k, std::vector<std::vector<Color>>(n)};
        for (std::size_t c = 0; c < columns.size(); ++c)
            for (int v = 0; v < n; ++v)
                if (columns[c] >> v & 1u)
                    l.lists[v].push_back(static_cast<Color>(c + 1));
        if (!visit(l))
            stopped = true;
    }

    // Columns are colour classes listed in non-increasing key order, where a
    // key reads the class as a binary number with vertex 0 most significant.
    // The lowest unsaturated vertex must lie in the next class.
    void run(std::uint32_t bound, int depth)
    {
        if (stopped)
            return;
        int v0 = 0;
        while (v0 < n && (full >> v0 & 1u))
            ++v0;
        if (v0 == n) {
            emit();
            return;
        }
        const int low_bits = n - 1 - v0;
        const std::uint32_t head = 1u << low_bits;
        std::int64_t index = -1;
        for (std::int64_t r = (std::int64_t{1} << low_bits) - 1; r >= 0 && !stopped; --r) {
            const std::uint32_t key = head | static_cast<std::uint32_t>(r);
            if (key > bound)
                continue;
            const std::uint32_t col = mask_of_key(key);
            if (col & full)
                continue;
            if (separated) {
                bool ok = true;
                for (int v = 0; v < n && ok; ++v)
                    if ((col >> v & 1u) && (col & adj[v] & shared[v]))
                        ok = false;
                if (!ok)
                    continue;
            }
            ++index;
            if (depth == 0 && index % split.parts != split.part)
                continue;
            std::vector<std::uint32_t> saved_shared;
            if (separated)
                saved_shared = shared;
            const std::uint32_t saved_full = full;
            for (int v = 0; v < n; ++v) {
                if (!(col >> v & 1u))
                    continue;
                if (++count[v] == k)
                    full |= 1u << v;
                if (separated)
                    shared[v] |= col & adj[v];
            }
            columns.push_back(col);
            run(key, depth + 1);
            columns.pop_back();
            for (int v = 0; v < n; ++v)
                if (col >> v & 1u)
                    --count[v];
            full = saved_full;
            if (separated)
                shared = std::move(saved_shared);
        }
    }
};

void for_each_k_subset(int universe, int k, const std::function<bool(const std::vector<Color>&)>& f)
{
    std::vector<Color> s(k);
    std::iota(s.begin(), s.end(), 1);
    if (k > universe)
        return;
    while (true) {
        if (!f(s))
            return;
        int i = k - 1;
        while (i >= 0 && s[i] == universe - k + i + 1)
            --i;
        if (i < 0)
            return;
        ++s[i];
        for (int j = i + 1; j < k; ++j)
            s[j] = s[j - 1] + 1;
    }
}

void raw_lists(const Multigraph& g, int k, bool separated, const Visitor<ListAssignment>& visit,
               Split split)
{
    const int n = g.num_vertices();
    std::vector<std::vector<Color>> subsets;
    for_each_k_subset(n * k, k, [&](const std::vector<Color>& s) {
        subsets.push_back(s);
        return true;
    });
    ListAssignment l{k, std::vector<std::vector<Color>>(n)};
    bool stopped = false;
    std::function<void(int)> rec = [&](int v) {
        if (stopped)
            return;
        if (v == n) {
            if (!visit(l))
                stopped = true;
            return;
        }
        for (std::size_t i = 0; i < subsets.size() && !stopped; ++i) {
            if (v == 0 && static_cast<int>(i % split.parts) != split.part)
                continue;
            l.lists[v] = subsets[i];
            bool ok = true;
            if (separated)
                for (EdgeId e : g.incident(v)) {
                    const Vertex w = g.other(e, v);
                    if (w < v && shared_count(l.lists[v], l.lists[w]) > 1) {
                        ok = false;
                        break;
                    }
                }
            if (ok)
                rec(v + 1);
        }
    };
    rec(0);
}

void check_split(Split split)
{
    if (split.parts < 1 || split.part < 0 || split.part >= split.parts)
        throw std::invalid_argument("invalid split");
}

}  // namespace

void for_each_list_assignment(const Multigraph& g, int k, bool separated, bool canonical,
                              const Visitor<ListAssignment>& visit, Split split)
{
    if (k < 1)
        throw std::invalid_argument("list size must be positive");
    check_split(split);
    const int n = g.num_vertices();
    if (n == 0) {
        if (split.part == 0)
            visit(ListAssignment{k, {}});
        return;
    }
    if (!canonical) {
        raw_lists(g, k, separated, visit, split);
        return;
    }
    if (n > 24)
        throw std::length_error("canonical list enumeration supports at most 24 vertices");
    ListEnumerator en{g, n, k, separated, visit, split, {}, {}, {}, {}, 0, false};
    en.adj.assign(n, 0);
    for (const Edge& e : g.edges()) {
        en.adj[e.u] |= 1u << e.v;
        en.adj[e.v] |= 1u << e.u;
    }
    en.count.assign(n, 0);
    en.shared.assign(n, 0);
    en.run(~0u, 0);
}

// ------------------------------------------------------- edge colourings

void for_each_edge_coloring(const Multigraph& g, int palette, bool canonical,
                            const Visitor<EdgeColoring>& visit, Split split)
{
    if (palette < 1)
        throw std::invalid_argument("palette must be positive");
    check_split(split);
    const int m = g.num_edges();
    EdgeColoring f{palette, std::vector<Color>(m, 0)};
    bool stopped = false;
    // Splitting happens at the first edge with more than one option.
    std::function<void(int, int, bool)> rec = [&](int e, int used, bool split_done) {
        if (stopped)
            return;
        if (e == m) {
            if ((split_done || split.part == 0) && !visit(f))
                stopped = true;
            return;
        }
        const int top = canonical ? std::min(used + 1, palette) : palette;
        for (int c = 1; c <= top && !stopped; ++c) {
            if (!split_done && top > 1 && (c - 1) % split.parts != split.part)
                continue;
            f.colors[e] = c;
            rec(e + 1, std::max(used, c), split_done || top > 1);
        }
    };
    rec(0, 0, split.parts == 1);
}

// ------------------------------------------------------ local partitions

void for_each_local_partition(const Multigraph& g, int k, bool canonical,
                              const Visitor<LocalPartition>& visit, Split split)
{
    if (k < 1)
        throw std::invalid_argument("palette must be positive");
    check_split(split);
    const int m = g.num_edges();
    LocalPartition p{k, std::vector<std::array<Color, 2>>(m)};
    std::vector<int> used(g.num_vertices(), 0);
    bool stopped = false;
    std::function<void(int, bool)> rec = [&](int e, bool split_done) {
        if (stopped)
            return;
        if (e == m) {
            if ((split_done || split.part == 0) && !visit(p))
                stopped = true;
            return;
        }
        const Edge& ed = g.edge(e);
        const int top_u = canonical ? std::min(used[ed.u] + 1, k) : k;
        const int saved_u = used[ed.u];
        const int saved_v = used[ed.v];
        for (int a = 1; a <= top_u && !stopped; ++a) {
            used[ed.u] = std::max(saved_u, a);
            const int top_v = canonical ? std::min(saved_v + 1, k) : k;
            for (int b = 1; b <= top_v && !stopped; ++b) {
                const int options = top_u * top_v;
                const int index = (a - 1) * top_v + (b - 1);
                if (!split_done && options > 1 && index % split.parts != split.part)
                    continue;
                used[ed.v] = std::max(saved_v, b);
                p.pairs[e] = {a, b};
                rec(e + 1, split_done || options > 1);
            }
        }
        used[ed.u] = saved_u;
        used[ed.v] = saved_v;
    };
    rec(0, split.parts == 1);
}

// ------------------------------------------------------------ DP covers

namespace {

// A matching is a bitmask over cells (a-1)*k + (b-1).
using MatchMask = std::uint32_t;

std::vector<MatchMask> all_matchings(int k, bool perfect_only)
{
    std::vector<MatchMask> out;
    const int cells = k * k;
    for (MatchMask m = 0; m < (1u << cells); ++m) {
        int rows = 0, cols = 0;
        bool ok = true;
        for (int c = 0; c < cells && ok; ++c) {
            if (!(m >> c & 1u))
                continue;
            const int a = c / k, b = c % k;
            if (rows >> a & 1 || cols >> b & 1)
                ok = false;
            rows |= 1 << a;
            cols |= 1 << b;
        }
        if (ok && (!perfect_only || std::popcount(static_cast<unsigned>(rows)) == k))
            out.push_back(m);
    }
    return out;
}

std::vector<std::vector<int>> all_permutations(int k)
{
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

MatchMask image(MatchMask m, int k, const std::vector<int>& pu, const std::vector<int>& pv)
{
    MatchMask out = 0;
    for (int c = 0; c < k * k; ++c)
        if (m >> c & 1u)
            out |= 1u << (pu[c / k] * k + pv[c % k]);
    return out;
}

std::vector<std::array<Color, 2>> pairs_of(MatchMask m, int k)
{
    std::vector<std::array<Color, 2>> out;
    for (int c = 0; c < k * k; ++c)
        if (m >> c & 1u)
            out.push_back({c / k + 1, c % k + 1});
    return out;
}

struct DPEnumerator {
    const Multigraph& g;
    int k;
    bool canonical;
    bool perfect;
    const Visitor<DPCover>& visit;
    Split split;

    std::vector<MatchMask> options;
    std::vector<std::vector<int>> perms;
    std::vector<MatchMask> chosen;
    bool stopped = false;

    // Partial mode: brute force over (S_k)^n; a prefix is pruned as soon as
    // some group element maps it strictly below itself.
    bool partial_prefix_minimal(int len) const
    {
        const int n = g.num_vertices();
        const int p = static_cast<int>(perms.size());
        std::vector<int> idx(n, 0);
        while (true) {
            for (int e = 0; e < len; ++e) {
                const Edge& ed = g.edge(e);
                const MatchMask im = image(chosen[e], k, perms[idx[ed.u]], perms[idx[ed.v]]);
                if (im < chosen[e])
                    return false;
                if (im > chosen[e])
                    break;
            }
            int v = 0;
            while (v < n && ++idx[v] == p)
                idx[v++] = 0;
            if (v == n)
                return true;
        }
    }

    // Perfect mode: spanning-forest edges are fixed to the identity; the
    // remaining symmetry is one palette permutation per component acting by
    // conjugation on the other edges.
    std::vector<bool> tree_edge;
    std::vector<int> component_of;
    MatchMask identity = 0;

    void build_forest()
    {
        const int n = g.num_vertices();
        tree_edge.assign(g.num_edges(), false);
        component_of.assign(n, -1);
        int comp = 0;
        for (Vertex r = 0; r < n; ++r) {
            if (component_of[r] >= 0)
                continue;
            component_of[r] = comp;
            std::vector<Vertex> queue{r};
            for (std::size_t i = 0; i < queue.size(); ++i)
                for (EdgeId e : g.incident(queue[i])) {
                    const Vertex w = g.other(e, queue[i]);
                    if (component_of[w] < 0) {
                        component_of[w] = comp;
                        tree_edge[e] = true;
                        queue.push_back(w);
                    }
                }
            ++comp;
        }
        for (int a = 0; a < k; ++a)
            identity |= 1u << (a * k + a);
    }

    bool perfect_prefix_minimal(int len) const
    {
        std::vector<int> comps;
        for (int e = 0; e < len; ++e)
            if (!tree_edge[e])
                comps.push_back(component_of[g.edge(e).u]);
        std::sort(comps.begin(), comps.end());
        comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
        for (int c : comps)
            for (const auto& p : perms) {
                for (int e = 0; e < len; ++e) {
                    if (tree_edge[e] || component_of[g.edge(e).u] != c)
                        continue;
                    const MatchMask im = image(chosen[e], k, p, p);
                    if (im < chosen[e])
                        return false;
                    if (im > chosen[e])
                        break;
                }
            }
        return true;
    }

    void emit()
    {
        DPCover c{k, {}};
        c.matchings.reserve(chosen.size());
        for (MatchMask m : chosen)
            c.matchings.push_back(pairs_of(m, k));
        if (!visit(c))
            stopped = true;
    }

    void run(int e, bool split_done)
    {
        if (stopped)
            return;
        if (e == g.num_edges()) {
            if (split_done || split.part == 0)
                emit();
            return;
        }
        if (canonical && perfect && tree_edge[e]) {
            chosen[e] = identity;
            run(e + 1, split_done);
            return;
        }
        const int count = static_cast<int>(options.size());
        for (int i = 0; i < count && !stopped; ++i) {
            if (!split_done && count > 1 && i % split.parts != split.part)
                continue;
            chosen[e] = options[i];
            if (canonical) {
                const bool minimal =
                    perfect ? perfect_prefix_minimal(e + 1) : partial_prefix_minimal(e + 1);
                if (!minimal)
                    continue;
            }
            run(e + 1, split_done || count > 1);
        }
    }
};

}  // namespace

void for_each_dp_cover(const Multigraph& g, int k, DPMatchings matchings, bool canonical,
                       const Visitor<DPCover>& visit, Split split)
{
    if (k < 1)
        throw std::invalid_argument("palette must be positive");
    if (k > kMaxDPPalette || g.num_edges() > kMaxDPEdges)
        throw std::length_error("DP cover enumeration is capped at k <= 3 and 9 edges");
    check_split(split);
    const bool perfect = matchings == DPMatchings::perfect;
    DPEnumerator en{g, k, canonical, perfect, visit, split, all_matchings(k, perfect),
                    all_permutations(k), std::vector<MatchMask>(g.num_edges(), 0), false, {}, {}, 0};
    if (canonical && !perfect) {
        double group = 1;
        for (int v = 0; v < g.num_vertices(); ++v)
            group *= static_cast<double>(en.perms.size());
        double raw = 1;
        for (int e = 0; e < g.num_edges(); ++e)
            raw *= static_cast<double>(en.options.size());
        if (group > 5e4 || raw > 4e6)
            throw std::length_error("partial DP cover canonicalisation exceeds its cap");
    }
    if (perfect)
        en.build_forest();
    en.run(0, split.parts == 1);
}

// ------------------------------------------------------- adapted lists

AdmissibleFamily adapted_domain_reduction(const Multigraph& g, const EdgeColoring& f, int k)
{
    AdmissibleFamily out{k, std::vector<std::vector<Color>>(g.num_vertices()),
                         std::vector<bool>(g.num_vertices())};
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        auto& cs = out.incident_colors[v];
        for (EdgeId e : g.incident(v))
            cs.push_back(f.colors[e]);
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        out.free[v] = static_cast<int>(cs.size()) < k;
    }
    return out;
}

std::vector<Color> free_list(const AdmissibleFamily& family, const EdgeColoring& f, Vertex v)
{
    Color top = f.palette;
    for (Color c : f.colors)
        top = std::max(top, c);
    std::vector<Color> out = family.incident_colors[v];
    const int missing = family.k - static_cast<int>(out.size());
    for (int i = 0; i < missing; ++i)
        out.push_back(top + 1 + v * family.k + i);
    return out;
}

void for_each_reduced_list_assignment(const Multigraph& g, const EdgeColoring& f, int k,
                                      const Visitor<ListAssignment>& visit)
{
    const AdmissibleFamily family = adapted_domain_reduction(g, f, k);
    const int n = g.num_vertices();
    std::vector<std::vector<std::vector<Color>>> choices(n);
    for (Vertex v = 0; v < n; ++v) {
        if (family.free[v]) {
            choices[v].push_back(free_list(family, f, v));
            continue;
        }
        const auto& cs = family.incident_colors[v];
        for_each_k_subset(static_cast<int>(cs.size()), k, [&](const std::vector<Color>& s) {
            std::vector<Color> list;
            for (Color i : s)
                list.push_back(cs[i - 1]);
            choices[v].push_back(std::move(list));
            return true;
        });
    }
    ListAssignment l{k, std::vector<std::vector<Color>>(n)};
    bool stopped = false;
    std::function<void(int)> rec = [&](int v) {
        if (stopped)
            return;
        if (v == n) {
            if (!visit(l))
                stopped = true;
            return;
        }
        for (const auto& c : choices[v]) {
            l.lists[v] = c;
            rec(v + 1);
            if (stopped)
                return;
        }
    };
    rec(0);
}

// ------------------------------------------------------------- sampling

namespace {

std::vector<Color> random_subset(std::mt19937_64& rng, int universe, int k)
{
    std::vector<Color> all(universe);
    std::iota(all.begin(), all.end(), 1);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
}

ListAssignment sample_separated(const Multigraph& g, int k, int universe, std::mt19937_64& rng)
{
    const int n = g.num_vertices();
    ListAssignment l{k, std::vector<std::vector<Color>>(n)};
    Color fresh = universe;
    std::vector<Color> order(universe);
    std::iota(order.begin(), order.end(), 1);
    for (Vertex v = 0; v < n; ++v) {
        std::shuffle(order.begin(), order.end(), rng);
        auto& list = l.lists[v];
        for (Color c : order) {
            if (static_cast<int>(list.size()) == k)
                break;
            bool ok = true;
            for (EdgeId e : g.incident(v)) {
                const Vertex w = g.other(e, v);
                if (w >= v)
                    continue;
                const auto& lw = l.lists[w];
                if (!std::binary_search(lw.begin(), lw.end(), c))
                    continue;
                if (std::any_of(list.begin(), list.end(), [&](Color x) {
                        return std::binary_search(lw.begin(), lw.end(), x);
                    })) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                list.push_back(c);
        }
        while (static_cast<int>(list.size()) < k)
            list.push_back(++fresh);
        std::sort(list.begin(), list.end());
    }
    return l;
}

}  // namespace

Instance sample_instance(const Multigraph& g, InstanceKind kind, int k, std::uint64_t seed,
                         const SampleOptions& options)
{
    if (k < 1)
        throw std::invalid_argument("k must be positive");
    std::mt19937_64 rng(seed);
    const int n = g.num_vertices();
    const int m = g.num_edges();
    const int universe = options.universe > 0 ? options.universe : 2 * k + 1;
    if (universe < k)
        throw std::invalid_argument("colour universe smaller than list size");
    auto uniform = [&](int top) {
        return static_cast<Color>(std::uniform_int_distribution<int>(1, top)(rng));
    };
    switch (kind) {
    case InstanceKind::list: {
        ListAssignment l{k, {}};
        for (Vertex v = 0; v < n; ++v)
            l.lists.push_back(random_subset(rng, universe, k));
        return Instance::lists(std::move(l), false);
    }
    case InstanceKind::sep_list:
        return Instance::lists(sample_separated(g, k, universe, rng), true);
    case InstanceKind::edge_coloring: {
        EdgeColoring f{k, std::vector<Color>(m)};
        for (Color& c : f.colors)
            c = uniform(k);
        return Instance::edge_coloring(std::move(f));
    }
    case InstanceKind::adapted_list: {
        const int palette = options.palette > 0 ? options.palette : k + 1;
        EdgeColoring f{palette, std::vector<Color>(m)};
        for (Color& c : f.colors)
            c = uniform(palette);
        const AdmissibleFamily family = adapted_domain_reduction(g, f, k);
        ListAssignment l{k, std::vector<std::vector<Color>>(n)};
        for (Vertex v = 0; v < n; ++v) {
            if (family.free[v]) {
                l.lists[v] = free_list(family, f, v);
                continue;
            }
            auto cs = family.incident_colors[v];
            std::shuffle(cs.begin(), cs.end(), rng);
            cs.resize(k);
            std::sort(cs.begin(), cs.end());
            l.lists[v] = std::move(cs);
        }
        return Instance::adapted(std::move(f), std::move(l));
    }
    case InstanceKind::local_partition: {
        LocalPartition p{k, std::vector<std::array<Color, 2>>(m)};
        for (auto& pr : p.pairs) {
            pr[0] = uniform(k);
            pr[1] = uniform(k);
        }
        return Instance::conflict(std::move(p));
    }
    case InstanceKind::dp_cover: {
        DPCover c{k, std::vector<std::vector<std::array<Color, 2>>>(m)};
        std::vector<Color> perm(k);
        for (auto& match : c.matchings) {
            std::iota(perm.begin(), perm.end(), 1);
            std::shuffle(perm.begin(), perm.end(), rng);
            for (int a = 0; a < k; ++a)
                match.push_back({a + 1, perm[a]});
        }
        return Instance::dp(std::move(c));
    }
    }
    throw std::invalid_argument("unknown instance kind");
}

// ------------------------------------------------------------- lifting

Instance lift_instance(const Instance& inst, const Subgraph& sub, const Multigraph& parent)
{
    const int n = parent.num_vertices();
    const int m = parent.num_edges();
    std::vector<int> sub_edge(m, -1);
    for (std::size_t i = 0; i < sub.edge_to_parent.size(); ++i)
        sub_edge[sub.edge_to_parent[i]] = static_cast<int>(i);
    std::vector<int> sub_vertex(n, -1);
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
        sub_vertex[sub.to_parent[i]] = static_cast<int>(i);

    auto lift_lists = [&](const ListAssignment& l) {
        Color top = 0;
        for (const auto& list : l.lists)
            for (Color c : list)
                top = std::max(top, c);
        ListAssignment out{l.k, std::vector<std::vector<Color>>(n)};
        for (Vertex v = 0; v < n; ++v) {
            if (sub_vertex[v] >= 0) {
                out.lists[v] = l.lists[sub_vertex[v]];
                continue;
            }
            for (int i = 0; i < l.k; ++i)
                out.lists[v].push_back(++top);
        }
        return out;
    };
    auto lift_coloring = [&](const EdgeColoring& f) {
        EdgeColoring out{f.palette, std::vector<Color>(m, 1)};
        for (EdgeId e = 0; e < m; ++e)
            if (sub_edge[e] >= 0)
                out.colors[e] = f.colors[sub_edge[e]];
        return out;
    };

    switch (inst.kind) {
    case InstanceKind::list:
    case InstanceKind::sep_list:
        return Instance::lists(lift_lists(std::get<ListAssignment>(inst.data)),
                               inst.kind == InstanceKind::sep_list);
    case InstanceKind::edge_coloring:
        return Instance::edge_coloring(lift_coloring(std::get<EdgeColoring>(inst.data)));
    case InstanceKind::adapted_list: {
        const auto& a = std::get<AdaptedListInstance>(inst.data);
        EdgeColoring f = lift_coloring(a.coloring);
        ListAssignment l = lift_lists(a.lists);
        // Outside vertices hold colours absent from f, so they never block.
        Color top = f.palette;
        for (const auto& list : a.lists.lists)
            for (Color c : list)
                top = std::max(top, c);
        for (Vertex v = 0; v < n; ++v)
            if (sub_vertex[v] < 0)
                for (int i = 0; i < l.k; ++i)
                    l.lists[v][i] = ++top;
        return Instance::adapted(std::move(f), std::move(l));
    }
    case InstanceKind::local_partition: {
        const auto& p = std::get<LocalPartition>(inst.data);
        LocalPartition out{p.k, std::vector<std::array<Color, 2>>(m, {1, 1})};
        for (EdgeId e = 0; e < m; ++e)
            if (sub_edge[e] >= 0) {
                out.pairs[e] = p.pairs[sub_edge[e]];
                // Keep the pair attached to the same endpoints if the
                // subgraph stored the edge the other way round.
                const Edge& pe = parent.edge(e);
                const Edge& se = sub.graph.edge(sub_edge[e]);
                if (sub.to_parent[se.u] != pe.u)
                    std::swap(out.pairs[e][0], out.pairs[e][1]);
            }
        return Instance::conflict(std::move(out));
    }
    case InstanceKind::dp_cover: {
        const auto& c = std::get<DPCover>(inst.data);
        DPCover out{c.k, std::vector<std::vector<std::array<Color, 2>>>(m)};
        for (EdgeId e = 0; e < m; ++e)
            if (sub_edge[e] >= 0) {
                out.matchings[e] = c.matchings[sub_edge[e]];
                const Edge& pe = parent.edge(e);
                const Edge& se = sub.graph.edge(sub_edge[e]);
                if (sub.to_parent[se.u] != pe.u) {
                    for (auto& pr : out.matchings[e])
                        std::swap(pr[0], pr[1]);
                    std::sort(out.matchings[e].begin(), out.matchings[e].end());
                }
            }
        return Instance::dp(std::move(out));
    }
    }
    throw std::invalid_argument("unknown instance kind");
}

}  // namespace sepcol
