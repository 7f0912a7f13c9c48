#include "sepcol/solver.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sepcol {

std::string to_string(SolveStatus s)
{
    switch (s) {
    case SolveStatus::sat: return "sat";
    case SolveStatus::unsat: return "unsat";
    case SolveStatus::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

namespace {

std::vector<Color> palette(int k)
{
    std::vector<Color> out(k);
    std::iota(out.begin(), out.end(), 1);
    return out;
}

std::vector<std::array<Color, 2>> diagonal(const std::vector<Color>& a, const std::vector<Color>& b)
{
    std::vector<std::array<Color, 2>> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (b[j] < a[i])
            ++j;
        else {
            out.push_back({a[i], a[i]});
            ++i, ++j;
        }
    }
    return out;
}

}  // namespace

ConstraintSystem compile(const Multigraph& g, const Instance& inst, bool validate)
{
    if (validate)
        if (auto why = validate_instance(g, inst); !why.empty())
            throw std::invalid_argument("instance does not fit graph: " + why);
    ConstraintSystem cs;
    cs.n = g.num_vertices();
    cs.edges.resize(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        cs.edges[e].u = g.edge(e).u;
        cs.edges[e].v = g.edge(e).v;
    }
    switch (inst.kind) {
    case InstanceKind::list:
    case InstanceKind::sep_list: {
        const auto& l = std::get<ListAssignment>(inst.data);
        cs.domains = l.lists;
        for (auto& ec : cs.edges)
            ec.forbidden = diagonal(l.lists[ec.u], l.lists[ec.v]);
        break;
    }
    case InstanceKind::edge_coloring: {
        const auto& f = std::get<EdgeColoring>(inst.data);
        cs.domains.assign(cs.n, palette(f.palette));
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            cs.edges[e].forbidden = {{f.colors[e], f.colors[e]}};
        break;
    }
    case InstanceKind::adapted_list: {
        const auto& a = std::get<AdaptedListInstance>(inst.data);
        cs.domains = a.lists.lists;
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            cs.edges[e].forbidden = {{a.coloring.colors[e], a.coloring.colors[e]}};
        break;
    }
    case InstanceKind::local_partition: {
        const auto& p = std::get<LocalPartition>(inst.data);
        cs.domains.assign(cs.n, palette(p.k));
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            cs.edges[e].forbidden = {p.pairs[e]};
        break;
    }
    case InstanceKind::dp_cover: {
        const auto& c = std::get<DPCover>(inst.data);
        cs.domains.assign(cs.n, palette(c.k));
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            cs.edges[e].forbidden = c.matchings[e];
        break;
    }
    }
    return cs;
}

ConstraintSystem proper_coloring_system(const Multigraph& g, int k)
{
    const Multigraph s = g.simple();
    ConstraintSystem cs;
    cs.n = s.num_vertices();
    cs.domains.assign(cs.n, palette(k));
    for (const Edge& e : s.edges()) {
        ConstraintSystem::EdgeConstraint ec{e.u, e.v, {}};
        for (Color c = 1; c <= k; ++c)
            ec.forbidden.push_back({c, c});
        cs.edges.push_back(std::move(ec));
    }
    return cs;
}

namespace {

// Compiled form: domain values become bit positions; all constraints
// between an ordered vertex pair are merged into one table mapping a value
// index at the source to the mask of value indices it rules out at the
// target.
struct Arc {
    Vertex target;
    std::size_t offset;  // into the kills pool, one mask per source value
};

class Search {
public:
    Search(const ConstraintSystem& cs, std::uint64_t budget)
        : cs_(cs), budget_(budget)
    {
        const int n = cs.n;
        arcs_.resize(n);
        mask_.assign(n, 0);
        for (Vertex v = 0; v < n; ++v) {
            if (cs.domains[v].size() > 64)
                throw std::length_error("solver domains are limited to 64 colours");
            mask_[v] = cs.domains[v].size() == 64
                           ? ~std::uint64_t{0}
                           : (std::uint64_t{1} << cs.domains[v].size()) - 1;
        }
        auto arc = [&](Vertex from, Vertex to) -> std::uint64_t* {
            for (const Arc& a : arcs_[from])
                if (a.target == to)
                    return &kills_[a.offset];
            arcs_[from].push_back({to, kills_.size()});
            kills_.resize(kills_.size() + cs.domains[from].size(), 0);
            return &kills_[arcs_[from].back().offset];
        };
        auto position = [&](Vertex v, Color c) -> int {
            const auto& d = cs.domains[v];
            auto it = std::lower_bound(d.begin(), d.end(), c);
            return it != d.end() && *it == c ? static_cast<int>(it - d.begin()) : -1;
        };
        for (const auto& ec : cs.edges) {
            if (ec.forbidden.empty())
                continue;
            arc(ec.u, ec.v);
            arc(ec.v, ec.u);
            for (const auto& pr : ec.forbidden) {
                const int a = position(ec.u, pr[0]);
                const int b = position(ec.v, pr[1]);
                if (a < 0 || b < 0)
                    continue;
                arc(ec.u, ec.v)[a] |= std::uint64_t{1} << b;
                arc(ec.v, ec.u)[b] |= std::uint64_t{1} << a;
            }
        }
        assigned_.assign(n, -1);
    }

    SolveResult run()
    {
        SolveResult r;
        for (Vertex v = 0; v < cs_.n; ++v)
            if (mask_[v] == 0) {
                r.status = SolveStatus::unsat;
                return r;
            }
        const int outcome = descend(0);
        r.nodes = nodes_;
        if (outcome == 1) {
            r.status = SolveStatus::sat;
            r.coloring.resize(cs_.n);
            for (Vertex v = 0; v < cs_.n; ++v)
                r.coloring[v] = cs_.domains[v][assigned_[v]];
        } else {
            r.status = outcome == 0 ? SolveStatus::unsat : SolveStatus::budget_exceeded;
        }
        return r;
    }

private:
    // 1 = solved, 0 = exhausted, -1 = budget exceeded.
    int descend(int depth)
    {
        if (depth == cs_.n)
            return 1;
        Vertex best = -1;
        int best_size = 65;
        for (Vertex v = 0; v < cs_.n; ++v) {
            if (assigned_[v] >= 0)
                continue;
            const int size = std::popcount(mask_[v]);
            if (size < best_size) {
                best = v;
                best_size = size;
            }
        }
        std::uint64_t options = mask_[best];
        while (options) {
            const int value = std::countr_zero(options);
            options &= options - 1;
            if (nodes_ >= budget_)
                return -1;
            ++nodes_;
            const std::size_t mark = trail_.size();
            bool wiped = false;
            for (const Arc& a : arcs_[best]) {
                if (assigned_[a.target] >= 0)
                    continue;
                const std::uint64_t kill = kills_[a.offset + value] & mask_[a.target];
                if (!kill)
                    continue;
                trail_.emplace_back(a.target, mask_[a.target]);
                mask_[a.target] &= ~kill;
                if (mask_[a.target] == 0) {
                    wiped = true;
                    break;
                }
            }
            if (!wiped) {
                assigned_[best] = value;
                const int sub = descend(depth + 1);
                if (sub != 0)
                    return sub;
                assigned_[best] = -1;
            }
            while (trail_.size() > mark) {
                mask_[trail_.back().first] = trail_.back().second;
                trail_.pop_back();
            }
        }
        return 0;
    }

    const ConstraintSystem& cs_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::vector<Arc>> arcs_;
    std::vector<std::uint64_t> kills_;
    std::vector<std::uint64_t> mask_;
    std::vector<int> assigned_;
    std::vector<std::pair<Vertex, std::uint64_t>> trail_;
};

}  // namespace

ListColorer::ListColorer(const Multigraph& g)
{
    const int n = g.num_vertices();
    neighbors_.resize(n);
    for (Vertex v = 0; v < n; ++v)
        neighbors_[v] = g.neighbors(v);
    mask_.resize(n);
    assigned_.resize(n);
}

bool ListColorer::fits(const std::vector<std::vector<Color>>& lists)
{
    for (const auto& l : lists)
        for (Color c : l)
            if (c < 1 || c > 63)
                return false;
    return true;
}

SolveResult ListColorer::run(const std::vector<std::vector<Color>>& lists,
                             std::uint64_t node_budget)
{
    const int n = static_cast<int>(neighbors_.size());
    SolveResult r;
    for (Vertex v = 0; v < n; ++v) {
        mask_[v] = 0;
        for (Color c : lists[v])
            mask_[v] |= std::uint64_t{1} << c;
        assigned_[v] = -1;
        if (mask_[v] == 0)
            return r;
    }
    trail_.clear();
    budget_ = node_budget;
    nodes_ = 0;
    const int outcome = descend(0);
    r.nodes = nodes_;
    if (outcome == 1) {
        r.status = SolveStatus::sat;
        r.coloring.assign(assigned_.begin(), assigned_.end());
    } else {
        r.status = outcome == 0 ? SolveStatus::unsat : SolveStatus::budget_exceeded;
    }
    return r;
}

int ListColorer::descend(int depth)
{
    const int n = static_cast<int>(neighbors_.size());
    if (depth == n)
        return 1;
    Vertex best = -1;
    int best_size = 65;
    for (Vertex v = 0; v < n; ++v) {
        if (assigned_[v] >= 0)
            continue;
        const int size = std::popcount(mask_[v]);
        if (size < best_size) {
            best = v;
            best_size = size;
        }
    }
    std::uint64_t options = mask_[best];
    while (options) {
        const int color = std::countr_zero(options);
        options &= options - 1;
        if (nodes_ >= budget_)
            return -1;
        ++nodes_;
        const std::uint64_t bit = std::uint64_t{1} << color;
        const std::size_t mark = trail_.size();
        bool wiped = false;
        for (Vertex w : neighbors_[best]) {
            if (assigned_[w] >= 0 || !(mask_[w] & bit))
                continue;
            trail_.emplace_back(w, mask_[w]);
            mask_[w] &= ~bit;
            if (mask_[w] == 0) {
                wiped = true;
                break;
            }
        }
        if (!wiped) {
            assigned_[best] = color;
            const int sub = descend(depth + 1);
            if (sub != 0)
                return sub;
            assigned_[best] = -1;
        }
        while (trail_.size() > mark) {
            mask_[trail_.back().first] = trail_.back().second;
            trail_.pop_back();
        }
    }
    return 0;
}

SolveResult solve(const ConstraintSystem& cs, std::uint64_t node_budget)
{
    if (static_cast<int>(cs.domains.size()) != cs.n)
        throw std::invalid_argument("domain count differs from vertex count");
    Search search(cs, node_budget);
    SolveResult r = search.run();
    if (r.status == SolveStatus::sat && !satisfies(cs, r.coloring))
        throw std::logic_error("solver produced an invalid colouring");
    return r;
}

bool satisfies(const ConstraintSystem& cs, const std::vector<Color>& coloring)
{
    if (static_cast<int>(coloring.size()) != cs.n)
        return false;
    for (Vertex v = 0; v < cs.n; ++v)
        if (!std::binary_search(cs.domains[v].begin(), cs.domains[v].end(), coloring[v]))
            return false;
    for (const auto& ec : cs.edges)
        for (const auto& pr : ec.forbidden)
            if (coloring[ec.u] == pr[0] && coloring[ec.v] == pr[1])
                return false;
    return true;
}

std::string check_coloring(const Multigraph& g, const Instance& inst,
                           const std::vector<Color>& coloring)
{
    if (auto why = validate_instance(g, inst); !why.empty())
        return "invalid instance: " + why;
    if (static_cast<int>(coloring.size()) != g.num_vertices())
        return "colouring size differs from vertex count";
    auto in_range = [&](int k) {
        for (Color c : coloring)
            if (c < 1 || c > k)
                return false;
        return true;
    };
    auto in_lists = [&](const ListAssignment& l) {
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (std::find(l.lists[v].begin(), l.lists[v].end(), coloring[v]) == l.lists[v].end())
                return false;
        return true;
    };
    switch (inst.kind) {
    case InstanceKind::list:
    case InstanceKind::sep_list: {
        if (!in_lists(std::get<ListAssignment>(inst.data)))
            return "colour outside list";
        for (const Edge& e : g.edges())
            if (coloring[e.u] == coloring[e.v])
                return "adjacent vertices share a colour";
        return {};
    }
    case InstanceKind::edge_coloring: {
        const auto& f = std::get<EdgeColoring>(inst.data);
        if (!in_range(f.palette))
            return "colour outside palette";
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            const Edge& ed = g.edge(e);
            if (coloring[ed.u] == f.colors[e] && coloring[ed.v] == f.colors[e])
                return "edge and both endpoints share a colour";
        }
        return {};
    }
    case InstanceKind::adapted_list: {
        const auto& a = std::get<AdaptedListInstance>(inst.data);
        if (!in_lists(a.lists))
            return "colour outside list";
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            const Edge& ed = g.edge(e);
            if (coloring[ed.u] == a.coloring.colors[e] && coloring[ed.v] == a.coloring.colors[e])
                return "edge and both endpoints share a colour";
        }
        return {};
    }
    case InstanceKind::local_partition: {
        const auto& p = std::get<LocalPartition>(inst.data);
        if (!in_range(p.k))
            return "colour outside palette";
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            const Edge& ed = g.edge(e);
            if (coloring[ed.u] == p.pairs[e][0] && coloring[ed.v] == p.pairs[e][1])
                return "conflict pair realised";
        }
        return {};
    }
    case InstanceKind::dp_cover: {
        const auto& c = std::get<DPCover>(inst.data);
        if (!in_range(c.k))
            return "colour outside palette";
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            const Edge& ed = g.edge(e);
            for (const auto& pr : c.matchings[e])
                if (coloring[ed.u] == pr[0] && coloring[ed.v] == pr[1])
                    return "matched pair chosen";
        }
        return {};
    }
    }
    return "unknown kind";
}

ChromaticResult chromatic_number(const Multigraph& g, std::uint64_t node_budget)
{
    ChromaticResult out;
    const int n = g.num_vertices();
    if (n == 0) {
        out.exact = true;
        return out;
    }
    for (int k = g.num_edges() > 0 ? 2 : 1; k <= n; ++k) {
        const std::uint64_t left = node_budget == kUnlimitedNodes ? node_budget
                                                                  : node_budget - out.nodes;
        SolveResult r = solve(proper_coloring_system(g, k), left);
        out.nodes += r.nodes;
        out.value = k;
        if (r.status == SolveStatus::sat) {
            out.exact = true;
            out.coloring = std::move(r.coloring);
            return out;
        }
        if (r.status == SolveStatus::budget_exceeded)
            return out;
    }
    return out;
}

std::vector<Color> fig2_strategy_coloring(const Multigraph& g, const Fig2Layout& layout,
                                          const ListAssignment& lists)
{
    if (lists.k != 3 || static_cast<int>(lists.lists.size()) != g.num_vertices())
        throw std::invalid_argument("strategy needs a 3-list assignment on the graph");
    if (!is_separated(g, lists))
        throw std::invalid_argument("strategy needs separated lists");
    auto has = [&](Vertex v, Color c) {
        const auto& l = lists.lists[v];
        return std::binary_search(l.begin(), l.end(), c);
    };
    auto pick_avoiding = [&](Vertex v, std::initializer_list<Color> banned) {
        for (Color c : lists.lists[v])
            if (std::find(banned.begin(), banned.end(), c) == banned.end())
                return c;
        throw std::logic_error("strategy ran out of colours");
    };

    std::vector<Color> phi(g.num_vertices(), 0);
    const Color j0 = lists.lists[layout.u][0];
    phi[layout.u] = j0;
    for (int r = 0; r < 3; ++r) {
        const Color k0 = lists.lists[layout.v[r]][0];
        phi[layout.v[r]] = k0;
        for (int i = 0; i < 3; ++i) {
            const Vertex x = layout.x[r][i];
            const Vertex y = layout.y[r][i];
            if (has(x, j0) && has(x, k0)) {
                const Color ci = pick_avoiding(x, {j0, k0});
                phi[x] = ci;
                phi[y] = pick_avoiding(y, {j0, k0, ci});
                continue;
            }
            // One of the apex colours is missing from L(x); call it k.
            const Color j = has(x, k0) ? k0 : j0;
            const Color k = j == k0 ? j0 : k0;
            const Color ci = pick_avoiding(x, {j});
            std::vector<Color> target{j, k, ci};
            std::sort(target.begin(), target.end());
            if (lists.lists[y] == target) {
                phi[x] = pick_avoiding(x, {j, ci});
                phi[y] = ci;
            } else {
                phi[y] = pick_avoiding(y, {j, k, ci});
                phi[x] = ci;
            }
        }
    }
    return phi;
}

}  // namespace sepcol
