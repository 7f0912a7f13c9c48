#include "sepcol/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>
#include <stdexcept>

namespace sepcol {

std::string to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

std::string to_string(ShapeClass c)
{
    switch (c) {
    case ShapeClass::single_vertex: return "single-vertex";
    case ShapeClass::even_cycle: return "even-cycle";
    case ShapeClass::odd_cycle: return "cycle";
    case ShapeClass::theta: return "theta";
    case ShapeClass::other: return "other";
    }
    return "?";
}

CoreResult core_of(const Multigraph& g)
{
    const int n = g.num_vertices();
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    for (Vertex v = 0; v < n; ++v)
        deg[v] = g.degree(v);

    // Per component, count live vertices so a tree keeps its last vertex.
    auto comps = components(g);
    std::vector<int> comp_of(n), alive(comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) {
        alive[c] = static_cast<int>(comps[c].size());
        for (Vertex v : comps[c])
            comp_of[v] = static_cast<int>(c);
    }

    std::deque<Vertex> queue;
    for (Vertex v = 0; v < n; ++v)
        if (deg[v] == 1)
            queue.push_back(v);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        if (removed[v] || deg[v] != 1 || alive[comp_of[v]] <= 1)
            continue;
        removed[v] = true;
        --alive[comp_of[v]];
        for (EdgeId e : g.incident(v)) {
            Vertex w = g.other(e, v);
            if (removed[w])
                continue;
            if (--deg[w] == 1)
                queue.push_back(w);
        }
        deg[v] = 0;
    }

    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
        if (!removed[v])
            keep.push_back(v);
    Subgraph sub = induced_subgraph(g, keep);
    return {std::move(sub.graph), std::move(sub.to_parent)};
}

namespace {

// Walks from `start` along edge `first` through degree-2 vertices; returns
// the end vertex and the walk length.
std::pair<Vertex, int> trace_path(const Multigraph& g, Vertex start, EdgeId first)
{
    Vertex prev = start;
    EdgeId via = first;
    Vertex cur = g.other(first, start);
    int len = 1;
    while (g.degree(cur) == 2 && cur != start) {
        EdgeId next = g.incident(cur)[0] == via ? g.incident(cur)[1] : g.incident(cur)[0];
        prev = cur;
        via = next;
        cur = g.other(next, prev);
        ++len;
        if (len > g.num_edges())
            break;
    }
    return {cur, len};
}

}  // namespace

CycleOrTheta classify_cycle_or_theta(const Multigraph& g, GraphMode mode)
{
    if (g.num_vertices() == 0 || !is_connected(g))
        throw std::invalid_argument("classify_cycle_or_theta: graph must be connected");
    if (g.min_degree() < 2)
        throw std::invalid_argument("classify_cycle_or_theta: minimum degree below 2 (take the core first)");

    CycleOrTheta out;
    if (mode == GraphMode::simple && !g.is_simple())
        return out;

    std::vector<Vertex> cubic;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) == 3)
            cubic.push_back(v);
        else if (g.degree(v) != 2)
            return out;
    }
    if (cubic.empty()) {
        out.accepted = true;
        out.shape = g.num_vertices() % 2 == 0 ? ShapeClass::even_cycle : ShapeClass::odd_cycle;
        return out;
    }
    if (cubic.size() != 2)
        return out;

    const Vertex a = cubic[0], b = cubic[1];
    int unit_paths = 0;
    for (int i = 0; i < 3; ++i) {
        auto [end, len] = trace_path(g, a, g.incident(a)[i]);
        if (end != b)
            return out;
        out.theta_lengths[i] = len;
        unit_paths += len == 1;
    }
    if (mode == GraphMode::simple && unit_paths > 1)
        return out;
    std::sort(out.theta_lengths.begin(), out.theta_lengths.end());
    out.accepted = true;
    out.shape = ShapeClass::theta;
    out.theta_ends[0] = a;
    out.theta_ends[1] = b;
    return out;
}

TwoChoosableClass classify_two_choosable(const Multigraph& g)
{
    if (g.num_vertices() == 0 || !is_connected(g))
        throw std::invalid_argument("classify_two_choosable: graph must be connected");
    if (!g.is_simple())
        throw std::invalid_argument("classify_two_choosable: graph must be simple");

    TwoChoosableClass out;
    CoreResult core = core_of(g);
    if (core.core.num_vertices() == 1) {
        out.two_choosable = true;
        out.shape = ShapeClass::single_vertex;
        return out;
    }
    CycleOrTheta shape = classify_cycle_or_theta(core.core, GraphMode::simple);
    out.shape = shape.shape;
    out.theta_lengths = shape.theta_lengths;
    if (!shape.accepted) {
        out.shape = ShapeClass::other;
        return out;
    }
    if (shape.shape == ShapeClass::even_cycle) {
        out.two_choosable = true;
    } else if (shape.shape == ShapeClass::theta) {
        const auto& l = shape.theta_lengths;
        out.two_choosable = l[0] == 2 && l[1] == 2 && l[2] % 2 == 0;
    }
    return out;
}

namespace {

struct SimpleAdjacency {
    std::vector<std::vector<Vertex>> nbrs;
    std::map<std::pair<Vertex, Vertex>, EdgeId> first_edge;

    explicit SimpleAdjacency(const Multigraph& g)
        : nbrs(g.num_vertices())
    {
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            auto key = std::minmax(g.edge(e).u, g.edge(e).v);
            if (first_edge.emplace(key, e).second) {
                nbrs[key.first].push_back(key.second);
                nbrs[key.second].push_back(key.first);
            }
        }
        for (auto& l : nbrs)
            std::sort(l.begin(), l.end());
    }

    EdgeId edge(Vertex a, Vertex b) const { return first_edge.at(std::minmax(a, b)); }
    bool adjacent(Vertex a, Vertex b) const { return first_edge.count(std::minmax(a, b)) > 0; }
};

CycleWitness make_cycle(const SimpleAdjacency& adj, const std::vector<Vertex>& verts)
{
    CycleWitness c;
    c.vertices = verts;
    for (std::size_t i = 0; i < verts.size(); ++i)
        c.edges.push_back(adj.edge(verts[i], verts[(i + 1) % verts.size()]));
    return c;
}

}  // namespace

std::vector<CycleWitness> enumerate_cycles(const Multigraph& g, int min_len, int max_len,
                                           std::uint64_t budget, std::uint64_t* nodes,
                                           bool* exceeded)
{
    SimpleAdjacency adj(g);
    const int n = g.num_vertices();
    std::vector<CycleWitness> out;
    std::vector<Vertex> path;
    std::vector<bool> on_path(n, false);
    std::uint64_t local_nodes = 0;
    bool over = false;
    min_len = std::max(min_len, 3);

    auto dfs = [&](auto&& self, Vertex s) -> void {
        if (over)
            return;
        if (++local_nodes > budget) {
            over = true;
            return;
        }
        Vertex cur = path.back();
        const int len = static_cast<int>(path.size());
        for (Vertex w : adj.nbrs[cur]) {
            if (w == s) {
                if (len >= min_len && len <= max_len && path[1] < path.back())
                    out.push_back(make_cycle(adj, path));
                continue;
            }
            if (w < s || on_path[w] || len >= max_len)
                continue;
            on_path[w] = true;
            path.push_back(w);
            self(self, s);
            path.pop_back();
            on_path[w] = false;
        }
    };
    for (Vertex s = 0; s < n && !over; ++s) {
        path.assign(1, s);
        on_path[s] = true;
        dfs(dfs, s);
        on_path[s] = false;
    }
    if (nodes)
        *nodes += local_nodes;
    if (exceeded)
        *exceeded = over;
    return out;
}

namespace {

int shared_vertices(const CycleWitness& a, const CycleWitness& b)
{
    int count = 0;
    for (Vertex x : a.vertices)
        count += std::find(b.vertices.begin(), b.vertices.end(), x) != b.vertices.end();
    return count;
}

int shared_edges(const CycleWitness& a, const CycleWitness& b)
{
    int count = 0;
    for (EdgeId x : a.edges)
        count += std::find(b.edges.begin(), b.edges.end(), x) != b.edges.end();
    return count;
}

// Edge-biconnected blocks (Hopcroft-Tarjan) of the simple underlying graph,
// returned as vertex sets.
std::vector<std::vector<Vertex>> blocks(const Multigraph& g)
{
    SimpleAdjacency adj(g);
    const int n = g.num_vertices();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<Vertex, Vertex>> stack;
    std::vector<std::vector<Vertex>> out;
    int timer = 0;
    auto dfs = [&](auto&& self, Vertex v, Vertex parent) -> void {
        disc[v] = low[v] = timer++;
        for (Vertex w : adj.nbrs[v]) {
            if (w == parent)
                continue;
            if (disc[w] < 0) {
                stack.emplace_back(v, w);
                self(self, w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    std::set<Vertex> members;
                    while (true) {
                        auto e = stack.back();
                        stack.pop_back();
                        members.insert(e.first);
                        members.insert(e.second);
                        if (e.first == v && e.second == w)
                            break;
                    }
                    out.emplace_back(members.begin(), members.end());
                }
            } else if (disc[w] < disc[v]) {
                stack.emplace_back(v, w);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    for (Vertex v = 0; v < n; ++v)
        if (disc[v] < 0)
            dfs(dfs, v, -1);
    return out;
}

std::vector<CycleWitness> lift(const Subgraph& sub, std::vector<CycleWitness> cycles)
{
    for (auto& c : cycles) {
        for (auto& v : c.vertices)
            v = sub.to_parent[v];
        for (auto& e : c.edges)
            e = sub.edge_to_parent[e];
    }
    return cycles;
}

}  // namespace

TwoCyclesResult find_two_big_cycles(const Multigraph& g, std::uint64_t budget)
{
    TwoCyclesResult out;
    const Multigraph simple = g.simple();
    std::vector<int> comp_of(g.num_vertices(), -1);
    {
        const auto comps = components(simple);
        for (std::size_t c = 0; c < comps.size(); ++c)
            for (Vertex v : comps[c])
                comp_of[v] = static_cast<int>(c);
    }
    std::vector<std::pair<int, std::vector<CycleWitness>>> per_block;
    for (const auto& block : blocks(simple)) {
        if (block.size() < 4)
            continue;
        Subgraph sub = induced_subgraph(simple, block);
        bool exceeded = false;
        auto cycles = enumerate_cycles(sub.graph, 4, static_cast<int>(block.size()),
                                       budget - std::min(budget, out.nodes), &out.nodes, &exceeded);
        if (exceeded) {
            out.status = SearchStatus::budget_exceeded;
            return out;
        }
        if (!cycles.empty())
            per_block.emplace_back(comp_of[block.front()], lift(sub, std::move(cycles)));
    }
    // Simple-graph edge ids coincide with first occurrences in g.
    SimpleAdjacency adj(g);
    auto to_g = [&](const CycleWitness& c) { return make_cycle(adj, c.vertices); };
    // Cycles in distinct blocks of one component share at most a cut vertex.
    for (std::size_t a = 0; a < per_block.size(); ++a)
        for (std::size_t b = a + 1; b < per_block.size(); ++b)
            if (per_block[a].first == per_block[b].first) {
                out.status = SearchStatus::found;
                out.cycles = {to_g(per_block[a].second[0]), to_g(per_block[b].second[0])};
                return out;
            }
    for (const auto& [comp, cycles] : per_block)
        for (std::size_t i = 0; i < cycles.size(); ++i)
            for (std::size_t j = i + 1; j < cycles.size(); ++j)
                if (shared_vertices(cycles[i], cycles[j]) <= 1) {
                    out.status = SearchStatus::found;
                    out.cycles = {to_g(cycles[i]), to_g(cycles[j])};
                    return out;
                }
    out.status = SearchStatus::none;
    return out;
}

bool satisfies_lollipop_pair_conditions(const Multigraph& g, const OrderedWalk& h1,
                                        const OrderedWalk& h2)
{
    auto valid_walk = [&](const OrderedWalk& h) {
        const int d = static_cast<int>(h.vertices.size());
        if (d < 4)
            return false;
        std::set<Vertex> distinct(h.vertices.begin(), h.vertices.end());
        if (static_cast<int>(distinct.size()) != d)
            return false;
        for (int i = 0; i + 1 < d; ++i)
            if (!g.adjacent(h.vertices[i], h.vertices[i + 1]))
                return false;
        if (h.is_cycle)
            return h.close_index == 0 && g.adjacent(h.vertices.back(), h.vertices[0]);
        // 1-based j in {2, .., d-2}; cycle length d - j + 1 >= 4.
        const int j = h.close_index + 1;
        return j >= 2 && j <= d - 2 && h.cycle_length() >= 4 &&
               g.adjacent(h.vertices.back(), h.vertices[h.close_index]);
    };
    if (!valid_walk(h1) || !valid_walk(h2))
        return false;
    if (h1.vertices[0] != h2.vertices[0] || h1.second() == h2.second())
        return false;
    if ((h1.is_cycle || h2.is_cycle) && h1.second_to_last() == h2.second_to_last())
        return false;
    if (h1.is_cycle && h2.is_cycle) {
        std::set<Vertex> four{h1.second(), h1.second_to_last(), h2.second(), h2.second_to_last()};
        if (four.size() != 4)
            return false;
    }
    return true;
}

LollipopPairResult find_lollipop_cycle_pair(const Multigraph& g, std::uint64_t budget)
{
    LollipopPairResult out;
    SimpleAdjacency adj(g);
    const int n = g.num_vertices();

    for (Vertex start = 0; start < n; ++start) {
        // Keyed by (kind, second vertex, second-to-last vertex); one walk each.
        std::map<std::tuple<bool, Vertex, Vertex>, OrderedWalk> walks;
        std::vector<Vertex> path{start};
        std::vector<int> pos(n, -1);
        pos[start] = 0;
        bool over = false;
        bool done = false;

        auto record = [&](OrderedWalk w) {
            auto key = std::make_tuple(w.is_cycle, w.second(), w.second_to_last());
            if (walks.count(key))
                return;
            for (const auto& [k, other] : walks)
                if (satisfies_lollipop_pair_conditions(g, other, w)) {
                    out.first = other;
                    out.second = w;
                    done = true;
                    return;
                }
            walks.emplace(key, std::move(w));
        };
        auto dfs = [&](auto&& self) -> void {
            if (over || done)
                return;
            if (++out.nodes > budget) {
                over = true;
                return;
            }
            const int d = static_cast<int>(path.size());
            const Vertex last = path.back();
            for (Vertex w : adj.nbrs[last]) {
                if (done)
                    return;
                if (pos[w] >= 0) {
                    const int j = pos[w];
                    if (j == 0 && d >= 4)
                        record(OrderedWalk{path, true, 0});
                    else if (j >= 1 && d - j >= 4)
                        record(OrderedWalk{path, false, j});
                    continue;
                }
                pos[w] = d;
                path.push_back(w);
                self(self);
                path.pop_back();
                pos[w] = -1;
            }
        };
        dfs(dfs);
        if (done) {
            out.status = SearchStatus::found;
            return out;
        }
        if (over) {
            out.status = SearchStatus::budget_exceeded;
            return out;
        }
    }
    out.status = SearchStatus::none;
    return out;
}

CycleCensus short_cycle_census(const Multigraph& g)
{
    CycleCensus c;
    auto all = enumerate_cycles(g, 3, 5, UINT64_MAX, nullptr, nullptr);
    for (auto& cyc : all) {
        switch (cyc.vertices.size()) {
        case 3: c.triangles.push_back(std::move(cyc)); break;
        case 4: c.four_cycles.push_back(std::move(cyc)); break;
        default: c.five_cycles.push_back(std::move(cyc)); break;
        }
    }
    for (std::size_t i = 0; i < c.triangles.size(); ++i) {
        int adjacent4 = 0;
        for (const auto& q : c.four_cycles)
            adjacent4 += shared_edges(c.triangles[i], q) > 0;
        c.max_four_cycles_per_triangle = std::max(c.max_four_cycles_per_triangle, adjacent4);
        c.triangle_adjacent_four_cycle |= adjacent4 > 0;
        for (std::size_t j = i + 1; j < c.triangles.size(); ++j) {
            c.intersecting_triangles |= shared_vertices(c.triangles[i], c.triangles[j]) > 0;
            c.triangle_adjacent_triangle |= shared_edges(c.triangles[i], c.triangles[j]) > 0;
        }
    }
    for (const auto& p : c.five_cycles) {
        int adjacent3 = 0;
        for (const auto& t : c.triangles)
            adjacent3 += shared_edges(p, t) > 0;
        c.max_triangles_per_five_cycle = std::max(c.max_triangles_per_five_cycle, adjacent3);
    }
    c.condition_i = !c.intersecting_triangles && c.max_four_cycles_per_triangle <= 1;
    c.condition_ii = !c.triangle_adjacent_triangle && !c.triangle_adjacent_four_cycle &&
                     c.max_triangles_per_five_cycle <= 3;
    return c;
}

std::vector<int> Orientation::outdegrees(const Multigraph& g) const
{
    std::vector<int> out(g.num_vertices(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        ++out[forward[e] ? g.edge(e).u : g.edge(e).v];
    return out;
}

Orientation min_max_outdegree_orientation(const Multigraph& g)
{
    const int n = g.num_vertices();
    Orientation o;
    o.forward.assign(g.num_edges(), true);
    std::vector<int> out = o.outdegrees(g);
    auto tail = [&](EdgeId e) { return o.forward[e] ? g.edge(e).u : g.edge(e).v; };

    // Reverse a directed path from a maximum-outdegree vertex to a vertex of
    // outdegree <= max - 2 until none exists; the vertices reachable from a
    // maximum vertex then certify optimality.
    while (true) {
        const int top = n ? *std::max_element(out.begin(), out.end()) : 0;
        Vertex source = static_cast<Vertex>(std::find(out.begin(), out.end(), top) - out.begin());
        if (top <= 1)
            break;
        std::vector<EdgeId> via(n, -1);
        std::vector<bool> seen(n, false);
        std::deque<Vertex> queue{source};
        seen[source] = true;
        Vertex target = -1;
        while (!queue.empty() && target < 0) {
            Vertex x = queue.front();
            queue.pop_front();
            for (EdgeId e : g.incident(x)) {
                if (tail(e) != x)
                    continue;
                Vertex y = g.other(e, x);
                if (seen[y])
                    continue;
                seen[y] = true;
                via[y] = e;
                if (out[y] <= top - 2) {
                    target = y;
                    break;
                }
                queue.push_back(y);
            }
        }
        if (target < 0)
            break;
        for (Vertex y = target; y != source;) {
            EdgeId e = via[y];
            Vertex x = g.other(e, y);
            o.forward[e] = !o.forward[e];
            y = x;
        }
        --out[source];
        ++out[target];
    }
    o.max_outdegree = n ? *std::max_element(out.begin(), out.end()) : 0;
    return o;
}

Degeneracy degeneracy(const Multigraph& g)
{
    const int n = g.num_vertices();
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    for (Vertex v = 0; v < n; ++v)
        deg[v] = g.degree(v);
    Degeneracy out;
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best]))
                best = v;
        out.value = std::max(out.value, deg[best]);
        out.order.push_back(best);
        removed[best] = true;
        for (EdgeId e : g.incident(best)) {
            Vertex w = g.other(e, best);
            if (!removed[w])
                --deg[w];
        }
    }
    return out;
}

std::optional<WheelEmbedding> find_wheel(const Multigraph& g, int k, bool induced)
{
    if (k < 4)
        throw std::invalid_argument("find_wheel: k must be at least 4");
    SimpleAdjacency adj(g);
    const int rim_len = k - 1;
    for (Vertex hub = 0; hub < g.num_vertices(); ++hub) {
        const auto& nb = adj.nbrs[hub];
        if (static_cast<int>(nb.size()) < rim_len)
            continue;
        std::vector<bool> allowed(g.num_vertices(), false);
        for (Vertex w : nb)
            allowed[w] = true;
        std::vector<Vertex> path;
        std::vector<bool> used(g.num_vertices(), false);
        std::optional<WheelEmbedding> found;

        auto chordless = [&]() {
            for (int i = 0; i < rim_len; ++i)
                for (int j = i + 2; j < rim_len; ++j) {
                    if (i == 0 && j == rim_len - 1)
                        continue;
                    if (adj.adjacent(path[i], path[j]))
                        return false;
                }
            return true;
        };
        auto dfs = [&](auto&& self) -> void {
            if (found)
                return;
            const int len = static_cast<int>(path.size());
            if (len == rim_len) {
                if (adj.adjacent(path.back(), path[0]) && path[1] < path.back() &&
                    (!induced || chordless()))
                    found = WheelEmbedding{hub, path};
                return;
            }
            for (Vertex w : adj.nbrs[path.back()]) {
                if (!allowed[w] || used[w] || w < path[0])
                    continue;
                used[w] = true;
                path.push_back(w);
                self(self);
                path.pop_back();
                used[w] = false;
            }
        };
        for (Vertex s : nb) {
            path.assign(1, s);
            used[s] = true;
            dfs(dfs);
            used[s] = false;
            if (found)
                return found;
        }
    }
    return std::nullopt;
}

HellZhuResult hell_zhu_two_colorable(const Multigraph& g)
{
    if (bipartition(g))
        return {true, std::nullopt};
    for (EdgeId skip = 0; skip < g.num_edges(); ++skip) {
        Multigraph h(g.num_vertices());
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            if (e != skip)
                h.add_edge(g.edge(e).u, g.edge(e).v);
        if (bipartition(h))
            return {true, skip};
    }
    return {false, std::nullopt};
}

std::optional<std::array<int, 2>> complete_bipartite_parts(const Multigraph& g)
{
    std::vector<int> side;
    if (g.num_edges() == 0 || !g.is_simple() || !is_connected(g) || !bipartition(g, &side))
        return std::nullopt;
    const int a = static_cast<int>(std::count(side.begin(), side.end(), 0));
    const int b = g.num_vertices() - a;
    if (g.num_edges() != a * b)
        return std::nullopt;
    return std::array<int, 2>{std::min(a, b), std::max(a, b)};
}

std::optional<std::array<CycleWitness, 2>> find_two_disjoint_triangles(const Multigraph& g)
{
    auto tri = enumerate_cycles(g, 3, 3, UINT64_MAX, nullptr, nullptr);
    for (std::size_t i = 0; i < tri.size(); ++i)
        for (std::size_t j = i + 1; j < tri.size(); ++j)
            if (shared_vertices(tri[i], tri[j]) == 0)
                return std::array<CycleWitness, 2>{tri[i], tri[j]};
    return std::nullopt;
}

bool is_forest(const Multigraph& g)
{
    return g.num_edges() + static_cast<int>(components(g).size()) == g.num_vertices();
}

StructureReport analyze_structure(const Multigraph& g, std::uint64_t budget)
{
    StructureReport r;
    r.core = core_of(g);
    if (r.core.core.num_vertices() == 1) {
        r.classification = ShapeClass::single_vertex;
    } else if (is_connected(r.core.core) && r.core.core.num_vertices() > 1 &&
               r.core.core.min_degree() >= 2) {
        r.classification = classify_cycle_or_theta(r.core.core, GraphMode::multigraph).shape;
    }
    r.degeneracy = degeneracy(g);
    r.census = short_cycle_census(g);
    r.two_big_cycles = find_two_big_cycles(g, budget);
    r.lollipop_pair = find_lollipop_cycle_pair(g, budget);
    r.wheel6 = find_wheel(g, 6);
    r.hell_zhu = hell_zhu_two_colorable(g);
    r.orientation = min_max_outdegree_orientation(g);
    return r;
}

}  // namespace sepcol
