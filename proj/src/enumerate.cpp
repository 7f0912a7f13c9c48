#include "sepcol/enumerate.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace sepcol {

namespace {

constexpr int kMaxCanonical = 11;

using Rows = std::vector<std::uint32_t>;

Rows adjacency_rows(const Multigraph& g)
{
    Rows rows(g.num_vertices(), 0);
    for (const Edge& e : g.edges()) {
        rows[e.u] |= 1u << e.v;
        rows[e.v] |= 1u << e.u;
    }
    return rows;
}

/// Colour refinement: classes sorted by an invariant signature until stable.
std::vector<int> refined_classes(const Rows& rows)
{
    const int n = static_cast<int>(rows.size());
    std::vector<int> cls(n, 0);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{cls[v]};
            std::vector<int> nb;
            for (int w = 0; w < n; ++w)
                if (rows[v] >> w & 1)
                    nb.push_back(cls[w]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            s.push_back(-1 - static_cast<int>(nb.size()));
            sig[v] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> ids;
        for (const auto& [s, v] : sig)
            ids.emplace(s, 0);
        int next = 0;
        for (auto& [s, id] : ids)
            id = next++;
        std::vector<int> fresh(n);
        for (const auto& [s, v] : sig)
            fresh[v] = ids[s];
        const bool stable = std::set<int>(fresh.begin(), fresh.end()).size() ==
                            std::set<int>(cls.begin(), cls.end()).size();
        cls = std::move(fresh);
        if (stable)
            break;
    }
    return cls;
}

}  // namespace

std::uint64_t canonical_code(const Multigraph& g)
{
    const int n = g.num_vertices();
    if (n > kMaxCanonical)
        throw std::invalid_argument("canonical_code: at most 11 vertices");
    const Rows rows = adjacency_rows(g);
    const std::vector<int> cls = refined_classes(rows);

    // Vertices grouped by class; every permutation within classes is tried.
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v)
        order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return cls[a] != cls[b] ? cls[a] < cls[b] : a < b; });
    std::vector<std::pair<int, int>> cells;  // [begin, end) in order
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && cls[order[j]] == cls[order[i]])
            ++j;
        cells.emplace_back(i, j);
        i = j;
    }

    std::uint64_t best = 0;
    bool first = true;
    auto code_of = [&](const std::vector<int>& perm) {
        std::uint64_t code = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                code = code << 1 | (rows[perm[i]] >> perm[j] & 1);
        return code;
    };
    std::vector<int> perm = order;
    auto rec = [&](auto&& self, std::size_t cell) -> void {
        if (cell == cells.size()) {
            const std::uint64_t c = code_of(perm);
            if (first || c > best) {
                best = c;
                first = false;
            }
            return;
        }
        auto b = perm.begin() + cells[cell].first;
        auto e = perm.begin() + cells[cell].second;
        std::sort(b, e);
        do {
            self(self, cell + 1);
        } while (std::next_permutation(b, e));
    };
    rec(rec, 0);
    return best;
}

std::vector<Multigraph> simple_graphs(int n, bool connected_only)
{
    if (n < 0 || n > 8)
        throw std::invalid_argument("simple_graphs: n must be in 0..8");
    // Extend every class on n-1 vertices by a new vertex with each
    // neighbourhood; deduplicate by canonical code.
    std::map<std::uint64_t, Multigraph> level{{0, Multigraph(0)}};
    for (int m = 1; m <= n; ++m) {
        std::map<std::uint64_t, Multigraph> next;
        for (const auto& [code, g] : level) {
            for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
                Multigraph h(m);
                for (const Edge& e : g.edges())
                    h.add_edge(e.u, e.v);
                for (Vertex v = 0; v < m - 1; ++v)
                    if (mask >> v & 1)
                        h.add_edge(v, m - 1);
                next.emplace(canonical_code(h), std::move(h));
            }
        }
        level = std::move(next);
    }
    std::vector<Multigraph> out;
    for (auto& [code, g] : level)
        if (!connected_only || is_connected(g))
            out.push_back(std::move(g));
    return out;
}

Multigraph random_simple_graph(int n, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Multigraph g(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (coin(rng))
                g.add_edge(i, j);
    return g;
}

}  // namespace sepcol
