#include "sepcol/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sepcol {

Multigraph::Multigraph(int n)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    incidence_.resize(n);
}

Multigraph::Multigraph(int n, std::vector<Edge> edges)
    : Multigraph(n)
{
    edges_.reserve(edges.size());
    for (const Edge& e : edges)
        add_edge(e.u, e.v);
}

EdgeId Multigraph::add_edge(Vertex u, Vertex v)
{
    const int n = num_vertices();
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v)
        throw std::invalid_argument("loops are not allowed");
    const EdgeId id = num_edges();
    edges_.push_back({u, v});
    incidence_[u].push_back(id);
    incidence_[v].push_back(id);
    return id;
}

int Multigraph::max_degree() const
{
    int best = 0;
    for (Vertex v = 0; v < num_vertices(); ++v)
        best = std::max(best, degree(v));
    return best;
}

int Multigraph::min_degree() const
{
    if (num_vertices() == 0)
        return 0;
    int best = degree(0);
    for (Vertex v = 1; v < num_vertices(); ++v)
        best = std::min(best, degree(v));
    return best;
}

std::vector<Vertex> Multigraph::neighbors(Vertex v) const
{
    std::vector<Vertex> out;
    out.reserve(incidence_[v].size());
    for (EdgeId e : incidence_[v])
        out.push_back(other(e, v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Multigraph::adjacent(Vertex u, Vertex v) const
{
    return multiplicity(u, v) > 0;
}

int Multigraph::multiplicity(Vertex u, Vertex v) const
{
    const Vertex a = degree(u) <= degree(v) ? u : v;
    const Vertex b = a == u ? v : u;
    int count = 0;
    for (EdgeId e : incidence_[a])
        count += other(e, a) == b;
    return count;
}

bool Multigraph::is_simple() const
{
    for (Vertex v = 0; v < num_vertices(); ++v)
        if (neighbors(v).size() != incidence_[v].size())
            return false;
    return true;
}

Multigraph Multigraph::simple() const
{
    Multigraph out(num_vertices());
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const Edge& e : edges_)
        if (seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second)
            out.add_edge(e.u, e.v);
    return out;
}

Subgraph induced_subgraph(const Multigraph& g, std::span<const Vertex> vertices)
{
    std::vector<int> index(g.num_vertices(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index[vertices[i]] = static_cast<int>(i);
    Subgraph sub{Multigraph(static_cast<int>(vertices.size())),
                 {vertices.begin(), vertices.end()}, {}};
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (index[ed.u] >= 0 && index[ed.v] >= 0) {
            sub.graph.add_edge(index[ed.u], index[ed.v]);
            sub.edge_to_parent.push_back(e);
        }
    }
    return sub;
}

std::vector<std::vector<Vertex>> components(const Multigraph& g)
{
    const int n = g.num_vertices();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        std::vector<Vertex> members{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (EdgeId e : g.incident(members[i])) {
                Vertex w = g.other(e, members[i]);
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    members.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool is_connected(const Multigraph& g)
{
    return components(g).size() <= 1;
}

bool bipartition(const Multigraph& g, std::vector<int>* side)
{
    std::vector<int> s(g.num_vertices(), -1);
    for (Vertex r = 0; r < g.num_vertices(); ++r) {
        if (s[r] >= 0)
            continue;
        s[r] = 0;
        std::vector<Vertex> stack{r};
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(x)) {
                Vertex y = g.other(e, x);
                if (s[y] < 0) {
                    s[y] = 1 - s[x];
                    stack.push_back(y);
                } else if (s[y] == s[x]) {
                    return false;
                }
            }
        }
    }
    if (side)
        *side = std::move(s);
    return true;
}

Multigraph relabel(const Multigraph& g, std::span<const Vertex> perm)
{
    if (static_cast<int>(perm.size()) != g.num_vertices())
        throw std::invalid_argument("permutation size mismatch");
    Multigraph out(g.num_vertices());
    for (const Edge& e : g.edges())
        out.add_edge(perm[e.u], perm[e.v]);
    return out;
}

Multigraph parse_graph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        auto fail = [&](const char* what) {
            throw std::invalid_argument("graph line " + std::to_string(line_no) + ": " + what);
        };
        if (word == "vertices") {
            if (n >= 0)
                fail("duplicate vertices line");
            if (!(ls >> n) || n < 0)
                fail("bad vertex count");
        } else if (word == "edge") {
            if (n < 0)
                fail("edge before vertices line");
            Edge e{};
            if (!(ls >> e.u >> e.v))
                fail("bad edge");
            if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
                fail("vertex id out of range");
            if (e.u == e.v)
                fail("loop");
            edges.push_back(e);
        } else {
            fail("unknown directive");
        }
        std::string rest;
        if (ls >> rest && rest[0] != '#')
            fail("trailing tokens");
    }
    if (n < 0)
        throw std::invalid_argument("graph: missing vertices line");
    return Multigraph(n, std::move(edges));
}

std::string to_text(const Multigraph& g)
{
    std::string out = "vertices " + std::to_string(g.num_vertices()) + "\n";
    for (const Edge& e : g.edges())
        out += "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

Multigraph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string graph_hash(const Multigraph& g)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : to_text(g)) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace sepcol
