#include "sepcol/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace sepcol {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

}  // namespace

Multigraph complete(int n)
{
    require(n >= 0, "complete: n must be non-negative");
    Multigraph g(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

Multigraph complete_bipartite(int a, int b)
{
    require(a >= 0 && b >= 0, "complete_bipartite: sizes must be non-negative");
    Multigraph g(a + b);
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j)
            g.add_edge(i, a + j);
    return g;
}

Multigraph complete_multipartite(int k, int n)
{
    require(k >= 1 && n >= 1, "complete_multipartite: k and n must be positive");
    Multigraph g(k * n);
    for (Vertex i = 0; i < k * n; ++i)
        for (Vertex j = i + 1; j < k * n; ++j)
            if (i / n != j / n)
                g.add_edge(i, j);
    return g;
}

Multigraph cycle(int n)
{
    require(n >= 3, "cycle: n must be at least 3");
    Multigraph g(n);
    for (Vertex i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

Multigraph path(int n)
{
    require(n >= 1, "path: n must be positive");
    Multigraph g(n);
    for (Vertex i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

Multigraph theta(int i, int j, int k)
{
    require(i >= 1 && j >= 1 && k >= 1, "theta: path lengths must be positive");
    require((i == 1) + (j == 1) + (k == 1) <= 1, "theta: at most one path of length 1");
    Multigraph g(2 + (i - 1) + (j - 1) + (k - 1));
    Vertex next = 2;
    for (int len : {i, j, k}) {
        Vertex prev = 0;
        for (int s = 1; s < len; ++s) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, 1);
    }
    return g;
}

Multigraph wheel(int k)
{
    require(k >= 4, "wheel: k must be at least 4");
    Multigraph g = cycle(k - 1);
    Multigraph out(k);
    for (const Edge& e : g.edges())
        out.add_edge(e.u, e.v);
    for (Vertex v = 0; v < k - 1; ++v)
        out.add_edge(v, k - 1);
    return out;
}

Multigraph cactus_two_triangles()
{
    return Multigraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
}

Multigraph two_c4_bridge()
{
    return Multigraph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {3, 4}});
}

// ------------------------------------------------------ blocking gadget

Fig1Gadget fig1_gadget(Color a, Color b, Color c)
{
    require(a != b && b != c && a != c && a >= 1 && b >= 1 && c >= 1 && a <= 3 && b <= 3 &&
                c <= 3,
            "fig1_gadget: parameters must be a permutation of 1, 2, 3");
    Fig1Gadget out;
    out.params = {a, b, c};
    out.graph = Multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 2}, {2, 3}, {2, 3}});
    out.partition.k = 3;
    out.partition.pairs = {{a, a}, {a, a}, {a, a}, {b, b}, {c, b}, {c, c}, {c, b}};
    return out;
}

bool blocking_property_check(const Fig1Gadget& gadget)
{
    const auto [a, b, c] = gadget.params;
    const Multigraph& g = gadget.graph;
    auto conflicts = [&](const std::vector<Color>& phi) {
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            const Edge& ed = g.edge(e);
            const auto& p = gadget.partition.pairs[e];
            if (phi[ed.u] == p[0] && phi[ed.v] == p[1])
                return true;
        }
        return false;
    };
    for (Color px : {b, c})
        for (Color pz : {b, c})
            for (Color py = 1; py <= gadget.partition.k; ++py) {
                std::vector<Color> phi(4);
                phi[gadget.u] = a;
                phi[gadget.x] = px;
                phi[gadget.y] = py;
                phi[gadget.z] = pz;
                if (!conflicts(phi))
                    return false;
            }
    return true;
}

Construction fig1_glued()
{
    Construction out;
    out.name = "fig1-glued";
    out.planar = true;
    out.graph = Multigraph(10);
    LocalPartition p{3, {}};
    const std::array<std::array<Color, 3>, 3> params{{{1, 2, 3}, {2, 1, 3}, {3, 1, 2}}};
    for (int i = 0; i < 3; ++i) {
        const Fig1Gadget gad = fig1_gadget(params[i][0], params[i][1], params[i][2]);
        if (!blocking_property_check(gad))
            throw std::logic_error("fig1_glued: copy " + std::to_string(i) +
                                   " fails the blocking property");
        const std::array<Vertex, 4> map{0, 1 + 3 * i, 2 + 3 * i, 3 + 3 * i};
        for (EdgeId e = 0; e < gad.graph.num_edges(); ++e) {
            const Edge& ed = gad.graph.edge(e);
            out.graph.add_edge(map[ed.u], map[ed.v]);
            p.pairs.push_back(gad.partition.pairs[e]);
        }
    }
    out.instance = Instance::conflict(std::move(p));
    out.instance_kind = InvariantKind::chi_conflict;
    out.expected = {{InvariantKind::ch_sep, 3},
                    {InvariantKind::ch_ad, 3},
                    {InvariantKind::chi_conflict, 4}};
    return out;
}

// ------------------------------------------------- edge-coloured gadget

Fig2Gadget fig2_gadget(Color a, Color b, Color c)
{
    require(a != b && b != c && a != c && a >= 1 && b >= 1 && c >= 1 && a <= 3 && b <= 3 &&
                c <= 3,
            "fig2_gadget: parameters must be a permutation of 1, 2, 3");
    constexpr Color four = 4;
    Fig2Gadget out;
    out.params = {a, b, c};
    out.graph = Multigraph(8);
    out.coloring.palette = 4;
    auto add = [&](Vertex s, Vertex t, Color col) {
        out.graph.add_edge(s, t);
        out.coloring.colors.push_back(col);
    };
    const std::array<Color, 3> v_colors{c, b, four};
    const std::array<Color, 3> xy_colors{b, c, b};
    for (int i = 1; i <= 3; ++i) {
        const Vertex x = 2 * i;
        const Vertex y = 2 * i + 1;
        add(0, x, a);
        add(0, y, a);
        add(1, x, v_colors[i - 1]);
        add(1, y, v_colors[i - 1]);
        add(x, y, xy_colors[i - 1]);
    }
    return out;
}

Construction fig2_glued()
{
    Construction out;
    out.name = "fig2-glued";
    out.planar = true;
    out.graph = Multigraph(22);
    EdgeColoring f{4, {}};
    Fig2Layout layout;
    layout.u = 0;
    const std::array<std::array<Color, 3>, 3> params{{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}};
    for (int r = 0; r < 3; ++r) {
        const Fig2Gadget gad = fig2_gadget(params[r][0], params[r][1], params[r][2]);
        std::array<Vertex, 8> map{};
        map[0] = 0;
        map[1] = 1 + 7 * r;
        layout.v[r] = map[1];
        for (int i = 1; i <= 3; ++i) {
            map[2 * i] = 2 + 7 * r + 2 * (i - 1);
            map[2 * i + 1] = 3 + 7 * r + 2 * (i - 1);
            layout.x[r][i - 1] = map[2 * i];
            layout.y[r][i - 1] = map[2 * i + 1];
        }
        for (EdgeId e = 0; e < gad.graph.num_edges(); ++e) {
            const Edge& ed = gad.graph.edge(e);
            out.graph.add_edge(map[ed.u], map[ed.v]);
            f.colors.push_back(gad.coloring.colors[e]);
        }
    }
    ListAssignment l{3, std::vector<std::vector<Color>>(22)};
    for (Vertex v = 0; v < 22; ++v) {
        auto& list = l.lists[v];
        for (EdgeId e : out.graph.incident(v))
            list.push_back(f.colors[e]);
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        if (list.size() != 3)
            throw std::logic_error("fig2_glued: vertex " + std::to_string(v) +
                                   " does not see three edge colours");
    }
    out.instance = Instance::adapted(std::move(f), std::move(l));
    out.instance_kind = InvariantKind::ch_ad;
    out.fig2 = layout;
    out.expected = {{InvariantKind::chi_a, 3},
                    {InvariantKind::ch_sep, 3},
                    {InvariantKind::ch_ad, 4},
                    {InvariantKind::chi_conflict, 4}};
    out.known = {{InvariantKind::ch_sep, true, 3, "fig2-strategy"}};
    return out;
}

// --------------------------------------------------------------- K_{k,k^k}

Construction kkn_bad(int k)
{
    require(k >= 1 && k <= 5, "kkn_bad: k must be in 1..5");
    int n = 1;
    for (int i = 0; i < k; ++i)
        n *= k;
    Construction out;
    out.name = "kkn-bad:" + std::to_string(k);
    out.graph = complete_bipartite(k, n);
    out.planar = k <= 2;
    ListAssignment l{k, std::vector<std::vector<Color>>(k + n)};
    for (int i = 0; i < k; ++i)
        for (int j = 1; j <= k; ++j)
            l.lists[i].push_back(k * i + j);
    for (int t = 0; t < n; ++t) {
        // Digits of t in base k, most significant first, pick one colour per x-list.
        int rest = t;
        std::vector<Color> list(k);
        for (int i = k - 1; i >= 0; --i) {
            list[i] = k * i + 1 + rest % k;
            rest /= k;
        }
        l.lists[k + t] = std::move(list);
    }
    out.instance = Instance::lists(std::move(l), true);
    out.instance_kind = InvariantKind::ch_sep;
    for (InvariantKind kind : {InvariantKind::ch, InvariantKind::chi_conflict,
                               InvariantKind::ch_ad, InvariantKind::ch_sep})
        out.expected.emplace_back(kind, k + 1);
    return out;
}

// ---------------------------------------------------------------- registry

namespace {

std::vector<int> parse_params(std::string_view text, std::string_view name)
{
    std::vector<int> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view part = text.substr(0, comma);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        require(ec == std::errc() && ptr == part.data() + part.size() && !part.empty(),
                "bad parameter '" + std::string(part) + "' in " + std::string(name));
        out.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

using E = std::pair<InvariantKind, int>;

std::vector<E> table_row(int ch, int conflict, int ad, int sep)
{
    return {{InvariantKind::ch, ch},
            {InvariantKind::chi_conflict, conflict},
            {InvariantKind::ch_ad, ad},
            {InvariantKind::ch_sep, sep}};
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& construction_registry()
{
    static const std::vector<std::pair<std::string, std::string>> registry{
        {"complete:N", "complete graph K_N"},
        {"bipartite:A,B", "complete bipartite graph K_{A,B}"},
        {"multipartite:K,N", "complete multipartite graph with K parts of size N"},
        {"cycle:N", "cycle C_N"},
        {"path:N", "path on N vertices"},
        {"theta:I,J,K", "theta graph with path lengths I, J, K"},
        {"wheel:K", "K-wheel: a (K-1)-cycle plus a hub"},
        {"cactus-two-triangles", "two triangles joined by an edge"},
        {"two-c4-bridge", "two 4-cycles joined by an edge"},
        {"fig1-gadget:A,B,C", "four-vertex multigraph with a blocking local 3-partition"},
        {"fig1-glued", "three blocking gadgets glued at one vertex"},
        {"fig2-gadget:A,B,C", "eight-vertex planar gadget with a 4-edge-colouring"},
        {"fig2-glued", "three edge-coloured gadgets glued at one vertex"},
        {"kkn-bad:K", "K_{K,K^K} with a separated K-list assignment that has no colouring"},
    };
    return registry;
}

Construction build(std::string_view name)
{
    const auto colon = name.find(':');
    const std::string_view base = name.substr(0, colon);
    const std::vector<int> p =
        colon == std::string_view::npos ? std::vector<int>{} : parse_params(name.substr(colon + 1), name);
    auto arity = [&](std::size_t n) {
        require(p.size() == n, std::string(base) + " takes " + std::to_string(n) + " parameter(s)");
    };

    Construction out;
    out.name = std::string(name);
    if (base == "complete") {
        arity(1);
        out.graph = complete(p[0]);
        out.planar = p[0] <= 4;
        static const std::array<std::array<int, 4>, 6> table{
            {{0, 0, 0, 0}, {1, 1, 1, 1}, {2, 2, 2, 2}, {3, 2, 2, 2}, {4, 3, 3, 2}, {5, 3, 3, 3}}};
        if (p[0] >= 1 && p[0] <= 5) {
            const auto& r = table[p[0]];
            out.expected = table_row(r[0], r[1], r[2], r[3]);
        }
        if (p[0] >= 1)
            out.expected.emplace_back(InvariantKind::chi, p[0]);
    } else if (base == "bipartite") {
        arity(2);
        out.graph = complete_bipartite(p[0], p[1]);
        const int a = std::min(p[0], p[1]);
        const int b = std::max(p[0], p[1]);
        out.planar = a <= 2;
        if (a == 2 && b <= 3)
            out.expected = table_row(2, 2, 2, 2);
        else if (a == 2)
            out.expected = table_row(3, 3, 3, 3);
    } else if (base == "multipartite") {
        arity(2);
        out.graph = complete_multipartite(p[0], p[1]);
    } else if (base == "cycle") {
        arity(1);
        out.graph = cycle(p[0]);
        out.planar = true;
        out.expected = table_row(p[0] % 2 == 0 ? 2 : 3, 2, 2, 2);
        out.expected.emplace_back(InvariantKind::chi, p[0] % 2 == 0 ? 2 : 3);
    } else if (base == "path") {
        arity(1);
        out.graph = path(p[0]);
        out.planar = true;
        const int v = p[0] == 1 ? 1 : 2;
        out.expected = table_row(v, v, v, v);
    } else if (base == "theta") {
        arity(3);
        out.graph = theta(p[0], p[1], p[2]);
        out.planar = true;
        out.expected = {{InvariantKind::ch_ad, 2},
                        {InvariantKind::chi_conflict, 2},
                        {InvariantKind::ch_sep, 2}};
    } else if (base == "wheel") {
        arity(1);
        out.graph = wheel(p[0]);
        out.planar = true;
        if (p[0] == 6)
            out.expected = {{InvariantKind::ch_sep, 3}};
    } else if (base == "cactus-two-triangles") {
        arity(0);
        out.graph = cactus_two_triangles();
        out.planar = true;
        out.expected = {{InvariantKind::ch_sep, 2},
                        {InvariantKind::ch_ad, 3},
                        {InvariantKind::chi_conflict, 3}};
    } else if (base == "two-c4-bridge") {
        arity(0);
        out.graph = two_c4_bridge();
        out.planar = true;
        out.expected = table_row(3, 3, 3, 3);
    } else if (base == "fig1-gadget") {
        arity(3);
        Fig1Gadget g = fig1_gadget(p[0], p[1], p[2]);
        out.graph = std::move(g.graph);
        out.planar = true;
    } else if (base == "fig1-glued") {
        arity(0);
        out = fig1_glued();
    } else if (base == "fig2-gadget") {
        arity(3);
        Fig2Gadget g = fig2_gadget(p[0], p[1], p[2]);
        out.graph = std::move(g.graph);
        out.planar = true;
    } else if (base == "fig2-glued") {
        arity(0);
        out = fig2_glued();
    } else if (base == "kkn-bad") {
        arity(1);
        out = kkn_bad(p[0]);
    } else {
        throw std::invalid_argument("unknown construction: " + std::string(name));
    }
    return out;
}

BoundLedger construction_ledger(const Construction& c, const Budget& budget)
{
    StructuralOptions so;
    so.asserted_planar = c.planar;
    BoundLedger l = structural_bounds(c.graph, so);
    for (const KnownBound& kb : c.known) {
        const Provenance p = Provenance::theorem(kb.theorem);
        if (kb.upper)
            l.lower_upper(kb.kind, kb.value, p);
        else
            l.raise(kb.kind, kb.value, p);
    }
    if (c.instance && c.instance_kind) {
        const WitnessCheck w = verify_witness(c.graph, *c.instance, budget.nodes);
        if (w.confirmed)
            l.raise(*c.instance_kind, c.instance->k() + 1,
                    Provenance::witness(*c.instance, c.instance->k()));
        else
            l.notes.push_back(w.exceeded ? "construction instance: verification budget exceeded"
                                         : "construction instance: refuted");
    }
    propagate_chain(l);
    return l;
}

std::vector<PlanarTriple> planar_triples_suite()
{
    std::vector<PlanarTriple> out;
    out.push_back({build("complete:1"), {1, 1, 1}});
    out.push_back({build("path:5"), {2, 2, 2}});
    out.push_back({build("cactus-two-triangles"), {2, 3, 3}});
    out.push_back({build("two-c4-bridge"), {3, 3, 3}});
    out.push_back({build("fig2-glued"), {3, 4, 4}});
    return out;
}

}  // namespace sepcol
