#include "sepcol/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace sepcol {

namespace {

std::string fnv1a(const std::string& text)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json pairs_to_json(const std::vector<std::array<Color, 2>>& pairs)
{
    Json out = Json::array();
    for (const auto& p : pairs)
        out.push_back({p[0], p[1]});
    return out;
}

std::vector<std::array<Color, 2>> pairs_from_json(const Json& j)
{
    std::vector<std::array<Color, 2>> out;
    for (const Json& p : j) {
        if (!p.is_array() || p.size() != 2)
            throw InputError("expected a [color, color] pair");
        out.push_back({p[0].get<Color>(), p[1].get<Color>()});
    }
    return out;
}

}  // namespace

Json instance_to_json(const Instance& inst, const std::string& graph_hash)
{
    Json j;
    j["kind"] = to_string(inst.kind);
    j["k"] = inst.k();
    j["graph_hash"] = graph_hash;
    std::visit(
        [&](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, ListAssignment>) {
                j["data"] = d.lists;
            } else if constexpr (std::is_same_v<T, EdgeColoring>) {
                j["data"] = d.colors;
            } else if constexpr (std::is_same_v<T, AdaptedListInstance>) {
                j["data"] = {{"palette", d.coloring.palette},
                             {"edge_colors", d.coloring.colors},
                             {"lists", d.lists.lists}};
            } else if constexpr (std::is_same_v<T, LocalPartition>) {
                j["data"] = pairs_to_json(d.pairs);
            } else {
                Json data = Json::array();
                for (const auto& m : d.matchings)
                    data.push_back(pairs_to_json(m));
                j["data"] = data;
            }
        },
        inst.data);
    return j;
}

Instance instance_from_json(const Json& j, const Multigraph& g)
{
    Instance inst;
    try {
        if (!j.is_object())
            throw InputError("instance must be a JSON object");
        for (const char* key : {"kind", "k", "graph_hash", "data"})
            if (!j.contains(key))
                throw InputError(std::string("instance lacks key \"") + key + "\"");
        const std::string hash = j.at("graph_hash").get<std::string>();
        if (hash != graph_hash(g))
            throw InputError("instance graph_hash " + hash + " does not match graph " +
                             graph_hash(g));
        const auto kind = instance_kind_from_string(j.at("kind").get<std::string>());
        const int k = j.at("k").get<int>();
        const Json& data = j.at("data");
        switch (kind) {
        case InstanceKind::list:
        case InstanceKind::sep_list:
            inst = Instance::lists({k, data.get<std::vector<std::vector<Color>>>()},
                                   kind == InstanceKind::sep_list);
            break;
        case InstanceKind::edge_coloring:
            inst = Instance::edge_coloring({k, data.get<std::vector<Color>>()});
            break;
        case InstanceKind::adapted_list:
            inst = Instance::adapted(
                {data.at("palette").get<int>(), data.at("edge_colors").get<std::vector<Color>>()},
                {k, data.at("lists").get<std::vector<std::vector<Color>>>()});
            break;
        case InstanceKind::local_partition:
            inst = Instance::conflict({k, pairs_from_json(data)});
            break;
        case InstanceKind::dp_cover: {
            DPCover c{k, {}};
            for (const Json& m : data)
                c.matchings.push_back(pairs_from_json(m));
            inst = Instance::dp(std::move(c));
            break;
        }
        }
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(std::string("malformed instance: ") + e.what());
    }
    if (std::string why = validate_instance(g, inst); !why.empty())
        throw InputError("invalid instance: " + why);
    return inst;
}

std::string instance_hash(const Json& instance_json)
{
    return fnv1a(instance_json.dump());
}

Json coloring_to_json(const std::vector<Color>& coloring)
{
    return Json{{"assignment", coloring}};
}

std::vector<Color> coloring_from_json(const Json& j)
{
    try {
        return j.at("assignment").get<std::vector<Color>>();
    } catch (const std::exception& e) {
        throw InputError(std::string("malformed coloring: ") + e.what());
    }
}

Json solve_result_to_json(const SolveResult& r, const std::string& hash)
{
    Json j;
    j["status"] = to_string(r.status);
    j["nodes"] = r.nodes;
    j["instance_hash"] = hash;
    if (r.status == SolveStatus::sat)
        j["assignment"] = r.coloring;
    return j;
}

Json provenance_to_json(const Provenance& p, const std::string& graph_hash)
{
    Json j;
    j["type"] = to_string(p.type);
    switch (p.type) {
    case Provenance::Type::theorem:
        j["id"] = p.id;
        if (!p.detail.empty())
            j["detail"] = p.detail;
        break;
    case Provenance::Type::chain:
        j["rule"] = p.id;
        break;
    case Provenance::Type::exhaustion:
        j["k"] = p.k;
        j["instances"] = p.instances;
        j["nodes"] = p.nodes;
        break;
    case Provenance::Type::witness:
        j["k"] = p.k;
        if (p.instance) {
            Json inst = instance_to_json(*p.instance, graph_hash);
            j["instance_hash"] = instance_hash(inst);
            j["instance"] = std::move(inst);
        }
        break;
    }
    return j;
}

Json ledger_to_json(const BoundLedger& ledger)
{
    Json j;
    j["graph_hash"] = ledger.graph_hash;
    Json bounds = Json::object();
    for (InvariantKind k : kAllInvariants) {
        const KindBounds& kb = ledger[k];
        bounds[to_string(k)] = {
            {"lower",
             {{"value", kb.lower.value},
              {"provenance", provenance_to_json(kb.lower.provenance, ledger.graph_hash)}}},
            {"upper",
             {{"value", kb.upper.value},
              {"provenance", provenance_to_json(kb.upper.provenance, ledger.graph_hash)}}},
        };
    }
    j["bounds"] = std::move(bounds);
    j["notes"] = ledger.notes;
    return j;
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json read_json_file(const std::string& path)
{
    try {
        return Json::parse(read_text_file(path));
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j)
{
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace sepcol
