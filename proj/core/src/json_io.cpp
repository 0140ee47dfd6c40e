#include "dpcover/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dpcover/errors.hpp"

namespace dpcover {

using ojson = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

namespace {

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

ojson parse(const std::string& text) {
    ojson j = ojson::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
    return j;
}

ojson graph_node(const Graph& g) {
    ojson j;
    j["vertices"] = g.names();
    ojson edges = ojson::array();
    for (const Edge& e : g.edges()) edges.push_back({g.name(e.first), g.name(e.second)});
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_node(const ojson& j) {
    if (!j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON needs \"vertices\" and \"edges\"");
    Graph g(j["vertices"].get<std::vector<std::string>>());
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph JSON: each edge is a name pair");
        int u = g.index_of(e[0].get<std::string>());
        int v = g.index_of(e[1].get<std::string>());
        if (u < 0 || v < 0) throw std::invalid_argument("graph JSON: edge references unknown vertex");
        g.add_edge(u, v);
    }
    return g;
}

ojson cover_node(const Cover& c) {
    ojson j;
    j["m"] = c.fold();
    j["graph"] = graph_node(c.host());
    ojson ms = ojson::array();
    for (std::size_t ei = 0; ei < c.host().edges().size(); ++ei) {
        const Edge& e = c.host().edges()[ei];
        ojson entry;
        entry["edge"] = {c.host().name(e.first), c.host().name(e.second)};
        ojson map = ojson::array();
        const Matching& s = c.matching(static_cast<int>(ei));
        for (int jlab = 0; jlab < c.fold(); ++jlab) {
            if (s.to(jlab) == kUnmatched)
                map.push_back(nullptr);
            else
                map.push_back(s.to(jlab) + 1);
        }
        entry["map"] = std::move(map);
        ms.push_back(std::move(entry));
    }
    j["matchings"] = std::move(ms);
    return j;
}

Cover cover_from_node(const ojson& j) {
    if (!j.contains("m") || !j.contains("graph") || !j.contains("matchings"))
        throw std::invalid_argument("cover JSON needs \"m\", \"graph\" and \"matchings\"");
    int m = j["m"].get<int>();
    Graph g = graph_from_node(j["graph"]);
    if (m < 1 || m > kMaxFold) throw std::invalid_argument("cover JSON: fold out of range");

    std::vector<CrossEdge> entries;
    struct RawEntry {
        int u, v;
        Matching sigma;
    };
    std::vector<RawEntry> raw;
    for (const auto& entry : j["matchings"]) {
        if (!entry.contains("edge") || !entry.contains("map"))
            throw std::invalid_argument("cover JSON: each matching needs \"edge\" and \"map\"");
        int u = g.index_of(entry["edge"][0].get<std::string>());
        int v = g.index_of(entry["edge"][1].get<std::string>());
        if (u < 0 || v < 0) throw std::invalid_argument("cover JSON: matching references unknown vertex");
        const auto& map = entry["map"];
        if (static_cast<int>(map.size()) != m)
            throw std::invalid_argument("cover JSON: map must have exactly m entries");
        Matching sigma = Matching::empty(m);
        for (int jl = 0; jl < m; ++jl) {
            if (map[static_cast<std::size_t>(jl)].is_null()) continue;
            int k = map[static_cast<std::size_t>(jl)].get<int>();
            entries.push_back({u, v, jl, k - 1});
            if (k >= 1 && k <= m) sigma.set(jl, static_cast<std::int8_t>(k - 1));
        }
        raw.push_back({u, v, std::move(sigma)});
    }
    std::vector<std::string> violations = validate_cross_edges(g, m, entries);
    if (!violations.empty()) {
        std::string msg = "cover violates the axioms:";
        for (const std::string& v : violations) msg += "\n  - " + v;
        throw std::invalid_argument(msg);
    }
    Cover c(g, m);
    for (const RawEntry& e : raw) c.set_matching(e.u, e.v, e.u < e.v ? e.sigma : e.sigma.inverse());
    return c;
}

} // namespace

std::string graph_to_json(const Graph& g) { return dump(graph_node(g)); }
Graph graph_from_json(const std::string& text) { return graph_from_node(parse(text)); }
Graph load_graph(const std::string& path) { return graph_from_json(read_file(path)); }
void save_graph(const Graph& g, const std::string& path) { write_file(path, graph_to_json(g)); }

std::string cover_to_json(const Cover& c) { return dump(cover_node(c)); }
Cover cover_from_json(const std::string& text) { return cover_from_node(parse(text)); }
Cover load_cover(const std::string& path) { return cover_from_json(read_file(path)); }
void save_cover(const Cover& c, const std::string& path) { write_file(path, cover_to_json(c)); }

std::string count_report_to_json(const CountReport& r) {
    ojson j;
    j["count"] = r.count.str();
    j["cover"] = cover_node(r.cover);
    ojson pres = ojson::array();
    for (const PartVertex& pv : r.prescribed)
        pres.push_back({{"vertex", r.cover.host().name(pv.vertex)}, {"label", pv.label + 1}});
    j["prescribed"] = std::move(pres);
    j["nodes_expanded"] = r.nodes_expanded;
    return dump(j);
}

std::string perm_table_to_json(const PermTable& f) {
    ojson arr = ojson::array();
    for (const Perm& p : f.fs) {
        ojson img = ojson::array();
        for (int jl = 0; jl < p.size(); ++jl) img.push_back(p(jl) + 1);
        arr.push_back(std::move(img));
    }
    ojson j;
    j["fs"] = std::move(arr);
    return dump(j);
}

PermTable perm_table_from_json(const std::string& text, int m) {
    ojson j = parse(text);
    if (!j.contains("fs")) throw std::invalid_argument("perm table JSON needs \"fs\"");
    PermTable out;
    for (const auto& img : j["fs"]) {
        if (static_cast<int>(img.size()) != m)
            throw std::invalid_argument("perm table JSON: permutation has wrong size");
        std::vector<std::int8_t> v;
        for (const auto& x : img) v.push_back(static_cast<std::int8_t>(x.get<int>() - 1));
        out.fs.push_back(Perm(std::move(v)));
    }
    return out;
}

GluingSpec gluing_spec_from_json(const std::string& text, const std::string& base_dir) {
    ojson j = parse(text);
    if (!j.contains("p") || !j.contains("parts"))
        throw std::invalid_argument("gluing spec JSON needs \"p\" and \"parts\"");
    int p = j["p"].get<int>();
    std::vector<Graph> graphs;
    std::vector<VertexSet> cliques;
    for (const auto& part : j["parts"]) {
        std::string rel = part["graph"].get<std::string>();
        std::string path = rel.empty() || rel[0] == '/' ? rel : base_dir + "/" + rel;
        Graph g = load_graph(path);
        VertexSet clique;
        for (const auto& name : part["clique"]) {
            int v = g.index_of(name.get<std::string>());
            if (v < 0) throw std::invalid_argument("gluing spec JSON: unknown clique vertex \"" +
                                                   name.get<std::string>() + "\"");
            clique.push_back(v);
        }
        graphs.push_back(std::move(g));
        cliques.push_back(std::move(clique));
    }
    return make_gluing(std::move(graphs), std::move(cliques), p);
}

std::string dp_result_to_json(const DpResult& r) {
    ojson j;
    j["min"] = r.value.str();
    j["exact"] = r.exact;
    j["space"] = r.space_size.str();
    j["covers_scanned"] = r.covers_scanned;
    j["nodes_expanded"] = r.nodes_expanded;
    j["argmin"] = cover_node(r.argmin);
    return dump(j);
}

} // namespace dpcover
