#include "gk/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gk::io {

json graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = json::array();
    for (const auto& l : g.labels()) j["vertices"].push_back(l);
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back(json::array({g.label(u), g.label(v)}));
    return j;
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("graph json: need {\"vertices\": [...], \"edges\": [...]}");
    Graph g;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_string()) throw std::invalid_argument("graph json: vertex labels are strings");
        std::string label = v.get<std::string>();
        if (g.index_of(label) >= 0)
            throw std::invalid_argument("graph json: repeated vertex '" + label + "'");
        g.add_vertex(label);
    }
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw std::invalid_argument("graph json: edges are [\"u\",\"v\"] pairs");
        int u = g.index_of(e[0].get<std::string>());
        int v = g.index_of(e[1].get<std::string>());
        if (u < 0 || v < 0)
            throw std::invalid_argument("graph json: edge endpoint not in vertex list");
        g.add_edge(u, v);
    }
    return g;
}

std::string graph_to_edge_list(const Graph& g) {
    std::ostringstream out;
    for (int v = 0; v < g.vertex_count(); v++)
        if (g.degree(v) == 0) out << "vertex " << g.label(v) << "\n";
    for (auto [u, v] : g.edges()) out << g.label(u) << " " << g.label(v) << "\n";
    return out.str();
}

Graph graph_from_edge_list(const std::string& text) {
    Graph g;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;  // blank
        if (a == "vertex") {
            if (!(ls >> b) || (ls >> extra))
                throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                            ": expected 'vertex <label>'");
            g.add_vertex(b);
            continue;
        }
        if (!(ls >> b) || (ls >> extra))
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": expected '<u> <v>'");
        g.add_edge(a, b);
    }
    return g;
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string graph_to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (const auto& l : g.labels()) out << "  " << dot_quote(l) << ";\n";
    for (auto [u, v] : g.edges())
        out << "  " << dot_quote(g.label(u)) << " -- " << dot_quote(g.label(v)) << ";\n";
    out << "}\n";
    return out.str();
}

Graph parse_graph(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') return graph_from_json(json::parse(text));
        break;
    }
    return graph_from_edge_list(text);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

json spec_to_json(const GroupSpec& spec) {
    return std::visit(
        [](const auto& s) -> json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Cyclic>) {
                return json{{"type", "cyclic"}, {"n", s.order}};
            } else if constexpr (std::is_same_v<T, DirectProduct>) {
                json factors = json::array();
                for (const auto& f : s.factors) factors.push_back(spec_to_json(f));
                return json{{"type", "product"}, {"factors", factors}};
            } else if constexpr (std::is_same_v<T, Semidirect>) {
                return json{{"type", "semidirect"},
                            {"qs", s.qs},
                            {"ps", s.ps},
                            {"action", s.action}};
            } else {
                return json{{"type", "psl2"}, {"q", s.q}};
            }
        },
        spec.value);
}

GroupSpec spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw std::invalid_argument("group spec json: missing \"type\"");
    std::string type = j.at("type").get<std::string>();
    GroupSpec spec;
    if (type == "cyclic") {
        spec.value = Cyclic{j.at("n").get<std::uint64_t>()};
    } else if (type == "product") {
        DirectProduct p;
        for (const auto& f : j.at("factors")) p.factors.push_back(spec_from_json(f));
        spec.value = std::move(p);
    } else if (type == "semidirect") {
        Semidirect s;
        s.qs = j.at("qs").get<std::vector<std::uint64_t>>();
        s.ps = j.at("ps").get<std::vector<std::uint64_t>>();
        s.action = j.at("action").get<std::vector<std::vector<std::uint64_t>>>();
        spec.value = std::move(s);
    } else if (type == "psl2") {
        spec.value = Psl2{j.at("q").get<std::uint64_t>()};
    } else {
        throw std::invalid_argument("group spec json: unknown type '" + type + "'");
    }
    validate_spec(spec);
    return spec;
}

GroupSpec load_spec(const std::string& path) { return spec_from_json(json::parse(read_file(path))); }

json set_to_json(const DivisorClosedSet& xs) {
    json j = json::array();
    for (u64 m : xs.members) j.push_back(m);
    return j;
}

DivisorClosedSet set_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("set json: expected an array of integers");
    std::set<u64> xs;
    for (const auto& v : j) {
        if (!v.is_number_unsigned() && !v.is_number_integer())
            throw std::invalid_argument("set json: members are positive integers");
        long long m = v.get<long long>();
        if (m < 1) throw std::invalid_argument("set json: members are positive integers");
        xs.insert(static_cast<u64>(m));
    }
    return DivisorClosedSet::validate(std::move(xs));
}

DivisorClosedSet load_set(const std::string& path) {
    return set_from_json(json::parse(read_file(path)));
}

json certificate_to_json(const OrderCertificate& cert) {
    json factors = json::array();
    for (auto [p, e] : cert.factors) factors.push_back(json{{"prime", p}, {"exp", e}});
    return json{{"n", cert.n_bound}, {"factors", factors}};
}

OrderCertificate certificate_from_json(const json& j) {
    OrderCertificate cert;
    cert.n_bound = j.at("n").get<std::uint64_t>();
    for (const auto& f : j.at("factors"))
        cert.factors.emplace_back(f.at("prime").get<std::uint64_t>(),
                                  f.at("exp").get<std::uint64_t>());
    return cert;
}

}  // namespace gk::io
