#include "gk/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gk/classify.hpp"
#include "gk/dualgraph.hpp"
#include "gk/errors.hpp"
#include "gk/groups.hpp"
#include "gk/io.hpp"
#include "gk/numtheory.hpp"
#include "gk/prime_graph.hpp"
#include "gk/realize.hpp"
#include "gk/selfcheck.hpp"

namespace gk {
namespace {

using io::certificate_to_json;
using io::graph_to_dot;
using io::graph_to_edge_list;
using io::graph_to_json;
using io::json;
using io::load_graph;
using io::load_set;
using io::load_spec;
using io::parse_graph;
using io::spec_to_json;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::vector<std::string> labels_of(const Graph& g, const std::vector<int>& vs) {
    std::vector<std::string> out;
    out.reserve(vs.size());
    for (int v : vs) out.push_back(g.label(v));
    return out;
}

std::string set_text(const Graph& g, const std::vector<int>& vs) {
    return "{" + join(labels_of(g, vs), " ") + "}";
}

// Single-character labels concatenate (the compact table style); anything
// longer is space separated.
std::string concat_labels(const Graph& g, const std::vector<int>& vs) {
    auto ls = labels_of(g, vs);
    bool tight = true;
    for (const auto& l : ls)
        if (l.size() != 1) tight = false;
    return join(ls, tight ? "" : " ");
}

json labels_json(const Graph& g, const std::vector<int>& vs) {
    json arr = json::array();
    for (int v : vs) arr.push_back(g.label(v));
    return arr;
}

json classes_json(const Graph& g, const Coloring& c) {
    json arr = json::array();
    for (const auto& cls : c.classes()) arr.push_back(labels_json(g, cls));
    return arr;
}

std::string sides_text(const Graph& g, const Coloring& c) {
    std::vector<std::string> parts;
    for (const auto& cls : c.classes()) parts.push_back(set_text(g, cls));
    return join(parts, " / ");
}

std::string spec_to_string(const GroupSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Cyclic>) {
                return "C" + std::to_string(s.order);
            } else if constexpr (std::is_same_v<T, DirectProduct>) {
                if (s.factors.empty()) return "C1";
                std::vector<std::string> parts;
                for (const auto& f : s.factors) {
                    std::string p = spec_to_string(f);
                    if (p.find(" : ") != std::string::npos) p = "(" + p + ")";
                    parts.push_back(std::move(p));
                }
                return join(parts, " x ");
            } else if constexpr (std::is_same_v<T, Semidirect>) {
                auto side = [](const std::vector<u64>& v) {
                    std::vector<std::string> parts;
                    for (u64 x : v) parts.push_back("C" + std::to_string(x));
                    std::string s = join(parts, " x ");
                    return v.size() > 1 ? "(" + s + ")" : s;
                };
                return side(s.qs) + " : " + side(s.ps);
            } else {
                return "PSL(2," + std::to_string(s.q) + ")";
            }
        },
        spec.value);
}

std::optional<u64> try_order(const GroupSpec& spec) {
    try {
        return group_order(spec);
    } catch (const std::exception&) {
        return std::nullopt;  // past 64 bits; the group spec itself is still valid
    }
}

std::string indent2(const std::string& text) {
    std::istringstream in(text);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) out << "  " << line << "\n";
    return out.str();
}

Graph load_input_graph(const std::string& path, bool take_complement) {
    Graph g;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        g = parse_graph(ss.str());
    } else {
        g = load_graph(path);
    }
    return take_complement ? complement(g) : g;
}

// ---- classify ----

int run_solvable(const Graph& g, bool as_json, std::ostream& out) {
    auto res = classify_solvable(g);
    if (std::holds_alternative<SolvableAccept>(res)) {
        const auto& acc = std::get<SolvableAccept>(res);
        if (as_json) {
            json j{{"verdict", "accept"}, {"complement_classes", classes_json(g, acc.complement_coloring)}};
            out << j.dump(2) << "\n";
        } else {
            out << "accept\n";
            auto cls = acc.complement_coloring.classes();
            for (std::size_t i = 0; i < cls.size(); ++i)
                out << "class " << i << ": " << join(labels_of(g, cls[i]), " ") << "\n";
        }
        return 0;
    }
    const auto& rej = std::get<SolvableReject>(res);
    if (as_json) {
        json j{{"verdict", "reject"}};
        if (rej.triangle) {
            const auto& t = *rej.triangle;
            j["complement_triangle"] = labels_json(g, {t[0], t[1], t[2]});
        } else {
            j["reason"] = "no-three-coloring";
        }
        out << j.dump(2) << "\n";
    } else if (rej.triangle) {
        const auto& t = *rej.triangle;
        out << "reject: triangle " << set_text(g, {t[0], t[1], t[2]}) << " in the complement\n";
    } else {
        out << "reject: complement has no proper 3-coloring\n";
    }
    return 1;
}

int run_metanilpotent(const Graph& g, bool as_json, std::ostream& out) {
    auto res = classify_metanilpotent(g);
    if (std::holds_alternative<MetanilpotentAccept>(res)) {
        const auto& acc = std::get<MetanilpotentAccept>(res);
        if (as_json) {
            json j{{"verdict", "accept"}, {"complement_sides", classes_json(g, acc.complement_coloring)}};
            out << j.dump(2) << "\n";
        } else {
            out << "accept\nsides: " << sides_text(g, acc.complement_coloring) << "\n";
        }
        return 0;
    }
    const auto& rej = std::get<MetanilpotentReject>(res);
    if (as_json) {
        json j{{"verdict", "reject"}, {"complement_odd_cycle", labels_json(g, rej.odd_cycle)}};
        out << j.dump(2) << "\n";
    } else {
        out << "reject: odd cycle " << join(labels_of(g, rej.odd_cycle), " ") << " in the complement\n";
    }
    return 1;
}

int emit_npf_reject(const Graph& g, const NpfReject& rej, u64 n, bool as_json, std::ostream& out) {
    if (as_json) {
        json j{{"verdict", "reject"}, {"n", n}};
        if (rej.triangle) {
            const auto& t = *rej.triangle;
            j["complement_triangle"] = labels_json(g, {t[0], t[1], t[2]});
        }
        json cases = json::array();
        for (const auto& c : rej.cases) {
            json jc{{"red", labels_json(g, c.red)}};
            if (!c.odd_cycle.empty()) {
                jc["cycle"] = labels_json(g, c.odd_cycle);
            } else {
                json cols = json::array();
                json ends = json::array();
                for (const auto& col : c.colorings) {
                    cols.push_back(json{{"green", labels_json(g, col.green)},
                                        {"blue", labels_json(g, col.blue)},
                                        {"forced_ends", labels_json(g, col.forced_ends)}});
                    for (int v : col.forced_ends) ends.push_back(g.label(v));
                }
                jc["colorings"] = std::move(cols);
                jc["endpoints"] = std::move(ends);
            }
            cases.push_back(std::move(jc));
        }
        j["cases"] = std::move(cases);
        out << j.dump(2) << "\n";
        return 1;
    }

    out << "reject\n";
    if (rej.triangle) {
        const auto& t = *rej.triangle;
        out << "triangle " << set_text(g, {t[0], t[1], t[2]}) << " in the complement\n";
        return 1;
    }
    for (const auto& c : rej.cases) {
        out << "[" << join(labels_of(g, c.red), ",") << "]: (";
        if (!c.odd_cycle.empty()) {
            out << concat_labels(g, c.odd_cycle);
        } else {
            std::vector<std::string> ends;
            for (const auto& col : c.colorings) ends.push_back(concat_labels(g, col.forced_ends));
            out << join(ends, ",");
        }
        out << ")\n";
    }
    return 1;
}

int run_npowerfree(const Graph& g, u64 n, bool as_json, std::ostream& out) {
    auto res = classify_npowerfree_solvable(g, n);
    if (std::holds_alternative<NpfReject>(res))
        return emit_npf_reject(g, std::get<NpfReject>(res), n, as_json, out);

    const auto& w = std::get<NpfWitness>(res);
    auto cls = w.coloring.classes();  // 0 red, 1 green, 2 blue
    if (as_json) {
        json red = json::array();
        for (std::size_t i = 0; i < w.red_vertices.size(); ++i)
            red.push_back(json{{"vertex", g.label(w.red_vertices[i])}, {"prime", w.red_labels[i]}});
        json blue = json::array();
        for (const auto& b : w.blue)
            blue.push_back(json{{"vertex", g.label(b.vertex)},
                                {"sources", labels_json(g, b.sources)},
                                {"product", b.label_product}});
        json j{{"verdict", "accept"},
               {"n", n},
               {"red", std::move(red)},
               {"green", labels_json(g, cls.size() > 1 ? cls[1] : std::vector<int>{})},
               {"blue", std::move(blue)}};
        out << j.dump(2) << "\n";
    } else {
        out << "accept\n";
        std::vector<std::string> reds;
        for (std::size_t i = 0; i < w.red_vertices.size(); ++i)
            reds.push_back(g.label(w.red_vertices[i]) + "->" + std::to_string(w.red_labels[i]));
        out << "red: " << join(reds, " ") << "\n";
        out << "green: " << join(labels_of(g, cls.size() > 1 ? cls[1] : std::vector<int>{}), " ") << "\n";
        for (const auto& b : w.blue)
            out << "blue " << g.label(b.vertex) << ": sources " << set_text(g, b.sources) << ", product "
                << b.label_product << "\n";
    }
    return 0;
}

int run_cubefree_solvable(const Graph& g, bool as_json, std::ostream& out) {
    auto res = classify_cubefree_solvable(g);
    if (std::holds_alternative<CubefreeSolvableAccept>(res)) {
        const auto& acc = std::get<CubefreeSolvableAccept>(res);
        if (as_json) {
            json j{{"verdict", "accept"}, {"sides", classes_json(g, acc.coloring)}};
            j["removed"] = acc.removed ? json(g.label(*acc.removed)) : json(nullptr);
            out << j.dump(2) << "\n";
        } else {
            out << "accept\n";
            if (acc.removed) out << "remove: " << g.label(*acc.removed) << "\n";
            out << "sides: " << sides_text(g, acc.coloring) << "\n";
        }
        return 0;
    }
    const auto& rej = std::get<CubefreeSolvableReject>(res);
    if (as_json) {
        json j{{"verdict", "reject"}};
        if (rej.triangle) {
            const auto& t = *rej.triangle;
            j["complement_triangle"] = labels_json(g, {t[0], t[1], t[2]});
        } else {
            j["reason"] = "no-single-vertex-bipartition";
        }
        out << j.dump(2) << "\n";
    } else if (rej.triangle) {
        const auto& t = *rej.triangle;
        out << "reject: triangle " << set_text(g, {t[0], t[1], t[2]}) << " in the complement\n";
    } else {
        out << "reject: no vertex removal leaves the complement bipartite\n";
    }
    return 1;
}

json nonsolvable_json(const Graph& g, const NonSolvableVerdict& v) {
    const auto& minus = v.m_is_minus_side ? v.m_class : v.n_class;
    const auto& plus = v.m_is_minus_side ? v.n_class : v.m_class;
    json j{{"case", "non-solvable"},
           {"q", v.q},
           {"m", v.profile.m},
           {"n", v.profile.n},
           {"characteristic_deleted", v.characteristic_deleted},
           {"q_vertices", labels_json(g, v.q_class)},
           {"minus_side", labels_json(g, minus)},
           {"plus_side", labels_json(g, plus)},
           {"s_minus", v.s_minus},
           {"s_plus", v.s_plus},
           {"s_vertices", labels_json(g, v.s_vertices)},
           {"bipartite_vertices", labels_json(g, v.bipartite_vertices)},
           {"bipartite_sides", classes_json(g, v.bipartite_coloring)}};
    return j;
}

std::string nonsolvable_text(const Graph& g, const NonSolvableVerdict& v) {
    const auto& minus = v.m_is_minus_side ? v.m_class : v.n_class;
    const auto& plus = v.m_is_minus_side ? v.n_class : v.m_class;
    std::ostringstream os;
    os << "non-solvable: q=" << v.q << " profile (" << v.profile.m << "," << v.profile.n << ")";
    os << "; q vertex " << (v.characteristic_deleted ? std::string("absorbed") : set_text(g, v.q_class));
    os << "; minus " << set_text(g, minus) << "; plus " << set_text(g, plus);
    os << "; singletons " << set_text(g, v.s_vertices);
    os << "; rest " << set_text(g, v.bipartite_vertices);
    return os.str();
}

int run_cubefree(const Graph& g, const CubefreeOptions& opts, bool as_json, std::ostream& out) {
    CubefreeResult res = classify_cubefree(g, opts);
    if (as_json) {
        json verdicts = json::array();
        for (const auto& v : res.verdicts) {
            if (std::holds_alternative<OddOrderVerdict>(v)) {
                const auto& o = std::get<OddOrderVerdict>(v);
                verdicts.push_back(json{{"case", "odd-order"}, {"sides", classes_json(g, o.complement_coloring)}});
            } else if (std::holds_alternative<SolvableEvenVerdict>(v)) {
                const auto& s = std::get<SolvableEvenVerdict>(v);
                json j{{"case", "solvable-even"}, {"sides", classes_json(g, s.coloring)}};
                j["removed"] = s.removed ? json(g.label(*s.removed)) : json(nullptr);
                verdicts.push_back(std::move(j));
            } else {
                verdicts.push_back(nonsolvable_json(g, std::get<NonSolvableVerdict>(v)));
            }
        }
        json j{{"verdicts", std::move(verdicts)}, {"q_bound_exhausted", res.q_bound_exhausted}};
        out << j.dump(2) << "\n";
    } else {
        if (res.verdicts.empty()) {
            out << (res.q_bound_exhausted ? "inconclusive: shape matches but no q within bound\n"
                                          : "reject: no interpretation\n");
        }
        for (const auto& v : res.verdicts) {
            if (std::holds_alternative<OddOrderVerdict>(v)) {
                out << "odd-order: sides " << sides_text(g, std::get<OddOrderVerdict>(v).complement_coloring)
                    << "\n";
            } else if (std::holds_alternative<SolvableEvenVerdict>(v)) {
                const auto& s = std::get<SolvableEvenVerdict>(v);
                out << "solvable-even: ";
                if (s.removed) out << "remove " << g.label(*s.removed) << "; ";
                out << "sides " << sides_text(g, s.coloring) << "\n";
            } else {
                out << nonsolvable_text(g, std::get<NonSolvableVerdict>(v)) << "\n";
            }
        }
    }
    if (!res.verdicts.empty()) return 0;
    return res.q_bound_exhausted ? 2 : 1;
}

int run_psl2_cubefree(const Graph& g, u64 q_bound, bool as_json, std::ostream& out) {
    PslShapeResult res = classify_psl2_cubefree(g, q_bound);
    if (res.match) {
        if (as_json) {
            json j{{"verdict", "accept"},
                   {"q", res.match->q},
                   {"m", res.match->profile.m},
                   {"n", res.match->profile.n}};
            out << j.dump(2) << "\n";
        } else {
            out << "accept: q=" << res.match->q << " profile (" << res.match->profile.m << ","
                << res.match->profile.n << ")\n";
        }
        return 0;
    }
    if (!res.shape_ok) {
        if (as_json)
            out << json{{"verdict", "reject"}, {"reason", "shape"}}.dump(2) << "\n";
        else
            out << "reject: not a complete tripartite-with-singleton shape\n";
        return 1;
    }
    if (as_json)
        out << json{{"verdict", "inconclusive"}, {"reason", "q-bound-exhausted"}}.dump(2) << "\n";
    else
        out << "inconclusive: shape matches but no q within bound\n";
    return 2;
}

int run_pseudo_solvable(const PrimeLabeledGraph& pg, bool as_json, std::ostream& out) {
    PseudoSolvableReport rep = pseudo_solvable_check(pg);
    if (as_json) {
        json j{{"condition_a", rep.condition_a}, {"condition_b", rep.condition_b},
               {"verdict", rep.ok() ? "accept" : "reject"}};
        if (rep.a_triangle) j["a_triangle"] = {(*rep.a_triangle)[0], (*rep.a_triangle)[1], (*rep.a_triangle)[2]};
        if (rep.a_not_three_colorable) j["a_no_three_coloring"] = true;
        if (rep.b_triangle) j["b_triangle"] = {(*rep.b_triangle)[0], (*rep.b_triangle)[1], (*rep.b_triangle)[2]};
        if (!rep.b_edges.empty()) {
            json e = json::array();
            for (const auto& [a, b] : rep.b_edges) e.push_back({a, b});
            j["b_edges"] = std::move(e);
        }
        out << j.dump(2) << "\n";
    } else {
        out << "condition A: " << (rep.condition_a ? "holds" : "fails") << "\n";
        if (rep.a_triangle)
            out << "  triangle {" << (*rep.a_triangle)[0] << " " << (*rep.a_triangle)[1] << " "
                << (*rep.a_triangle)[2] << "} survives the 3-5 edge removal\n";
        if (rep.a_not_three_colorable) out << "  no proper 3-coloring after the 3-5 edge removal\n";
        out << "condition B: " << (rep.condition_b ? "holds" : "fails") << "\n";
        if (rep.b_triangle)
            out << "  triangle {" << (*rep.b_triangle)[0] << " " << (*rep.b_triangle)[1] << " "
                << (*rep.b_triangle)[2] << "} in the complement\n";
        for (const auto& [a, b] : rep.b_edges)
            out << "  complement edge " << a << "-" << b << "\n";
        out << (rep.ok() ? "accept\n" : "reject\n");
    }
    return rep.ok() ? 0 : 1;
}

// ---- realize ----

json primes_map_json(const Graph& g, const std::vector<u64>& per_vertex) {
    json j = json::object();
    for (int v = 0; v < g.vertex_count(); ++v) j[g.label(v)] = per_vertex[v];
    return j;
}

int run_realize_squarefree(const Graph& g, const RealizeOptions& opts, bool as_json, std::ostream& out) {
    auto res = realize_squarefree(g, opts);
    if (std::holds_alternative<RealizeReject>(res)) {
        const auto& rej = std::get<RealizeReject>(res);
        if (as_json)
            out << json{{"verdict", "reject"}, {"complement_odd_cycle", labels_json(g, rej.odd_cycle)}}.dump(2)
                << "\n";
        else
            out << "reject: odd cycle " << join(labels_of(g, rej.odd_cycle), " ") << " in the complement\n";
        return 1;
    }
    const auto& real = std::get<SquarefreeRealization>(res);
    auto order = try_order(real.spec);
    if (as_json) {
        json j{{"verdict", "accept"},
               {"group", spec_to_string(real.spec)},
               {"spec", spec_to_json(real.spec)},
               {"vertex_primes", primes_map_json(g, real.vertex_primes)}};
        if (order) j["order"] = *order;
        out << j.dump(2) << "\n";
    } else {
        out << "accept\n";
        out << "group: " << spec_to_string(real.spec) << "\n";
        if (order) out << "order: " << *order << "\n";
        for (int v = 0; v < g.vertex_count(); ++v)
            out << g.label(v) << " -> " << real.vertex_primes[v] << "\n";
    }
    return 0;
}

int run_realize_npf_cert(const Graph& g, u64 n, bool as_json, std::ostream& out) {
    auto res = realize_npowerfree_certificate(g, n);
    if (std::holds_alternative<NpfReject>(res))
        return emit_npf_reject(g, std::get<NpfReject>(res), n, as_json, out);

    const auto& cert = std::get<NpfCertificate>(res);
    if (as_json) {
        json j{{"verdict", "accept"},
               {"certificate", certificate_to_json(cert.certificate)},
               {"vertex_primes", primes_map_json(g, cert.vertex_primes)},
               {"vertex_exponents", primes_map_json(g, cert.vertex_exponents)}};
        out << j.dump(2) << "\n";
    } else {
        out << "accept\n";
        out << "bound: " << cert.certificate.n_bound << "\n";
        std::vector<std::string> parts;
        for (const auto& [p, e] : cert.certificate.factors)
            parts.push_back(e == 1 ? std::to_string(p) : std::to_string(p) + "^" + std::to_string(e));
        out << "order: " << join(parts, " * ") << "\n";
        for (int v = 0; v < g.vertex_count(); ++v)
            out << g.label(v) << " -> " << cert.vertex_primes[v] << "^" << cert.vertex_exponents[v] << "\n";
    }
    return 0;
}

int run_realize_cubefree(const Graph& g, const CubefreeOptions& copts, const RealizeOptions& ropts,
                         bool as_json, std::ostream& out, std::ostream& err) {
    CubefreeResult cls = classify_cubefree(g, copts);
    const NonSolvableVerdict* pick = nullptr;
    for (const auto& v : cls.verdicts)
        if (std::holds_alternative<NonSolvableVerdict>(v)) {
            pick = &std::get<NonSolvableVerdict>(v);
            break;
        }
    if (!pick) {
        if (cls.q_bound_exhausted) {
            if (as_json)
                out << json{{"verdict", "inconclusive"}, {"reason", "q-bound-exhausted"}}.dump(2) << "\n";
            else
                out << "inconclusive: shape matches but no q within bound\n";
            return 2;
        }
        if (as_json)
            out << json{{"verdict", "reject"}, {"reason", "no-non-solvable-interpretation"}}.dump(2) << "\n";
        else
            out << "reject: no non-solvable interpretation\n";
        return 1;
    }

    auto res = realize_cubefree_nonsolvable(g, *pick, ropts);
    if (std::holds_alternative<RealizeInconsistency>(res)) {
        err << "error: " << std::get<RealizeInconsistency>(res).message << "\n";
        return 2;
    }
    const auto& real = std::get<CubefreeRealization>(res);
    auto order = try_order(real.spec);
    if (as_json) {
        json j{{"verdict", "accept"},
               {"q", pick->q},
               {"group", spec_to_string(real.spec)},
               {"spec", spec_to_json(real.spec)},
               {"vertex_primes", primes_map_json(g, real.vertex_primes)}};
        if (order) j["order"] = *order;
        out << j.dump(2) << "\n";
    } else {
        out << "accept\n";
        out << "group: " << spec_to_string(real.spec) << "\n";
        if (order) out << "order: " << *order << "\n";
        for (int v = 0; v < g.vertex_count(); ++v)
            out << g.label(v) << " -> " << real.vertex_primes[v] << "\n";
    }
    return 0;
}

// ---- group / dual / selftest ----

int run_group_eo(const GroupSpec& spec, bool as_json, std::ostream& out) {
    EoSet eo = element_orders(spec);
    if (as_json) {
        json j{{"group", spec_to_string(spec)}, {"element_orders", json::array()}};
        auto order = try_order(spec);
        if (order) j["order"] = *order;
        for (u64 m : eo) j["element_orders"].push_back(m);
        out << j.dump(2) << "\n";
    } else {
        std::vector<std::string> parts;
        for (u64 m : eo) parts.push_back(std::to_string(m));
        out << join(parts, " ") << "\n";
    }
    return 0;
}

int run_group_prime_graph(const GroupSpec& spec, bool as_json, bool as_dot, std::ostream& out) {
    PrimeLabeledGraph pg = prime_graph_of(spec);
    if (as_dot)
        out << graph_to_dot(pg.graph);
    else if (as_json)
        out << graph_to_json(pg.graph).dump(2) << "\n";
    else
        out << graph_to_edge_list(pg.graph);
    return 0;
}

int run_dual_forward(const DivisorClosedSet& xs, bool as_json, bool as_dot, std::ostream& out) {
    Graph gamma = gamma_of(xs);
    PrimeLabeledGraph delta = delta_of(xs);
    if (as_dot) {
        out << graph_to_dot(gamma) << graph_to_dot(delta.graph);
    } else if (as_json) {
        json j{{"gamma", graph_to_json(gamma)}, {"delta", graph_to_json(delta.graph)}};
        out << j.dump(2) << "\n";
    } else {
        out << "gamma:\n" << indent2(graph_to_edge_list(gamma));
        out << "delta:\n" << indent2(graph_to_edge_list(delta.graph));
    }
    return 0;
}

int run_dual_recover(const Graph& gamma, bool as_json, bool as_dot, std::ostream& out) {
    auto res = recover_delta(gamma);
    if (std::holds_alternative<Recovered>(res)) {
        const auto& rec = std::get<Recovered>(res);
        if (as_dot) {
            out << graph_to_dot(rec.delta.graph);
        } else if (as_json) {
            json values = json::object();
            for (const auto& [label, v] : rec.values) values[label] = v;
            json merged = json::array();
            for (const auto& cls : rec.merged_classes) {
                if (cls.size() < 2) continue;
                merged.push_back(labels_json(gamma, cls));
            }
            json j{{"verdict", "accept"},
                   {"delta", graph_to_json(rec.delta.graph)},
                   {"values", std::move(values)},
                   {"merged", std::move(merged)}};
            out << j.dump(2) << "\n";
        } else {
            out << "accept\n";
            for (const auto& [label, v] : rec.values) out << label << ": " << v << "\n";
            for (const auto& cls : rec.merged_classes)
                if (cls.size() >= 2) out << "merged: " << set_text(gamma, cls) << "\n";
            out << "delta:\n" << indent2(graph_to_edge_list(rec.delta.graph));
        }
        return 0;
    }
    const auto& rej = std::get<RecoveryRejected>(res);
    if (as_json) {
        json values = json::object();
        for (const auto& [label, v] : rej.values) values[label] = v;
        json j{{"verdict", "reject"},
               {"reason", to_string(rej.reason)},
               {"witness_vertices", rej.witness_vertices},
               {"values", std::move(values)}};
        if (rej.reason == RecoveryReject::MissingSubset) j["witness_value"] = rej.witness_value;
        out << j.dump(2) << "\n";
    } else {
        out << "reject: " << to_string(rej.reason) << "\n";
        if (!rej.witness_vertices.empty()) {
            out << "witness: {" << join(rej.witness_vertices, " ") << "}";
            if (rej.reason == RecoveryReject::MissingSubset) out << " value " << rej.witness_value;
            out << "\n";
        }
        if (!rej.values.empty()) {
            std::vector<std::string> parts;
            for (const auto& [label, v] : rej.values) parts.push_back(label + "=" + std::to_string(v));
            out << "values: " << join(parts, " ") << "\n";
        }
    }
    return 1;
}

int run_selftest_cmd(const std::string& fixtures, bool as_json, std::ostream& out) {
    auto items = run_selftest(fixtures);
    int failed = 0;
    if (as_json) {
        json arr = json::array();
        for (const auto& it : items) {
            arr.push_back(json{{"name", it.name}, {"passed", it.passed}, {"detail", it.detail}});
            if (!it.passed) ++failed;
        }
        json j{{"items", std::move(arr)}, {"passed", failed == 0}};
        out << j.dump(2) << "\n";
    } else {
        for (const auto& it : items) {
            if (it.passed) {
                out << "PASS " << it.name << "\n";
            } else {
                out << "FAIL " << it.name << (it.detail.empty() ? "" : ": " + it.detail) << "\n";
                ++failed;
            }
        }
        out << (items.size() - failed) << "/" << items.size() << " passed\n";
    }
    return failed == 0 ? 0 : 1;
}

struct GraphArgs {
    std::string path;
    bool json = false;
    bool compl_ = false;
};

void add_graph_args(CLI::App* s, GraphArgs& a) {
    s->add_option("input", a.path, "graph file, JSON or edge list ('-' reads stdin)")->required();
    s->add_flag("--json,-j", a.json, "machine-readable output");
    s->add_flag("--complement", a.compl_, "the file holds the complement graph");
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"prime graph realizability toolkit"};
    app.name("gkgraph");
    app.require_subcommand(1);
    int rc = 0;

    // classify
    auto* classify = app.add_subcommand("classify", "decide class membership of a graph");
    classify->require_subcommand(1);

    GraphArgs solv_a;
    auto* solv = classify->add_subcommand("solvable", "solvable-group realizability");
    add_graph_args(solv, solv_a);
    solv->callback([&] { rc = run_solvable(load_input_graph(solv_a.path, solv_a.compl_), solv_a.json, out); });

    GraphArgs meta_a;
    auto* meta = classify->add_subcommand("metanilpotent",
                                          "metanilpotent / squarefree solvable realizability");
    add_graph_args(meta, meta_a);
    meta->callback([&] { rc = run_metanilpotent(load_input_graph(meta_a.path, meta_a.compl_), meta_a.json, out); });

    GraphArgs npf_a;
    u64 npf_n = 0;
    auto* npf = classify->add_subcommand("npowerfree", "n-th-power-free solvable realizability");
    npf->add_option("--n", npf_n, "power-free bound, n >= 2")->required();
    add_graph_args(npf, npf_a);
    npf->callback([&] { rc = run_npowerfree(load_input_graph(npf_a.path, npf_a.compl_), npf_n, npf_a.json, out); });

    GraphArgs cfs_a;
    auto* cfs = classify->add_subcommand("cubefree-solvable", "cube-free solvable realizability");
    add_graph_args(cfs, cfs_a);
    cfs->callback(
        [&] { rc = run_cubefree_solvable(load_input_graph(cfs_a.path, cfs_a.compl_), cfs_a.json, out); });

    GraphArgs cf_a;
    CubefreeOptions cf_opts;
    auto* cf = classify->add_subcommand("cubefree", "cube-free realizability, all interpretations");
    cf->add_option("--q-bound", cf_opts.q_bound, "largest characteristic tried")->capture_default_str();
    cf->add_flag("--include-characteristic", cf_opts.include_characteristic,
                 "also allow the characteristic among the absorbed singletons");
    add_graph_args(cf, cf_a);
    cf->callback([&] { rc = run_cubefree(load_input_graph(cf_a.path, cf_a.compl_), cf_opts, cf_a.json, out); });

    GraphArgs psl_a;
    u64 psl_bound = 100'000;
    auto* psl = classify->add_subcommand("psl2-cubefree", "single PSL(2,q) shape match");
    psl->add_option("--q-bound", psl_bound, "largest characteristic tried")->capture_default_str();
    add_graph_args(psl, psl_a);
    psl->callback(
        [&] { rc = run_psl2_cubefree(load_input_graph(psl_a.path, psl_a.compl_), psl_bound, psl_a.json, out); });

    GraphArgs ps_a;
    auto* ps = classify->add_subcommand("pseudo-solvable", "pseudo-solvability conditions (prime labels)");
    add_graph_args(ps, ps_a);
    ps->callback([&] {
        Graph g = load_input_graph(ps_a.path, ps_a.compl_);
        rc = run_pseudo_solvable(PrimeLabeledGraph::from_graph(std::move(g)), ps_a.json, out);
    });

    // realize
    auto* realize = app.add_subcommand("realize", "construct witness groups");
    realize->require_subcommand(1);

    GraphArgs rsq_a;
    RealizeOptions rsq_opts;
    auto* rsq = realize->add_subcommand("squarefree", "squarefree-order witness group");
    rsq->add_flag("--odd-only", rsq_opts.odd_only, "avoid the prime 2");
    rsq->add_option("--avoid", rsq_opts.avoid, "primes to avoid (comma separated)")->delimiter(',');
    rsq->add_option("--seed", rsq_opts.seed, "nonzero: perturb the prime choices");
    add_graph_args(rsq, rsq_a);
    rsq->callback([&] {
        rc = run_realize_squarefree(load_input_graph(rsq_a.path, rsq_a.compl_), rsq_opts, rsq_a.json, out);
    });

    GraphArgs rnc_a;
    u64 rnc_n = 0;
    auto* rnc = realize->add_subcommand("npowerfree-cert", "n-th-power-free order certificate");
    rnc->add_option("--n", rnc_n, "power-free bound, n >= 2")->required();
    add_graph_args(rnc, rnc_a);
    rnc->callback(
        [&] { rc = run_realize_npf_cert(load_input_graph(rnc_a.path, rnc_a.compl_), rnc_n, rnc_a.json, out); });

    GraphArgs rcf_a;
    CubefreeOptions rcf_copts;
    RealizeOptions rcf_ropts;
    auto* rcf = realize->add_subcommand("cubefree-nonsolvable", "PSL(2,q)-based cube-free witness group");
    rcf->add_option("--q-bound", rcf_copts.q_bound, "largest characteristic tried")->capture_default_str();
    rcf->add_flag("--include-characteristic", rcf_copts.include_characteristic,
                  "also allow the characteristic among the absorbed singletons");
    rcf->add_option("--seed", rcf_ropts.seed, "nonzero: perturb the prime choices");
    add_graph_args(rcf, rcf_a);
    rcf->callback([&] {
        rc = run_realize_cubefree(load_input_graph(rcf_a.path, rcf_a.compl_), rcf_copts, rcf_ropts, rcf_a.json,
                                  out, err);
    });

    // group
    auto* group = app.add_subcommand("group", "query the finite-group oracle");
    group->require_subcommand(1);

    std::string eo_path;
    bool eo_json = false;
    auto* eo = group->add_subcommand("eo", "set of element orders");
    eo->add_option("spec", eo_path, "group spec JSON file")->required();
    eo->add_flag("--json,-j", eo_json, "machine-readable output");
    eo->callback([&] { rc = run_group_eo(load_spec(eo_path), eo_json, out); });

    std::string pgr_path;
    bool pgr_json = false, pgr_dot = false;
    auto* pgr = group->add_subcommand("prime-graph", "prime graph of a group spec");
    pgr->add_option("spec", pgr_path, "group spec JSON file")->required();
    pgr->add_flag("--json,-j", pgr_json, "machine-readable output");
    pgr->add_flag("--dot", pgr_dot, "Graphviz output");
    pgr->callback([&] { rc = run_group_prime_graph(load_spec(pgr_path), pgr_json, pgr_dot, out); });

    // dual
    auto* dual = app.add_subcommand("dual", "common divisor graphs of divisor-closed sets");
    dual->require_subcommand(1);

    std::string fw_path;
    bool fw_json = false, fw_dot = false;
    auto* fw = dual->add_subcommand("forward", "gamma and delta of a divisor-closed set");
    fw->add_option("set", fw_path, "divisor-closed set JSON file")->required();
    fw->add_flag("--json,-j", fw_json, "machine-readable output");
    fw->add_flag("--dot", fw_dot, "Graphviz output");
    fw->callback([&] { rc = run_dual_forward(load_set(fw_path), fw_json, fw_dot, out); });

    std::string rec_path;
    bool rec_json = false, rec_dot = false;
    auto* rec = dual->add_subcommand("recover", "reconstruct delta from a gamma graph");
    rec->add_option("input", rec_path, "graph file, JSON or edge list ('-' reads stdin)")->required();
    rec->add_flag("--json,-j", rec_json, "machine-readable output");
    rec->add_flag("--dot", rec_dot, "Graphviz output of the recovered delta");
    rec->callback([&] { rc = run_dual_recover(load_input_graph(rec_path, false), rec_json, rec_dot, out); });

    // selftest
    std::string st_fixtures = "fixtures";
    bool st_json = false;
    auto* st = app.add_subcommand("selftest", "replay the recorded worked examples");
    st->add_option("--fixtures", st_fixtures, "fixture directory")->capture_default_str();
    st->add_flag("--json,-j", st_json, "machine-readable output");
    st->callback([&] { rc = run_selftest_cmd(st_fixtures, st_json, out); });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const BoundExhaustedError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

}  // namespace gk
