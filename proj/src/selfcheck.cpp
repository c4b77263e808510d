#include "gk/selfcheck.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gk/dualgraph.hpp"
#include "gk/groups.hpp"
#include "gk/io.hpp"
#include "gk/numtheory.hpp"

namespace gk {

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i];
    }
    return os.str();
}

// Minimal representative over rotation and reflection.
std::vector<int> canonical_cycle(const std::vector<int>& c) {
    if (c.empty()) return c;
    std::vector<int> best;
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<int> seq = c;
        if (dir) std::reverse(seq.begin(), seq.end());
        for (std::size_t start = 0; start < seq.size(); ++start) {
            std::vector<int> cand;
            cand.reserve(seq.size());
            for (std::size_t i = 0; i < seq.size(); ++i)
                cand.push_back(seq[(start + i) % seq.size()]);
            if (best.empty() || cand < best) best = std::move(cand);
        }
    }
    return best;
}

}  // namespace

bool valid_odd_cycle(const Graph& complement_graph, const std::vector<int>& red,
                     const std::vector<int>& cycle) {
    if (cycle.size() < 3 || cycle.size() % 2 == 0) return false;
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int v : cycle) {
        if (v < 0 || v >= complement_graph.vertex_count()) return false;
        if (std::find(red.begin(), red.end(), v) != red.end()) return false;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        int u = cycle[i];
        int v = cycle[(i + 1) % cycle.size()];
        if (!complement_graph.has_edge(u, v)) return false;
    }
    return true;
}

CheckResult compare_replay_table(const Graph& complement_graph, const NpfReject& report,
                                 const nlohmann::json& expected) {
    if (report.triangle) return CheckResult::fail("report is a triangle rejection, not a case table");

    std::map<std::string, int> index;
    for (int i = 0; i < complement_graph.vertex_count(); ++i) index[complement_graph.label(i)] = i;
    auto to_indices = [&](const nlohmann::json& arr) {
        std::vector<int> out;
        for (const auto& s : arr) {
            auto it = index.find(s.get<std::string>());
            if (it == index.end()) throw std::runtime_error("unknown vertex label in case table");
            out.push_back(it->second);
        }
        return out;
    };

    std::map<std::vector<int>, const NpfCase*> by_red;
    for (const auto& c : report.cases) {
        std::vector<int> key = c.red;
        std::sort(key.begin(), key.end());
        if (by_red.count(key)) return CheckResult::fail("duplicate red set in report: " + join_ints(key));
        by_red[key] = &c;
    }

    const auto& cases = expected.at("cases");
    for (const auto& e : cases) {
        std::vector<int> red = to_indices(e.at("red"));
        std::sort(red.begin(), red.end());
        auto it = by_red.find(red);
        if (it == by_red.end())
            return CheckResult::fail("case missing from report: red = {" + join_ints(red) + "}");
        const NpfCase& got = *it->second;

        if (e.contains("cycle")) {
            if (got.odd_cycle.empty())
                return CheckResult::fail("red {" + join_ints(red) + "}: expected odd cycle, got colorings");
            std::vector<int> want = to_indices(e.at("cycle"));
            if (canonical_cycle(want) != canonical_cycle(got.odd_cycle)) {
                bool both = valid_odd_cycle(complement_graph, got.red, want) &&
                            valid_odd_cycle(complement_graph, got.red, got.odd_cycle);
                if (!both)
                    return CheckResult::fail("red {" + join_ints(red) + "}: cycles differ and reported one is invalid: " +
                                             join_ints(got.odd_cycle));
            }
        } else {
            std::vector<int> want_ends = to_indices(e.at("endpoints"));
            std::sort(want_ends.begin(), want_ends.end());
            if (!got.odd_cycle.empty())
                return CheckResult::fail("red {" + join_ints(red) + "}: expected forced endpoints, got odd cycle");
            std::vector<int> got_ends;
            for (const auto& col : got.colorings) {
                if (col.forced_ends.size() != 1)
                    return CheckResult::fail("red {" + join_ints(red) + "}: a coloring forces " +
                                             std::to_string(col.forced_ends.size()) + " ends, expected exactly 1");
                got_ends.push_back(col.forced_ends.front());
            }
            std::sort(got_ends.begin(), got_ends.end());
            if (got_ends != want_ends)
                return CheckResult::fail("red {" + join_ints(red) + "}: forced ends {" + join_ints(got_ends) +
                                         "} != expected {" + join_ints(want_ends) + "}");
        }
    }

    // The only report entry beyond the table is the empty red set, and its
    // odd cycle must be genuine.
    if (report.cases.size() != cases.size() + 1)
        return CheckResult::fail("report has " + std::to_string(report.cases.size()) + " cases, expected " +
                                 std::to_string(cases.size() + 1));
    auto empty_it = by_red.find({});
    if (empty_it == by_red.end()) return CheckResult::fail("report lacks the empty red-set case");
    const NpfCase& zero = *empty_it->second;
    if (zero.odd_cycle.empty() || !valid_odd_cycle(complement_graph, {}, zero.odd_cycle))
        return CheckResult::fail("empty red-set case lacks a valid odd cycle");

    return CheckResult::pass();
}

RoundtripOutcome verify_squarefree_roundtrip(const Graph& f, const RealizeOptions& opts) {
    auto res = realize_squarefree(f, opts);
    if (std::holds_alternative<RealizeReject>(res)) {
        RoundtripOutcome out;
        out.status = RoundtripStatus::Rejected;
        out.detail = "odd cycle " + join_ints(std::get<RealizeReject>(res).odd_cycle);
        return out;
    }
    const auto& real = std::get<SquarefreeRealization>(res);

    RoundtripOutcome out;
    out.order = group_order(real.spec);
    if (std::holds_alternative<Semidirect>(real.spec.value) && out.order > kSemidirectEnumerationCap) {
        out.status = RoundtripStatus::Oversize;
        out.detail = "order " + std::to_string(out.order);
        return out;
    }

    PrimeLabeledGraph got = prime_graph_of(real.spec);

    std::vector<std::pair<u64, int>> pv;
    for (int i = 0; i < f.vertex_count(); ++i) pv.emplace_back(real.vertex_primes[i], i);
    std::sort(pv.begin(), pv.end());
    Graph want;
    for (const auto& [p, v] : pv) {
        (void)v;
        want.add_vertex(std::to_string(p));
    }
    for (const auto& [u, v] : f.edges())
        want.add_edge(std::to_string(real.vertex_primes[u]), std::to_string(real.vertex_primes[v]));

    if (!(got.graph == want)) {
        out.status = RoundtripStatus::Mismatch;
        std::ostringstream os;
        os << "prime graph of realized group differs; got edges:";
        for (const auto& [u, v] : got.graph.edges()) os << ' ' << got.graph.label(u) << '-' << got.graph.label(v);
        os << "; wanted:";
        for (const auto& [u, v] : want.edges()) os << ' ' << want.label(u) << '-' << want.label(v);
        out.detail = os.str();
        return out;
    }
    return out;
}

CheckResult check_figure2(const Graph& gamma) {
    auto res = recover_delta(gamma);
    if (std::holds_alternative<Recovered>(res)) return CheckResult::fail("recovery accepted; expected rejection");
    const auto& rej = std::get<RecoveryRejected>(res);
    if (rej.reason != RecoveryReject::MissingSubset)
        return CheckResult::fail("rejection reason " + std::string(to_string(rej.reason)) +
                                 ", expected missing-subset");
    if (rej.witness_value != 10)
        return CheckResult::fail("witness value " + std::to_string(rej.witness_value) + ", expected 10");

    std::vector<u64> vals;
    for (const auto& [label, v] : rej.values) vals.push_back(v);
    std::sort(vals.begin(), vals.end());
    if (vals != std::vector<u64>{2, 3, 5, 6, 30}) {
        std::ostringstream os;
        os << "reconstructed values";
        for (u64 v : vals) os << ' ' << v;
        os << ", expected 2 3 5 6 30";
        return CheckResult::fail(os.str());
    }

    Contraction con = contract(gamma);
    std::vector<std::vector<std::string>> merged;
    for (const auto& cls : con.classes) {
        if (cls.size() < 2) continue;
        std::vector<std::string> labels;
        for (int v : cls) labels.push_back(gamma.label(v));
        std::sort(labels.begin(), labels.end());
        merged.push_back(std::move(labels));
    }
    if (merged.size() != 1 || merged[0] != std::vector<std::string>{"A", "A'"})
        return CheckResult::fail("contraction did not merge exactly {A, A'}");
    return CheckResult::pass();
}

namespace {

CheckResult replay_item(const std::string& dir, u64 n) {
    // The fixture stores the drawn complement; the classifier takes the
    // prime-graph side.
    Graph f = complement(io::load_graph(dir + "/figure1.json"));
    nlohmann::json table = nlohmann::json::parse(io::read_file(dir + "/figure1_cases.json"));
    auto verdict = classify_npowerfree_solvable(f, n);
    if (!std::holds_alternative<NpfReject>(verdict))
        return CheckResult::fail("classifier accepted at n = " + std::to_string(n));
    return compare_replay_table(complement(f), std::get<NpfReject>(verdict), table);
}

CheckResult solvable_item(const std::string& dir) {
    Graph f = complement(io::load_graph(dir + "/figure1.json"));
    auto verdict = classify_solvable(f);
    if (!std::holds_alternative<SolvableAccept>(verdict)) return CheckResult::fail("solvable classifier rejected");
    const auto& acc = std::get<SolvableAccept>(verdict);
    if (!acc.complement_coloring.proper_on(complement(f))) return CheckResult::fail("returned coloring is not proper");
    return CheckResult::pass();
}

CheckResult profiles_item() {
    auto p5 = psl2_cubefree_profile(5);
    if (!p5 || p5->m != 1 || p5->n != 1) return CheckResult::fail("profile of 5 wrong");
    auto p13 = psl2_cubefree_profile(13);
    if (!p13 || p13->m != 2 || p13->n != 1) return CheckResult::fail("profile of 13 wrong");
    auto p11 = psl2_cubefree_profile(11);
    if (!p11 || p11->m != 1 || p11->n != 2) return CheckResult::fail("profile of 11 wrong");
    if (psl2_cubefree_profile(7)) return CheckResult::fail("7 should have no profile (8 divides order)");
    return CheckResult::pass();
}

CheckResult dickson_item() {
    for (u64 q : {5ull, 13ull}) {
        GroupSpec spec{Psl2{q}};
        EoSet matrix = element_orders(spec);
        EoSet closed = dickson_eo(q);
        if (matrix != closed) return CheckResult::fail("matrix orders differ from closed form at q = " + std::to_string(q));
    }
    return CheckResult::pass();
}

CheckResult roundtrip_item() {
    struct Canned {
        const char* name;
        Graph f;
        RoundtripStatus want;
    };
    std::vector<Canned> canned;

    {
        Graph g;  // single edge: one group of order pq with a pq-element
        g.add_edge("a", "b");
        canned.push_back({"edge", g, RoundtripStatus::Ok});
    }
    {
        Graph g;  // path: one endpoint pair stays coprime-commuting-free
        g.add_edge("a", "b");
        g.add_edge("b", "c");
        canned.push_back({"path", g, RoundtripStatus::Ok});
    }
    {
        Graph g;  // triangle realizes as a cyclic group
        g.add_edge("a", "b");
        g.add_edge("b", "c");
        g.add_edge("a", "c");
        canned.push_back({"triangle", g, RoundtripStatus::Ok});
    }
    {
        Graph g;  // 4-cycle: two independent actions
        g.add_edge("a", "b");
        g.add_edge("b", "c");
        g.add_edge("c", "d");
        g.add_edge("d", "a");
        canned.push_back({"square", g, RoundtripStatus::Ok});
    }
    {
        Graph g;  // 5-cycle is self-complementary: must be turned away
        g.add_edge("a", "b");
        g.add_edge("b", "c");
        g.add_edge("c", "d");
        g.add_edge("d", "e");
        g.add_edge("e", "a");
        canned.push_back({"pentagon", g, RoundtripStatus::Rejected});
    }

    for (const auto& c : canned) {
        RoundtripOutcome out = verify_squarefree_roundtrip(c.f);
        if (out.status != c.want)
            return CheckResult::fail(std::string(c.name) + ": " + out.detail);
    }
    return CheckResult::pass();
}

}  // namespace

std::vector<SelftestItem> run_selftest(const std::string& fixtures_dir) {
    std::vector<SelftestItem> items;
    auto add = [&](const std::string& name, auto&& fn) {
        SelftestItem item;
        item.name = name;
        try {
            CheckResult r = fn();
            item.passed = r.ok;
            item.detail = r.detail;
        } catch (const std::exception& e) {
            item.passed = false;
            item.detail = e.what();
        }
        items.push_back(std::move(item));
    };

    add("figure1-replay-n5", [&] { return replay_item(fixtures_dir, 5); });
    add("figure1-replay-n4", [&] { return replay_item(fixtures_dir, 4); });
    add("figure1-solvable", [&] { return solvable_item(fixtures_dir); });
    add("figure2-recovery", [&] { return check_figure2(io::load_graph(fixtures_dir + "/figure2.json")); });
    add("psl-profiles", [] { return profiles_item(); });
    add("dickson-oracle", [] { return dickson_item(); });
    add("realizer-roundtrip", [] { return roundtrip_item(); });
    return items;
}

}  // namespace gk
