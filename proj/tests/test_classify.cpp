#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <variant>

#include "gk/classify.hpp"
#include "gk/io.hpp"
#include "gk/selfcheck.hpp"
#include "oracles.hpp"

using namespace gk;

namespace {

Graph fixture_complement(const char* name) {
    return complement(io::load_graph(std::string(GK_FIXTURE_DIR) + "/" + name));
}

Graph from_edges(std::vector<std::string> vertices,
                 std::vector<std::pair<std::string, std::string>> edges) {
    Graph g;
    for (auto& v : vertices) g.add_vertex(v);
    for (auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

bool npf_accepts(const Graph& f, u64 n) {
    return std::holds_alternative<NpfWitness>(classify_npowerfree_solvable(f, n));
}

}  // namespace

TEST_CASE("solvable classifier agrees with the triangle-free 3-coloring oracle") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 150; t++) {
        int nv = 1 + static_cast<int>(rng() % 9);
        Graph f = oracle::random_graph(rng, nv, 20 + static_cast<int>(rng() % 60));
        Graph c = complement(f);
        bool want = !oracle::triangle_slow(c) && oracle::colorable_slow(c, 3);
        auto res = classify_solvable(f);
        CHECK(std::holds_alternative<SolvableAccept>(res) == want);
        if (auto* acc = std::get_if<SolvableAccept>(&res)) {
            CHECK(acc->complement_coloring.proper_on(c));
            CHECK(acc->complement_coloring.num_colors == 3);
        } else {
            auto& rej = std::get<SolvableReject>(res);
            if (rej.triangle) {
                auto [i, j, k] = *rej.triangle;
                CHECK(c.has_edge(i, j));
                CHECK(c.has_edge(i, k));
                CHECK(c.has_edge(j, k));
            } else {
                // no triangle, so the 3-coloring search must have failed
                CHECK_FALSE(oracle::colorable_slow(c, 3));
            }
        }
    }
}

TEST_CASE("metanilpotent classifier is complement bipartiteness") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 150; t++) {
        int nv = 1 + static_cast<int>(rng() % 9);
        Graph f = oracle::random_graph(rng, nv, 20 + static_cast<int>(rng() % 60));
        Graph c = complement(f);
        auto res = classify_metanilpotent(f);
        CHECK(std::holds_alternative<MetanilpotentAccept>(res) == oracle::bipartite_slow(c));
        if (auto* acc = std::get_if<MetanilpotentAccept>(&res)) {
            CHECK(acc->complement_coloring.proper_on(c));
            CHECK(acc->complement_coloring.num_colors == 2);
        } else {
            CHECK(valid_odd_cycle(c, {}, std::get<MetanilpotentReject>(res).odd_cycle));
        }
    }
}

TEST_CASE("npowerfree classifier agrees with the exhaustive search") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 60; t++) {
        int nv = 1 + static_cast<int>(rng() % 6);
        Graph f = oracle::random_graph(rng, nv, 20 + static_cast<int>(rng() % 60));
        for (u64 n : {u64{2}, u64{3}, u64{5}, u64{7}, u64{101}})
            CHECK(npf_accepts(f, n) == oracle::npf_accept_slow(f, n));
    }
    Graph f;  // empty graph edge case
    CHECK_THROWS_AS(classify_npowerfree_solvable(f, 1), std::invalid_argument);
}

TEST_CASE("npowerfree witnesses are internally consistent") {
    std::mt19937_64 rng(37);
    int accepted = 0;
    for (int t = 0; t < 200 && accepted < 40; t++) {
        int nv = 2 + static_cast<int>(rng() % 6);
        Graph f = oracle::random_graph(rng, nv, 20 + static_cast<int>(rng() % 60));
        u64 n = 3 + rng() % 10;
        auto res = classify_npowerfree_solvable(f, n);
        auto* w = std::get_if<NpfWitness>(&res);
        if (!w) continue;
        accepted++;
        Graph c = complement(f);
        CHECK(w->coloring.proper_on(c));
        CHECK(std::is_sorted(w->red_vertices.begin(), w->red_vertices.end()));
        REQUIRE(w->red_labels.size() == w->red_vertices.size());
        std::vector<u64> sorted_labels = w->red_labels;
        std::sort(sorted_labels.begin(), sorted_labels.end());
        CHECK(sorted_labels == first_primes(static_cast<int>(w->red_vertices.size())));
        for (size_t i = 0; i < w->red_vertices.size(); i++)
            CHECK(w->coloring.color[w->red_vertices[i]] == 0);

        Digraph d = canonical_orientation(c, w->coloring);
        size_t blues = 0;
        for (int v = 0; v < nv; v++)
            if (w->coloring.color[v] == 2) blues++;
        REQUIRE(w->blue.size() == blues);
        for (const auto& b : w->blue) {
            CHECK(w->coloring.color[b.vertex] == 2);
            CHECK(b.sources == oracle::two_path_sources_slow(d, b.vertex));
            u64 prod = 1;
            for (int s : b.sources) {
                auto it = std::find(w->red_vertices.begin(), w->red_vertices.end(), s);
                REQUIRE(it != w->red_vertices.end());
                prod *= w->red_labels[it - w->red_vertices.begin()];
            }
            CHECK(b.label_product == prod);
            CHECK(prod <= n - 1);
        }
    }
    CHECK(accepted >= 40);
}

TEST_CASE("npowerfree rejection tables cover every admissible red set") {
    std::mt19937_64 rng(41);
    int tables = 0;
    for (int t = 0; t < 120; t++) {
        // a random graph almost never has a triangle-free non-bipartite
        // complement, so build one: one or two odd holes plus chords that
        // keep the graph triangle-free
        int ring = 5 + 2 * static_cast<int>(rng() % 2);
        Graph c;
        for (int v = 0; v < ring; v++) c.add_vertex(std::to_string(v));
        for (int v = 0; v < ring; v++) c.add_edge(v, (v + 1) % ring);
        if (rng() % 2) {
            int base = ring;
            for (int v = 0; v < 5; v++) c.add_vertex(std::to_string(base + v));
            for (int v = 0; v < 5; v++) c.add_edge(base + v, base + (v + 1) % 5);
        }
        int nv = c.vertex_count();
        for (int tries = 0; tries < 4; tries++) {
            int u = static_cast<int>(rng() % nv), v = static_cast<int>(rng() % nv);
            if (u == v || c.has_edge(u, v)) continue;
            c.add_edge(u, v);
            if (oracle::triangle_slow(c)) c.remove_edge(u, v);
        }
        Graph f = complement(c);
        u64 n = 2 + rng() % 4;
        auto res = classify_npowerfree_solvable(f, n);
        auto* rej = std::get_if<NpfReject>(&res);
        if (!rej) continue;  // a small red set can fix the odd holes
        REQUIRE_FALSE(rej->triangle.has_value());
        tables++;
        int kmax = count_primes_below(n, nv);

        // enumerate the independent red subsets of size <= kmax ourselves
        size_t expected_cases = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nv); mask++) {
            if (std::popcount(mask) > kmax) continue;
            bool independent = true;
            for (auto [u, v] : c.edges())
                if (((mask >> u) & 1) && ((mask >> v) & 1)) independent = false;
            if (independent) expected_cases++;
        }
        CHECK(rej->cases.size() == expected_cases);

        for (const auto& cs : rej->cases) {
            CHECK(std::is_sorted(cs.red.begin(), cs.red.end()));
            CHECK(static_cast<int>(cs.red.size()) <= kmax);
            if (!cs.odd_cycle.empty()) {
                CHECK(cs.colorings.empty());
                CHECK(valid_odd_cycle(c, cs.red, cs.odd_cycle));
            } else {
                // every coloring entry splits the non-red vertices in two
                for (const auto& col : cs.colorings) {
                    CHECK(col.green.size() + col.blue.size() + cs.red.size() ==
                          static_cast<size_t>(nv));
                    for (int fe : col.forced_ends)
                        CHECK(std::find(col.blue.begin(), col.blue.end(), fe) != col.blue.end());
                }
            }
        }
    }
    CHECK(tables >= 40);
}

TEST_CASE("npowerfree special levels collapse onto simpler classifiers") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 120; t++) {
        int nv = 1 + static_cast<int>(rng() % 7);
        Graph f = oracle::random_graph(rng, nv, 20 + static_cast<int>(rng() % 60));
        bool meta = std::holds_alternative<MetanilpotentAccept>(classify_metanilpotent(f));
        bool cf = std::holds_alternative<CubefreeSolvableAccept>(classify_cubefree_solvable(f));
        bool solv = std::holds_alternative<SolvableAccept>(classify_solvable(f));
        CHECK(npf_accepts(f, 2) == meta);
        CHECK(npf_accepts(f, 3) == cf);
        CHECK(npf_accepts(f, 4) == npf_accepts(f, 5));

        bool prev = npf_accepts(f, 2);
        for (u64 n : {u64{3}, u64{4}, u64{7}, u64{13}}) {
            bool now = npf_accepts(f, n);
            CHECK((!prev || now));  // monotone in n
            if (now) CHECK(solv);
            prev = now;
        }
    }
}

TEST_CASE("cubefree solvable classifier matches the one-removal oracle") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 150; t++) {
        int nv = 1 + static_cast<int>(rng() % 9);
        Graph f = oracle::random_graph(rng, nv, 20 + static_cast<int>(rng() % 60));
        Graph c = complement(f);
        bool removable = false;
        for (int v = 0; v < nv && !removable; v++)
            if (oracle::bipartite_slow(c.induced_without(v))) removable = true;
        bool want = !oracle::triangle_slow(c) && removable;
        auto res = classify_cubefree_solvable(f);
        CHECK(std::holds_alternative<CubefreeSolvableAccept>(res) == want);
        if (auto* acc = std::get_if<CubefreeSolvableAccept>(&res)) {
            REQUIRE(acc->removed.has_value());
            CHECK(acc->coloring.color[*acc->removed] == -1);
            Graph rest = c.induced_without(*acc->removed);
            Coloring shifted;
            shifted.num_colors = 2;
            for (int v = 0; v < nv; v++)
                if (v != *acc->removed) shifted.color.push_back(acc->coloring.color[v]);
            CHECK(shifted.proper_on(rest));
        }
    }
}

TEST_CASE("worked 8-vertex example: classifiers on the drawn complement") {
    Graph f = fixture_complement("figure1.json");
    Graph c = complement(f);

    auto solv = classify_solvable(f);
    REQUIRE(std::holds_alternative<SolvableAccept>(solv));
    CHECK(std::get<SolvableAccept>(solv).complement_coloring.proper_on(c));

    // the drawn complement is triangle-free but needs 3 colors
    CHECK_FALSE(find_triangle(c).has_value());
    CHECK_FALSE(oracle::colorable_slow(c, 2));

    for (u64 n : {u64{4}, u64{5}}) {
        auto res = classify_npowerfree_solvable(f, n);
        auto* rej = std::get_if<NpfReject>(&res);
        REQUIRE(rej != nullptr);
        CHECK_FALSE(rej->triangle.has_value());
        CHECK(rej->cases.size() == 25);  // 1 empty + 8 singles + 16 independent pairs
        std::ifstream in(std::string(GK_FIXTURE_DIR) + "/figure1_cases.json");
        REQUIRE(in.good());
        CheckResult cmp = compare_replay_table(c, *rej, io::json::parse(in));
        INFO(cmp.detail);
        CHECK(cmp.ok);
    }

    // one step up the ladder the same graph becomes realizable
    auto res7 = classify_npowerfree_solvable(f, 7);
    auto* w = std::get_if<NpfWitness>(&res7);
    REQUIRE(w != nullptr);
    CHECK(w->red_vertices == std::vector<int>{0, 1});
    std::multiset<u64> products;
    for (const auto& b : w->blue) products.insert(b.label_product);
    CHECK(products == std::multiset<u64>{1, 3, 6});
}

TEST_CASE("cubefree verdict list: odd-order and solvable-even flags") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 80; t++) {
        int nv = 1 + static_cast<int>(rng() % 8);
        Graph f = oracle::random_graph(rng, nv, 20 + static_cast<int>(rng() % 60));
        Graph c = complement(f);
        CubefreeResult res = classify_cubefree(f);

        bool has_odd = false, has_even = false;
        for (const auto& v : res.verdicts) {
            if (std::holds_alternative<OddOrderVerdict>(v)) has_odd = true;
            if (std::holds_alternative<SolvableEvenVerdict>(v)) has_even = true;
        }
        CHECK(has_odd == oracle::bipartite_slow(c));
        bool removable = false;
        for (int v = 0; v < nv && !removable; v++)
            if (oracle::bipartite_slow(c.induced_without(v))) removable = true;
        CHECK(has_even == (!oracle::triangle_slow(c) && removable));
    }
}

TEST_CASE("cubefree non-solvable verdicts carry coherent structure") {
    std::mt19937_64 rng(59);
    int seen = 0;
    for (int t = 0; t < 400; t++) {
        int nv = 3 + static_cast<int>(rng() % 6);
        Graph f = oracle::random_graph(rng, nv, 20 + static_cast<int>(rng() % 60));
        Graph c = complement(f);
        CubefreeResult res = classify_cubefree(f);
        for (const auto& var : res.verdicts) {
            auto* v = std::get_if<NonSolvableVerdict>(&var);
            if (!v) continue;
            seen++;
            auto prof = psl2_cubefree_profile(v->q);
            REQUIRE(prof.has_value());
            CHECK(prof->m == v->profile.m);
            CHECK(prof->n == v->profile.n);

            // class sizes add up against the profile sides
            int want_m = v->m_is_minus_side ? prof->m : prof->n;
            int want_n = v->m_is_minus_side ? prof->n : prof->m;
            CHECK(static_cast<int>(v->m_class.size()) +
                      (v->m_is_minus_side ? v->s_minus : v->s_plus) ==
                  want_m);
            CHECK(static_cast<int>(v->n_class.size()) +
                      (v->m_is_minus_side ? v->s_plus : v->s_minus) ==
                  want_n);
            CHECK(v->q_class.size() == (v->characteristic_deleted ? 0u : 1u));

            // the kept classes form disjoint cliques with no cross edges
            std::vector<std::vector<int>> cliques{v->q_class, v->m_class, v->n_class};
            for (const auto& cl : cliques)
                for (size_t i = 0; i < cl.size(); i++)
                    for (size_t j = i + 1; j < cl.size(); j++) CHECK(f.has_edge(cl[i], cl[j]));
            for (size_t a = 0; a < cliques.size(); a++)
                for (size_t b = a + 1; b < cliques.size(); b++)
                    for (int x : cliques[a])
                        for (int y : cliques[b]) CHECK_FALSE(f.has_edge(x, y));

            // absorbed singletons are complement-isolated, i.e. joined to all
            for (int s : v->s_vertices) CHECK(c.degree(s) == 0);
            CHECK(static_cast<int>(v->s_vertices.size()) ==
                  v->s_minus + v->s_plus + (v->characteristic_deleted ? 1 : 0));

            // the leftover part stays bipartite under the reported coloring
            mask_t bmask = 0;
            for (int x : v->bipartite_vertices) bmask |= mask_t{1} << x;
            Graph rest = c.induced(bmask);
            Coloring shifted;
            shifted.num_colors = 2;
            for (int x : v->bipartite_vertices) shifted.color.push_back(v->bipartite_coloring.color[x]);
            CHECK(shifted.proper_on(rest));

            // all classes together partition the vertex set
            std::vector<int> all;
            for (const auto& cl : cliques) all.insert(all.end(), cl.begin(), cl.end());
            all.insert(all.end(), v->s_vertices.begin(), v->s_vertices.end());
            all.insert(all.end(), v->bipartite_vertices.begin(), v->bipartite_vertices.end());
            std::sort(all.begin(), all.end());
            std::vector<int> everything(nv);
            std::iota(everything.begin(), everything.end(), 0);
            CHECK(all == everything);
        }
    }
    CHECK(seen >= 30);
}

TEST_CASE("worked cubefree example with an absorbed singleton") {
    Graph f = from_edges({"2", "3", "5", "11"}, {{"2", "3"}, {"2", "5"}, {"3", "5"}, {"5", "11"}});
    CubefreeResult res = classify_cubefree(f);
    CHECK_FALSE(res.q_bound_exhausted);
    REQUIRE(res.verdicts.size() == 3);

    auto* odd = std::get_if<OddOrderVerdict>(&res.verdicts[0]);
    REQUIRE(odd != nullptr);
    auto* even = std::get_if<SolvableEvenVerdict>(&res.verdicts[1]);
    REQUIRE(even != nullptr);
    auto* ns = std::get_if<NonSolvableVerdict>(&res.verdicts[2]);
    REQUIRE(ns != nullptr);
    CHECK(ns->q == 11);
    CHECK(ns->profile.m == 1);
    CHECK(ns->profile.n == 2);
    CHECK_FALSE(ns->characteristic_deleted);
    CHECK(ns->q_class == std::vector<int>{3});
    CHECK(ns->s_vertices == std::vector<int>{2});  // the universal vertex "5"
    CHECK(ns->s_minus + ns->s_plus == 1);
    CHECK(ns->bipartite_vertices.empty());
}

TEST_CASE("cubefree bound exhaustion is reported, not silently dropped") {
    // two cliques of sizes 3 and 2 plus a singleton: smallest q is 131
    Graph f = from_edges({"a", "b", "c", "d", "e", "f"},
                         {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"d", "e"}});
    CubefreeOptions tight;
    tight.q_bound = 50;
    CubefreeResult res = classify_cubefree(f, tight);
    CHECK(res.verdicts.empty());
    CHECK(res.q_bound_exhausted);

    CubefreeResult wide = classify_cubefree(f);
    REQUIRE(wide.verdicts.size() == 1);
    auto* ns = std::get_if<NonSolvableVerdict>(&wide.verdicts[0]);
    REQUIRE(ns != nullptr);
    CHECK(ns->q == 131);
}

TEST_CASE("characteristic absorption is opt-in") {
    // a triangle has three universal vertices; with absorption enabled one of
    // them may carry the characteristic itself (the simple group times two
    // cyclic factors), while the default never deletes the q vertex
    Graph f = from_edges({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
    CubefreeResult plain = classify_cubefree(f);
    int plain_ns = 0, absorbed = 0;
    for (const auto& var : plain.verdicts)
        if (std::holds_alternative<NonSolvableVerdict>(var)) plain_ns++;
    CHECK(plain_ns == 0);

    CubefreeOptions opts;
    opts.include_characteristic = true;
    CubefreeResult more = classify_cubefree(f, opts);
    for (const auto& var : more.verdicts)
        if (auto* v = std::get_if<NonSolvableVerdict>(&var)) {
            CHECK(v->characteristic_deleted);
            CHECK(v->q_class.empty());
            absorbed++;
        }
    CHECK(absorbed >= 1);
}

TEST_CASE("direct shape matcher for the simple-group graphs") {
    Graph f1 = from_edges({"a", "b", "c", "d"}, {{"a", "b"}});
    PslShapeResult r1 = classify_psl2_cubefree(f1);
    CHECK(r1.shape_ok);
    REQUIRE(r1.match.has_value());
    CHECK(r1.match->q == 11);
    CHECK(r1.match->profile.m == 1);
    CHECK(r1.match->profile.n == 2);

    Graph f2 = from_edges({"a", "b", "c"}, {});
    PslShapeResult r2 = classify_psl2_cubefree(f2);
    CHECK(r2.shape_ok);
    REQUIRE(r2.match.has_value());
    CHECK(r2.match->q == 5);

    Graph f3 = from_edges({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"c", "d"}});
    PslShapeResult r3 = classify_psl2_cubefree(f3);
    CHECK(r3.shape_ok);
    REQUIRE(r3.match.has_value());
    CHECK(r3.match->q == 29);  // profile (2, 2)

    // connected graph: not a disjoint clique triple
    Graph f4 = from_edges({"a", "b"}, {{"a", "b"}});
    CHECK_FALSE(classify_psl2_cubefree(f4).shape_ok);
    // three components but no singleton
    Graph f5 = from_edges({"a", "b", "c", "d", "e", "f"},
                          {{"a", "b"}, {"c", "d"}, {"e", "f"}});
    CHECK_FALSE(classify_psl2_cubefree(f5).shape_ok);
    // component that is not a clique
    Graph f6 = from_edges({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "c"}});
    CHECK_FALSE(classify_psl2_cubefree(f6).shape_ok);

    // shape fine but bound too small
    Graph f7 = from_edges({"a", "b", "c", "d", "e", "f"},
                          {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"d", "e"}});
    PslShapeResult r7 = classify_psl2_cubefree(f7, 50);
    CHECK(r7.shape_ok);
    CHECK_FALSE(r7.match.has_value());
    CHECK(r7.bound_exhausted);
    PslShapeResult r7w = classify_psl2_cubefree(f7);
    REQUIRE(r7w.match.has_value());
    CHECK(r7w.match->q == 131);
}

TEST_CASE("pseudo-solvable screen on the bundled fixtures") {
    PrimeLabeledGraph f1 =
        PrimeLabeledGraph::from_graph(fixture_complement("pseudo_triangle_edge_complement.json"));
    PseudoSolvableReport r1 = pseudo_solvable_check(f1);
    CHECK(r1.condition_a);
    CHECK_FALSE(r1.condition_b);
    CHECK_FALSE(r1.ok());
    REQUIRE(r1.b_triangle.has_value());
    CHECK(*r1.b_triangle == std::array<u64, 3>{2, 3, 5});
    REQUIRE(r1.b_edges.size() == 1);
    CHECK(r1.b_edges[0] == std::pair<u64, u64>{2, 7});

    PrimeLabeledGraph f2 =
        PrimeLabeledGraph::from_graph(fixture_complement("pseudo_triangle_isolated_complement.json"));
    PseudoSolvableReport r2 = pseudo_solvable_check(f2);
    CHECK(r2.condition_a);
    CHECK(r2.condition_b);
    CHECK(r2.ok());
    CHECK(r2.b_edges.empty());
}

TEST_CASE("pseudo-solvable screen is necessary, not sufficient") {
    // the 11-vertex triangle-free 4-chromatic complement: both screens pass,
    // yet no solvable group fits because the complement is not 3-colorable
    PrimeLabeledGraph f =
        PrimeLabeledGraph::from_graph(fixture_complement("groetzsch_complement.json"));
    PseudoSolvableReport rep = pseudo_solvable_check(f);
    CHECK(rep.condition_a);
    CHECK(rep.condition_b);
    CHECK(rep.ok());

    Graph c = complement(f.graph);
    CHECK_FALSE(find_triangle(c).has_value());
    CHECK_FALSE(oracle::colorable_slow(c, 3));
    CHECK(oracle::colorable_slow(c, 4));
    auto solv = classify_solvable(f.graph);
    auto* rej = std::get_if<SolvableReject>(&solv);
    REQUIRE(rej != nullptr);
    CHECK_FALSE(rej->triangle.has_value());

    // dropping the 3-5 edge is what brings the chromatic number down
    int v3 = f.vertex_of(3), v5 = f.vertex_of(5);
    REQUIRE(v3 >= 0);
    REQUIRE(v5 >= 0);
    REQUIRE(c.has_edge(v3, v5));
    Graph ca = c;
    ca.remove_edge(v3, v5);
    CHECK(oracle::colorable_slow(ca, 3));
}

TEST_CASE("pseudo-solvable condition a can fail both ways") {
    // a triangle that survives the 3-5 edge removal
    Graph bad = from_edges({"2", "3", "5", "7"}, {});  // complement is K4
    PseudoSolvableReport r = pseudo_solvable_check(PrimeLabeledGraph::from_graph(bad));
    CHECK_FALSE(r.condition_a);
    REQUIRE(r.a_triangle.has_value());
    CHECK_FALSE(r.a_not_three_colorable);

    // no labels 2, 3, 5 at all: both conditions hold vacuously on an edge
    Graph tame = from_edges({"7", "11"}, {});
    PseudoSolvableReport rt = pseudo_solvable_check(PrimeLabeledGraph::from_graph(tame));
    CHECK(rt.condition_a);
    CHECK(rt.condition_b);
}
