#include <doctest.h>

#include <algorithm>
#include <random>
#include <variant>

#include "gk/io.hpp"
#include "gk/numtheory.hpp"
#include "gk/realize.hpp"
#include "gk/selfcheck.hpp"
#include "oracles.hpp"

using namespace gk;

namespace {

Graph from_edges(std::vector<std::string> vertices,
                 std::vector<std::pair<std::string, std::string>> edges) {
    Graph g;
    for (auto& v : vertices) g.add_vertex(v);
    for (auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph path3() { return from_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

}  // namespace

TEST_CASE("squarefree realization round-trips through the element-order oracle") {
    std::mt19937_64 rng(61);
    int verified = 0, oversize = 0;
    for (int t = 0; t < 60; t++) {
        int nv = 1 + static_cast<int>(rng() % 5);
        Graph f = oracle::random_cobipartite(rng, nv, 30 + static_cast<int>(rng() % 50));
        RoundtripOutcome out = verify_squarefree_roundtrip(f);
        INFO(out.detail);
        CHECK(out.status != RoundtripStatus::Rejected);  // complement is bipartite
        CHECK(out.status != RoundtripStatus::Mismatch);
        if (out.status == RoundtripStatus::Ok) verified++;
        if (out.status == RoundtripStatus::Oversize) oversize++;
    }
    CHECK(verified >= 50);
    CHECK(verified + oversize == 60);
}

TEST_CASE("squarefree realization rejects exactly the odd-cycle complements") {
    Graph c5 = from_edges({"a", "b", "c", "d", "e"},
                          {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}});
    auto res = realize_squarefree(c5);  // 5-cycle is self-complementary
    auto* rej = std::get_if<RealizeReject>(&res);
    REQUIRE(rej != nullptr);
    CHECK(valid_odd_cycle(complement(c5), {}, rej->odd_cycle));

    Graph star = from_edges({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"a", "d"}});
    auto sres = realize_squarefree(star);  // complement holds a triangle
    CHECK(std::holds_alternative<RealizeReject>(sres));
}

TEST_CASE("squarefree spec shapes follow the complement structure") {
    // no vertices: the trivial group
    auto empty = realize_squarefree(Graph{});
    CHECK(group_order(std::get<SquarefreeRealization>(empty).spec) == 1);

    // one vertex: one cyclic prime factor
    Graph one;
    one.add_vertex("a");
    auto single = std::get<SquarefreeRealization>(realize_squarefree(one));
    CHECK(std::holds_alternative<Cyclic>(single.spec.value));
    CHECK(single.vertex_primes == std::vector<u64>{2});

    // an edge: complement has no edges, so nobody acts
    Graph k2 = from_edges({"a", "b"}, {{"a", "b"}});
    auto prod = std::get<SquarefreeRealization>(realize_squarefree(k2));
    CHECK(std::holds_alternative<DirectProduct>(prod.spec.value));
    CHECK(group_order(prod.spec) == 6);

    // two isolated vertices: complement is an edge, one prime acts on the other
    Graph e2 = from_edges({"a", "b"}, {});
    auto sd = std::get<SquarefreeRealization>(realize_squarefree(e2));
    REQUIRE(std::holds_alternative<Semidirect>(sd.spec.value));
    CHECK(group_order(sd.spec) == 6);  // the symmetric group on 3 points
    CHECK(element_orders(sd.spec) == EoSet{1, 2, 3});

    // path: the frozen worked example
    auto p = std::get<SquarefreeRealization>(realize_squarefree(path3()));
    REQUIRE(std::holds_alternative<Semidirect>(p.spec.value));
    const auto& s = std::get<Semidirect>(p.spec.value);
    CHECK(s.qs == std::vector<u64>{3, 5});
    CHECK(s.ps == std::vector<u64>{2});
    CHECK(p.vertex_primes == std::vector<u64>{2, 3, 5});
    CHECK(group_order(p.spec) == 30);
}

TEST_CASE("realization options constrain the drawn primes") {
    RealizeOptions odd;
    odd.odd_only = true;
    auto res = std::get<SquarefreeRealization>(realize_squarefree(path3(), odd));
    for (u64 p : res.vertex_primes) {
        CHECK(p % 2 == 1);
        CHECK(is_prime(p));
    }
    CHECK(verify_squarefree_roundtrip(path3(), odd).status == RoundtripStatus::Ok);

    RealizeOptions avoid;
    avoid.avoid = {2, 3, 5, 7};
    auto ares = std::get<SquarefreeRealization>(realize_squarefree(path3(), avoid));
    for (u64 p : ares.vertex_primes)
        CHECK(std::find(avoid.avoid.begin(), avoid.avoid.end(), p) == avoid.avoid.end());

    RealizeOptions seeded;
    seeded.seed = 7;
    auto first = std::get<SquarefreeRealization>(realize_squarefree(path3(), seeded));
    auto second = std::get<SquarefreeRealization>(realize_squarefree(path3(), seeded));
    CHECK(first.vertex_primes == second.vertex_primes);
    CHECK(verify_squarefree_roundtrip(path3(), seeded).status == RoundtripStatus::Ok);
}

TEST_CASE("power-free certificate on the worked 8-vertex example") {
    Graph f = complement(io::load_graph(std::string(GK_FIXTURE_DIR) + "/figure1.json"));
    auto res = realize_npowerfree_certificate(f, 7);
    auto* cert = std::get_if<NpfCertificate>(&res);
    REQUIRE(cert != nullptr);

    CHECK(cert->certificate.n_bound == 7);
    std::vector<std::pair<u64, u64>> want = {{2, 1},  {3, 1},  {5, 1}, {7, 1},
                                             {11, 1}, {13, 6}, {17, 3}, {19, 1}};
    CHECK(cert->certificate.factors == want);
    CHECK(cert->vertex_primes == std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19});
    CHECK(cert->vertex_exponents == std::vector<u64>{1, 1, 1, 1, 1, 6, 3, 1});
}

TEST_CASE("power-free certificates stay within the exponent budget") {
    std::mt19937_64 rng(67);
    int accepted = 0;
    for (int t = 0; t < 150 && accepted < 30; t++) {
        int nv = 2 + static_cast<int>(rng() % 5);
        Graph f = oracle::random_graph(rng, nv, 20 + static_cast<int>(rng() % 60));
        u64 n = 3 + rng() % 8;
        auto res = realize_npowerfree_certificate(f, n);
        auto* cert = std::get_if<NpfCertificate>(&res);
        if (!cert) continue;
        accepted++;

        REQUIRE(cert->vertex_primes.size() == static_cast<size_t>(nv));
        std::vector<u64> sorted = cert->vertex_primes;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
        u64 order = 1;
        for (int v = 0; v < nv; v++) {
            CHECK(is_prime(cert->vertex_primes[v]));
            CHECK(cert->vertex_exponents[v] >= 1);
            CHECK(cert->vertex_exponents[v] <= n - 1);
            for (u64 e = 0; e < cert->vertex_exponents[v]; e++) order *= cert->vertex_primes[v];
        }
        CHECK(is_nth_power_free(order, static_cast<int>(n)));
        CHECK_FALSE(cert->certificate.factors.empty());
        u64 from_factors = 1;
        for (auto [p, e] : cert->certificate.factors)
            for (u64 i = 0; i < e; i++) from_factors *= p;
        CHECK(from_factors == order);

        // exponents are exactly the witness source products
        Graph c = complement(f);
        Digraph d = canonical_orientation(c, cert->witness.coloring);
        for (int v = 0; v < nv; v++) {
            u64 prod = 1;
            for (int s : oracle::two_path_sources_slow(d, v)) {
                auto it = std::find(cert->witness.red_vertices.begin(),
                                    cert->witness.red_vertices.end(), s);
                REQUIRE(it != cert->witness.red_vertices.end());
                prod *= cert->witness.red_labels[it - cert->witness.red_vertices.begin()];
            }
            CHECK(cert->vertex_exponents[v] == prod);
        }
    }
    CHECK(accepted >= 30);
}

TEST_CASE("power-free certificate passes rejections through") {
    Graph f = from_edges({"a", "b", "c"}, {});  // complement is a triangle
    auto res = realize_npowerfree_certificate(f, 5);
    auto* rej = std::get_if<NpfReject>(&res);
    REQUIRE(rej != nullptr);
    CHECK(rej->triangle.has_value());

    Graph fig = complement(io::load_graph(std::string(GK_FIXTURE_DIR) + "/figure1.json"));
    auto res5 = realize_npowerfree_certificate(fig, 5);
    auto* rej5 = std::get_if<NpfReject>(&res5);
    REQUIRE(rej5 != nullptr);
    CHECK_FALSE(rej5->triangle.has_value());
    CHECK(rej5->cases.size() == 25);
}

namespace {

// pick the first non-solvable verdict and realize it
CubefreeRealization realize_first(const Graph& f) {
    CubefreeResult res = classify_cubefree(f);
    for (const auto& var : res.verdicts)
        if (auto* v = std::get_if<NonSolvableVerdict>(&var)) {
            auto r = realize_cubefree_nonsolvable(f, *v);
            REQUIRE(std::holds_alternative<CubefreeRealization>(r));
            return std::get<CubefreeRealization>(r);
        }
    REQUIRE(false);
    return {};
}

void check_cubefree_roundtrip(const Graph& f, const CubefreeRealization& real) {
    PrimeLabeledGraph got = prime_graph_of(real.spec);
    Graph want;
    std::vector<std::pair<u64, int>> pv;
    for (int i = 0; i < f.vertex_count(); i++) pv.emplace_back(real.vertex_primes[i], i);
    std::sort(pv.begin(), pv.end());
    for (auto& [p, v] : pv) want.add_vertex(std::to_string(p));
    for (auto [u, v] : f.edges())
        want.add_edge(std::to_string(real.vertex_primes[u]), std::to_string(real.vertex_primes[v]));
    CHECK(got.graph == want);
}

}  // namespace

TEST_CASE("cubefree non-solvable realization: bare simple-group shapes") {
    // three isolated vertices: the 60-element simple group itself
    Graph f = from_edges({"x", "y", "z"}, {});
    CubefreeRealization real = realize_first(f);
    REQUIRE(std::holds_alternative<Psl2>(real.spec.value));
    CHECK(std::get<Psl2>(real.spec.value).q == 5);
    std::vector<u64> sorted = real.vertex_primes;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<u64>{2, 3, 5});
    check_cubefree_roundtrip(f, real);
}

TEST_CASE("cubefree non-solvable realization absorbs universal vertices") {
    Graph f = from_edges({"2", "3", "5", "11"},
                         {{"2", "3"}, {"2", "5"}, {"3", "5"}, {"5", "11"}});
    CubefreeRealization real = realize_first(f);
    CHECK(group_order(real.spec) == 3300);  // 660 * 5
    auto* prod = std::get_if<DirectProduct>(&real.spec.value);
    REQUIRE(prod != nullptr);
    REQUIRE(prod->factors.size() == 2);
    CHECK(std::get<Psl2>(prod->factors[0].value).q == 11);
    CHECK(std::get<Cyclic>(prod->factors[1].value).order == 5);
    CHECK(real.vertex_primes == std::vector<u64>{2, 3, 5, 11});
    check_cubefree_roundtrip(f, real);
}

TEST_CASE("cubefree non-solvable realization with a square-free side factor") {
    // simple-group shape joined to an edge: vertices x, y are universal
    Graph f = from_edges({"a", "b", "c", "d", "x", "y"},
                         {{"c", "d"},
                          {"x", "y"},
                          {"x", "a"}, {"x", "b"}, {"x", "c"}, {"x", "d"},
                          {"y", "a"}, {"y", "b"}, {"y", "c"}, {"y", "d"}});
    CubefreeResult res = classify_cubefree(f);
    const NonSolvableVerdict* pick = nullptr;
    for (const auto& var : res.verdicts)
        if (auto* v = std::get_if<NonSolvableVerdict>(&var))
            if (!pick) pick = v;
    REQUIRE(pick != nullptr);
    CHECK(pick->q == 11);

    auto r = realize_cubefree_nonsolvable(f, *pick);
    REQUIRE(std::holds_alternative<CubefreeRealization>(r));
    const auto& real = std::get<CubefreeRealization>(r);
    // the side factor's primes dodge the simple group's primes
    for (int i : pick->bipartite_vertices) {
        CHECK(real.vertex_primes[i] != 2);
        CHECK(real.vertex_primes[i] != 3);
        CHECK(real.vertex_primes[i] != 5);
        CHECK(real.vertex_primes[i] != 11);
    }
    check_cubefree_roundtrip(f, real);
}

TEST_CASE("cubefree realization flags verdicts that do not fit") {
    Graph f = from_edges({"x", "y", "z"}, {});
    NonSolvableVerdict bad;
    bad.q = 7;  // no admissible profile
    auto r = realize_cubefree_nonsolvable(f, bad);
    REQUIRE(std::holds_alternative<RealizeInconsistency>(r));

    NonSolvableVerdict wrong;
    wrong.q = 5;
    wrong.profile = *psl2_cubefree_profile(5);
    wrong.q_class = {0};
    wrong.m_class = {1};
    wrong.n_class = {2};
    wrong.m_is_minus_side = true;
    wrong.s_minus = 1;  // nothing eligible on the minus side of q = 5
    auto r2 = realize_cubefree_nonsolvable(f, wrong);
    CHECK(std::holds_alternative<RealizeInconsistency>(r2));
}
