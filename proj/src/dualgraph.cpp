#include "gk/dualgraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>

#include "gk/errors.hpp"
#include "gk/numtheory.hpp"

namespace gk {

bool is_divisor_closed(const std::set<std::uint64_t>& xs) {
    if (xs.empty() || xs.count(0)) return false;
    if (!xs.count(1)) return false;
    for (u64 m : xs)
        for (u64 d : divisors(m))
            if (!xs.count(d)) return false;
    return true;
}

DivisorClosedSet DivisorClosedSet::validate(std::set<std::uint64_t> xs) {
    if (!is_divisor_closed(xs))
        throw std::invalid_argument("set is not divisor-closed (or missing 1)");
    return DivisorClosedSet{std::move(xs)};
}

Graph gamma_of(const DivisorClosedSet& xs) {
    Graph g;
    std::vector<u64> members;
    for (u64 m : xs.members)
        if (m != 1) members.push_back(m);  // std::set iterates ascending
    for (u64 m : members) g.add_vertex(std::to_string(m));
    for (size_t i = 0; i < members.size(); i++)
        for (size_t j = i + 1; j < members.size(); j++)
            if (std::gcd(members[i], members[j]) > 1)
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

PrimeLabeledGraph delta_of(const DivisorClosedSet& xs) {
    std::set<u64> primes;
    std::vector<std::vector<u64>> member_primes;
    for (u64 m : xs.members) {
        auto ps = factorize(m).primes();
        for (u64 p : ps) primes.insert(p);
        member_primes.push_back(std::move(ps));
    }
    PrimeLabeledGraph out;
    for (u64 p : primes) {
        out.graph.add_vertex(std::to_string(p));
        out.labels.push_back(p);
    }
    for (const auto& ps : member_primes)
        for (size_t i = 0; i < ps.size(); i++)
            for (size_t j = i + 1; j < ps.size(); j++)
                out.graph.add_edge(out.vertex_of(ps[i]), out.vertex_of(ps[j]));
    return out;
}

Contraction contract(const Graph& g) {
    int n = g.vertex_count();
    Contraction out;
    out.representative.assign(n, -1);
    std::vector<int> reps;
    for (int v = 0; v < n; v++) {
        for (int r : reps)
            if (g.closed_neighborhood(r) == g.closed_neighborhood(v)) {
                out.representative[v] = r;
                break;
            }
        if (out.representative[v] == -1) {
            out.representative[v] = v;
            reps.push_back(v);
        }
    }
    mask_t keep = 0;
    for (int r : reps) keep |= mask_t{1} << r;
    out.contracted = g.induced(keep);
    for (int r : reps) {
        std::vector<int> cls;
        for (int v = 0; v < n; v++)
            if (out.representative[v] == r) cls.push_back(v);
        out.classes.push_back(std::move(cls));
    }
    return out;
}

const char* to_string(RecoveryReject r) {
    switch (r) {
        case RecoveryReject::PosetValueInconsistency: return "poset-value-inconsistency";
        case RecoveryReject::MissingSubset: return "missing-subset";
        case RecoveryReject::AdjacencyMismatch: return "adjacency-mismatch";
    }
    return "?";
}

namespace {

u64 prime_set_product(mask_t set, const std::vector<u64>& primes) {
    __uint128_t prod = 1;
    for (int i : mask_to_vertices(set)) prod *= primes[i];
    if (prod > ~u64{0}) throw CapacityError("reconstructed value overflows 64 bits");
    return static_cast<u64>(prod);
}

}  // namespace

RecoveryResult recover_delta(const Graph& gamma) {
    Contraction con = contract(gamma);
    const Graph& h = con.contracted;
    int n = h.vertex_count();

    // containment order on closed neighborhoods; antisymmetry holds because
    // contraction left all closed neighborhoods distinct
    auto leq = [&](int u, int v) {
        return (h.closed_neighborhood(u) | h.closed_neighborhood(v)) == h.closed_neighborhood(v);
    };

    std::vector<int> minimals;
    for (int v = 0; v < n; v++) {
        bool minimal = true;
        for (int u = 0; u < n && minimal; u++)
            if (u != v && leq(u, v)) minimal = false;
        if (minimal) minimals.push_back(v);
    }
    if (static_cast<int>(minimals.size()) > 24)
        throw CapacityError("recovery: too many minimal classes");
    std::vector<u64> primes = first_primes(static_cast<int>(minimals.size()));

    std::vector<mask_t> prime_set(n, 0);
    for (size_t i = 0; i < minimals.size(); i++)
        for (int v = 0; v < n; v++)
            if (leq(minimals[i], v)) prime_set[v] |= mask_t{1} << i;

    std::vector<std::pair<std::string, u64>> values;
    for (int v = 0; v < n; v++)
        values.emplace_back(h.label(v), prime_set_product(prime_set[v], primes));

    auto rejected = [&](RecoveryReject reason, std::vector<std::string> witness, u64 wv) {
        return RecoveryResult{RecoveryRejected{reason, std::move(witness), wv, values}};
    };

    // check 1: the value map must be injective and must realize the order
    for (int u = 0; u < n; u++)
        for (int v = 0; v < n; v++) {
            if (u == v) continue;
            if (u < v && prime_set[u] == prime_set[v])
                return rejected(RecoveryReject::PosetValueInconsistency,
                                {h.label(u), h.label(v)}, 0);
            bool sub = (prime_set[u] | prime_set[v]) == prime_set[v];
            if (leq(u, v) != sub)
                return rejected(RecoveryReject::PosetValueInconsistency,
                                {h.label(u), h.label(v)}, 0);
        }

    // check 2: divisor closure of the value set, i.e. every nonempty proper
    // subset of a prime set must itself appear
    std::set<mask_t> present(prime_set.begin(), prime_set.end());
    for (int v = 0; v < n; v++) {
        std::vector<mask_t> subs;
        for (mask_t s = (prime_set[v] - 1) & prime_set[v]; s; s = (s - 1) & prime_set[v])
            subs.push_back(s);
        std::sort(subs.begin(), subs.end(), [](mask_t a, mask_t b) {
            int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        for (mask_t s : subs)
            if (!present.count(s))
                return rejected(RecoveryReject::MissingSubset, {h.label(v)},
                                prime_set_product(s, primes));
    }

    // check 3: adjacency must match value gcds
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++) {
            bool share = (prime_set[u] & prime_set[v]) != 0;
            if (h.has_edge(u, v) != share)
                return rejected(RecoveryReject::AdjacencyMismatch, {h.label(u), h.label(v)}, 0);
        }

    Recovered rec;
    for (size_t i = 0; i < primes.size(); i++) {
        rec.delta.graph.add_vertex(std::to_string(primes[i]));
        rec.delta.labels.push_back(primes[i]);
    }
    for (int v = 0; v < n; v++)
        for (int i : mask_to_vertices(prime_set[v]))
            for (int j : mask_to_vertices(prime_set[v]))
                if (i < j) rec.delta.graph.add_edge(i, j);
    rec.values = values;
    for (const auto& cls : con.classes) rec.merged_classes.push_back(cls);
    return rec;
}

DivisorClosedSet random_divisor_closed(std::uint64_t seed, int max_prime_count, u64 max_value) {
    if (max_prime_count < 1 || max_value < 1)
        throw std::invalid_argument("random_divisor_closed: need max_prime_count, max_value >= 1");
    std::mt19937_64 rng(seed);
    std::vector<u64> pool = first_primes(max_prime_count);
    while (true) {
        std::set<u64> xs{1};
        int generators = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < generators; i++) {
            u64 value = 1;
            int attempts = 1 + static_cast<int>(rng() % 6);
            for (int t = 0; t < attempts; t++) {
                u64 p = pool[rng() % pool.size()];
                if (value <= max_value / p) value *= p;
            }
            for (u64 d : divisors(value)) xs.insert(d);
        }
        if (static_cast<int>(xs.size()) - 1 <= Graph::kMaxVertices)
            return DivisorClosedSet{std::move(xs)};
    }
}

}  // namespace gk
