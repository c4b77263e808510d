#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "gk/graph.hpp"
#include "gk/prime_graph.hpp"

namespace gk {

bool is_divisor_closed(const std::set<std::uint64_t>& xs);

// Nonempty set of positive integers containing every divisor of each member.
struct DivisorClosedSet {
    std::set<std::uint64_t> members;  // always contains 1

    static DivisorClosedSet validate(std::set<std::uint64_t> xs);
};

// Common divisor graph: vertices are the members except 1, ascending, edge
// u-v iff gcd(u, v) > 1.
Graph gamma_of(const DivisorClosedSet& xs);

// Prime graph of the set: vertices are primes dividing some member, edge
// p-q iff pq divides some member.
PrimeLabeledGraph delta_of(const DivisorClosedSet& xs);

struct Contraction {
    Graph contracted;
    // per original vertex: index of its class representative (the first
    // vertex, insertion order, with the same closed neighborhood)
    std::vector<int> representative;
    std::vector<std::vector<int>> classes;  // grouped by representative order
};

Contraction contract(const Graph& g);

enum class RecoveryReject {
    PosetValueInconsistency,
    MissingSubset,
    AdjacencyMismatch,
};

const char* to_string(RecoveryReject r);

struct Recovered {
    PrimeLabeledGraph delta;
    // contracted-vertex label -> reconstructed squarefree value, vertex order
    std::vector<std::pair<std::string, std::uint64_t>> values;
    std::vector<std::vector<int>> merged_classes;  // from the contraction step
};

struct RecoveryRejected {
    RecoveryReject reason;
    std::vector<std::string> witness_vertices;
    std::uint64_t witness_value = 0;  // the absent product, for MissingSubset
    std::vector<std::pair<std::string, std::uint64_t>> values;  // known so far
};

using RecoveryResult = std::variant<Recovered, RecoveryRejected>;

// Decides whether g is the common divisor graph of some squarefree-value
// assignment and reconstructs the prime graph if so.  Checks run in a fixed
// order (poset/value consistency, then missing subsets, then adjacency), so
// the first reported reason is deterministic.
RecoveryResult recover_delta(const Graph& gamma);

// Deterministic generator: divisor closure of a few random prime-power
// products drawn from the first max_prime_count primes, members <= max_value.
DivisorClosedSet random_divisor_closed(std::uint64_t seed, int max_prime_count,
                                       std::uint64_t max_value);

}  // namespace gk
