#pragma once

#include <cstdint>
#include <set>
#include <variant>
#include <vector>

#include "gk/prime_graph.hpp"

namespace gk {

struct GroupSpec;

struct Cyclic {
    std::uint64_t order = 1;
};

struct DirectProduct {
    std::vector<GroupSpec> factors;
};

// (prod C_qk) : (prod C_pj) with each C_pj acting on each C_qk by
// multiplication with the unit action[j][k] (1 = trivial).  Valid specs have
// distinct prime qs, distinct prime ps disjoint from qs, and action[j][k]
// equal to 1 or of multiplicative order ps[j] mod qs[k].
struct Semidirect {
    std::vector<std::uint64_t> qs;
    std::vector<std::uint64_t> ps;
    std::vector<std::vector<std::uint64_t>> action;  // action[j][k]
};

struct Psl2 {
    std::uint64_t q = 5;
};

struct GroupSpec {
    std::variant<Cyclic, DirectProduct, Semidirect, Psl2> value;
};

using EoSet = std::set<std::uint64_t>;

inline constexpr std::uint64_t kSemidirectEnumerationCap = 1'000'000;
inline constexpr std::uint64_t kPslMatrixCap = 31;  // largest q enumerated

std::uint64_t group_order(const GroupSpec& spec);

// Throws std::invalid_argument on malformed specs (see Semidirect above,
// Psl2 requires an odd prime q >= 5).
void validate_spec(const GroupSpec& spec);

// The set of element orders.  Cyclic: divisors.  DirectProduct: lcm-closure
// of the factors' sets.  Semidirect: exhaustive enumeration (CapacityError
// past kSemidirectEnumerationCap).  Psl2: matrix enumeration of SL(2,q)
// modulo +-I (CapacityError past kPslMatrixCap).  Always divisor-closed.
EoSet element_orders(const GroupSpec& spec);

// Element orders of PSL(2,q) read off the classical subgroup description:
// divisors of q, (q-1)/2 and (q+1)/2.  pre: odd prime q >= 5.
EoSet dickson_eo(std::uint64_t q);

// Vertices: primes dividing some element order, ascending.  Edge p-q iff a
// single element order is divisible by pq.
PrimeLabeledGraph prime_graph_of(const GroupSpec& spec);
PrimeLabeledGraph prime_graph_of_orders(const EoSet& orders);

// Number of distinct elements of PSL(2,q) seen by the matrix enumeration.
std::uint64_t psl2_element_count(std::uint64_t q);

}  // namespace gk
