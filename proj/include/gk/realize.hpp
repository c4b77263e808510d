#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "gk/classify.hpp"
#include "gk/graph.hpp"
#include "gk/groups.hpp"

namespace gk {

struct RealizeOptions {
    bool odd_only = false;
    std::vector<std::uint64_t> avoid;
    std::uint64_t seed = 0;  // nonzero: perturb prime choices (fuzzing)
};

// Witness group for a square-free realization: F's vertices become primes.
struct SquarefreeRealization {
    GroupSpec spec;
    std::vector<std::uint64_t> vertex_primes;  // parallel to F's vertices
};

struct RealizeReject {
    std::vector<int> odd_cycle;  // in the complement
};

using SquarefreeResult = std::variant<SquarefreeRealization, RealizeReject>;

// Builds (prod C_qk) : (prod C_pj) from a 2-coloring of the complement:
// the acting side O gets the smallest admissible primes, the kernel side
// gets distinct Dirichlet primes = 1 mod prod(p_j), and each complement
// edge switches on a fixed-point-free coordinate action.
SquarefreeResult realize_squarefree(const Graph& f, const RealizeOptions& opts = {});

struct OrderCertificate {
    std::uint64_t n_bound = 0;
    // prime -> exponent, primes ascending; exponents all <= n_bound - 1
    std::vector<std::pair<std::uint64_t, std::uint64_t>> factors;
};

struct NpfCertificate {
    OrderCertificate certificate;
    std::vector<std::uint64_t> vertex_primes;     // parallel to F's vertices
    std::vector<std::uint64_t> vertex_exponents;  // parallel to F's vertices
    NpfWitness witness;
};

using NpfCertificateResult = std::variant<NpfCertificate, NpfReject>;

// Runs the n-th-power-free classifier and turns its witness into an order
// certificate: each vertex contributes prime^e where e is 1 off the empty
// 2-path source set and the product of the red source labels otherwise.
NpfCertificateResult realize_npowerfree_certificate(const Graph& f, std::uint64_t n);

struct CubefreeRealization {
    GroupSpec spec;
    std::vector<std::uint64_t> vertex_primes;
};

struct RealizeInconsistency {
    std::string message;  // the verdict does not fit the graph
};

using CubefreeRealizeResult = std::variant<CubefreeRealization, RealizeInconsistency>;

// Builds Psl2(q) x (square-free side group) x (one cyclic factor per
// absorbed singleton) from a NonSolvable verdict.
CubefreeRealizeResult realize_cubefree_nonsolvable(const Graph& f, const NonSolvableVerdict& v,
                                                   const RealizeOptions& opts = {});

}  // namespace gk
