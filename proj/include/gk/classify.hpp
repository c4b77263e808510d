#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "gk/graph.hpp"
#include "gk/numtheory.hpp"
#include "gk/prime_graph.hpp"

namespace gk {

// Every classifier takes the candidate prime graph F and works on its
// complement internally.  Accept/reject are values; exceptions only signal
// malformed input or blown caps.

struct SolvableAccept {
    Coloring complement_coloring;  // proper 3-coloring of the complement
};
struct SolvableReject {
    // triangle in the complement, or nullopt when the coloring search
    // exhausted without success
    std::optional<std::array<int, 3>> triangle;
};
using SolvableResult = std::variant<SolvableAccept, SolvableReject>;
SolvableResult classify_solvable(const Graph& f);

struct MetanilpotentAccept {
    Coloring complement_coloring;  // 2-coloring
};
struct MetanilpotentReject {
    std::vector<int> odd_cycle;
};
using MetanilpotentResult = std::variant<MetanilpotentAccept, MetanilpotentReject>;
MetanilpotentResult classify_metanilpotent(const Graph& f);

// --- n-th power free solvable ---

struct NpfBlueSources {
    int vertex = -1;
    std::vector<int> sources;      // red starts of directed 2-paths into vertex
    std::uint64_t label_product = 1;
};

struct NpfWitness {
    Coloring coloring;             // on the complement: 0 red, 1 green, 2 blue
    std::vector<int> red_vertices; // ascending
    std::vector<std::uint64_t> red_labels;  // parallel to red_vertices
    std::vector<NpfBlueSources> blue;       // one entry per blue vertex
};

struct NpfCaseColoring {
    std::vector<int> green, blue;
    // blue vertices that end a 2-path from every red under any workable
    // labeling, i.e. product of the |sources| smallest usable primes >= n
    std::vector<int> forced_ends;
};

struct NpfCase {
    std::vector<int> red;          // ascending
    std::vector<int> odd_cycle;    // nonempty: removal left an odd cycle
    std::vector<NpfCaseColoring> colorings;  // otherwise: all rejected colorings
};

struct NpfReject {
    std::optional<std::array<int, 3>> triangle;
    std::vector<NpfCase> cases;
};

using NpfResult = std::variant<NpfWitness, NpfReject>;

// Exhaustive search over red subsets of size k = 0..min(#primes < n, |V|),
// per-component green/blue swaps and red label permutations, in that order;
// the first witness in this order is returned.
NpfResult classify_npowerfree_solvable(const Graph& f, std::uint64_t n);

// --- cube-free ---

struct CubefreeSolvableAccept {
    std::optional<int> removed;    // vertex removed from the complement
    Coloring coloring;             // 2-coloring of the rest (-1 on removed)
};
struct CubefreeSolvableReject {
    std::optional<std::array<int, 3>> triangle;
};
using CubefreeSolvableResult = std::variant<CubefreeSolvableAccept, CubefreeSolvableReject>;
CubefreeSolvableResult classify_cubefree_solvable(const Graph& f);

struct OddOrderVerdict {
    Coloring complement_coloring;
};
struct SolvableEvenVerdict {
    std::optional<int> removed;
    Coloring coloring;
};
struct NonSolvableVerdict {
    std::uint64_t q = 0;
    PslProfile profile;
    bool characteristic_deleted = false;  // q absorbed into S
    std::vector<int> q_class;             // the q vertex (empty if deleted)
    std::vector<int> m_class, n_class;    // kept clique sides, graph vertices
    bool m_is_minus_side = false;         // m_class drawn from (q-1)/2
    int s_minus = 0, s_plus = 0;          // singletons absorbed per side
    std::vector<int> s_vertices;
    std::vector<int> bipartite_vertices;  // remaining components
    Coloring bipartite_coloring;          // 2-coloring over the full graph, -1 elsewhere
};
using CubefreeVerdict = std::variant<OddOrderVerdict, SolvableEvenVerdict, NonSolvableVerdict>;

struct CubefreeOptions {
    std::uint64_t q_bound = 100'000;
    bool include_characteristic = false;
};

struct CubefreeResult {
    std::vector<CubefreeVerdict> verdicts;
    // true when some structural non-solvable candidate matched no q <= bound
    bool q_bound_exhausted = false;
};

CubefreeResult classify_cubefree(const Graph& f, const CubefreeOptions& opts = {});

// F itself (not the complement): one isolated vertex plus two cliques.
// Returns the smallest admissible q, or nullopt (bound_exhausted set when the
// shape matched but no q <= q_bound did).
struct PslShapeMatch {
    std::uint64_t q = 0;
    PslProfile profile;
    bool m_is_minus_side = false;
};
struct PslShapeResult {
    std::optional<PslShapeMatch> match;
    bool shape_ok = false;
    bool bound_exhausted = false;
};
PslShapeResult classify_psl2_cubefree(const Graph& f, std::uint64_t q_bound = 100'000);

// --- pseudo-solvable (composition factors cyclic or the 60-element simple
// group): two necessary conditions ---

struct PseudoSolvableReport {
    // A: complement minus the 3-5 edge is triangle-free and 3-colorable
    bool condition_a = false;
    // B: no {2,3,5} triangle in the complement, or no complement 2-p edge
    // for p outside {2,3,5}
    bool condition_b = false;
    std::optional<std::array<std::uint64_t, 3>> a_triangle;  // labels
    bool a_not_three_colorable = false;
    std::optional<std::array<std::uint64_t, 3>> b_triangle;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> b_edges;  // (2, p) witnesses
    bool ok() const { return condition_a && condition_b; }
};

PseudoSolvableReport pseudo_solvable_check(const PrimeLabeledGraph& f);

}  // namespace gk
