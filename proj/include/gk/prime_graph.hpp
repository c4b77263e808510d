#pragma once

#include <cstdint>
#include <vector>

#include "gk/graph.hpp"

namespace gk {

// Graph whose vertices carry distinct prime labels.  The label vector is
// parallel to the graph's vertex order.
struct PrimeLabeledGraph {
    Graph graph;
    std::vector<std::uint64_t> labels;

    std::uint64_t label_of(int v) const { return labels.at(v); }
    int vertex_of(std::uint64_t p) const;

    // Parses each vertex label as a prime; throws std::invalid_argument on
    // non-numeric, non-prime or repeated labels.
    static PrimeLabeledGraph from_graph(Graph g);
};

}  // namespace gk
