#include "gk/prime_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "gk/numtheory.hpp"

namespace gk {

int PrimeLabeledGraph::vertex_of(std::uint64_t p) const {
    for (int v = 0; v < static_cast<int>(labels.size()); v++)
        if (labels[v] == p) return v;
    return -1;
}

PrimeLabeledGraph PrimeLabeledGraph::from_graph(Graph g) {
    PrimeLabeledGraph out;
    for (const auto& label : g.labels()) {
        std::uint64_t value = 0;
        size_t pos = 0;
        try {
            value = std::stoull(label, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("prime-labeled graph: vertex '" + label +
                                        "' is not a number");
        }
        if (pos != label.size())
            throw std::invalid_argument("prime-labeled graph: vertex '" + label +
                                        "' is not a number");
        if (!is_prime(value))
            throw std::invalid_argument("prime-labeled graph: vertex '" + label +
                                        "' is not prime");
        if (std::find(out.labels.begin(), out.labels.end(), value) != out.labels.end())
            throw std::invalid_argument("prime-labeled graph: repeated prime " + label);
        out.labels.push_back(value);
    }
    out.graph = std::move(g);
    return out;
}

}  // namespace gk
