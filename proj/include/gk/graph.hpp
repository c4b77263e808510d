#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gk {

using mask_t = std::uint64_t;

// Finite simple graph on at most 64 vertices.  Vertices are opaque string
// labels kept in insertion order; all algorithms iterate vertices in that
// order, which fixes every output deterministically.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    explicit Graph(const std::vector<std::string>& labels);

    // Returns the index, inserting the label if new.  Throws CapacityError
    // past kMaxVertices.
    int add_vertex(std::string_view label);
    // Endpoints are inserted if absent.  Loops are rejected; parallel edges
    // collapse.
    void add_edge(std::string_view u, std::string_view v);
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const;
    const std::string& label(int v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const { return labels_; }
    int index_of(std::string_view label) const;  // -1 if absent

    bool has_edge(int u, int v) const;
    mask_t neighbors(int v) const { return adj_.at(v); }
    mask_t closed_neighborhood(int v) const { return adj_.at(v) | (mask_t{1} << v); }
    int degree(int v) const;
    mask_t all_vertices_mask() const;

    // Edges as index pairs (u < v), ordered by (u, v).
    std::vector<std::pair<int, int>> edges() const;

    // Induced subgraph on the masked vertices, preserving relative order.
    Graph induced(mask_t keep) const;
    Graph induced_without(int v) const;

    bool operator==(const Graph& o) const { return labels_ == o.labels_ && adj_ == o.adj_; }

private:
    std::vector<std::string> labels_;
    std::vector<mask_t> adj_;
};

struct Coloring {
    std::vector<int> color;  // per vertex; -1 marks "not colored"
    int num_colors = 0;

    bool proper_on(const Graph& g) const;
    // Vertex indices per color class, vertices ascending.
    std::vector<std::vector<int>> classes() const;
};

// Orientation of a graph; vertex set and order shared with the source.
class Digraph {
public:
    explicit Digraph(std::vector<std::string> labels);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const { return labels_; }

    void add_arc(int from, int to);
    bool has_arc(int from, int to) const;
    mask_t out_neighbors(int v) const { return out_.at(v); }
    mask_t in_neighbors(int v) const;
    std::vector<std::pair<int, int>> arcs() const;

    // True iff some directed path uses 3 arcs (4 distinct vertices).
    bool has_directed_three_path() const;

private:
    std::vector<std::string> labels_;
    std::vector<mask_t> out_;
};

Graph complement(const Graph& g);

// First triangle in lexicographic (i, j, k) index order, if any.
std::optional<std::array<int, 3>> find_triangle(const Graph& g);

// Exact backtracking search for a proper k-coloring.  Deterministic: vertices
// are pivoted by (degree desc, index asc) and colors tried ascending; returns
// the first coloring found, or nullopt after exhausting the search space.
std::optional<Coloring> k_color(const Graph& g, int k);

struct BipartiteCheck {
    std::optional<Coloring> coloring;  // 2-coloring when bipartite
    std::vector<int> odd_cycle;        // witness cycle otherwise
    bool ok() const { return coloring.has_value(); }
};

// BFS per component; class 0 holds each component's first vertex.  The odd
// cycle witness comes from the first conflicting edge and the BFS tree.
BipartiteCheck bipartite_check(const Graph& g);

struct VertexRemovedBipartition {
    int removed = -1;
    Coloring coloring;  // over the full graph, removed vertex colored -1
};

// First vertex (insertion order) whose removal leaves a bipartite graph.
std::optional<VertexRemovedBipartition> bipartite_after_one_vertex(const Graph& g);

// Orients every edge low-class -> high-class for a proper 3-coloring with
// classes 0 < 1 < 2.  The result never contains a directed 3-path.
// Throws std::invalid_argument if the coloring is not a proper 3-coloring.
Digraph canonical_orientation(const Graph& g, const Coloring& c);

// Vertices s such that some directed path s -> w -> target exists.
mask_t directed_two_path_sources(const Digraph& d, int target);

std::vector<mask_t> component_masks(const Graph& g);
std::vector<Graph> connected_components(const Graph& g);

std::vector<int> mask_to_vertices(mask_t m);

}  // namespace gk
