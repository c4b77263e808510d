#include "gk/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

#include "gk/errors.hpp"

namespace gk {

Graph::Graph(const std::vector<std::string>& labels) {
    for (const auto& l : labels) add_vertex(l);
}

int Graph::add_vertex(std::string_view label) {
    int i = index_of(label);
    if (i >= 0) return i;
    if (vertex_count() >= kMaxVertices)
        throw CapacityError("graph capacity exceeded: at most " + std::to_string(kMaxVertices) +
                            " vertices");
    labels_.emplace_back(label);
    adj_.push_back(0);
    return vertex_count() - 1;
}

int Graph::index_of(std::string_view label) const {
    for (int i = 0; i < vertex_count(); i++)
        if (labels_[i] == label) return i;
    return -1;
}

void Graph::add_edge(std::string_view u, std::string_view v) {
    int a = add_vertex(u);
    int b = add_vertex(v);
    add_edge(a, b);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("add_edge: vertex index out of range");
    if (u == v) throw std::invalid_argument("add_edge: loops are not allowed");
    adj_[u] |= mask_t{1} << v;
    adj_[v] |= mask_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("remove_edge: vertex index out of range");
    adj_[u] &= ~(mask_t{1} << v);
    adj_[v] &= ~(mask_t{1} << u);
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
    return (adj_[u] >> v) & 1;
}

int Graph::degree(int v) const { return std::popcount(adj_.at(v)); }

int Graph::edge_count() const {
    int total = 0;
    for (mask_t m : adj_) total += std::popcount(m);
    return total / 2;
}

mask_t Graph::all_vertices_mask() const {
    int n = vertex_count();
    return n == 64 ? ~mask_t{0} : (mask_t{1} << n) - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); u++)
        for (int v = u + 1; v < vertex_count(); v++)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(mask_t keep) const {
    Graph h;
    std::vector<int> kept = mask_to_vertices(keep & all_vertices_mask());
    for (int v : kept) h.add_vertex(labels_[v]);
    for (size_t i = 0; i < kept.size(); i++)
        for (size_t j = i + 1; j < kept.size(); j++)
            if (has_edge(kept[i], kept[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph Graph::induced_without(int v) const {
    return induced(all_vertices_mask() & ~(mask_t{1} << v));
}

bool Coloring::proper_on(const Graph& g) const {
    if (static_cast<int>(color.size()) != g.vertex_count()) return false;
    for (auto [u, v] : g.edges())
        if (color[u] >= 0 && color[u] == color[v]) return false;
    for (int c : color)
        if (c >= num_colors) return false;
    return true;
}

std::vector<std::vector<int>> Coloring::classes() const {
    std::vector<std::vector<int>> out(num_colors);
    for (int v = 0; v < static_cast<int>(color.size()); v++)
        if (color[v] >= 0) out[color[v]].push_back(v);
    return out;
}

Digraph::Digraph(std::vector<std::string> labels)
    : labels_(std::move(labels)), out_(labels_.size(), 0) {}

void Digraph::add_arc(int from, int to) {
    if (from < 0 || to < 0 || from >= vertex_count() || to >= vertex_count() || from == to)
        throw std::invalid_argument("add_arc: bad endpoints");
    out_[from] |= mask_t{1} << to;
}

bool Digraph::has_arc(int from, int to) const {
    if (from < 0 || to < 0 || from >= vertex_count() || to >= vertex_count()) return false;
    return (out_[from] >> to) & 1;
}

mask_t Digraph::in_neighbors(int v) const {
    mask_t in = 0;
    for (int u = 0; u < vertex_count(); u++)
        if (has_arc(u, v)) in |= mask_t{1} << u;
    return in;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); u++)
        for (int v = 0; v < vertex_count(); v++)
            if (has_arc(u, v)) out.emplace_back(u, v);
    return out;
}

bool Digraph::has_directed_three_path() const {
    int n = vertex_count();
    for (int a = 0; a < n; a++)
        for (int b : mask_to_vertices(out_[a]))
            for (int c : mask_to_vertices(out_[b]))
                for (int d : mask_to_vertices(out_[c])) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    return true;
                }
    return false;
}

Graph complement(const Graph& g) {
    Graph h(g.labels());
    int n = g.vertex_count();
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
    int n = g.vertex_count();
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) {
            if (!g.has_edge(i, j)) continue;
            mask_t common = g.neighbors(i) & g.neighbors(j);
            common &= ~((mask_t{2} << j) - 1);  // only k > j
            if (common) return std::array<int, 3>{i, j, std::countr_zero(common)};
        }
    return std::nullopt;
}

namespace {

bool color_rec(const Graph& g, int k, const std::vector<int>& order, size_t pos,
               std::vector<int>& color) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int c = 0; c < k; c++) {
        bool clash = false;
        for (int u : mask_to_vertices(g.neighbors(v)))
            if (color[u] == c) {
                clash = true;
                break;
            }
        if (clash) continue;
        color[v] = c;
        if (color_rec(g, k, order, pos + 1, color)) return true;
        color[v] = -1;
    }
    return false;
}

}  // namespace

std::optional<Coloring> k_color(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("k_color: k must be >= 0");
    int n = g.vertex_count();
    if (n == 0) return Coloring{{}, k};
    if (k == 0) return std::nullopt;
    std::vector<int> order(n);
    for (int i = 0; i < n; i++) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(n, -1);
    if (!color_rec(g, k, order, 0, color)) return std::nullopt;
    return Coloring{std::move(color), k};
}

BipartiteCheck bipartite_check(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1), parent(n, -1);
    for (int start = 0; start < n; start++) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : mask_to_vertices(g.neighbors(u))) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    // walk both BFS-tree branches up to their meeting point
                    std::vector<int> pu{u}, pv{v};
                    auto depth = [&](int x) {
                        int d = 0;
                        while (parent[x] != -1) {
                            x = parent[x];
                            d++;
                        }
                        return d;
                    };
                    int a = u, b = v, da = depth(u), db = depth(v);
                    while (da > db) {
                        a = parent[a];
                        pu.push_back(a);
                        da--;
                    }
                    while (db > da) {
                        b = parent[b];
                        pv.push_back(b);
                        db--;
                    }
                    while (a != b) {
                        a = parent[a];
                        pu.push_back(a);
                        b = parent[b];
                        pv.push_back(b);
                    }
                    std::vector<int> cycle(pu.begin(), pu.end());  // u .. meet
                    for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it) cycle.push_back(*it);
                    BipartiteCheck res;
                    res.odd_cycle = std::move(cycle);
                    return res;
                }
            }
        }
    }
    BipartiteCheck res;
    res.coloring = Coloring{std::move(color), 2};
    return res;
}

std::optional<VertexRemovedBipartition> bipartite_after_one_vertex(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); v++) {
        BipartiteCheck check = bipartite_check(g.induced_without(v));
        if (!check.ok()) continue;
        VertexRemovedBipartition out;
        out.removed = v;
        out.coloring.num_colors = 2;
        out.coloring.color.assign(g.vertex_count(), -1);
        int j = 0;
        for (int u = 0; u < g.vertex_count(); u++) {
            if (u == v) continue;
            out.coloring.color[u] = check.coloring->color[j++];
        }
        return out;
    }
    return std::nullopt;
}

Digraph canonical_orientation(const Graph& g, const Coloring& c) {
    if (c.num_colors != 3 || !c.proper_on(g))
        throw std::invalid_argument("canonical_orientation: need a proper 3-coloring");
    for (int v = 0; v < g.vertex_count(); v++)
        if (c.color[v] < 0) throw std::invalid_argument("canonical_orientation: uncolored vertex");
    Digraph d(g.labels());
    for (auto [u, v] : g.edges()) {
        if (c.color[u] < c.color[v])
            d.add_arc(u, v);
        else
            d.add_arc(v, u);
    }
    return d;
}

mask_t directed_two_path_sources(const Digraph& d, int target) {
    if (target < 0 || target >= d.vertex_count())
        throw std::invalid_argument("directed_two_path_sources: bad target");
    mask_t sources = 0;
    for (int w : mask_to_vertices(d.in_neighbors(target))) {
        mask_t in = d.in_neighbors(w);
        in &= ~(mask_t{1} << target);
        sources |= in;
    }
    return sources & ~(mask_t{1} << target);
}

std::vector<mask_t> component_masks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<mask_t> out;
    mask_t seen = 0;
    for (int s = 0; s < n; s++) {
        if ((seen >> s) & 1) continue;
        mask_t comp = mask_t{1} << s;
        mask_t frontier = comp;
        while (frontier) {
            mask_t next = 0;
            for (int v : mask_to_vertices(frontier)) next |= g.neighbors(v);
            frontier = next & ~comp;
            comp |= frontier;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

std::vector<Graph> connected_components(const Graph& g) {
    std::vector<Graph> out;
    for (mask_t m : component_masks(g)) out.push_back(g.induced(m));
    return out;
}

std::vector<int> mask_to_vertices(mask_t m) {
    std::vector<int> out;
    while (m) {
        int v = std::countr_zero(m);
        out.push_back(v);
        m &= m - 1;
    }
    return out;
}

}  // namespace gk
