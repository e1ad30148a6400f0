// Simple undirected graphs and the structural operations the spectral
// formulas rely on.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace univadj {

using Vertex = std::size_t;

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list. Duplicate edges are collapsed; self-loops
    /// and out-of-range endpoints throw std::invalid_argument.
    Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) : adj_(n) {
        for (const auto& [u, v] : edges) {
            if (u >= n || v >= n) {
                throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                            ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
            }
            if (u == v) {
                throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            }
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nb : adj_) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        }
    }

    Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges)
        : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges)) {}

    std::size_t order() const noexcept { return adj_.size(); }

    std::size_t edge_count() const noexcept {
        std::size_t twice = 0;
        for (const auto& nb : adj_) {
            twice += nb.size();
        }
        return twice / 2;
    }

    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

    std::vector<std::size_t> degrees() const {
        std::vector<std::size_t> d(adj_.size());
        for (std::size_t v = 0; v < adj_.size(); ++v) {
            d[v] = adj_[v].size();
        }
        return d;
    }

    /// Sorted neighbor list.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }

    bool adjacent(Vertex u, Vertex v) const {
        const auto& nb = adj_.at(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    /// Each edge once, as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Vertex u = 0; u < adj_.size(); ++u) {
            for (Vertex v : adj_[u]) {
                if (u < v) {
                    out.emplace_back(u, v);
                }
            }
        }
        return out;
    }

    /// Dense 0/1 adjacency rows.
    std::vector<std::vector<std::uint8_t>> adjacency_matrix() const {
        std::vector<std::vector<std::uint8_t>> m(adj_.size(), std::vector<std::uint8_t>(adj_.size(), 0));
        for (Vertex u = 0; u < adj_.size(); ++u) {
            for (Vertex v : adj_[u]) {
                m[u][v] = 1;
            }
        }
        return m;
    }

    /// True when all degrees agree; false for n = 0.
    bool is_regular() const {
        if (adj_.empty()) {
            return false;
        }
        return std::all_of(adj_.begin(), adj_.end(), [&](const auto& nb) { return nb.size() == adj_[0].size(); });
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
};

/// Subgraph induced on `vertices` (relabelled 0.. in the given order).
inline Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
    std::vector<std::size_t> index(g.order(), g.order());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        index[vertices[i]] = i;
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (Vertex w : g.neighbors(vertices[i])) {
            if (index[w] != g.order() && i < index[w]) {
                edges.emplace_back(i, index[w]);
            }
        }
    }
    return Graph(vertices.size(), edges);
}

struct Component {
    std::vector<Vertex> vertices;  ///< ascending, in the parent's labels
    Graph graph;                   ///< induced subgraph
};

/// Connected components, ordered by smallest contained vertex.
inline std::vector<Component> components(const Graph& g) {
    std::vector<Component> out;
    std::vector<bool> seen(g.order(), false);
    for (Vertex root = 0; root < g.order(); ++root) {
        if (seen[root]) {
            continue;
        }
        std::vector<Vertex> members{root};
        seen[root] = true;
        for (std::size_t head = 0; head < members.size(); ++head) {
            for (Vertex w : g.neighbors(members[head])) {
                if (!seen[w]) {
                    seen[w] = true;
                    members.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        Graph sub = induced_subgraph(g, members);
        out.push_back({std::move(members), std::move(sub)});
    }
    return out;
}

inline bool is_connected(const Graph& g) { return g.order() > 0 && components(g).size() == 1; }

inline Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

/// Vertices of gs[k] are shifted past those of gs[0..k-1]; no cross edges.
inline Graph disjoint_union(std::span<const Graph> gs) {
    std::size_t n = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& g : gs) {
        for (const auto& [u, v] : g.edges()) {
            edges.emplace_back(u + n, v + n);
        }
        n += g.order();
    }
    return Graph(n, edges);
}

inline Graph disjoint_union(const std::vector<Graph>& gs) { return disjoint_union(std::span<const Graph>(gs)); }

/// Every vertex of each part adjacent to every vertex of every other part.
inline Graph join(const std::vector<Graph>& gs) {
    std::vector<Graph> comps;
    comps.reserve(gs.size());
    for (const auto& g : gs) {
        comps.push_back(complement(g));
    }
    return complement(disjoint_union(comps));
}

}  // namespace univadj
