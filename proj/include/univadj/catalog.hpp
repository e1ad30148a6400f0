// Small named graphs used by tests and the CLI's --catalog option.
#pragma once

#include "univadj/graph.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace univadj::catalog {

inline Graph complete(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            e.emplace_back(u, v);
        }
    }
    return Graph(n, e);
}

inline Graph empty(std::size_t n) { return Graph(n, std::vector<std::pair<Vertex, Vertex>>{}); }

inline Graph cycle(std::size_t n) {
    if (n < 3) {
        throw std::invalid_argument("cycle needs n >= 3");
    }
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex v = 0; v < n; ++v) {
        e.emplace_back(v, (v + 1) % n);
    }
    return Graph(n, e);
}

inline Graph path(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex v = 0; v + 1 < n; ++v) {
        e.emplace_back(v, v + 1);
    }
    return Graph(n, e);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < a; ++u) {
        for (Vertex v = 0; v < b; ++v) {
            e.emplace_back(u, a + v);
        }
    }
    return Graph(a + b, e);
}

/// k-dimensional hypercube Q_k.
inline Graph hypercube(unsigned k) {
    const std::size_t n = std::size_t{1} << k;
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex v = 0; v < n; ++v) {
        for (unsigned b = 0; b < k; ++b) {
            const Vertex w = v ^ (Vertex{1} << b);
            if (v < w) {
                e.emplace_back(v, w);
            }
        }
    }
    return Graph(n, e);
}

inline Graph petersen() {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer cycle
        e.emplace_back(i, i + 5);                // spokes
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph(10, e);
}

/// Resolves names such as "K5", "C7", "P3", "Q3", "K3,3", "E4" (edgeless),
/// "Petersen".
inline std::optional<Graph> by_name(std::string_view name) {
    auto number = [](std::string_view s) -> std::optional<std::size_t> {
        if (s.empty() || s.size() > 6) {
            return std::nullopt;
        }
        std::size_t v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') {
                return std::nullopt;
            }
            v = v * 10 + static_cast<std::size_t>(c - '0');
        }
        return v;
    };
    if (name == "Petersen" || name == "petersen") {
        return petersen();
    }
    if (name.empty()) {
        return std::nullopt;
    }
    const char kind = name[0];
    std::string_view rest = name.substr(1);
    if (kind == 'K') {
        if (const auto comma = rest.find(','); comma != std::string_view::npos) {
            auto a = number(rest.substr(0, comma));
            auto b = number(rest.substr(comma + 1));
            if (a && b && *a + *b > 0) {
                return complete_bipartite(*a, *b);
            }
            return std::nullopt;
        }
        if (auto n = number(rest); n && *n > 0) {
            return complete(*n);
        }
    } else if (kind == 'C') {
        if (auto n = number(rest); n && *n >= 3) {
            return cycle(*n);
        }
    } else if (kind == 'P') {
        if (auto n = number(rest); n && *n > 0) {
            return path(*n);
        }
    } else if (kind == 'E') {
        if (auto n = number(rest); n && *n > 0) {
            return empty(*n);
        }
    } else if (kind == 'Q') {
        if (auto k = number(rest); k && *k <= 10) {
            return hypercube(static_cast<unsigned>(*k));
        }
    }
    return std::nullopt;
}

}  // namespace univadj::catalog
