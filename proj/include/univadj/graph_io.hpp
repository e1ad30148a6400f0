// graph6 and edge-list text formats.
#pragma once

#include "univadj/graph.hpp"
#include "univadj/rational.hpp"

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace univadj {

/// Largest order accepted by parse_graph6.
inline constexpr std::size_t kMaxGraph6Order = 20000;

namespace detail {

inline bool is_graph6_byte(char c) { return c >= 63 && c <= 126; }

inline std::string_view strip_line_end(std::string_view text) {
    if (!text.empty() && text.back() == '\n') {
        text.remove_suffix(1);
        if (!text.empty() && text.back() == '\r') {
            text.remove_suffix(1);
        }
    }
    return text;
}

}  // namespace detail

/// Decodes one graph6 line (McKay's format). An optional ">>graph6<<"
/// prefix and one trailing newline are accepted.
inline Graph parse_graph6(std::string_view text) {
    text = detail::strip_line_end(text);
    std::size_t pos = 0;
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) {
        pos = kHeader.size();
    }
    auto take = [&](const char* what) -> std::uint64_t {
        if (pos >= text.size()) {
            throw ParseError(std::string("truncated graph6 ") + what, pos);
        }
        const char c = text[pos];
        if (!detail::is_graph6_byte(c)) {
            throw ParseError("byte outside graph6 range 63..126", pos);
        }
        ++pos;
        return static_cast<std::uint64_t>(c - 63);
    };

    std::uint64_t n = 0;
    if (pos >= text.size()) {
        throw ParseError("empty graph6 string", pos);
    }
    if (text[pos] != '~') {
        n = take("header");
    } else {
        ++pos;
        std::size_t width = 3;
        if (pos < text.size() && text[pos] == '~') {
            ++pos;
            width = 6;
        }
        for (std::size_t i = 0; i < width; ++i) {
            n = (n << 6) | take("header");
        }
        const bool canonical = width == 3 ? n >= 63 : n >= 258048;
        if (!canonical) {
            throw ParseError("non-canonical graph6 size header", pos - 1);
        }
    }
    if (n > kMaxGraph6Order) {
        throw ParseError("graph order " + std::to_string(n) + " exceeds limit " + std::to_string(kMaxGraph6Order), 0);
    }

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t data_bytes = (bits + 5) / 6;
    const std::size_t data_start = pos;
    if (text.size() - pos < data_bytes) {
        throw ParseError("graph6 adjacency data truncated (expected " + std::to_string(data_bytes) + " bytes)",
                         text.size());
    }
    if (text.size() - pos > data_bytes) {
        throw ParseError("trailing bytes after graph6 data", pos + data_bytes);
    }

    std::vector<std::pair<Vertex, Vertex>> edges;
    std::uint64_t k = 0;
    std::uint64_t chunk = 0;
    for (std::uint64_t j = 1; j < n; ++j) {
        for (std::uint64_t i = 0; i < j; ++i, ++k) {
            if (k % 6 == 0) {
                chunk = take("adjacency data");
            }
            if ((chunk >> (5 - k % 6)) & 1u) {
                edges.emplace_back(i, j);
            }
        }
    }
    if (k % 6 != 0) {
        const std::uint64_t pad_mask = (std::uint64_t{1} << (6 - k % 6)) - 1;
        if (chunk & pad_mask) {
            throw ParseError("nonzero graph6 padding bits", data_start + data_bytes - 1);
        }
    }
    return Graph(static_cast<std::size_t>(n), edges);
}

/// Encodes g as a graph6 line (no header, no newline).
inline std::string to_graph6(const Graph& g) {
    const std::uint64_t n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += '~';
        for (int s = 12; s >= 0; s -= 6) {
            out += static_cast<char>(((n >> s) & 63) + 63);
        }
    } else {
        out += "~~";
        for (int s = 30; s >= 0; s -= 6) {
            out += static_cast<char>(((n >> s) & 63) + 63);
        }
    }
    unsigned chunk = 0;
    unsigned filled = 0;
    for (std::uint64_t j = 1; j < n; ++j) {
        for (std::uint64_t i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out += static_cast<char>(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out += static_cast<char>((chunk << (6 - filled)) + 63);
    }
    return out;
}

/// Parses "n" on the first line followed by one "u v" pair per line.
/// Duplicate edges collapse; blank lines are ignored.
inline Graph parse_edgelist(std::string_view text) {
    struct Token {
        std::string_view text;
        std::size_t offset;
    };
    std::vector<std::vector<Token>> lines;
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t end = text.find('\n', i);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::vector<Token> toks;
        std::size_t j = i;
        while (j < end) {
            while (j < end && std::isspace(static_cast<unsigned char>(text[j]))) {
                ++j;
            }
            const std::size_t start = j;
            while (j < end && !std::isspace(static_cast<unsigned char>(text[j]))) {
                ++j;
            }
            if (j > start) {
                toks.push_back({text.substr(start, j - start), start});
            }
        }
        if (!toks.empty()) {
            lines.push_back(std::move(toks));
        }
        i = end + 1;
    }
    auto to_index = [](const Token& t) -> std::size_t {
        if (t.text.size() > 18) {
            throw ParseError("number too large", t.offset);
        }
        std::size_t v = 0;
        for (std::size_t k = 0; k < t.text.size(); ++k) {
            const char c = t.text[k];
            if (c < '0' || c > '9') {
                throw ParseError(std::string("unexpected character '") + c + "'", t.offset + k);
            }
            v = v * 10 + static_cast<std::size_t>(c - '0');
        }
        return v;
    };
    if (lines.empty()) {
        throw ParseError("empty edge list", 0);
    }
    if (lines[0].size() != 1) {
        throw ParseError("first line must hold only the vertex count", lines[0].size() > 1 ? lines[0][1].offset : 0);
    }
    const std::size_t n = to_index(lines[0][0]);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t l = 1; l < lines.size(); ++l) {
        const auto& toks = lines[l];
        if (toks.size() != 2) {
            throw ParseError("expected \"u v\"", toks.front().offset);
        }
        const std::size_t u = to_index(toks[0]);
        const std::size_t v = to_index(toks[1]);
        for (const auto& [val, tok] : {std::pair{u, toks[0]}, std::pair{v, toks[1]}}) {
            if (val >= n) {
                throw ParseError("vertex " + std::to_string(val) + " out of range for n=" + std::to_string(n), tok.offset);
            }
        }
        if (u == v) {
            throw ParseError("self-loop at vertex " + std::to_string(u), toks[0].offset);
        }
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

/// Edge-list text form matching parse_edgelist.
inline std::string to_edgelist(const Graph& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (const auto& [u, v] : g.edges()) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

enum class GraphFormat { graph6, edgelist };

/// Edge lists start with a digit; graph6 bytes never do.
inline GraphFormat detect_format(std::string_view text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            continue;
        }
        return (c >= '0' && c <= '9') ? GraphFormat::edgelist : GraphFormat::graph6;
    }
    return GraphFormat::graph6;
}

inline Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edgelist(text);
}

}  // namespace univadj
