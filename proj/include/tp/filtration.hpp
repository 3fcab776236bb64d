#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tp/errors.hpp"
#include "tp/graph.hpp"

namespace tp {

/// Ordered duplicate-free edge list over a fixed vertex set; index i
/// (1-based) denotes the graph with the first i edges.
template <class W>
class basic_edgewise_filtration {
public:
    basic_edgewise_filtration() = default;

    explicit basic_edgewise_filtration(int n) : n_(n) {
        if (n < 0 || n > basic_graph<W>::max_vertices)
            throw capacity_error("filtration vertex count exceeds capacity");
    }

    basic_edgewise_filtration(int n, std::vector<std::pair<int, int>> edges)
        : basic_edgewise_filtration(n) {
        for (auto [u, v] : edges) push_edge(u, v);
    }

    int vertex_count() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// 1-based step index of an edge, or 0 if absent.
    int edge_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (edges_[i] == std::pair<int, int>{u, v}) return static_cast<int>(i) + 1;
        return 0;
    }

    void push_edge(int u, int v) {
        if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
            throw precondition_error("bad filtration edge");
        if (u > v) std::swap(u, v);
        if (edge_index(u, v) != 0) throw precondition_error("duplicate filtration edge");
        edges_.emplace_back(u, v);
    }

    /// Graph with the first i edges (0 <= i <= size()).
    basic_graph<W> prefix(int i) const {
        if (i < 0 || i > size()) throw precondition_error("prefix index out of range");
        basic_graph<W> g(n_);
        for (int j = 0; j < i; ++j) g.add_edge(edges_[j].first, edges_[j].second);
        return g;
    }

    basic_graph<W> final_graph() const { return prefix(size()); }

    friend bool operator==(const basic_edgewise_filtration& a, const basic_edgewise_filtration& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

using edgewise_filtration = basic_edgewise_filtration<std::uint64_t>;

// Filtration file format: "n m" then m lines "u v" in filtration order.

template <class W>
void write_filtration(std::ostream& os, const basic_edgewise_filtration<W>& f) {
    os << f.vertex_count() << ' ' << f.size() << '\n';
    for (auto [u, v] : f.edges()) os << u << ' ' << v << '\n';
}

template <class W>
std::string to_filtration_text(const basic_edgewise_filtration<W>& f) {
    std::ostringstream os;
    write_filtration(os, f);
    return os.str();
}

template <class W = std::uint64_t>
basic_edgewise_filtration<W> read_filtration(std::istream& is) {
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(is, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        ++lineno;
        return false;
    };
    if (!next_line()) throw parse_error(lineno, "missing header \"n m\"");
    long long n = 0, m = 0;
    {
        std::istringstream hs(line);
        if (!(hs >> n >> m) || n < 0 || m < 0) throw parse_error(lineno, "bad header \"" + line + "\"");
    }
    basic_edgewise_filtration<W> f(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_line()) throw parse_error(lineno, "expected an edge line");
        std::istringstream es(line);
        long long u = 0, v = 0;
        if (!(es >> u >> v)) throw parse_error(lineno, "bad edge line \"" + line + "\"");
        try {
            f.push_edge(static_cast<int>(u), static_cast<int>(v));
        } catch (const precondition_error& e) {
            throw parse_error(lineno, e.what());
        }
    }
    return f;
}

} // namespace tp
