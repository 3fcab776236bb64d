#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "tp/graph.hpp"

namespace tp {

// Edge-list text format: first line "n m", then m lines "u v" with
// 0 <= u < v < n, emitted in lexicographic order. The JSON mirror is
// {"n":..., "edges":[[u,v],...]} with the same edge order. Both writers
// are byte-deterministic.

template <class W>
void write_edge_list(std::ostream& os, const basic_graph<W>& g) {
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

template <class W>
std::string to_edge_list(const basic_graph<W>& g) {
    std::ostringstream os;
    write_edge_list(os, g);
    return os.str();
}

template <class W = std::uint64_t>
basic_graph<W> read_edge_list(std::istream& is) {
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(is, line)) {
            ++lineno;
            if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) return true;
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
    basic_graph<W> g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_line()) throw parse_error(lineno, "expected an edge line");
        std::istringstream es(line);
        long long u = 0, v = 0;
        if (!(es >> u >> v)) throw parse_error(lineno, "bad edge line \"" + line + "\"");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw parse_error(lineno, "edge endpoints out of range");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

template <class W>
nlohmann::ordered_json graph_to_json(const basic_graph<W>& g) {
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

template <class W = std::uint64_t>
basic_graph<W> graph_from_json(const nlohmann::json& j) {
    basic_graph<W> g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

} // namespace tp
