#include "eil/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "eil/errors.hpp"

namespace eil {

SimpleGraph::SimpleGraph(std::vector<std::string> vertices,
                         const std::vector<std::pair<std::string, std::string>>& edges)
    : labels_(std::move(vertices)) {
    if (labels_.size() > static_cast<std::size_t>(max_vertices))
        throw std::invalid_argument("graphs with more than 64 vertices are not supported");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        auto [it, inserted] = index_.emplace(labels_[i], static_cast<int>(i));
        if (!inserted) throw std::invalid_argument("duplicate vertex label: " + labels_[i]);
    }
    adj_.assign(labels_.size(), 0);
    for (const auto& [a, b] : edges) {
        int u = index_of(a);
        int v = index_of(b);
        if (u < 0) throw std::invalid_argument("edge endpoint not declared: " + a);
        if (v < 0) throw std::invalid_argument("edge endpoint not declared: " + b);
        if (u == v) throw std::invalid_argument("loop edge at vertex: " + a);
        if (!adjacent(u, v)) ++edge_count_;
        adj_[static_cast<std::size_t>(u)] |= 1ull << v;
        adj_[static_cast<std::size_t>(v)] |= 1ull << u;
    }
}

int SimpleGraph::index_of(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

std::uint64_t SimpleGraph::full_mask() const {
    int n = vertex_count();
    return n == 64 ? ~0ull : (1ull << n) - 1;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u) {
        std::uint64_t higher = adj_[static_cast<std::size_t>(u)] >> (u + 1);
        for (int v = u + 1; higher; ++v, higher >>= 1)
            if (higher & 1u) out.emplace_back(u, v);
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> SimpleGraph::edge_labels() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto [u, v] : edges())
        out.emplace_back(label(u), label(v));
    return out;
}

SimpleGraph SimpleGraph::induced_by_mask(std::uint64_t mask) const {
    std::vector<std::string> verts;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int v = 0; v < vertex_count(); ++v)
        if ((mask >> v) & 1u) verts.push_back(label(v));
    for (int u = 0; u < vertex_count(); ++u) {
        if (!((mask >> u) & 1u)) continue;
        std::uint64_t both = adj_[static_cast<std::size_t>(u)] & mask;
        for (int v = u + 1; v < vertex_count(); ++v)
            if ((both >> v) & 1u) edges.emplace_back(label(u), label(v));
    }
    return SimpleGraph(std::move(verts), edges);
}

namespace {

std::vector<std::string> split_tokens(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

} // namespace

SimpleGraph parse_graph(std::string_view text) {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    bool saw_vertices = false, saw_edges = false;
    int vertices_line = 0, edges_line = 0;

    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tokens = split_tokens(line);
        if (tokens.empty()) continue;

        if (tokens[0] == "vertices:") {
            if (saw_vertices) throw parse_error(lineno, "repeated 'vertices:' line");
            saw_vertices = true;
            vertices_line = lineno;
            vertices.assign(tokens.begin() + 1, tokens.end());
        } else if (tokens[0] == "edges:") {
            if (!saw_vertices) throw parse_error(lineno, "'edges:' before 'vertices:'");
            if (saw_edges) throw parse_error(lineno, "repeated 'edges:' line");
            saw_edges = true;
            edges_line = lineno;
            if ((tokens.size() - 1) % 2 != 0)
                throw parse_error(lineno, "odd number of edge endpoints");
            for (std::size_t k = 1; k + 1 < tokens.size(); k += 2)
                edges.emplace_back(tokens[k], tokens[k + 1]);
        } else {
            throw parse_error(lineno, "malformed line; expected 'vertices:' or 'edges:'");
        }
    }
    if (!saw_vertices) throw parse_error(0, "missing 'vertices:' line");
    if (!saw_edges) throw parse_error(0, "missing 'edges:' line");

    // Reproduce construction errors with useful line numbers.
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j])
                throw parse_error(vertices_line, "duplicate vertex: " + vertices[i]);
    try {
        return SimpleGraph(std::move(vertices), edges);
    } catch (const std::invalid_argument& e) {
        // loop edges and undeclared endpoints are detected on the edge list
        throw parse_error(edges_line, e.what());
    }
}

nlohmann::json graph_to_json(const SimpleGraph& g) {
    nlohmann::json jv = nlohmann::json::array();
    for (const auto& v : g.vertex_labels()) jv.push_back(v);
    std::vector<std::pair<std::string, std::string>> edges = g.edge_labels();
    for (auto& e : edges)
        if (e.second < e.first) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    nlohmann::json je = nlohmann::json::array();
    for (const auto& [a, b] : edges) je.push_back(nlohmann::json::array({a, b}));
    return nlohmann::json{{"vertices", jv}, {"edges", je}};
}

SimpleGraph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw parse_error(0, "graph JSON must have 'vertices' and 'edges'");
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(v.get<std::string>());
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw parse_error(0, "edge must be a pair");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    try {
        return SimpleGraph(std::move(vertices), edges);
    } catch (const std::invalid_argument& e) {
        throw parse_error(0, e.what());
    }
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<std::string>& w) {
    std::uint64_t mask = 0;
    for (const auto& label : w) {
        int v = g.index_of(label);
        if (v < 0) throw std::invalid_argument("unknown vertex: " + label);
        mask |= 1ull << v;
    }
    return g.induced_by_mask(mask);
}

std::vector<std::string> neighborhood(const SimpleGraph& g, const std::string& v, bool closed) {
    int idx = g.index_of(v);
    if (idx < 0) throw std::invalid_argument("unknown vertex: " + v);
    std::uint64_t mask = g.neighbors_mask(idx);
    if (closed) mask |= 1ull << idx;
    std::vector<std::string> out;
    for (int u = 0; u < g.vertex_count(); ++u)
        if ((mask >> u) & 1u) out.push_back(g.label(u));
    return out;
}

std::vector<std::uint64_t> component_masks_within(const SimpleGraph& g, std::uint64_t subset) {
    std::vector<std::uint64_t> out;
    std::uint64_t remaining = subset;
    while (remaining) {
        std::uint64_t seed = remaining & (~remaining + 1);
        std::uint64_t comp = seed, frontier = seed;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = __builtin_ctzll(f);
                f &= f - 1;
                next |= g.neighbors_mask(v) & subset & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        remaining &= ~comp;
    }
    return out;
}

std::vector<std::uint64_t> component_masks(const SimpleGraph& g) {
    return component_masks_within(g, g.full_mask());
}

std::vector<SimpleGraph> connected_components(const SimpleGraph& g) {
    std::vector<SimpleGraph> out;
    for (std::uint64_t mask : component_masks(g)) out.push_back(g.induced_by_mask(mask));
    return out;
}

bool is_connected(const SimpleGraph& g) {
    return g.vertex_count() == 0 || component_masks(g).size() == 1;
}

} // namespace eil
