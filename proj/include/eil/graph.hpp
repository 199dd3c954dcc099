#ifndef EIL_GRAPH_HPP
#define EIL_GRAPH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

namespace eil {

// Finite simple graph with ordered, pairwise-distinct string vertex labels.
// Immutable after construction; all operations on it are pure.  At most 64
// vertices (adjacency is kept as 64-bit masks).
class SimpleGraph {
public:
    static constexpr int max_vertices = 64;

    SimpleGraph() = default;
    SimpleGraph(std::vector<std::string> vertices,
                const std::vector<std::pair<std::string, std::string>>& edges);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    long edge_count() const { return edge_count_; }
    const std::vector<std::string>& vertex_labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
    int index_of(const std::string& label) const; // -1 when absent
    bool has_vertex(const std::string& label) const { return index_of(label) >= 0; }

    bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1u; }
    std::uint64_t neighbors_mask(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return __builtin_popcountll(adj_[static_cast<std::size_t>(v)]); }
    std::uint64_t full_mask() const;

    // Edges as index pairs (u < v), sorted; and as label pairs in the same order.
    std::vector<std::pair<int, int>> edges() const;
    std::vector<std::pair<std::string, std::string>> edge_labels() const;

    // Subgraph induced by the vertex subset given as a bitmask over this
    // graph's vertex indices.  Label order is preserved.
    SimpleGraph induced_by_mask(std::uint64_t mask) const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::uint64_t> adj_;
    long edge_count_ = 0;
};

// Parse the textual graph format:
//   vertices: a b c
//   edges: a b  b c
// '#' starts a comment.  Throws parse_error with a line number on malformed
// input, duplicate vertices, loop edges, or undeclared edge endpoints.
SimpleGraph parse_graph(std::string_view text);

// {"vertices":[...],"edges":[[u,v],...]} with each edge sorted and the edge
// list sorted lexicographically.
nlohmann::json graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const nlohmann::json& j);

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<std::string>& w);

// Open or closed neighborhood of a vertex, in label order.
std::vector<std::string> neighborhood(const SimpleGraph& g, const std::string& v, bool closed);

// Maximal connected pieces as induced subgraphs, ordered by least vertex
// index; isolated vertices are singleton components.
std::vector<SimpleGraph> connected_components(const SimpleGraph& g);
std::vector<std::uint64_t> component_masks(const SimpleGraph& g);
std::vector<std::uint64_t> component_masks_within(const SimpleGraph& g, std::uint64_t subset);
bool is_connected(const SimpleGraph& g);

// Isomorphism-invariant key: two graphs receive equal keys exactly when they
// are isomorphic.  The key embeds a canonically labeled quotient adjacency
// matrix together with twin-class multiplicities, from which the adjacency
// matrix of the graph can be reconstructed up to isomorphism, so key equality
// is exact (no hashing).
std::string canonical_key(const SimpleGraph& g);

} // namespace eil

#endif
