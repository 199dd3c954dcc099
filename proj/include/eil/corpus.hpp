#ifndef EIL_CORPUS_HPP
#define EIL_CORPUS_HPP

#include <cstdint>
#include <vector>

#include "eil/cameron_walker.hpp"
#include "eil/graph.hpp"

namespace eil {

struct CorpusOptions {
    int m_max = 3;
    int n_max = 3;
    int s_max = 3;
    int t_max = 3;
    int max_vertices = 16;
};

// Connected bipartite graphs on parts of sizes m and n covering every
// vertex, as 1-based edge lists, one representative per isomorphism class
// (parts permuted independently, sides not swapped).
std::vector<std::vector<std::pair<int, int>>> connected_bipartite_classes(int m, int n);

// Every structure with m <= m_max, n <= n_max, 1 <= s_i <= s_max,
// 0 <= t_j <= t_max, at most max_vertices vertices, over all bipartite
// classes.  Deterministic order.
std::vector<CWStructure> cw_corpus(const CorpusOptions& opt);

// All trees with min_vertices..max_vertices vertices, one per isomorphism
// class, labeled x1..xk.
std::vector<SimpleGraph> all_trees(int min_vertices, int max_vertices);

// Seed-deterministic random connected graphs with min_vertices..max_vertices
// vertices.
std::vector<SimpleGraph> random_connected_graphs(int count, int min_vertices, int max_vertices,
                                                 std::uint64_t seed);

} // namespace eil

#endif
