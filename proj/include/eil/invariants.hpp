#ifndef EIL_INVARIANTS_HPP
#define EIL_INVARIANTS_HPP

#include <string>
#include <utility>
#include <vector>

#include "eil/graph.hpp"

namespace eil {

// Exact value together with a certifying witness.  Witnesses are re-validated
// against their defining predicate before being returned, and ties are broken
// toward the lexicographically least set (in vertex declaration order).
struct WitnessedVertexSet {
    int value = 0;
    std::vector<std::string> witness;
};

struct WitnessedEdgeSet {
    int value = 0;
    std::vector<std::pair<std::string, std::string>> witness;
};

// Maximum matching m(G).
WitnessedEdgeSet matching_number(const SimpleGraph& g);

// Maximum induced matching im(G): a matching no edge of G bridges.
WitnessedEdgeSet induced_matching_number(const SimpleGraph& g);

// Maximum independent set; its size equals dim of the edge-ideal quotient.
WitnessedVertexSet independence_number(const SimpleGraph& g);

// i(G): minimum independent A with A together with its neighbors covering
// V(G).  Isolated vertices are forced into A.
WitnessedVertexSet independence_domination(const SimpleGraph& g);

} // namespace eil

#endif
