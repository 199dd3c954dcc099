#ifndef EIL_SIMPLICIAL_HPP
#define EIL_SIMPLICIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "eil/field.hpp"
#include "eil/graph.hpp"

namespace eil {

// Simplicial complex given by its vertex list and maximal faces.  An empty
// facet list denotes the complex {∅} whose only face is the empty face; the
// void complex (no faces at all) is a distinguished value.
struct SimplicialComplex {
    std::vector<std::string> vertices;
    std::vector<std::vector<int>> facets; // sorted vertex-index lists, pairwise non-contained
    bool is_void = false;

    static SimplicialComplex void_complex() {
        SimplicialComplex c;
        c.is_void = true;
        return c;
    }

    // Validates facet indices, sorts, and removes contained faces.
    static SimplicialComplex from_facets(std::vector<std::string> vertices,
                                         std::vector<std::vector<int>> facets);

    int dimension() const; // -1 for {∅}; -2 marker is never needed (void handled by caller)
};

// Faces are exactly the independent sets of g; returned by maximal faces.
SimplicialComplex independence_complex(const SimpleGraph& g);

// Reduced homology dimensions over the chosen field, indexed from k = -1:
// result[k+1] = dim H~_k.  The void complex yields an empty list; {∅} yields
// [1].  Computed from exact ranks of the boundary matrices.
std::vector<long> reduced_homology_dims(const SimplicialComplex& c, const FieldSpec& field);

namespace detail {

// Homology of the independence complex of the graph with the given adjacency
// masks, same index convention as above.  The workhorse behind Hochster
// sums; enumerates independent sets directly.
std::vector<long> independence_homology(const std::vector<std::uint64_t>& adj, int n,
                                        const FieldSpec& field);

// Homology from the full face list grouped by cardinality (faces_by_card[c]
// holds the bitmasks of the c-element faces; faces_by_card[0] = {0}).
std::vector<long> homology_from_faces(const std::vector<std::vector<std::uint64_t>>& faces_by_card,
                                      const FieldSpec& field);

} // namespace detail

} // namespace eil

#endif
