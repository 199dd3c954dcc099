#ifndef EIL_HILBERT_HPP
#define EIL_HILBERT_HPP

#include <functional>
#include <mutex>
#include <string>
#include <unordered_map>

#include "eil/graph.hpp"
#include "eil/polynomial.hpp"

namespace eil {

// Memo cache for the Hilbert recursion, keyed by canonical_key of connected
// components.  Safe for concurrent callers.
class HilbertMemo {
public:
    bool lookup(const std::string& key, IntPolynomial& out) const;
    void store(const std::string& key, const IntPolynomial& value);
    std::size_t size() const;

private:
    mutable std::mutex mu_;
    std::unordered_map<std::string, IntPolynomial> cache_;
};

HilbertMemo& global_hilbert_memo();

// Selects the vertex to split on; must return a vertex lying on an edge.
using PivotRule = std::function<int(const SimpleGraph&)>;

// Default: maximum-degree vertex, ties broken by least index.
int max_degree_pivot(const SimpleGraph& g);

// Hilbert series of the edge-ideal quotient of g as N(x) / (1-x)^|V(g)|,
// computed by splitting off a vertex v on an edge:
//   N_G = (1-x) N_{G-v} + x (1-x)^{deg v} N_{G-N[v]},
// multiplying numerators over connected components, with edgeless components
// contributing 1.  Exact integer arithmetic throughout.
HilbertSeries k_polynomial(const SimpleGraph& g);
HilbertSeries k_polynomial(const SimpleGraph& g, HilbertMemo& memo, const PivotRule& pivot);

// Numerator of the reduced series over (1-x)^dim: divides the k-polynomial
// numerator exactly by (1-x)^(n-dim).  A nonzero remainder or a quotient
// vanishing at 1 signals an implementation bug and throws internal_error.
IntPolynomial h_polynomial(const SimpleGraph& g);

// deg h - dim; always <= 0 here.
int a_invariant(const SimpleGraph& g);

// Closed-form reduced Hilbert series of the star graph with s edges:
// (1 + x(1-x)^(s-1)) / (1-x)^s.
HilbertSeries star_series(int s);

// Closed-form reduced Hilbert series of the star triangle with t triangles:
// ((1+x)^t + x(1-x)^(t-1)) / (1-x)^t.
HilbertSeries star_triangle_series(int t);

} // namespace eil

#endif
