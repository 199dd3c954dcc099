#ifndef EIL_BETTI_HPP
#define EIL_BETTI_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eil/field.hpp"
#include "eil/graph.hpp"
#include "eil/polynomial.hpp"

namespace eil {

// Graded Betti numbers of the edge-ideal quotient over the chosen field.
// Only nonzero entries are stored; (0,0) -> 1 is always present.
struct BettiTable {
    FieldSpec field;
    int n_vars = 0;
    std::map<std::pair<int, int>, long> entries; // (homological degree i, internal degree j)

    long beta(int i, int j) const;
    int projdim() const;    // max i with an entry
    int regularity() const; // max j - i over entries
    // Corner entries: (i,j) such that no other entry (i',j') has i' >= i and
    // j'-i' >= j-i.
    std::vector<std::pair<int, int>> extremal_positions() const;

    nlohmann::json to_json() const; // {"field":..., "entries":[[i,j,beta],...]}
    std::string render_table() const;
};

// Betti vertex cutoff: 18 unless the EIL_CUTOFF environment variable says
// otherwise.
int default_betti_cutoff();

// Betti numbers via the independence-complex homology sum over all vertex
// subsets W:  beta_{i,j} = sum_{|W|=j} dim H~_{j-i-1}(Ind(G_W)).
// Subsets whose induced graph has an isolated vertex contribute nothing
// (their complexes are cones); the remaining complexes are split into
// connected components whose homology is combined by the join rule and
// memoized across calls by canonical key.  Refuses graphs above the cutoff.
BettiTable betti_table(const SimpleGraph& g, const FieldSpec& field, int cutoff);
BettiTable betti_table(const SimpleGraph& g, const FieldSpec& field);

// Alternating sum  sum_i (-1)^i sum_j beta_{i,j} x^j, which must equal the
// k-polynomial numerator.
IntPolynomial betti_alternating_sum(const BettiTable& t);

struct HomologicalReport {
    int n = 0;
    int projdim = 0;
    int depth = 0;
    int reg = 0;
    int dim = 0;
    int deg_h = 0;
    int a_invariant = 0;
    bool star_equality = false; // deg_h - reg == dim - depth, always cross-checked
                                // against beta_{p,p+reg} != 0
    std::vector<std::pair<int, int>> extremal;
    BettiTable table;

    nlohmann::json to_json() const;
};

HomologicalReport homological_report(const SimpleGraph& g, const FieldSpec& field, int cutoff);
HomologicalReport homological_report(const SimpleGraph& g, const FieldSpec& field);

// Certificate that beta_{i,i+ell} != 0 over every field: vertex-disjoint star
// subgraphs B_1..B_ell with i edges in total, one edge chosen from each so
// that the chosen edges form an induced matching.
struct StarPackingWitness {
    struct Star {
        std::string center;
        std::vector<std::string> leaves;
        std::pair<std::string, std::string> edge;
    };
    std::vector<Star> stars;
    nlohmann::json to_json() const;
};

// Finds such a certificate or reports that none exists.  For graphs with no
// cycle, absence is equivalent to beta_{i,i+ell} = 0.
std::optional<StarPackingWitness> betti_nonvanishing_witness(const SimpleGraph& g, int i, int ell);

} // namespace eil

#endif
