// Independent brute-force oracles used by the unit tests and the acceptance
// suite.  Everything here recomputes invariants from definitions, without the
// recursions, pruning, or memoization used by the library paths they check.
#ifndef EIL_TEST_ORACLES_HPP
#define EIL_TEST_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "eil/field.hpp"
#include "eil/graph.hpp"
#include "eil/linalg.hpp"
#include "eil/polynomial.hpp"
#include "eil/simplicial.hpp"

namespace oracle {

inline bool mask_independent(const eil::SimpleGraph& g, std::uint64_t mask) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((mask >> v) & 1u)
            if (g.neighbors_mask(v) & mask) return false;
    return true;
}

inline int independence_brute(const eil::SimpleGraph& g) {
    int best = 0;
    std::uint64_t full = g.full_mask();
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        if (mask_independent(g, mask)) best = std::max(best, __builtin_popcountll(mask));
        if (mask == full) break;
    }
    return best;
}

inline int matching_brute(const eil::SimpleGraph& g) {
    auto edges = g.edges();
    int best = 0;
    for (std::uint64_t mask = 0; mask < (1ull << edges.size()); ++mask) {
        std::uint64_t used = 0;
        bool ok = true;
        for (std::size_t e = 0; e < edges.size() && ok; ++e) {
            if (!((mask >> e) & 1u)) continue;
            std::uint64_t ends = (1ull << edges[e].first) | (1ull << edges[e].second);
            if (used & ends) ok = false;
            used |= ends;
        }
        if (ok) best = std::max(best, __builtin_popcountll(mask));
    }
    return best;
}

inline int induced_matching_brute(const eil::SimpleGraph& g) {
    auto edges = g.edges();
    int best = 0;
    for (std::uint64_t mask = 0; mask < (1ull << edges.size()); ++mask) {
        std::vector<std::size_t> chosen;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if ((mask >> e) & 1u) chosen.push_back(e);
        bool ok = true;
        for (std::size_t a = 0; a < chosen.size() && ok; ++a)
            for (std::size_t b = a + 1; b < chosen.size() && ok; ++b) {
                auto [p, q] = edges[chosen[a]];
                auto [r, s] = edges[chosen[b]];
                std::uint64_t closed = (1ull << p) | (1ull << q) | g.neighbors_mask(p) |
                                       g.neighbors_mask(q);
                if (closed & ((1ull << r) | (1ull << s))) ok = false;
            }
        if (ok) best = std::max(best, static_cast<int>(chosen.size()));
    }
    return best;
}

inline int idom_brute(const eil::SimpleGraph& g) {
    int n = g.vertex_count();
    std::uint64_t full = g.full_mask();
    int best = n + 1;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        if (mask_independent(g, mask)) {
            std::uint64_t covered = mask;
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1u) covered |= g.neighbors_mask(v);
            if (covered == full) best = std::min(best, __builtin_popcountll(mask));
        }
        if (mask == full) break;
    }
    return best;
}

// f-vector of the independence complex: counts[k] = number of independent
// sets of size k, counts[0] = 1.
inline std::vector<long> f_vector(const eil::SimpleGraph& g) {
    std::vector<long> counts(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    std::uint64_t full = g.full_mask();
    for (std::uint64_t mask = 0;; ++mask) {
        if (mask_independent(g, mask))
            ++counts[static_cast<std::size_t>(__builtin_popcountll(mask))];
        if (mask == full) break;
    }
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    return counts;
}

// h-polynomial through the f-vector: the numerator of
// sum_k f_{k-1} x^k / (1-x)^k over the common denominator (1-x)^dim.
inline eil::IntPolynomial h_from_f_vector(const eil::SimpleGraph& g) {
    std::vector<long> f = f_vector(g);
    int dim = static_cast<int>(f.size()) - 1;
    eil::IntPolynomial numerator = eil::IntPolynomial::zero();
    for (int k = 0; k <= dim; ++k) {
        eil::IntPolynomial term =
            eil::IntPolynomial::monomial(f[static_cast<std::size_t>(k)], k) *
            eil::IntPolynomial::one_minus_x_pow(dim - k);
        numerator = numerator + term;
    }
    return numerator;
}

// Hilbert function by direct monomial counting: monomials of total degree d
// survive in the quotient exactly when their support is independent.
inline std::vector<long> hilbert_function_brute(const eil::SimpleGraph& g, int max_degree) {
    std::vector<long> values(static_cast<std::size_t>(max_degree) + 1, 0);
    std::vector<long> f = f_vector(g);
    // monomials of degree d with support of size k: C(d-1, k-1)
    for (int d = 0; d <= max_degree; ++d) {
        if (d == 0) {
            values[0] = 1;
            continue;
        }
        long total = 0;
        for (int k = 1; k < static_cast<int>(f.size()); ++k) {
            long binom = 1;
            for (int i = 1; i < k; ++i) binom = binom * (d - i) / i;
            if (d >= k) total += f[static_cast<std::size_t>(k)] * binom;
        }
        values[static_cast<std::size_t>(d)] = total;
    }
    return values;
}

// Graph isomorphism by exhaustive permutation search (tiny graphs only).
inline bool isomorphic_brute(const eil::SimpleGraph& a, const eil::SimpleGraph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (a.adjacent(u, v) !=
                    b.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
                    ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Betti numbers without any pruning: per-subset homology of the full
// independence complex built through the public simplicial interface.
inline std::map<std::pair<int, int>, long> betti_brute(const eil::SimpleGraph& g,
                                                       const eil::FieldSpec& field) {
    std::map<std::pair<int, int>, long> entries;
    int n = g.vertex_count();
    for (std::uint64_t w = 0; w < (1ull << n); ++w) {
        eil::SimpleGraph sub = g.induced_by_mask(w);
        auto hom = eil::reduced_homology_dims(eil::independence_complex(sub), field);
        int j = __builtin_popcountll(w);
        for (std::size_t r = 0; r < hom.size(); ++r)
            if (hom[r] != 0) entries[{j - static_cast<int>(r), j}] += hom[r];
    }
    return entries;
}

// Dense rational-elimination rank, the oracle for the sparse/Bareiss path.
inline long rank_rational_dense(const eil::SparseIntMatrix& m) {
    std::vector<std::vector<mpq_class>> a(
        static_cast<std::size_t>(m.rows),
        std::vector<mpq_class>(m.cols.size(), mpq_class(0)));
    for (std::size_t c = 0; c < m.cols.size(); ++c)
        for (auto [r, v] : m.cols[c])
            a[static_cast<std::size_t>(r)][c] = mpq_class(static_cast<long>(v));
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    long rank = 0;
    std::size_t rr = 0;
    for (std::size_t c = 0; c < cols && rr < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = rr; i < rows; ++i)
            if (a[i][c] != 0) { pivot = i; break; }
        if (pivot == rows) continue;
        std::swap(a[rr], a[pivot]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rr || a[i][c] == 0) continue;
            mpq_class factor = a[i][c] / a[rr][c];
            for (std::size_t jj = c; jj < cols; ++jj) a[i][jj] -= factor * a[rr][jj];
        }
        ++rr;
        ++rank;
    }
    return rank;
}

} // namespace oracle

#endif
