#include "eil/hilbert.hpp"

#include <stdexcept>

#include "eil/errors.hpp"
#include "eil/invariants.hpp"

namespace eil {

bool HilbertMemo::lookup(const std::string& key, IntPolynomial& out) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it == cache_.end()) return false;
    out = it->second;
    return true;
}

void HilbertMemo::store(const std::string& key, const IntPolynomial& value) {
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(key, value);
}

std::size_t HilbertMemo::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.size();
}

HilbertMemo& global_hilbert_memo() {
    static HilbertMemo memo;
    return memo;
}

int max_degree_pivot(const SimpleGraph& g) {
    int best = -1, bestdeg = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        if (d > bestdeg) { bestdeg = d; best = v; }
    }
    return best;
}

namespace {

IntPolynomial numerator_over_full_pole(const SimpleGraph& g, HilbertMemo& memo,
                                       const PivotRule& pivot);

// Numerator for a connected graph with at least one edge, over pole |V|.
IntPolynomial connected_numerator(const SimpleGraph& g, HilbertMemo& memo,
                                  const PivotRule& pivot) {
    std::string key = canonical_key(g);
    IntPolynomial cached;
    if (memo.lookup(key, cached)) return cached;

    int v = pivot(g);
    if (v < 0 || v >= g.vertex_count() || g.degree(v) == 0)
        throw internal_error("pivot rule returned a vertex without an edge");
    std::uint64_t all = g.full_mask();
    SimpleGraph minus_v = g.induced_by_mask(all & ~(1ull << v));
    SimpleGraph minus_closed = g.induced_by_mask(all & ~(g.neighbors_mask(v) | (1ull << v)));

    IntPolynomial n1 = numerator_over_full_pole(minus_v, memo, pivot);
    IntPolynomial n2 = numerator_over_full_pole(minus_closed, memo, pivot);
    IntPolynomial result = IntPolynomial::one_minus_x_pow(1) * n1 +
                           IntPolynomial::monomial(1, 1) *
                               IntPolynomial::one_minus_x_pow(g.degree(v)) * n2;

    memo.store(key, result);
    return result;
}

IntPolynomial numerator_over_full_pole(const SimpleGraph& g, HilbertMemo& memo,
                                       const PivotRule& pivot) {
    IntPolynomial result = IntPolynomial::one();
    for (std::uint64_t mask : component_masks(g)) {
        if (__builtin_popcountll(mask) == 1) continue; // isolated vertex: factor 1
        result = result * connected_numerator(g.induced_by_mask(mask), memo, pivot);
    }
    return result;
}

} // namespace

HilbertSeries k_polynomial(const SimpleGraph& g, HilbertMemo& memo, const PivotRule& pivot) {
    return HilbertSeries{numerator_over_full_pole(g, memo, pivot), g.vertex_count()};
}

HilbertSeries k_polynomial(const SimpleGraph& g) {
    return k_polynomial(g, global_hilbert_memo(), max_degree_pivot);
}

IntPolynomial h_polynomial(const SimpleGraph& g) {
    HilbertSeries ks = k_polynomial(g);
    int dim = independence_number(g).value;
    IntPolynomial q = ks.numerator;
    for (int i = 0; i < ks.pole_order - dim; ++i) {
        auto div = q.divided_by_one_minus_x();
        if (!div)
            throw internal_error("k-polynomial numerator not divisible by (1-x)^(n-dim)");
        q = std::move(*div);
    }
    if (q.is_zero() || q.eval_at_one() == 0)
        throw internal_error("h-polynomial vanishes at 1; (1-x) multiplicity exceeds n-dim");
    if (q.coeff(0) != 1)
        throw internal_error("h-polynomial has constant term != 1");
    return q;
}

int a_invariant(const SimpleGraph& g) {
    IntPolynomial h = h_polynomial(g);
    int dim = independence_number(g).value;
    return *h.degree() - dim;
}

HilbertSeries star_series(int s) {
    if (s < 1) throw std::invalid_argument("star graph needs at least one edge");
    IntPolynomial num = IntPolynomial::one() +
                        IntPolynomial::monomial(1, 1) * IntPolynomial::one_minus_x_pow(s - 1);
    return HilbertSeries{num, s};
}

HilbertSeries star_triangle_series(int t) {
    if (t < 1) throw std::invalid_argument("star triangle needs at least one triangle");
    IntPolynomial num = IntPolynomial::one_plus_x_pow(t) +
                        IntPolynomial::monomial(1, 1) * IntPolynomial::one_minus_x_pow(t - 1);
    return HilbertSeries{num, t};
}

} // namespace eil
