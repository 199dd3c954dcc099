#include "eil/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "eil/errors.hpp"

namespace eil {

namespace {

struct int64_overflow {};

// Scalar policies for the sparse elimination.  `is_unit` marks entries that
// may be used as division-free pivots; over GF(p) every nonzero entry
// qualifies.

struct Int64Ops {
    using value_type = long long;
    static value_type from_ll(long long v) { return v; }
    static bool is_zero(value_type v) { return v == 0; }
    static bool is_unit(value_type v) { return v == 1 || v == -1; }
    // a - f*b with overflow detection
    static value_type sub_mul(value_type a, value_type f, value_type b) {
        value_type fb, r;
        if (__builtin_mul_overflow(f, b, &fb)) throw int64_overflow{};
        if (__builtin_sub_overflow(a, fb, &r)) throw int64_overflow{};
        return r;
    }
    static value_type unit_quotient(value_type a, value_type pivot) {
        if (pivot != 1 && a == std::numeric_limits<long long>::min()) throw int64_overflow{};
        return pivot == 1 ? a : -a;
    }
};

struct MpzOps {
    using value_type = mpz_class;
    static value_type from_ll(long long v) { return mpz_class(static_cast<long>(v)); }
    static bool is_zero(const value_type& v) { return v == 0; }
    static bool is_unit(const value_type& v) { return v == 1 || v == -1; }
    static value_type sub_mul(const value_type& a, const value_type& f, const value_type& b) {
        return a - f * b;
    }
    static value_type unit_quotient(const value_type& a, const value_type& pivot) {
        return pivot == 1 ? a : value_type(-a);
    }
};

struct GfpOps {
    long long p;
    using value_type = long long;
    value_type from_ll(long long v) const {
        long long r = v % p;
        return r < 0 ? r + p : r;
    }
    static bool is_zero(value_type v) { return v == 0; }
    static bool is_unit(value_type v) { return v != 0; }
    value_type sub_mul(value_type a, value_type f, value_type b) const {
        long long r = (a - f * b % p) % p;
        return r < 0 ? r + p : r;
    }
    value_type inverse(value_type a) const {
        // extended Euclid
        long long t = 0, nt = 1, r = p, nr = a % p;
        while (nr != 0) {
            long long q = r / nr;
            std::swap(t -= q * nt, nt);
            std::swap(r -= q * nr, nr);
        }
        return t < 0 ? t + p : t;
    }
    value_type unit_quotient(value_type a, value_type pivot) const {
        return a * inverse(pivot) % p;
    }
};

template <typename Ops>
class SparseElimination {
public:
    using V = typename Ops::value_type;
    struct Entry {
        int row;
        V val;
    };

    SparseElimination(const SparseIntMatrix& m, Ops ops) : ops_(ops), rows_(m.rows) {
        cols_.resize(m.cols.size());
        for (std::size_t c = 0; c < m.cols.size(); ++c) {
            for (auto [r, v] : m.cols[c]) {
                V x = ops_.from_ll(v);
                if (!Ops::is_zero(x)) cols_[c].push_back(Entry{r, x});
            }
        }
        live_col_.assign(cols_.size(), true);
        live_row_.assign(static_cast<std::size_t>(rows_), true);
        row_nnz_.assign(static_cast<std::size_t>(rows_), 0);
        row_cols_.assign(static_cast<std::size_t>(rows_), {});
        for (std::size_t c = 0; c < cols_.size(); ++c)
            for (const auto& e : cols_[c]) {
                ++row_nnz_[static_cast<std::size_t>(e.row)];
                row_cols_[static_cast<std::size_t>(e.row)].push_back(static_cast<int>(c));
            }
    }

    // Eliminate with unit pivots while any exist; returns the pivot count.
    long eliminate_units() {
        long rank = 0;
        while (true) {
            auto [pc, pr] = find_unit_pivot();
            if (pc < 0) break;
            eliminate(pr, pc);
            ++rank;
        }
        return rank;
    }

    // Remaining live submatrix as a dense matrix (for the Bareiss finish).
    std::vector<std::vector<mpz_class>> leftover_dense() const {
        std::vector<int> row_map(static_cast<std::size_t>(rows_), -1);
        int nr = 0;
        for (int r = 0; r < rows_; ++r)
            if (live_row_[static_cast<std::size_t>(r)]) row_map[static_cast<std::size_t>(r)] = nr++;
        std::vector<std::vector<mpz_class>> dense;
        for (std::size_t c = 0; c < cols_.size(); ++c) {
            if (!live_col_[c] || cols_[c].empty()) continue;
            std::vector<mpz_class> col(static_cast<std::size_t>(nr), 0);
            for (const auto& e : cols_[c])
                col[static_cast<std::size_t>(row_map[static_cast<std::size_t>(e.row)])] =
                    to_mpz(e.val);
            dense.push_back(std::move(col));
        }
        return dense; // stored column-wise; rank is transpose-invariant
    }

    bool fully_eliminated() const {
        for (std::size_t c = 0; c < cols_.size(); ++c)
            if (live_col_[c] && !cols_[c].empty()) return false;
        return true;
    }

private:
    static mpz_class to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }
    static mpz_class to_mpz(const mpz_class& v) { return v; }

    std::pair<int, int> find_unit_pivot() {
        int best_col = -1, best_row = -1;
        long best_cost = -1;
        for (std::size_t c = 0; c < cols_.size(); ++c) {
            if (!live_col_[c] || cols_[c].empty()) continue;
            long cn = static_cast<long>(cols_[c].size());
            for (const auto& e : cols_[c]) {
                if (!ops_is_unit(e.val)) continue;
                long rn = static_cast<long>(row_nnz_[static_cast<std::size_t>(e.row)]);
                long cost = (cn - 1) * (rn - 1);
                if (best_col < 0 || cost < best_cost) {
                    best_cost = cost;
                    best_col = static_cast<int>(c);
                    best_row = e.row;
                    if (cost == 0) return {best_col, best_row};
                }
            }
        }
        return {best_col, best_row};
    }

    bool ops_is_unit(const V& v) const { return ops_unit_impl(v); }
    bool ops_unit_impl(const V& v) const {
        if constexpr (std::is_same_v<Ops, GfpOps>)
            return GfpOps::is_unit(v);
        else
            return Ops::is_unit(v);
    }

    const V* entry_at(const std::vector<Entry>& col, int row) const {
        auto it = std::lower_bound(col.begin(), col.end(), row,
                                   [](const Entry& e, int r) { return e.row < r; });
        if (it != col.end() && it->row == row) return &it->val;
        return nullptr;
    }

    void eliminate(int pr, int pc) {
        std::vector<Entry> pivot_col = cols_[static_cast<std::size_t>(pc)];
        const V* pv = entry_at(pivot_col, pr);
        V pivot = *pv;

        std::vector<int> touched = row_cols_[static_cast<std::size_t>(pr)];
        for (int c : touched) {
            if (c == pc || !live_col_[static_cast<std::size_t>(c)]) continue;
            auto& col = cols_[static_cast<std::size_t>(c)];
            const V* av = entry_at(col, pr);
            if (!av) continue; // stale index
            V factor = ops_quotient(*av, pivot);
            subtract_scaled(c, col, pivot_col, factor);
        }

        // Retire the pivot row and column.
        for (const auto& e : cols_[static_cast<std::size_t>(pc)])
            --row_nnz_[static_cast<std::size_t>(e.row)];
        cols_[static_cast<std::size_t>(pc)].clear();
        live_col_[static_cast<std::size_t>(pc)] = false;
        live_row_[static_cast<std::size_t>(pr)] = false;
        row_cols_[static_cast<std::size_t>(pr)].clear();
        row_nnz_[static_cast<std::size_t>(pr)] = 0;
    }

    V ops_quotient(const V& a, const V& pivot) const {
        if constexpr (std::is_same_v<Ops, GfpOps>)
            return ops_.unit_quotient(a, pivot);
        else
            return Ops::unit_quotient(a, pivot);
    }

    V ops_sub_mul(const V& a, const V& f, const V& b) const {
        if constexpr (std::is_same_v<Ops, GfpOps>)
            return ops_.sub_mul(a, f, b);
        else
            return Ops::sub_mul(a, f, b);
    }

    // col_c -= factor * pivot_col (merge of two sorted columns)
    void subtract_scaled(int c, std::vector<Entry>& col, const std::vector<Entry>& pivot_col,
                         const V& factor) {
        std::vector<Entry> out;
        out.reserve(col.size() + pivot_col.size());
        std::size_t i = 0, j = 0;
        while (i < col.size() || j < pivot_col.size()) {
            if (j == pivot_col.size() || (i < col.size() && col[i].row < pivot_col[j].row)) {
                out.push_back(col[i++]);
            } else if (i == col.size() || pivot_col[j].row < col[i].row) {
                if (!live_row_[static_cast<std::size_t>(pivot_col[j].row)]) { ++j; continue; }
                V nv = ops_sub_mul(ops_zero(), factor, pivot_col[j].val);
                if (!Ops::is_zero(nv)) {
                    out.push_back(Entry{pivot_col[j].row, nv});
                    ++row_nnz_[static_cast<std::size_t>(pivot_col[j].row)];
                    row_cols_[static_cast<std::size_t>(pivot_col[j].row)].push_back(c);
                }
                ++j;
            } else {
                V nv = ops_sub_mul(col[i].val, factor, pivot_col[j].val);
                if (!Ops::is_zero(nv)) {
                    out.push_back(Entry{col[i].row, nv});
                } else {
                    --row_nnz_[static_cast<std::size_t>(col[i].row)];
                }
                ++i;
                ++j;
            }
        }
        col = std::move(out);
    }

    V ops_zero() const { return ops_from_ll(0); }
    V ops_from_ll(long long v) const {
        if constexpr (std::is_same_v<Ops, GfpOps>)
            return ops_.from_ll(v);
        else
            return Ops::from_ll(v);
    }

    Ops ops_;
    int rows_;
    std::vector<std::vector<Entry>> cols_;
    std::vector<bool> live_col_, live_row_;
    std::vector<int> row_nnz_;
    std::vector<std::vector<int>> row_cols_;
};

template <typename Ops>
long rank_rational_impl(const SparseIntMatrix& m, Ops ops) {
    SparseElimination<Ops> elim(m, ops);
    long rank = elim.eliminate_units();
    if (!elim.fully_eliminated()) rank += detail::bareiss_rank(elim.leftover_dense());
    return rank;
}

} // namespace

namespace detail {

long bareiss_rank(std::vector<std::vector<mpz_class>> m) {
    if (m.empty()) return 0;
    std::size_t nrows = m.size();
    std::size_t ncols = m[0].size();
    long rank = 0;
    std::size_t r = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t pivot = nrows;
        for (std::size_t i = r; i < nrows; ++i)
            if (m[i][c] != 0) { pivot = i; break; }
        if (pivot == nrows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = c + 1; j < ncols; ++j) {
                mpz_class num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_class q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0) throw internal_error("Bareiss division was not exact");
                m[i][j] = q;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
        ++rank;
    }
    return rank;
}

} // namespace detail

long rank_over_field(const SparseIntMatrix& m, const FieldSpec& field) {
    if (field.is_rationals()) {
        try {
            return rank_rational_impl(m, Int64Ops{});
        } catch (const int64_overflow&) {
            return rank_rational_impl(m, MpzOps{});
        }
    }
    GfpOps ops{static_cast<long long>(field.p)};
    SparseElimination<GfpOps> elim(m, ops);
    long rank = elim.eliminate_units();
    if (!elim.fully_eliminated())
        throw internal_error("GF(p) elimination left nonzero entries");
    return rank;
}

} // namespace eil
