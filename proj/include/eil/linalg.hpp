#ifndef EIL_LINALG_HPP
#define EIL_LINALG_HPP

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "eil/field.hpp"

namespace eil {

// Sparse integer matrix stored by columns; each column lists (row, value)
// with strictly increasing rows and nonzero values.
struct SparseIntMatrix {
    int rows = 0;
    std::vector<std::vector<std::pair<int, long long>>> cols;

    int col_count() const { return static_cast<int>(cols.size()); }
};

// Exact rank over the requested field.  Over GF(p) this is sparse Gaussian
// elimination mod p.  Over the rationals it eliminates with +-1 pivots in
// checked 64-bit arithmetic (boundary matrices almost always reduce fully
// this way), escalating to arbitrary precision on overflow, and finishes any
// unit-free remainder with fraction-free Bareiss elimination.
long rank_over_field(const SparseIntMatrix& m, const FieldSpec& field);

namespace detail {
// Fraction-free Gaussian elimination; exact rank of a dense integer matrix.
long bareiss_rank(std::vector<std::vector<mpz_class>> m);
} // namespace detail

} // namespace eil

#endif
