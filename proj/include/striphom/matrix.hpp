#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace striphom {

using BigInt = mpz_class;
using Rational = mpq_class;

// One sparse column: (row, value) pairs with rows strictly ascending and
// values nonzero.
using SparseIntCol = std::vector<std::pair<int32_t, BigInt>>;

struct SparseIntMatrix {
    int64_t rows = 0;
    int64_t cols = 0;
    std::vector<SparseIntCol> col;

    int64_t nnz() const {
        int64_t t = 0;
        for (const auto& c : col) t += (int64_t)c.size();
        return t;
    }
};

// Basis of the column space in column-echelon form: the largest nonzero row
// of each column (its "low") is unique, the low entry is positive, and each
// column has content 1.  Built by reducing columns left to right, so it
// doubles as the image basis of the matrix.
struct ColumnEchelon {
    int64_t rows = 0;
    std::vector<SparseIntCol> col;
    std::unordered_map<int32_t, int32_t> pivot_of_low;

    int64_t rank() const { return (int64_t)col.size(); }
};

ColumnEchelon column_echelon(const SparseIntMatrix& m);

inline int64_t rank(const SparseIntMatrix& m) { return column_echelon(m).rank(); }

// Invariant factors d_1 | d_2 | ... (positive, one per unit of rank).
std::vector<BigInt> smith_invariants(const SparseIntMatrix& m);

// One sparse rational vector: (index, value) pairs, indices strictly
// ascending, values nonzero.
using SparseQVec = std::vector<std::pair<int32_t, Rational>>;

// Incremental exact elimination over the rationals.  Tracks the span of the
// vectors kept so far and expresses later vectors over the kept ones, for
// orbit closures, stable-subspace checks, and joint-independence tests.
class RationalSpan {
public:
    // True when v was independent of the current span; v is then kept and
    // becomes coordinate dim()-1.
    bool add(const SparseQVec& v);

    // Coordinates of v over the kept vectors, or nullopt when v is outside
    // the span.  Zero vectors solve to the empty coordinate list.
    std::optional<SparseQVec> solve(const SparseQVec& v) const;

    int dim() const { return (int)kept_.size(); }
    const SparseQVec& kept(int i) const { return kept_[i]; }

private:
    struct Col {
        SparseQVec v;     // reduced column, unit low
        SparseQVec expr;  // the same column over the kept vectors
    };
    std::optional<SparseQVec> reduce(const SparseQVec& v, SparseQVec* rem) const;
    std::vector<Col> cols_;
    std::vector<SparseQVec> kept_;
    std::map<int32_t, int> pivot_of_low_;
};

}  // namespace striphom
