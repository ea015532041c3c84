#pragma once

#include <memory>
#include <unordered_map>

#include "striphom/chain.hpp"
#include "striphom/matrix.hpp"

namespace striphom {

// Sparse rational vector over a cell index space, indices ascending.

// The k-cells of cell(n, w) in canonical (text) order, with reverse lookup.
struct CellBasis {
    int n = 0;
    Width w;
    int k = 0;
    std::vector<Symbol> cells;
    std::unordered_map<std::string, int32_t> index;

    static CellBasis build(int n, Width w, int k);
    int32_t index_of(const Symbol& s) const;  // throws if s is not a cell here
    int64_t size() const { return (int64_t)cells.size(); }
};

// Matrix of the boundary map from `domain` (k-cells) to `codomain`
// ((k-1)-cells); every entry is +-1 and column supports are the
// codimension-1 faces.
SparseIntMatrix boundary_matrix(const CellBasis& domain, const CellBasis& codomain);
SparseIntMatrix boundary_matrix(int n, Width w, int k);

SparseQVec to_vector(const Chain& c, const CellBasis& cb);
Chain from_vector(const SparseQVec& v, const CellBasis& cb);

// True iff the chain is supported on cells of some cell(n, w) (width check)
// and its boundary vanishes.
bool is_cycle(const Chain& c, Width w);

// Reduction data for homology coordinates: the image echelon of the
// (k+1)-boundary plus the proposed basis cycles, echelonized together with
// bookkeeping of each column's class in terms of the basis.  Queries are
// back-substitution against this combined echelon.
class HomologyBasis {
public:
    // Throws unless the cycles are independent modulo boundaries and there
    // are exactly dim ker - rank img of them (so they are a basis).
    // rank_dk is the rank of the k-th boundary matrix.
    HomologyBasis(std::shared_ptr<const CellBasis> cells,
                  std::shared_ptr<const ColumnEchelon> boundary_image,
                  std::vector<Chain> cycles, int64_t rank_dk);

    int64_t dim() const { return (int64_t)basis_.size(); }
    const std::vector<Chain>& basis() const { return basis_; }
    const CellBasis& cells() const { return *cells_; }

    // Coefficients of the class [c]; throws if c is not a cycle supported
    // on this complex' k-cells.
    SparseQVec coordinates(const Chain& c) const;
    SparseQVec coordinates(SparseQVec v) const;

    bool homologous(const Chain& a, const Chain& b) const;
    Chain chain_of(const SparseQVec& coords) const;

private:
    std::shared_ptr<const CellBasis> cells_;
    std::shared_ptr<const ColumnEchelon> bnd_;
    std::vector<Chain> basis_;

    // Cycle part of the echelon; columns are scaled to a unit low entry.
    struct CycleCol {
        SparseQVec v;
        SparseQVec tag;  // class of v in basis coordinates
    };
    std::vector<CycleCol> cyc_;
    // low row -> column: non-negative = index into cyc_, negative = ~index
    // into bnd_->col.
    std::unordered_map<int32_t, int32_t> pivot_of_low_;
};

}  // namespace striphom
