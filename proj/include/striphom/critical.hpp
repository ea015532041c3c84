#pragma once

#include "striphom/homology.hpp"

namespace striphom {

// Critical cells of the width-2 complex: all blocks of size <= 2, every
// pair of consecutive singleton blocks decreasing, and every decreasing
// 2-block a "follower" (immediately preceded by a singleton smaller than
// both of its entries).
bool is_critical(const Symbol& s);

// All critical k-cells on labels 1..n, in canonical text order.  There are
// betti-many of them: one per homology class.
std::vector<Symbol> enumerate_critical(int n, int k);

// A critical cell factors uniquely left to right into singletons, increasing
// 2-blocks, and singleton + decreasing 2-block pairs.
struct CriticalFactor {
    enum Kind { point, pair, wheel };
    Kind kind;
    std::vector<int> labels;  // point {i}; pair {i<j}; wheel {i1<i2<i3}
};
std::vector<CriticalFactor> factor_critical(const Symbol& s);

// The cycle attached to a critical cell: the concatenation of its factors'
// cycles (z_point / z_pair / z_wheel).  The cell itself appears with
// coefficient +1.
Chain critical_cycle(const Symbol& s);

// Insert a new largest label as a singleton right after the j-th 2-block
// (j = 0: at the far left).  The result is critical again.
Symbol high_insert_cell(const Symbol& critical, int j);

// Linear extension over critical coordinates: write [c] in the given basis
// (which must be the critical-cycle basis whose cells are listed in
// `critical_cells`, in order), insert into each basis cell, and rebuild.
Chain high_insertion(const Chain& c, int j, const HomologyBasis& hb,
                     const std::vector<Symbol>& critical_cells);

}  // namespace striphom
