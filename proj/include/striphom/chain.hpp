#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "striphom/symbol.hpp"

namespace striphom {

using Rational = mpq_class;
using BigInt = mpz_class;

// Order-preserving injection between label sets, given by matching sorted
// positions: source[i] -> target[i].
struct OrderInjection {
    std::vector<int> source;  // strictly increasing
    std::vector<int> target;  // strictly increasing

    static OrderInjection into(std::vector<int> source, std::vector<int> target);
    int apply(int label) const;
};

// A formal rational combination of cells.  Every nonzero chain is
// homogeneous: all terms share one dimension and one label set.  Zero
// coefficients are never stored, so equality is structural.
class Chain {
public:
    Chain() = default;

    static Chain zero() { return Chain(); }
    static Chain unit(const Symbol& s);

    bool is_zero() const { return terms_.empty(); }
    int dimension() const;            // of any term; throws on zero chain
    std::vector<int> labels() const;  // sorted; throws on zero chain
    size_t size() const { return terms_.size(); }

    const std::map<Symbol, Rational>& terms() const { return terms_; }
    Rational coefficient(const Symbol& s) const;

    // Accumulates c * s, pruning zeros and enforcing homogeneity.
    Chain& add(const Symbol& s, const Rational& c);
    Chain& operator+=(const Chain& o);
    Chain operator+(const Chain& o) const;
    Chain operator-(const Chain& o) const;
    Chain operator-() const { return scaled(-1); }
    Chain scaled(const Rational& c) const;

    bool operator==(const Chain& o) const { return terms_ == o.terms_; }
    bool operator!=(const Chain& o) const { return terms_ != o.terms_; }

private:
    std::map<Symbol, Rational> terms_;
};

// Signed sum of codimension-1 faces.  For a single block the sign of the
// face X|Y is the sign of the permutation rearranging the concatenated word
// XY back into the block's word; for several blocks the rule applies one
// block at a time with an extra (-1)^(blocks to the left).
Chain boundary(const Chain& c);

// Bilinear concatenation with a bar between symbols; label sets must be
// disjoint.
Chain concat(const Chain& a, const Chain& b);

// Transport along an order-preserving relabeling; inj.source must equal the
// chain's label set.
Chain inject(const Chain& c, const OrderInjection& inj);

// Arbitrary relabeling by a bijection on the chain's label set.  Labels are
// replaced in place; the action carries no sign.
Chain relabel(const Chain& c, const std::map<int, int>& perm);
Symbol relabel(const Symbol& s, const std::map<int, int>& perm);

// Generating cycles: a point, the two orderings of a pair side by side, and
// the boundary of the single-block 3-cell "3 2 1" (a hexagonal 1-cycle)
// transported to labels i1 < i2 < i3.
Chain z_point(int i);
Chain z_pair(int i, int j);
Chain z_wheel(int i1, int i2, int i3);

}  // namespace striphom
