#pragma once

#include <map>
#include <vector>

#include "striphom/engine.hpp"

namespace striphom {

// Weakly decreasing positive parts.  Cycle types and highest weights both
// use this shape.
using Partition = std::vector<int>;

// All partitions of n in the canonical order used throughout: ascending
// lexicographic on the part vectors, so (1,...,1) comes first and (n) last.
const std::vector<Partition>& partition_list(int n);
int partition_index(int n, const Partition& mu);

BigInt factorial(int n);
BigInt z_order(const Partition& mu);     // centralizer order, prod m_j! j^m_j
BigInt class_size(const Partition& mu);  // n! / z_order

// A permutation of cycle type mu built from cycles on consecutive integers,
// longest cycle first: mu = (2,1) on 3 points gives 1->2, 2->1, 3->3.
std::map<int, int> canonical_rep(const Partition& mu);

// Cycle type of g^p given the cycle type of g.
Partition power_cycle_type(const Partition& mu, int p);

// Character value of the irreducible indexed by lambda at class mu, by the
// recursive rim-hook expansion on beta numbers.
long irreducible_character(const Partition& lambda, const Partition& mu);
BigInt irreducible_dim(const Partition& lambda);

// A rational class function on the symmetric group of degree n, stored as
// its values on partition_list(n) in order.
struct ClassFunction {
    int n = 0;
    std::vector<Rational> values;

    ClassFunction() = default;
    ClassFunction(int n_, std::vector<Rational> v);

    const Rational& at(const Partition& mu) const;
    Rational dim() const { return values.front(); }  // value on (1,...,1)

    ClassFunction& operator+=(const ClassFunction& o);
    ClassFunction& operator-=(const ClassFunction& o);
    ClassFunction scaled(const Rational& c) const;
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) {
        a += b;
        return a;
    }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) {
        a -= b;
        return a;
    }
    bool operator==(const ClassFunction&) const = default;
};

ClassFunction trivial_character(int n);
ClassFunction sign_character(int n);
ClassFunction irreducible_class_function(int n, const Partition& lambda);

// Exterior powers of the (n-1)-dimensional reflection representation,
// r = 0..3, computed from fixed-point counts of powers (not from the
// rim-hook rule, so the two routes can be checked against each other).
ClassFunction ext_std_class_function(int n, int r);

Rational inner_product(const ClassFunction& a, const ClassFunction& b);

// Multiplicities of the irreducibles.  Throws unless every multiplicity is
// a non-negative integer, i.e. unless chi is a genuine character.
std::map<Partition, long> decompose(const ClassFunction& chi);

// Character of the induction of factors[0] x factors[1] x ... from the
// parallel product of symmetric groups to the full symmetric group on the
// sum of the degrees.  Degree-0 factors are allowed and dropped.
ClassFunction induced_character(const std::vector<ClassFunction>& factors);

// Trace of each conjugacy class on the k-cells of the width-w complex
// (a permutation action on cells, so the trace counts fixed cells).
ClassFunction fixed_cell_character(Engine& eng, int n, Width w, int k);

// Character of the degree-k homology of the width-2 complex: once straight
// from the critical basis, once through the fixed-cell trace identity
// chi_H_k = Fix_k - t_{k-1} - t_k with t_j the trace on the degree-j
// boundary space.  homology_character memoizes and picks per slice.
ClassFunction homology_character_from_basis(Engine& eng, int n, int k);
ClassFunction homology_character_from_counts(Engine& eng, int n, int k);
ClassFunction homology_character(Engine& eng, int n, int k);

// Multiplicity of the trivial representation in degree-k homology: the rank
// of the corresponding unordered-configuration homology group.
long unordered_rank(Engine& eng, int n, int k);

long trivial_multiplicity_formula(int n, int k);     // C(n-k, k)
long alternating_multiplicity_formula(int n, int k); // 1 iff n-3k in {0,1}

// Stream over all permutations of 1..n in Steinhaus-Johnson-Trotter order.
// The first position is the identity; each advance() swaps the images of
// one adjacent pair (p, p+1) of domain points and reports p, so a matrix
// model can follow along with one multiplication per step.
class PermutationStream {
public:
    explicit PermutationStream(int n);
    const std::vector<int>& current() const { return arr_; }  // arr_[p-1] = sigma(p)
    Partition cycle_type() const;
    bool advance(int* swapped_domain_point);

private:
    std::vector<int> arr_;
    std::vector<int> dir_;
};

}  // namespace striphom
