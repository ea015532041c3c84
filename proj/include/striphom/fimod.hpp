#pragma once

#include "striphom/h1basis.hpp"

namespace striphom {

// One factor of a degree-k generator product: either a simple barrier (an
// increasing pair, two labels) or a wheel family on m+2 labels.
struct Factor {
    enum Kind { SIMPLE, WHEEL };
    Kind kind = SIMPLE;
    int m = 0;  // wheel index; unused for SIMPLE

    int size() const { return kind == SIMPLE ? 2 : m + 2; }
    long dim() const { return kind == SIMPLE ? 1 : (long)(m + 1) * m / 2; }

    bool operator==(const Factor&) const = default;
};

// An ordered list of k factors.  D is the total label budget of the
// factors, S the number of simple ones; the slice at level n is a module
// over injections with an (S+1)-coloring of the missed labels.
struct BarrierTuple {
    std::vector<Factor> factors;

    int k() const { return (int)factors.size(); }
    int D() const;
    int S() const;
    std::vector<int> sizes() const;  // factor widths, e.g. (2, 4)
    std::string str() const;         // "(2,4)"

    bool operator==(const BarrierTuple&) const = default;
};

enum class CountMode { formula, bruteforce };

// Number of pairs (injection [m] -> [n], d-coloring of the missed part):
// n!/(n-m)! * d^(n-m), also available by direct enumeration.
BigInt count_fid_homs(int m, int n, int d, CountMode mode);

// Level-n dimension of the free module on a dimU-dimensional generator
// placed in degree m: dimU * C(n, m) * d^(n-m).
BigInt free_module_dim(int m, int n, int d, const BigInt& dimU);

// All ordered factor-size tuples (n_1, ..., n_k) with n_i >= 2 and sum <= n,
// in lexicographic order; size 2 becomes SIMPLE, size m+2 > 2 WHEEL(m).
std::vector<BarrierTuple> enumerate_barrier_tuples(int n, int k);

// Character of the generator representation on S_D: the induction of the
// factor characters (trivial for SIMPLE, second exterior power of the
// reflection representation for WHEEL(m)).
ClassFunction generator_character(const BarrierTuple& t);
BigInt generator_dim(const BarrierTuple& t);

// Predicted Betti number and character of degree-k homology at width 2,
// summed over barrier tuples; characters also sum over the lexicographic
// weak (S+1)-compositions sizing the trivial slot factors.
BigInt predicted_betti(int n, int k);
ClassFunction predicted_character(int n, int k);

// Leading values of the factors' canonical generator cells, in order:
// -1 for every SIMPLE factor, 2m for WHEEL(m).
std::vector<int> tuple_signature(const BarrierTuple& t);

// Spanning cycles of the tuple's slice at level n: one cycle per choice of
// a D-subset, an ordered split of it across the factors, a wheel basis
// chain per wheel factor, and an assignment of the leftover labels to the
// S+1 slots (before each simple factor and after the last factor), each
// slot holding a decreasing run of singletons.  Count equals
// free_module_dim(D, n, S+1, generator_dim).  Throws when D > n.
std::vector<Chain> barrier_slice_cycles(Engine& eng, const BarrierTuple& t, int n);

struct TupleCount {
    std::vector<int> sizes;
    long count = 0;
    long expected = 0;
};

struct DirectSumReport {
    int n = 0, k = 0;
    long betti = 0;
    long total = 0;
    bool independent = false;
    bool character_ok = false;
    std::vector<TupleCount> tuples;
    bool ok() const;
};

// Collects the slice cycles of every tuple, then checks the count against
// the Betti number, joint independence of the homology coordinates, and
// the character of the homology action against the predicted character.
DirectSumReport verify_direct_sum(Engine& eng, int n, int k);

}  // namespace striphom
