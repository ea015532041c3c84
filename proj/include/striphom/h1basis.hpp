#pragma once

#include <optional>

#include "striphom/symrep.hpp"

namespace striphom {

// A degree-one critical cell has exactly one 2-block.  Decreasing 2-blocks
// make the "A" (wheel) family, increasing 2-blocks the "B" (pair) family;
// m counts the singleton blocks to the left of the 2-block.
struct K1Class {
    bool decreasing = false;
    int m = 0;
};
K1Class classify_k1(const Symbol& s);

// The two families in canonical cell order.  B: 0 <= m <= n-2;
// A: 1 <= m <= n-2 (criticality forces a dominated singleton in front).
std::vector<Symbol> enumerate_A(int n, int m);
std::vector<Symbol> enumerate_B(int n, int m);

// Complexity grade of degree-one critical cells: 2m on the A side, 2m-1 on
// the B side.  For a cycle, the max grade over the support of its critical
// coordinates (nullopt for the zero class).  The signature of a critical
// cell of any degree splits it at its 2-blocks (the last segment absorbing
// the trailing singletons) and lists the grades segment by segment.
int leading_value(const Symbol& k1_cell);
std::optional<int> leading_value(Engine& eng, const Chain& cycle);
std::vector<int> signature(const Symbol& critical_cell);

// Alternating representative of the wheel class on i1 < i2 < i3: the class
// of the wheel cycle projected onto the sign-isotypic line of the homology
// of the three-label complex, scaled so the wheel cell's own basis class
// keeps coefficient one.  Transpositions of the three labels negate it,
// 3-cycles fix it.
Chain z_prime_wheel(Engine& eng, int i1, int i2, int i3);

// Seed family on m+2 labels: a reduced-echelon basis (normalized over the
// A(m+2, m) coordinates) of the (m,1,1)-isotypic subspace generated by the
// iterated far-left high insertions of the alternating wheel.  Its size is
// C(m+1, 2), the dimension of the second exterior power of the reflection
// representation.
struct WheelSeed {
    int m = 0;
    std::vector<Chain> chains;  // on labels 1..m+2
};
std::shared_ptr<const WheelSeed> wheel_seed(Engine& eng, int m);

// Extension to n labels: every order-preserving injection of the seed
// chains to an (m+2)-subset, with the leftover labels appended as a
// decreasing run of singletons.  Count equals |A(n, m)|.
std::vector<Chain> build_A_prime(Engine& eng, int n, int m);

// Character of each conjugacy class acting on the span of the given
// independent cycles inside the degree-hb homology.  stable=false (with
// zeroed values) when the span is not closed under relabeling.
std::pair<ClassFunction, bool> span_character(Engine& eng, int n,
                                              const HomologyBasis& hb,
                                              const std::vector<Chain>& chains);

struct FamilyCheck {
    int m = -1;  // -1 for the B family
    long count = 0;
    long expected = 0;
    bool stable = true;          // span closed under the symmetric group
    bool character_ok = false;   // span character equals the induced model
};

struct H1Verification {
    int n = 0;
    long betti = 0;
    long total = 0;
    bool independent = false;
    bool spans = false;
    std::vector<FamilyCheck> families;  // B first, then A by ascending m
    bool ok() const;
};
H1Verification verify_h1_basis(Engine& eng, int n);

struct LeadingValueReport {
    int n = 0, m = 0;
    long cells_checked = 0;
    long combos_checked = 0;
    bool remainders_below = false;  // A-cell remainders stay under grade 2m
    bool combos_at_grade = false;   // random A' combinations sit at grade 2m
    bool ok() const { return remainders_below && combos_at_grade; }
};
LeadingValueReport verify_leading_value_props(Engine& eng, int n, int m,
                                              unsigned rng_seed);

}  // namespace striphom
