#include "striphom/h1basis.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace striphom {

K1Class classify_k1(const Symbol& s) {
    const auto& blocks = s.blocks();
    K1Class out;
    int pairs = 0;
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].size() == 2) {
            ++pairs;
            out.decreasing = blocks[b][0] > blocks[b][1];
            out.m = static_cast<int>(b);
        } else if (blocks[b].size() != 1) {
            throw std::invalid_argument("not a degree-one critical shape");
        }
    }
    if (pairs != 1) throw std::invalid_argument("expected exactly one 2-block");
    return out;
}

std::vector<Symbol> enumerate_A(int n, int m) {
    std::vector<Symbol> out;
    for (const Symbol& s : enumerate_critical(n, 1)) {
        K1Class c = classify_k1(s);
        if (c.decreasing && c.m == m) out.push_back(s);
    }
    return out;
}

std::vector<Symbol> enumerate_B(int n, int m) {
    std::vector<Symbol> out;
    for (const Symbol& s : enumerate_critical(n, 1)) {
        K1Class c = classify_k1(s);
        if (!c.decreasing && c.m == m) out.push_back(s);
    }
    return out;
}

int leading_value(const Symbol& k1_cell) {
    K1Class c = classify_k1(k1_cell);
    return c.decreasing ? 2 * c.m : 2 * c.m - 1;
}

std::optional<int> leading_value(Engine& eng, const Chain& cycle) {
    auto labels = cycle.labels();
    int n = static_cast<int>(labels.size());
    if (labels.empty() || labels.front() != 1 || labels.back() != n)
        throw std::invalid_argument("cycle labels must be 1..n");
    auto hb = eng.critical_basis(n, 1);
    auto cells = eng.critical_cells(n, 1);
    SparseQVec coords = hb->coordinates(cycle);
    std::optional<int> best;
    for (const auto& [idx, v] : coords) {
        int L = leading_value((*cells)[idx]);
        if (!best || L > *best) best = L;
    }
    return best;
}

std::vector<int> signature(const Symbol& critical_cell) {
    if (!is_critical(critical_cell))
        throw std::invalid_argument("signature needs a critical cell");
    std::vector<int> out;
    int singles = 0;
    for (const auto& blk : critical_cell.blocks()) {
        if (blk.size() == 1) {
            ++singles;
        } else {
            out.push_back(blk[0] > blk[1] ? 2 * singles : 2 * singles - 1);
            singles = 0;
        }
    }
    // trailing singletons belong to the last segment and carry no grade
    return out;
}

namespace {

// full matrices of the relabeling action on critical homology coordinates,
// one sparse column per basis class
std::vector<SparseQVec> action_matrix(const HomologyBasis& hb,
                                      const std::map<int, int>& sigma) {
    std::vector<SparseQVec> cols;
    cols.reserve(hb.dim());
    for (int j = 0; j < hb.dim(); ++j)
        cols.push_back(hb.coordinates(relabel(hb.basis()[j], sigma)));
    return cols;
}

SparseQVec apply_columns(const std::vector<SparseQVec>& mat,
                         const SparseQVec& v) {
    std::map<int32_t, Rational> acc;
    for (const auto& [j, c] : v)
        for (const auto& [i, a] : mat[j]) {
            acc[i] += c * a;
            acc[i].canonicalize();
        }
    SparseQVec out;
    for (const auto& [i, val] : acc)
        if (val != 0) out.push_back({i, val});
    return out;
}

using QMatrix = std::vector<std::vector<Rational>>;  // [col][row], square

QMatrix identity_matrix(int w) {
    QMatrix m(w, std::vector<Rational>(w, 0));
    for (int i = 0; i < w; ++i) m[i][i] = 1;
    return m;
}

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
    int w = static_cast<int>(a.size());
    QMatrix out(w, std::vector<Rational>(w, 0));
    for (int j = 0; j < w; ++j)
        for (int k = 0; k < w; ++k) {
            if (b[j][k] == 0) continue;
            for (int i = 0; i < w; ++i) {
                if (a[k][i] == 0) continue;
                out[j][i] += a[k][i] * b[j][k];
                out[j][i].canonicalize();
            }
        }
    return out;
}

std::map<int, int> swap_map(int n, int p) {
    std::map<int, int> sigma;
    for (int i = 1; i <= n; ++i) sigma[i] = i;
    sigma[p] = p + 1;
    sigma[p + 1] = p;
    return sigma;
}

WheelSeed make_seed(Engine& eng, int m);

WheelSeed base_seed(Engine& eng) {
    auto hb = eng.critical_basis(3, 1);
    Chain wheel = z_wheel(1, 2, 3);
    std::map<int32_t, Rational> acc;
    std::vector<int> perm = {1, 2, 3};
    do {
        std::map<int, int> sigma;
        int inversions = 0;
        for (int i = 0; i < 3; ++i) {
            sigma[i + 1] = perm[i];
            for (int j = i + 1; j < 3; ++j)
                if (perm[i] > perm[j]) ++inversions;
        }
        Rational sgn = inversions % 2 == 0 ? 1 : -1;
        for (const auto& [idx, v] : hb->coordinates(relabel(wheel, sigma)))
            acc[idx] += sgn * v;
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto cells = eng.critical_cells(3, 1);
    Symbol wheel_cell = parse_symbol("1|3 2");
    int widx = -1;
    for (size_t i = 0; i < cells->size(); ++i)
        if ((*cells)[i] == wheel_cell) widx = static_cast<int>(i);
    auto hit = acc.find(widx);
    if (widx < 0 || hit == acc.end() || hit->second == 0)
        throw std::logic_error("alternating projection lost the wheel");
    Rational scale = hit->second;
    SparseQVec coords;
    for (auto& [idx, v] : acc) {
        v /= scale;
        v.canonicalize();
        if (v != 0) coords.push_back({idx, v});
    }
    WheelSeed seed;
    seed.m = 1;
    seed.chains = {hb->chain_of(coords)};
    return seed;
}

WheelSeed make_seed(Engine& eng, int m) {
    if (m < 1) throw std::invalid_argument("wheel seeds start at m = 1");
    if (m == 1) return base_seed(eng);

    int n = m + 2;
    auto hb = eng.critical_basis(n, 1);
    Chain start = wheel_seed(eng, 1)->chains[0];
    for (int t = 1; t < m; ++t) start = eng.high_insert(start, 0);

    std::vector<std::vector<SparseQVec>> adj;  // adjacent transpositions
    for (int p = 1; p <= n - 1; ++p)
        adj.push_back(action_matrix(*hb, swap_map(n, p)));

    // orbit closure of the start vector under the full symmetric group
    RationalSpan span;
    std::vector<SparseQVec> queue = {hb->coordinates(start)};
    span.add(queue[0]);
    while (!queue.empty()) {
        SparseQVec v = std::move(queue.back());
        queue.pop_back();
        for (const auto& mat : adj) {
            SparseQVec u = apply_columns(mat, v);
            if (span.add(u)) queue.push_back(u);
        }
    }
    int w = span.dim();

    // the transposition matrices restricted to the orbit span
    std::vector<QMatrix> small;
    for (const auto& mat : adj) {
        QMatrix a(w, std::vector<Rational>(w, 0));
        for (int j = 0; j < w; ++j) {
            auto coords = span.solve(apply_columns(mat, span.kept(j)));
            if (!coords) throw std::logic_error("orbit span is not stable");
            for (const auto& [i, v] : *coords) a[j][i] = v;
        }
        small.push_back(std::move(a));
    }

    // isotypic projector onto the hook (m, 1, 1), accumulated over the
    // permutation stream so each step costs one small multiplication
    Partition hook = {m, 1, 1};
    QMatrix rho = identity_matrix(w);
    QMatrix proj(w, std::vector<Rational>(w, 0));
    PermutationStream ps(n);
    while (true) {
        Rational chi = irreducible_character(hook, ps.cycle_type());
        if (chi != 0)
            for (int j = 0; j < w; ++j)
                for (int i = 0; i < w; ++i) {
                    proj[j][i] += chi * rho[j][i];
                    proj[j][i].canonicalize();
                }
        int p = 0;
        if (!ps.advance(&p)) break;
        rho = multiply(rho, small[p - 1]);
    }
    // overall scale dim/|G| does not matter for the image space

    // image of the projector, lifted back to homology coordinates
    RationalSpan image;
    std::vector<SparseQVec> lifted;
    for (int j = 0; j < w; ++j) {
        std::map<int32_t, Rational> acc;
        for (int t = 0; t < w; ++t) {
            if (proj[j][t] == 0) continue;
            for (const auto& [i, v] : span.kept(t)) {
                acc[i] += proj[j][t] * v;
                acc[i].canonicalize();
            }
        }
        SparseQVec x;
        for (const auto& [i, v] : acc)
            if (v != 0) x.push_back({i, v});
        if (image.add(x)) lifted.push_back(x);
    }
    long want = (static_cast<long>(m) + 1) * m / 2;  // C(m+1, 2)
    if (image.dim() != want)
        throw std::logic_error("isotypic projection has unexpected dimension");

    // normalize so the matrix of A(m+2, m) coordinates is the identity
    auto cells = eng.critical_cells(n, 1);
    std::vector<int> arows;
    for (size_t i = 0; i < cells->size(); ++i) {
        K1Class c = classify_k1((*cells)[i]);
        if (c.decreasing && c.m == m) arows.push_back(static_cast<int>(i));
    }
    if (static_cast<long>(arows.size()) != want)
        throw std::logic_error("wheel cell count mismatch at the seed stage");

    // solve (A-block)^T * coeffs = e_i by elimination on an augmented matrix
    int r = static_cast<int>(want);
    QMatrix aug(r, std::vector<Rational>(2 * r, 0));  // rows of [A | I]
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j)
            for (const auto& [row, v] : lifted[j])
                if (row == arows[i]) aug[i][j] = v;
        aug[i][r + i] = 1;
    }
    for (int c = 0; c < r; ++c) {
        int piv = -1;
        for (int i = c; i < r; ++i)
            if (aug[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            throw std::logic_error("wheel coordinates of the seed are singular");
        std::swap(aug[c], aug[piv]);
        Rational d = aug[c][c];
        for (auto& v : aug[c]) {
            v /= d;
            v.canonicalize();
        }
        for (int i = 0; i < r; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            Rational f = aug[i][c];
            for (int j = 0; j < 2 * r; ++j) {
                aug[i][j] -= f * aug[c][j];
                aug[i][j].canonicalize();
            }
        }
    }

    WheelSeed seed;
    seed.m = m;
    for (int i = 0; i < r; ++i) {
        // row i of the inverse combines the lifted vectors into the basis
        // vector whose A-coordinates are the i-th unit vector
        std::map<int32_t, Rational> acc;
        for (int j = 0; j < r; ++j) {
            Rational coef = aug[i][r + j];
            if (coef == 0) continue;
            for (const auto& [row, v] : lifted[j]) {
                acc[row] += coef * v;
                acc[row].canonicalize();
            }
        }
        SparseQVec x;
        for (const auto& [row, v] : acc)
            if (v != 0) x.push_back({row, v});
        seed.chains.push_back(hb->chain_of(x));
    }
    return seed;
}

}  // namespace

std::shared_ptr<const WheelSeed> wheel_seed(Engine& eng, int m) {
    return eng.wheel_seeds().get(m, [&]() { return make_seed(eng, m); });
}

Chain z_prime_wheel(Engine& eng, int i1, int i2, int i3) {
    if (!(i1 < i2 && i2 < i3))
        throw std::invalid_argument("wheel labels must be strictly increasing");
    auto seed = wheel_seed(eng, 1);
    return inject(seed->chains[0], OrderInjection::into({1, 2, 3}, {i1, i2, i3}));
}

std::vector<Chain> build_A_prime(Engine& eng, int n, int m) {
    if (m < 1 || m > n - 2)
        throw std::invalid_argument("family index out of range");
    auto seed = wheel_seed(eng, m);
    int d = m + 2;
    std::vector<int> source(d);
    std::iota(source.begin(), source.end(), 1);

    std::vector<Chain> out;
    std::vector<int> pick(d);
    std::iota(pick.begin(), pick.end(), 1);  // first d-subset of 1..n
    while (true) {
        OrderInjection inj = OrderInjection::into(source, pick);
        std::vector<int> trailing;
        for (int x = n; x >= 1; --x)
            if (!std::binary_search(pick.begin(), pick.end(), x))
                trailing.push_back(x);
        for (const Chain& s : seed->chains) {
            Chain c = inject(s, inj);
            for (int t : trailing) c = concat(c, z_point(t));
            out.push_back(std::move(c));
        }
        // next d-subset in lexicographic order
        int i = d - 1;
        while (i >= 0 && pick[i] == n - (d - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

namespace {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

std::pair<ClassFunction, bool> span_character(Engine& eng, int n,
                                              const HomologyBasis& hb,
                                              const std::vector<Chain>& chains) {
    RationalSpan span;
    for (const Chain& c : chains)
        if (!span.add(hb.coordinates(c)))
            throw std::logic_error("family chains are not independent");
    std::vector<Rational> vals;
    for (const auto& mu : partition_list(n)) {
        auto sigma = canonical_rep(mu);
        Rational trace = 0;
        for (size_t j = 0; j < chains.size(); ++j) {
            auto coords = span.solve(hb.coordinates(relabel(chains[j], sigma)));
            if (!coords)
                return {trivial_character(n), false};  // span not stable
            for (const auto& [idx, v] : *coords)
                if (idx == static_cast<int>(j)) trace += v;
        }
        trace.canonicalize();
        vals.push_back(trace);
    }
    return {ClassFunction(n, std::move(vals)), true};
}

namespace {

ClassFunction predicted_B_character(int n) {
    ClassFunction total{n, std::vector<Rational>(partition_list(n).size(), 0)};
    for (int c1 = 0; c1 <= n - 2; ++c1) {
        int c2 = n - 2 - c1;
        total += induced_character({trivial_character(2), trivial_character(c1),
                                    trivial_character(c2)});
    }
    return total;
}

ClassFunction predicted_A_character(int n, int m) {
    return induced_character(
        {ext_std_class_function(m + 2, 2), trivial_character(n - m - 2)});
}

}  // namespace

bool H1Verification::ok() const {
    if (!independent || !spans) return false;
    for (const auto& f : families)
        if (!f.stable || !f.character_ok || f.count != f.expected) return false;
    return true;
}

H1Verification verify_h1_basis(Engine& eng, int n) {
    if (n < 2) throw std::invalid_argument("need at least two labels");
    H1Verification rep;
    rep.n = n;
    rep.betti = eng.betti(n, Width::bounded(2), 1);
    auto hb = eng.critical_basis(n, 1);

    std::vector<Chain> bchains;
    for (int m = 0; m <= n - 2; ++m)
        for (const Symbol& s : enumerate_B(n, m))
            bchains.push_back(critical_cycle(s));

    FamilyCheck bcheck;
    bcheck.m = -1;
    bcheck.count = static_cast<long>(bchains.size());
    bcheck.expected = binom(n, 2) * (1L << (n - 2));
    auto [bchar, bstable] = span_character(eng, n, *hb, bchains);
    bcheck.stable = bstable;
    bcheck.character_ok = bstable && bchar == predicted_B_character(n);
    rep.families.push_back(bcheck);

    RationalSpan joint;
    for (const Chain& c : bchains) {
        if (!joint.add(hb->coordinates(c))) {
            rep.independent = false;
            return rep;
        }
    }

    for (int m = 1; m <= n - 2; ++m) {
        std::vector<Chain> achains = build_A_prime(eng, n, m);
        FamilyCheck ac;
        ac.m = m;
        ac.count = static_cast<long>(achains.size());
        ac.expected = binom(n, m + 2) * binom(m + 1, 2);
        auto [achar, astable] = span_character(eng, n, *hb, achains);
        ac.stable = astable;
        ac.character_ok = astable && achar == predicted_A_character(n, m);
        rep.families.push_back(ac);
        for (const Chain& c : achains) {
            if (!joint.add(hb->coordinates(c))) {
                rep.independent = false;
                return rep;
            }
        }
    }

    rep.total = joint.dim();
    rep.independent = true;
    rep.spans = rep.total == rep.betti;
    return rep;
}

LeadingValueReport verify_leading_value_props(Engine& eng, int n, int m,
                                              unsigned rng_seed) {
    LeadingValueReport rep;
    rep.n = n;
    rep.m = m;
    auto hb = eng.critical_basis(n, 1);

    // basis of all the new classes, A' chains of grade 2m listed first
    std::vector<Chain> aprime = build_A_prime(eng, n, m);
    size_t agrade = aprime.size();
    std::vector<Chain> rest;
    for (int mm = 1; mm <= n - 2; ++mm) {
        if (mm == m) continue;
        for (Chain& c : build_A_prime(eng, n, mm)) rest.push_back(std::move(c));
    }
    for (int mm = 0; mm <= n - 2; ++mm)
        for (const Symbol& s : enumerate_B(n, mm))
            rest.push_back(critical_cycle(s));

    RationalSpan span;
    for (const Chain& c : aprime) span.add(hb->coordinates(c));
    for (const Chain& c : rest) span.add(hb->coordinates(c));
    if (span.dim() != hb->dim())
        throw std::logic_error("replacement basis does not span");

    rep.remainders_below = true;
    for (const Symbol& e : enumerate_A(n, m)) {
        ++rep.cells_checked;
        auto coords = span.solve(hb->coordinates(critical_cycle(e)));
        if (!coords) throw std::logic_error("basis solve failed");
        // remainder: everything outside the grade-2m family
        std::map<int32_t, Rational> acc;
        for (const auto& [idx, v] : *coords) {
            if (idx < static_cast<int32_t>(agrade)) continue;
            const Chain& c = rest[idx - agrade];
            for (const auto& [cell, coef] : hb->coordinates(c))
                acc[cell] += v * coef;
        }
        std::optional<int> L;
        for (auto& [cell, coef] : acc) {
            coef.canonicalize();
            if (coef == 0) continue;
            int l = leading_value((*eng.critical_cells(n, 1))[cell]);
            if (!L || l > *L) L = l;
        }
        if (L && *L >= 2 * m) rep.remainders_below = false;
    }

    std::mt19937 rng(rng_seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    rep.combos_at_grade = true;
    for (int trial = 0; trial < 20; ++trial) {
        Chain combo;
        bool nontrivial = false;
        for (const Chain& c : aprime) {
            int a = coef(rng);
            if (a == 0) continue;
            combo += c.scaled(Rational(a));
            nontrivial = true;
        }
        if (!nontrivial) continue;
        ++rep.combos_checked;
        auto L = leading_value(eng, combo);
        if (!L || *L != 2 * m) rep.combos_at_grade = false;
    }
    return rep;
}

}  // namespace striphom
