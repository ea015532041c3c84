#include "striphom/fimod.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace striphom {

int BarrierTuple::D() const {
    int d = 0;
    for (const auto& f : factors) d += f.size();
    return d;
}

int BarrierTuple::S() const {
    int s = 0;
    for (const auto& f : factors) s += f.kind == Factor::SIMPLE;
    return s;
}

std::vector<int> BarrierTuple::sizes() const {
    std::vector<int> out;
    for (const auto& f : factors) out.push_back(f.size());
    return out;
}

std::string BarrierTuple::str() const {
    std::string out = "(";
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(factors[i].size());
    }
    return out + ")";
}

BigInt count_fid_homs(int m, int n, int d, CountMode mode) {
    if (m < 0 || m > n || d < 1) throw std::invalid_argument("bad parameters");
    if (mode == CountMode::formula) {
        BigInt r = 1;
        for (int i = n - m + 1; i <= n; ++i) r *= i;  // n!/(n-m)!
        for (int i = 0; i < n - m; ++i) r *= d;
        return r;
    }
    // enumerate injections [m] -> [n] as ordered m-tuples of distinct values,
    // then colorings of the complement
    BigInt total = 0;
    std::vector<int> image;
    std::vector<bool> used(n + 1, false);
    std::function<void()> rec = [&]() {
        if ((int)image.size() == m) {
            BigInt colorings = 1;
            for (int i = 0; i < n - m; ++i) colorings *= d;
            total += colorings;
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            image.push_back(v);
            rec();
            image.pop_back();
            used[v] = false;
        }
    };
    rec();
    return total;
}

namespace {

BigInt big_binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

}  // namespace

BigInt free_module_dim(int m, int n, int d, const BigInt& dimU) {
    if (m < 0 || d < 1 || dimU < 0) throw std::invalid_argument("bad parameters");
    if (m > n) return 0;
    BigInt r = dimU * big_binom(n, m);
    for (int i = 0; i < n - m; ++i) r *= d;
    return r;
}

std::vector<BarrierTuple> enumerate_barrier_tuples(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("bad parameters");
    std::vector<BarrierTuple> out;
    std::vector<int> sizes;
    std::function<void(int)> rec = [&](int budget) {
        if ((int)sizes.size() == k) {
            BarrierTuple t;
            for (int s : sizes)
                t.factors.push_back(s == 2 ? Factor{Factor::SIMPLE, 0}
                                           : Factor{Factor::WHEEL, s - 2});
            out.push_back(std::move(t));
            return;
        }
        int remaining = k - (int)sizes.size() - 1;
        for (int s = 2; s + 2 * remaining <= budget; ++s) {
            sizes.push_back(s);
            rec(budget - s);
            sizes.pop_back();
        }
    };
    rec(n);
    return out;
}

ClassFunction generator_character(const BarrierTuple& t) {
    std::vector<ClassFunction> factors;
    for (const auto& f : t.factors)
        factors.push_back(f.kind == Factor::SIMPLE
                              ? trivial_character(2)
                              : ext_std_class_function(f.m + 2, 2));
    return induced_character(factors);
}

BigInt generator_dim(const BarrierTuple& t) {
    // multinomial over the factor sizes times the factor dimensions
    BigInt r = factorial(t.D());
    for (const auto& f : t.factors) {
        r /= factorial(f.size());
        r *= f.dim();
    }
    return r;
}

BigInt predicted_betti(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("bad parameters");
    if (k == 0) return 1;
    BigInt total = 0;
    for (const BarrierTuple& t : enumerate_barrier_tuples(n, k))
        total += free_module_dim(t.D(), n, t.S() + 1, generator_dim(t));
    return total;
}

ClassFunction predicted_character(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("bad parameters");
    if (k == 0) return trivial_character(n);
    ClassFunction total{n, std::vector<Rational>(partition_list(n).size(), 0)};
    for (const BarrierTuple& t : enumerate_barrier_tuples(n, k)) {
        std::vector<ClassFunction> factors;
        for (const auto& f : t.factors)
            factors.push_back(f.kind == Factor::SIMPLE
                                  ? trivial_character(2)
                                  : ext_std_class_function(f.m + 2, 2));
        int slots = t.S() + 1;
        int free_labels = n - t.D();
        // weak compositions of the free labels into the slots, lex order
        std::vector<int> comp(slots, 0);
        std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == slots - 1) {
                comp[pos] = left;
                auto with_slots = factors;
                for (int c : comp) with_slots.push_back(trivial_character(c));
                total += induced_character(with_slots);
                return;
            }
            for (int c = 0; c <= left; ++c) {
                comp[pos] = c;
                rec(pos + 1, left - c);
            }
        };
        rec(0, free_labels);
    }
    return total;
}

std::vector<int> tuple_signature(const BarrierTuple& t) {
    std::vector<int> out;
    for (const auto& f : t.factors) {
        // canonical generator cells: "1 2" for a simple barrier and the
        // lexicographically first wheel cell otherwise
        Symbol cell = f.kind == Factor::SIMPLE
                          ? parse_symbol("1 2")
                          : enumerate_A(f.m + 2, f.m).front();
        out.push_back(leading_value(cell));
    }
    return out;
}

namespace {

Chain append(Chain acc, const Chain& next) {
    return acc.is_zero() ? next : concat(acc, next);
}

}  // namespace

std::vector<Chain> barrier_slice_cycles(Engine& eng, const BarrierTuple& t, int n) {
    int D = t.D();
    int S = t.S();
    int k = t.k();
    if (k < 1) throw std::invalid_argument("empty tuple");
    if (D > n) throw std::invalid_argument("tuple needs more labels than available");

    std::vector<std::shared_ptr<const WheelSeed>> seeds(k);
    for (int i = 0; i < k; ++i)
        if (t.factors[i].kind == Factor::WHEEL)
            seeds[i] = wheel_seed(eng, t.factors[i].m);

    std::vector<Chain> out;

    std::vector<int> subset(D);
    std::iota(subset.begin(), subset.end(), 1);
    while (true) {
        std::vector<int> leftover;
        for (int x = 1; x <= n; ++x)
            if (!std::binary_search(subset.begin(), subset.end(), x))
                leftover.push_back(x);

        // ordered splits of the subset across the factors, lexicographic by
        // the mask of the first factor, then the second, and so on
        std::vector<std::vector<int>> parts(k);
        std::function<void(std::vector<int>, int)> split = [&](std::vector<int> pool,
                                                               int fi) {
            if (fi == k) {
                // one slice cycle per wheel basis choice per slot assignment
                std::vector<int> wheel_at;
                for (int i = 0; i < k; ++i)
                    if (t.factors[i].kind == Factor::WHEEL) wheel_at.push_back(i);
                std::vector<size_t> choice(wheel_at.size(), 0);
                while (true) {
                    std::vector<Chain> fchain(k);
                    for (int i = 0, wi = 0; i < k; ++i) {
                        if (t.factors[i].kind == Factor::SIMPLE) {
                            fchain[i] = z_pair(parts[i][0], parts[i][1]);
                        } else {
                            int w = t.factors[i].size();
                            std::vector<int> src(w);
                            std::iota(src.begin(), src.end(), 1);
                            fchain[i] = inject(seeds[i]->chains[choice[wi++]],
                                               OrderInjection::into(src, parts[i]));
                        }
                    }
                    // slot assignments of the leftover labels, lex over the
                    // ascending labels; each slot holds a decreasing run
                    std::vector<int> slot(leftover.size(), 0);
                    while (true) {
                        std::vector<std::vector<int>> runs(S + 1);
                        for (size_t j = 0; j < leftover.size(); ++j)
                            runs[slot[j]].push_back(leftover[j]);
                        Chain cyc;
                        int simple_seen = 0;
                        for (int i = 0; i < k; ++i) {
                            if (t.factors[i].kind == Factor::SIMPLE) {
                                auto& run = runs[simple_seen++];
                                for (auto it = run.rbegin(); it != run.rend(); ++it)
                                    cyc = append(std::move(cyc), z_point(*it));
                            }
                            cyc = append(std::move(cyc), fchain[i]);
                        }
                        auto& last = runs[S];
                        for (auto it = last.rbegin(); it != last.rend(); ++it)
                            cyc = append(std::move(cyc), z_point(*it));
                        out.push_back(std::move(cyc));

                        size_t j = 0;
                        while (j < slot.size() && slot[j] == S) slot[j++] = 0;
                        if (j == slot.size()) break;
                        ++slot[j];
                    }
                    size_t wi = 0;
                    while (wi < choice.size() &&
                           choice[wi] + 1 == seeds[wheel_at[wi]]->chains.size())
                        choice[wi++] = 0;
                    if (wi == choice.size()) break;
                    ++choice[wi];
                }
                return;
            }
            int s = t.factors[fi].size();
            std::vector<int> idx(s);
            std::iota(idx.begin(), idx.end(), 0);
            int p = (int)pool.size();
            while (true) {
                std::vector<int> mine, rest;
                for (int x = 0, y = 0; x < p; ++x) {
                    if (y < s && idx[y] == x) {
                        mine.push_back(pool[x]);
                        ++y;
                    } else {
                        rest.push_back(pool[x]);
                    }
                }
                parts[fi] = std::move(mine);
                split(std::move(rest), fi + 1);
                int i = s - 1;
                while (i >= 0 && idx[i] == p - (s - i)) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
            }
        };
        split(subset, 0);

        int i = D - 1;
        while (i >= 0 && subset[i] == n - (D - 1 - i)) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < D; ++j) subset[j] = subset[j - 1] + 1;
    }

    BigInt expected = free_module_dim(D, n, S + 1, generator_dim(t));
    if (BigInt((long)out.size()) != expected)
        throw std::logic_error("slice enumeration disagrees with the dimension formula");
    return out;
}

bool DirectSumReport::ok() const {
    if (!independent || !character_ok || total != betti) return false;
    for (const auto& tc : tuples)
        if (tc.count != tc.expected) return false;
    return true;
}

DirectSumReport verify_direct_sum(Engine& eng, int n, int k) {
    DirectSumReport rep;
    rep.n = n;
    rep.k = k;
    rep.betti = (long)eng.betti(n, Width::bounded(2), k);

    auto hb = eng.critical_basis(n, k);
    RationalSpan joint;
    long total = 0;
    rep.independent = true;
    for (const BarrierTuple& t : enumerate_barrier_tuples(n, k)) {
        std::vector<Chain> cycles = barrier_slice_cycles(eng, t, n);
        TupleCount tc;
        tc.sizes = t.sizes();
        tc.count = (long)cycles.size();
        tc.expected = (long)free_module_dim(t.D(), n, t.S() + 1, generator_dim(t)).get_si();
        rep.tuples.push_back(tc);
        total += tc.count;
        for (const Chain& c : cycles)
            if (!joint.add(hb->coordinates(c))) rep.independent = false;
    }
    rep.total = total;
    rep.character_ok = homology_character(eng, n, k) == predicted_character(n, k);
    return rep;
}

}  // namespace striphom
