#include "striphom/symrep.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace striphom {

namespace {

void gen_partitions(int left, int maxpart, Partition& cur,
                    std::vector<Partition>& out) {
    if (left == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(left - p, p, cur, out);
        cur.pop_back();
    }
}

// multiplicity table {part value -> count}, descending values
std::vector<std::pair<int, int>> part_counts(const Partition& mu) {
    std::vector<std::pair<int, int>> out;
    for (int v : mu) {
        if (!out.empty() && out.back().first == v)
            ++out.back().second;
        else
            out.push_back({v, 1});
    }
    return out;
}

BigInt multinomial(int total, const std::vector<int>& parts) {
    BigInt r = factorial(total);
    for (int p : parts) r /= factorial(p);
    return r;
}

}  // namespace

const std::vector<Partition>& partition_list(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<Partition> out;
        Partition cur;
        gen_partitions(n, n == 0 ? 1 : n, cur, out);
        std::sort(out.begin(), out.end());
        it = cache.emplace(n, std::move(out)).first;
    }
    return it->second;
}

int partition_index(int n, const Partition& mu) {
    const auto& list = partition_list(n);
    auto it = std::lower_bound(list.begin(), list.end(), mu);
    if (it == list.end() || *it != mu)
        throw std::invalid_argument("not a partition of the right size");
    return static_cast<int>(it - list.begin());
}

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt z_order(const Partition& mu) {
    BigInt z = 1;
    for (const auto& [v, c] : part_counts(mu)) {
        z *= factorial(c);
        for (int i = 0; i < c; ++i) z *= v;
    }
    return z;
}

BigInt class_size(const Partition& mu) {
    int n = std::accumulate(mu.begin(), mu.end(), 0);
    return factorial(n) / z_order(mu);
}

std::map<int, int> canonical_rep(const Partition& mu) {
    std::map<int, int> sigma;
    int next = 1;
    for (int a : mu) {
        for (int i = next; i < next + a - 1; ++i) sigma[i] = i + 1;
        sigma[next + a - 1] = next;
        next += a;
    }
    return sigma;
}

Partition power_cycle_type(const Partition& mu, int p) {
    Partition out;
    for (int a : mu) {
        int g = std::gcd(a, p);
        for (int i = 0; i < g; ++i) out.push_back(a / g);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

namespace {

// rim-hook recursion on beta numbers; mu is consumed front to back
long mn_rec(std::vector<int> betas, const Partition& mu, size_t idx,
            std::map<std::pair<std::vector<int>, size_t>, long>& memo) {
    if (idx == mu.size()) return 1;
    auto key = std::make_pair(betas, idx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int m = mu[idx];
    long total = 0;
    for (size_t i = 0; i < betas.size(); ++i) {
        int target = betas[i] - m;
        if (target < 0) continue;
        if (std::binary_search(betas.begin(), betas.end(), target)) continue;
        int height = 0;
        for (int b : betas)
            if (b > target && b < betas[i]) ++height;
        std::vector<int> next = betas;
        next[i] = target;
        std::sort(next.begin(), next.end());
        long sub = mn_rec(std::move(next), mu, idx + 1, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

}  // namespace

long irreducible_character(const Partition& lambda, const Partition& mu) {
    int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    if (n != std::accumulate(mu.begin(), mu.end(), 0))
        throw std::invalid_argument("character of mismatched partitions");
    std::vector<int> betas;
    int rows = static_cast<int>(lambda.size());
    for (int i = 0; i < rows; ++i) betas.push_back(lambda[i] + (rows - 1 - i));
    std::sort(betas.begin(), betas.end());
    std::map<std::pair<std::vector<int>, size_t>, long> memo;
    return mn_rec(std::move(betas), mu, 0, memo);
}

BigInt irreducible_dim(const Partition& lambda) {
    int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    std::vector<int> conj(lambda.empty() ? 0 : lambda[0], 0);
    for (int r = 0; r < static_cast<int>(lambda.size()); ++r)
        for (int c = 0; c < lambda[r]; ++c) ++conj[c];
    BigInt dim = factorial(n);
    for (int r = 0; r < static_cast<int>(lambda.size()); ++r)
        for (int c = 0; c < lambda[r]; ++c)
            dim /= BigInt(lambda[r] - c + conj[c] - r - 1);
    return dim;
}

ClassFunction::ClassFunction(int n_, std::vector<Rational> v)
    : n(n_), values(std::move(v)) {
    if (values.size() != partition_list(n).size())
        throw std::invalid_argument("class function has wrong value count");
}

const Rational& ClassFunction::at(const Partition& mu) const {
    return values[partition_index(n, mu)];
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    if (n != o.n) throw std::invalid_argument("class function degree mismatch");
    for (size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
    if (n != o.n) throw std::invalid_argument("class function degree mismatch");
    for (size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
    return *this;
}

ClassFunction ClassFunction::scaled(const Rational& c) const {
    ClassFunction out = *this;
    for (auto& v : out.values) {
        v *= c;
        v.canonicalize();
    }
    return out;
}

ClassFunction trivial_character(int n) {
    return {n, std::vector<Rational>(partition_list(n).size(), 1)};
}

ClassFunction sign_character(int n) {
    std::vector<Rational> vals;
    for (const auto& mu : partition_list(n)) {
        int transpositions = 0;
        for (int a : mu) transpositions += a - 1;
        vals.push_back(transpositions % 2 == 0 ? 1 : -1);
    }
    return {n, std::move(vals)};
}

ClassFunction irreducible_class_function(int n, const Partition& lambda) {
    std::vector<Rational> vals;
    for (const auto& mu : partition_list(n))
        vals.push_back(irreducible_character(lambda, mu));
    return {n, std::move(vals)};
}

ClassFunction ext_std_class_function(int n, int r) {
    if (r < 0 || r > 3)
        throw std::invalid_argument("exterior power order out of range");
    auto refl = [](const Partition& mu, int p) {
        Partition nu = power_cycle_type(mu, p);
        long fixed = static_cast<long>(std::count(nu.begin(), nu.end(), 1));
        return Rational(fixed - 1);
    };
    std::vector<Rational> vals;
    for (const auto& mu : partition_list(n)) {
        Rational c1 = refl(mu, 1), v;
        switch (r) {
            case 0:
                v = 1;
                break;
            case 1:
                v = c1;
                break;
            case 2:
                v = (c1 * c1 - refl(mu, 2)) / 2;
                break;
            case 3: {
                Rational c2 = refl(mu, 2), c3 = refl(mu, 3);
                v = (c1 * c1 * c1 - c1 * c2 * 3 + c3 * 2) / 6;
                break;
            }
        }
        v.canonicalize();
        vals.push_back(v);
    }
    return {n, std::move(vals)};
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.n != b.n) throw std::invalid_argument("inner product degree mismatch");
    Rational total = 0;
    const auto& list = partition_list(a.n);
    for (size_t i = 0; i < list.size(); ++i)
        total += Rational(class_size(list[i])) * a.values[i] * b.values[i];
    total /= Rational(factorial(a.n));
    total.canonicalize();
    return total;
}

std::map<Partition, long> decompose(const ClassFunction& chi) {
    std::map<Partition, long> out;
    for (const auto& lambda : partition_list(chi.n)) {
        Rational c = inner_product(chi, irreducible_class_function(chi.n, lambda));
        if (c.get_den() != 1 || c < 0)
            throw std::invalid_argument(
                "class function is not a genuine character");
        long m = static_cast<long>(c.get_num().get_si());
        if (m != 0) out[lambda] = m;
    }
    return out;
}

namespace {

// distribute the multiset of parts of mu over the factors, tracking the
// multinomial coefficient from identical parts
void distribute(const std::vector<std::pair<int, int>>& groups, size_t gi,
                const std::vector<ClassFunction>& factors,
                std::vector<int>& remaining,
                std::vector<Partition>& assigned, const BigInt& coeff,
                Rational& total) {
    if (gi == groups.size()) {
        Rational prod = coeff;
        for (size_t j = 0; j < factors.size(); ++j) {
            if (remaining[j] != 0) return;
            Partition pj = assigned[j];
            std::sort(pj.rbegin(), pj.rend());
            prod *= factors[j].at(pj);
            if (prod == 0) return;
        }
        total += prod;
        return;
    }
    auto [v, cnt] = groups[gi];
    size_t r = factors.size();
    // weak compositions of cnt over the r factors, pruned by capacity
    std::vector<int> take(r, 0);
    std::function<void(size_t, int)> rec = [&](size_t j, int left) {
        if (j + 1 == r) {
            if (left * v > remaining[j]) return;
            take[j] = left;
            BigInt c2 = coeff * multinomial(cnt, take);
            for (size_t t = 0; t < r; ++t) {
                remaining[t] -= take[t] * v;
                for (int q = 0; q < take[t]; ++q) assigned[t].push_back(v);
            }
            distribute(groups, gi + 1, factors, remaining, assigned, c2, total);
            for (size_t t = 0; t < r; ++t) {
                remaining[t] += take[t] * v;
                for (int q = 0; q < take[t]; ++q) assigned[t].pop_back();
            }
            return;
        }
        for (int c = 0; c * v <= remaining[j] && c <= left; ++c) {
            take[j] = c;
            rec(j + 1, left - c);
        }
    };
    rec(0, cnt);
}

}  // namespace

ClassFunction induced_character(const std::vector<ClassFunction>& raw) {
    std::vector<ClassFunction> factors;
    int n = 0;
    for (const auto& f : raw) {
        if (f.n == 0) continue;  // empty tensor factors drop out
        factors.push_back(f);
        n += f.n;
    }
    if (factors.empty()) return trivial_character(0);

    std::vector<Rational> vals;
    for (const auto& mu : partition_list(n)) {
        auto groups = part_counts(mu);
        std::vector<int> remaining;
        for (const auto& f : factors) remaining.push_back(f.n);
        std::vector<Partition> assigned(factors.size());
        Rational total = 0;
        distribute(groups, 0, factors, remaining, assigned, 1, total);
        total.canonicalize();
        vals.push_back(total);
    }
    return {n, std::move(vals)};
}

ClassFunction fixed_cell_character(Engine& eng, int n, Width w, int k) {
    auto cb = eng.cell_basis(n, w, k);
    std::vector<Rational> vals;
    for (const auto& mu : partition_list(n)) {
        auto sigma = canonical_rep(mu);
        long fixed = 0;
        for (const auto& cell : cb->cells)
            if (relabel(cell, sigma) == cell) ++fixed;
        vals.push_back(fixed);
    }
    return {n, std::move(vals)};
}

ClassFunction homology_character_from_basis(Engine& eng, int n, int k) {
    auto hb = eng.critical_basis(n, k);
    std::vector<Rational> vals;
    for (const auto& mu : partition_list(n)) {
        auto sigma = canonical_rep(mu);
        Rational trace = 0;
        for (int i = 0; i < hb->dim(); ++i) {
            SparseQVec coords = hb->coordinates(relabel(hb->basis()[i], sigma));
            for (const auto& [idx, c] : coords)
                if (idx == i) trace += c;
        }
        trace.canonicalize();
        vals.push_back(trace);
    }
    return {n, std::move(vals)};
}

ClassFunction homology_character_from_counts(Engine& eng, int n, int k) {
    Width w2 = Width::bounded(2);
    int kmax = eng.max_dim(n, w2);
    if (k < 1 || k > kmax)
        throw std::invalid_argument("trace identity needs 1 <= k <= top degree");
    if (eng.betti(n, w2, 0) != 1)
        throw std::logic_error("width-2 complex is expected to be connected");

    // forward: t_j = trace on the degree-j boundary space, from below
    ClassFunction t_below = fixed_cell_character(eng, n, w2, 0) -
                            trivial_character(n);
    for (int j = 1; j <= k - 1; ++j)
        t_below = fixed_cell_character(eng, n, w2, j) - t_below -
                  homology_character(eng, n, j);

    // backward: from the empty boundary space above the top degree
    ClassFunction t_here{n, std::vector<Rational>(partition_list(n).size(), 0)};
    for (int j = kmax - 1; j >= k; --j)
        t_here = fixed_cell_character(eng, n, w2, j + 1) - t_here -
                 homology_character(eng, n, j + 1);

    return fixed_cell_character(eng, n, w2, k) - t_below - t_here;
}

ClassFunction homology_character(Engine& eng, int n, int k) {
    auto ptr = eng.characters().get({n, k}, [&]() -> ClassFunction {
        Width w2 = Width::bounded(2);
        int kmax = eng.max_dim(n, w2);
        if (k < 0 || k > kmax)
            return {n, std::vector<Rational>(partition_list(n).size(), 0)};
        if (k == 0) {
            if (eng.betti(n, w2, 0) != 1)
                throw std::logic_error("expected a connected complex");
            return trivial_character(n);
        }
        // Small slices and the two extreme degrees go straight through the
        // critical basis; in between (only n = 7, k = 2 at desk scale) the
        // fixed-cell route is far cheaper than 9212 coordinate queries per
        // conjugacy class.
        if (n <= 6 || k == 1 || k == kmax)
            return homology_character_from_basis(eng, n, k);
        return homology_character_from_counts(eng, n, k);
    });
    return *ptr;
}

long unordered_rank(Engine& eng, int n, int k) {
    Rational m = inner_product(homology_character(eng, n, k),
                               trivial_character(n));
    if (m.get_den() != 1)
        throw std::logic_error("trivial multiplicity must be an integer");
    return static_cast<long>(m.get_num().get_si());
}

long trivial_multiplicity_formula(int n, int k) {
    if (k < 0 || n - k < k) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - k - i) / (i + 1);
    return static_cast<long>(r.get_si());
}

long alternating_multiplicity_formula(int n, int k) {
    int d = n - 3 * k;
    return (d == 0 || d == 1) ? 1 : 0;
}

PermutationStream::PermutationStream(int n) : arr_(n), dir_(n, -1) {
    for (int i = 0; i < n; ++i) arr_[i] = i + 1;
}

Partition PermutationStream::cycle_type() const {
    int n = static_cast<int>(arr_.size());
    std::vector<char> seen(n, 0);
    Partition mu;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = arr_[j] - 1;
            ++len;
        }
        mu.push_back(len);
    }
    std::sort(mu.rbegin(), mu.rend());
    return mu;
}

bool PermutationStream::advance(int* swapped_domain_point) {
    int n = static_cast<int>(arr_.size());
    int best = -1, bestval = 0;
    for (int i = 0; i < n; ++i) {
        int j = i + dir_[i];
        if (j < 0 || j >= n) continue;
        if (arr_[i] > arr_[j] && arr_[i] > bestval) {
            best = i;
            bestval = arr_[i];
        }
    }
    if (best < 0) return false;
    int other = best + dir_[best];
    std::swap(arr_[best], arr_[other]);
    std::swap(dir_[best], dir_[other]);
    for (int i = 0; i < n; ++i)
        if (arr_[i] > bestval) dir_[i] = -dir_[i];
    if (swapped_domain_point)
        *swapped_domain_point = std::min(best, other) + 1;
    return true;
}

}  // namespace striphom
