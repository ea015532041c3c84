#include "striphom/matrix.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace striphom {

ColumnEchelon column_echelon(const SparseIntMatrix& m) {
    ColumnEchelon ech;
    ech.rows = m.rows;
    ech.pivot_of_low.reserve(1024);

    // Dense rational scratch for the column being reduced, plus a lazy
    // max-heap of candidate rows (duplicates allowed, stale entries skipped).
    std::vector<mpq_class> val((size_t)m.rows);
    std::vector<char> marked((size_t)m.rows, 0);
    std::vector<int32_t> touched;
    std::priority_queue<int32_t> heap;

    auto put = [&](int32_t r) {
        if (!marked[r]) {
            marked[r] = 1;
            touched.push_back(r);
        }
        heap.push(r);
    };

    for (const auto& column : m.col) {
        if (column.empty()) continue;
        for (const auto& [r, v] : column) {
            val[r] += v;
            put(r);
        }
        int32_t low = -1;
        while (!heap.empty()) {
            int32_t r = heap.top();
            heap.pop();
            if (val[r] == 0) continue;
            auto it = ech.pivot_of_low.find(r);
            if (it == ech.pivot_of_low.end()) {
                low = r;
                break;
            }
            const SparseIntCol& piv = ech.col[it->second];
            mpq_class coef = val[r] / mpq_class(piv.back().second);
            for (const auto& [pr, pv] : piv) {
                val[pr] -= coef * pv;
                if (pr != r) put(pr);
            }
            // val[r] is now exactly zero.
        }
        if (low >= 0) {
            // New pivot: clear denominators, strip content, make low > 0.
            std::vector<int32_t> rows_here;
            for (int32_t r : touched)
                if (val[r] != 0) rows_here.push_back(r);
            std::sort(rows_here.begin(), rows_here.end());
            BigInt denom_lcm = 1;
            for (int32_t r : rows_here)
                mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
                        val[r].get_den().get_mpz_t());
            SparseIntCol out;
            out.reserve(rows_here.size());
            BigInt content = 0;
            for (int32_t r : rows_here) {
                BigInt num = val[r].get_num() * (denom_lcm / val[r].get_den());
                mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
                out.emplace_back(r, std::move(num));
            }
            bool flip = out.back().second < 0;
            for (auto& [r, v] : out) {
                v /= content;
                if (flip) v = -v;
            }
            ech.pivot_of_low.emplace(low, (int32_t)ech.col.size());
            ech.col.push_back(std::move(out));
        }
        for (int32_t r : touched) {
            val[r] = 0;
            marked[r] = 0;
        }
        touched.clear();
        while (!heap.empty()) heap.pop();
    }
    return ech;
}

namespace {

// Dense Smith reduction for whatever survives the sparse unit-pivot phase.
// Quadratic-ish and entry-heavy, but the residual is tiny in practice.
std::vector<BigInt> dense_smith(std::vector<std::vector<BigInt>> d) {
    std::vector<BigInt> out;
    size_t nr = d.size(), nc = nr ? d[0].size() : 0;
    size_t t = 0;
    while (t < nr && t < nc) {
        // Find the smallest nonzero entry in the remaining block.
        size_t br = nr, bc = nc;
        for (size_t i = t; i < nr; ++i)
            for (size_t j = t; j < nc; ++j)
                if (d[i][j] != 0 &&
                    (br == nr ||
                     mpz_cmpabs(d[i][j].get_mpz_t(), d[br][bc].get_mpz_t()) < 0)) {
                    br = i;
                    bc = j;
                }
        if (br == nr) break;
        std::swap(d[t], d[br]);
        for (size_t i = t; i < nr; ++i) std::swap(d[i][t], d[i][bc]);

        bool again = true;
        while (again) {
            again = false;
            for (size_t i = t + 1; i < nr; ++i) {
                if (d[i][t] == 0) continue;
                BigInt q = d[i][t] / d[t][t];
                if (q != 0)
                    for (size_t j = t; j < nc; ++j) d[i][j] -= q * d[t][j];
                if (d[i][t] != 0) {  // remainder smaller than pivot: promote it
                    std::swap(d[t], d[i]);
                    again = true;
                }
            }
            for (size_t j = t + 1; j < nc; ++j) {
                if (d[t][j] == 0) continue;
                BigInt q = d[t][j] / d[t][t];
                if (q != 0)
                    for (size_t i = t; i < nr; ++i) d[i][j] -= q * d[i][t];
                if (d[t][j] != 0) {
                    for (size_t i = t; i < nr; ++i) std::swap(d[i][t], d[i][j]);
                    again = true;
                }
            }
            if (!again) {
                // Pivot must divide the rest of the block; if not, fold the
                // offending row in and keep reducing.
                for (size_t i = t + 1; i < nr && !again; ++i)
                    for (size_t j = t + 1; j < nc && !again; ++j)
                        if (d[i][j] % d[t][t] != 0) {
                            for (size_t jj = t; jj < nc; ++jj) d[t][jj] += d[i][jj];
                            again = true;
                        }
            }
        }
        if (d[t][t] < 0) d[t][t] = -d[t][t];
        out.push_back(d[t][t]);
        ++t;
    }
    return out;
}

}  // namespace

std::vector<BigInt> smith_invariants(const SparseIntMatrix& m) {
    // Column- and row-indexed views of the active submatrix.
    std::vector<std::map<int32_t, BigInt>> cols((size_t)m.cols);
    std::vector<std::set<int32_t>> rows((size_t)m.rows);
    for (int32_t c = 0; c < (int32_t)m.cols; ++c)
        for (const auto& [r, v] : m.col[c]) {
            cols[c].emplace(r, v);
            rows[r].insert(c);
        }
    std::vector<char> col_live((size_t)m.cols, 1), row_live((size_t)m.rows, 1);
    std::vector<int32_t> live_cols;
    for (int32_t c = 0; c < (int32_t)m.cols; ++c)
        if (!cols[c].empty()) live_cols.push_back(c);

    int64_t unit_pivots = 0;
    for (;;) {
        // Best unit pivot by Markowitz fill estimate.
        int32_t pr = -1, pc = -1;
        int64_t best = -1;
        for (int32_t c : live_cols) {
            if (!col_live[c] || cols[c].empty()) continue;
            for (const auto& [r, v] : cols[c]) {
                if (v != 1 && v != -1) continue;
                int64_t cost = (int64_t)(rows[r].size() - 1) * (int64_t)(cols[c].size() - 1);
                if (best < 0 || cost < best) {
                    best = cost;
                    pr = r;
                    pc = c;
                }
                if (best == 0) break;
            }
            if (best == 0) break;
        }
        if (pr < 0) break;

        int pv = (cols[pc].at(pr) > 0) ? 1 : -1;
        SparseIntCol piv(cols[pc].begin(), cols[pc].end());
        std::vector<int32_t> in_row(rows[pr].begin(), rows[pr].end());
        for (int32_t c2 : in_row) {
            if (c2 == pc) continue;
            BigInt factor = cols[c2].at(pr) * pv;
            for (const auto& [r2, v2] : piv) {
                if (r2 == pr) continue;
                auto it = cols[c2].find(r2);
                if (it == cols[c2].end()) {
                    BigInt nv = -factor * v2;
                    if (nv != 0) {
                        cols[c2].emplace(r2, std::move(nv));
                        rows[r2].insert(c2);
                    }
                } else {
                    it->second -= factor * v2;
                    if (it->second == 0) {
                        cols[c2].erase(it);
                        rows[r2].erase(c2);
                    }
                }
            }
            cols[c2].erase(pr);
        }
        for (const auto& [r2, v2] : piv) rows[r2].erase(pc);
        cols[pc].clear();
        rows[pr].clear();
        col_live[pc] = 0;
        row_live[pr] = 0;
        ++unit_pivots;

        live_cols.erase(std::remove_if(live_cols.begin(), live_cols.end(),
                                       [&](int32_t c) { return !col_live[c] || cols[c].empty(); }),
                        live_cols.end());
    }

    std::vector<BigInt> factors((size_t)unit_pivots, BigInt(1));

    // Whatever is left has no unit entries; finish densely.
    std::map<int32_t, size_t> rmap;
    std::vector<std::pair<int32_t, int32_t>> residual_entries;
    for (int32_t c : live_cols)
        for (const auto& [r, v] : cols[c]) {
            (void)v;
            if (!rmap.count(r)) rmap.emplace(r, rmap.size());
            residual_entries.emplace_back(r, c);
        }
    if (!residual_entries.empty()) {
        std::map<int32_t, size_t> cmap;
        for (int32_t c : live_cols)
            if (!cols[c].empty()) cmap.emplace(c, cmap.size());
        std::vector<std::vector<BigInt>> dense(rmap.size(),
                                               std::vector<BigInt>(cmap.size(), BigInt(0)));
        for (int32_t c : live_cols)
            for (const auto& [r, v] : cols[c]) dense[rmap[r]][cmap[c]] = v;
        for (BigInt& f : dense_smith(std::move(dense))) factors.push_back(std::move(f));
    }
    return factors;
}

namespace {

SparseQVec to_sparse(const std::map<int32_t, Rational>& m) {
    SparseQVec out;
    for (const auto& [i, v] : m)
        if (v != 0) out.push_back({i, v});
    return out;
}

}  // namespace

std::optional<SparseQVec> RationalSpan::reduce(const SparseQVec& v,
                                               SparseQVec* rem) const {
    std::map<int32_t, Rational> work(v.begin(), v.end());
    std::map<int32_t, Rational> expr;
    while (!work.empty()) {
        auto top = std::prev(work.end());
        if (top->second == 0) {
            work.erase(top);
            continue;
        }
        auto pv = pivot_of_low_.find(top->first);
        if (pv == pivot_of_low_.end()) break;  // fresh low, outside the span
        const Col& col = cols_[pv->second];
        Rational coef = top->second / col.v.back().second;
        for (const auto& [r, val] : col.v) {
            work[r] -= coef * val;
            work[r].canonicalize();
            if (work[r] == 0) work.erase(r);
        }
        for (const auto& [j, val] : col.expr) {
            expr[j] += coef * val;
            expr[j].canonicalize();
        }
    }
    if (rem) *rem = to_sparse(work);
    if (!to_sparse(work).empty()) return std::nullopt;
    return to_sparse(expr);
}

bool RationalSpan::add(const SparseQVec& v) {
    std::map<int32_t, Rational> work(v.begin(), v.end());
    std::map<int32_t, Rational> expr;
    int me = (int)kept_.size();
    expr[me] = 1;
    while (!work.empty()) {
        auto top = std::prev(work.end());
        if (top->second == 0) {
            work.erase(top);
            continue;
        }
        auto pv = pivot_of_low_.find(top->first);
        if (pv == pivot_of_low_.end()) {
            Col col;
            col.v = to_sparse(work);
            col.expr = to_sparse(expr);
            pivot_of_low_[col.v.back().first] = (int)cols_.size();
            cols_.push_back(std::move(col));
            kept_.push_back(v);
            return true;
        }
        const Col& col = cols_[pv->second];
        Rational coef = top->second / col.v.back().second;
        for (const auto& [r, val] : col.v) {
            work[r] -= coef * val;
            work[r].canonicalize();
            if (work[r] == 0) work.erase(r);
        }
        for (const auto& [j, val] : col.expr) {
            expr[j] -= coef * val;
            expr[j].canonicalize();
        }
    }
    return false;
}

std::optional<SparseQVec> RationalSpan::solve(const SparseQVec& v) const {
    return reduce(v, nullptr);
}

}  // namespace striphom
