#include "striphom/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace striphom {

CellBasis CellBasis::build(int n, Width w, int k) {
    CellBasis cb;
    cb.n = n;
    cb.w = w;
    cb.k = k;
    cb.cells = enumerate_cells(n, w, k);
    cb.index.reserve(cb.cells.size() * 2);
    for (int32_t i = 0; i < (int32_t)cb.cells.size(); ++i)
        cb.index.emplace(cb.cells[i].text(), i);
    return cb;
}

int32_t CellBasis::index_of(const Symbol& s) const {
    auto it = index.find(s.text());
    if (it == index.end())
        throw std::invalid_argument("not a cell of cell(" + std::to_string(n) + "," +
                                    w.str() + ") in dimension " + std::to_string(k) + ": " +
                                    s.text());
    return it->second;
}

SparseIntMatrix boundary_matrix(const CellBasis& domain, const CellBasis& codomain) {
    SparseIntMatrix m;
    m.rows = codomain.size();
    m.cols = domain.size();
    m.col.resize(m.cols);
    for (int32_t c = 0; c < (int32_t)m.cols; ++c) {
        Chain d = boundary(Chain::unit(domain.cells[c]));
        SparseIntCol& col = m.col[c];
        col.reserve(d.size());
        for (const auto& [sym, coeff] : d.terms()) {
            if (coeff.get_den() != 1)
                throw std::logic_error("boundary of a cell has integer coefficients");
            col.emplace_back(codomain.index_of(sym), BigInt(coeff.get_num()));
        }
        std::sort(col.begin(), col.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return m;
}

SparseIntMatrix boundary_matrix(int n, Width w, int k) {
    CellBasis dom = CellBasis::build(n, w, k);
    CellBasis cod = CellBasis::build(n, w, k - 1);
    return boundary_matrix(dom, cod);
}

SparseQVec to_vector(const Chain& c, const CellBasis& cb) {
    SparseQVec v;
    v.reserve(c.size());
    for (const auto& [sym, coeff] : c.terms()) v.emplace_back(cb.index_of(sym), coeff);
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

Chain from_vector(const SparseQVec& v, const CellBasis& cb) {
    Chain c;
    for (const auto& [i, coeff] : v) c.add(cb.cells.at(i), coeff);
    return c;
}

bool is_cycle(const Chain& c, Width w) {
    if (c.is_zero()) return true;
    for (const auto& [sym, coeff] : c.terms()) {
        (void)coeff;
        if (!w.admits(sym.max_block_size())) return false;
    }
    return boundary(c).is_zero();
}

HomologyBasis::HomologyBasis(std::shared_ptr<const CellBasis> cells,
                             std::shared_ptr<const ColumnEchelon> boundary_image,
                             std::vector<Chain> cycles, int64_t rank_dk)
    : cells_(std::move(cells)), bnd_(std::move(boundary_image)), basis_(std::move(cycles)) {
    pivot_of_low_.reserve(bnd_->pivot_of_low.size() + basis_.size());
    for (const auto& [low, idx] : bnd_->pivot_of_low) pivot_of_low_.emplace(low, ~idx);

    int64_t expected = cells_->size() - rank_dk - bnd_->rank();
    if ((int64_t)basis_.size() != expected)
        throw std::invalid_argument("homology basis: got " + std::to_string(basis_.size()) +
                                    " cycles, expected " + std::to_string(expected));

    for (int32_t i = 0; i < (int32_t)basis_.size(); ++i) {
        if (!boundary(basis_[i]).is_zero())
            throw std::invalid_argument("homology basis: chain " + std::to_string(i) +
                                        " is not a cycle");
        // Reduce cycle i against everything placed so far, tracking its class.
        std::map<int32_t, Rational> rem;
        for (auto& [row, coeff] : to_vector(basis_[i], *cells_)) rem.emplace(row, coeff);
        std::map<int32_t, Rational> tag;
        tag.emplace(i, 1);
        while (!rem.empty()) {
            auto last = std::prev(rem.end());
            int32_t r = last->first;
            Rational v = last->second;
            auto pit = pivot_of_low_.find(r);
            if (pit == pivot_of_low_.end()) break;  // fresh pivot row
            if (pit->second >= 0) {
                const CycleCol& col = cyc_[pit->second];
                for (const auto& [row, cv] : col.v) {
                    Rational& slot = rem[row];
                    slot -= v * cv;
                    if (slot == 0) rem.erase(row);
                }
                for (const auto& [bi, tv] : col.tag) {
                    Rational& slot = tag[bi];
                    slot -= v * tv;
                    if (slot == 0) tag.erase(bi);
                }
            } else {
                const SparseIntCol& col = bnd_->col[~pit->second];
                Rational coef = v / Rational(col.back().second);
                for (const auto& [row, cv] : col) {
                    Rational& slot = rem[row];
                    slot -= coef * cv;
                    if (slot == 0) rem.erase(row);
                }
            }
        }
        if (rem.empty())
            throw std::invalid_argument(
                "homology basis: cycle " + std::to_string(i) +
                " is dependent on boundaries and earlier cycles");
        // Scale so the low entry is 1; store.
        int32_t low = std::prev(rem.end())->first;
        Rational scale = 1 / std::prev(rem.end())->second;
        CycleCol cc;
        cc.v.reserve(rem.size());
        for (auto& [row, val] : rem) cc.v.emplace_back(row, val * scale);
        cc.tag.reserve(tag.size());
        for (auto& [bi, val] : tag) cc.tag.emplace_back(bi, val * scale);
        pivot_of_low_.emplace(low, (int32_t)cyc_.size());
        cyc_.push_back(std::move(cc));
    }
}

SparseQVec HomologyBasis::coordinates(SparseQVec v) const {
    std::map<int32_t, Rational> rem(v.begin(), v.end());
    std::map<int32_t, Rational> acc;
    while (!rem.empty()) {
        auto last = std::prev(rem.end());
        int32_t r = last->first;
        Rational val = last->second;
        if (val == 0) {
            rem.erase(last);
            continue;
        }
        auto pit = pivot_of_low_.find(r);
        if (pit == pivot_of_low_.end())
            throw std::invalid_argument("homology coordinates: input is not a cycle");
        if (pit->second >= 0) {
            const CycleCol& col = cyc_[pit->second];
            for (const auto& [row, cv] : col.v) {
                Rational& slot = rem[row];
                slot -= val * cv;
                if (slot == 0) rem.erase(row);
            }
            for (const auto& [bi, tv] : col.tag) {
                Rational& slot = acc[bi];
                slot += val * tv;
                if (slot == 0) acc.erase(bi);
            }
        } else {
            const SparseIntCol& col = bnd_->col[~pit->second];
            Rational coef = val / Rational(col.back().second);
            for (const auto& [row, cv] : col) {
                Rational& slot = rem[row];
                slot -= coef * cv;
                if (slot == 0) rem.erase(row);
            }
        }
    }
    return SparseQVec(acc.begin(), acc.end());
}

SparseQVec HomologyBasis::coordinates(const Chain& c) const {
    if (c.is_zero()) return {};
    if (c.dimension() != cells_->k)
        throw std::invalid_argument("homology coordinates: wrong dimension");
    return coordinates(to_vector(c, *cells_));
}

bool HomologyBasis::homologous(const Chain& a, const Chain& b) const {
    return coordinates(a) == coordinates(b);
}

Chain HomologyBasis::chain_of(const SparseQVec& coords) const {
    Chain out;
    for (const auto& [i, coeff] : coords) out += basis_.at(i).scaled(coeff);
    return out;
}

}  // namespace striphom
