#include "striphom/critical.hpp"

#include <algorithm>
#include <stdexcept>

namespace striphom {

bool is_critical(const Symbol& s) {
    const auto& blocks = s.blocks();
    for (size_t b = 0; b < blocks.size(); ++b) {
        const auto& blk = blocks[b];
        if (blk.size() > 2) return false;
        if (blk.size() == 1 && b + 1 < blocks.size() && blocks[b + 1].size() == 1 &&
            blk[0] < blocks[b + 1][0])
            return false;  // consecutive singletons must decrease
        if (blk.size() == 2 && blk[0] > blk[1]) {
            // Decreasing 2-blocks must follow a dominating singleton.
            if (b == 0 || blocks[b - 1].size() != 1 || blocks[b - 1][0] > blk[1])
                return false;
        }
    }
    return true;
}

std::vector<Symbol> enumerate_critical(int n, int k) {
    std::vector<Symbol> out;
    for (const Symbol& s : enumerate_cells(n, Width::bounded(2), k))
        if (is_critical(s)) out.push_back(s);
    return out;
}

std::vector<CriticalFactor> factor_critical(const Symbol& s) {
    if (!is_critical(s)) throw std::invalid_argument("not a critical cell: " + s.text());
    std::vector<CriticalFactor> out;
    const auto& blocks = s.blocks();
    for (size_t b = 0; b < blocks.size(); ++b) {
        const auto& blk = blocks[b];
        if (blk.size() == 1) {
            if (b + 1 < blocks.size() && blocks[b + 1].size() == 2 &&
                blocks[b + 1][0] > blocks[b + 1][1]) {
                // Singleton bound to the decreasing pair after it.
                out.push_back({CriticalFactor::wheel,
                               {blk[0], blocks[b + 1][1], blocks[b + 1][0]}});
                ++b;
            } else {
                out.push_back({CriticalFactor::point, {blk[0]}});
            }
        } else if (blk[0] < blk[1]) {
            out.push_back({CriticalFactor::pair, {blk[0], blk[1]}});
        } else {
            throw std::logic_error("unbound decreasing block in critical cell");
        }
    }
    return out;
}

Chain critical_cycle(const Symbol& s) {
    Chain out;
    bool first = true;
    for (const CriticalFactor& f : factor_critical(s)) {
        Chain z;
        switch (f.kind) {
            case CriticalFactor::point:
                z = z_point(f.labels[0]);
                break;
            case CriticalFactor::pair:
                z = z_pair(f.labels[0], f.labels[1]);
                break;
            case CriticalFactor::wheel:
                z = z_wheel(f.labels[0], f.labels[1], f.labels[2]);
                break;
        }
        out = first ? z : concat(out, z);
        first = false;
    }
    return out;
}

Symbol high_insert_cell(const Symbol& critical, int j) {
    if (!is_critical(critical))
        throw std::invalid_argument("high insertion needs a critical cell");
    int fresh = critical.label_count() + 1;
    const auto& blocks = critical.blocks();
    size_t at = 0;  // block position the new singleton goes to
    if (j > 0) {
        int seen = 0;
        for (size_t b = 0; b < blocks.size(); ++b) {
            if (blocks[b].size() == 2 && ++seen == j) {
                at = b + 1;
                break;
            }
        }
        if (at == 0)
            throw std::invalid_argument("high insertion: cell has fewer than " +
                                        std::to_string(j) + " barriers");
    } else if (j < 0) {
        throw std::invalid_argument("high insertion: negative position");
    }
    std::vector<std::vector<int>> nb;
    nb.reserve(blocks.size() + 1);
    nb.insert(nb.end(), blocks.begin(), blocks.begin() + at);
    nb.push_back({fresh});
    nb.insert(nb.end(), blocks.begin() + at, blocks.end());
    return Symbol::make(std::move(nb));
}

Chain high_insertion(const Chain& c, int j, const HomologyBasis& hb,
                     const std::vector<Symbol>& critical_cells) {
    if ((int64_t)critical_cells.size() != hb.dim())
        throw std::invalid_argument("high insertion: cell list does not match basis");
    Chain out;
    for (const auto& [i, coeff] : hb.coordinates(c))
        out += critical_cycle(high_insert_cell(critical_cells.at(i), j)).scaled(coeff);
    return out;
}

}  // namespace striphom
