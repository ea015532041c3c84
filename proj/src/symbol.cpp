#include "striphom/symbol.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace striphom {

namespace {

std::string render(const std::vector<std::vector<int>>& blocks) {
    std::string out;
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (b) out += '|';
        for (size_t i = 0; i < blocks[b].size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(blocks[b][i]);
        }
    }
    return out;
}

}  // namespace

Symbol Symbol::make(std::vector<std::vector<int>> blocks) {
    if (blocks.empty()) throw std::invalid_argument("symbol needs at least one block");
    std::set<int> seen;
    for (const auto& blk : blocks) {
        if (blk.empty()) throw std::invalid_argument("empty block in symbol");
        for (int lab : blk) {
            if (lab <= 0) throw std::invalid_argument("labels must be positive");
            if (!seen.insert(lab).second)
                throw std::invalid_argument("repeated label " + std::to_string(lab));
        }
    }
    Symbol s;
    s.blocks_ = std::move(blocks);
    s.text_ = render(s.blocks_);
    return s;
}

Symbol Symbol::parse(const std::string& text) {
    std::vector<std::vector<int>> blocks(1);
    std::string tok;
    auto flush_label = [&](const std::string& t) {
        if (t.empty()) throw std::invalid_argument("malformed symbol: '" + text + "'");
        if (t.size() > 1 && t[0] == '0')
            throw std::invalid_argument("leading zero in label: '" + text + "'");
        for (char c : t)
            if (c < '0' || c > '9')
                throw std::invalid_argument("bad character in label: '" + text + "'");
        long v = std::stol(t);
        if (v <= 0 || v > 1'000'000) throw std::invalid_argument("label out of range: " + t);
        blocks.back().push_back((int)v);
    };
    for (char c : text) {
        if (c == ' ') {
            flush_label(tok);
            tok.clear();
        } else if (c == '|') {
            flush_label(tok);
            tok.clear();
            blocks.emplace_back();
        } else {
            tok += c;
        }
    }
    flush_label(tok);
    Symbol s = make(std::move(blocks));
    if (s.text() != text)  // unreachable given the checks above; belt and braces
        throw std::invalid_argument("non-canonical symbol text: '" + text + "'");
    return s;
}

int Symbol::label_count() const {
    int n = 0;
    for (const auto& b : blocks_) n += (int)b.size();
    return n;
}

std::vector<int> Symbol::sorted_labels() const {
    std::vector<int> out;
    for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

int Symbol::max_block_size() const {
    size_t m = 0;
    for (const auto& b : blocks_) m = std::max(m, b.size());
    return (int)m;
}

Width Width::bounded(int w) {
    if (w < 1) throw std::invalid_argument("width must be >= 1");
    return Width{w};
}

std::vector<std::vector<int>> shuffles(const std::vector<int>& x,
                                       const std::vector<int>& y) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    cur.reserve(x.size() + y.size());
    // Recurse on (how much of x consumed, how much of y consumed).
    auto rec = [&](auto&& self, size_t i, size_t j) -> void {
        if (i == x.size() && j == y.size()) {
            out.push_back(cur);
            return;
        }
        if (i < x.size()) {
            cur.push_back(x[i]);
            self(self, i + 1, j);
            cur.pop_back();
        }
        if (j < y.size()) {
            cur.push_back(y[j]);
            self(self, i, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<Symbol> enumerate_cells(int n, Width w, int k) {
    std::vector<Symbol> out;
    if (n < 1) throw std::invalid_argument("enumerate_cells: n must be >= 1");
    int m = n - k;  // block count
    if (k < 0 || m < 1 || m > n) return out;

    // Compositions of n into m positive parts within the width bound.
    std::vector<int> parts(m);
    std::vector<std::vector<int>> comps;
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == m) {
            if (left == 0) comps.push_back(parts);
            return;
        }
        int remaining_slots = m - pos - 1;
        for (int p = 1; p <= left - remaining_slots; ++p) {
            if (!w.admits(p)) break;
            parts[pos] = p;
            self(self, pos + 1, left - p);
        }
    };
    rec(rec, 0, n);

    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    do {
        for (const auto& comp : comps) {
            std::vector<std::vector<int>> blocks;
            blocks.reserve(comp.size());
            int at = 0;
            for (int p : comp) {
                blocks.emplace_back(word.begin() + at, word.begin() + at + p);
                at += p;
            }
            out.push_back(Symbol::make(std::move(blocks)));
        }
    } while (std::next_permutation(word.begin(), word.end()));

    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Symbol> codim1_faces(const Symbol& s) {
    std::vector<Symbol> out;
    const auto& blocks = s.blocks();
    for (size_t b = 0; b < blocks.size(); ++b) {
        const auto& word = blocks[b];
        size_t sz = word.size();
        if (sz < 2) continue;
        // Nonempty proper position subsets; the subset keeps word order.
        for (unsigned mask = 1; mask + 1 < (1u << sz); ++mask) {
            std::vector<int> xs, ys;
            for (size_t i = 0; i < sz; ++i)
                ((mask >> i) & 1 ? xs : ys).push_back(word[i]);
            std::vector<std::vector<int>> nb;
            nb.reserve(blocks.size() + 1);
            for (size_t j = 0; j < blocks.size(); ++j) {
                if (j == b) {
                    nb.push_back(xs);
                    nb.push_back(ys);
                } else {
                    nb.push_back(blocks[j]);
                }
            }
            out.push_back(Symbol::make(std::move(nb)));
        }
    }
    return out;
}

std::vector<Symbol> codim1_cofaces(const Symbol& s, Width w) {
    std::vector<Symbol> out;
    const auto& blocks = s.blocks();
    for (size_t b = 0; b + 1 < blocks.size(); ++b) {
        int merged = (int)(blocks[b].size() + blocks[b + 1].size());
        if (!w.admits(merged)) continue;
        for (auto& word : shuffles(blocks[b], blocks[b + 1])) {
            std::vector<std::vector<int>> nb;
            nb.reserve(blocks.size() - 1);
            for (size_t j = 0; j < blocks.size(); ++j) {
                if (j == b) {
                    nb.push_back(word);
                    ++j;  // skip the absorbed neighbor
                } else {
                    nb.push_back(blocks[j]);
                }
            }
            out.push_back(Symbol::make(std::move(nb)));
        }
    }
    return out;
}

}  // namespace striphom
