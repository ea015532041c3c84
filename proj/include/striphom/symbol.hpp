#pragma once

#include <string>
#include <vector>

namespace striphom {

// A symbol names one cell of the configuration complex: blocks of distinct
// labels separated by bars, e.g. "2|5 3|1".  Block contents are ordered
// words, not sets.  The cell's dimension is (#labels - #blocks): each block
// of size s contributes s-1.
//
// Grammar (strict): symbol := block ("|" block)*, block := label (" " label)*,
// labels are positive decimal integers with no leading zeros, exactly one
// space between labels inside a block, no whitespace around bars.
class Symbol {
public:
    Symbol() = default;

    // Validates: at least one block, no empty block, labels positive and
    // distinct across the whole symbol.  Throws std::invalid_argument.
    static Symbol make(std::vector<std::vector<int>> blocks);

    // Strict parse of the grammar above; rejects anything format_symbol
    // would not emit.
    static Symbol parse(const std::string& text);

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::string& text() const { return text_; }

    int dimension() const { return label_count() - (int)blocks_.size(); }
    int label_count() const;
    std::vector<int> sorted_labels() const;
    int max_block_size() const;

    // Symbols order by their formatted text; this is the canonical cell
    // order used everywhere (matrix indices, JSON output).
    bool operator==(const Symbol& o) const { return text_ == o.text_; }
    bool operator!=(const Symbol& o) const { return text_ != o.text_; }
    bool operator<(const Symbol& o) const { return text_ < o.text_; }

private:
    std::vector<std::vector<int>> blocks_;
    std::string text_;
};

inline std::string format_symbol(const Symbol& s) { return s.text(); }
inline Symbol parse_symbol(const std::string& text) { return Symbol::parse(text); }

// Strip width.  w >= 1 bounds block sizes; unbounded() admits all.
struct Width {
    int w = 0;  // 0 encodes unbounded

    static Width bounded(int w);
    static Width unbounded() { return Width{0}; }

    bool is_bounded() const { return w > 0; }
    bool admits(int block_size) const { return !is_bounded() || block_size <= w; }
    std::string str() const { return is_bounded() ? std::to_string(w) : "unbounded"; }
    bool operator==(const Width& o) const { return w == o.w; }
    bool operator<(const Width& o) const { return w < o.w; }
};

// All order-preserving interleavings of two label-disjoint words.  The
// result has C(|x|+|y|, |x|) entries, each containing x and y as
// subsequences, in a deterministic order.
std::vector<std::vector<int>> shuffles(const std::vector<int>& x,
                                       const std::vector<int>& y);

// Every k-cell of cell(n, w) on labels 1..n, strictly sorted by text.
// Empty when no symbol fits (k < 0, more blocks than labels, or width
// forces a different block count).
std::vector<Symbol> enumerate_cells(int n, Width w, int k);

// Cells one dimension below s in the face order: replace one block by an
// ordered pair of complementary nonempty subsequences.  No duplicates.
std::vector<Symbol> codim1_faces(const Symbol& s);

// Cells one dimension above s within width w: merge an adjacent block pair
// into one of their shuffles.  No duplicates.
std::vector<Symbol> codim1_cofaces(const Symbol& s, Width w);

}  // namespace striphom
