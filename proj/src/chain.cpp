#include "striphom/chain.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace striphom {

OrderInjection OrderInjection::into(std::vector<int> source, std::vector<int> target) {
    if (source.size() != target.size())
        throw std::invalid_argument("injection: size mismatch");
    for (size_t i = 0; i + 1 < source.size(); ++i)
        if (source[i] >= source[i + 1] || target[i] >= target[i + 1])
            throw std::invalid_argument("injection: label lists must be strictly increasing");
    for (int v : target)
        if (v <= 0) throw std::invalid_argument("injection: labels must be positive");
    return OrderInjection{std::move(source), std::move(target)};
}

int OrderInjection::apply(int label) const {
    auto it = std::lower_bound(source.begin(), source.end(), label);
    if (it == source.end() || *it != label)
        throw std::invalid_argument("injection: label " + std::to_string(label) + " not in source");
    return target[it - source.begin()];
}

Chain Chain::unit(const Symbol& s) {
    Chain c;
    c.terms_.emplace(s, 1);
    return c;
}

int Chain::dimension() const {
    if (is_zero()) throw std::logic_error("dimension of zero chain");
    return terms_.begin()->first.dimension();
}

std::vector<int> Chain::labels() const {
    if (is_zero()) throw std::logic_error("labels of zero chain");
    return terms_.begin()->first.sorted_labels();
}

Rational Chain::coefficient(const Symbol& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Rational(0) : it->second;
}

Chain& Chain::add(const Symbol& s, const Rational& c) {
    if (c == 0) return *this;
    if (!is_zero()) {
        const Symbol& ref = terms_.begin()->first;
        if (s.dimension() != ref.dimension() || s.sorted_labels() != ref.sorted_labels())
            throw std::invalid_argument("chain terms must share dimension and label set");
    }
    auto [it, fresh] = terms_.emplace(s, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

Chain& Chain::operator+=(const Chain& o) {
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
}

Chain Chain::operator+(const Chain& o) const {
    Chain r = *this;
    r += o;
    return r;
}

Chain Chain::operator-(const Chain& o) const {
    Chain r = *this;
    for (const auto& [s, c] : o.terms_) r.add(s, -c);
    return r;
}

Chain Chain::scaled(const Rational& c) const {
    Chain r;
    if (c == 0) return r;
    for (const auto& [s, v] : terms_) r.terms_.emplace(s, v * c);
    return r;
}

namespace {

// Sign of the permutation sending the concatenation X Y (X = positions in
// mask, in order; Y = the rest) back to the original word: parity of pairs
// (a in mask, b not in mask, a > b).
int unshuffle_sign(unsigned mask, size_t sz) {
    int inv = 0;
    int outside_seen = 0;  // positions not in mask, scanned from the left
    for (size_t p = 0; p < sz; ++p) {
        if ((mask >> p) & 1)
            inv += outside_seen;
        else
            ++outside_seen;
    }
    return (inv & 1) ? -1 : 1;
}

}  // namespace

Chain boundary(const Chain& c) {
    Chain out;
    for (const auto& [sym, coeff] : c.terms()) {
        const auto& blocks = sym.blocks();
        for (size_t b = 0; b < blocks.size(); ++b) {
            const auto& word = blocks[b];
            size_t sz = word.size();
            if (sz < 2) continue;
            int block_sign = (b & 1) ? -1 : 1;
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
                int sgn = block_sign * unshuffle_sign(mask, sz);
                out.add(Symbol::make(std::move(nb)), coeff * sgn);
            }
        }
    }
    return out;
}

Chain concat(const Chain& a, const Chain& b) {
    if (a.is_zero() || b.is_zero()) return Chain::zero();
    Chain out;
    for (const auto& [sa, ca] : a.terms()) {
        for (const auto& [sb, cb] : b.terms()) {
            std::vector<std::vector<int>> nb = sa.blocks();
            const auto& other = sb.blocks();
            nb.insert(nb.end(), other.begin(), other.end());
            out.add(Symbol::make(std::move(nb)), ca * cb);
        }
    }
    return out;
}

Chain inject(const Chain& c, const OrderInjection& inj) {
    if (c.is_zero()) return c;
    if (c.labels() != inj.source)
        throw std::invalid_argument("inject: chain labels differ from injection source");
    Chain out;
    for (const auto& [sym, coeff] : c.terms()) {
        std::vector<std::vector<int>> nb = sym.blocks();
        for (auto& blk : nb)
            for (int& lab : blk) lab = inj.apply(lab);
        out.add(Symbol::make(std::move(nb)), coeff);
    }
    return out;
}

Symbol relabel(const Symbol& s, const std::map<int, int>& perm) {
    std::vector<std::vector<int>> nb = s.blocks();
    for (auto& blk : nb)
        for (int& lab : blk) {
            auto it = perm.find(lab);
            if (it == perm.end())
                throw std::invalid_argument("relabel: label " + std::to_string(lab) + " unmapped");
            lab = it->second;
        }
    return Symbol::make(std::move(nb));
}

Chain relabel(const Chain& c, const std::map<int, int>& perm) {
    if (c.is_zero()) return c;
    // Bijectivity on the chain's labels.
    auto labs = c.labels();
    std::set<int> image;
    for (int lab : labs) {
        auto it = perm.find(lab);
        if (it == perm.end())
            throw std::invalid_argument("relabel: label " + std::to_string(lab) + " unmapped");
        if (!image.insert(it->second).second)
            throw std::invalid_argument("relabel: map is not injective on the chain's labels");
    }
    Chain out;
    for (const auto& [sym, coeff] : c.terms()) out.add(relabel(sym, perm), coeff);
    return out;
}

Chain z_point(int i) { return Chain::unit(Symbol::make({{i}})); }

Chain z_pair(int i, int j) {
    if (!(0 < i && i < j)) throw std::invalid_argument("z_pair needs 0 < i < j");
    Chain c;
    c.add(Symbol::make({{i, j}}), 1);
    c.add(Symbol::make({{j, i}}), 1);
    return c;
}

Chain z_wheel(int i1, int i2, int i3) {
    if (!(0 < i1 && i1 < i2 && i2 < i3))
        throw std::invalid_argument("z_wheel needs 0 < i1 < i2 < i3");
    Chain hex = boundary(Chain::unit(Symbol::make({{3, 2, 1}})));
    return inject(hex, OrderInjection::into({1, 2, 3}, {i1, i2, i3}));
}

}  // namespace striphom
