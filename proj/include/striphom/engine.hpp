#pragma once

#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "striphom/cache.hpp"
#include "striphom/critical.hpp"
#include "striphom/homology.hpp"

namespace striphom {

struct WheelSeed;      // h1basis.hpp
struct ClassFunction;  // symrep.hpp

// Compute-once map usable from several worker threads: the first caller of
// a key computes, everyone else waits on its future.
template <class K, class V>
class Memo {
public:
    std::shared_ptr<const V> get(const K& key, const std::function<V()>& make) {
        std::shared_future<std::shared_ptr<const V>> fut;
        std::promise<std::shared_ptr<const V>> mine;
        bool owner = false;
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = map_.find(key);
            if (it == map_.end()) {
                owner = true;
                fut = mine.get_future().share();
                map_.emplace(key, fut);
            } else {
                fut = it->second;
            }
        }
        if (owner) {
            try {
                mine.set_value(std::make_shared<const V>(make()));
            } catch (...) {
                mine.set_exception(std::current_exception());
                std::lock_guard<std::mutex> lock(mu_);
                map_.erase(key);  // let a later caller retry
            }
        }
        return fut.get();
    }

private:
    std::mutex mu_;
    std::map<K, std::shared_future<std::shared_ptr<const V>>> map_;
};

// Shared workspace: memoized cell bases, boundary matrices, image echelons,
// ranks (disk-cached), Smith forms (disk-cached), and the critical-cycle
// homology bases of the width-2 complexes.
class Engine {
public:
    explicit Engine(std::optional<std::string> cache_dir = std::nullopt);

    std::shared_ptr<const CellBasis> cell_basis(int n, Width w, int k);
    std::shared_ptr<const SparseIntMatrix> boundary(int n, Width w, int k);
    std::shared_ptr<const ColumnEchelon> image_echelon(int n, Width w, int k);

    int64_t cell_count(int n, Width w, int k);
    int64_t rank_d(int n, Width w, int k);  // rank of the k-th boundary matrix
    int64_t betti(int n, Width w, int k);
    std::vector<BigInt> smith(int n, Width w, int k);
    bool smith_all_ones(int n, Width w, int k);
    int64_t euler_char_cells(int n, Width w);
    int64_t euler_char_betti(int n, Width w);
    int max_dim(int n, Width w) const;

    std::shared_ptr<const std::vector<Symbol>> critical_cells(int n, int k);
    std::shared_ptr<const HomologyBasis> critical_basis(int n, int k);

    Chain high_insert(const Chain& c, int j);  // labels of c must be 1..n

    const DiskCache& cache() const { return cache_; }

    // Slots owned by higher layers (wheel seeds, memoized characters).
    Memo<int, WheelSeed>& wheel_seeds() { return wheel_seeds_; }
    Memo<std::pair<int, int>, ClassFunction>& characters() { return characters_; }

private:
    using Key = std::tuple<int, int, int>;  // n, w.w (0 = unbounded), k
    DiskCache cache_;
    Memo<Key, CellBasis> cells_;
    Memo<Key, SparseIntMatrix> matrices_;
    Memo<Key, ColumnEchelon> echelons_;
    Memo<Key, int64_t> ranks_;
    Memo<Key, std::vector<BigInt>> smiths_;
    Memo<std::pair<int, int>, std::vector<Symbol>> crit_cells_;
    Memo<std::pair<int, int>, HomologyBasis> crit_bases_;
    Memo<int, WheelSeed> wheel_seeds_;
    Memo<std::pair<int, int>, ClassFunction> characters_;
};

}  // namespace striphom
