#include "striphom/engine.hpp"

#include <json.hpp>

#include <algorithm>

namespace striphom {

using nlohmann::json;

namespace {

std::string slice_key(const char* what, int n, Width w, int k) {
    return std::string(what) + "-n" + std::to_string(n) + "-w" +
           (w.is_bounded() ? std::to_string(w.w) : std::string("inf")) + "-k" +
           std::to_string(k) + "-v1";
}

}  // namespace

Engine::Engine(std::optional<std::string> cache_dir) : cache_(std::move(cache_dir)) {}

std::shared_ptr<const CellBasis> Engine::cell_basis(int n, Width w, int k) {
    return cells_.get({n, w.w, k}, [&] { return CellBasis::build(n, w, k); });
}

std::shared_ptr<const SparseIntMatrix> Engine::boundary(int n, Width w, int k) {
    return matrices_.get({n, w.w, k}, [&] {
        auto dom = cell_basis(n, w, k);
        auto cod = cell_basis(n, w, k - 1);
        return boundary_matrix(*dom, *cod);
    });
}

std::shared_ptr<const ColumnEchelon> Engine::image_echelon(int n, Width w, int k) {
    return echelons_.get({n, w.w, k}, [&] {
        if (k < 1 || cell_count(n, w, k) == 0) {
            ColumnEchelon empty;
            empty.rows = k >= 1 ? cell_count(n, w, k - 1) : 0;
            return empty;
        }
        return column_echelon(*boundary(n, w, k));
    });
}

int64_t Engine::cell_count(int n, Width w, int k) {
    return cell_basis(n, w, k)->size();
}

int64_t Engine::rank_d(int n, Width w, int k) {
    return *ranks_.get({n, w.w, k}, [&]() -> int64_t {
        if (k < 1 || cell_count(n, w, k) == 0) return 0;
        std::string key = slice_key("rank", n, w, k);
        if (auto hit = cache_.get(key)) {
            json j = json::parse(*hit, nullptr, false);
            if (j.is_object() && j.contains("rank") && j["rank"].is_number_integer())
                return j["rank"].get<int64_t>();
        }
        int64_t r = image_echelon(n, w, k)->rank();
        cache_.put(key, json{{"rank", r}}.dump());
        return r;
    });
}

int64_t Engine::betti(int n, Width w, int k) {
    int64_t cells = cell_count(n, w, k);
    if (cells == 0) return 0;
    return cells - rank_d(n, w, k) - rank_d(n, w, k + 1);
}

std::vector<BigInt> Engine::smith(int n, Width w, int k) {
    return *smiths_.get({n, w.w, k}, [&]() -> std::vector<BigInt> {
        if (k < 1 || cell_count(n, w, k) == 0) return {};
        std::string key = slice_key("smith", n, w, k);
        if (auto hit = cache_.get(key)) {
            json j = json::parse(*hit, nullptr, false);
            if (j.is_object() && j.contains("factors") && j["factors"].is_array()) {
                std::vector<BigInt> out;
                bool ok = true;
                for (const auto& f : j["factors"]) {
                    if (!f.is_string()) {
                        ok = false;
                        break;
                    }
                    out.emplace_back(f.get<std::string>());
                }
                if (ok) return out;
            }
        }
        std::vector<BigInt> factors = smith_invariants(*boundary(n, w, k));
        json jf = json::array();
        for (const BigInt& f : factors) jf.push_back(f.get_str());
        cache_.put(key, json{{"factors", jf}}.dump());
        return factors;
    });
}

bool Engine::smith_all_ones(int n, Width w, int k) {
    for (const BigInt& f : smith(n, w, k))
        if (f != 1) return false;
    return true;
}

int Engine::max_dim(int n, Width w) const {
    // Largest k with any k-cell: blocks as large as the width allows.
    int min_blocks = w.is_bounded() ? (n + w.w - 1) / w.w : 1;
    return n - min_blocks;
}

int64_t Engine::euler_char_cells(int n, Width w) {
    int64_t chi = 0;
    for (int k = 0; k <= max_dim(n, w); ++k)
        chi += (k % 2 ? -1 : 1) * cell_count(n, w, k);
    return chi;
}

int64_t Engine::euler_char_betti(int n, Width w) {
    int64_t chi = 0;
    for (int k = 0; k <= max_dim(n, w); ++k)
        chi += (k % 2 ? -1 : 1) * betti(n, w, k);
    return chi;
}

std::shared_ptr<const std::vector<Symbol>> Engine::critical_cells(int n, int k) {
    return crit_cells_.get({n, k}, [&] { return enumerate_critical(n, k); });
}

std::shared_ptr<const HomologyBasis> Engine::critical_basis(int n, int k) {
    return crit_bases_.get({n, k}, [&] {
        Width w = Width::bounded(2);
        auto cells = critical_cells(n, k);
        std::vector<Chain> cycles;
        cycles.reserve(cells->size());
        for (const Symbol& e : *cells) cycles.push_back(critical_cycle(e));
        return HomologyBasis(cell_basis(n, w, k), image_echelon(n, w, k + 1),
                             std::move(cycles), rank_d(n, w, k));
    });
}

Chain Engine::high_insert(const Chain& c, int j) {
    auto labs = c.labels();
    int n = (int)labs.size();
    if (labs.empty() || labs.front() != 1 || labs.back() != n)
        throw std::invalid_argument("high insertion: chain labels must be 1..n");
    int k = c.dimension();
    return high_insertion(c, j, *critical_basis(n, k), *critical_cells(n, k));
}

}  // namespace striphom
