#include "striphom/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <functional>
#include <mutex>
#include <ostream>
#include <thread>

#include "striphom/serialize.hpp"

namespace striphom {

namespace {

struct Range {
    int lo = 0, hi = 0;
};

int parse_int(const std::string& s, const char* flag) {
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (...) {
        used = 0;
    }
    if (used != s.size() || s.empty())
        throw std::invalid_argument(std::string(flag) + ": not an integer: '" + s + "'");
    return v;
}

Range parse_range(const std::string& text, const char* flag, int min_value) {
    Range r;
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_int(text, flag);
    } else {
        r.lo = parse_int(text.substr(0, dots), flag);
        r.hi = parse_int(text.substr(dots + 2), flag);
    }
    if (r.lo > r.hi)
        throw std::invalid_argument(std::string(flag) + ": empty range '" + text + "'");
    if (r.lo < min_value)
        throw std::invalid_argument(std::string(flag) + ": values below " +
                                    std::to_string(min_value) + " are not supported");
    return r;
}

std::vector<Width> parse_widths(const std::string& text) {
    if (text == "inf" || text == "unbounded") return {Width::unbounded()};
    Range r = parse_range(text, "--w", 1);
    std::vector<Width> out;
    for (int w = r.lo; w <= r.hi; ++w) out.push_back(Width::bounded(w));
    return out;
}

Json width_json(Width w) {
    return w.is_bounded() ? Json(w.w) : Json("unbounded");
}

// fixed worker pool over an indexed job list; results land by index so the
// output order never depends on scheduling
std::vector<Json> run_jobs(int jobs, const std::vector<std::function<Json()>>& work) {
    std::vector<Json> results(work.size());
    if (work.empty()) return results;
    jobs = std::max(1, std::min<int>(jobs, (int)work.size()));
    if (jobs == 1) {
        for (size_t i = 0; i < work.size(); ++i) results[i] = work[i]();
        return results;
    }
    std::atomic<size_t> next{0};
    std::mutex emu;
    std::exception_ptr first;
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= work.size()) return;
                try {
                    results[i] = work[i]();
                } catch (...) {
                    std::lock_guard<std::mutex> lock(emu);
                    if (!first) first = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first) std::rethrow_exception(first);
    return results;
}

void emit(const Json& j, const std::string& out_path, std::ostream& out,
          std::ostream& err) {
    std::string text = j.dump();
    if (out_path.empty()) {
        out << text << "\n";
        return;
    }
    std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open output file " + out_path);
    f << text << "\n";
    err << "wrote " << out_path << "\n";
}

Json betti_report(Engine& eng, int n, Width w, int k, bool torsion) {
    Json j;
    j["n"] = n;
    j["w"] = width_json(w);
    j["k"] = k;
    j["cells"] = (int64_t)eng.cell_count(n, w, k);
    j["rank_dk"] = (int64_t)eng.rank_d(n, w, k);
    j["rank_dk1"] = (int64_t)eng.rank_d(n, w, k + 1);
    j["betti"] = (int64_t)eng.betti(n, w, k);
    if (torsion) j["torsion_free"] = eng.smith_all_ones(n, w, k);
    return j;
}

struct Check {
    std::string name;
    std::function<bool()> fn;
};

bool check_boundary_squares(Engine& eng, int n, Width w) {
    for (int k = 2; k <= eng.max_dim(n, w); ++k)
        for (const Symbol& s : enumerate_cells(n, w, k))
            if (!boundary(boundary(Chain::unit(s))).is_zero()) return false;
    return true;
}

bool check_critical_count(Engine& eng, int n) {
    for (int k = 0; k <= eng.max_dim(n, Width::bounded(2)); ++k)
        if (eng.betti(n, Width::bounded(2), k) !=
            (int64_t)enumerate_critical(n, k).size())
            return false;
    return true;
}

bool check_torsion(Engine& eng, int n) {
    for (int k = 1; k <= eng.max_dim(n, Width::bounded(2)); ++k)
        if (!eng.smith_all_ones(n, Width::bounded(2), k)) return false;
    return true;
}

bool check_characters(Engine& eng, int n) {
    int kmax = eng.max_dim(n, Width::bounded(2));
    for (int k = 1; k <= std::min(2, kmax); ++k)
        if (homology_character(eng, n, k) != predicted_character(n, k))
            return false;
    for (int k = 1; k <= std::min(3, kmax); ++k) {
        const ClassFunction& chi = homology_character(eng, n, k);
        if (inner_product(chi, trivial_character(n)) !=
            trivial_multiplicity_formula(n, k))
            return false;
        if (inner_product(chi, sign_character(n)) !=
            alternating_multiplicity_formula(n, k))
            return false;
    }
    return true;
}

bool check_formulas() {
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= n; ++m)
            for (int d = 1; d <= 3; ++d)
                if (count_fid_homs(m, n, d, CountMode::formula) !=
                    count_fid_homs(m, n, d, CountMode::bruteforce))
                    return false;
    if (count_fid_homs(1, 3, 2, CountMode::formula) != 12) return false;
    if (free_module_dim(2, 4, 2, 1) != 24) return false;
    for (int n = 3; n <= 7; ++n) {
        BigInt binom = 1;
        for (int i = 0; i < 3; ++i) binom = binom * (n - i) / (i + 1);
        if (free_module_dim(3, n, 1, 1) != binom) return false;
    }
    return true;
}

std::vector<Check> build_suite(Engine& eng, const std::string& suite, int max_n) {
    std::vector<Check> checks;
    auto want = [&](const char* name) { return suite == "all" || suite == name; };
    std::vector<Width> widths = {Width::bounded(2), Width::bounded(3),
                                 Width::unbounded()};

    if (want("boundary"))
        for (int n = 1; n <= max_n; ++n)
            for (Width w : widths)
                checks.push_back({"boundary n=" + std::to_string(n) + " w=" + w.str(),
                                  [&eng, n, w]() { return check_boundary_squares(eng, n, w); }});
    if (want("euler"))
        for (int n = 1; n <= max_n; ++n)
            for (Width w : widths)
                checks.push_back({"euler n=" + std::to_string(n) + " w=" + w.str(),
                                  [&eng, n, w]() {
                                      return eng.euler_char_cells(n, w) ==
                                             eng.euler_char_betti(n, w);
                                  }});
    if (want("critical-count"))
        for (int n = 2; n <= max_n; ++n)
            checks.push_back({"critical-count n=" + std::to_string(n),
                              [&eng, n]() { return check_critical_count(eng, n); }});
    if (want("torsion"))
        for (int n = 2; n <= max_n; ++n)
            checks.push_back({"torsion n=" + std::to_string(n),
                              [&eng, n]() { return check_torsion(eng, n); }});
    if (want("h1-basis"))
        for (int n = 2; n <= max_n; ++n)
            checks.push_back({"h1-basis n=" + std::to_string(n),
                              [&eng, n]() { return verify_h1_basis(eng, n).ok(); }});
    if (want("characters"))
        for (int n = 2; n <= max_n; ++n)
            checks.push_back({"characters n=" + std::to_string(n),
                              [&eng, n]() { return check_characters(eng, n); }});
    if (want("direct-sum"))
        for (int n = 2; n <= max_n; ++n)
            for (int k = 1; k <= 3; ++k)
                checks.push_back(
                    {"direct-sum n=" + std::to_string(n) + " k=" + std::to_string(k),
                     [&eng, n, k]() { return verify_direct_sum(eng, n, k).ok(); }});
    if (want("formulas"))
        checks.push_back({"formulas", []() { return check_formulas(); }});
    return checks;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact homology of disk configurations on a width-w strip"};
    app.require_subcommand(1);

    std::string n_s, w_s = "2", k_s, suite = "all";
    std::string cache_dir, out_path;
    int max_n = 5, jobs = 1;
    bool allow_big = false, torsion = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--cache-dir", cache_dir,
                        "cache directory (overrides STRIPHOM_CACHE)");
        sub->add_option("--out", out_path, "write the JSON report to this file");
        sub->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));
        sub->add_flag("--allow-big", allow_big, "lift the n <= 8 cap");
    };

    auto* c_complex = app.add_subcommand("complex", "cell counts of cell(n,w)");
    c_complex->add_option("--n", n_s, "labels (int or a..b)")->required();
    c_complex->add_option("--w", w_s, "strip width (int, a..b, inf)");
    c_complex->add_option("--k", k_s, "also list the k-cell symbols");
    add_common(c_complex);

    auto* c_betti = app.add_subcommand("betti", "Betti numbers of cell(n,w)");
    c_betti->add_option("--n", n_s, "labels (int or a..b)")->required();
    c_betti->add_option("--w", w_s, "strip width (int, a..b, inf)");
    c_betti->add_option("--k", k_s, "degree (int or a..b)")->required();
    c_betti->add_flag("--torsion", torsion, "also report integral torsion-freeness");
    add_common(c_betti);

    auto* c_critical = app.add_subcommand("critical", "critical cells at width 2");
    c_critical->add_option("--n", n_s, "labels (int or a..b)")->required();
    c_critical->add_option("--k", k_s, "degree (int or a..b)")->required();
    add_common(c_critical);

    auto* c_character = app.add_subcommand("character", "homology character at width 2");
    c_character->add_option("--n", n_s, "labels (int or a..b)")->required();
    c_character->add_option("--k", k_s, "degree (int or a..b)")->required();
    add_common(c_character);

    auto* c_decompose =
        app.add_subcommand("decompose", "irreducible multiplicities of the homology character");
    c_decompose->add_option("--n", n_s, "labels (int or a..b)")->required();
    c_decompose->add_option("--k", k_s, "degree (int or a..b)")->required();
    add_common(c_decompose);

    auto* c_predict = app.add_subcommand("predict", "predicted dimensions by barrier tuples");
    c_predict->add_option("--n", n_s, "labels (int or a..b)")->required();
    c_predict->add_option("--k", k_s, "degree (int or a..b)")->required();
    add_common(c_predict);

    auto* c_h1 = app.add_subcommand("h1-basis", "degree-one basis families and verification");
    c_h1->add_option("--n", n_s, "labels (int or a..b)")->required();
    add_common(c_h1);

    auto* c_unordered =
        app.add_subcommand("unordered", "rank of unordered-configuration homology");
    c_unordered->add_option("--n", n_s, "labels (int)")->required();
    c_unordered->add_option("--k", k_s, "degree (int)")->required();
    add_common(c_unordered);

    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify
        ->add_option("--suite", suite,
                     "boundary|euler|critical-count|torsion|h1-basis|characters|"
                     "direct-sum|formulas|all")
        ->check(CLI::IsMember({"boundary", "euler", "critical-count", "torsion",
                               "h1-basis", "characters", "direct-sum", "formulas",
                               "all"}));
    c_verify->add_option("--max-n", max_n, "largest label count")->check(CLI::Range(1, 16));
    add_common(c_verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        err << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        Engine eng(cache_dir.empty() ? std::nullopt
                                     : std::optional<std::string>(cache_dir));

        auto guard_n = [&](const Range& r) {
            if (r.hi > 8 && !allow_big)
                throw std::invalid_argument(
                    "--n: values above 8 need --allow-big (expect long runtimes)");
        };

        if (app.got_subcommand(c_complex)) {
            Range rn = parse_range(n_s, "--n", 1);
            guard_n(rn);
            std::vector<Width> widths = parse_widths(w_s);
            std::optional<int> list_k;
            if (!k_s.empty()) list_k = parse_int(k_s, "--k");
            std::vector<std::function<Json()>> work;
            for (int n = rn.lo; n <= rn.hi; ++n)
                for (Width w : widths)
                    work.push_back([&eng, n, w, list_k]() {
                        Json j;
                        j["n"] = n;
                        j["w"] = width_json(w);
                        int md = eng.max_dim(n, w);
                        j["max_dim"] = md;
                        Json counts = Json::array();
                        for (int k = 0; k <= md; ++k)
                            counts.push_back((int64_t)eng.cell_count(n, w, k));
                        j["cells"] = counts;
                        if (list_k) {
                            j["k"] = *list_k;
                            Json syms = Json::array();
                            for (const Symbol& s : enumerate_cells(n, w, *list_k))
                                syms.push_back(s.text());
                            j["symbols"] = syms;
                        }
                        return j;
                    });
            auto results = run_jobs(jobs, work);
            emit(results.size() == 1 ? results[0] : Json(results), out_path, out, err);
            return 0;
        }

        if (app.got_subcommand(c_betti)) {
            Range rn = parse_range(n_s, "--n", 1);
            guard_n(rn);
            Range rk = parse_range(k_s, "--k", 0);
            std::vector<Width> widths = parse_widths(w_s);
            bool want_torsion = torsion;
            std::vector<std::function<Json()>> work;
            for (int n = rn.lo; n <= rn.hi; ++n)
                for (Width w : widths)
                    for (int k = rk.lo; k <= rk.hi; ++k)
                        work.push_back([&eng, n, w, k, want_torsion]() {
                            return betti_report(eng, n, w, k, want_torsion);
                        });
            auto results = run_jobs(jobs, work);
            emit(results.size() == 1 ? results[0] : Json(results), out_path, out, err);
            return 0;
        }

        if (app.got_subcommand(c_critical)) {
            Range rn = parse_range(n_s, "--n", 1);
            guard_n(rn);
            Range rk = parse_range(k_s, "--k", 0);
            std::vector<std::function<Json()>> work;
            for (int n = rn.lo; n <= rn.hi; ++n)
                for (int k = rk.lo; k <= rk.hi; ++k)
                    work.push_back([n, k]() {
                        Json j;
                        j["n"] = n;
                        j["k"] = k;
                        Json cells = Json::array();
                        for (const Symbol& s : enumerate_critical(n, k))
                            cells.push_back(s.text());
                        j["count"] = (int64_t)cells.size();
                        j["cells"] = cells;
                        return j;
                    });
            auto results = run_jobs(jobs, work);
            emit(results.size() == 1 ? results[0] : Json(results), out_path, out, err);
            return 0;
        }

        if (app.got_subcommand(c_character) || app.got_subcommand(c_decompose)) {
            bool characters = app.got_subcommand(c_character);
            Range rn = parse_range(n_s, "--n", 1);
            guard_n(rn);
            Range rk = parse_range(k_s, "--k", 0);
            std::vector<std::function<Json()>> work;
            for (int n = rn.lo; n <= rn.hi; ++n)
                for (int k = rk.lo; k <= rk.hi; ++k)
                    work.push_back([&eng, n, k, characters]() {
                        Json j;
                        j["n"] = n;
                        j["k"] = k;
                        ClassFunction chi = homology_character(eng, n, k);
                        if (characters)
                            j["classes"] = class_values_json(chi);
                        else
                            j["multiplicities"] = decomposition_json(decompose(chi));
                        return j;
                    });
            auto results = run_jobs(jobs, work);
            emit(results.size() == 1 ? results[0] : Json(results), out_path, out, err);
            return 0;
        }

        if (app.got_subcommand(c_predict)) {
            Range rn = parse_range(n_s, "--n", 1);
            guard_n(rn);
            Range rk = parse_range(k_s, "--k", 1);
            std::vector<std::function<Json()>> work;
            for (int n = rn.lo; n <= rn.hi; ++n)
                for (int k = rk.lo; k <= rk.hi; ++k)
                    work.push_back([n, k]() {
                        Json j;
                        j["n"] = n;
                        j["k"] = k;
                        Json tuples = Json::array();
                        for (const BarrierTuple& t : enumerate_barrier_tuples(n, k)) {
                            BigInt dim = free_module_dim(t.D(), n, t.S() + 1,
                                                         generator_dim(t));
                            tuples.push_back(
                                {{"dim", (int64_t)dim.get_si()}, {"tuple", t.sizes()}});
                        }
                        j["tuples"] = tuples;
                        j["predicted_betti"] = (int64_t)predicted_betti(n, k).get_si();
                        return j;
                    });
            auto results = run_jobs(jobs, work);
            emit(results.size() == 1 ? results[0] : Json(results), out_path, out, err);
            return 0;
        }

        if (app.got_subcommand(c_h1)) {
            Range rn = parse_range(n_s, "--n", 2);
            guard_n(rn);
            std::vector<std::function<Json()>> work;
            for (int n = rn.lo; n <= rn.hi; ++n)
                work.push_back([&eng, n]() {
                    H1Verification rep = verify_h1_basis(eng, n);
                    Json j = h1_report_json(rep);
                    // attach the family chains in report order: the pair
                    // family first, then the wheel families by ascending m
                    Json& fams = j["families"];
                    Json bchains = Json::array();
                    for (int m = 0; m <= n - 2; ++m)
                        for (const Symbol& s : enumerate_B(n, m))
                            bchains.push_back(chain_to_json(critical_cycle(s)));
                    fams[0]["chains"] = bchains;
                    for (int m = 1; m <= n - 2; ++m) {
                        Json achains = Json::array();
                        for (const Chain& c : build_A_prime(eng, n, m))
                            achains.push_back(chain_to_json(c));
                        fams[m]["chains"] = achains;
                    }
                    return j;
                });
            auto results = run_jobs(jobs, work);
            bool all_ok = true;
            for (const Json& j : results) all_ok = all_ok && j.at("ok").get<bool>();
            emit(results.size() == 1 ? results[0] : Json(results), out_path, out, err);
            return all_ok ? 0 : 1;
        }

        if (app.got_subcommand(c_unordered)) {
            int n = parse_int(n_s, "--n");
            int k = parse_int(k_s, "--k");
            guard_n(Range{n, n});
            Json j;
            j["rank"] = unordered_rank(eng, n, k);
            emit(j, out_path, out, err);
            return 0;
        }

        if (app.got_subcommand(c_verify)) {
            guard_n(Range{max_n, max_n});
            std::vector<Check> checks = build_suite(eng, suite, max_n);
            std::vector<std::function<Json()>> work;
            for (const Check& c : checks)
                work.push_back([&c]() {
                    return Json{{"name", c.name}, {"ok", c.fn()}};
                });
            auto results = run_jobs(jobs, work);
            bool all_ok = true;
            for (const Json& j : results) all_ok = all_ok && j.at("ok").get<bool>();
            Json j;
            j["suite"] = suite;
            j["max_n"] = max_n;
            j["checks"] = results;
            j["ok"] = all_ok;
            emit(j, out_path, out, err);
            return all_ok ? 0 : 1;
        }

        err << "no subcommand selected\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace striphom
