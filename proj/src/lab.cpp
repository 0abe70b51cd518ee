#include "lab.hpp"

#include "generators.hpp"
#include "minsep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace sepscope {

Graph random_graph(int n, double p, LabRng& rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1u) edges.emplace_back(u, v);
    return Graph(n, edges);
}

std::vector<Graph> small_graph_inventory(int max_n) {
    std::vector<Graph> reps;
    for (int n = 1; n <= max_n; ++n) {
        const int pairs = n * (n - 1) / 2;
        // bucket by (m, degree sequence) to keep the pairwise iso checks few
        std::map<std::pair<int, std::vector<int>>, std::vector<std::size_t>> buckets;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs); ++mask) {
            Graph g = graph_from_edge_mask(n, mask);
            std::vector<int> degs(n);
            for (int v = 0; v < n; ++v) degs[v] = g.degree(v);
            std::sort(degs.begin(), degs.end());
            auto key = std::make_pair(g.size(), std::move(degs));
            bool fresh = true;
            for (std::size_t idx : buckets[key])
                if (is_isomorphic(reps[idx], g)) {
                    fresh = false;
                    break;
                }
            if (fresh) {
                buckets[key].push_back(reps.size());
                reps.push_back(std::move(g));
            }
        }
    }
    return reps;
}

std::vector<std::string> ordered_parallel_rows(int count, const std::function<std::string(int)>& fn) {
    std::vector<std::string> rows(count);
    if (count == 0) return rows;
    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(), 8);
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
    std::atomic<int> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    auto body = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                rows[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return rows;
}

namespace {

std::string fixed4(double x) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << x;
    return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

ExperimentResult run_feral_growth(const std::string& family, int k_min, int k_max, long long cap,
                                  std::uint64_t seed) {
    if (k_min > k_max || k_min < (family == "creature" || family == "skinny-ladder" ? 1 : 3))
        throw input_error("run_feral_growth: bad k range for family " + family);
    auto make = [&](int k) -> Graph {
        if (family == "theta") return k_theta(k);
        if (family == "prism") return k_prism(k);
        if (family == "skinny-ladder") return k_skinny_ladder(k);
        if (family == "creature") return k_creature(standard_creature_spec(k, 1, 1, false, false));
        throw input_error("run_feral_growth: unknown family " + family);
    };
    const bool asserted = family == "theta" || family == "prism";
    ExperimentResult res;
    std::ostringstream csv, log;
    const auto t0 = std::chrono::steady_clock::now();
    csv << kCsvSchema << '\n';
    csv << "#experiment=feral-growth family=" << family << " k=" << k_min << ".." << k_max << " cap=" << cap
        << " seed=" << seed << '\n';
    csv << "family,k,n,m,separators,capped,ratio_to_prev,ratio_ok,seed\n";
    long long prev = -1;
    bool prev_capped = false;
    for (int k = k_min; k <= k_max; ++k) {
        Graph g = make(k);
        SeparatorCount c = count_minimal_separators(g, cap);
        std::string ratio, ratio_ok;
        if (prev >= 0 && !c.capped && !prev_capped && prev > 0) {
            const double r = static_cast<double>(c.count) / static_cast<double>(prev);
            ratio = fixed4(r);
            if (asserted) {
                const bool ok = c.count > prev && r >= 2.0;
                ratio_ok = ok ? "1" : "0";
                if (!ok) {
                    res.pass = false;
                    log << "ratio violation: " << family << " k=" << k << " count=" << c.count
                        << " prev=" << prev << " ratio=" << ratio << "\n";
                }
            }
        }
        csv << family << ',' << k << ',' << g.order() << ',' << g.size() << ',' << c.count << ','
            << (c.capped ? 1 : 0) << ',' << ratio << ',' << ratio_ok << ',' << seed << '\n';
        prev = c.count;
        prev_capped = c.capped;
    }
    log << "feral-growth " << family << " finished in " << fixed4(seconds_since(t0)) << "s\n";
    res.csv = csv.str();
    res.log += log.str();
    return res;
}

ExperimentResult run_tame_profile(const std::string& filter, int n_min, int n_max, int samples_per_cell,
                                  std::uint64_t seed, long long budget, long long cap) {
    if (n_min > n_max || samples_per_cell < 1) throw input_error("run_tame_profile: bad ranges");
    std::function<bool(const Graph&)> keep;
    if (filter == "butterfly-im-free")
        keep = [](const Graph& g) { return !has_butterfly_im(g).has_value(); };
    else if (filter == "house-itm-free")
        keep = [budget](const Graph& g) { return !has_house_itm(g, budget).present; };
    else if (filter == "none")
        keep = [](const Graph&) { return true; };
    else
        throw input_error("run_tame_profile: unknown filter " + filter);

    const std::vector<double> probs{0.2, 0.35, 0.5};
    ExperimentResult res;
    std::ostringstream csv, log;
    const auto t0 = std::chrono::steady_clock::now();
    csv << kCsvSchema << '\n';
    csv << "#experiment=tame-profile filter=" << filter << " n=" << n_min << ".." << n_max
        << " samples=" << samples_per_cell << " probs=0.2,0.35,0.5 cap=" << cap << " seed=" << seed << '\n';
    csv << "filter,n,p,samples,kept,max_separators_kept,max_separators_all,capped_rows,seed\n";

    struct Cell {
        int n;
        double p;
    };
    std::vector<Cell> cells;
    for (int n = n_min; n <= n_max; ++n)
        for (double p : probs) cells.push_back({n, p});

    auto row_of = [&](int idx) {
        const auto [n, p] = cells[idx];
        // per-cell seed stream keeps rows independent of scheduling
        LabRng rng(seed ^ (0x9e3779b97f4a7c15ULL * (idx + 1)));
        int kept = 0, capped_rows = 0;
        long long max_kept = -1, max_all = -1;
        for (int s = 0; s < samples_per_cell; ++s) {
            Graph g = random_graph(n, p, rng);
            SeparatorCount c = count_minimal_separators(g, cap);
            if (c.capped) ++capped_rows;
            max_all = std::max(max_all, c.count);
            if (keep(g)) {
                ++kept;
                max_kept = std::max(max_kept, c.count);
            }
        }
        std::ostringstream row;
        row << filter << ',' << n << ',' << p << ',' << samples_per_cell << ',' << kept << ','
            << (kept ? std::to_string(max_kept) : std::string()) << ',' << max_all << ',' << capped_rows << ','
            << seed;
        return row.str();
    };
    auto rows = ordered_parallel_rows(static_cast<int>(cells.size()), row_of);
    for (auto& r : rows) csv << r << '\n';
    log << "tame-profile finished in " << fixed4(seconds_since(t0)) << "s\n";
    res.csv = csv.str();
    res.log = log.str();
    return res;
}

RecognizerSet default_recognizers(long long budget) {
    RecognizerSet r;
    r.house_im = [budget](const Graph& g) { return has_house_im(g, budget).present; };
    r.house_itm = [budget](const Graph& g) { return has_house_itm(g, budget).present; };
    r.butterfly_im = [](const Graph& g) { return has_butterfly_im(g).has_value(); };
    return r;
}

ExperimentResult run_oracle_equivalence(int exhaustive_n, int random_n_min, int random_n_max, int samples,
                                        std::uint64_t seed, long long budget,
                                        const RecognizerSet* override_recognizers) {
    if (exhaustive_n > 6) throw input_error("run_oracle_equivalence: exhaustive sweep supported up to n = 6");
    RecognizerSet rec = override_recognizers ? *override_recognizers : default_recognizers(budget);
    const Graph house = house_graph(), butterfly = butterfly_graph();

    std::vector<Graph> corpus;
    for (int n = 0; n <= exhaustive_n; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs); ++mask)
            corpus.push_back(graph_from_edge_mask(n, mask));
    }
    const std::size_t exhaustive_count = corpus.size();
    if (samples > 0 && random_n_min <= random_n_max) {
        LabRng rng(seed);
        const std::vector<double> probs{0.2, 0.35, 0.5};
        for (int s = 0; s < samples; ++s) {
            const int n = random_n_min + s % (random_n_max - random_n_min + 1);
            const double p = probs[s % probs.size()];
            corpus.push_back(random_graph(n, p, rng));
        }
    }

    ExperimentResult res;
    std::ostringstream csv, log;
    const auto t0 = std::chrono::steady_clock::now();
    csv << kCsvSchema << '\n';
    csv << "#experiment=oracle-equivalence exhaustive_n=" << exhaustive_n << " random_n=" << random_n_min << ".."
        << random_n_max << " samples=" << samples << " seed=" << seed << '\n';
    csv << "graph6,n,m,house_im,oracle_house_im,house_itm,oracle_house_itm,butterfly_im,oracle_butterfly_im,seed,"
           "agree\n";

    auto row_of = [&](int idx) {
        const Graph& g = corpus[idx];
        const bool him = rec.house_im(g);
        const bool hitm = rec.house_itm(g);
        const bool bim = rec.butterfly_im(g);
        const bool ohim = contains_induced_minor(g, house).has_value();
        const bool ohitm = contains_induced_topological_minor(g, house).has_value();
        const bool obim = contains_induced_minor(g, butterfly).has_value();
        const bool agree = him == ohim && hitm == ohitm && bim == obim;
        std::ostringstream row;
        row << encode_graph6(g) << ',' << g.order() << ',' << g.size() << ',' << him << ',' << ohim << ','
            << hitm << ',' << ohitm << ',' << bim << ',' << obim << ',' << seed << ',' << agree;
        return row.str();
    };
    auto rows = ordered_parallel_rows(static_cast<int>(corpus.size()), row_of);
    int mismatches = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        csv << rows[i] << '\n';
        if (rows[i].size() >= 1 && rows[i].back() == '0') {
            ++mismatches;
            if (mismatches <= 50)
                log << "MISMATCH " << (i < exhaustive_count ? "exhaustive " : "random ") << rows[i] << '\n';
        }
    }
    res.pass = mismatches == 0;
    log << "oracle-equivalence: " << corpus.size() << " graphs, " << mismatches << " mismatches, "
        << fixed4(seconds_since(t0)) << "s\n";
    res.csv = csv.str();
    res.log = log.str();
    return res;
}

ExperimentResult run_dichotomy_table() {
    ExperimentResult res;
    std::ostringstream csv, log;
    const auto t0 = std::chrono::steady_clock::now();
    const Graph prism5 = k_prism(5), theta5 = k_theta(5);
    auto inventory = small_graph_inventory(5);
    csv << kCsvSchema << '\n';
    csv << "#experiment=dichotomy-table inventory=n<=5\n";
    csv << "graph6,n,m,im_verdict,im_justification,itm_verdict,itm_justification,im_of_prism5,im_of_theta5,"
           "both_implies_tame\n";
    auto row_of = [&](int idx) {
        const Graph& h = inventory[idx];
        auto im = classify_dichotomy(h, Relation::induced_minor);
        auto itm = classify_dichotomy(h, Relation::induced_topological_minor);
        const bool in_prism = contains_induced_minor(prism5, h).has_value();
        const bool in_theta = contains_induced_minor(theta5, h).has_value();
        const bool cross_ok = !(in_prism && in_theta) || im.tame;
        std::ostringstream row;
        row << encode_graph6(h) << ',' << h.order() << ',' << h.size() << ',' << (im.tame ? "tame" : "feral")
            << ',' << im.justification << ',' << (itm.tame ? "tame" : "feral") << ',' << itm.justification << ','
            << in_prism << ',' << in_theta << ',' << cross_ok;
        return row.str();
    };
    auto rows = ordered_parallel_rows(static_cast<int>(inventory.size()), row_of);
    int violations = 0;
    for (const auto& r : rows) {
        csv << r << '\n';
        if (!r.empty() && r.back() == '0') {
            ++violations;
            log << "CROSS-CHECK VIOLATION " << r << '\n';
        }
    }
    res.pass = violations == 0;
    log << "dichotomy-table: " << inventory.size() << " patterns, " << violations << " violations, "
        << fixed4(seconds_since(t0)) << "s\n";
    res.csv = csv.str();
    res.log = log.str();
    return res;
}

} // namespace sepscope
