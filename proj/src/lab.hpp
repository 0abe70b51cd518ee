#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "graph.hpp"
#include "recognition.hpp"

namespace sepscope {

/// Deterministic, platform-portable randomness: mt19937_64 with integer
/// thresholding instead of std distributions (whose streams are
/// implementation-defined).
class LabRng {
public:
    explicit LabRng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    bool chance(double p) {
        if (p >= 1.0) return true;
        if (p <= 0.0) return false;
        return (next() >> 11) < static_cast<std::uint64_t>(p * 9007199254740992.0); // 2^53
    }
    int below(int k) { return static_cast<int>(next() % static_cast<std::uint64_t>(k)); }

private:
    std::mt19937_64 eng_;
};

/// Uniform edge-probability graph; edges drawn in lexicographic pair order.
Graph random_graph(int n, double p, LabRng& rng);

/// Labeled graph on n vertices from a bitmask over pairs in lexicographic
/// order (0,1),(0,2),...,(0,n-1),(1,2),...
Graph graph_from_edge_mask(int n, std::uint64_t mask);

/// All graphs with 1..max_n vertices up to isomorphism, represented by the
/// first labeled graph in (n, edge-mask) order.
std::vector<Graph> small_graph_inventory(int max_n);

/// Run fn(0..count-1) on a small worker pool; results keep input order.
std::vector<std::string> ordered_parallel_rows(int count, const std::function<std::string(int)>& fn);

struct ExperimentResult {
    std::string csv;  // byte-stable for equal parameters
    std::string log;  // timings, mismatch dumps; not reproducible
    bool pass = true;
};

inline constexpr const char* kCsvSchema = "#sepscope-csv v1";

/// Minimal-separator growth along a family ramp. For theta and prism the
/// consecutive ratio >= 2 property is checked and violations flagged in the
/// ratio_ok column (and in pass).
ExperimentResult run_feral_growth(const std::string& family, int k_min, int k_max, long long cap,
                                  std::uint64_t seed);

/// Max separator counts over random corpora filtered by a recognizer
/// ("butterfly-im-free", "house-itm-free", "none"), with an unfiltered
/// contrast column. Report-only.
ExperimentResult run_tame_profile(const std::string& filter, int n_min, int n_max, int samples_per_cell,
                                  std::uint64_t seed, long long budget, long long cap);

struct RecognizerSet {
    std::function<bool(const Graph&)> house_im;
    std::function<bool(const Graph&)> house_itm;
    std::function<bool(const Graph&)> butterfly_im;
};

RecognizerSet default_recognizers(long long budget);

/// Recognizers vs the exhaustive oracles on all labeled graphs with
/// n <= exhaustive_n plus seeded random graphs; any discrepancy dumps the
/// counterexample graph6 plus both verdicts and fails the run. Recognizers
/// can be overridden (fault-injection self-test).
ExperimentResult run_oracle_equivalence(int exhaustive_n, int random_n_min, int random_n_max, int samples,
                                        std::uint64_t seed, long long budget,
                                        const RecognizerSet* override_recognizers = nullptr);

/// classify_dichotomy over the <= 5-vertex inventory, with the oracle
/// cross-check: patterns inside both the 5-prism and the 5-theta as induced
/// minors must be tame for the induced-minor relation.
ExperimentResult run_dichotomy_table();

} // namespace sepscope
