#include "sepscope/sepscope.h"

#include "generators.hpp"
#include "graph.hpp"
#include "lab.hpp"
#include "minsep.hpp"
#include "oracle.hpp"
#include "recognition.hpp"
#include "solvers.hpp"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <sstream>

using namespace sepscope;

struct ss_graph {
    Graph g;
};

namespace {

thread_local std::string t_last_error;

ss_status fail(ss_status code, const std::string& msg) {
    t_last_error = msg;
    return code;
}

template <typename Fn>
ss_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const parse_error& e) {
        return fail(SS_ERR_PARSE, e.what());
    } catch (const capability_error& e) {
        return fail(SS_ERR_CAPABILITY, e.what());
    } catch (const budget_error& e) {
        return fail(SS_ERR_BUDGET, e.what());
    } catch (const construction_error& e) {
        return fail(SS_ERR_CONSTRUCTION, e.what());
    } catch (const input_error& e) {
        return fail(SS_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(SS_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ss_status need(bool ok, const char* what) {
    return ok ? SS_OK : fail(SS_ERR_INVALID_ARGUMENT, std::string("null argument: ") + what);
}

} // namespace

extern "C" {

const char* ss_version(void) { return "sepscope 1.0.0"; }

const char* ss_last_error(void) { return t_last_error.c_str(); }

void ss_string_free(char* s) { std::free(s); }

void ss_graph_free(ss_graph* g) { delete g; }

ss_status ss_graph_from_edge_list(int n, const int* endpoints, size_t edge_count, ss_graph** out) {
    if (auto s = need(out && (endpoints || edge_count == 0), "edge list")) return s;
    return guarded([&] {
        std::vector<Edge> edges;
        edges.reserve(edge_count);
        for (size_t i = 0; i < edge_count; ++i) edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
        *out = new ss_graph{Graph(n, edges)};
        return SS_OK;
    });
}

ss_status ss_graph_parse(const char* text, const char* format, ss_graph** out) {
    if (auto s = need(text && out, "text/out")) return s;
    return guarded([&] {
        *out = new ss_graph{parse_graph(text, format ? format : "auto")};
        return SS_OK;
    });
}

ss_status ss_graph_encode(const ss_graph* g, const char* format, char** out_text) {
    if (auto s = need(g && out_text, "graph/out")) return s;
    return guarded([&] {
        const std::string fmt = format ? format : "graph6";
        if (fmt == "graph6")
            *out_text = dup_string(encode_graph6(g->g));
        else if (fmt == "edgelist")
            *out_text = dup_string(encode_edge_list_text(g->g));
        else
            return fail(SS_ERR_INVALID_ARGUMENT, "unknown format: " + fmt);
        return SS_OK;
    });
}

ss_status ss_graph_to_dot(const ss_graph* g, const char* witness_text, char** out_text) {
    if (auto s = need(g && out_text, "graph/out")) return s;
    return guarded([&] {
        VertexSet highlight;
        if (witness_text) {
            // vertex ids appear after a role label; graph6 payload lines are skipped
            std::istringstream lines{std::string(witness_text)};
            std::string line;
            while (std::getline(lines, line)) {
                const auto colon = line.find(':');
                if (colon == std::string::npos) continue;
                if (line.substr(0, colon).find("graph6") != std::string::npos) continue;
                std::string token;
                auto flush = [&] {
                    if (!token.empty()) {
                        const int v = std::stoi(token);
                        if (v >= 0 && v < g->g.order()) highlight.push_back(v);
                        token.clear();
                    }
                };
                for (std::size_t i = colon + 1; i < line.size(); ++i) {
                    if (std::isdigit(static_cast<unsigned char>(line[i])))
                        token.push_back(line[i]);
                    else
                        flush();
                }
                flush();
            }
        }
        *out_text = dup_string(to_dot(g->g, highlight));
        return SS_OK;
    });
}

int ss_graph_order(const ss_graph* g) { return g ? g->g.order() : -1; }

int ss_graph_size(const ss_graph* g) { return g ? g->g.size() : -1; }

ss_status ss_graph_named(const char* name, ss_graph** out) {
    if (auto s = need(name && out, "name/out")) return s;
    return guarded([&] {
        auto g = make_named(name);
        if (!g) return fail(SS_ERR_INVALID_ARGUMENT, std::string("unknown graph name: ") + name);
        *out = new ss_graph{std::move(*g)};
        return SS_OK;
    });
}

ss_status ss_generate(const char* family, const int* params, size_t n_params, ss_graph** out) {
    if (auto s = need(family && out && (params || n_params == 0), "family/params/out")) return s;
    return guarded([&] {
        const std::string fam = family;
        auto want = [&](size_t k) {
            if (n_params != k)
                throw input_error("family " + fam + " takes " + std::to_string(k) + " parameter(s)");
        };
        Graph g;
        if (fam == "theta") {
            want(1);
            g = k_theta(params[0]);
        } else if (fam == "prism") {
            want(1);
            g = k_prism(params[0]);
        } else if (fam == "skinny-ladder") {
            want(1);
            g = k_skinny_ladder(params[0]);
        } else if (fam == "gamma") {
            want(3);
            g = gamma(params[0], params[1], params[2]);
        } else if (fam == "twin-wheel") {
            want(1);
            g = long_twin_wheel(params[0]);
        } else if (fam == "creature") {
            want(5);
            g = k_creature(standard_creature_spec(params[0], params[1], params[2], params[3] != 0, params[4] != 0));
        } else {
            return fail(SS_ERR_INVALID_ARGUMENT, "unknown family: " + fam);
        }
        *out = new ss_graph{std::move(g)};
        return SS_OK;
    });
}

ss_status ss_subdivide(const ss_graph* g, const int* counts, size_t n_counts, ss_graph** out) {
    if (auto s = need(g && out && (counts || n_counts == 0), "graph/counts/out")) return s;
    return guarded([&] {
        std::vector<int> c(counts, counts + n_counts);
        *out = new ss_graph{subdivide(g->g, c)};
        return SS_OK;
    });
}

ss_status ss_isomorphic(const ss_graph* a, const ss_graph* b, int* out_isomorphic) {
    if (auto s = need(a && b && out_isomorphic, "graphs/out")) return s;
    return guarded([&] {
        *out_isomorphic = is_isomorphic(a->g, b->g) ? 1 : 0;
        return SS_OK;
    });
}

ss_status ss_minsep_count(const ss_graph* g, long long cap, long long* out_count, int* out_capped) {
    if (auto s = need(g && out_count && out_capped, "graph/out")) return s;
    return guarded([&] {
        SeparatorCount c = count_minimal_separators(g->g, cap);
        *out_count = c.count;
        *out_capped = c.capped ? 1 : 0;
        return SS_OK;
    });
}

ss_status ss_minsep_list(const ss_graph* g, long long cap, char** out_text, int* out_capped) {
    if (auto s = need(g && out_text && out_capped, "graph/out")) return s;
    return guarded([&] {
        SeparatorReport r = enumerate_minimal_separators(g->g, cap);
        std::ostringstream os;
        for (const auto& sep : r.separators) {
            os << '{';
            for (std::size_t i = 0; i < sep.size(); ++i) {
                if (i) os << ", ";
                os << sep[i];
            }
            os << "}\n";
        }
        *out_text = dup_string(os.str());
        *out_capped = r.capped ? 1 : 0;
        return SS_OK;
    });
}

ss_status ss_recognize(const ss_graph* g, const char* pattern, long long budget, int* out_present,
                       char** out_witness) {
    if (auto s = need(g && pattern && out_present, "graph/pattern/out")) return s;
    return guarded([&] {
        const std::string pat = pattern;
        if (budget <= 0) budget = kDefaultBudget;
        std::optional<Witness> witness;
        bool present = false;
        if (pat == "house-im") {
            auto r = has_house_im(g->g, budget);
            present = r.present;
            witness = std::move(r.witness);
        } else if (pat == "house-itm") {
            auto r = has_house_itm(g->g, budget);
            present = r.present;
            witness = std::move(r.witness);
        } else if (pat == "butterfly-im") {
            auto r = has_butterfly_im(g->g);
            present = r.has_value();
            if (r) witness = Witness{std::move(*r)};
        } else if (pat == "2p2-itm") {
            auto r = has_2p2_itm(g->g);
            present = r.has_value();
            if (r) witness = Witness{std::move(*r)};
        } else {
            return fail(SS_ERR_INVALID_ARGUMENT, "unknown recognizer pattern: " + pat);
        }
        *out_present = present ? 1 : 0;
        if (out_witness) *out_witness = witness ? dup_string(witness_to_text(*witness)) : nullptr;
        return SS_OK;
    });
}

ss_status ss_oracle_contains(const ss_graph* host, const ss_graph* pattern, const char* relation,
                             int* out_present, char** out_witness) {
    if (auto s = need(host && pattern && relation && out_present, "host/pattern/relation/out")) return s;
    return guarded([&] {
        const std::string rel = relation;
        std::string witness_text;
        bool present = false;
        if (rel == "induced-subgraph") {
            auto e = contains_induced_subgraph(host->g, pattern->g);
            present = e.has_value();
            if (e) witness_text = "embedding\n" + embedding_to_text(*e);
        } else if (rel == "induced-minor" || rel == "im") {
            auto m = contains_induced_minor(host->g, pattern->g);
            present = m.has_value();
            if (m) witness_text = "model\n" + model_to_text(*m);
        } else if (rel == "induced-topological-minor" || rel == "itm") {
            auto w = contains_induced_topological_minor(host->g, pattern->g);
            present = w.has_value();
            if (w) {
                std::ostringstream os;
                os << "subdivision\n";
                os << "subdivision-graph6: " << encode_graph6(w->subdivision) << '\n';
                os << "embedding:\n" << embedding_to_text(w->embedding);
                witness_text = os.str();
            }
        } else {
            return fail(SS_ERR_INVALID_ARGUMENT, "unknown relation: " + rel);
        }
        *out_present = present ? 1 : 0;
        if (out_witness) *out_witness = present ? dup_string(witness_text) : nullptr;
        return SS_OK;
    });
}

ss_status ss_oracle_fvs(const ss_graph* g, int* out_fvs) {
    if (auto s = need(g && out_fvs, "graph/out")) return s;
    return guarded([&] {
        *out_fvs = feedback_vertex_number(g->g);
        return SS_OK;
    });
}

ss_status ss_classify(const ss_graph* pattern, const char* relation, int* out_tame, char** out_justification) {
    if (auto s = need(pattern && relation && out_tame, "pattern/relation/out")) return s;
    return guarded([&] {
        auto rel = relation_from_name(relation);
        if (!rel) return fail(SS_ERR_INVALID_ARGUMENT, std::string("unknown relation: ") + relation);
        auto v = classify_dichotomy(pattern->g, *rel);
        *out_tame = v.tame ? 1 : 0;
        if (out_justification) *out_justification = dup_string(v.justification);
        return SS_OK;
    });
}

ss_status ss_experiment_feral_growth(const char* family, int k_min, int k_max, long long cap, uint64_t seed,
                                     char** out_csv, char** out_log, int* out_ok) {
    if (auto s = need(family && out_csv, "family/out")) return s;
    return guarded([&] {
        auto r = run_feral_growth(family, k_min, k_max, cap, seed);
        *out_csv = dup_string(r.csv);
        if (out_log) *out_log = dup_string(r.log);
        if (out_ok) *out_ok = r.pass ? 1 : 0;
        return SS_OK;
    });
}

ss_status ss_experiment_tame_profile(const char* filter, int n_min, int n_max, int samples, uint64_t seed,
                                     long long budget, long long cap, char** out_csv, char** out_log) {
    if (auto s = need(filter && out_csv, "filter/out")) return s;
    return guarded([&] {
        if (budget <= 0) budget = kDefaultBudget;
        auto r = run_tame_profile(filter, n_min, n_max, samples, seed, budget, cap);
        *out_csv = dup_string(r.csv);
        if (out_log) *out_log = dup_string(r.log);
        return SS_OK;
    });
}

ss_status ss_experiment_oracle_equivalence(int exhaustive_n, int random_n_min, int random_n_max, int samples,
                                           uint64_t seed, long long budget, char** out_csv, char** out_log,
                                           int* out_ok) {
    if (auto s = need(out_csv != nullptr, "out")) return s;
    return guarded([&] {
        if (budget <= 0) budget = kDefaultBudget;
        auto r = run_oracle_equivalence(exhaustive_n, random_n_min, random_n_max, samples, seed, budget);
        *out_csv = dup_string(r.csv);
        if (out_log) *out_log = dup_string(r.log);
        if (out_ok) *out_ok = r.pass ? 1 : 0;
        return SS_OK;
    });
}

ss_status ss_experiment_dichotomy_table(char** out_csv, char** out_log, int* out_ok) {
    if (auto s = need(out_csv != nullptr, "out")) return s;
    return guarded([&] {
        auto r = run_dichotomy_table();
        *out_csv = dup_string(r.csv);
        if (out_log) *out_log = dup_string(r.log);
        if (out_ok) *out_ok = r.pass ? 1 : 0;
        return SS_OK;
    });
}

} // extern "C"
