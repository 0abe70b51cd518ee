// sepscope command line front end. Talks to the library exclusively through
// the C API in sepscope/sepscope.h.

#include <sepscope/sepscope.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitAbsent = 0;
constexpr int kExitPresent = 1;
constexpr int kExitError = 2;

struct StringDeleter {
    void operator()(char* s) const { ss_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
    void operator()(ss_graph* g) const { ss_graph_free(g); }
};
using OwnedGraph = std::unique_ptr<ss_graph, GraphDeleter>;

[[noreturn]] void die(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(kExitError);
}

void check(ss_status s) {
    if (s != SS_OK) die(ss_last_error());
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) die("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) die("cannot write " + path);
    out << content;
}

OwnedGraph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_input(path);
    // trim trailing blank lines so one-line graph6 files parse cleanly
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.pop_back();
    ss_graph* g = nullptr;
    check(ss_graph_parse(text.c_str(), format.c_str(), &g));
    return OwnedGraph(g);
}

// a pattern argument is either a named graph or a file path
OwnedGraph load_pattern(const std::string& spec, const std::string& format) {
    ss_graph* g = nullptr;
    if (ss_graph_named(spec.c_str(), &g) == SS_OK) return OwnedGraph(g);
    return load_graph(spec, format);
}

std::string graph_id(const ss_graph* g) {
    char* text = nullptr;
    check(ss_graph_encode(g, "graph6", &text));
    OwnedString owned(text);
    return owned.get();
}

void emit_graph(const ss_graph* g, const std::string& out, const std::string& format) {
    char* text = nullptr;
    check(ss_graph_encode(g, format.c_str(), &text));
    OwnedString owned(text);
    std::string payload = owned.get();
    if (format == "graph6") payload += '\n';
    write_output(out, payload);
}

void maybe_write_dot(const ss_graph* g, const std::string& dot_path, const char* witness) {
    if (dot_path.empty()) return;
    char* text = nullptr;
    check(ss_graph_to_dot(g, witness, &text));
    OwnedString owned(text);
    write_output(dot_path, owned.get());
}

struct RecognizeNames {
    const char* relation;
    const char* pattern;
};

RecognizeNames split_pattern(const std::string& token) {
    if (token == "house-im") return {"induced-minor", "house"};
    if (token == "house-itm") return {"induced-topological-minor", "house"};
    if (token == "butterfly-im") return {"induced-minor", "butterfly"};
    if (token == "2p2-itm") return {"induced-topological-minor", "2p2"};
    die("unknown recognizer pattern: " + token);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sepscope: graph containment recognizers and minimal-separator lab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", ss_version());

    std::string format = "auto";
    std::uint64_t seed = 0;
    long long budget = 0; // 0: library default
    long long cap = -1;
    std::string out_path = "-";
    std::string witness_path;
    std::string dot_path;
    app.add_option("--format", format, "input graph format: graph6|edgelist|auto")->capture_default_str();
    app.add_option("--seed", seed, "random seed recorded in experiment output");
    app.add_option("--budget", budget, "search budget in nodes (0: default)");
    app.add_option("--cap", cap, "separator-count cap (-1: unlimited)");
    app.add_option("--out", out_path, "output path ('-': stdout)")->capture_default_str();
    app.add_option("--witness", witness_path, "write the witness here on a positive verdict");
    app.add_option("--dot", dot_path, "write a DOT rendering here (witness highlighted)");

    // ---- recognize ----
    auto* rec = app.add_subcommand("recognize", "run a polynomial recognizer");
    std::string rec_input, rec_pattern;
    rec->add_option("input", rec_input, "graph file ('-': stdin)")->required();
    rec->add_option("--pattern", rec_pattern, "house-im|house-itm|butterfly-im|2p2-itm")->required();

    // ---- generate ----
    auto* gen = app.add_subcommand("generate", "construct a family member or named graph");
    std::vector<std::string> gen_args;
    gen->add_option("family", gen_args,
                    "theta K | prism K | skinny-ladder K | gamma I J K | twin-wheel L | "
                    "creature K A B XC YC | named NAME | subdivision FILE C0 C1 ...")
        ->required()
        ->expected(-1);

    // ---- minsep ----
    auto* ms = app.add_subcommand("minsep", "count or list minimal separators");
    std::string ms_input;
    bool ms_list = false;
    ms->add_option("input", ms_input, "graph file ('-': stdin)")->required();
    ms->add_flag("--list", ms_list, "list the separators");

    // ---- oracle ----
    auto* orc = app.add_subcommand("oracle", "exhaustive desk-scale containment check");
    std::string orc_input, orc_pattern, orc_relation = "induced-minor";
    orc->add_option("input", orc_input, "host graph file ('-': stdin)")->required();
    orc->add_option("--pattern", orc_pattern, "pattern: named graph or file")->required();
    orc->add_option("--relation", orc_relation, "induced-subgraph|induced-minor|induced-topological-minor")
        ->capture_default_str();

    // ---- dichotomy ----
    auto* dic = app.add_subcommand("dichotomy", "classify a forbidden pattern as tame or feral");
    std::string dic_input, dic_relation = "both";
    dic->add_option("input", dic_input, "pattern graph: named graph or file")->required();
    dic->add_option("--relation", dic_relation, "im|itm|both")->capture_default_str();

    // ---- experiment ----
    auto* exp = app.add_subcommand("experiment", "run a lab experiment and emit CSV");
    std::string exp_tag;
    std::string exp_family = "theta", exp_filter = "butterfly-im-free";
    int exp_kmin = 3, exp_kmax = 8;
    int exp_nmin = 4, exp_nmax = 12, exp_samples = 100;
    int exp_exh = 5, exp_rmin = 7, exp_rmax = 9;
    exp->add_option("tag", exp_tag, "feral-growth|tame-profile|oracle-equivalence|dichotomy-table")->required();
    exp->add_option("--family", exp_family, "feral-growth family: theta|prism|creature|skinny-ladder")
        ->capture_default_str();
    exp->add_option("--filter", exp_filter, "tame-profile filter: butterfly-im-free|house-itm-free|none")
        ->capture_default_str();
    exp->add_option("--k-min", exp_kmin)->capture_default_str();
    exp->add_option("--k-max", exp_kmax)->capture_default_str();
    exp->add_option("--n-min", exp_nmin)->capture_default_str();
    exp->add_option("--n-max", exp_nmax)->capture_default_str();
    exp->add_option("--samples", exp_samples)->capture_default_str();
    exp->add_option("--exhaustive-n", exp_exh, "oracle-equivalence exhaustive sweep bound")->capture_default_str();
    exp->add_option("--random-min", exp_rmin)->capture_default_str();
    exp->add_option("--random-max", exp_rmax)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitError;
    }

    if (rec->parsed()) {
        OwnedGraph g = load_graph(rec_input, format);
        auto names = split_pattern(rec_pattern);
        int present = 0;
        char* wtext_raw = nullptr;
        check(ss_recognize(g.get(), rec_pattern.c_str(), budget, &present, &wtext_raw));
        OwnedString wtext(wtext_raw);
        std::string witness_ref;
        if (present && wtext && !witness_path.empty()) {
            write_output(witness_path, wtext.get());
            witness_ref = " " + witness_path;
        }
        std::cout << graph_id(g.get()) << ' ' << names.relation << ' ' << names.pattern << ' '
                  << (present ? "present" : "absent") << witness_ref << "\n";
        maybe_write_dot(g.get(), dot_path, present ? wtext.get() : nullptr);
        return present ? kExitPresent : kExitAbsent;
    }

    if (gen->parsed()) {
        if (gen_args.empty()) die("generate: missing family");
        const std::string family = gen_args[0];
        OwnedGraph g;
        if (family == "named") {
            if (gen_args.size() != 2) die("generate named NAME");
            ss_graph* raw = nullptr;
            check(ss_graph_named(gen_args[1].c_str(), &raw));
            g.reset(raw);
        } else if (family == "subdivision") {
            if (gen_args.size() < 2) die("generate subdivision FILE C0 C1 ...");
            OwnedGraph base = load_graph(gen_args[1], format);
            std::vector<int> counts;
            for (std::size_t i = 2; i < gen_args.size(); ++i) counts.push_back(std::stoi(gen_args[i]));
            ss_graph* raw = nullptr;
            check(ss_subdivide(base.get(), counts.data(), counts.size(), &raw));
            g.reset(raw);
        } else {
            std::vector<int> params;
            for (std::size_t i = 1; i < gen_args.size(); ++i) params.push_back(std::stoi(gen_args[i]));
            ss_graph* raw = nullptr;
            check(ss_generate(family.c_str(), params.data(), params.size(), &raw));
            g.reset(raw);
        }
        std::cerr << "n=" << ss_graph_order(g.get()) << " m=" << ss_graph_size(g.get()) << "\n";
        emit_graph(g.get(), out_path, out_path == "-" ? "graph6" : "graph6");
        maybe_write_dot(g.get(), dot_path, nullptr);
        return 0;
    }

    if (ms->parsed()) {
        OwnedGraph g = load_graph(ms_input, format);
        long long count = 0;
        int capped = 0;
        if (ms_list) {
            char* text = nullptr;
            check(ss_minsep_list(g.get(), cap, &text, &capped));
            OwnedString owned(text);
            write_output(out_path, owned.get());
            check(ss_minsep_count(g.get(), cap, &count, &capped));
        } else {
            check(ss_minsep_count(g.get(), cap, &count, &capped));
        }
        if (capped)
            std::cout << graph_id(g.get()) << " separators > " << (count - 1) << " (capped)\n";
        else
            std::cout << graph_id(g.get()) << " separators " << count << "\n";
        return 0;
    }

    if (orc->parsed()) {
        OwnedGraph host = load_graph(orc_input, format);
        OwnedGraph pattern = load_pattern(orc_pattern, format);
        int present = 0;
        char* wtext_raw = nullptr;
        check(ss_oracle_contains(host.get(), pattern.get(), orc_relation.c_str(), &present, &wtext_raw));
        OwnedString wtext(wtext_raw);
        std::string witness_ref;
        if (present && wtext && !witness_path.empty()) {
            write_output(witness_path, wtext.get());
            witness_ref = " " + witness_path;
        }
        std::cout << graph_id(host.get()) << ' ' << orc_relation << ' ' << graph_id(pattern.get()) << ' '
                  << (present ? "present" : "absent") << witness_ref << "\n";
        maybe_write_dot(host.get(), dot_path, present ? wtext.get() : nullptr);
        return present ? kExitPresent : kExitAbsent;
    }

    if (dic->parsed()) {
        OwnedGraph pattern = load_pattern(dic_input, format);
        std::vector<std::string> relations;
        if (dic_relation == "both")
            relations = {"induced-minor", "induced-topological-minor"};
        else
            relations = {dic_relation};
        for (const auto& rel : relations) {
            int tame = 0;
            char* just_raw = nullptr;
            check(ss_classify(pattern.get(), rel.c_str(), &tame, &just_raw));
            OwnedString just(just_raw);
            std::cout << graph_id(pattern.get()) << ' ' << rel << ' ' << (tame ? "tame" : "feral") << " ("
                      << just.get() << ")\n";
        }
        return 0;
    }

    if (exp->parsed()) {
        char* csv_raw = nullptr;
        char* log_raw = nullptr;
        int ok = 1;
        if (exp_tag == "feral-growth") {
            check(ss_experiment_feral_growth(exp_family.c_str(), exp_kmin, exp_kmax, cap, seed, &csv_raw,
                                             &log_raw, &ok));
        } else if (exp_tag == "tame-profile") {
            check(ss_experiment_tame_profile(exp_filter.c_str(), exp_nmin, exp_nmax, exp_samples, seed, budget,
                                             cap, &csv_raw, &log_raw));
        } else if (exp_tag == "oracle-equivalence") {
            check(ss_experiment_oracle_equivalence(exp_exh, exp_rmin, exp_rmax, exp_samples, seed, budget,
                                                   &csv_raw, &log_raw, &ok));
        } else if (exp_tag == "dichotomy-table") {
            check(ss_experiment_dichotomy_table(&csv_raw, &log_raw, &ok));
        } else {
            die("unknown experiment tag: " + exp_tag);
        }
        OwnedString csv(csv_raw), log(log_raw);
        write_output(out_path, csv.get());
        if (log) std::cerr << log.get();
        if (!ok) {
            std::cerr << "experiment reported violations\n";
            return kExitError;
        }
        return 0;
    }

    return kExitError;
}
