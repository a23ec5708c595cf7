#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "twomis/graph_io.hpp"
#include "twomis/report.hpp"
#include "twomis/verify.hpp"

namespace {

using namespace twomis;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitStrategy = 4;
constexpr int kExitCounterexample = 5;

std::string read_stream(std::istream& in) {
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// input is a path, "-" for stdin, or an inline graph6 line
std::vector<Graph> load_input(const std::string& input, const std::string& format) {
    if (format == "edges") {
        if (input == "-") return {parse_edge_list(read_stream(std::cin))};
        std::ifstream f(input);
        if (!f) throw ParseError("cannot open input file: " + input);
        return {parse_edge_list(read_stream(f))};
    }
    if (input == "-") return parse_graph6_lines(std::cin);
    if (std::filesystem::exists(input)) return read_graph6_file(input);
    return {parse_graph6(input)};
}

struct CapFlags {
    int max_n = 30;
    std::size_t max_omega = 1u << 20;
    double timeout_seconds = 0.0;

    Limits to_limits() const {
        Limits limits;
        limits.max_n = max_n;
        limits.max_sets = max_omega;
        if (timeout_seconds > 0.0)
            limits.deadline = std::chrono::steady_clock::now() +
                              std::chrono::milliseconds(
                                  static_cast<long long>(timeout_seconds * 1000.0));
        return limits;
    }
};

void add_cap_flags(CLI::App* cmd, CapFlags& caps) {
    cmd->add_option("--max-n", caps.max_n, "enumeration cap on vertex count");
    cmd->add_option("--max-omega", caps.max_omega, "cap on enumerated set count");
    cmd->add_option("--timeout-seconds", caps.timeout_seconds, "soft time budget");
}

int cmd_analyze(const std::string& input, const std::string& format, const CapFlags& caps,
                bool as_json, bool as_dot) {
    std::vector<Graph> graphs = load_input(input, format);
    Limits limits = caps.to_limits();
    bool partial = false;
    Json all = Json::array();
    for (const Graph& g : graphs) {
        if (as_dot) {
            AnalysisReport rep = analyze(g, limits);
            std::vector<VertexSet> highlight;
            if (rep.disjoint_mis && rep.disjoint_mis->yes)
                highlight = {rep.disjoint_mis->set_a, rep.disjoint_mis->set_b};
            std::cout << to_dot(g, highlight);
            partial = partial || !rep.skipped.empty();
            continue;
        }
        AnalysisReport rep = analyze(g, limits);
        partial = partial || !rep.skipped.empty();
        if (as_json) all.push_back(analysis_json(rep));
        else std::cout << analysis_text(rep);
    }
    if (as_json && !as_dot)
        std::cout << (all.size() == 1 ? all.front().dump(2) : all.dump(2)) << "\n";
    return partial ? kExitCap : kExitOk;
}

int cmd_decide(const std::string& input, const std::string& format, const std::string& strategy,
               const CapFlags& caps) {
    std::vector<Graph> graphs = load_input(input, format);
    if (graphs.size() != 1) throw ParseError("decide expects exactly one graph");
    Limits limits = caps.to_limits();
    Certificate cert = decide(graphs.front(), parse_strategy(strategy), limits);
    bool valid = validate_decision(graphs.front(), cert, limits);
    Json j = certificate_json(cert);
    j["graph6"] = encode_graph6(graphs.front());
    j["certificate_valid"] = valid;
    std::cout << j.dump(2) << "\n";
    if (!valid) {
        std::cerr << "certificate failed round-trip validation\n";
        return kExitInternal;
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, const VerifyOptions& options, bool as_json) {
    std::vector<SuiteResult> results = run_verify(suite, options);
    bool pass = true;
    for (const SuiteResult& r : results) pass = pass && r.pass();
    if (as_json) {
        std::cout << verify_json(results, options).dump(2) << "\n";
    } else {
        for (const SuiteResult& r : results) {
            std::cout << (r.pass() ? "PASS " : "FAIL ") << r.suite << " (" << r.checks
                      << " checks)\n";
            for (const std::string& f : r.failures) std::cout << "  failure: " << f << "\n";
            for (const std::string& n : r.notes) std::cout << "  note: " << n << "\n";
        }
    }
    return pass ? kExitOk : kExitCounterexample;
}

int cmd_generate(const std::vector<std::string>& args) {
    if (args.empty()) throw std::invalid_argument("generate: missing family");
    std::size_t at = 0;
    auto next_int = [&](const char* what) {
        if (at >= args.size()) throw std::invalid_argument(std::string("generate: missing ") + what);
        return std::stoi(args[at++]);
    };
    std::string family = args[at++];
    bool pendant = false, by_k2 = false;
    if (family == "corona-k1" || family == "corona-k2") {
        pendant = family == "corona-k1";
        by_k2 = family == "corona-k2";
        if (at >= args.size()) throw std::invalid_argument("generate: missing base family");
        family = args[at++];
    }
    Graph g;
    if (family == "path") g = path_graph(next_int("n"));
    else if (family == "cycle") g = cycle_graph(next_int("n"));
    else if (family == "complete") g = complete_graph(next_int("n"));
    else if (family == "complete-bipartite") {
        int p = next_int("p");
        g = complete_bipartite(p, next_int("q"));
    } else if (family == "star") g = star_graph(next_int("p"));
    else if (family == "friendship") g = friendship_graph(next_int("q"));
    else if (family == "empty") g = empty_graph(next_int("n"));
    else throw std::invalid_argument("generate: unknown family '" + family + "'");
    if (pendant) g = corona(g, complete_graph(1));
    if (by_k2) g = corona(g, complete_graph(2));
    std::cout << encode_graph6(g) << "\n";
    return kExitOk;
}

SearchConfig parse_search_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file: " + path);
    SearchConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    std::string output;
    while (std::getline(in, line)) {
        ++lineno;
        std::replace(line.begin(), line.end(), '=', ' ');
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key[0] == '#') continue;
        std::string value;
        if (!(ls >> value))
            throw ParseError("config: missing value on line " + std::to_string(lineno));
        if (key == "family") cfg.family = value;
        else if (key == "catalog") cfg.catalog_path = value;
        else if (key == "nmax") cfg.nmax = std::stoi(value);
        else if (key == "p") cfg.edge_probability = std::stod(value);
        else if (key == "budget") cfg.budget = std::stoull(value);
        else if (key == "seed") cfg.seed = std::stoull(value);
        else if (key == "workers") cfg.workers = std::stoi(value);
        else if (key == "output") cfg.output_path = value;
        else throw ParseError("config: unknown key '" + key + "' on line " +
                              std::to_string(lineno));
    }
    if (cfg.family.empty()) throw ParseError("config: missing 'family'");
    return cfg;
}

int cmd_search(const std::string& config_path, const CapFlags& caps) {
    SearchConfig cfg = parse_search_config(config_path);
    SearchReport report = conjecture_search(cfg, caps.to_limits());
    Json j;
    j["command"] = "search";
    j["family"] = report.family;
    j["examined"] = report.examined;
    j["edge_alpha_critical"] = report.critical;
    j["counterexamples"] = report.counterexamples;
    j["pass"] = report.counterexamples.empty();
    std::string text = j.dump(2) + "\n";
    if (!cfg.output_path.empty()) {
        std::ofstream out(cfg.output_path);
        if (!out) throw ParseError("cannot write output file: " + cfg.output_path);
        out << text;
    }
    std::cout << text;
    return report.counterexamples.empty() ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact decisions and certificates for disjoint maximum independent sets"};
    app.require_subcommand(1);

    std::string input = "-", format = "g6", strategy = "auto", suite, config_path;
    bool as_json = false, as_dot = false;
    CapFlags caps;
    std::vector<std::string> generate_args;
    VerifyOptions verify_options;

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "full structural report for graphs");
    analyze_cmd->add_option("input", input, "file, '-' for stdin, or inline graph6");
    analyze_cmd->add_option("--format", format, "g6 | edges")
        ->check(CLI::IsMember({"g6", "edges"}));
    analyze_cmd->add_flag("--json", as_json, "emit JSON");
    analyze_cmd->add_flag("--dot", as_dot, "emit DOT with the disjoint pair highlighted");
    add_cap_flags(analyze_cmd, caps);

    CLI::App* decide_cmd = app.add_subcommand("decide", "disjoint-MIS decision with certificate");
    decide_cmd->add_option("input", input, "file, '-' for stdin, or inline graph6");
    decide_cmd->add_option("--format", format, "g6 | edges")
        ->check(CLI::IsMember({"g6", "edges"}));
    decide_cmd->add_option("--strategy", strategy, "auto | omega-pairs | condition-ii | unicyclic")
        ->check(CLI::IsMember({"auto", "omega-pairs", "condition-ii", "unicyclic"}));
    add_cap_flags(decide_cmd, caps);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a theorem property suite");
    verify_cmd->add_option("suite", suite, "berge | five-equivalences | shedding | trees | "
                                           "unicyclic | ke | corona | schaudt | conjecture | all")
        ->required();
    verify_cmd->add_option("--nmax", verify_options.nmax, "override the suite's size bound");
    verify_cmd->add_option("--seed", verify_options.seed, "random seed");
    verify_cmd->add_option("--samples", verify_options.samples, "random sample count");
    verify_cmd->add_option("--workers", verify_options.workers, "parallel workers (0 = all)");
    verify_cmd->add_option("--catalog", verify_options.catalog_path, "graph6 catalog file");
    verify_cmd->add_flag("--json", as_json, "emit JSON summary");

    CLI::App* generate_cmd = app.add_subcommand("generate", "emit graph6 for a named family");
    generate_cmd->add_option("args", generate_args,
                             "family and parameters, e.g. 'cycle 5' or 'corona-k1 cycle 5'");

    CLI::App* search_cmd = app.add_subcommand("search", "conjecture counterexample search");
    search_cmd->add_option("config", config_path, "flat key-value config file")->required();
    add_cap_flags(search_cmd, caps);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(input, format, caps, as_json, as_dot);
        if (decide_cmd->parsed()) return cmd_decide(input, format, strategy, caps);
        if (verify_cmd->parsed()) return cmd_verify(suite, verify_options, as_json);
        if (generate_cmd->parsed()) return cmd_generate(generate_args);
        if (search_cmd->parsed()) return cmd_search(config_path, caps);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const StrategyMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStrategy;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
