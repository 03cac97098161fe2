#include "edgestab/cli.hpp"

#include "edgestab/io.hpp"
#include "edgestab/report.hpp"
#include "edgestab/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#ifndef EDGESTAB_DEFAULT_CENSUS_DIR
#define EDGESTAB_DEFAULT_CENSUS_DIR ""
#endif

namespace edgestab {

namespace {

class BadInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string input;
    std::string format = "graph6";
    bool json = false;
    bool timings = false;
    std::uint64_t budget = SearchBudget::unlimited;

    bool bound = false;
    std::string prune = "on";
    std::string edges;

    std::string family;
    std::vector<int> params;
    double probability = 0.5;
    std::optional<std::uint64_t> seed;

    std::string suite = "all";
    std::string census = EDGESTAB_DEFAULT_CENSUS_DIR;
};

class Stopwatch {
public:
    explicit Stopwatch(bool enabled) : enabled_(enabled) {}

    template <typename Fn>
    auto time(const std::string& phase, Fn&& fn)
    {
        const auto start = std::chrono::steady_clock::now();
        auto result = fn();
        if (enabled_)
            phases_[phase] += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result;
    }

    std::optional<std::map<std::string, double>> phases() const
    {
        if (!enabled_)
            return std::nullopt;
        return phases_;
    }

private:
    bool enabled_;
    std::map<std::string, double> phases_;
};

std::string read_all(std::istream& in)
{
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct LoadedGraph {
    Graph graph;
    InputDescriptor input;
};

LoadedGraph load_graph(const Options& opt, std::istream& in)
{
    InputDescriptor input;
    input.format = opt.format;
    std::string text;
    if (opt.input.empty() || opt.input == "-") {
        input.kind = InputDescriptor::Kind::stdin_stream;
        text = read_all(in);
    } else {
        input.kind = InputDescriptor::Kind::file;
        input.path = opt.input;
        std::ifstream file(opt.input);
        if (!file)
            throw BadInput("cannot open " + opt.input);
        text = read_all(file);
    }

    if (opt.format == "edgelist")
        return {parse_edge_list(text), input};

    std::vector<std::string> lines;
    std::istringstream stream(text);
    for (std::string line; std::getline(stream, line);) {
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.pop_back();
        if (!line.empty())
            lines.push_back(line);
    }
    if (lines.size() != 1)
        throw BadInput("expected exactly one graph6 line, got " + std::to_string(lines.size()));
    return {parse_graph6(lines.front()), input};
}

EdgeSet parse_edge_option(const std::string& text)
{
    EdgeSet edges;
    std::istringstream stream(text);
    for (std::string item; std::getline(stream, item, ',');) {
        if (item.empty())
            continue;
        const auto dash = item.find('-');
        if (dash == std::string::npos)
            throw BadInput("edge '" + item + "' is not of the form u-v");
        try {
            std::size_t used_u = 0;
            std::size_t used_v = 0;
            const std::string left = item.substr(0, dash);
            const std::string right = item.substr(dash + 1);
            const int u = std::stoi(left, &used_u);
            const int v = std::stoi(right, &used_v);
            if (used_u != left.size() || used_v != right.size())
                throw BadInput("edge '" + item + "' is not of the form u-v");
            edges.push_back(make_edge(u, v));
        } catch (const std::logic_error&) {
            throw BadInput("edge '" + item + "' is not of the form u-v");
        }
    }
    return edges;
}

void emit(const Options& opt, const ReportDocument& doc, std::ostream& out)
{
    if (opt.json) {
        nlohmann::ordered_json j = doc;
        out << j.dump(2) << '\n';
    } else {
        out << render_text(doc);
    }
}

int run_chi(const Options& opt, std::istream& in, std::ostream& out)
{
    Stopwatch clock(opt.timings);
    SearchBudget budget(opt.budget);
    auto loaded = clock.time("parse", [&] { return load_graph(opt, in); });
    ReportDocument doc = clock.time("analyze", [&] { return describe_graph(loaded.graph, loaded.input, budget); });
    doc.command = "chi";
    doc.chi = clock.time("chi", [&] { return chromatic_index(loaded.graph, budget); });
    if (!loaded.graph.empty())
        doc.edge_class = *doc.chi > loaded.graph.max_degree() ? EdgeClass::class2 : EdgeClass::class1;
    doc.timings = clock.phases();
    emit(opt, doc, out);
    return exit_ok;
}

// The constructive set of whichever result applies, as in `mitigate`.
StabilitySection constructive(const Graph& g, SearchBudget& budget)
{
    if (is_bipartite(g)) {
        const auto r = bipartite_es_set(g, budget);
        return {r.es, true, StabilityMethod::bipartite_formula, r.witness.edges, r.witness.chi_after};
    }
    if (classify(g, budget) == EdgeClass::class2) {
        const auto set = class2_bound_set(g, budget);
        return {set.size(), false, StabilityMethod::class2_bound, set.edges, set.chi_after};
    }
    const auto set = general_bound_set(g, budget);
    return {set.size(), false, StabilityMethod::general_bound, set.edges, set.chi_after};
}

int run_stability(const std::string& command, const Options& opt, std::istream& in, std::ostream& out)
{
    Stopwatch clock(opt.timings);
    SearchBudget budget(opt.budget);
    auto loaded = clock.time("parse", [&] { return load_graph(opt, in); });
    const Graph& g = loaded.graph;
    if (g.empty())
        throw BadInput("the stability index needs a graph with at least one edge");

    ReportDocument doc = clock.time("analyze", [&] { return describe_graph(g, loaded.input, budget); });
    doc.command = command;
    doc.chi = clock.time("chi", [&] { return chromatic_index(g, budget); });
    doc.edge_class = *doc.chi > g.max_degree() ? EdgeClass::class2 : EdgeClass::class1;

    if (command == "es" && !opt.bound) {
        const auto report = clock.time("es", [&] { return exact_es(g, ExactOptions{opt.prune == "on"}, budget); });
        doc.stability = StabilitySection{report.es, true, StabilityMethod::exact, report.witness.edges,
            report.witness.chi_after};
        compare_bounds(doc, report.es);
    } else {
        doc.stability = clock.time("es", [&] { return constructive(g, budget); });
        if (doc.stability->exact)
            compare_bounds(doc, doc.stability->value);
    }
    doc.timings = clock.phases();
    emit(opt, doc, out);
    return exit_ok;
}

int run_normalize(const Options& opt, std::istream& in, std::ostream& out)
{
    Stopwatch clock(opt.timings);
    SearchBudget budget(opt.budget);
    auto loaded = clock.time("parse", [&] { return load_graph(opt, in); });
    const Graph& g = loaded.graph;
    if (g.empty())
        throw BadInput("normalization needs a graph with at least one edge");
    const EdgeSet edges = parse_edge_option(opt.edges);

    ReportDocument doc = clock.time("analyze", [&] { return describe_graph(g, loaded.input, budget); });
    doc.command = "normalize";
    doc.chi = chromatic_index(g, budget);
    doc.edge_class = *doc.chi > g.max_degree() ? EdgeClass::class2 : EdgeClass::class1;
    const auto result = clock.time("normalize", [&] { return normalize_min_mitigating(g, edges, budget); });
    doc.normalized = result.set;
    doc.trace = result.trace;
    doc.timings = clock.phases();
    emit(opt, doc, out);
    return exit_ok;
}

bool is_random(Family f) { return f == Family::random || f == Family::random_bipartite; }

int run_gen(const Options& opt, std::ostream& out)
{
    FamilySpec spec;
    try {
        spec.family = family_from_string(opt.family);
    } catch (const std::invalid_argument&) {
        throw BadInput("unknown family '" + opt.family + "'");
    }
    spec.params = opt.params;
    spec.probability = opt.probability;
    if (is_random(spec.family)) {
        if (opt.json && !opt.seed)
            throw BadInput("random families need --seed in --json mode");
        spec.seed = opt.seed.value_or(0);
    }
    const Graph g = generate(spec);

    if (opt.json) {
        ReportDocument doc;
        doc.version = version_string();
        doc.command = "gen";
        doc.input.kind = InputDescriptor::Kind::family;
        doc.input.family = spec;
        doc.order = g.order();
        doc.size = g.size();
        doc.graph6 = write_graph6(g);
        doc.max_degree = g.max_degree();
        emit(opt, doc, out);
    } else if (opt.format == "edgelist") {
        out << write_edge_list(g);
    } else {
        out << write_graph6(g) << '\n';
    }
    return exit_ok;
}

int run_verify(const Options& opt, std::ostream& out)
{
    VerifyOptions vopt;
    vopt.census_dir = opt.census;
    if (opt.seed)
        vopt.seed = *opt.seed;
    try {
        suite_criteria(opt.suite);
    } catch (const std::invalid_argument& ex) {
        throw BadInput(ex.what());
    }

    const auto results = run_suite(opt.suite, vopt, [&](const CriterionResult& r) {
        if (!opt.json)
            out << format_result(r) << std::endl;
    });
    bool ok = true;
    auto list = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        ok = ok && r.passed;
        nlohmann::ordered_json entry = {{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
        if (opt.timings)
            entry["seconds"] = r.seconds;
        list.push_back(std::move(entry));
    }
    if (opt.json) {
        nlohmann::ordered_json doc = {{"tool", "edgestab"}, {"version", version_string()}, {"command", "verify"},
            {"suite", opt.suite}, {"passed", ok}, {"criteria", std::move(list)}};
        out << doc.dump(2) << '\n';
    } else {
        out << (ok ? "all criteria passed" : "some criteria FAILED") << '\n';
    }
    return ok ? exit_ok : exit_verify_failed;
}

void add_input_options(CLI::App* cmd, Options& opt)
{
    cmd->add_option("--input,-i", opt.input, "Graph file (default: stdin)");
    cmd->add_option("--format,-f", opt.format, "Input format")->check(CLI::IsMember({"graph6", "edgelist"}));
}

void add_output_options(CLI::App* cmd, Options& opt)
{
    cmd->add_flag("--json", opt.json, "Print a JSON report");
    cmd->add_flag("--timings", opt.timings, "Include wall-clock timings");
    cmd->add_option("--budget", opt.budget, "Maximum search steps before giving up");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Edge colorings, chromatic index and chromatic edge stability", "edgestab"};
    app.set_version_flag("--version", version_string());
    app.require_subcommand(1);

    auto* chi = app.add_subcommand("chi", "Chromatic index and class");
    add_input_options(chi, opt);
    add_output_options(chi, opt);

    auto* es = app.add_subcommand("es", "Chromatic edge stability index");
    add_input_options(es, opt);
    add_output_options(es, opt);
    auto* exact_flag = es->add_flag("--exact", "Exhaustive search (default)");
    auto* bound_flag = es->add_flag("--bound", opt.bound, "Constructive upper bound instead of search");
    exact_flag->excludes(bound_flag);
    es->add_option("--prune", opt.prune, "Restrict the search to edges near the maximum degree")
        ->check(CLI::IsMember({"on", "off"}));

    auto* mitigate = app.add_subcommand("mitigate", "Constructive mitigating set from the applicable bound");
    add_input_options(mitigate, opt);
    add_output_options(mitigate, opt);

    auto* normalize = app.add_subcommand("normalize", "Move a minimum mitigating set next to the maximum degree");
    add_input_options(normalize, opt);
    add_output_options(normalize, opt);
    normalize->add_option("--edges", opt.edges, "Candidate set as u-v,u-v,...")->required();

    auto* gen = app.add_subcommand("gen", "Print a graph of a named family");
    gen->add_option("family", opt.family, "Family name")->required();
    gen->add_option("params", opt.params, "Integer parameters");
    gen->add_option("--p", opt.probability, "Edge probability for random families")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", opt.seed, "Seed for random families");
    gen->add_option("--format,-f", opt.format, "Output format")->check(CLI::IsMember({"graph6", "edgelist"}));
    gen->add_flag("--json", opt.json, "Print a JSON report");

    auto* verify = app.add_subcommand("verify", "Run an acceptance suite");
    verify->add_option("suite", opt.suite, "Suite name")->check(CLI::IsMember(suite_names()));
    verify->add_option("--census", opt.census, "Directory with graphs<n>.g6 files");
    verify->add_option("--seed", opt.seed, "Base seed for the random samples");
    verify->add_flag("--json", opt.json, "Print a JSON summary");
    verify->add_flag("--timings", opt.timings, "Include per-criterion timings in --json output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForVersion&) {
        out << version_string() << '\n';
        return exit_ok;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_bad_input;
    }

    try {
        if (*chi)
            return run_chi(opt, in, out);
        if (*es)
            return run_stability("es", opt, in, out);
        if (*mitigate)
            return run_stability("mitigate", opt, in, out);
        if (*normalize)
            return run_normalize(opt, in, out);
        if (*gen)
            return run_gen(opt, out);
        return run_verify(opt, out);
    } catch (const BudgetExceeded& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_budget;
    } catch (const NotMinimumError& ex) {
        err << "error: " << ex.what() << "\nsmaller mitigating set:";
        for (const auto& e : ex.smaller().edges)
            err << ' ' << to_string(e);
        err << '\n';
        return exit_bad_input;
    } catch (const std::invalid_argument& ex) {
        // Parse errors, graph errors and unmet preconditions.
        err << "error: " << ex.what() << '\n';
        return exit_bad_input;
    }
}

} // namespace edgestab
