// multilin: classify, formulate, solve, verify and generate binary polynomial
// optimization instances.

#include "multilin/acyclicity.hpp"
#include "multilin/error.hpp"
#include "multilin/extform.hpp"
#include "multilin/instance_io.hpp"
#include "multilin/pipeline.hpp"
#include "multilin/relaxations.hpp"
#include "multilin/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace multilin;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kTestFailure = 1;
constexpr int kUnexpected = 70;

struct Options {
    std::string path;
    std::string strategy = "auto";
    std::string kind;
    std::string suite;
    std::string out;
    std::string cls;
    int n = 0;
    int m = 0;
    int r = 0;
    std::uint64_t seed = 0;
    int max_rounds = 100;
    int rank_cap = -1;
    bool json = false;
    bool decimal = false;
    bool timing = false;
    bool quiet = false;
};

Limits limits_for(const Options& o) {
    Limits limits = Limits::defaults();
    if (o.rank_cap >= 0) limits.flower_rank_cap = o.rank_cap;
    return limits;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json flags_json(const AcyclicityReport& r) {
    return {{"berge", r.berge}, {"gamma", r.gamma}, {"beta", r.beta}, {"alpha", r.alpha}};
}

std::string node_list(const Hypergraph& g, const std::vector<Node>& order) {
    std::string out;
    for (std::size_t i = 0; i < order.size(); ++i) out += (i ? "," : "") + g.name(order[i]);
    return out;
}

std::string set_list(const Hypergraph& g, const std::vector<NodeSet>& sets) {
    std::string out;
    for (std::size_t i = 0; i < sets.size(); ++i) out += (i ? " " : "") + g.set_label(sets[i]);
    return out;
}

int cmd_classify(const Options& o) {
    const auto doc = read_instance_file(o.path);
    const Hypergraph& g = doc.instance.graph;
    const auto r = classify(g);
    if (o.json) {
        Json j{{"class", r.strongest_class()}, {"summary", r.summary()}, {"flags", flags_json(r)}};
        if (r.berge_cycle) j["berge_cycle"] = r.berge_cycle->describe(g);
        if (r.gamma_cycle) j["gamma_cycle"] = r.gamma_cycle->describe(g);
        if (r.beta_cycle) j["beta_cycle"] = r.beta_cycle->describe(g);
        if (r.beta) j["nest_point_order"] = node_list(g, r.nest_point_order);
        if (r.rip_ordering) j["rip_ordering"] = set_list(g, r.rip_ordering->edges);
        if (!r.alpha) j["gyo_residue"] = set_list(g, r.gyo_residue);
        std::cout << j.dump() << '\n';
        return 0;
    }
    std::cout << "berge-acyclic: " << yes_no(r.berge) << '\n'
              << "gamma-acyclic: " << yes_no(r.gamma) << '\n'
              << "beta-acyclic: " << yes_no(r.beta) << '\n'
              << "alpha-acyclic: " << yes_no(r.alpha) << '\n';
    if (r.berge_cycle) std::cout << "berge-cycle: " << r.berge_cycle->describe(g) << '\n';
    if (r.gamma_cycle) std::cout << "gamma-cycle: " << r.gamma_cycle->describe(g) << '\n';
    if (r.beta_cycle) std::cout << "beta-cycle: " << r.beta_cycle->describe(g) << '\n';
    if (r.beta) std::cout << "nest-point-order: " << node_list(g, r.nest_point_order) << '\n';
    if (r.rip_ordering) std::cout << "rip-ordering: " << set_list(g, r.rip_ordering->edges) << '\n';
    if (!r.alpha) std::cout << "gyo-residue: " << set_list(g, r.gyo_residue) << '\n';
    std::cout << "class: " << r.summary() << '\n';
    return 0;
}

ExtendedFormulation build(const std::string& kind, const Hypergraph& g, const Limits& limits) {
    if (kind == "std") {
        ExtendedFormulation ef;
        ef.polyhedron = standard_linearization(g);
        ef.original_vars = ef.polyhedron.variables();
        return ef;
    }
    if (kind == "flower") {
        ExtendedFormulation ef;
        ef.polyhedron = flower_relaxation(g, limits);
        ef.original_vars = ef.polyhedron.variables();
        return ef;
    }
    if (kind == "beta") return beta_ef(g, limits);
    if (kind == "alpha") return alpha_ef(g, limits);
    if (kind == "junction") return junction_ef(g, limits);
    throw ArgumentError("unknown formulation kind '" + kind + "' (std, flower, beta, alpha, junction)");
}

int cmd_formulate(const Options& o) {
    const auto doc = read_instance_file(o.path);
    const Instance& inst = doc.instance;
    const auto limits = limits_for(o);
    const auto ef = build(o.kind, inst.graph, limits);
    auto objective = lifted_objective(inst);
    objective.resize(ef.polyhedron.dimension());

    LpExportOptions lp_options;
    lp_options.decimal = o.decimal;
    lp_options.title = "multilin " + o.kind + " formulation";
    std::ostringstream text;
    write_lp(text, ef.polyhedron, objective, lp_options);
    std::ostream* census_out = &std::cout;
    if (o.out.empty() || o.out == "-") {
        std::cout << text.str();
        census_out = &std::cerr;
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!file) throw IoError("cannot write '" + o.out + "'");
        file << text.str();
        if (!file) throw IoError("write to '" + o.out + "' failed");
    }
    const auto census = ef.polyhedron.census();
    if (o.json) {
        *census_out << Json{{"kind", o.kind},
                            {"variables", census.variables},
                            {"inequalities", census.inequalities},
                            {"equations", census.equations},
                            {"max_row_nonzeros", census.max_row_nonzeros},
                            {"aux_variables", ef.aux_vars.size()}}
                           .dump()
                    << '\n';
    } else {
        *census_out << "kind " << o.kind << '\n' << census_text(census) << "aux_variables " << ef.aux_vars.size() << '\n';
    }
    return 0;
}

int cmd_solve(const Options& o) {
    const auto doc = read_instance_file(o.path);
    const Instance& inst = doc.instance;
    const Hypergraph& g = inst.graph;
    const auto strategy = parse_strategy(o.strategy);
    const auto result = solve(inst, strategy, limits_for(o), o.max_rounds);

    Json assignment = Json::object();
    if (result.solution) {
        for (std::size_t i = 0; i < g.node_count(); ++i) {
            assignment[g.name(g.nodes()[i])] = (*result.solution)[i] == 1 ? 1 : 0;
        }
    }
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
    if (o.json) {
        Json j{{"strategy", o.strategy},
               {"formulation", result.formulation},
               {"class", result.classification.strongest_class()},
               {"flags", flags_json(result.classification)},
               {"value", to_string(result.value)},
               {"certificate", to_string(result.certificate)}};
        if (result.lp_bound) j["lp_bound"] = to_string(*result.lp_bound);
        if (result.solution) j["solution"] = assignment;
        j["stats"] = {{"variables", result.stats.variables},
                      {"inequalities", result.stats.inequalities},
                      {"equations", result.stats.equations},
                      {"max_row_nonzeros", result.stats.max_row_nonzeros},
                      {"lp_pivots", result.stats.lp_pivots},
                      {"cut_rounds", result.stats.cut_rounds},
                      {"cuts_added", result.stats.cuts_added}};
        if (o.timing) j["stats"]["wall_seconds"] = result.stats.wall_seconds;
        j["warnings"] = result.warnings;
        std::cout << j.dump() << '\n';
        return 0;
    }
    std::cout << "class: " << result.classification.summary() << '\n'
              << "formulation: " << result.formulation << '\n'
              << "value: " << to_string(result.value) << '\n'
              << "certificate: " << to_string(result.certificate) << '\n';
    if (result.lp_bound) std::cout << "lp_bound: " << to_string(*result.lp_bound) << '\n';
    if (result.solution) {
        std::cout << "solution:";
        for (const auto& [name, value] : assignment.items()) std::cout << ' ' << name << '=' << value.get<int>();
        std::cout << '\n';
    }
    std::cout << "variables: " << result.stats.variables << '\n'
              << "inequalities: " << result.stats.inequalities << '\n'
              << "equations: " << result.stats.equations << '\n'
              << "lp_pivots: " << result.stats.lp_pivots << '\n'
              << "cut_rounds: " << result.stats.cut_rounds << '\n'
              << "cuts_added: " << result.stats.cuts_added << '\n';
    if (o.timing) std::cout << "wall_seconds: " << result.stats.wall_seconds << '\n';
    return 0;
}

int cmd_verify(const Options& o) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), o.suite) == names.end()) {
        throw ArgumentError("unknown suite '" + o.suite + "'");
    }
    auto observe = [&](const CaseResult& c) {
        if (o.json) {
            std::cout << Json{{"case", c.name}, {"passed", c.passed}, {"detail", c.detail}}.dump() << '\n';
        } else if (!c.passed) {
            std::cout << "FAIL " << c.name << ": " << c.detail << '\n';
        } else if (!o.quiet) {
            std::cout << "PASS " << c.name << '\n';
        }
        std::cout.flush();
    };
    bool all = true;
    for (const auto& report : run_suite(o.suite, limits_for(o), observe)) {
        all = all && report.passed();
        if (o.json) {
            std::cout << Json{{"suite", report.suite},
                              {"cases", report.cases.size()},
                              {"failures", report.failures()},
                              {"passed", report.passed()}}
                             .dump()
                      << '\n';
        } else {
            std::cout << report.summary() << '\n';
        }
    }
    return all ? 0 : kTestFailure;
}

int cmd_gen(const Options& o) {
    const auto cls = parse_graph_class(o.cls);
    InstanceDocument doc;
    doc.instance = generate_instance(cls, o.n, o.m, o.r, o.seed);
    doc.meta = {{"class", o.cls},
                {"n", std::to_string(o.n)},
                {"m", std::to_string(o.m)},
                {"r", std::to_string(o.r)},
                {"seed", std::to_string(o.seed)}};
    const std::string manifest = "class=" + o.cls + " n=" + std::to_string(o.n) + " m=" + std::to_string(o.m) +
                                 " r=" + std::to_string(o.r) + " seed=" + std::to_string(o.seed);
    if (o.out.empty() || o.out == "-") {
        write_instance(std::cout, doc);
        std::cerr << "manifest: " << manifest << '\n';
    } else {
        write_instance_file(o.out, doc);
        std::cout << "manifest: " << manifest << " file=" << o.out << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multilin: acyclicity-aware formulations for binary polynomial optimization"};
    app.require_subcommand(1);
    Options o;

    auto* classify_cmd = app.add_subcommand("classify", "Report the acyclicity degree of an instance's hypergraph");
    classify_cmd->add_option("path", o.path, "Instance file")->required();
    classify_cmd->add_flag("--json", o.json, "One JSON record instead of text");

    auto* formulate_cmd = app.add_subcommand("formulate", "Write a formulation in LP format and print its size");
    formulate_cmd->add_option("path", o.path, "Instance file")->required();
    formulate_cmd->add_option("--kind", o.kind, "std, flower, beta, alpha or junction")->required();
    formulate_cmd->add_option("--out", o.out, "Output LP file (default: stdout)");
    formulate_cmd->add_option("--rank-cap", o.rank_cap, "Largest rank accepted by the flower relaxation");
    formulate_cmd->add_flag("--decimal", o.decimal, "Decimal coefficients (lossy) instead of fractions");
    formulate_cmd->add_flag("--json", o.json, "Census as a JSON record");

    auto* solve_cmd = app.add_subcommand("solve", "Maximize an instance");
    solve_cmd->add_option("path", o.path, "Instance file")->required();
    solve_cmd->add_option("--strategy", o.strategy, "auto, std, flower, beta, alpha, junction, brute or cuts");
    solve_cmd->add_option("--max-rounds", o.max_rounds, "Cutting-plane rounds for strategy cuts")->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("--rank-cap", o.rank_cap, "Largest rank accepted by flower separation");
    solve_cmd->add_flag("--json", o.json, "One JSON record instead of text");
    solve_cmd->add_flag("--timing", o.timing, "Include wall time");

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", o.suite,
                           "padberg, berge, gamma, beta, alpha, separation, decomposition or exhaustive")
        ->required();
    verify_cmd->add_option("--rank-cap", o.rank_cap, "Largest rank accepted by the flower routines");
    verify_cmd->add_flag("--json", o.json, "JSON lines instead of text");
    verify_cmd->add_flag("--quiet", o.quiet, "Only failures and summaries");

    auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance of a given class");
    gen_cmd->add_option("class", o.cls, "berge, gamma, beta, alpha or general")->required();
    gen_cmd->add_option("n", o.n, "Node count")->required();
    gen_cmd->add_option("m", o.m, "Edge count")->required();
    gen_cmd->add_option("r", o.r, "Rank")->required();
    gen_cmd->add_option("--seed", o.seed, "Random seed");
    gen_cmd->add_option("--out", o.out, "Output instance file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(ErrorKind::Parse);
    }

    try {
        if (*classify_cmd) return cmd_classify(o);
        if (*formulate_cmd) return cmd_formulate(o);
        if (*solve_cmd) return cmd_solve(o);
        if (*verify_cmd) return cmd_verify(o);
        if (*gen_cmd) return cmd_gen(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUnexpected;
    }
    return kUnexpected;
}
