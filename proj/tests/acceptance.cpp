// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Exit status is 0 iff every criterion passes.

#include "multilin/instance_io.hpp"
#include "multilin/oracle.hpp"
#include "multilin/pipeline.hpp"
#include "multilin/relaxations.hpp"
#include "multilin/verify.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

using namespace multilin;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

Outcome from_reports(const std::vector<SuiteReport>& reports) {
    Outcome out;
    for (const auto& r : reports) {
        if (!out.detail.empty()) out.detail += "; ";
        out.detail += r.summary();
        if (!r.passed()) {
            out.passed = false;
            for (const auto& c : r.cases) {
                if (!c.passed) std::cerr << "  failed [" << r.suite << "] " << c.name << ": " << c.detail << '\n';
            }
        }
    }
    return out;
}

Outcome fail(std::string why) { return {false, std::move(why)}; }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

/// Runs the CLI with stdout captured into `out`; returns the exit status.
int run_cli(const std::string& args, const fs::path& out) {
    const std::string cmd = quote(MULTILIN_CLI) + " " + args + " > " + quote(out.string()) + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome padberg_witness() {
    auto out = from_reports({verify_padberg()});
    // independent certificate: the half point is a vertex of MP^LP (rank test) and violates
    // z1+z2+z3-z12-z13-z23 <= 1, which every point of S(triangle) satisfies
    const auto triangle = Hypergraph::numbered(3, {{1, 2}, {1, 3}, {2, 3}});
    const Point half{Rational(1, 2), Rational(1, 2), Rational(1, 2), 0, 0, 0};
    if (!support::is_vertex(standard_linearization(triangle), half)) return fail("half point not a vertex (rank test)");
    auto lhs = [](const Point& x) -> Rational { return x[0] + x[1] + x[2] - x[3] - x[4] - x[5]; };
    Rational best = -100;
    for (std::uint64_t mask = 0; mask < 8; ++mask) {
        Point x(6);
        for (int i = 0; i < 3; ++i) x[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
        x[3] = x[0] * x[1];
        x[4] = x[0] * x[2];
        x[5] = x[1] * x[2];
        best = std::max(best, lhs(x));
    }
    if (best != 1 || lhs(half) != Rational(3, 2)) return fail("separating inequality check failed");
    out.detail += "; separated by a valid inequality (3/2 > 1)";
    return out;
}

Outcome determinism() {
    const fs::path dir = fs::temp_directory_path() / ("multilin_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    struct Cleanup {
        fs::path dir;
        ~Cleanup() {
            std::error_code ec;
            fs::remove_all(dir, ec);
        }
    } cleanup{dir};

    struct GenSpec {
        std::string cls;
        int n, m, r;
    };
    const std::vector<GenSpec> specs{{"berge", 8, 4, 3},   {"gamma", 8, 5, 3},  {"beta", 12, 15, 4},
                                     {"alpha", 10, 6, 4}, {"general", 8, 6, 3}};
    std::size_t gens = 0;
    std::size_t solves = 0;
    std::size_t roundtrips = 0;
    std::vector<fs::path> files;
    for (const auto& s : specs) {
        for (int seed = 1; seed <= 3; ++seed) {
            const std::string stem = s.cls + "_" + std::to_string(seed);
            const std::string args = "gen " + s.cls + " " + std::to_string(s.n) + " " + std::to_string(s.m) + " " +
                                     std::to_string(s.r) + " --seed " + std::to_string(seed);
            const auto a = dir / (stem + "_a.json");
            const auto b = dir / (stem + "_b.json");
            if (run_cli(args + " --out " + quote(a.string()), dir / "manifest_a.txt") != 0 ||
                run_cli(args + " --out " + quote(b.string()), dir / "manifest_b.txt") != 0) {
                return fail("gen failed: " + args);
            }
            if (slurp(a) != slurp(b) || slurp(a).empty()) return fail("gen output differs between runs: " + args);
            const auto stdout_a = dir / (stem + "_stdout_a.json");
            const auto stdout_b = dir / (stem + "_stdout_b.json");
            run_cli(args, stdout_a);
            run_cli(args, stdout_b);
            if (slurp(stdout_a) != slurp(a) || slurp(stdout_b) != slurp(a)) return fail("gen to stdout differs: " + args);
            ++gens;
            files.push_back(a);
        }
    }

    // parse . write on generated files: byte identity
    for (const auto& f : files) {
        const auto text = slurp(f);
        if (instance_to_string(parse_instance_text(text)) != text) return fail("write(parse(x)) != x for " + f.string());
        ++roundtrips;
    }
    // parse . write on the exhaustive corpus with random costs
    const auto corpus = exhaustive_small_corpus(4);
    std::uint64_t seed = 1;
    for (const auto& e : corpus.entries) {
        InstanceDocument doc{random_costs(e.graph, seed++), {{"provenance", e.provenance}}};
        const auto text = instance_to_string(doc);
        const auto back = parse_instance_text(text);
        if (!(back.instance == doc.instance) || back.meta != doc.meta || instance_to_string(back) != text) {
            return fail("instance round trip failed on corpus entry " + std::to_string(seed - 1));
        }
        ++roundtrips;
    }
    std::stringstream first;
    write_corpus(first, corpus);
    std::stringstream second;
    write_corpus(second, read_corpus(first));
    if (first.str() != second.str()) return fail("corpus round trip is not byte-identical");

    // repeated solves agree
    for (const auto& f : files) {
        for (const std::string strategy : {"auto", "cuts"}) {
            const std::string args = "solve " + quote(f.string()) + " --json --strategy " + strategy;
            const auto a = dir / "solve_a.json";
            const auto b = dir / "solve_b.json";
            const int ca = run_cli(args, a);
            const int cb = run_cli(args, b);
            if (ca != 0 || cb != 0) return fail("solve failed: " + args);
            if (slurp(a) != slurp(b)) return fail("solve output differs between runs: " + args);
            ++solves;
        }
    }
    return {true, std::to_string(gens) + " gen runs byte-stable, " + std::to_string(roundtrips) +
                      " round trips exact, corpus file stable, " + std::to_string(solves) + " repeated solves agree"};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "standard linearization = MP iff Berge-acyclic", [] { return from_reports({verify_standard_linearization()}); }},
        {2, "flower relaxation = MP iff gamma-acyclic", [] { return from_reports({verify_flower_relaxation()}); }},
        {3, "beta-acyclic extended formulation", [] { return from_reports({verify_beta_formulation()}); }},
        {4, "alpha-acyclic extended formulation", [] { return from_reports({verify_alpha_formulation()}); }},
        {5, "junction-tree extended formulation", [] { return from_reports({verify_junction_formulation()}); }},
        {6, "chain block census", [] { return from_reports({verify_chain_census()}); }},
        {7, "flower separation matches enumeration", [] { return from_reports({verify_separation()}); }},
        {8, "classifier soundness and hierarchy", [] { return from_reports({verify_classifier()}); }},
        {9, "fractional vertex of the triangle", padberg_witness},
        {10, "decomposition gluing", [] { return from_reports({verify_decomposition()}); }},
        {11, "determinism and round trips", determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.1f s", secs);
        std::cout << (out.passed ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " -- " << out.detail
                  << " [" << timing << "]" << std::endl;
        failed += !out.passed;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
