#pragma once

#include "multilin/limits.hpp"

#include <functional>
#include <string>
#include <vector>

namespace multilin {

struct CaseResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;
    double seconds = 0;

    bool passed() const;
    std::size_t failures() const;
    /// e.g. "berge: 232/232 cases passed (41.2 s)"
    std::string summary() const;
};

/// Called after each case (for streaming progress); may be empty.
using CaseObserver = std::function<void(const CaseResult&)>;

/// MP^LP = MP(G) iff Berge-acyclic: every graph on <= 5 nodes (up to relabelling) and
/// 200 random hypergraphs with |V| <= 8, |E| <= 8, rank <= 4.
SuiteReport verify_standard_linearization(const Limits& limits = Limits::defaults(), const CaseObserver& observe = {});
/// MP^F = MP(G) iff gamma-acyclic on the same random family.
SuiteReport verify_flower_relaxation(const Limits& limits = Limits::defaults(), const CaseObserver& observe = {});
/// 100 beta-acyclic instances (|V| <= 20, rank <= 5): LP over beta_ef equals brute force,
/// size bounds hold, and the formulation is exact when |V| <= 10.
SuiteReport verify_beta_formulation(const Limits& limits = Limits::defaults(), const CaseObserver& observe = {});
/// Every chain signature with |f| in 2..6: at most 5|f|+2 inequalities and the block's
/// solution set is MP of its closure.
SuiteReport verify_chain_census(const Limits& limits = Limits::defaults(), const CaseObserver& observe = {});
/// 50 alpha-acyclic instances (rank <= 4, |V| <= 12): alpha_ef exact, lambda count
/// within 2^r min(|V|, |F|), all coefficients and right-hand sides in {0, 1, -1}.
SuiteReport verify_alpha_formulation(const Limits& limits = Limits::defaults(), const CaseObserver& observe = {});
/// 50 random hypergraphs of any class with min-fill width <= 6, |V| <= 10: junction_ef exact.
SuiteReport verify_junction_formulation(const Limits& limits = Limits::defaults(), const CaseObserver& observe = {});
/// 100 vertices of MP^LP (rank <= 4, |E| <= 12): separate_flower agrees with exhaustive
/// enumeration, including the tie-break.
SuiteReport verify_separation(const Limits& limits = Limits::defaults(), const CaseObserver& observe = {});
/// Exhaustive |V| <= 4 corpus and 500 random |V| <= 8 hypergraphs: classifier flags equal
/// the cycle-search and definition-based flags, and the hierarchy holds.
SuiteReport verify_classifier(const Limits& limits = Limits::defaults(), const CaseObserver& observe = {});
/// The triangle's MP^LP has the vertex (1/2,1/2,1/2,0,0,0), which lies outside MP; a few
/// acyclic graphs have MP^LP = MP.
SuiteReport verify_padberg(const Limits& limits = Limits::defaults(), const CaseObserver& observe = {});
/// Gluing along a complete intersection (20 random pairs) and along one node (all pairs
/// of hypergraphs on <= 3 nodes) preserves the description.
SuiteReport verify_decomposition(const Limits& limits = Limits::defaults(), const CaseObserver& observe = {});

/// padberg, berge, gamma, beta, alpha, separation, decomposition, exhaustive.
const std::vector<std::string>& suite_names();
/// Runs a named suite (beta includes the chain census, alpha includes junction).
/// ArgumentError for an unknown name.
std::vector<SuiteReport> run_suite(const std::string& name, const Limits& limits = Limits::defaults(),
                                   const CaseObserver& observe = {});

}  // namespace multilin
