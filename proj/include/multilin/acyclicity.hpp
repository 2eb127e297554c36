#pragma once

#include "multilin/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace multilin {

enum class CycleKind { Berge, Gamma, Beta };

std::string to_string(CycleKind kind);

/// v_1, e_1, v_2, e_2, ..., v_t, e_t (closing back to v_1).
struct CycleWitness {
    CycleKind kind = CycleKind::Berge;
    std::vector<Node> nodes;
    std::vector<NodeSet> edges;

    std::size_t length() const { return nodes.size(); }
    std::string describe(const Hypergraph& g) const;
};

/// Checks the membership conditions of `kind` directly against the definition.
bool is_valid_cycle(const Hypergraph& g, const CycleWitness& cycle);

/// RIP ordering of the maximal edges: p_1..p_m with back-pointers j(k) < k.
struct RipOrdering {
    std::vector<NodeSet> edges;
    /// parent[0] == -1; otherwise parent[k] < k and
    /// p_k intersected with the union of p_1..p_{k-1} lies inside p_parent[k].
    std::vector<int> parent;
};

struct AcyclicityResult {
    bool acyclic = false;
    std::optional<CycleWitness> cycle;
};

struct BetaResult {
    bool acyclic = false;
    /// Full nest point elimination order when acyclic.
    std::vector<Node> order;
    std::optional<CycleWitness> cycle;
};

struct AlphaResult {
    bool acyclic = false;
    std::optional<RipOrdering> ordering;
    /// Edges left when GYO reduction gets stuck (non-alpha certificate, not canonical).
    std::vector<NodeSet> residue;
};

struct AcyclicityReport {
    bool berge = false;
    bool gamma = false;
    bool beta = false;
    bool alpha = false;

    std::optional<CycleWitness> berge_cycle;
    std::optional<CycleWitness> gamma_cycle;
    std::optional<CycleWitness> beta_cycle;
    std::vector<Node> nest_point_order;
    std::optional<RipOrdering> rip_ordering;
    std::vector<NodeSet> gyo_residue;

    /// "berge-acyclic", "gamma-acyclic", "beta-acyclic", "alpha-acyclic" or "cyclic".
    std::string strongest_class() const;
    /// e.g. "beta-acyclic (not gamma)"
    std::string summary() const;
};

AcyclicityResult is_berge_acyclic(const Hypergraph& g);
AcyclicityResult is_gamma_acyclic(const Hypergraph& g);
BetaResult is_beta_acyclic(const Hypergraph& g);
AlphaResult is_alpha_acyclic(const Hypergraph& g);
AcyclicityReport classify(const Hypergraph& g);

/// True when every edge containing v is comparable with every other such edge.
bool is_nest_point(const Hypergraph& g, Node v);

/// Lowest-index nest point, or -1.
Node find_nest_point(const Hypergraph& g);

/// Exhaustive backtracking over alternating node/edge sequences, straight from the
/// cycle definitions. Exponential; meant for small hypergraphs and cross-checks.
/// `step_budget` of 0 means unlimited; when the budget runs out the search gives up
/// and returns nullopt with *exhausted set to true.
std::optional<CycleWitness> oracle_find_cycle(const Hypergraph& g, CycleKind kind,
                                              std::uint64_t step_budget = 0, bool* exhausted = nullptr);

/// Replays `order` through remove_node and checks a nest point is removed each time.
bool is_nest_point_elimination_order(const Hypergraph& g, const std::vector<Node>& order);

/// Checks the running intersection containment for every k >= 2.
bool is_rip_ordering(const RipOrdering& ordering);

}  // namespace multilin
