#pragma once

#include "multilin/hypergraph.hpp"
#include "multilin/limits.hpp"
#include "multilin/polyhedron.hpp"

#include <optional>
#include <string>
#include <vector>

namespace multilin {

enum class Construction { Block, Alpha, Junction, Beta };

std::string to_string(Construction c);

/// A polyhedron over original (lifted) variables plus auxiliary ones, whose
/// projection onto the original variables is meant to be MP(G).
struct ExtendedFormulation {
    PolyhedronH polyhedron;
    /// In lifted_space order for the hypergraph it was built for.
    std::vector<std::string> original_vars;
    std::vector<std::string> aux_vars;
    Construction provenance = Construction::Block;

    /// Number of lambda (convex multiplier) variables; 0 for beta.
    std::size_t lambda_count = 0;
    /// Block node sets in construction order (maximal edges, bags or chain tops).
    std::vector<NodeSet> blocks;
    /// Junction only: largest bag size minus one.
    int width = -1;

    /// All variables with original ones first.
    std::vector<std::string> ordered_variables() const;
};

/// Convex-combination block over all subsets of f. `g` only supplies node names.
/// Variables z(v) for v in f, z(p) for p in linked, and one multiplier per subset.
ExtendedFormulation complete_block(const Hypergraph& g, const NodeSet& f, const std::vector<NodeSet>& linked,
                                   const Limits& limits = Limits::defaults());

/// Blocks over the maximal edges in RIP order, glued on every subset (size >= 2) of
/// each running intersection. PreconditionError unless alpha-acyclic.
ExtendedFormulation alpha_ef(const Hypergraph& g, const Limits& limits = Limits::defaults());

struct TreeDecomposition {
    std::vector<NodeSet> bags;
    /// Tree edges as (bag, bag) index pairs; a forest when the graph is disconnected.
    std::vector<std::pair<int, int>> tree_edges;
    int width = -1;
};

/// Min-fill elimination on the intersection graph (lowest index breaks ties), with
/// bags contained in a tree neighbour contracted away.
TreeDecomposition min_fill_decomposition(const Hypergraph& g);

/// One block per bag; edges linked in the lowest-index bag containing them, adjacent
/// bags glued on all subsets (size >= 2) of their intersection. ResourceError when the
/// width exceeds limits.junction_width_cap.
ExtendedFormulation junction_ef(const Hypergraph& g, const Limits& limits = Limits::defaults());

/// u together with the edges containing it, which must form an inclusion chain.
struct ChainBlock {
    Node apex = -1;
    std::vector<NodeSet> chain;

    NodeSet top() const { return chain.empty() ? NodeSet{} : chain.back(); }
    /// {e \ {u} : e in chain, |e| >= 3}
    std::vector<NodeSet> derived() const;
    /// (f, chain + derived) over the universe of g.
    Hypergraph closure(const Hypergraph& g) const;
    std::vector<int> signature() const;
};

/// Minimal H-description of MP of the chain block's closure, over the variable names of
/// g's universe. Computed once per size signature and relabelled.
/// ArgumentError for an empty or non-nested chain; ResourceError when |f| exceeds the guard.
PolyhedronH chain_block_facets(const Hypergraph& g, const ChainBlock& block,
                               const Limits& limits = Limits::defaults());

/// Nest point elimination: one chain block per eliminated node, glued on shared
/// variables. PreconditionError unless beta-acyclic.
ExtendedFormulation beta_ef(const Hypergraph& g, const Limits& limits = Limits::defaults());

struct ExactnessReport {
    bool exact = false;
    /// A projected vertex outside MP(G), when there is one.
    std::optional<Point> outside;
    /// A point of S(G) missing from the projection, when there is one.
    std::optional<Point> missing;
    std::size_t vertices_visited = 0;
};

/// Compares the projection of ef onto g's lifted space with MP(G) = conv S(G).
ExactnessReport ef_exactness_check(const ExtendedFormulation& ef, const Hypergraph& g,
                                   const Limits& limits = Limits::defaults());

}  // namespace multilin
