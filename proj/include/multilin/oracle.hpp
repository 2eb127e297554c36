#pragma once

#include "multilin/hypergraph.hpp"
#include "multilin/limits.hpp"
#include "multilin/polyhedron.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace multilin {

/// conv S(G) as an irredundant H-description over lifted_space(g).
/// ResourceError when |V| exceeds limits.max_hull_nodes.
PolyhedronH multilinear_polytope(const Hypergraph& g, const Limits& limits = Limits::defaults());

/// vertices(P) == vertices(Q). Q's variables are matched to P's by name. Both must be bounded.
/// ArgumentError when the variable sets differ.
bool polytope_equal(const PolyhedronH& p, const PolyhedronH& q, const Limits& limits = Limits::defaults());

/// vertices(P) == points: every point is a vertex of P and the vertex walk finds no other.
bool vertex_set_equals(const PolyhedronH& p, const std::vector<Point>& points,
                       const Limits& limits = Limits::defaults());

/// P (over lifted_space(g), in that order) has exactly the vertices S(G), i.e. P = MP(G).
bool equals_multilinear_polytope(const PolyhedronH& p, const Hypergraph& g,
                                 const Limits& limits = Limits::defaults());

/// MP(G1) and MP(G2) stacked on shared variables describe MP(G1 u G2).
/// Both must share one universe and at least one node.
bool decomposability_check(const Hypergraph& g1, const Hypergraph& g2, const Limits& limits = Limits::defaults());

/// Alpha-acyclicity from the definition: the 2-section is chordal and every maximal
/// clique of it lies in an edge. Exponential in |V|.
bool oracle_alpha_acyclic(const Hypergraph& g);

struct AcyclicityFlags {
    bool berge = false;
    bool gamma = false;
    bool beta = false;
    bool alpha = false;

    bool respects_hierarchy() const { return (!berge || gamma) && (!gamma || beta) && (!beta || alpha); }
    std::string describe() const;
    friend bool operator==(const AcyclicityFlags&, const AcyclicityFlags&) = default;
};

/// Ground truth from cycle search and the alpha definition.
AcyclicityFlags oracle_flags(const Hypergraph& g);
/// Flags reported by the classifier.
AcyclicityFlags classifier_flags(const Hypergraph& g);

struct CorpusEntry {
    Hypergraph graph;
    AcyclicityFlags flags;
    std::uint64_t seed = 0;
    /// "exhaustive" or a generator class name.
    std::string provenance;
};

struct Corpus {
    std::vector<CorpusEntry> entries;
};

/// Every hypergraph on nodes "1".."max_nodes" up to relabelling, with oracle flags.
/// ArgumentError unless 0 <= max_nodes <= 4.
Corpus exhaustive_small_corpus(int max_nodes);

/// Smallest edge list over all node permutations; equal for isomorphic hypergraphs
/// on the same numbered node set.
std::vector<std::vector<int>> canonical_form(const Hypergraph& g);

/// JSON manifest: one object per entry with nodes, edges, flags, seed and provenance.
void write_corpus(std::ostream& out, const Corpus& corpus);
/// ParseError on malformed input or when stored flags disagree with the oracle.
Corpus read_corpus(std::istream& in);

}  // namespace multilin
