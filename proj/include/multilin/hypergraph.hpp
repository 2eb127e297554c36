#pragma once

#include "multilin/rational.hpp"

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace multilin {

/// Dense index of a node inside its universe.
using Node = int;

/// Strictly increasing list of node indices. All set algebra in the library
/// works on this canonical form, so equality of edges is plain vector equality.
using NodeSet = std::vector<Node>;

NodeSet make_node_set(std::vector<Node> nodes);
bool is_subset(const NodeSet& a, const NodeSet& b);
NodeSet set_union(const NodeSet& a, const NodeSet& b);
NodeSet set_intersection(const NodeSet& a, const NodeSet& b);
NodeSet set_difference(const NodeSet& a, const NodeSet& b);
bool intersects(const NodeSet& a, const NodeSet& b);
bool contains(const NodeSet& set, Node v);

/// Node names shared by a hypergraph and everything derived from it, so that
/// sections and node removals keep their indices.
class Universe {
public:
    explicit Universe(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(Node v) const { return names_.at(static_cast<std::size_t>(v)); }
    /// -1 when absent.
    Node find(const std::string& name) const;
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Node> index_;
};

/// Finite hypergraph without loops or parallel edges. Immutable.
///
/// Edges are kept sorted lexicographically by their index vectors; that order is
/// the canonical edge order used for variables, reports and tie-breaks.
class Hypergraph {
public:
    Hypergraph();

    /// Validates: nodes within the universe, every edge a subset of `nodes`,
    /// |e| >= 2, no duplicate edges. Throws ArgumentError.
    Hypergraph(std::shared_ptr<const Universe> universe, NodeSet nodes, std::vector<NodeSet> edges);

    /// Nodes named "1".."n"; edges given with 1-based labels.
    static Hypergraph numbered(int n, const std::vector<std::vector<int>>& edges);

    /// Named nodes; edges given by node names.
    static Hypergraph named(std::vector<std::string> nodes,
                            const std::vector<std::vector<std::string>>& edges);

    const std::shared_ptr<const Universe>& universe() const { return universe_; }
    const NodeSet& nodes() const { return nodes_; }
    const std::vector<NodeSet>& edges() const { return edges_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_node(Node v) const;
    /// Position of `e` in edges(), or -1.
    int edge_index(const NodeSet& e) const;
    bool has_edge(const NodeSet& e) const { return edge_index(e) >= 0; }

    const std::string& name(Node v) const { return universe_->name(v); }
    /// Node names joined by ',' in index order, e.g. "1,2,3".
    std::string set_key(const NodeSet& s) const;
    /// "{1,2,3}"
    std::string set_label(const NodeSet& s) const;

    /// Same universe, different structure (the common case for derived hypergraphs).
    Hypergraph derive(NodeSet nodes, std::vector<NodeSet> edges) const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.nodes_ == b.nodes_ && a.edges_ == b.edges_ &&
               (a.universe_ == b.universe_ || a.universe_->names() == b.universe_->names());
    }

private:
    std::shared_ptr<const Universe> universe_;
    NodeSet nodes_;
    std::vector<NodeSet> edges_;
};

/// Hypergraph with objective coefficients: maximize sum c_v z_v + sum c_e prod z_v.
struct Instance {
    Hypergraph graph;
    /// Indexed by universe node index; entries for nodes outside graph.nodes() are ignored.
    std::vector<Rational> node_costs;
    /// Aligned with graph.edges(). All nonzero.
    std::vector<Rational> edge_costs;

    /// Throws ArgumentError if costs are misaligned or an edge cost is zero.
    void validate() const;
    const Rational& node_cost(Node v) const { return node_costs.at(static_cast<std::size_t>(v)); }

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.graph == b.graph && a.node_costs == b.node_costs && a.edge_costs == b.edge_costs;
    }
};

/// Simple undirected graph over vertices 0..n-1 with sorted adjacency lists.
struct SimpleGraph {
    std::vector<std::vector<int>> adjacency;

    std::size_t vertex_count() const { return adjacency.size(); }
    std::size_t arc_count() const;
    bool adjacent(int a, int b) const;
    void add_arc(int a, int b);
};

/// Bipartite node/edge membership graph. Vertex i < node_count is graph.nodes()[i];
/// vertex node_count + k is graph.edges()[k].
struct IncidenceGraph {
    SimpleGraph graph;
    std::size_t node_count = 0;
};

/// Graph on the nodes of G (vertex i is G.nodes()[i]); every hyperedge induces a clique.
struct IntersectionGraph {
    SimpleGraph graph;
    NodeSet labels;
};

/// Maximum edge cardinality. Throws ArgumentError on an edgeless hypergraph.
int rank(const Hypergraph& g);

/// Keeps only the maximal edges.
Hypergraph reduction(const Hypergraph& g);

/// Restriction to `subset`, keeping edges fully inside it. Throws if subset is not within V.
Hypergraph section(const Hypergraph& g, const NodeSet& subset);

/// G - v: drop v from every edge, discard remnants of size < 2, collapse duplicates.
Hypergraph remove_node(const Hypergraph& g, Node v);

IncidenceGraph incidence_graph(const Hypergraph& g);
IntersectionGraph intersection_graph(const Hypergraph& g);

/// Edges other than e0 with nonempty intersection with e0, in canonical order.
/// Throws ArgumentError if e0 is not an edge.
std::vector<NodeSet> adjacent_edges(const Hypergraph& g, const NodeSet& e0);

/// Union of the node and edge sets over the same universe.
Hypergraph hypergraph_union(const Hypergraph& a, const Hypergraph& b);

}  // namespace multilin
