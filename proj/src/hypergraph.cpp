#include "multilin/hypergraph.hpp"

#include "multilin/error.hpp"

#include <algorithm>
#include <iterator>
#include <set>

namespace multilin {

NodeSet make_node_set(std::vector<Node> nodes) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

bool is_subset(const NodeSet& a, const NodeSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

NodeSet set_intersection(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

NodeSet set_difference(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool intersects(const NodeSet& a, const NodeSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            return true;
        }
    }
    return false;
}

bool contains(const NodeSet& set, Node v) { return std::binary_search(set.begin(), set.end(), v); }

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], static_cast<Node>(i)).second) {
            throw ArgumentError("duplicate node name '" + names_[i] + "'");
        }
    }
}

Node Universe::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

Hypergraph::Hypergraph() : universe_(std::make_shared<const Universe>(std::vector<std::string>{})) {}

Hypergraph::Hypergraph(std::shared_ptr<const Universe> universe, NodeSet nodes, std::vector<NodeSet> edges)
    : universe_(std::move(universe)), nodes_(std::move(nodes)), edges_(std::move(edges)) {
    if (!universe_) throw ArgumentError("hypergraph without a universe");
    if (!std::is_sorted(nodes_.begin(), nodes_.end()) ||
        std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
        nodes_ = make_node_set(std::move(nodes_));
    }
    for (Node v : nodes_) {
        if (v < 0 || static_cast<std::size_t>(v) >= universe_->size()) {
            throw ArgumentError("node index " + std::to_string(v) + " outside the universe");
        }
    }
    for (auto& e : edges_) {
        NodeSet canonical = make_node_set(e);
        if (canonical.size() != e.size()) {
            throw ArgumentError("edge lists a node twice");
        }
        e = std::move(canonical);
        if (e.size() < 2) throw ArgumentError("edge of cardinality " + std::to_string(e.size()) + " (loops are not allowed)");
        if (!is_subset(e, nodes_)) throw ArgumentError("edge " + set_label(e) + " is not a subset of the node set");
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw ArgumentError("parallel edge " + set_label(*dup));
    }
}

Hypergraph Hypergraph::numbered(int n, const std::vector<std::vector<int>>& edges) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    NodeSet nodes(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) nodes[static_cast<std::size_t>(i)] = i;
    std::vector<NodeSet> es;
    for (const auto& e : edges) {
        NodeSet s;
        for (int label : e) {
            if (label < 1 || label > n) throw ArgumentError("node label " + std::to_string(label) + " out of range");
            s.push_back(label - 1);
        }
        es.push_back(std::move(s));
    }
    return Hypergraph(std::make_shared<const Universe>(std::move(names)), std::move(nodes), std::move(es));
}

Hypergraph Hypergraph::named(std::vector<std::string> nodes, const std::vector<std::vector<std::string>>& edges) {
    auto universe = std::make_shared<const Universe>(std::move(nodes));
    NodeSet all(universe->size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Node>(i);
    std::vector<NodeSet> es;
    for (const auto& e : edges) {
        NodeSet s;
        for (const auto& name : e) {
            Node v = universe->find(name);
            if (v < 0) throw ArgumentError("edge references unknown node '" + name + "'");
            s.push_back(v);
        }
        es.push_back(std::move(s));
    }
    return Hypergraph(std::move(universe), std::move(all), std::move(es));
}

bool Hypergraph::has_node(Node v) const { return contains(nodes_, v); }

int Hypergraph::edge_index(const NodeSet& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::string Hypergraph::set_key(const NodeSet& s) const {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += name(s[i]);
    }
    return out;
}

std::string Hypergraph::set_label(const NodeSet& s) const { return "{" + set_key(s) + "}"; }

Hypergraph Hypergraph::derive(NodeSet nodes, std::vector<NodeSet> edges) const {
    return Hypergraph(universe_, std::move(nodes), std::move(edges));
}

void Instance::validate() const {
    if (node_costs.size() != graph.universe()->size()) {
        throw ArgumentError("node cost vector does not match the node universe");
    }
    if (edge_costs.size() != graph.edge_count()) {
        throw ArgumentError("edge cost vector does not match the edge set");
    }
    for (std::size_t k = 0; k < edge_costs.size(); ++k) {
        if (edge_costs[k] == 0) {
            throw ArgumentError("edge " + graph.set_label(graph.edges()[k]) + " has zero cost");
        }
    }
}

std::size_t SimpleGraph::arc_count() const {
    std::size_t total = 0;
    for (const auto& adj : adjacency) total += adj.size();
    return total / 2;
}

bool SimpleGraph::adjacent(int a, int b) const {
    const auto& adj = adjacency.at(static_cast<std::size_t>(a));
    return std::binary_search(adj.begin(), adj.end(), b);
}

void SimpleGraph::add_arc(int a, int b) {
    if (a == b || adjacent(a, b)) return;
    auto insert = [](std::vector<int>& list, int x) { list.insert(std::lower_bound(list.begin(), list.end(), x), x); };
    insert(adjacency[static_cast<std::size_t>(a)], b);
    insert(adjacency[static_cast<std::size_t>(b)], a);
}

int rank(const Hypergraph& g) {
    if (g.edges().empty()) throw ArgumentError("rank is undefined for a hypergraph without edges");
    std::size_t r = 0;
    for (const auto& e : g.edges()) r = std::max(r, e.size());
    return static_cast<int>(r);
}

Hypergraph reduction(const Hypergraph& g) {
    std::vector<NodeSet> maximal;
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < edges.size() && !dominated; ++j) {
            dominated = j != i && edges[j].size() > edges[i].size() && is_subset(edges[i], edges[j]);
        }
        if (!dominated) maximal.push_back(edges[i]);
    }
    return g.derive(g.nodes(), std::move(maximal));
}

Hypergraph section(const Hypergraph& g, const NodeSet& subset) {
    NodeSet s = make_node_set(subset);
    if (!is_subset(s, g.nodes())) throw ArgumentError("section: node subset is not contained in V");
    std::vector<NodeSet> kept;
    for (const auto& e : g.edges()) {
        if (is_subset(e, s)) kept.push_back(e);
    }
    return g.derive(std::move(s), std::move(kept));
}

Hypergraph remove_node(const Hypergraph& g, Node v) {
    if (!g.has_node(v)) throw ArgumentError("remove_node: node is not in the hypergraph");
    NodeSet nodes = set_difference(g.nodes(), NodeSet{v});
    std::set<NodeSet> edges;
    for (const auto& e : g.edges()) {
        NodeSet rest = set_difference(e, NodeSet{v});
        if (rest.size() >= 2) edges.insert(std::move(rest));
    }
    return g.derive(std::move(nodes), std::vector<NodeSet>(edges.begin(), edges.end()));
}

IncidenceGraph incidence_graph(const Hypergraph& g) {
    IncidenceGraph out;
    out.node_count = g.node_count();
    out.graph.adjacency.resize(g.node_count() + g.edge_count());
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        for (Node v : g.edges()[k]) {
            auto pos = std::lower_bound(g.nodes().begin(), g.nodes().end(), v) - g.nodes().begin();
            out.graph.add_arc(static_cast<int>(pos), static_cast<int>(g.node_count() + k));
        }
    }
    return out;
}

IntersectionGraph intersection_graph(const Hypergraph& g) {
    IntersectionGraph out;
    out.labels = g.nodes();
    out.graph.adjacency.resize(g.node_count());
    auto position = [&](Node v) {
        return static_cast<int>(std::lower_bound(g.nodes().begin(), g.nodes().end(), v) - g.nodes().begin());
    };
    for (const auto& e : g.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::size_t j = i + 1; j < e.size(); ++j) out.graph.add_arc(position(e[i]), position(e[j]));
        }
    }
    return out;
}

std::vector<NodeSet> adjacent_edges(const Hypergraph& g, const NodeSet& e0) {
    if (!g.has_edge(e0)) throw ArgumentError("adjacent_edges: " + g.set_label(e0) + " is not an edge");
    std::vector<NodeSet> out;
    for (const auto& e : g.edges()) {
        if (e != e0 && intersects(e, e0)) out.push_back(e);
    }
    return out;
}

Hypergraph hypergraph_union(const Hypergraph& a, const Hypergraph& b) {
    if (a.universe() != b.universe() && a.universe()->names() != b.universe()->names()) {
        throw ArgumentError("hypergraph_union: operands live in different universes");
    }
    std::set<NodeSet> edges(a.edges().begin(), a.edges().end());
    edges.insert(b.edges().begin(), b.edges().end());
    return a.derive(set_union(a.nodes(), b.nodes()), std::vector<NodeSet>(edges.begin(), edges.end()));
}

}  // namespace multilin
