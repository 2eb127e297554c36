#include "multilin/acyclicity.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace multilin {

std::string to_string(CycleKind kind) {
    switch (kind) {
        case CycleKind::Berge: return "berge";
        case CycleKind::Gamma: return "gamma";
        case CycleKind::Beta: return "beta";
    }
    return "?";
}

std::string CycleWitness::describe(const Hypergraph& g) const {
    std::ostringstream out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i > 0) out << ',';
        out << g.name(nodes[i]) << ',' << g.set_label(edges[i]);
    }
    return out.str();
}

bool is_valid_cycle(const Hypergraph& g, const CycleWitness& cycle) {
    const std::size_t t = cycle.nodes.size();
    if (t < 2 || cycle.edges.size() != t) return false;
    if (cycle.kind != CycleKind::Berge && t < 3) return false;
    for (std::size_t i = 0; i < t; ++i) {
        if (!g.has_node(cycle.nodes[i]) || !g.has_edge(cycle.edges[i])) return false;
        for (std::size_t j = i + 1; j < t; ++j) {
            if (cycle.nodes[i] == cycle.nodes[j] || cycle.edges[i] == cycle.edges[j]) return false;
        }
    }
    // v_i in e_{i-1} and e_i, cyclically.
    for (std::size_t i = 0; i < t; ++i) {
        const auto& prev = cycle.edges[(i + t - 1) % t];
        if (!contains(prev, cycle.nodes[i]) || !contains(cycle.edges[i], cycle.nodes[i])) return false;
    }
    if (cycle.kind == CycleKind::Berge) return true;
    const std::size_t first = cycle.kind == CycleKind::Beta ? 0 : 1;
    for (std::size_t i = first; i < t; ++i) {
        for (std::size_t j = 0; j < t; ++j) {
            if (j == i || j == (i + t - 1) % t) continue;
            if (contains(cycle.edges[j], cycle.nodes[i])) return false;
        }
    }
    return true;
}

std::string AcyclicityReport::strongest_class() const {
    if (berge) return "berge-acyclic";
    if (gamma) return "gamma-acyclic";
    if (beta) return "beta-acyclic";
    if (alpha) return "alpha-acyclic";
    return "cyclic";
}

std::string AcyclicityReport::summary() const {
    if (berge) return "berge-acyclic";
    if (gamma) return "gamma-acyclic (not berge)";
    if (beta) return "beta-acyclic (not gamma)";
    if (alpha) return "alpha-acyclic (not beta)";
    return "cyclic (not alpha)";
}

namespace {

/// Puts a Berge cycle in a canonical rotation: smallest node first, and of the two
/// edges touching it, the canonically smaller one as e_1.
CycleWitness canonical_rotation(CycleWitness c) {
    const std::size_t t = c.nodes.size();
    auto start = static_cast<std::size_t>(std::min_element(c.nodes.begin(), c.nodes.end()) - c.nodes.begin());
    std::rotate(c.nodes.begin(), c.nodes.begin() + static_cast<std::ptrdiff_t>(start), c.nodes.end());
    std::rotate(c.edges.begin(), c.edges.begin() + static_cast<std::ptrdiff_t>(start), c.edges.end());
    if (c.edges.back() < c.edges.front()) {
        // Reverse direction: v_1, e_t, v_t, e_{t-1}, ..., v_2, e_1.
        CycleWitness r{c.kind, {}, {}};
        r.nodes.push_back(c.nodes[0]);
        for (std::size_t i = t; i-- > 1;) r.nodes.push_back(c.nodes[i]);
        for (std::size_t i = t; i-- > 0;) r.edges.push_back(c.edges[i]);
        return r;
    }
    return c;
}

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

/// Path between two vertices of a forest (BFS), inclusive of both ends.
std::vector<int> forest_path(const std::vector<std::vector<int>>& adj, int from, int to) {
    std::vector<int> prev(adj.size(), -2);
    std::vector<int> queue{from};
    prev[static_cast<std::size_t>(from)] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        if (x == to) break;
        for (int y : adj[static_cast<std::size_t>(x)]) {
            if (prev[static_cast<std::size_t>(y)] == -2) {
                prev[static_cast<std::size_t>(y)] = x;
                queue.push_back(y);
            }
        }
    }
    std::vector<int> path;
    for (int x = to; x != -1; x = prev[static_cast<std::size_t>(x)]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

class CycleSearch {
public:
    CycleSearch(const Hypergraph& g, CycleKind kind, std::uint64_t budget)
        : g_(g), kind_(kind), budget_(budget) {
        incident_.resize(g.universe()->size());
        for (std::size_t k = 0; k < g.edge_count(); ++k) {
            for (Node v : g.edges()[k]) incident_[static_cast<std::size_t>(v)].push_back(static_cast<int>(k));
        }
        edge_used_.assign(g.edge_count(), false);
        node_used_.assign(g.universe()->size(), false);
    }

    std::optional<CycleWitness> run() {
        for (Node v1 : g_.nodes()) {
            if (incident_[static_cast<std::size_t>(v1)].size() < 2) continue;
            nodes_ = {v1};
            node_used_[static_cast<std::size_t>(v1)] = true;
            for (int e1 : incident_[static_cast<std::size_t>(v1)]) {
                edges_ = {e1};
                edge_used_[static_cast<std::size_t>(e1)] = true;
                bool found = extend();
                edge_used_[static_cast<std::size_t>(e1)] = false;
                if (found) return witness();
                if (exhausted_) return std::nullopt;
            }
            node_used_[static_cast<std::size_t>(v1)] = false;
        }
        return std::nullopt;
    }

    bool exhausted() const { return exhausted_; }

private:
    bool symmetric() const { return kind_ != CycleKind::Gamma; }
    std::size_t min_length() const { return kind_ == CycleKind::Berge ? 2 : 3; }

    bool in_edge(int e, Node v) const { return contains(g_.edges()[static_cast<std::size_t>(e)], v); }

    // Nodes v_2..v_k lie only in their two cycle edges.
    bool edge_respects_private_nodes(int e, std::size_t upto) const {
        if (kind_ == CycleKind::Berge) return true;
        for (std::size_t i = 1; i < upto; ++i) {
            if (in_edge(e, nodes_[i])) return false;
        }
        return true;
    }

    bool extend() {
        if (budget_ && ++steps_ > budget_) {
            exhausted_ = true;
            return false;
        }
        // Current sequence: v_1, e_1, ..., v_k, e_k. Choose v_{k+1} in e_k.
        const std::size_t k = nodes_.size();
        const int ek = edges_.back();
        for (Node next : g_.edges()[static_cast<std::size_t>(ek)]) {
            if (node_used_[static_cast<std::size_t>(next)]) continue;
            if (symmetric() && next < nodes_.front()) continue;
            if (kind_ != CycleKind::Berge) {
                bool clash = false;
                for (std::size_t j = 0; j + 1 < edges_.size() && !clash; ++j) clash = in_edge(edges_[j], next);
                if (clash) continue;
            }
            nodes_.push_back(next);
            node_used_[static_cast<std::size_t>(next)] = true;
            for (int e : incident_[static_cast<std::size_t>(next)]) {
                if (edge_used_[static_cast<std::size_t>(e)]) continue;
                // e must avoid v_2..v_k (v_{k+1} is `next`, which it contains).
                if (!edge_respects_private_nodes(e, k)) continue;
                const bool closes = in_edge(e, nodes_.front());
                if (closes && k + 1 >= min_length()) {
                    edges_.push_back(e);
                    return true;
                }
                if (closes && kind_ == CycleKind::Beta) continue;
                edges_.push_back(e);
                edge_used_[static_cast<std::size_t>(e)] = true;
                bool found = extend();
                edge_used_[static_cast<std::size_t>(e)] = false;
                if (found) return true;
                edges_.pop_back();
                if (exhausted_) return false;
            }
            node_used_[static_cast<std::size_t>(next)] = false;
            nodes_.pop_back();
        }
        return false;
    }

    CycleWitness witness() const {
        CycleWitness w;
        w.kind = kind_;
        w.nodes = nodes_;
        for (int e : edges_) w.edges.push_back(g_.edges()[static_cast<std::size_t>(e)]);
        return w;
    }

    const Hypergraph& g_;
    CycleKind kind_;
    std::uint64_t budget_;
    std::uint64_t steps_ = 0;
    bool exhausted_ = false;
    std::vector<std::vector<int>> incident_;
    std::vector<bool> edge_used_;
    std::vector<bool> node_used_;
    std::vector<Node> nodes_;
    std::vector<int> edges_;
};

std::vector<NodeSet> incident_edges(const Hypergraph& g, Node v) {
    std::vector<NodeSet> out;
    for (const auto& e : g.edges()) {
        if (contains(e, v)) out.push_back(e);
    }
    return out;
}

constexpr std::uint64_t kWitnessBudget = 20'000'000;

}  // namespace

std::optional<CycleWitness> oracle_find_cycle(const Hypergraph& g, CycleKind kind, std::uint64_t step_budget,
                                              bool* exhausted) {
    CycleSearch search(g, kind, step_budget);
    auto result = search.run();
    if (exhausted) *exhausted = search.exhausted();
    if (result && kind != CycleKind::Gamma) return canonical_rotation(*result);
    return result;
}

AcyclicityResult is_berge_acyclic(const Hypergraph& g) {
    const auto inc = incidence_graph(g);
    const std::size_t n = inc.graph.vertex_count();
    DisjointSets sets(n);
    std::vector<std::vector<int>> forest(n);
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        const int ev = static_cast<int>(inc.node_count + k);
        for (int nv : inc.graph.adjacency[static_cast<std::size_t>(ev)]) {
            if (sets.unite(nv, ev)) {
                forest[static_cast<std::size_t>(nv)].push_back(ev);
                forest[static_cast<std::size_t>(ev)].push_back(nv);
                continue;
            }
            // The arc closes a cycle: path ev ... nv in the forest plus the arc.
            auto path = forest_path(forest, ev, nv);
            CycleWitness w;
            w.kind = CycleKind::Berge;
            // path alternates edge-vertex, node-vertex, ..., node-vertex (= nv).
            // Cycle: nv, ev, path[1], path[2], ..., back to nv.
            w.nodes.push_back(g.nodes()[static_cast<std::size_t>(nv)]);
            w.edges.push_back(g.edges()[k]);
            for (std::size_t i = 1; i + 1 < path.size(); i += 2) {
                w.nodes.push_back(g.nodes()[static_cast<std::size_t>(path[i])]);
                w.edges.push_back(g.edges()[static_cast<std::size_t>(path[i + 1]) - inc.node_count]);
            }
            return {false, canonical_rotation(std::move(w))};
        }
    }
    return {true, std::nullopt};
}

AcyclicityResult is_gamma_acyclic(const Hypergraph& g) {
    if (is_berge_acyclic(g).acyclic) return {true, std::nullopt};
    auto cycle = oracle_find_cycle(g, CycleKind::Gamma);
    return {!cycle.has_value(), std::move(cycle)};
}

bool is_nest_point(const Hypergraph& g, Node v) {
    auto chain = incident_edges(g, v);
    std::sort(chain.begin(), chain.end(), [](const NodeSet& a, const NodeSet& b) { return a.size() < b.size(); });
    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (!is_subset(chain[i - 1], chain[i])) return false;
    }
    return true;
}

Node find_nest_point(const Hypergraph& g) {
    for (Node v : g.nodes()) {
        if (is_nest_point(g, v)) return v;
    }
    return -1;
}

BetaResult is_beta_acyclic(const Hypergraph& g) {
    BetaResult result;
    Hypergraph current = g;
    while (current.node_count() > 0) {
        Node v = find_nest_point(current);
        if (v < 0) {
            result.acyclic = false;
            result.order.clear();
            result.cycle = oracle_find_cycle(g, CycleKind::Beta, kWitnessBudget);
            return result;
        }
        result.order.push_back(v);
        current = remove_node(current, v);
    }
    result.acyclic = true;
    return result;
}

AlphaResult is_alpha_acyclic(const Hypergraph& g) {
    AlphaResult result;
    const auto maximal = reduction(g).edges();
    const std::size_t m = maximal.size();
    std::vector<NodeSet> residual = maximal;
    std::vector<bool> alive(m, true);
    std::vector<std::pair<int, int>> removed;  // (edge, parent or -1)
    std::size_t alive_count = m;

    while (alive_count > 0) {
        bool changed = false;
        for (Node v : g.nodes()) {
            int holder = -1;
            int count = 0;
            for (std::size_t i = 0; i < m && count < 2; ++i) {
                if (alive[i] && contains(residual[i], v)) {
                    holder = static_cast<int>(i);
                    ++count;
                }
            }
            if (count == 1) {
                auto& r = residual[static_cast<std::size_t>(holder)];
                r.erase(std::lower_bound(r.begin(), r.end(), v));
                changed = true;
                break;
            }
        }
        if (changed) continue;
        for (std::size_t i = 0; i < m && !changed; ++i) {
            if (!alive[i]) continue;
            int parent = -1;
            bool removable = residual[i].empty();
            for (std::size_t j = 0; j < m && !removable; ++j) {
                if (j != i && alive[j] && is_subset(residual[i], residual[j])) {
                    removable = true;
                    parent = static_cast<int>(j);
                }
            }
            if (removable) {
                alive[i] = false;
                --alive_count;
                removed.emplace_back(static_cast<int>(i), parent);
                changed = true;
            }
        }
        if (!changed) break;
    }

    if (alive_count > 0) {
        result.acyclic = false;
        for (std::size_t i = 0; i < m; ++i) {
            if (alive[i]) result.residue.push_back(residual[i]);
        }
        return result;
    }

    result.acyclic = true;
    RipOrdering ordering;
    std::vector<int> position(m, -1);
    for (std::size_t k = 0; k < removed.size(); ++k) {
        const auto [edge, parent] = removed[removed.size() - 1 - k];
        position[static_cast<std::size_t>(edge)] = static_cast<int>(k);
        ordering.edges.push_back(maximal[static_cast<std::size_t>(edge)]);
        int p = parent < 0 ? (k == 0 ? -1 : 0) : position[static_cast<std::size_t>(parent)];
        ordering.parent.push_back(p);
    }
    result.ordering = std::move(ordering);
    return result;
}

AcyclicityReport classify(const Hypergraph& g) {
    AcyclicityReport report;
    auto berge = is_berge_acyclic(g);
    report.berge = berge.acyclic;
    report.berge_cycle = berge.cycle;

    auto beta = is_beta_acyclic(g);
    report.beta = beta.acyclic;
    report.nest_point_order = beta.order;
    report.beta_cycle = beta.cycle;

    if (report.berge) {
        report.gamma = true;
    } else if (!report.beta) {
        // A beta-cycle is in particular a gamma-cycle.
        report.gamma = false;
        if (beta.cycle) {
            report.gamma_cycle = *beta.cycle;
            report.gamma_cycle->kind = CycleKind::Gamma;
        }
    } else {
        auto gamma = oracle_find_cycle(g, CycleKind::Gamma);
        report.gamma = !gamma.has_value();
        report.gamma_cycle = std::move(gamma);
    }

    auto alpha = is_alpha_acyclic(g);
    report.alpha = alpha.acyclic;
    report.rip_ordering = alpha.ordering;
    report.gyo_residue = alpha.residue;
    return report;
}

bool is_nest_point_elimination_order(const Hypergraph& g, const std::vector<Node>& order) {
    if (order.size() != g.node_count()) return false;
    Hypergraph current = g;
    for (Node v : order) {
        if (!current.has_node(v) || !is_nest_point(current, v)) return false;
        current = remove_node(current, v);
    }
    return true;
}

bool is_rip_ordering(const RipOrdering& ordering) {
    if (ordering.edges.size() != ordering.parent.size()) return false;
    NodeSet seen;
    for (std::size_t k = 0; k < ordering.edges.size(); ++k) {
        const int j = ordering.parent[k];
        if (k == 0) {
            if (j != -1) return false;
        } else {
            if (j < 0 || static_cast<std::size_t>(j) >= k) return false;
            if (!is_subset(set_intersection(ordering.edges[k], seen), ordering.edges[static_cast<std::size_t>(j)])) {
                return false;
            }
        }
        seen = set_union(seen, ordering.edges[k]);
    }
    return true;
}

}  // namespace multilin
