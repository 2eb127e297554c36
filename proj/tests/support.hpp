#pragma once

// Small independent reference implementations used to derive expected values.
// They follow the definitions literally and share no code with the library
// beyond the Hypergraph container.

#include "multilin/hypergraph.hpp"
#include "multilin/polyhedron.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace support {

using multilin::Hypergraph;
using multilin::Node;
using multilin::NodeSet;
using multilin::Point;
using multilin::Rational;

inline bool member(const NodeSet& e, Node v) { return std::find(e.begin(), e.end(), v) != e.end(); }

/// Cycle of the given kind (0 Berge, 1 gamma, 2 beta) by trying every sequence of
/// distinct edges and distinct nodes. Only for a handful of edges.
inline bool has_cycle(const Hypergraph& g, int kind) {
    const auto& E = g.edges();
    const int m = static_cast<int>(E.size());
    std::vector<int> seq;
    std::vector<bool> used(static_cast<std::size_t>(m));
    // nodes: v_i in e_{i-1} ∩ e_i, with e_0 = e_t.
    std::function<bool()> check_nodes = [&]() {
        const int t = static_cast<int>(seq.size());
        if (t < 2) return false;
        if (kind > 0 && t < 3) return false;
        std::vector<Node> chosen;
        std::function<bool(int)> pick = [&](int i) -> bool {
            if (i == t) return true;
            const NodeSet& prev = E[static_cast<std::size_t>(seq[static_cast<std::size_t>((i + t - 1) % t)])];
            const NodeSet& cur = E[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])];
            for (Node v : cur) {
                if (!member(prev, v) || member(chosen, v)) continue;
                bool ok = true;
                if (kind == 2 || (kind == 1 && i > 0)) {
                    for (int j = 0; j < t && ok; ++j) {
                        if (j == i || j == (i + t - 1) % t) continue;
                        if (member(E[static_cast<std::size_t>(seq[static_cast<std::size_t>(j)])], v)) ok = false;
                    }
                }
                if (!ok) continue;
                chosen.push_back(v);
                if (pick(i + 1)) return true;
                chosen.pop_back();
            }
            return false;
        };
        return pick(0);
    };
    std::function<bool()> grow = [&]() -> bool {
        if (check_nodes()) return true;
        for (int k = 0; k < m; ++k) {
            if (used[static_cast<std::size_t>(k)]) continue;
            used[static_cast<std::size_t>(k)] = true;
            seq.push_back(k);
            bool found = grow();
            seq.pop_back();
            used[static_cast<std::size_t>(k)] = false;
            if (found) return true;
        }
        return false;
    };
    return grow();
}

/// Random hypergraph on nodes 1..n with up to m distinct edges of size 2..r.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int m, int r) {
    std::vector<std::vector<int>> edges;
    std::uniform_int_distribution<int> size_dist(2, std::min(r, n));
    for (int attempt = 0; attempt < 10 * m && static_cast<int>(edges.size()) < m; ++attempt) {
        std::vector<int> nodes(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) nodes[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(nodes.begin(), nodes.end(), rng);
        nodes.resize(static_cast<std::size_t>(size_dist(rng)));
        std::sort(nodes.begin(), nodes.end());
        if (std::find(edges.begin(), edges.end(), nodes) == edges.end()) edges.push_back(nodes);
    }
    return Hypergraph::numbered(n, edges);
}

/// Value of the polynomial at a 0/1 node assignment (positions follow g.nodes()).
inline Rational evaluate_polynomial(const Hypergraph& g, const std::vector<Rational>& node_costs,
                                    const std::vector<Rational>& edge_costs, std::uint64_t mask) {
    auto bit = [&](Node v) {
        auto pos = std::lower_bound(g.nodes().begin(), g.nodes().end(), v) - g.nodes().begin();
        return (mask >> pos) & 1U;
    };
    Rational total = 0;
    for (Node v : g.nodes()) {
        if (bit(v)) total += node_costs[static_cast<std::size_t>(v)];
    }
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
        bool all = true;
        for (Node v : g.edges()[k]) all = all && bit(v);
        if (all) total += edge_costs[k];
    }
    return total;
}

/// Rank of a set of rational rows (plain Gaussian elimination).
inline std::size_t row_rank(std::vector<std::vector<Rational>> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][c] == 0) continue;
            Rational f = rows[i][c] / rows[rank][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// x is a vertex of P: feasible and its tight rows have full column rank.
inline bool is_vertex(const multilin::PolyhedronH& p, const Point& x) {
    if (!p.contains(x)) return false;
    std::vector<std::vector<Rational>> tight;
    for (const auto& c : p.constraints()) {
        if (c.evaluate(x) != c.rhs) continue;
        std::vector<Rational> row(p.dimension());
        for (const auto& [j, a] : c.terms) row[static_cast<std::size_t>(j)] = a;
        tight.push_back(std::move(row));
    }
    return row_rank(tight) == p.dimension();
}

}  // namespace support
