#pragma once

#include <cstddef>

namespace multilin {

/// Resource guards. Every exponential routine checks one of these and throws
/// ResourceError instead of degrading. Defaults are multiplied by the
/// MULTILIN_GUARD_SCALE environment variable (read once, default 1).
struct Limits {
    int max_enumerate_nodes = 25;      // enumerate_S / brute force
    int max_hull_nodes = 12;           // multilinear_polytope
    int max_chain_nodes = 10;          // chain block hull
    int max_block_nodes = 12;          // complete_block |f|
    int flower_rank_cap = 8;           // flower relaxation / separation
    int junction_width_cap = 6;        // min-fill width accepted by junction_ef
    std::size_t max_dd_rays = 400000;  // double description intermediate rays
    std::size_t max_hull_points = 4096;
    int max_dimension = 4096;

    /// Defaults scaled by MULTILIN_GUARD_SCALE.
    static const Limits& defaults();
    /// Same as defaults() but ignoring the environment.
    static Limits unscaled() { return Limits{}; }
    Limits scaled(double factor) const;
};

}  // namespace multilin
