#include "multilin/limits.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace multilin {

namespace {

int scale_int(int value, double factor) {
    return std::max(1, static_cast<int>(std::floor(value * factor)));
}

}  // namespace

Limits Limits::scaled(double factor) const {
    Limits out = *this;
    if (!(factor > 0) || factor == 1.0) return out;
    out.max_enumerate_nodes = scale_int(max_enumerate_nodes, factor);
    out.max_hull_nodes = scale_int(max_hull_nodes, factor);
    out.max_chain_nodes = scale_int(max_chain_nodes, factor);
    out.max_block_nodes = scale_int(max_block_nodes, factor);
    out.flower_rank_cap = scale_int(flower_rank_cap, factor);
    out.junction_width_cap = scale_int(junction_width_cap, factor);
    out.max_dd_rays = static_cast<std::size_t>(std::floor(static_cast<double>(max_dd_rays) * factor));
    out.max_hull_points = static_cast<std::size_t>(std::floor(static_cast<double>(max_hull_points) * factor));
    out.max_dimension = scale_int(max_dimension, factor);
    return out;
}

const Limits& Limits::defaults() {
    static const Limits instance = [] {
        double factor = 1.0;
        if (const char* env = std::getenv("MULTILIN_GUARD_SCALE")) {
            try {
                factor = std::stod(env);
            } catch (...) {
                factor = 1.0;
            }
        }
        return Limits{}.scaled(factor);
    }();
    return instance;
}

}  // namespace multilin
