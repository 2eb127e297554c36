#pragma once

#include "multilin/hypergraph.hpp"
#include "multilin/polyhedron.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace multilin {

/// An instance file: the instance plus free-form string metadata (generator
/// parameters and the like), kept in key order.
struct InstanceDocument {
    Instance instance;
    std::map<std::string, std::string> meta;
};

/// JSON instance file:
///   {"nodes": ["1","2"], "edges": [["1","2"]],
///    "node_costs": {"1": 3}, "edge_costs": {"1,2": "-1/2"}, "meta": {...}}
/// Node names match [A-Za-z0-9_]+. Costs are JSON integers or strings holding a
/// rational ("-3/2", "0.25"). Missing node costs are 0; every edge needs a nonzero cost.
/// Edge cost keys list the edge's nodes in any order, comma separated.
/// Throws ParseError for anything malformed, including duplicate edges.
InstanceDocument parse_instance(std::istream& in);
InstanceDocument parse_instance_text(const std::string& text);
/// IoError when the file cannot be read.
InstanceDocument read_instance_file(const std::string& path);

/// Deterministic rendering: nodes in index order, edges in canonical order with node
/// names in index order, integer costs as numbers and others as "p/q" strings.
void write_instance(std::ostream& out, const InstanceDocument& doc);
std::string instance_to_string(const InstanceDocument& doc);
/// IoError when the file cannot be written.
void write_instance_file(const std::string& path, const InstanceDocument& doc);

struct LpExportOptions {
    /// Decimal coefficients for external solvers. Lossy.
    bool decimal = false;
    int digits = 12;
    std::string title;
};

/// LP text format: Maximize / Subject To / Bounds (all free) / End. Coefficients are
/// exact fractions unless options.decimal is set. `objective` may be empty.
void write_lp(std::ostream& out, const PolyhedronH& p, const std::vector<Rational>& objective,
              const LpExportOptions& options = {});

/// "variables N\ninequalities N\nequations N\nmax_row_nonzeros N\n"
std::string census_text(const Census& census);

}  // namespace multilin
