#include "multilin/instance_io.hpp"

#include "multilin/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace multilin {

namespace {

using Json = nlohmann::ordered_json;

bool valid_name(const std::string& name) {
    return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
}

Rational parse_cost(const Json& value, const std::string& where) {
    if (value.is_number_integer()) {
        if (value.is_number_unsigned()) return Rational(Integer(std::to_string(value.get<std::uint64_t>()), 10));
        return Rational(Integer(std::to_string(value.get<std::int64_t>()), 10));
    }
    if (value.is_string()) return parse_rational(value.get<std::string>());
    throw ParseError(where + ": cost must be an integer or a rational string");
}

Json render_cost(const Rational& value) {
    if (is_integer(value) && value.get_num().fits_slong_p()) return value.get_num().get_si();
    return to_string(value);
}

std::vector<std::string> split_key(const std::string& key) {
    std::vector<std::string> out;
    std::string part;
    std::istringstream in(key);
    while (std::getline(in, part, ',')) out.push_back(part);
    if (!key.empty() && key.back() == ',') out.emplace_back();
    return out;
}

}  // namespace

InstanceDocument parse_instance(std::istream& in) {
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("instance file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("instance file must hold a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "nodes" && key != "edges" && key != "node_costs" && key != "edge_costs" && key != "meta") {
            throw ParseError("unknown field '" + key + "'");
        }
    }
    if (!doc.contains("nodes") || !doc["nodes"].is_array()) throw ParseError("'nodes' must be a list of names");
    if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParseError("'edges' must be a list of node lists");

    std::vector<std::string> nodes;
    std::set<std::string> seen;
    for (const auto& v : doc["nodes"]) {
        if (!v.is_string()) throw ParseError("node names must be strings");
        auto name = v.get<std::string>();
        if (!valid_name(name)) throw ParseError("invalid node name '" + name + "' (allowed: letters, digits, _)");
        if (!seen.insert(name).second) throw ParseError("duplicate node '" + name + "'");
        nodes.push_back(name);
    }
    std::vector<std::vector<std::string>> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array()) throw ParseError("each edge must be a list of node names");
        std::vector<std::string> names;
        for (const auto& v : e) {
            if (!v.is_string()) throw ParseError("edge members must be node names");
            names.push_back(v.get<std::string>());
        }
        if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) {
            throw ParseError("edge lists a node twice");
        }
        edges.push_back(std::move(names));
    }

    InstanceDocument out;
    try {
        out.instance.graph = Hypergraph::named(nodes, edges);
    } catch (const ArgumentError& e) {
        throw ParseError(std::string("invalid hypergraph: ") + e.what());
    }
    const Hypergraph& g = out.instance.graph;
    auto lookup = [&](const std::string& name, const std::string& where) {
        const Node v = g.universe()->find(name);
        if (v < 0) throw ParseError(where + ": unknown node '" + name + "'");
        return v;
    };

    out.instance.node_costs.assign(g.universe()->size(), Rational(0));
    if (doc.contains("node_costs")) {
        if (!doc["node_costs"].is_object()) throw ParseError("'node_costs' must be an object keyed by node name");
        for (const auto& [name, value] : doc["node_costs"].items()) {
            const Node v = lookup(name, "node_costs");
            out.instance.node_costs[static_cast<std::size_t>(v)] = parse_cost(value, "node_costs[" + name + "]");
        }
    }

    std::vector<std::optional<Rational>> edge_costs(g.edge_count());
    if (doc.contains("edge_costs")) {
        if (!doc["edge_costs"].is_object()) throw ParseError("'edge_costs' must be an object keyed by edge");
        for (const auto& [key, value] : doc["edge_costs"].items()) {
            std::vector<Node> members;
            for (const auto& name : split_key(key)) members.push_back(lookup(name, "edge_costs[" + key + "]"));
            const NodeSet e = make_node_set(members);
            if (e.size() != members.size()) throw ParseError("edge_costs[" + key + "]: repeated node");
            const int k = g.edge_index(e);
            if (k < 0) throw ParseError("edge_costs[" + key + "]: not an edge");
            auto& slot = edge_costs[static_cast<std::size_t>(k)];
            if (slot) throw ParseError("edge_costs: edge " + g.set_label(e) + " given twice");
            slot = parse_cost(value, "edge_costs[" + key + "]");
        }
    }
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        if (!edge_costs[k]) throw ParseError("edge " + g.set_label(g.edges()[k]) + " has no cost");
        if (*edge_costs[k] == 0) throw ParseError("edge " + g.set_label(g.edges()[k]) + " has a zero cost");
        out.instance.edge_costs.push_back(*edge_costs[k]);
    }

    if (doc.contains("meta")) {
        if (!doc["meta"].is_object()) throw ParseError("'meta' must be an object");
        for (const auto& [key, value] : doc["meta"].items()) {
            out.meta[key] = value.is_string() ? value.get<std::string>() : value.dump();
        }
    }
    return out;
}

InstanceDocument parse_instance_text(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

InstanceDocument read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read '" + path + "'");
    return parse_instance(in);
}

void write_instance(std::ostream& out, const InstanceDocument& doc) {
    const auto& inst = doc.instance;
    inst.validate();
    const Hypergraph& g = inst.graph;
    Json j;
    Json nodes = Json::array();
    for (Node v : g.nodes()) nodes.push_back(g.name(v));
    j["nodes"] = nodes;
    Json edges = Json::array();
    for (const auto& e : g.edges()) {
        Json names = Json::array();
        for (Node v : e) names.push_back(g.name(v));
        edges.push_back(names);
    }
    j["edges"] = edges;
    Json node_costs = Json::object();
    for (Node v : g.nodes()) node_costs[g.name(v)] = render_cost(inst.node_cost(v));
    j["node_costs"] = node_costs;
    Json edge_costs = Json::object();
    for (std::size_t k = 0; k < g.edge_count(); ++k) edge_costs[g.set_key(g.edges()[k])] = render_cost(inst.edge_costs[k]);
    j["edge_costs"] = edge_costs;
    if (!doc.meta.empty()) {
        Json meta = Json::object();
        for (const auto& [key, value] : doc.meta) meta[key] = value;
        j["meta"] = meta;
    }
    out << j.dump(2) << '\n';
}

std::string instance_to_string(const InstanceDocument& doc) {
    std::ostringstream out;
    write_instance(out, doc);
    return out.str();
}

void write_instance_file(const std::string& path, const InstanceDocument& doc) {
    const std::string text = instance_to_string(doc);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << text;
    if (!out) throw IoError("write to '" + path + "' failed");
}

namespace {

std::string number(const Rational& value, const LpExportOptions& options) {
    return options.decimal ? to_decimal(value, options.digits) : to_string(value);
}

/// " + 3 x", " - 1/2 y", with the leading sign dropped for the first term.
void write_terms(std::ostream& out, const std::vector<std::pair<int, Rational>>& terms,
                 const std::vector<std::string>& names, const LpExportOptions& options) {
    bool first = true;
    for (const auto& [j, coef] : terms) {
        const bool negative = coef < 0;
        const Rational magnitude = abs(coef);
        if (first) {
            out << (negative ? "- " : "");
        } else {
            out << (negative ? " - " : " + ");
        }
        if (magnitude != 1) out << number(magnitude, options) << ' ';
        out << names[static_cast<std::size_t>(j)];
        first = false;
    }
    if (first) out << "0 " << (names.empty() ? std::string("dummy") : names.front());
}

}  // namespace

void write_lp(std::ostream& out, const PolyhedronH& p, const std::vector<Rational>& objective,
              const LpExportOptions& options) {
    const auto& names = p.variables();
    if (!options.title.empty()) out << "\\ " << options.title << '\n';
    out << (options.decimal ? "\\ coefficients rounded to " + std::to_string(options.digits) + " decimals (lossy)\n"
                            : "\\ exact rational coefficients\n");
    out << "Maximize\n obj: ";
    std::vector<std::pair<int, Rational>> obj;
    for (std::size_t j = 0; j < objective.size() && j < names.size(); ++j) {
        if (objective[j] != 0) obj.emplace_back(static_cast<int>(j), objective[j]);
    }
    write_terms(out, obj, names, options);
    out << "\nSubject To\n";
    std::size_t row = 0;
    for (const auto& c : p.constraints()) {
        out << " c" << ++row << ": ";
        write_terms(out, c.terms, names, options);
        out << (c.sense == Sense::Equal ? " = " : " <= ") << number(c.rhs, options) << '\n';
    }
    out << "Bounds\n";
    for (const auto& name : names) out << " " << name << " free\n";
    out << "End\n";
}

std::string census_text(const Census& census) {
    return "variables " + std::to_string(census.variables) + "\ninequalities " + std::to_string(census.inequalities) +
           "\nequations " + std::to_string(census.equations) + "\nmax_row_nonzeros " +
           std::to_string(census.max_row_nonzeros) + "\n";
}

}  // namespace multilin
