#pragma once

#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "simplicial/centrality.hpp"
#include "simplicial/epidemic.hpp"
#include "simplicial/errors.hpp"
#include "simplicial/graph.hpp"
#include "simplicial/metric.hpp"
#include "simplicial/mining.hpp"

namespace simplicial {

namespace detail {

inline std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

inline std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

inline bool skippable(const std::string& line) {
    const std::string t = trim(line);
    return t.empty() || t[0] == '#';
}

inline VertexId parse_vertex(const std::string& field, const std::string& source,
                             std::size_t line) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(field, &pos);
        if (pos != field.size() || v < 0) throw std::invalid_argument(field);
        return static_cast<VertexId>(v);
    } catch (const std::exception&) {
        throw ParseError(source, line, "invalid vertex id '" + field + "'");
    }
}

inline double parse_real(const std::string& field, const std::string& source, std::size_t line) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(field, &pos);
        if (pos != field.size()) throw std::invalid_argument(field);
        return v;
    } catch (const std::exception&) {
        throw ParseError(source, line, "invalid number '" + field + "'");
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Parsers
// ---------------------------------------------------------------------------

/// Edge-list text: one "u,v" pair per line, '#' comments.
inline Graph parse_edge_list(std::istream& in, const std::string& source = "<edges>") {
    Graph g;
    std::string line;
    std::size_t lineno = 0;
    bool any = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::skippable(line)) continue;
        const auto fields = detail::split_csv(line);
        if (fields.size() != 2) {
            throw ParseError(source, lineno, "expected 'u,v', got '" + detail::trim(line) + "'");
        }
        const VertexId u = detail::parse_vertex(fields[0], source, lineno);
        const VertexId v = detail::parse_vertex(fields[1], source, lineno);
        if (u == v) throw ParseError(source, lineno, "loop edge " + fields[0] + "," + fields[1]);
        g.add_edge(u, v);
        any = true;
    }
    if (!any) throw ParseError(source, lineno, "no edges found");
    return g;
}

/// Point-cloud CSV: "id,x1,...,xn" per line.
inline PointCloud parse_point_cloud(std::istream& in, const std::string& source = "<points>") {
    PointCloud pc;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::skippable(line)) continue;
        const auto fields = detail::split_csv(line);
        if (fields.size() < 2) {
            throw ParseError(source, lineno, "expected 'id,x1,...', got '" + detail::trim(line) + "'");
        }
        const VertexId id = detail::parse_vertex(fields[0], source, lineno);
        std::vector<double> coords;
        for (std::size_t i = 1; i < fields.size(); ++i) {
            coords.push_back(detail::parse_real(fields[i], source, lineno));
        }
        try {
            pc.add_point(id, std::move(coords));
        } catch (const std::invalid_argument& e) {
            throw ParseError(source, lineno, e.what());
        }
    }
    if (pc.size() == 0) throw ParseError(source, lineno, "no points found");
    return pc;
}

/// Exchange-data CSV: "u,v,size" per line; populates the d4/d5 records.
inline void parse_exchange_data(std::istream& in, PointCloud& pc,
                                const std::string& source = "<exchange>") {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::skippable(line)) continue;
        const auto fields = detail::split_csv(line);
        if (fields.size() != 3) {
            throw ParseError(source, lineno, "expected 'u,v,size', got '" + detail::trim(line) + "'");
        }
        const VertexId u = detail::parse_vertex(fields[0], source, lineno);
        const VertexId v = detail::parse_vertex(fields[1], source, lineno);
        const double size = detail::parse_real(fields[2], source, lineno);
        try {
            pc.record_exchange(u, v, size);
        } catch (const std::invalid_argument& e) {
            throw ParseError(source, lineno, e.what());
        }
    }
}

/// Feature-table CSV with header "individual,feature1,...".
inline FeatureTable parse_feature_table(std::istream& in, const std::string& source = "<features>") {
    FeatureTable tbl;
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::string> names;
    std::vector<std::vector<double>> columns;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::skippable(line)) continue;
        const auto fields = detail::split_csv(line);
        if (names.empty()) {
            if (fields.size() < 2 || fields[0] != "individual") {
                throw ParseError(source, lineno, "expected header 'individual,<feature>,...'");
            }
            names.assign(fields.begin() + 1, fields.end());
            columns.resize(names.size());
            continue;
        }
        if (fields.size() != names.size() + 1) {
            throw ParseError(source, lineno, "expected " + std::to_string(names.size() + 1) +
                                                 " fields, got " + std::to_string(fields.size()));
        }
        try {
            tbl.add_individual(fields[0]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(source, lineno, e.what());
        }
        for (std::size_t i = 0; i < names.size(); ++i) {
            columns[i].push_back(detail::parse_real(fields[i + 1], source, lineno));
        }
    }
    if (names.empty() || tbl.size() == 0) throw ParseError(source, lineno, "no feature rows found");
    for (std::size_t i = 0; i < names.size(); ++i) tbl.add_feature(names[i], std::move(columns[i]));
    return tbl;
}

/// Target CSV: "individual,label" rows with label 0 or 1. A leading
/// "individual,label" header is accepted.
inline Target parse_target(std::istream& in, const std::string& name,
                           const std::string& source = "<target>") {
    Target t;
    t.name = name;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::skippable(line)) continue;
        const auto fields = detail::split_csv(line);
        if (fields.size() != 2) {
            throw ParseError(source, lineno, "expected 'individual,label'");
        }
        if (lineno == 1 && fields[1] == "label") continue;
        if (fields[1] != "0" && fields[1] != "1") {
            throw ParseError(source, lineno, "label must be 0 or 1, got '" + fields[1] + "'");
        }
        if (t.labels.contains(fields[0])) {
            throw ParseError(source, lineno, "duplicate individual '" + fields[0] + "'");
        }
        t.labels[fields[0]] = fields[1] == "1";
    }
    if (t.labels.empty()) throw ParseError(source, lineno, "no labels found");
    return t;
}

/// Pattern specs as JSON: an array whose elements are condition objects
/// {feature, op, threshold} (length-1 patterns) or arrays of condition
/// objects (conjunctions).
inline std::vector<Pattern> parse_patterns_json(std::istream& in,
                                                const std::string& source = "<patterns>") {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(source, 0, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError(source, 0, "expected a top-level JSON array");

    auto parse_condition = [&](const nlohmann::json& node) -> AtomicCondition {
        if (!node.is_object() || !node.contains("feature") || !node.contains("op") ||
            !node.contains("threshold")) {
            throw ParseError(source, 0, "condition needs feature, op, threshold");
        }
        const auto op = parse_op(node["op"].get<std::string>());
        if (!op) throw ParseError(source, 0, "invalid op '" + node["op"].get<std::string>() + "'");
        return {node["feature"].get<std::string>(), *op, node["threshold"].get<double>()};
    };

    std::vector<Pattern> patterns;
    for (const auto& entry : doc) {
        if (entry.is_object()) {
            patterns.push_back(Pattern{parse_condition(entry)});
        } else if (entry.is_array() && !entry.empty()) {
            std::vector<AtomicCondition> conds;
            for (const auto& node : entry) conds.push_back(parse_condition(node));
            patterns.push_back(Pattern{std::move(conds)});
        } else {
            throw ParseError(source, 0, "pattern entry must be an object or nonempty array");
        }
    }
    return patterns;
}

// ---------------------------------------------------------------------------
// Writers
// ---------------------------------------------------------------------------

/// x printed with 6 significant digits (table mode: fixed 3 decimals).
inline std::string format_value(double x, bool table_mode = false) {
    std::ostringstream out;
    if (table_mode) {
        out << std::fixed << std::setprecision(3) << x;
    } else {
        out << std::setprecision(6) << x;
    }
    return out.str();
}

inline void write_centrality_csv(std::ostream& out, const std::vector<CentralityReport>& reports,
                                 bool table_mode = false) {
    out << "vertex,measure,p,value\n";
    for (const auto& report : reports) {
        for (std::size_t i = 0; i < report.order.size(); ++i) {
            out << report.order[i] << ',' << report.measure << ','
                << (report.p ? std::to_string(*report.p) : "max") << ','
                << format_value(report.values[i], table_mode) << '\n';
        }
    }
}

inline nlohmann::json centrality_to_json(const std::vector<CentralityReport>& reports) {
    nlohmann::json doc;
    doc["reports"] = nlohmann::json::array();
    for (const auto& report : reports) {
        nlohmann::json entry;
        entry["measure"] = report.measure;
        if (report.p) {
            entry["p"] = *report.p;
        } else {
            entry["p"] = "max";
        }
        nlohmann::json values = nlohmann::json::object();
        for (std::size_t i = 0; i < report.order.size(); ++i) {
            values[std::to_string(report.order[i])] = report.values[i];
        }
        entry["values"] = std::move(values);
        entry["meta"] = {{"dim", report.meta.complex_dim},
                         {"variant", report.meta.variant},
                         {"eigenvalues", report.meta.eigenvalues},
                         {"iterations", report.meta.iterations},
                         {"all_zero", report.meta.all_zero},
                         {"cross_component_scale", report.meta.cross_component_scale}};
        doc["reports"].push_back(std::move(entry));
    }
    return doc;
}

inline void write_mining_csv(std::ostream& out, const std::vector<PatternEvaluation>& rows) {
    out << "pattern,target,support,share,quality,quality_exact\n";
    for (const auto& row : rows) {
        out << '"' << row.pattern.to_string() << "\"," << row.target << ',' << row.support << ','
            << format_value(row.share) << ',' << format_value(row.quality) << ','
            << (row.exact ? row.exact->to_string() : "") << '\n';
    }
}

/// Per-step JSON records {t, infectious_ids, g_expected}, one per line.
inline void write_si_trajectory(std::ostream& out, const std::vector<SIState>& states,
                                const SIParams& params) {
    for (const auto& state : states) {
        nlohmann::json record;
        record["t"] = state.t;
        record["infectious_ids"] = state.infectious;
        record["g_expected"] = expected_infected(params, static_cast<double>(state.t));
        if (state.stalled) record["stalled"] = true;
        out << record.dump() << '\n';
    }
}

}  // namespace simplicial
