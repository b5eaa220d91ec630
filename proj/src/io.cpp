#include "arcgraph/io.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "arcgraph/errors.hpp"

namespace arcgraph::io {

namespace {

json indices(const Bitset& b) {
    json out = json::array();
    b.for_each([&](std::size_t i) { out.push_back(i); });
    return out;
}

json label_to_json(const VertexLabel& label) {
    if (const auto* pair = std::get_if<SubsetPair>(&label)) return {{"X", indices(pair->x)}, {"Y", indices(pair->y)}};
    return label_to_string(label);
}

std::vector<std::size_t> index_list(const json& j) {
    std::vector<std::size_t> out;
    for (const auto& v : j) out.push_back(v.get<std::size_t>());
    return out;
}

std::vector<VertexLabel> labels_from_json(const json& j) {
    static const std::regex walk_pattern(R"(\((\d+(,\d+)*)?\))");
    std::size_t universe = 0;
    for (const auto& l : j)
        if (l.is_object())
            for (const char* key : {"X", "Y"})
                for (auto v : index_list(l.at(key))) universe = std::max(universe, v + 1);

    std::vector<VertexLabel> labels;
    for (const auto& l : j) {
        if (l.is_object()) {
            SubsetPair p{Bitset(universe), Bitset(universe)};
            for (auto v : index_list(l.at("X"))) p.x.set(v);
            for (auto v : index_list(l.at("Y"))) p.y.set(v);
            labels.emplace_back(std::move(p));
            continue;
        }
        const auto s = l.get<std::string>();
        if (std::regex_match(s, walk_pattern)) {
            Walk w;
            std::stringstream ss(s.substr(1, s.size() - 2));
            for (std::string part; std::getline(ss, part, ',');) w.push_back(std::stoul(part));
            labels.emplace_back(std::move(w));
        } else {
            labels.emplace_back(s);
        }
    }
    return labels;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string subset_string(const Bitset& b) {
    std::string s = "{";
    b.for_each([&](std::size_t i) { s += (s.size() > 1 ? "," : "") + std::to_string(i); });
    return s + "}";
}

}  // namespace

json to_json(const Digraph& g) {
    json arcs = json::array();
    for (auto [u, v] : g.arcs()) arcs.push_back({u, v});
    json j{{"n", g.vertex_count()}, {"arcs", std::move(arcs)}};
    if (g.has_labels()) {
        json labels = json::array();
        for (const auto& l : g.labels()) labels.push_back(label_to_json(l));
        j["labels"] = std::move(labels);
    }
    return j;
}

Digraph digraph_from_json(const json& j) {
    try {
        const auto n = j.at("n").get<std::size_t>();
        std::vector<Arc> arcs;
        for (const auto& a : j.at("arcs")) {
            if (a.size() != 2) throw InvalidInput("arc entries must be [u, v] pairs");
            arcs.emplace_back(a[0].get<std::size_t>(), a[1].get<std::size_t>());
        }
        Digraph g(n, arcs);
        if (j.contains("labels")) g.set_labels(labels_from_json(j.at("labels")));
        return g;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed digraph JSON: ") + e.what());
    }
}

json to_json(const Poset& p) {
    json less = json::array();
    for (auto [u, v] : p.relation()) less.push_back({u, v});
    json j{{"m", p.size()}, {"less", std::move(less)}};
    if (p.has_labels()) {
        json labels = json::array();
        for (std::size_t i = 0; i < p.size(); ++i) labels.push_back(indices(p.labels().to_bitset(i)));
        j["labels"] = std::move(labels);
    }
    return j;
}

Poset poset_from_json(const json& j) {
    try {
        const auto m = j.at("m").get<std::size_t>();
        std::vector<std::pair<std::size_t, std::size_t>> rel;
        for (const auto& a : j.at("less")) {
            if (a.size() != 2) throw InvalidInput("relation entries must be [u, v] pairs");
            rel.emplace_back(a[0].get<std::size_t>(), a[1].get<std::size_t>());
        }
        return Poset::from_relation(m, rel);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed poset JSON: ") + e.what());
    }
}

json to_json(const Coloring& c) { return {{"k", c.k}, {"colors", c.colors}}; }

json to_json(const WidthCertificate& c) {
    return {{"width", c.width()}, {"antichain", c.antichain}, {"chains", c.chains}};
}

json to_json(const VertexMap& m) { return {{"assignment", m.assignment}}; }

json to_json(const VerificationReport& r) {
    json j{{"instance", r.instance},
           {"check", r.check},
           {"k", r.k},
           {"relation", r.relation == Relation::equal ? "equal" : "within_bounds"},
           {"agreement", r.agreement},
           {"seconds", r.seconds}};
    j["direct"] = r.direct ? json(*r.direct) : json(nullptr);
    j["formula"] = r.formula ? json(*r.formula) : json(nullptr);
    if (r.lower_bound) j["lower_bound"] = *r.lower_bound;
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

std::string canonical(const json& j) { return j.dump(); }

Digraph read_edge_list(std::istream& in) {
    std::optional<std::size_t> n;
    std::vector<Arc> arcs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first)) continue;
        auto bad = [&] { return InvalidInput("edge list line " + std::to_string(lineno) + ": cannot parse '" + line + "'"); };
        if (!n) {
            std::size_t count = 0;
            if (first != "n" || !(ss >> count)) throw bad();
            n = count;
            continue;
        }
        std::size_t u = 0, v = 0;
        try {
            u = std::stoul(first);
        } catch (const std::exception&) {
            throw bad();
        }
        if (!(ss >> v)) throw bad();
        std::string rest;
        if (ss >> rest) throw bad();
        arcs.emplace_back(u, v);
    }
    if (!n) throw InvalidInput("edge list is missing its 'n <count>' header");
    return Digraph(*n, arcs);
}

void write_edge_list(std::ostream& out, const Digraph& g) {
    out << "n " << g.vertex_count() << '\n';
    for (auto [u, v] : g.arcs()) out << u << ' ' << v << '\n';
}

Digraph read_digraph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    in >> std::ws;
    if (in.peek() == '{') {
        try {
            return digraph_from_json(json::parse(in));
        } catch (const json::parse_error& e) {
            throw InvalidInput(path.string() + ": " + e.what());
        }
    }
    return read_edge_list(in);
}

Poset read_poset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    try {
        return poset_from_json(json::parse(in));
    } catch (const json::parse_error& e) {
        throw InvalidInput(path.string() + ": " + e.what());
    }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path.string());
    out << text;
}

std::string to_dot(const Digraph& g, bool merge_symmetric) {
    std::ostringstream out;
    out << "digraph G {\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (g.has_labels()) out << " [label=\"" << dot_escape(label_to_string(g.labels()[v])) << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.arcs()) {
        const bool symmetric = u != v && g.has_arc(v, u);
        if (merge_symmetric && symmetric) {
            if (u < v) out << "  " << u << " -> " << v << " [dir=none];\n";
        } else {
            out << "  " << u << " -> " << v << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string hasse_dot(const Poset& p) {
    std::ostringstream out;
    out << "digraph Hasse {\n  rankdir=BT;\n  node [shape=point];\n";
    for (std::size_t v = 0; v < p.size(); ++v) {
        out << "  " << v;
        if (p.has_labels()) out << " [shape=plaintext, label=\"" << subset_string(p.labels().to_bitset(v)) << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : p.covers()) out << "  " << u << " -> " << v << " [arrowhead=none];\n";
    out << "}\n";
    return out.str();
}

}  // namespace arcgraph::io
