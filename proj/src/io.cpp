#include "triclub/io.hpp"

#include <algorithm>
#include <sstream>

namespace triclub {

GraphFormat format_from_name(const std::string& name) {
    if (name == "edge-list") return GraphFormat::edge_list;
    if (name == "dimacs") return GraphFormat::dimacs;
    if (name == "pace-gr") return GraphFormat::pace_gr;
    throw std::invalid_argument("unknown graph format: " + name);
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

long long parse_int(const std::string& tok, int line_no) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError("expected an integer, got '" + tok + "'", line_no);
    }
}

}  // namespace

ParsedGraph parse_graph(std::istream& in, GraphFormat format) {
    ParsedGraph out;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int line_no = 0;

    if (format == GraphFormat::edge_list) {
        auto id_of = [&](const std::string& label) {
            auto it = out.id_of_label.find(label);
            if (it != out.id_of_label.end()) return it->second;
            int id = (int)out.labels.size();
            out.labels.push_back(label);
            out.id_of_label.emplace(label, id);
            return id;
        };
        while (std::getline(in, line)) {
            ++line_no;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            auto toks = tokens_of(line);
            if (toks.empty()) continue;
            if (toks.size() != 2) throw ParseError("expected 'u v'", line_no);
            if (toks[0] == toks[1]) throw ParseError("self-loop at '" + toks[0] + "'", line_no);
            int u = id_of(toks[0]);
            int v = id_of(toks[1]);
            edges.emplace_back(u, v);
        }
        out.graph = Graph::from_edges((int)out.labels.size(), edges);
        return out;
    }

    // dimacs / pace-gr: numeric 1-indexed with a "p" header.
    long long n = -1, declared_m = -1;
    const char* kind = format == GraphFormat::dimacs ? "edge" : "tw";
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n >= 0) throw ParseError("duplicate header", line_no);
            if (toks.size() != 4 || toks[1] != kind)
                throw ParseError(std::string("expected 'p ") + kind + " <n> <m>'", line_no);
            n = parse_int(toks[2], line_no);
            declared_m = parse_int(toks[3], line_no);
            if (n < 0 || declared_m < 0) throw ParseError("negative header counts", line_no);
            continue;
        }
        if (n < 0) throw ParseError("edge before header", line_no);
        std::size_t base = 0;
        if (format == GraphFormat::dimacs) {
            if (toks[0] != "e") throw ParseError("expected 'e u v'", line_no);
            base = 1;
        }
        if (toks.size() != base + 2) throw ParseError("expected two endpoints", line_no);
        long long u = parse_int(toks[base], line_no);
        long long v = parse_int(toks[base + 1], line_no);
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError("vertex out of range 1.." + std::to_string(n), line_no);
        if (u == v) throw ParseError("self-loop at '" + std::to_string(u) + "'", line_no);
        edges.emplace_back((int)u - 1, (int)v - 1);
    }
    if (n < 0) throw ParseError("missing 'p' header", line_no + 1);
    out.graph = Graph::from_edges((int)n, edges);
    for (long long v = 1; v <= n; ++v) {
        out.labels.push_back(std::to_string(v));
        out.id_of_label.emplace(out.labels.back(), (int)v - 1);
    }
    return out;
}

ParsedGraph parse_graph_string(const std::string& text, GraphFormat format) {
    std::istringstream ss(text);
    return parse_graph(ss, format);
}

std::string write_graph(const Graph& g, const std::vector<std::string>& labels,
                        GraphFormat format) {
    if ((int)labels.size() != g.vertex_count())
        throw std::invalid_argument("label table size mismatch");
    std::ostringstream out;
    auto edges = g.edges();
    switch (format) {
        case GraphFormat::edge_list: {
            // Canonical form: per-edge smaller label first, lines sorted by labels,
            // so any text describing the same labeled graph writes identically.
            std::vector<std::pair<std::string, std::string>> lines;
            lines.reserve(edges.size());
            for (auto [u, v] : edges) {
                std::string a = labels[u], b = labels[v];
                if (b < a) std::swap(a, b);
                lines.emplace_back(std::move(a), std::move(b));
            }
            std::sort(lines.begin(), lines.end());
            for (auto& [a, b] : lines) out << a << ' ' << b << '\n';
            break;
        }
        case GraphFormat::dimacs:
            out << "p edge " << g.vertex_count() << ' ' << edges.size() << '\n';
            for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
            break;
        case GraphFormat::pace_gr:
            out << "p tw " << g.vertex_count() << ' ' << edges.size() << '\n';
            for (auto [u, v] : edges) out << u + 1 << ' ' << v + 1 << '\n';
            break;
    }
    return out.str();
}

TreeDecomposition parse_td(std::istream& in, const ParsedGraph& graph) {
    TreeDecomposition td;
    std::string line;
    int line_no = 0;
    long long bags = -1, max_bag = -1, n = -1;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "s") {
            if (bags >= 0) throw ParseError("duplicate header", line_no);
            if (toks.size() != 5 || toks[1] != "td")
                throw ParseError("expected 's td <bags> <width+1> <n>'", line_no);
            bags = parse_int(toks[2], line_no);
            max_bag = parse_int(toks[3], line_no);
            n = parse_int(toks[4], line_no);
            if (bags < 0 || max_bag < 0 || n < 0) throw ParseError("negative header counts", line_no);
            td.bags.assign(bags, {});
            continue;
        }
        if (bags < 0) throw ParseError("content before 's td' header", line_no);
        if (toks[0] == "b") {
            if (toks.size() < 2) throw ParseError("bag line without id", line_no);
            long long id = parse_int(toks[1], line_no);
            if (id < 1 || id > bags) throw ParseError("bag id out of range", line_no);
            std::vector<int> bag;
            for (std::size_t i = 2; i < toks.size(); ++i) {
                auto it = graph.id_of_label.find(toks[i]);
                if (it == graph.id_of_label.end())
                    throw ParseError("bag vertex '" + toks[i] + "' not in the graph", line_no);
                bag.push_back(it->second);
            }
            std::sort(bag.begin(), bag.end());
            bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
            td.bags[id - 1] = bag;
            continue;
        }
        if (toks.size() != 2) throw ParseError("expected a tree edge 'a b'", line_no);
        long long a = parse_int(toks[0], line_no);
        long long b = parse_int(toks[1], line_no);
        if (a < 1 || a > bags || b < 1 || b > bags)
            throw ParseError("tree edge endpoint out of range", line_no);
        td.edges.emplace_back((int)a - 1, (int)b - 1);
    }
    if (bags < 0) throw ParseError("missing 's td' header", line_no + 1);
    return td;
}

TreeDecomposition parse_td_string(const std::string& text, const ParsedGraph& graph) {
    std::istringstream ss(text);
    return parse_td(ss, graph);
}

std::string write_td(const TreeDecomposition& td, const std::vector<std::string>& labels) {
    std::ostringstream out;
    long long n = labels.size();
    out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n << '\n';
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (int v : td.bags[i]) out << ' ' << labels[v];
        out << '\n';
    }
    for (auto [a, b] : td.edges) out << a + 1 << ' ' << b + 1 << '\n';
    return out.str();
}

std::string write_dot(const Graph& g, const std::vector<std::string>& labels, const VertexSet& s) {
    std::ostringstream out;
    out << "graph witness {\n";
    for (int v : s.to_vector()) out << "  \"" << labels[v] << "\";\n";
    for (auto [u, v] : g.edges())
        if (s.contains(u) && s.contains(v))
            out << "  \"" << labels[u] << "\" -- \"" << labels[v] << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace triclub
