#include "chroma/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace chroma {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

VertexLabel parse_label_text(const std::string& text) {
    if (text.size() >= 3 && text.front() == '<' && text.back() == '>') {
        const std::string inner = text.substr(1, text.size() - 2);
        if (all_digits(inner)) return VertexLabel::constant(std::stoi(inner));
    }
    // Injective map strings: "134" (one digit per coordinate) or "10.2.3".
    std::vector<int> vals;
    if (text.find('.') != std::string::npos) {
        std::stringstream ss(text);
        std::string part;
        bool ok = true;
        while (std::getline(ss, part, '.')) {
            if (!all_digits(part)) {
                ok = false;
                break;
            }
            vals.push_back(std::stoi(part));
        }
        if (!ok) vals.clear();
    } else if (all_digits(text) && text.size() >= 2) {
        for (char c : text) vals.push_back(c - '0');
    }
    if (vals.size() >= 2) {
        std::set<int> seen(vals.begin(), vals.end());
        bool positive = true;
        for (int v : vals)
            if (v < 1) positive = false;
        if (positive && seen.size() == vals.size()) return VertexLabel::map_string(std::move(vals));
    }
    return VertexLabel::plain(text);
}

Graph read_graph(std::istream& in) {
    std::string line;
    int n = -1;
    Graph g;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        auto fail = [&](const std::string& why) {
            throw std::invalid_argument("graph format error at line " + std::to_string(lineno) + ": " + why);
        };
        if (tag == "p") {
            if (n >= 0) fail("duplicate p line");
            if (!(ls >> n) || n < 0) fail("bad vertex count");
            g = Graph(n);
        } else if (tag == "e") {
            if (n < 0) fail("e line before p line");
            int u, v;
            if (!(ls >> u >> v)) fail("bad edge line");
            if (u < 1 || u > n || v < 1 || v > n) fail("edge endpoint out of range");
            g.add_edge(u - 1, v - 1);
        } else if (tag == "l") {
            if (n < 0) fail("l line before p line");
            int u;
            if (!(ls >> u)) fail("bad label line");
            if (u < 1 || u > n) fail("label vertex out of range");
            std::string rest;
            std::getline(ls, rest);
            std::size_t start = rest.find_first_not_of(" \t");
            if (start == std::string::npos) fail("empty label text");
            g.set_label(u - 1, parse_label_text(rest.substr(start)));
        } else {
            fail("unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) throw std::invalid_argument("graph format error: missing p line");
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    const int n = g.vertex_count();
    out << "p " << n << "\n";
    for (int u = 0; u < n; ++u) {
        const BitRow& row = g.neighbors(u);
        for (int v = row.find_first(); v >= 0; v = row.find_next(v))
            if (v >= u) out << "e " << u + 1 << " " << v + 1 << "\n";
    }
    if (g.has_labels()) {
        for (int u = 0; u < n; ++u) {
            const std::string text = g.label(u).to_string();
            if (!text.empty()) out << "l " << u + 1 << " " << text << "\n";
        }
    }
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

} // namespace chroma
