#include "rotsys/rot_format.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace rotsys {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

}  // namespace

RotationGraph parse_rotation_graph(std::string_view text) {
    RotationGraph::Rotations rotations;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto colon = line.find(':');
        if (colon == std::string_view::npos)
            throw ParseError(line_no, "expected '<vertex-id>: <neighbors>'");
        const std::string_view id = trim(line.substr(0, colon));
        if (id.empty()) throw ParseError(line_no, "missing vertex id before ':'");
        if (id.find_first_of(" \t") != std::string_view::npos)
            throw ParseError(line_no, "vertex id must be a single token");

        std::vector<std::string> nbrs;
        std::istringstream rest{std::string(line.substr(colon + 1))};
        std::string tok;
        while (rest >> tok) nbrs.push_back(tok);
        rotations.emplace_back(std::string(id), std::move(nbrs));
    }
    try {
        return RotationGraph::from_rotations(rotations);
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("invalid rotation graph: ") + e.what());
    }
}

std::string serialize_rotation_graph(const RotationGraph& g) {
    std::ostringstream out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << g.id(v) << ":";
        const auto rot = g.rotation(v);
        const int d = static_cast<int>(rot.size());
        int start = 0;
        for (int k = 1; k < d; ++k)
            if (g.id(rot[k]) < g.id(rot[start])) start = k;
        for (int k = 0; k < d; ++k) out << ' ' << g.id(rot[(start + k) % d]);
        out << '\n';
    }
    return out.str();
}

RotationGraph load_rotation_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_rotation_graph(buf.str());
}

void save_rotation_graph(const RotationGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write '" + path + "'");
    out << serialize_rotation_graph(g);
}

}  // namespace rotsys
