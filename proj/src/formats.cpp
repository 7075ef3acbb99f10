#include <string>

#include "planedeg/toolkit.hpp"

namespace planedeg {

namespace {
const std::string kPlanarCodeHeader = ">>planar_code<<";
}

std::vector<PlaneGraph> parse_planar_code(const std::vector<std::uint8_t>& bytes) {
    std::vector<PlaneGraph> out;
    std::size_t pos = 0;
    if (bytes.size() >= kPlanarCodeHeader.size() &&
        std::equal(kPlanarCodeHeader.begin(), kPlanarCodeHeader.end(), bytes.begin()))
        pos = kPlanarCodeHeader.size();
    while (pos < bytes.size()) {
        int n = bytes[pos++];
        if (n == 0) throw ParseError("planar_code: zero vertex count", pos - 1);
        std::vector<std::vector<int>> rot(n);
        for (int v = 0; v < n; ++v) {
            while (true) {
                if (pos >= bytes.size())
                    throw ParseError("planar_code: truncated neighbor list", pos);
                int b = bytes[pos++];
                if (b == 0) break;
                if (b > n)
                    throw ParseError("planar_code: neighbor id out of range", pos - 1);
                rot[v].push_back(b - 1);
            }
        }
        out.push_back(PlaneGraph::from_rotation(std::move(rot)));
    }
    return out;
}

std::vector<std::uint8_t> write_planar_code(const std::vector<PlaneGraph>& graphs) {
    std::vector<std::uint8_t> out(kPlanarCodeHeader.begin(), kPlanarCodeHeader.end());
    for (const PlaneGraph& g : graphs) {
        if (g.n() >= 256 || g.n() == 0)
            throw Error("write_planar_code: vertex count must be in 1..255");
        out.push_back(static_cast<std::uint8_t>(g.n()));
        for (int v = 0; v < g.n(); ++v) {
            for (int w : g.neighbors(v)) out.push_back(static_cast<std::uint8_t>(w + 1));
            out.push_back(0);
        }
    }
    return out;
}

namespace {

int g6_byte(char ch, std::size_t at) {
    if (ch < 63 || ch > 126) throw ParseError("graph6: byte out of range", at);
    return ch - 63;
}

Graph parse_graph6_line(const std::string& line) {
    std::size_t pos = 0;
    long long n;
    if (line.empty()) throw ParseError("graph6: empty line", 0);
    if (line[0] != '~') {
        n = g6_byte(line[0], 0);
        pos = 1;
    } else {
        if (line.size() >= 2 && line[1] == '~')
            throw ParseError("graph6: 8-byte sizes not supported", 0);
        if (line.size() < 4) throw ParseError("graph6: truncated size", 0);
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | g6_byte(line[i], i);
        pos = 4;
    }
    Graph g(static_cast<int>(n));
    int bit = 0;
    int cur = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (bit == 0) {
                if (pos >= line.size()) throw ParseError("graph6: truncated bits", pos);
                cur = g6_byte(line[pos], pos);
                ++pos;
                bit = 6;
            }
            --bit;
            if (cur >> bit & 1) {
                g.adj[u].push_back(v);
                g.adj[v].push_back(u);
            }
        }
    return g;
}

}  // namespace

std::vector<Graph> parse_graph6(const std::string& text) {
    std::vector<Graph> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        if (!line.empty()) out.push_back(parse_graph6_line(line));
        pos = end + 1;
    }
    return out;
}

std::string write_graph6(const std::vector<Graph>& graphs) {
    std::string out;
    for (const Graph& g : graphs) {
        if (g.n > 62) {
            if (g.n > 258047) throw Error("write_graph6: graph too large");
            out.push_back('~');
            out.push_back(static_cast<char>(63 + (g.n >> 12 & 63)));
            out.push_back(static_cast<char>(63 + (g.n >> 6 & 63)));
            out.push_back(static_cast<char>(63 + (g.n & 63)));
        } else {
            out.push_back(static_cast<char>(63 + g.n));
        }
        int bit = 5, cur = 0;
        for (int v = 1; v < g.n; ++v)
            for (int u = 0; u < v; ++u) {
                if (g.adjacent(u, v)) cur |= 1 << bit;
                if (bit == 0) {
                    out.push_back(static_cast<char>(63 + cur));
                    cur = 0;
                    bit = 6;
                }
                --bit;
            }
        if (bit != 5) out.push_back(static_cast<char>(63 + cur));
        out.push_back('\n');
    }
    return out;
}

}  // namespace planedeg
