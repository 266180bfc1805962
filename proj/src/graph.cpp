#include "g3/graph.hpp"

#include <algorithm>
#include <sstream>

namespace g3 {

namespace {

[[noreturn]] void parse_fail(size_t byte, const std::string& what) {
    fail(Error::Kind::Parse, "graph6: byte " + std::to_string(byte) + ": " + what);
}

}  // namespace

// graph6 format: each byte encodes 6 bits as value+63.  Header is n (one byte
// for n <= 62, '~' + 3 bytes for 63 <= n <= 258047), then the upper triangle
// of the adjacency matrix column by column, packed most significant bit first.
SimpleGraph parse_graph6(const std::string& line) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (!s.empty() && s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) parse_fail(0, "empty input");

    size_t pos = 0;
    long n = 0;
    if (s[pos] == '~') {
        ++pos;
        if (pos < s.size() && s[pos] == '~')
            parse_fail(pos, "8-byte order header not supported (order above 64 anyway)");
        if (pos + 3 > s.size()) parse_fail(pos, "truncated 3-byte order header");
        for (int i = 0; i < 3; ++i) {
            char c = s[pos + i];
            if (c < 63 || c > 126) parse_fail(pos + i, "byte outside graph6 range 63..126");
            n = (n << 6) | (c - 63);
        }
        pos += 3;
    } else {
        char c = s[pos];
        if (c < 63 || c > 126) parse_fail(pos, "byte outside graph6 range 63..126");
        n = c - 63;
        ++pos;
    }
    if (n > SimpleGraph::MAX_N)
        parse_fail(0, "graph order " + std::to_string(n) + " above supported maximum " +
                          std::to_string(SimpleGraph::MAX_N));

    SimpleGraph g(static_cast<int>(n));
    long nbits = n * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(s.size() - pos) < nbytes)
        parse_fail(s.size(), "truncated adjacency data, expected " + std::to_string(nbytes) +
                                 " bytes after header");
    if (static_cast<long>(s.size() - pos) > nbytes)
        parse_fail(pos + nbytes, "trailing bytes after adjacency data");

    long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            char c = s[pos + bit / 6];
            if (c < 63 || c > 126) parse_fail(pos + bit / 6, "byte outside graph6 range 63..126");
            int val = c - 63;
            if ((val >> (5 - bit % 6)) & 1) g.add_edge(u, v);
        }
    }
    // Padding bits must be zero.
    for (long b = nbits; b < nbytes * 6; ++b) {
        char c = s[pos + b / 6];
        if ((c - 63) >> (5 - b % 6) & 1) parse_fail(pos + b / 6, "nonzero padding bit");
    }
    return g;
}

std::string write_graph6(const SimpleGraph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(g.n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((g.n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < g.n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& verts) {
    SimpleGraph sub(static_cast<int>(verts.size()));
    for (int v : verts) g.check_vertex(v);
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (!g.labels.empty()) {
        sub.labels.resize(verts.size());
        for (size_t i = 0; i < verts.size(); ++i) sub.labels[i] = g.labels[verts[i]];
    }
    return sub;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, uint64_t vert_mask) {
    return induced_subgraph(g, vertices_from_mask(vert_mask & g.vertex_mask()));
}

SimpleGraph complement_graph(const SimpleGraph& g) {
    SimpleGraph c(g.n);
    for (int v = 0; v < g.n; ++v) c.adj[v] = g.vertex_mask() & ~g.adj[v] & ~(1ull << v);
    c.labels = g.labels;
    return c;
}

uint64_t reachable_within(const SimpleGraph& g, int start, uint64_t allowed) {
    g.check_vertex(start);
    if (!((allowed >> start) & 1)) return 0;
    uint64_t seen = 1ull << start;
    uint64_t frontier = seen;
    while (frontier) {
        uint64_t next = 0;
        uint64_t f = frontier;
        while (f) {
            int v = __builtin_ctzll(f);
            f &= f - 1;
            next |= g.adj[v] & allowed & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen;
}

bool is_connected(const SimpleGraph& g) {
    if (g.n <= 1) return true;
    return reachable_within(g, 0, g.vertex_mask()) == g.vertex_mask();
}

std::optional<int> neighborhood_distance(const SimpleGraph& g, int x, int u, int v) {
    g.check_vertex(x);
    g.check_vertex(u);
    g.check_vertex(v);
    if (!g.has_edge(x, u) || !g.has_edge(x, v))
        fail(Error::Kind::Precondition, "neighborhood_distance endpoints must be neighbors of x");
    uint64_t hood = g.adj[x];
    uint64_t seen = 1ull << u;
    uint64_t frontier = seen;
    int dist = 0;
    while (frontier) {
        if ((frontier >> v) & 1) return dist;
        uint64_t next = 0;
        uint64_t f = frontier;
        while (f) {
            int w = __builtin_ctzll(f);
            f &= f - 1;
            next |= g.adj[w] & hood & ~seen;
        }
        seen |= next;
        frontier = next;
        ++dist;
    }
    return std::nullopt;
}

bool neighborhood_is_clique(const SimpleGraph& g, int v) {
    g.check_vertex(v);
    uint64_t nb = g.adj[v];
    uint64_t rest = nb;
    while (rest) {
        int w = __builtin_ctzll(rest);
        rest &= rest - 1;
        if ((nb & ~(1ull << w) & ~g.adj[w]) != 0) return false;
    }
    return true;
}

std::vector<int> vertices_from_mask(uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(__builtin_ctzll(mask));
        mask &= mask - 1;
    }
    return out;
}

bool Multigraph::operator==(const Multigraph& o) const {
    if (n != o.n || edges.size() != o.edges.size()) return false;
    auto norm = [](const Multigraph& h) {
        std::vector<std::pair<int, int>> e = h.edges;
        for (auto& p : e)
            if (p.first > p.second) std::swap(p.first, p.second);
        std::sort(e.begin(), e.end());
        return e;
    };
    return norm(*this) == norm(o);
}

// Text format, one graph per blob:
//   line 1: "n m"
//   lines 2..m+1: "u v" (0-based endpoints; repeats encode multiplicity)
// Blank lines and lines starting with '#' are skipped.
Multigraph parse_multigraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (line[i] == '#') continue;
            return true;
        }
        return false;
    };
    auto line_fail = [&](const std::string& what) -> void {
        fail(Error::Kind::Parse, "multigraph: line " + std::to_string(lineno) + ": " + what);
    };

    if (!next_line()) fail(Error::Kind::Parse, "multigraph: empty input");
    std::istringstream head(line);
    long n = -1, m = -1;
    if (!(head >> n >> m)) line_fail("expected header 'n m'");
    std::string extra;
    if (head >> extra) line_fail("unexpected token '" + extra + "' after header");
    if (n < 0 || n > 4096) line_fail("vertex count " + std::to_string(n) + " out of range");
    if (m < 0) line_fail("negative edge count");

    Multigraph h(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        if (!next_line()) {
            ++lineno;
            line_fail("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        }
        std::istringstream es(line);
        long u = -1, v = -1;
        if (!(es >> u >> v)) line_fail("expected edge 'u v'");
        if (es >> extra) line_fail("unexpected token '" + extra + "' after edge");
        if (u < 0 || u >= n || v < 0 || v >= n)
            line_fail("edge endpoint out of range 0.." + std::to_string(n - 1));
        if (u == v) line_fail("loop at vertex " + std::to_string(u));
        h.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_line()) line_fail("trailing content after " + std::to_string(m) + " edges");
    return h;
}

std::string write_multigraph(const Multigraph& h) {
    std::vector<std::pair<int, int>> e = h.edges;
    for (auto& p : e)
        if (p.first > p.second) std::swap(p.first, p.second);
    std::sort(e.begin(), e.end());
    std::ostringstream out;
    out << h.n << ' ' << e.size() << '\n';
    for (auto& p : e) out << p.first << ' ' << p.second << '\n';
    return out.str();
}

bool is_connected(const Multigraph& h) {
    if (h.n <= 1) return true;
    return is_connected(h.underlying());
}

}  // namespace g3
