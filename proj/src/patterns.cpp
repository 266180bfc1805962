#include "g3/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace g3 {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) fail(Error::Kind::Precondition, "pattern parameter out of range: " + what);
}

struct Builder {
    SimpleGraph g;
    explicit Builder(int n) : g(n) { g.labels.resize(n); }
    int v(int idx, const std::string& name) {
        g.labels[idx] = name;
        return idx;
    }
    void e(int a, int b) { g.add_edge(a, b); }
    void path(const std::vector<int>& verts) {
        for (size_t i = 0; i + 1 < verts.size(); ++i) e(verts[i], verts[i + 1]);
    }
};

}  // namespace

SimpleGraph make_claw() {
    Builder b(4);
    int c = b.v(0, "c"), u1 = b.v(1, "u1"), u2 = b.v(2, "u2"), u3 = b.v(3, "u3");
    b.e(c, u1);
    b.e(c, u2);
    b.e(c, u3);
    return b.g;
}

SimpleGraph make_path_graph(int i) {
    require(i >= 1, "P_i needs i >= 1");
    Builder b(i);
    for (int k = 0; k < i; ++k) b.v(k, "v" + std::to_string(k + 1));
    for (int k = 0; k + 1 < i; ++k) b.e(k, k + 1);
    return b.g;
}

SimpleGraph make_cycle_graph(int k) {
    require(k >= 3, "C_k needs k >= 3");
    Builder b(k);
    for (int i = 0; i < k; ++i) b.v(i, "v" + std::to_string(i + 1));
    for (int i = 0; i < k; ++i) b.e(i, (i + 1) % k);
    return b.g;
}

SimpleGraph make_complete_graph(int k) {
    require(k >= 1, "K_k needs k >= 1");
    SimpleGraph g = SimpleGraph::complete(k);
    g.labels.resize(k);
    for (int i = 0; i < k; ++i) g.labels[i] = "v" + std::to_string(i + 1);
    return g;
}

// Triangle t1 t2 q0 with a path of i further vertices attached at q0.
SimpleGraph make_Z(int i) {
    require(i >= 1, "Z_i needs i >= 1");
    Builder b(3 + i);
    int t1 = b.v(0, "t1"), t2 = b.v(1, "t2"), q0 = b.v(2, "q0");
    b.e(t1, t2);
    b.e(t1, q0);
    b.e(t2, q0);
    int prev = q0;
    for (int k = 1; k <= i; ++k) {
        int q = b.v(2 + k, "q" + std::to_string(k));
        b.e(prev, q);
        prev = q;
    }
    return b.g;
}

// Triangle a b0 c0 with paths of i and j further vertices at b0 and c0.
SimpleGraph make_B(int i, int j) {
    require(i >= 1 && j >= 1, "B_{i,j} needs i,j >= 1");
    Builder b(3 + i + j);
    int a = b.v(0, "a"), b0 = b.v(1, "b0"), c0 = b.v(2, "c0");
    b.e(a, b0);
    b.e(a, c0);
    b.e(b0, c0);
    int prev = b0;
    for (int k = 1; k <= i; ++k) {
        int u = b.v(2 + k, "b" + std::to_string(k));
        b.e(prev, u);
        prev = u;
    }
    prev = c0;
    for (int k = 1; k <= j; ++k) {
        int u = b.v(2 + i + k, "c" + std::to_string(k));
        b.e(prev, u);
        prev = u;
    }
    return b.g;
}

// Triangle a0 b0 c0 with paths of i, j, k further vertices at the corners.
SimpleGraph make_N(int i, int j, int k) {
    require(i >= 1 && j >= 1 && k >= 1, "N_{i,j,k} needs i,j,k >= 1");
    Builder b(3 + i + j + k);
    int a0 = b.v(0, "a0"), b0 = b.v(1, "b0"), c0 = b.v(2, "c0");
    b.e(a0, b0);
    b.e(a0, c0);
    b.e(b0, c0);
    int next = 3;
    int prev = a0;
    for (int t = 1; t <= i; ++t, ++next) {
        b.v(next, "a" + std::to_string(t));
        b.e(prev, next);
        prev = next;
    }
    prev = b0;
    for (int t = 1; t <= j; ++t, ++next) {
        b.v(next, "b" + std::to_string(t));
        b.e(prev, next);
        prev = next;
    }
    prev = c0;
    for (int t = 1; t <= k; ++t, ++next) {
        b.v(next, "c" + std::to_string(t));
        b.e(prev, next);
        prev = next;
    }
    return b.g;
}

// Two triangles t1 t2 p1 and p_{i+1} t3 t4 joined by the path p1..p_{i+1}
// of length i.  For i = 0 the triangles share the vertex p1.
SimpleGraph make_gamma(int i) {
    require(i >= 0, "Gamma_i needs i >= 0");
    Builder b(i + 5);
    int t1 = b.v(0, "t1"), t2 = b.v(1, "t2");
    std::vector<int> p(i + 1);
    for (int k = 0; k <= i; ++k) p[k] = b.v(2 + k, "p" + std::to_string(k + 1));
    int t3 = b.v(i + 3, "t3"), t4 = b.v(i + 4, "t4");
    b.e(t1, t2);
    b.e(t1, p[0]);
    b.e(t2, p[0]);
    b.path(p);
    b.e(p[i], t3);
    b.e(p[i], t4);
    b.e(t3, t4);
    return b.g;
}

SimpleGraph make_wheel(int k) {
    require(k == 4 || k == 5, "wheel W_k needs k in {4,5}");
    Builder b(k + 1);
    int x = b.v(0, "x");
    for (int i = 1; i <= k; ++i) {
        b.v(i, "w" + std::to_string(i));
        b.e(x, i);
    }
    for (int i = 1; i <= k; ++i) b.e(i, i % k + 1);
    return b.g;
}

SimpleGraph make_p6_squared() {
    Builder b(6);
    for (int i = 0; i < 6; ++i) b.v(i, "v" + std::to_string(i));
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (j - i <= 2) b.e(i, j);
    return b.g;
}

SimpleGraph make_p6_squared_plus() {
    SimpleGraph g = make_p6_squared();
    g.add_edge(0, 5);
    return g;
}

// The 3-sun: triangle z1 z2 z3, with z4~{z1,z3}, z5~{z1,z2}, z6~{z2,z3}.
SimpleGraph make_S() {
    Builder b(6);
    int z1 = b.v(0, "z1"), z2 = b.v(1, "z2"), z3 = b.v(2, "z3");
    int z4 = b.v(3, "z4"), z5 = b.v(4, "z5"), z6 = b.v(5, "z6");
    b.e(z1, z2);
    b.e(z2, z3);
    b.e(z3, z1);
    b.e(z4, z1);
    b.e(z4, z3);
    b.e(z5, z1);
    b.e(z5, z2);
    b.e(z6, z2);
    b.e(z6, z3);
    return b.g;
}

// V8: the 8-cycle u0..u7 plus the four main diagonals u_i u_{i+4}.
SimpleGraph make_wagner() {
    Builder b(8);
    for (int i = 0; i < 8; ++i) b.v(i, "u" + std::to_string(i));
    for (int i = 0; i < 8; ++i) b.e(i, (i + 1) % 8);
    for (int i = 0; i < 4; ++i) b.e(i, i + 4);
    return b.g;
}

SimpleGraph make_wagner_plus() {
    SimpleGraph w = make_wagner();
    Builder b(16);
    for (int i = 0; i < 8; ++i) b.v(i, "u" + std::to_string(i));
    for (auto [u, v] : w.edge_list()) b.e(u, v);
    for (int i = 0; i < 8; ++i) {
        b.v(8 + i, "s" + std::to_string(i));
        b.e(i, 8 + i);
    }
    return b.g;
}

// The seven minimal non-line-graphs of multigraphs, decoded vertex by vertex
// from the published drawings.  G1 is the claw; G3 turns out to be W5, G2 is
// P6^2 and G4 is P6^{2+} (asserted by tests), G6 is K7 minus a perfect
// matching on six vertices, and G5, G7 each contain an induced W4.
SimpleGraph make_obstruction(int i) {
    require(i >= 1 && i <= 7, "G_i needs i in 1..7");
    switch (i) {
        case 1: {
            Builder b(4);
            int a = b.v(0, "a");
            for (int k = 1; k < 4; ++k) b.e(a, b.v(k, std::string(1, static_cast<char>('a' + k))));
            return b.g;
        }
        case 2: {
            Builder b(6);
            for (int k = 0; k < 6; ++k) b.v(k, std::string(1, static_cast<char>('a' + k)));
            // a..f at positions (-10,15),(10,15),(-10,0),(10,0),(-10,-15),(10,-15)
            int a = 0, bb = 1, c = 2, d = 3, e = 4, f = 5;
            b.e(e, c);
            b.e(c, a);
            b.e(a, bb);
            b.e(bb, d);
            b.e(d, f);
            b.e(f, e);
            b.e(e, d);
            b.e(d, c);
            b.e(c, bb);
            return b.g;
        }
        case 3: {
            // Drawn as a 5-cycle a c e f d with hub b.
            Builder b(6);
            for (int k = 0; k < 6; ++k) b.v(k, std::string(1, static_cast<char>('a' + k)));
            int a = 0, hub = 1, c = 2, d = 3, e = 4, f = 5;
            b.e(a, c);
            b.e(c, e);
            b.e(e, f);
            b.e(f, d);
            b.e(d, a);
            for (int rim : {a, c, d, e, f}) b.e(hub, rim);
            return b.g;
        }
        case 4: {
            Builder b(6);
            for (int k = 0; k < 6; ++k) b.v(k, std::string(1, static_cast<char>('a' + k)));
            int a = 0, bb = 1, c = 2, d = 3, e = 4, f = 5;
            b.e(a, bb);
            b.e(bb, c);
            b.e(c, d);
            b.e(d, e);
            b.e(e, a);
            b.e(a, f);
            b.e(f, c);
            b.e(c, e);
            b.e(e, bb);
            b.e(f, d);
            return b.g;
        }
        case 5: {
            Builder b(6);
            for (int k = 0; k < 6; ++k) b.v(k, std::string(1, static_cast<char>('a' + k)));
            int a = 0, bb = 1, c = 2, d = 3, e = 4, f = 5;
            b.e(c, d);
            b.e(d, e);
            b.e(e, f);
            b.e(f, a);
            b.e(a, c);
            b.e(c, bb);
            b.e(bb, d);
            b.e(d, a);
            b.e(a, e);
            b.e(e, bb);
            b.e(bb, f);
            return b.g;
        }
        case 6: {
            // K7 minus the matching {a e, b g, c f}; d is the universal vertex.
            Builder b(7);
            for (int k = 0; k < 7; ++k) b.v(k, std::string(1, static_cast<char>('a' + k)));
            for (int u = 0; u < 7; ++u)
                for (int v = u + 1; v < 7; ++v) b.e(u, v);
            b.g.remove_edge(0, 4);
            b.g.remove_edge(1, 6);
            b.g.remove_edge(2, 5);
            return b.g;
        }
        case 7: {
            Builder b(7);
            for (int k = 0; k < 7; ++k) b.v(k, std::string(1, static_cast<char>('a' + k)));
            int a = 0, bb = 1, c = 2, d = 3, e = 4, f = 5, gg = 6;
            b.e(a, c);
            b.e(c, e);
            b.e(e, f);
            b.e(f, d);
            b.e(d, a);
            b.e(a, bb);
            b.e(bb, gg);
            b.e(gg, c);
            b.e(c, bb);
            b.e(bb, d);
            b.e(d, gg);
            b.e(gg, e);
            b.e(e, bb);
            b.e(bb, f);
            b.e(f, gg);
            b.e(c, d);
            return b.g;
        }
    }
    fail(Error::Kind::Precondition, "unreachable");
}

// 4-wheel with center x plus z1~{x,w1,w2} and z2~{x,w3,w4}.
SimpleGraph make_R() {
    Builder b(7);
    int x = b.v(0, "x");
    int w1 = b.v(1, "w1"), w2 = b.v(2, "w2"), w3 = b.v(3, "w3"), w4 = b.v(4, "w4");
    int z1 = b.v(5, "z1"), z2 = b.v(6, "z2");
    for (int w : {w1, w2, w3, w4}) b.e(x, w);
    b.e(w1, w2);
    b.e(w2, w3);
    b.e(w3, w4);
    b.e(w4, w1);
    b.e(z1, x);
    b.e(z1, w1);
    b.e(z1, w2);
    b.e(z2, x);
    b.e(z2, w3);
    b.e(z2, w4);
    return b.g;
}

namespace {

// Added-edge lists for F_1..F_10, as (role, role) name pairs.
const std::vector<std::vector<std::pair<const char*, const char*>>> F_ADDITIONS = {
    {{"w1", "t3"}, {"w2", "t4"}, {"w3", "t4"}, {"w4", "t3"}},
    {{"w1", "t3"}, {"w2", "p2"}, {"w2", "p3"}, {"w3", "p2"}, {"w3", "p3"}, {"w4", "t3"}},
    {{"w1", "t3"}, {"w2", "p3"}, {"w2", "p4"}, {"w3", "p3"}, {"w3", "p4"}, {"w4", "t3"}},
    {{"w1", "p2"}, {"w1", "p3"}, {"w2", "p3"}, {"w2", "p4"}, {"w3", "p3"}, {"w3", "p4"},
     {"w4", "p2"}, {"w4", "p3"}},
    {{"w1", "p2"}, {"w1", "p3"}, {"w2", "t3"}, {"w2", "t4"}, {"w3", "t3"}, {"w3", "t4"},
     {"w4", "p2"}, {"w4", "p3"}},
    {{"w1", "p3"}, {"w1", "p4"}, {"w2", "t3"}, {"w2", "t4"}, {"w3", "t3"}, {"w3", "t4"},
     {"w4", "p3"}, {"w4", "p4"}},
    {{"w1", "p4"}, {"w1", "t3"}, {"w1", "t4"}, {"w2", "t4"}, {"w3", "t4"}, {"w4", "p4"},
     {"w4", "t3"}, {"w4", "t4"}},
    {{"w1", "p2"}, {"w1", "p3"}, {"w2", "p4"}, {"w2", "t3"}, {"w2", "t4"}, {"w3", "p4"},
     {"w3", "t3"}, {"w3", "t4"}, {"w4", "p2"}, {"w4", "p3"}},
    {{"w1", "p3"}, {"w1", "p4"}, {"w2", "p4"}, {"w2", "t3"}, {"w2", "t4"}, {"w3", "p4"},
     {"w3", "t3"}, {"w3", "t4"}, {"w4", "p3"}, {"w4", "p4"}},
    {{"w1", "p4"}, {"w1", "t3"}, {"w1", "t4"}, {"w2", "t3"}, {"w2", "t4"}, {"w3", "t3"},
     {"w3", "t4"}, {"w4", "p4"}, {"w4", "t3"}, {"w4", "t4"}},
};

}  // namespace

// F_0: 4-wheel (center x, rim w1..w4), t1~{x,w1,w2}, p1~{x,w3,w4}, the path
// p1 p2 p3 p4, and the triangle p4 t3 t4.  F_i adds the published edge list.
SimpleGraph make_F(int i) {
    require(i >= 0 && i <= 10, "F_i needs i in 0..10");
    Builder b(12);
    int x = b.v(0, "x"), t1 = b.v(1, "t1");
    int w1 = b.v(2, "w1"), w2 = b.v(3, "w2"), w3 = b.v(4, "w3"), w4 = b.v(5, "w4");
    int p1 = b.v(6, "p1"), p2 = b.v(7, "p2"), p3 = b.v(8, "p3"), p4 = b.v(9, "p4");
    int t3 = b.v(10, "t3"), t4 = b.v(11, "t4");
    for (int w : {w1, w2, w3, w4}) b.e(x, w);
    b.e(w1, w2);
    b.e(w2, w3);
    b.e(w3, w4);
    b.e(w4, w1);
    b.e(t1, x);
    b.e(t1, w1);
    b.e(t1, w2);
    b.e(p1, x);
    b.e(p1, w3);
    b.e(p1, w4);
    b.path({p1, p2, p3, p4});
    b.e(p4, t3);
    b.e(p4, t4);
    b.e(t3, t4);
    if (i > 0)
        for (auto [u, v] : F_ADDITIONS[i - 1])
            b.g.add_edge(b.g.vertex_named(u), b.g.vertex_named(v));
    return b.g;
}

namespace {

std::string lowered(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// Splits trailing parameters: "B1,2" -> {1,2}; separators ',' '_' '-'.
// One separator may precede the first number, as in "Fig9-3".
bool split_params(const std::string& s, const std::string& prefix, std::vector<int>& out) {
    if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix) != 0) return false;
    out.clear();
    size_t pos = prefix.size();
    if (s[pos] == ',' || s[pos] == '_' || s[pos] == '-') ++pos;
    while (pos < s.size()) {
        if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
        size_t end = pos;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
        out.push_back(std::stoi(s.substr(pos, end - pos)));
        pos = end;
        if (pos < s.size()) {
            if (s[pos] != ',' && s[pos] != '_' && s[pos] != '-') return false;
            ++pos;
            if (pos == s.size()) return false;
        }
    }
    return !out.empty();
}

}  // namespace

SimpleGraph make_pattern(const std::string& name) {
    std::string s = lowered(name);
    if (s == "claw" || s == "k1,3" || s == "k1_3") return make_claw();
    if (s == "p6sq" || s == "p6^2") return make_p6_squared();
    if (s == "p6sqplus" || s == "p6^2+" || s == "p6sq+") return make_p6_squared_plus();
    if (s == "s") return make_S();
    if (s == "wagner" || s == "w8" || s == "v8") return make_wagner();
    if (s == "wagnerplus" || s == "wagner+") return make_wagner_plus();
    if (s == "r") return make_R();
    std::vector<int> par;
    if (split_params(s, "gamma", par) && par.size() == 1) return make_gamma(par[0]);
    if (split_params(s, "fig9", par) && par.size() == 1) return make_F(par[0]);
    if (split_params(s, "f", par) && par.size() == 1) return make_F(par[0]);
    if (split_params(s, "g", par) && par.size() == 1) return make_obstruction(par[0]);
    if (split_params(s, "z", par) && par.size() == 1) return make_Z(par[0]);
    if (split_params(s, "b", par) && par.size() == 2) return make_B(par[0], par[1]);
    if (split_params(s, "n", par) && par.size() == 3) return make_N(par[0], par[1], par[2]);
    if (split_params(s, "w", par) && par.size() == 1) return make_wheel(par[0]);
    if (split_params(s, "p", par) && par.size() == 1) return make_path_graph(par[0]);
    if (split_params(s, "c", par) && par.size() == 1) return make_cycle_graph(par[0]);
    if (split_params(s, "k", par) && par.size() == 1) return make_complete_graph(par[0]);
    fail(Error::Kind::NotFound, "unknown pattern name '" + name + "'; known: " +
                                    pattern_name_summary());
}

std::string pattern_name_summary() {
    return "claw, P<i>, C<k>, K<k>, Z<i>, B<i>,<j>, N<i>,<j>,<k>, Gamma<i>, W4, W5, "
           "P6sq, P6sqPlus, S, Wagner, WagnerPlus, G<1..7>, R, F<0..10> (alias Fig9-<i>)";
}

}  // namespace g3
