#pragma once

#include <string>

#include "g3/graph.hpp"

namespace g3 {

// Constructors for the named graphs, with role labels attached.  Vertex
// orders are fixed so tests and campaigns can reference roles by index:
//   claw           c, u1, u2, u3 (center first)
//   P_i, C_k, K_k  v1..v
//   Z_i            t1, t2, q0, q1..qi           (triangle t1 t2 q0, path at q0)
//   B_{i,j}        a, b0, c0, b1..bi, c1..cj    (triangle a b0 c0, paths at b0, c0)
//   N_{i,j,k}      a0, b0, c0, a1.., b1.., c1.. (triangle a0 b0 c0, three paths)
//   Gamma_i        t1, t2, p1..p_{i+1}, t3, t4  (triangles t1 t2 p1 and p_{i+1} t3 t4)
//   W_k            x, w1..wk (center first)
//   P6sq, P6sqPlus v0..v5  (v_i v_j an edge iff |i-j| <= 2; Plus adds v0 v5)
//   S              z1..z6  (triangle z1 z2 z3; z4~z1,z3; z5~z1,z2; z6~z2,z3)
//   Wagner         u0..u7  (C8 plus the four main diagonals)
//   WagnerPlus     u0..u7, s0..s7 (pendant s_i at u_i)
//   G_1..G_7       a..     (line-graph obstruction list)
//   R              x, w1..w4, z1, z2
//   F_0..F_10      x, t1, w1..w4, p1..p4, t3, t4

SimpleGraph make_claw();
SimpleGraph make_path_graph(int i);
SimpleGraph make_cycle_graph(int k);
SimpleGraph make_complete_graph(int k);
SimpleGraph make_Z(int i);
SimpleGraph make_B(int i, int j);
SimpleGraph make_N(int i, int j, int k);
SimpleGraph make_gamma(int i);
SimpleGraph make_wheel(int k);
SimpleGraph make_p6_squared();
SimpleGraph make_p6_squared_plus();
SimpleGraph make_S();
SimpleGraph make_wagner();
SimpleGraph make_wagner_plus();
SimpleGraph make_obstruction(int i);  // G_1..G_7
SimpleGraph make_R();
SimpleGraph make_F(int i);  // F_0..F_10

// Name-based entry point for the CLI: "claw", "P6", "C5", "K4", "Z2", "B1,2",
// "N1,1,1", "Gamma3", "W4", "W5", "P6sq", "P6sqplus", "S", "Wagner",
// "WagnerPlus", "G1".."G7", "R", "F0".."F10" (alias "Fig9-1".."Fig9-10").
// Case-insensitive; parameters may be separated by ',' or '_'.
SimpleGraph make_pattern(const std::string& name);

// All recognized names, for help output.
std::string pattern_name_summary();

}  // namespace g3
