#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/rainbow_iso.hpp"

namespace rainbow {

// Every constructor returns a rainbow graph whose ColorIds are the
// lexicographic edge indices 0..m-1 (the join keeps its inputs' colors).

/// Rainbow K_{f(H)+1} plus n-f(H)-1 isolated vertices. H needs a pendant edge
/// and n > f(H)+1.
ColoredGraph clique_plus_isolated(int n, const Pattern& pattern);

/// Blocks A (delta'(H)), B (f(H)), C (the rest): every edge inside A u B and
/// every A-C edge. H has no pendant edge and n > f(H)+delta'(H).
ColoredGraph three_block(int n, const Pattern& pattern);

/// A = r-1 vertices, B = one vertex, C the rest: clique on A u B plus all A-C
/// edges, (r-1)(n-r)+C(r,2) edges. Needs r >= 3 and n > r.
ColoredGraph complete_graph_construction(int n, int r);

/// Clique on v_1..v_t plus k triangles v_1 x_i y_i, with k = (n-h-1)/2 and
/// t = n-2k. H must have a degree-two induced-P_4 middle edge, delta'(H) = 2,
/// and n >= |V(H)|+3.
ColoredGraph family_F_construction(int n, const Pattern& pattern);

/// Odd n >= 5: hub u joined to v_1..v_{n-1} plus the matching v_{2i-1}v_{2i}.
/// Even n >= 8: triangle xyz fully joined to u, u joined to v_1..v_{n-4},
/// plus the matching on the v_i.
ColoredGraph c4_construction(int n);

/// Blocks of the two-graph join. Vertex ids are in the joined graph: G1 keeps
/// 0..m1-1, G2 is shifted to m1..m1+m2-1.
struct JoinBlueprint {
    std::vector<int> x1, a1, b1, c1;
    std::vector<int> x2, a2, b2, c2;
    int t = 0;
    std::int64_t a_size = 0;
    std::int64_t b_threshold = 0;
    ColoredGraph graph;
};

/// Join of two rainbow graphs with disjoint palettes: X_i are the vertices of
/// degree >= m_i/4, A_i the lexicographically first independent set of size
/// a_size avoiding X_i, B_i the remaining vertices with >= b_threshold
/// neighbors in A_i, C_i the rest. Adds every edge between X_1 u A_1 and
/// X_2 u A_2 in fresh colors. a_size and b_threshold default to t^6 and t^5.
JoinBlueprint subadditive_join(const ColoredGraph& g1, const ColoredGraph& g2, int t,
                               std::optional<std::int64_t> a_size = std::nullopt,
                               std::optional<std::int64_t> b_threshold = std::nullopt);

/// Default t = max(|V(H)|, 3); the constant from the linear rainbow
/// saturation bound is not available and is left to the caller.
int default_join_t(const Pattern& pattern);

/// Upper bound on the join's extra edges: (8t + t^6)^2, compared against t^14.
std::int64_t join_extra_edge_bound(int t);

} // namespace rainbow
