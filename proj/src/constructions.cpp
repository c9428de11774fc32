#include "rainbow/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/extremal.hpp"

namespace rainbow {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok) throw PreconditionError(what);
}

std::int64_t ipow(std::int64_t base, int exp)
{
    std::int64_t out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

} // namespace

ColoredGraph clique_plus_isolated(int n, const Pattern& pattern)
{
    require(has_pendant_edge(pattern.graph()), "clique_plus_isolated needs a pattern with a pendant edge");
    const int f = f_of_h(pattern).require();
    require(n > f + 1, "clique_plus_isolated needs n > f(H)+1 = " + std::to_string(f + 1));
    Graph g(n);
    for (int u = 0; u <= f; ++u)
        for (int v = u + 1; v <= f; ++v) g.add_edge(u, v);
    return ColoredGraph::rainbow(std::move(g));
}

ColoredGraph three_block(int n, const Pattern& pattern)
{
    require(!has_pendant_edge(pattern.graph()), "three_block needs a pattern without pendant edges");
    const int f = f_of_h(pattern).require();
    const int dp = delta_prime(pattern);
    require(n > f + dp, "three_block needs n > f(H)+delta'(H) = " + std::to_string(f + dp));
    // A = [0, dp), B = [dp, dp+f), C = [dp+f, n).
    Graph g(n);
    for (int u = 0; u < dp + f; ++u)
        for (int v = u + 1; v < dp + f; ++v) g.add_edge(u, v);
    for (int a = 0; a < dp; ++a)
        for (int c = dp + f; c < n; ++c) g.add_edge(a, c);
    return ColoredGraph::rainbow(std::move(g));
}

ColoredGraph complete_graph_construction(int n, int r)
{
    require(r >= 3, "complete_graph_construction needs r >= 3");
    require(n > r, "complete_graph_construction needs n > r");
    // A = [0, r-1), B = {r-1}, C = [r, n).
    Graph g(n);
    for (int u = 0; u < r; ++u)
        for (int v = u + 1; v < r; ++v) g.add_edge(u, v);
    for (int a = 0; a < r - 1; ++a)
        for (int c = r; c < n; ++c) g.add_edge(a, c);
    return ColoredGraph::rainbow(std::move(g));
}

ColoredGraph family_F_construction(int n, const Pattern& pattern)
{
    require(in_family_F(pattern).has_value(), "pattern has no degree-two induced-P4 middle edge");
    require(delta_prime(pattern) == 2, "family_F_construction needs delta'(H) = 2");
    const int h = pattern.order();
    require(n >= h + 3, "family_F_construction needs n >= |V(H)|+3 = " + std::to_string(h + 3));
    const int k = (n - h - 1) / 2;
    const int t = n - 2 * k;
    // v_1..v_t = 0..t-1; x_i = t+2(i-1), y_i = x_i+1.
    Graph g(n);
    for (int u = 0; u < t; ++u)
        for (int v = u + 1; v < t; ++v) g.add_edge(u, v);
    for (int i = 0; i < k; ++i) {
        const int x = t + 2 * i;
        const int y = x + 1;
        g.add_edge(0, x);
        g.add_edge(0, y);
        g.add_edge(x, y);
    }
    return ColoredGraph::rainbow(std::move(g));
}

ColoredGraph c4_construction(int n)
{
    Graph g(std::max(n, 0));
    if (n % 2 == 1) {
        require(n >= 5, "odd c4_construction needs n >= 5");
        // u = 0, v_i = i.
        for (int i = 1; i < n; ++i) g.add_edge(0, i);
        for (int i = 1; 2 * i <= n - 1; ++i) g.add_edge(2 * i - 1, 2 * i);
    } else {
        require(n >= 8, "even c4_construction needs n >= 8");
        // u = 0, x = 1, y = 2, z = 3, v_i = 3+i.
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) g.add_edge(a, b);
        for (int i = 1; i <= n - 4; ++i) g.add_edge(0, 3 + i);
        for (int i = 1; 2 * i <= n - 4; ++i) g.add_edge(3 + 2 * i - 1, 3 + 2 * i);
    }
    return ColoredGraph::rainbow(std::move(g));
}

namespace {

// Lexicographically first independent set of `size` vertices outside `avoid`.
bool first_independent(const Graph& g, Bits avoid, std::int64_t size, std::vector<int>& chosen, int from)
{
    if (static_cast<std::int64_t>(chosen.size()) == size) return true;
    for (int v = from; v < g.order(); ++v) {
        if ((avoid >> v) & 1U) continue;
        if (g.order() - v < size - static_cast<std::int64_t>(chosen.size())) return false;
        chosen.push_back(v);
        if (first_independent(g, avoid | g.neighbors(v), size, chosen, v + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

struct Blocks {
    std::vector<int> x, a, b, c;
};

Blocks partition_blocks(const Graph& g, std::int64_t a_size, std::int64_t b_threshold, const char* which)
{
    Blocks out;
    const int m = g.order();
    Bits x_mask = 0;
    for (int v = 0; v < m; ++v) {
        if (4 * g.degree(v) >= m) {
            out.x.push_back(v);
            x_mask |= bit(v);
        }
    }
    if (a_size > m || !first_independent(g, x_mask, a_size, out.a, 0)) {
        throw NoIndependentSet(std::string("no independent set of size ") + std::to_string(a_size) + " outside X in " + which);
    }
    Bits a_mask = 0;
    for (int v : out.a) a_mask |= bit(v);
    for (int v = 0; v < m; ++v) {
        if ((x_mask | a_mask) >> v & 1U) continue;
        if (popcount(g.neighbors(v) & a_mask) >= b_threshold) {
            out.b.push_back(v);
        } else {
            out.c.push_back(v);
        }
    }
    return out;
}

std::vector<int> shifted(std::vector<int> v, int by)
{
    for (int& x : v) x += by;
    return v;
}

} // namespace

JoinBlueprint subadditive_join(const ColoredGraph& g1, const ColoredGraph& g2, int t,
                               std::optional<std::int64_t> a_size, std::optional<std::int64_t> b_threshold)
{
    require(t >= 1, "t must be positive");
    require(g1.all_concrete() && g2.all_concrete(), "join inputs must be concretely colored");
    require(g1.is_rainbow() && g2.is_rainbow(), "join inputs must be rainbow");
    const auto p1 = g1.palette();
    const auto p2 = g2.palette();
    std::vector<ColorId> shared;
    std::ranges::set_intersection(p1, p2, std::back_inserter(shared));
    if (!shared.empty()) throw ColorCollision("join inputs share color " + std::to_string(shared.front().value));

    JoinBlueprint bp;
    bp.t = t;
    bp.a_size = a_size.value_or(ipow(t, 6));
    bp.b_threshold = b_threshold.value_or(ipow(t, 5));
    const int m1 = g1.order();
    const int m2 = g2.order();
    require(m1 + m2 <= kMaxVertices, "joined graph exceeds " + std::to_string(kMaxVertices) + " vertices");

    const Blocks b1 = partition_blocks(g1.graph(), bp.a_size, bp.b_threshold, "G1");
    const Blocks b2 = partition_blocks(g2.graph(), bp.a_size, bp.b_threshold, "G2");
    bp.x1 = b1.x;
    bp.a1 = b1.a;
    bp.b1 = b1.b;
    bp.c1 = b1.c;
    bp.x2 = shifted(b2.x, m1);
    bp.a2 = shifted(b2.a, m1);
    bp.b2 = shifted(b2.b, m1);
    bp.c2 = shifted(b2.c, m1);

    Graph joined = disjoint_union(g1.graph(), g2.graph());
    std::vector<int> left = bp.x1;
    left.insert(left.end(), bp.a1.begin(), bp.a1.end());
    std::vector<int> right = bp.x2;
    right.insert(right.end(), bp.a2.begin(), bp.a2.end());
    for (int l : left)
        for (int r : right) joined.add_edge(l, r);

    std::uint64_t fresh = 0;
    if (!p1.empty()) fresh = std::max(fresh, p1.back().value + 1);
    if (!p2.empty()) fresh = std::max(fresh, p2.back().value + 1);
    std::vector<ColorId> colors;
    for (const Edge& e : joined.edges()) {
        if (e.v < m1) {
            colors.push_back(g1.color(e).color());
        } else if (e.u >= m1) {
            colors.push_back(g2.color(e.u - m1, e.v - m1).color());
        } else {
            colors.push_back({fresh++});
        }
    }
    bp.graph = ColoredGraph(std::move(joined), colors);
    return bp;
}

int default_join_t(const Pattern& pattern) { return std::max(pattern.order(), 3); }

std::int64_t join_extra_edge_bound(int t)
{
    const std::int64_t side = 8 * static_cast<std::int64_t>(t) + ipow(t, 6);
    return side * side;
}

} // namespace rainbow
