#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace rainbow {

/// Hard limit of the bitset representation: one 64-bit row per vertex.
inline constexpr int kMaxVertices = 64;

/// Default size limit for canonical labeling, enumeration and Turán search.
inline constexpr int kDefaultSmallGraphBound = 12;

using Bits = std::uint64_t;

/// An unordered vertex pair, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Normalizes the endpoint order. Throws PreconditionError on a loop.
Edge make_edge(int a, int b);

/// Finite simple graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::initializer_list<Edge> edges);
    Graph(int n, std::span<const Edge> edges);

    int order() const noexcept { return n_; }
    int size() const noexcept;

    bool has_edge(int a, int b) const;
    void add_edge(int a, int b);
    void add_edge(Edge e) { add_edge(e.u, e.v); }
    void remove_edge(int a, int b);

    Bits neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const;
    Bits vertex_mask() const noexcept;

    /// Edges in lexicographic (u, v) order.
    std::vector<Edge> edges() const;
    /// Non-edges in lexicographic (u, v) order.
    std::vector<Edge> non_edges() const;

    /// perm[old] = new label.
    Graph relabeled(std::span<const int> perm) const;
    /// Subgraph induced on the given vertices, relabeled 0..k-1 in the given order.
    Graph induced(std::span<const int> vertices) const;
    /// Deletes the vertices in `mask`, keeping the rest in increasing order.
    Graph without(Bits mask) const;

    friend bool operator==(const Graph&, const Graph&) = default;
    friend std::strong_ordering operator<=>(const Graph& a, const Graph& b);

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<Bits> adj_;
};

/// A graph with at least one edge.
class Pattern {
public:
    explicit Pattern(Graph g);

    const Graph& graph() const noexcept { return g_; }
    int order() const noexcept { return g_.order(); }
    int size() const noexcept { return g_.size(); }

private:
    Graph g_;
};

Graph complement(const Graph& g);

/// True iff some injective vertex map F -> G sends edges to edges.
bool contains_subgraph(const Graph& host, const Graph& sub);

/// Isomorphism test through canonical forms (both graphs within the small-graph bound).
bool isomorphic(const Graph& a, const Graph& b);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int m, int n);
Graph disjoint_union(const Graph& a, const Graph& b);
/// Two disjoint copies of K_t joined by one edge.
Graph two_cliques_bridged(int t);

inline int popcount(Bits b) { return __builtin_popcountll(b); }
inline Bits bit(int v) { return Bits{1} << v; }
inline std::int64_t choose2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

} // namespace rainbow
