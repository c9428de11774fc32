#include "rainbow/graph.hpp"

#include <algorithm>
#include <string>

#include "rainbow/canonical.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

Edge make_edge(int a, int b)
{
    if (a == b) {
        throw PreconditionError("self-loop at vertex " + std::to_string(a));
    }
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int n) : n_(n)
{
    if (n < 0 || n > kMaxVertices) {
        throw SizeExceeded("graph order " + std::to_string(n) + " outside [0, " +
                           std::to_string(kMaxVertices) + "]");
    }
    adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::initializer_list<Edge> edges) : Graph(n)
{
    for (const Edge& e : edges) add_edge(e);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
    for (const Edge& e : edges) add_edge(e);
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= n_) {
        throw PreconditionError("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(n_));
    }
}

int Graph::size() const noexcept
{
    int twice = 0;
    for (Bits row : adj_) twice += popcount(row);
    return twice / 2;
}

bool Graph::has_edge(int a, int b) const
{
    check_vertex(a);
    check_vertex(b);
    return (adj_[static_cast<std::size_t>(a)] >> b) & 1U;
}

void Graph::add_edge(int a, int b)
{
    check_vertex(a);
    check_vertex(b);
    Edge e = make_edge(a, b);
    adj_[static_cast<std::size_t>(e.u)] |= bit(e.v);
    adj_[static_cast<std::size_t>(e.v)] |= bit(e.u);
}

void Graph::remove_edge(int a, int b)
{
    check_vertex(a);
    check_vertex(b);
    adj_[static_cast<std::size_t>(a)] &= ~bit(b);
    adj_[static_cast<std::size_t>(b)] &= ~bit(a);
}

int Graph::degree(int v) const
{
    check_vertex(v);
    return popcount(adj_[static_cast<std::size_t>(v)]);
}

Bits Graph::vertex_mask() const noexcept
{
    return n_ == 64 ? ~Bits{0} : (bit(n_) - 1);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if ((adj_[static_cast<std::size_t>(u)] >> v) & 1U) out.push_back({u, v});
        }
    }
    return out;
}

std::vector<Edge> Graph::non_edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (!((adj_[static_cast<std::size_t>(u)] >> v) & 1U)) out.push_back({u, v});
        }
    }
    return out;
}

Graph Graph::relabeled(std::span<const int> perm) const
{
    if (static_cast<int>(perm.size()) != n_) {
        throw PreconditionError("permutation length does not match graph order");
    }
    Graph out(n_);
    for (const Edge& e : edges()) {
        out.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    }
    return out;
}

Graph Graph::induced(std::span<const int> vertices) const
{
    Graph out(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(vertices[i]);
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (has_edge(vertices[i], vertices[j])) {
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return out;
}

Graph Graph::without(Bits mask) const
{
    std::vector<int> keep;
    for (int v = 0; v < n_; ++v) {
        if (!((mask >> v) & 1U)) keep.push_back(v);
    }
    return induced(keep);
}

std::strong_ordering operator<=>(const Graph& a, const Graph& b)
{
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.adj_ <=> b.adj_;
}

Pattern::Pattern(Graph g) : g_(std::move(g))
{
    if (g_.size() == 0) {
        throw PreconditionError("pattern must have at least one edge");
    }
}

Graph complement(const Graph& g)
{
    Graph out(g.order());
    for (const Edge& e : g.non_edges()) out.add_edge(e);
    return out;
}

namespace {

struct SubgraphSearch {
    const Graph& host;
    const Graph& sub;
    std::vector<int> order;          // sub vertices in search order
    std::vector<int> image;          // sub vertex -> host vertex, -1 if unmapped
    Bits used = 0;

    bool extend(std::size_t depth)
    {
        if (depth == order.size()) return true;
        const int x = order[depth];
        Bits candidates = host.vertex_mask() & ~used;
        Bits mapped_nbrs = sub.neighbors(x);
        while (mapped_nbrs) {
            const int y = __builtin_ctzll(mapped_nbrs);
            mapped_nbrs &= mapped_nbrs - 1;
            if (image[static_cast<std::size_t>(y)] >= 0) {
                candidates &= host.neighbors(image[static_cast<std::size_t>(y)]);
            }
        }
        const int need = sub.degree(x);
        while (candidates) {
            const int c = __builtin_ctzll(candidates);
            candidates &= candidates - 1;
            if (host.degree(c) < need) continue;
            image[static_cast<std::size_t>(x)] = c;
            used |= bit(c);
            if (extend(depth + 1)) return true;
            used &= ~bit(c);
            image[static_cast<std::size_t>(x)] = -1;
        }
        return false;
    }
};

// Connectivity-first order over the non-isolated vertices of `sub`.
std::vector<int> search_order(const Graph& sub)
{
    std::vector<int> order;
    Bits placed = 0;
    Bits remaining = 0;
    for (int v = 0; v < sub.order(); ++v) {
        if (sub.degree(v) > 0) remaining |= bit(v);
    }
    while (remaining) {
        int best = -1;
        int best_links = -1;
        int best_degree = -1;
        for (Bits r = remaining; r; r &= r - 1) {
            const int v = __builtin_ctzll(r);
            const int links = popcount(sub.neighbors(v) & placed);
            const int d = sub.degree(v);
            if (links > best_links || (links == best_links && d > best_degree)) {
                best = v;
                best_links = links;
                best_degree = d;
            }
        }
        order.push_back(best);
        placed |= bit(best);
        remaining &= ~bit(best);
    }
    return order;
}

} // namespace

bool contains_subgraph(const Graph& host, const Graph& sub)
{
    if (sub.order() > host.order() || sub.size() > host.size()) return false;
    std::vector<int> host_deg;
    std::vector<int> sub_deg;
    for (int v = 0; v < host.order(); ++v) host_deg.push_back(host.degree(v));
    for (int v = 0; v < sub.order(); ++v) sub_deg.push_back(sub.degree(v));
    std::ranges::sort(host_deg, std::greater<>());
    std::ranges::sort(sub_deg, std::greater<>());
    for (std::size_t i = 0; i < sub_deg.size(); ++i) {
        if (sub_deg[i] > host_deg[i]) return false;
    }
    SubgraphSearch s{host, sub, search_order(sub), std::vector<int>(static_cast<std::size_t>(sub.order()), -1)};
    return s.extend(0);
}

bool isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a).graph == canonical_form(b).graph;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n)
{
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n)
{
    if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

Graph star_graph(int leaves)
{
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph complete_bipartite(int m, int n)
{
    Graph g(m + n);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < n; ++b) g.add_edge(a, m + b);
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    Graph g(a.order() + b.order());
    for (const Edge& e : a.edges()) g.add_edge(e);
    for (const Edge& e : b.edges()) g.add_edge(a.order() + e.u, a.order() + e.v);
    return g;
}

Graph two_cliques_bridged(int t)
{
    Graph g = disjoint_union(complete_graph(t), complete_graph(t));
    g.add_edge(0, t);
    return g;
}

} // namespace rainbow
