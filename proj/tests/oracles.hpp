// Brute-force reference implementations used only by the tests. None of these
// call into the library's search code; they work on labeled graphs directly.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/rainbow_iso.hpp"

namespace oracle {

using rainbow::Edge;
using rainbow::Graph;

inline std::vector<Edge> all_pairs(int n)
{
    std::vector<Edge> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) out.push_back({u, v});
    return out;
}

// Graph from a bitmask over all_pairs(n).
inline Graph from_mask(int n, std::uint64_t mask)
{
    Graph g(n);
    const auto pairs = all_pairs(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1U) g.add_edge(pairs[i].u, pairs[i].v);
    return g;
}

inline std::uint64_t to_mask(const Graph& g)
{
    std::uint64_t mask = 0;
    const auto pairs = all_pairs(g.order());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (g.has_edge(pairs[i].u, pairs[i].v)) mask |= std::uint64_t{1} << i;
    return mask;
}

// Every labeled graph on n vertices.
inline void for_each_labeled(int n, const std::function<void(const Graph&)>& visit)
{
    const auto m = all_pairs(n).size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) visit(from_mask(n, mask));
}

// Smallest edge mask over all n! relabelings; equal iff isomorphic.
inline std::uint64_t brute_canonical(const Graph& g)
{
    const int n = g.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    const auto pairs = all_pairs(n);
    do {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (g.has_edge(perm[static_cast<std::size_t>(pairs[i].u)], perm[static_cast<std::size_t>(pairs[i].v)]))
                mask |= std::uint64_t{1} << i;
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Every injective map of sub's vertices into host's vertices.
inline void for_each_injection(int sub_n, int host_n, const std::function<bool(const std::vector<int>&)>& visit)
{
    std::vector<int> map;
    std::vector<bool> used(static_cast<std::size_t>(host_n), false);
    bool stop = false;
    std::function<void()> rec = [&] {
        if (stop) return;
        if (static_cast<int>(map.size()) == sub_n) {
            if (!visit(map)) stop = true;
            return;
        }
        for (int v = 0; v < host_n && !stop; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            map.push_back(v);
            rec();
            map.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    rec();
}

inline bool preserves_edges(const Graph& sub, const Graph& host, const std::vector<int>& map)
{
    for (const Edge& e : sub.edges())
        if (!host.has_edge(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)])) return false;
    return true;
}

inline bool contains(const Graph& host, const Graph& sub)
{
    if (sub.order() > host.order()) return false;
    bool found = false;
    for_each_injection(sub.order(), host.order(), [&](const std::vector<int>& map) {
        found = preserves_edges(sub, host, map);
        return !found;
    });
    return found;
}

// Edge images of copies of `pattern` through e, as sorted edge sets.
inline std::set<std::vector<Edge>> images_through(const Graph& host, const Graph& pattern, Edge e)
{
    std::set<std::vector<Edge>> out;
    if (pattern.order() > host.order()) return out;
    for_each_injection(pattern.order(), host.order(), [&](const std::vector<int>& map) {
        if (!preserves_edges(pattern, host, map)) return true;
        std::vector<Edge> image;
        for (const Edge& pe : pattern.edges())
            image.push_back(rainbow::make_edge(map[static_cast<std::size_t>(pe.u)], map[static_cast<std::size_t>(pe.v)]));
        std::sort(image.begin(), image.end());
        if (std::binary_search(image.begin(), image.end(), e)) out.insert(image);
        return true;
    });
    return out;
}

inline bool rainbow_copy_through(const rainbow::ColoredGraph& host, const Graph& pattern, Edge e)
{
    for (const auto& image : images_through(host.graph(), pattern, e)) {
        std::set<std::uint64_t> seen;
        for (const Edge& x : image) seen.insert(host.color(x).value);
        if (seen.size() == image.size()) return true;
    }
    return false;
}

// ex(n, family) over labeled graphs; -1 when no free graph exists.
inline std::int64_t turan(int n, const std::vector<Graph>& family)
{
    std::int64_t best = -1;
    for_each_labeled(n, [&](const Graph& g) {
        for (const Graph& f : family)
            if (contains(g, f)) return;
        best = std::max<std::int64_t>(best, g.size());
    });
    return best;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline std::vector<int> random_perm(std::mt19937_64& rng, int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Restricted growth strings of length m with at most `max_blocks` blocks:
// every edge coloring up to renaming of colors.
inline void for_each_set_partition(int m, int max_blocks, const std::function<void(const std::vector<int>&)>& visit)
{
    std::vector<int> rgs(static_cast<std::size_t>(m), 0);
    std::function<void(int, int)> rec = [&](int pos, int blocks) {
        if (pos == m) {
            visit(rgs);
            return;
        }
        for (int c = 0; c <= blocks && c < max_blocks; ++c) {
            rgs[static_cast<std::size_t>(pos)] = c;
            rec(pos + 1, std::max(blocks, c + 1));
        }
    };
    rec(0, 0);
}

} // namespace oracle
