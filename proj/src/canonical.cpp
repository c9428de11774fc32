#include "rainbow/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

void check_bound(const Graph& g, int bound)
{
    if (g.order() > bound) {
        throw SizeExceeded("graph order " + std::to_string(g.order()) +
                           " exceeds small-graph bound " + std::to_string(bound));
    }
}

// Equitable refinement. Cells split by their neighbor-count signature;
// sub-cells are emitted in increasing signature order so the result only
// depends on the input partition, never on vertex labels.
Partition refine(const Graph& g, Partition p)
{
    for (;;) {
        std::vector<Bits> masks;
        masks.reserve(p.size());
        for (const Cell& c : p) {
            Bits m = 0;
            for (int v : c) m |= bit(v);
            masks.push_back(m);
        }
        Partition next;
        next.reserve(p.size());
        bool split = false;
        for (const Cell& c : p) {
            if (c.size() == 1) {
                next.push_back(c);
                continue;
            }
            std::vector<std::pair<std::vector<int>, int>> keyed;
            keyed.reserve(c.size());
            for (int v : c) {
                std::vector<int> sig(masks.size());
                for (std::size_t i = 0; i < masks.size(); ++i) {
                    sig[i] = popcount(g.neighbors(v) & masks[i]);
                }
                keyed.emplace_back(std::move(sig), v);
            }
            std::ranges::sort(keyed);
            Cell cur{keyed.front().second};
            for (std::size_t i = 1; i < keyed.size(); ++i) {
                if (keyed[i].first != keyed[i - 1].first) {
                    next.push_back(std::move(cur));
                    cur.clear();
                    split = true;
                }
                cur.push_back(keyed[i].second);
            }
            next.push_back(std::move(cur));
        }
        p = std::move(next);
        if (!split) return p;
    }
}

struct Canonizer {
    const Graph& g;
    Graph best;
    std::vector<int> best_perm;
    bool have_best = false;
    std::vector<std::vector<int>> automorphisms;

    void leaf(const Partition& p)
    {
        std::vector<int> perm(static_cast<std::size_t>(g.order()));
        for (std::size_t i = 0; i < p.size(); ++i) perm[static_cast<std::size_t>(p[i][0])] = static_cast<int>(i);
        Graph candidate = g.relabeled(perm);
        if (!have_best || candidate > best) {
            best = std::move(candidate);
            best_perm = std::move(perm);
            have_best = true;
        } else if (candidate == best) {
            // best_perm^-1 o perm is an automorphism of g.
            std::vector<int> inverse(best_perm.size());
            for (std::size_t v = 0; v < best_perm.size(); ++v) inverse[static_cast<std::size_t>(best_perm[v])] = static_cast<int>(v);
            std::vector<int> gamma(perm.size());
            for (std::size_t v = 0; v < perm.size(); ++v) gamma[v] = inverse[static_cast<std::size_t>(perm[v])];
            automorphisms.push_back(std::move(gamma));
        }
    }

    // Orbit representative of v under the stored automorphisms that fix
    // every individualized vertex.
    std::vector<int> orbits(const std::vector<int>& fixed) const
    {
        std::vector<int> parent(static_cast<std::size_t>(g.order()));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        for (const auto& gamma : automorphisms) {
            bool stabilizes = std::ranges::all_of(fixed, [&](int w) { return gamma[static_cast<std::size_t>(w)] == w; });
            if (!stabilizes) continue;
            for (std::size_t v = 0; v < gamma.size(); ++v) {
                int a = find(static_cast<int>(v));
                int b = find(gamma[v]);
                if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
            }
        }
        for (int v = 0; v < g.order(); ++v) parent[static_cast<std::size_t>(v)] = find(v);
        return parent;
    }

    void visit(Partition p, std::vector<int>& fixed)
    {
        p = refine(g, std::move(p));
        std::size_t target = p.size();
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i].size() > 1 && (target == p.size() || p[i].size() < p[target].size())) target = i;
        }
        if (target == p.size()) {
            leaf(p);
            return;
        }
        const Cell cell = p[target];
        std::vector<int> done;
        for (int v : cell) {
            bool twin = std::ranges::any_of(done, [&](int w) {
                return ((g.neighbors(v) ^ g.neighbors(w)) & ~(bit(v) | bit(w))) == 0;
            });
            if (twin) continue;
            if (!done.empty()) {
                auto orbit = orbits(fixed);
                bool seen = std::ranges::any_of(done, [&](int w) {
                    return orbit[static_cast<std::size_t>(w)] == orbit[static_cast<std::size_t>(v)];
                });
                if (seen) continue;
            }
            Partition child;
            child.reserve(p.size() + 1);
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (i != target) {
                    child.push_back(p[i]);
                    continue;
                }
                child.push_back({v});
                Cell rest;
                for (int w : cell)
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            fixed.push_back(v);
            visit(std::move(child), fixed);
            fixed.pop_back();
            done.push_back(v);
        }
    }
};

// Column-major upper-triangle bit (i, j), i < j, at index C(j,2) + i.
bool tri_bit(const Graph& g, const std::vector<int>& at, int i, int j)
{
    return g.has_edge(at[static_cast<std::size_t>(i)], at[static_cast<std::size_t>(j)]);
}

struct Exhaustive {
    const Graph& g;
    std::vector<int> degree_at;       // required degree at each position
    std::vector<int> at;              // position -> vertex
    std::vector<int> best_at;
    bool have_best = false;
    Bits used = 0;

    // -1: prefix worse than best, 0: equal, 1: better (positions 0..j filled).
    int compare_column(int j) const
    {
        for (int i = 0; i < j; ++i) {
            bool mine = tri_bit(g, at, i, j);
            bool theirs = tri_bit(g, best_at, i, j);
            if (mine != theirs) return mine ? 1 : -1;
        }
        return 0;
    }

    int compare_prefix(int pos) const
    {
        for (int j = 1; j <= pos; ++j) {
            if (int c = compare_column(j); c != 0) return c;
        }
        return 0;
    }

    void place(int pos)
    {
        if (pos == g.order()) {
            if (!have_best || compare_prefix(pos - 1) > 0) {
                best_at = at;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < g.order(); ++v) {
            if ((used >> v) & 1U) continue;
            if (g.degree(v) != degree_at[static_cast<std::size_t>(pos)]) continue;
            at[static_cast<std::size_t>(pos)] = v;
            if (have_best && compare_prefix(pos) < 0) continue;
            used |= bit(v);
            place(pos + 1);
            used &= ~bit(v);
        }
    }
};

} // namespace

CanonicalForm canonical_form(const Graph& g, int bound)
{
    check_bound(g, bound);
    if (g.order() == 0) return {g, {}};
    Canonizer c{g, {}, {}, false, {}};
    Cell all(static_cast<std::size_t>(g.order()));
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> fixed;
    c.visit(Partition{all}, fixed);
    return {std::move(c.best), std::move(c.best_perm)};
}

CanonicalForm canonical_form_exhaustive(const Graph& g, int bound)
{
    check_bound(g, bound);
    const int n = g.order();
    if (n == 0) return {g, {}};
    Exhaustive ex{g, {}, std::vector<int>(static_cast<std::size_t>(n)), {}, false, 0};
    for (int v = 0; v < n; ++v) ex.degree_at.push_back(g.degree(v));
    std::ranges::sort(ex.degree_at, std::greater<>());
    ex.place(0);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int pos = 0; pos < n; ++pos) perm[static_cast<std::size_t>(ex.best_at[static_cast<std::size_t>(pos)])] = pos;
    return {g.relabeled(perm), std::move(perm)};
}

std::size_t GraphHash::operator()(const Graph& g) const noexcept
{
    std::size_t h = static_cast<std::size_t>(g.order()) * 0x9e3779b97f4a7c15ULL;
    for (int v = 0; v < g.order(); ++v) {
        h ^= g.neighbors(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace rainbow
