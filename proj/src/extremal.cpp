#include "rainbow/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <tuple>
#include <string>
#include <unordered_set>

#include "rainbow/canonical.hpp"
#include "rainbow/enumerate.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph6.hpp"
#include "rainbow/parallel.hpp"

namespace rainbow {

int delta_prime(const Pattern& pattern)
{
    const Graph& g = pattern.graph();
    int best = g.order();
    for (int v = 0; v < g.order(); ++v) {
        const int d = g.degree(v);
        if (d > 0) best = std::min(best, d);
    }
    return best;
}

bool has_pendant_edge(const Graph& g)
{
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 1) return true;
    }
    return false;
}

std::vector<Graph> peeled_family(const Pattern& pattern)
{
    const Graph& g = pattern.graph();
    std::set<Graph> classes;
    for (const Edge& e : g.edges()) {
        classes.insert(canonical_form(g.without(bit(e.u) | bit(e.v)), kMaxVertices).graph);
    }
    return {classes.begin(), classes.end()};
}

bool contains_any(const Graph& g, std::span<const Graph> family)
{
    return std::ranges::any_of(family, [&](const Graph& f) { return contains_subgraph(g, f); });
}

namespace {

bool has_unavoidable_member(int n, std::span<const Graph> family)
{
    return std::ranges::any_of(family, [&](const Graph& f) { return f.size() == 0 && f.order() <= n; });
}

// True iff some graph of the level avoids every family member.
bool level_has_free_graph(const std::vector<Graph>& level, std::span<const Graph> family, int jobs)
{
    std::atomic<bool> found{false};
    parallel_for(level.size(), jobs, [&](std::size_t i) {
        if (found.load(std::memory_order_relaxed)) return;
        if (!contains_any(level[i], family)) found.store(true, std::memory_order_relaxed);
    });
    return found.load();
}

void check_family(int n, std::span<const Graph> family, const TuranOptions& options)
{
    if (family.empty()) throw PreconditionError("Turán family must be nonempty");
    if (n < 0 || n > options.bound) {
        throw SizeExceeded("Turán order " + std::to_string(n) + " exceeds small-graph bound " +
                           std::to_string(options.bound));
    }
}

Graph complete_multipartite(int n, int parts)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u % parts != v % parts) g.add_edge(u, v);
    return g;
}

// Largest free graph among the balanced complete multipartite graphs, each
// extended greedily in lexicographic edge order. A lower bound on ex.
std::int64_t witness_edges(int n, std::span<const Graph> family)
{
    std::int64_t best = 0;
    for (int parts = 1; parts <= std::max(n, 1); ++parts) {
        Graph g = complete_multipartite(n, parts);
        if (contains_any(g, family)) continue;
        for (const Edge& e : g.non_edges()) {
            g.add_edge(e);
            if (contains_any(g, family)) g.remove_edge(e.u, e.v);
        }
        best = std::max<std::int64_t>(best, g.size());
    }
    return best;
}

// Family-free classes grown one edge at a time. Deleting an edge keeps a
// graph free, so every free graph on k edges extends some free graph on k-1.
class FreeLevels {
public:
    FreeLevels(int n, std::span<const Graph> family, const TuranOptions& options)
        : n_(n), family_(family), options_(options), current_{canonical_form(Graph(n), options.bound).graph} {}

    int edges() const noexcept { return k_; }
    bool empty() const noexcept { return current_.empty(); }

    void grow()
    {
        std::vector<std::vector<Graph>> found(current_.size());
        parallel_for(current_.size(), options_.jobs, [&](std::size_t i) {
            for (const Edge& e : current_[i].non_edges()) {
                Graph h = current_[i];
                h.add_edge(e);
                found[i].push_back(canonical_form(h, options_.bound).graph);
            }
        });
        std::unordered_set<Graph, GraphHash> seen;
        std::vector<Graph> fresh;
        for (auto& batch : found) {
            work_ += batch.size();
            for (Graph& g : batch)
                if (seen.insert(g).second) fresh.push_back(std::move(g));
        }
        if (work_ > options_.max_work) {
            throw BudgetExceeded("Turán search on " + std::to_string(n_) + " vertices exceeded " +
                                 std::to_string(options_.max_work) + " canonical labelings");
        }
        std::vector<char> keep(fresh.size(), 0);
        parallel_for(fresh.size(), options_.jobs, [&](std::size_t i) { keep[i] = !contains_any(fresh[i], family_); });
        current_.clear();
        for (std::size_t i = 0; i < fresh.size(); ++i)
            if (keep[i]) current_.push_back(std::move(fresh[i]));
        ++k_;
    }

private:
    int n_;
    std::span<const Graph> family_;
    const TuranOptions& options_;
    std::vector<Graph> current_;
    int k_ = 0;
    std::uint64_t work_ = 0;
};

} // namespace

ExValue turan_ex(int n, std::span<const Graph> family, TuranOptions options)
{
    check_family(n, family, options);
    if (has_unavoidable_member(n, family)) return ExValue::none();
    const std::int64_t top = choose2(n);
    if (std::ranges::all_of(family, [&](const Graph& f) { return f.order() > n || f.size() > top; })) {
        return ExValue::finite(top);
    }
    const std::int64_t known = witness_edges(n, family);
    try {
        FreeLevels levels(n, family, options);
        while (true) {
            levels.grow();
            if (levels.empty()) return ExValue::finite(levels.edges() - 1);
        }
    } catch (const BudgetExceeded&) {
        // too many free classes; the levels above the witness mirror small
        // levels of the all-graph enumeration instead
    }
    GraphEnumerator all(n, {.bound = options.bound, .max_work = options.max_work});
    for (auto k = top; k > known; --k)
        if (level_has_free_graph(all.level(static_cast<int>(k)), family, options.jobs)) return ExValue::finite(k);
    return ExValue::finite(known);
}

bool turan_at_most(int n, std::span<const Graph> family, std::int64_t limit, TuranOptions options)
{
    check_family(n, family, options);
    if (has_unavoidable_member(n, family)) return true;
    if (limit < 0) return false;
    const std::int64_t top = choose2(n);
    if (limit >= top) return true;
    if (witness_edges(n, family) > limit) return false;
    // ex <= limit iff no free graph has exactly limit + 1 edges
    const std::int64_t target = limit + 1;
    try {
        FreeLevels levels(n, family, options);
        while (levels.edges() < target) {
            levels.grow();
            if (levels.empty()) return true;
        }
        return false;
    } catch (const BudgetExceeded&) {
        if (2 * target <= top) throw;
    }
    GraphEnumerator all(n, {.bound = options.bound, .max_work = options.max_work});
    return !level_has_free_graph(all.level(static_cast<int>(target)), family, options.jobs);
}

int FValue::require() const
{
    if (!exact) {
        throw PreconditionError("f(H) is only known to lie in [" + std::to_string(lower) + ", " +
                                std::to_string(upper) + "] at this graph bound");
    }
    return value;
}

FValue f_of_h(const Pattern& pattern, TuranOptions options)
{
    static std::mutex memo_lock;
    static std::map<std::tuple<std::string, int, std::uint64_t>, FValue> memo;
    const auto key = std::make_tuple(encode_graph6(canonical_form(pattern.graph(), kMaxVertices).graph), options.bound,
                                     options.max_work);
    {
        std::lock_guard<std::mutex> hold(memo_lock);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }

    const int h = pattern.order();
    FValue out{false, 0, h - 1, 5 * h};
    const auto family = peeled_family(pattern);
    std::map<int, bool> ok;
    auto holds = [&](int big_n) {
        if (auto it = ok.find(big_n); it != ok.end()) return it->second;
        const std::int64_t limit = choose2(big_n) - 2 * big_n - 2;
        return ok[big_n] = turan_at_most(big_n, family, limit, options);
    };
    try {
        for (int n = std::max(h - 1, 1); n <= 5 * h; ++n) {
            if (holds(n - 1) && holds(n)) {
                out = {true, n, n, n};
                break;
            }
        }
        if (!out.exact) throw std::logic_error("f(H) exceeded 5|V(H)|");
    } catch (const SizeExceeded&) {
    } catch (const BudgetExceeded&) {
    }
    std::lock_guard<std::mutex> hold(memo_lock);
    memo[key] = out;
    return out;
}

namespace {

struct MaxIndependent {
    const Graph& g;
    Bits best = 0;
    int best_size = -1;

    void search(Bits chosen, Bits open)
    {
        const int size = popcount(chosen);
        if (size + popcount(open) <= best_size) return;
        if (!open) {
            best = chosen;
            best_size = size;
            return;
        }
        // Branch on the open vertex with the most open neighbors; if none has
        // any, take all of them.
        int pick = -1;
        int most = -1;
        for (Bits r = open; r; r &= r - 1) {
            const int v = __builtin_ctzll(r);
            const int d = popcount(g.neighbors(v) & open);
            if (d > most) {
                most = d;
                pick = v;
            }
        }
        if (most == 0) {
            search(chosen | open, 0);
            return;
        }
        search(chosen | bit(pick), open & ~g.neighbors(pick) & ~bit(pick));
        search(chosen, open & ~bit(pick));
    }
};

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

} // namespace

std::vector<int> find_independent_set(const Graph& g, Ratio c)
{
    const std::int64_t n = g.order();
    if (c.den <= 0 || c.num < 0) throw PreconditionError("c must be a non-negative ratio");
    if (6 * c.num > (n - 3) * c.den) throw PreconditionError("c exceeds (n-3)/6");
    if (static_cast<std::int64_t>(g.size()) * c.den > c.num * n) throw PreconditionError("graph has more than c*n edges");
    MaxIndependent mis{g};
    mis.search(0, g.vertex_mask());
    std::vector<int> out;
    for (Bits r = mis.best; r; r &= r - 1) out.push_back(__builtin_ctzll(r));
    const std::int64_t target = ceil_div(n * c.den, 2 * c.num + c.den);
    if (static_cast<std::int64_t>(out.size()) < target) {
        throw std::logic_error("independent set below the guaranteed size");
    }
    return out;
}

Biclique find_biclique(const Graph& g, std::span<const int> part_a, std::span<const int> part_b)
{
    const auto m = static_cast<std::int64_t>(part_a.size());
    const auto n = static_cast<std::int64_t>(part_b.size());
    if (!(n >= m && m >= 2)) throw PreconditionError("need n >= m >= 2");
    Bits a_mask = 0;
    Bits b_mask = 0;
    for (int a : part_a) a_mask |= bit(a);
    for (int b : part_b) b_mask |= bit(b);
    if ((a_mask & b_mask) || popcount(a_mask) != m || popcount(b_mask) != n) {
        throw PreconditionError("parts must be disjoint sets of distinct vertices");
    }
    for (const Edge& e : g.edges()) {
        const bool across = (((a_mask >> e.u) & 1U) && ((b_mask >> e.v) & 1U)) ||
                            (((a_mask >> e.v) & 1U) && ((b_mask >> e.u) & 1U));
        if (!across) throw PreconditionError("edge outside the bipartition");
    }
    if (g.size() < m * (n - 1)) throw PreconditionError("fewer than m(n-1) edges");

    Biclique out;
    Bits common = b_mask;
    std::vector<int> sorted_a(part_a.begin(), part_a.end());
    std::ranges::sort(sorted_a);
    for (int a : sorted_a) {
        if (static_cast<std::int64_t>(out.a.size()) == m / 2) break;
        if (popcount(g.neighbors(a) & b_mask) >= n - 1) {
            out.a.push_back(a);
            common &= g.neighbors(a);
        }
    }
    for (Bits r = common; r; r &= r - 1) out.b.push_back(__builtin_ctzll(r));
    if (static_cast<std::int64_t>(out.a.size()) != m / 2 || static_cast<std::int64_t>(out.b.size()) < n / 2) {
        throw std::logic_error("biclique below the guaranteed size");
    }
    return out;
}

std::optional<Edge> in_family_F(const Pattern& pattern)
{
    const Graph& g = pattern.graph();
    for (const Edge& e : g.edges()) {
        if (g.degree(e.u) != 2 || g.degree(e.v) != 2) continue;
        for (Bits xs = g.neighbors(e.u) & ~bit(e.v); xs; xs &= xs - 1) {
            const int x = __builtin_ctzll(xs);
            for (Bits ys = g.neighbors(e.v) & ~bit(e.u); ys; ys &= ys - 1) {
                const int y = __builtin_ctzll(ys);
                if (x == y) continue;
                if (!g.has_edge(x, e.v) && !g.has_edge(e.u, y) && !g.has_edge(x, y)) return e;
            }
        }
    }
    return std::nullopt;
}

namespace {

std::map<int, std::int64_t> index_sequence(std::span<const std::pair<int, std::int64_t>> seq)
{
    std::map<int, std::int64_t> out;
    for (const auto& [i, a] : seq) {
        if (!out.emplace(i, a).second) throw PreconditionError("duplicate index " + std::to_string(i));
    }
    if (!out.empty() && out.rbegin()->first - out.begin()->first + 1 != static_cast<int>(out.size())) {
        throw PreconditionError("sequence indices have gaps");
    }
    return out;
}

} // namespace

bool check_subadditive(std::span<const std::pair<int, std::int64_t>> seq, double c, double t)
{
    const auto a = index_sequence(seq);
    for (const auto& [m, am] : a) {
        if (m < t) continue;
        for (const auto& [n, an] : a) {
            if (n < t) continue;
            auto sum = a.find(m + n);
            if (sum == a.end()) continue;
            if (static_cast<double>(sum->second) > static_cast<double>(am + an) + c) return false;
        }
    }
    return true;
}

std::optional<std::int64_t> min_subadditive_slack(std::span<const std::pair<int, std::int64_t>> seq, double t)
{
    const auto a = index_sequence(seq);
    std::optional<std::int64_t> worst;
    for (const auto& [m, am] : a) {
        if (m < t) continue;
        for (const auto& [n, an] : a) {
            if (n < t) continue;
            auto sum = a.find(m + n);
            if (sum == a.end()) continue;
            const std::int64_t need = sum->second - am - an;
            worst = worst ? std::max(*worst, need) : need;
        }
    }
    return worst;
}

PatternProfile analyze_pattern(const Pattern& pattern, TuranOptions options)
{
    PatternProfile p;
    p.delta_prime = delta_prime(pattern);
    p.has_pendant = has_pendant_edge(pattern.graph());
    p.peeled_family = peeled_family(pattern);
    p.f = f_of_h(pattern, options);
    p.family_f_witness = in_family_F(pattern);
    return p;
}

bool is_complete(const Graph& g, int* r)
{
    if (g.order() < 2 || g.size() != choose2(g.order())) return false;
    if (r) *r = g.order();
    return true;
}

BoundsReport paper_bounds(int n, const Pattern& pattern, TuranOptions options)
{
    const PatternProfile p = analyze_pattern(pattern, options);
    const int h = pattern.order();
    const int dp = p.delta_prime;
    // With f only bracketed, the interval's upper end keeps every regime and
    // every (increasing-in-f) upper bound valid.
    const std::int64_t f = p.f.exact ? p.f.value : p.f.upper;
    const std::string f_note = p.f.exact ? "" : " (f(H) at interval upper end)";

    BoundsReport report;
    auto add = [&](BoundEntry::Side side, std::string source, bool applicable, std::int64_t value, std::string reason) {
        report.entries.push_back({side, std::move(source), applicable, applicable ? value : 0,
                                  applicable ? "" : std::move(reason)});
    };
    using Side = BoundEntry::Side;
    const auto nn = static_cast<std::int64_t>(n);

    add(Side::Lower, "trivial", true, 0, "");
    add(Side::Upper, "complete-graph", true, choose2(nn), "");

    if (p.has_pendant) {
        add(Side::Upper, "pendant-clique-isolated" + f_note, nn > f + 1, choose2(f + 1),
            "needs n > f(H)+1 = " + std::to_string(f + 1));
        add(Side::Lower, "min-degree", false, 0, "H has a pendant edge");
        add(Side::Upper, "three-block", false, 0, "H has a pendant edge");
    } else {
        const bool regime = nn > f + dp;
        const std::string why = "needs n > f(H)+delta'(H) = " + std::to_string(f + dp);
        add(Side::Lower, "min-degree", regime, (static_cast<std::int64_t>(dp) * nn + 1) / 2, why);
        add(Side::Upper, "three-block" + f_note, regime, dp * (nn - f - dp) + choose2(f + dp), why);
        add(Side::Upper, "pendant-clique-isolated", false, 0, "H has no pendant edge");
    }

    int r = 0;
    if (is_complete(pattern.graph(), &r) && r >= 3) {
        add(Side::Upper, "complete-pattern", nn > r, static_cast<std::int64_t>(r - 1) * (nn - r) + choose2(r),
            "needs n > r = " + std::to_string(r));
        add(Side::Lower, "weak-saturation", nn >= r, choose2(nn) - choose2(nn - r + 2),
            "needs n >= r = " + std::to_string(r));
    }

    if (p.family_f_witness && dp == 2) {
        const bool regime = nn >= h + 3;
        std::int64_t value = 0;
        if (regime) {
            const std::int64_t k = (nn - h - 1) / 2;
            value = choose2(nn - 2 * k) + 3 * k;
        }
        add(Side::Upper, "degree-two-triangles", regime, value, "needs n >= |V(H)|+3 = " + std::to_string(h + 3));
    }

    bool have_lower = false;
    bool have_upper = false;
    for (const BoundEntry& e : report.entries) {
        if (!e.applicable) continue;
        if (e.side == Side::Lower && (!have_lower || e.value > report.lower)) {
            report.lower = e.value;
            report.lower_source = e.source;
            have_lower = true;
        }
        if (e.side == Side::Upper && (!have_upper || e.value < report.upper)) {
            report.upper = e.value;
            report.upper_source = e.source;
            have_upper = true;
        }
    }
    return report;
}

} // namespace rainbow
