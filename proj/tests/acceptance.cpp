// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "oracles.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/enumerate.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/search.hpp"
#include "rainbow/verifier.hpp"

using namespace rainbow;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

int workers()
{
    return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

ColoredGraph colored(const Graph& g, const std::vector<int>& rgs)
{
    std::vector<ColorId> cs;
    for (int c : rgs) cs.push_back({static_cast<std::uint64_t>(c)});
    return ColoredGraph(g, cs);
}

// Every coloring of g up to renaming colors, at most max_blocks colors (0 = any).
void for_each_coloring(const Graph& g, int max_blocks, const std::function<void(const ColoredGraph&)>& visit)
{
    const int m = g.size();
    oracle::for_each_set_partition(m, max_blocks == 0 ? std::max(m, 1) : max_blocks,
                                   [&](const std::vector<int>& rgs) { visit(colored(g, rgs)); });
}

void for_each_graph_upto(int n_max, const std::function<void(const Graph&)>& visit)
{
    for (int n = 1; n <= n_max; ++n) oracle::for_each_labeled(n, visit);
}

std::vector<Pattern> k3_p3()
{
    return {Pattern(complete_graph(3)), Pattern(path_graph(3))};
}

// ---------------------------------------------------------------- 1

Verdict criterion1()
{
    long long checked = 0, disagree = 0, bad_breaking = 0;
    auto compare = [&](const ColoredState& s, Edge e, const Pattern& h) {
        const AddableResult r = addable(s, e, h);
        ++checked;
        if (r.verdict != naive_addable_oracle(s, e, h)) ++disagree;
        if (!r.verdict && (!r.breaking || !r.breaking->injective() ||
                           oracle::rainbow_copy_through(realize(s, e, *r.breaking), h.graph(), e)))
            ++bad_breaking;
    };

    const auto patterns = k3_p3();
    for_each_graph_upto(4, [&](const Graph& g) {
        const auto missing = g.non_edges();
        for_each_coloring(g, 0, [&](const ColoredGraph& cg) {
            // ordered sequences of up to two added edges, then every remaining candidate
            std::vector<std::vector<Edge>> seqs{{}};
            for (const Edge& a : missing) {
                seqs.push_back({a});
                for (const Edge& b : missing)
                    if (!(a == b)) seqs.push_back({a, b});
            }
            for (const auto& seq : seqs) {
                const ColoredState s(cg, seq);
                for (const Edge& e : missing) {
                    if (std::find(seq.begin(), seq.end(), e) != seq.end()) continue;
                    for (const Pattern& h : patterns) compare(s, e, h);
                }
            }
        });
    });
    const long long exhaustive = checked;

    std::mt19937_64 rng(20240601);
    std::vector<Pattern> patterns3 = k3_p3();
    patterns3.emplace_back(cycle_graph(4));
    int instances = 0;
    while (instances < 500) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const Graph g = oracle::random_graph(rng, n, 0.45);
        auto missing = g.non_edges();
        const int added = static_cast<int>(rng() % 4);
        if (static_cast<int>(missing.size()) < added + 1) continue;
        std::shuffle(missing.begin(), missing.end(), rng);
        const int palette = 1 + static_cast<int>(rng() % 5);
        std::vector<ColorId> cs;
        for (std::size_t i = 0; i < g.edges().size(); ++i) cs.push_back({rng() % static_cast<unsigned>(palette)});
        const ColoredState s(ColoredGraph(g, cs), std::vector<Edge>(missing.begin(), missing.begin() + added));
        const Edge e = missing[static_cast<std::size_t>(added)];
        for (const Pattern& h : patterns3) compare(s, e, h);
        ++instances;
    }

    std::ostringstream d;
    d << exhaustive << " exhaustive + " << (checked - exhaustive) << " random comparisons, " << disagree
      << " disagreements, " << bad_breaking << " invalid breaking assignments";
    return {disagree == 0 && bad_breaking == 0, d.str()};
}

// ---------------------------------------------------------------- 2

Verdict criterion2()
{
    long long checked = 0, disagree = 0, saturated = 0;
    const auto patterns = k3_p3();
    oracle::for_each_labeled(4, [&](const Graph& g) {
        for_each_coloring(g, 0, [&](const ColoredGraph& cg) {
            for (const Pattern& h : patterns) {
                const ClosureResult r = greedy_closure(cg, h);
                const bool ex = exhaustive_ordering_check(cg, h);
                ++checked;
                saturated += r.saturated;
                if (r.saturated != ex) ++disagree;
                if (r.saturated && !verify_certificate(cg, h, r.certificate).accepted) ++disagree;
            }
        });
    });
    std::ostringstream d;
    d << checked << " colored 4-vertex instances (" << saturated << " saturated), " << disagree << " disagreements";
    return {disagree == 0, d.str()};
}

// ---------------------------------------------------------------- 3

Verdict criterion3()
{
    long long checked = 0, violations = 0;
    const auto patterns = k3_p3();
    for (int n = 3; n <= 5; ++n) {
        GraphEnumerator en(n);
        for (int k = 0; k <= en.max_edges(); ++k) {
            for (const Graph& g : en.level(k)) {
                const auto missing = g.non_edges();
                std::vector<std::vector<Edge>> sets{{}};
                for (std::size_t i = 0; i < missing.size(); ++i) {
                    sets.push_back({missing[i]});
                    for (std::size_t j = i + 1; j < missing.size(); ++j) sets.push_back({missing[i], missing[j]});
                }
                for_each_coloring(g, 3, [&](const ColoredGraph& cg) {
                    for (const auto& set : sets) {
                        const ColoredState s(cg, set);
                        auto outside = [&](const Edge& x) { return std::find(set.begin(), set.end(), x) == set.end(); };
                        for (const Edge& e : missing) {
                            if (!outside(e)) continue;
                            for (const Pattern& h : patterns) {
                                if (!addable(s, e, h).verdict) continue;
                                for (const Edge& extra : missing) {
                                    if (!outside(extra) || extra == e) continue;
                                    ColoredState bigger = s;
                                    bigger.push(extra);
                                    ++checked;
                                    if (!addable(bigger, e, h).verdict) ++violations;
                                }
                            }
                        }
                    }
                });
            }
        }
    }
    std::ostringstream d;
    d << checked << " extensions of addable edges (base colorings <= 3 colors), " << violations << " violations";
    return {violations == 0, d.str()};
}

// ---------------------------------------------------------------- 4

bool valid_independent(const Graph& g, const std::vector<int>& s, Ratio c)
{
    const std::int64_t n = g.order();
    const std::int64_t need = (n * c.den + (2 * c.num + c.den) - 1) / (2 * c.num + c.den);
    if (static_cast<std::int64_t>(s.size()) < need) return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.order()) return false;
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || g.has_edge(s[i], s[j])) return false;
    }
    return true;
}

bool in_precondition(int n, Ratio c)
{
    return 6 * c.num <= static_cast<std::int64_t>(n - 3) * c.den;
}

Verdict criterion4()
{
    const std::vector<Ratio> cs{{0, 1}, {1, 2}, {1, 1}};
    long long checked = 0, failures = 0, skipped = 0;

    auto test = [&](const Graph& g, Ratio c) {
        ++checked;
        if (!valid_independent(g, find_independent_set(g, c), c)) ++failures;
    };

    // n = 7: every labeled graph with at most floor(cn) edges
    const auto pairs7 = oracle::all_pairs(7);
    for (Ratio c : cs) {
        if (!in_precondition(7, c)) {
            ++skipped;
            continue;
        }
        const int cap = static_cast<int>(7 * c.num / c.den);
        std::function<void(Graph&, std::size_t, int)> rec = [&](Graph& g, std::size_t from, int left) {
            test(g, c);
            if (left == 0) return;
            for (std::size_t i = from; i < pairs7.size(); ++i) {
                g.add_edge(pairs7[i]);
                rec(g, i + 1, left - 1);
                g.remove_edge(pairs7[i].u, pairs7[i].v);
            }
        };
        Graph g(7);
        rec(g, 0, cap);
    }

    std::mt19937_64 rng(4242);
    for (int n = 8; n <= 10; ++n) {
        auto pairs = oracle::all_pairs(n);
        for (Ratio c : cs) {
            if (!in_precondition(n, c)) {
                ++skipped;
                continue;
            }
            const int cap = static_cast<int>(n * c.num / c.den);
            for (int i = 0; i < 200; ++i) {
                std::shuffle(pairs.begin(), pairs.end(), rng);
                Graph g(n);
                const int m = static_cast<int>(rng() % static_cast<unsigned>(cap + 1));
                for (int j = 0; j < m; ++j) g.add_edge(pairs[static_cast<std::size_t>(j)]);
                test(g, c);
            }
        }
    }
    const long long independent = checked;

    for (int m : {2, 3}) {
        const int n = 4;
        std::vector<int> a, b;
        for (int i = 0; i < m; ++i) a.push_back(i);
        for (int j = 0; j < n; ++j) b.push_back(m + j);
        const Graph full = complete_bipartite(m, n);
        const auto edges = full.edges();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
            if (std::popcount(mask) < m * (n - 1)) continue;
            Graph g(m + n);
            for (std::size_t i = 0; i < edges.size(); ++i)
                if (mask >> i & 1) g.add_edge(edges[i]);
            ++checked;
            const Biclique bc = find_biclique(g, a, b);
            bool ok = static_cast<int>(bc.a.size()) == m / 2 && static_cast<int>(bc.b.size()) >= n / 2;
            for (int x : bc.a) ok = ok && x >= 0 && x < m;
            for (int y : bc.b) ok = ok && y >= m && y < m + n;
            for (int x : bc.a)
                for (int y : bc.b) ok = ok && g.has_edge(x, y);
            if (!ok) ++failures;
        }
    }

    std::ostringstream d;
    d << independent << " independent-set cases (" << skipped << " (n,c) pairs outside 0<=c<=(n-3)/6 skipped), "
      << (checked - independent) << " biclique cases, " << failures << " failures";
    return {failures == 0, d.str()};
}

// ---------------------------------------------------------------- 5

Verdict criterion5()
{
    std::ostringstream d;
    bool pass = true;
    const std::vector<std::pair<std::string, Graph>> hs{
        {"K3", complete_graph(3)}, {"P3", path_graph(3)}, {"C4", cycle_graph(4)}, {"C5", cycle_graph(5)}};
    for (const auto& [name, g] : hs) {
        const Pattern h(g);
        const int f = f_of_h(h).require();
        const bool disjoint = check_gadget(h, f, GadgetPalette::Disjoint);
        const bool shared = check_gadget(h, f, GadgetPalette::Shared);
        pass = pass && disjoint && shared;
        d << name << " f=" << f << (disjoint && shared ? " ok" : " FAILED") << "; ";
    }
    return {pass, d.str()};
}

// ---------------------------------------------------------------- 6

Verdict criterion6()
{
    long long checked = 0, accepted = 0, counter = 0;
    const auto patterns = k3_p3();
    for_each_graph_upto(4, [&](const Graph& g) {
        for_each_coloring(g, 3, [&](const ColoredGraph& cg) {
            for (const Pattern& h : patterns) {
                ++checked;
                if (!greedy_closure(cg, h).saturated) continue;
                ++accepted;
                if (!greedy_closure(rainbow_recolor(cg), h).saturated) ++counter;
            }
        });
    });
    std::ostringstream d;
    d << checked << " colored instances, " << accepted << " accepted, " << counter << " counterexamples";
    return {counter == 0, d.str()};
}

// ---------------------------------------------------------------- 7

std::int64_t c2(std::int64_t x)
{
    return x * (x - 1) / 2;
}

Verdict criterion7()
{
    long long checked = 0, failures = 0;
    std::ostringstream d;
    auto expect = [&](const ColoredGraph& g, int n, std::int64_t closed) {
        ++checked;
        if (g.order() != n || g.graph().size() != closed || !g.is_rainbow()) ++failures;
    };

    Graph paw = complete_graph(3);
    paw = disjoint_union(paw, Graph(1));
    paw.add_edge(0, 3);
    int pendant_patterns = 0;
    for (const Graph& hg : {path_graph(3), star_graph(3), paw, path_graph(4)}) {
        const Pattern h(hg);
        const FValue f = f_of_h(h);
        if (!f.exact) continue;
        ++pendant_patterns;
        for (int n = f.value + 2; n <= 12; ++n) expect(clique_plus_isolated(n, h), n, c2(f.value + 1));
    }
    d << "clique+isolated over " << pendant_patterns << " pendant patterns; ";

    for (const Graph& hg : {complete_graph(3), cycle_graph(4), cycle_graph(5), complete_graph(4)}) {
        const Pattern h(hg);
        const int f = f_of_h(h).require();
        const int dp = delta_prime(h);
        for (int n = f + dp + 1; n <= 12; ++n) expect(three_block(n, h), n, dp * (n - f - dp) + c2(f + dp));
    }

    for (int r = 3; r <= 11; ++r)
        for (int n = r + 1; n <= 12; ++n) expect(complete_graph_construction(n, r), n, (r - 1) * (n - r) + c2(r));

    for (const Graph& hg : {cycle_graph(5), cycle_graph(6)}) {
        const Pattern h(hg);
        for (int n = h.order() + 3; n <= 12; ++n) {
            const int k = (n - h.order() - 1) / 2;
            expect(family_F_construction(n, h), n, c2(n - 2 * k) + 3 * k);
        }
    }

    for (int n = 5; n <= 12; ++n) {
        if (n % 2 == 1) expect(c4_construction(n), n, (n - 1) + (n - 1) / 2);
        else if (n >= 8) expect(c4_construction(n), n, 6 + (n - 4) + (n - 4) / 2);
    }

    // joins of small inputs, total order <= 12
    const std::vector<Graph> inputs{disjoint_union(complete_graph(3), Graph(2)), disjoint_union(path_graph(3), Graph(1)),
                                    disjoint_union(star_graph(3), Graph(2)), path_graph(5), cycle_graph(6),
                                    disjoint_union(complete_graph(2), Graph(3))};
    int joins = 0;
    for (const Graph& a : inputs) {
        for (const Graph& b : inputs) {
            if (a.order() + b.order() > 12) continue;
            const ColoredGraph g1 = ColoredGraph::rainbow(a);
            const ColoredGraph g2 = ColoredGraph::rainbow(b, static_cast<std::uint64_t>(a.size()));
            for (std::int64_t as = 0; as <= 2; ++as) {
                for (std::int64_t bt = 1; bt <= 2; ++bt) {
                    JoinBlueprint bp;
                    try {
                        bp = subadditive_join(g1, g2, 2, as, bt);
                    } catch (const NoIndependentSet&) {
                        continue;
                    }
                    ++joins;
                    const std::int64_t s1 = static_cast<std::int64_t>(bp.x1.size() + bp.a1.size());
                    const std::int64_t s2 = static_cast<std::int64_t>(bp.x2.size() + bp.a2.size());
                    expect(bp.graph, a.order() + b.order(), a.size() + b.size() + s1 * s2);
                }
            }
        }
    }
    d << joins << " joins; " << checked << " instances, " << failures << " mismatches";
    return {failures == 0 && pendant_patterns > 0 && joins > 0, d.str()};
}

// ---------------------------------------------------------------- 8, 10

std::map<int, SearchResult>& rwsat_k3()
{
    static std::map<int, SearchResult> memo;
    return memo;
}

const SearchResult& rwsat_k3_at(int n)
{
    auto& memo = rwsat_k3();
    auto it = memo.find(n);
    if (it == memo.end()) {
        SearchOptions opt;
        opt.jobs = workers();
        it = memo.emplace(n, exact_rwsat(n, Pattern(complete_graph(3)), opt)).first;
    }
    return it->second;
}

Verdict criterion8()
{
    const std::map<int, std::int64_t> golden{{4, 4}, {5, 6}, {6, 8}};
    bool pass = true;
    std::ostringstream d;
    for (int n = 4; n <= 6; ++n) {
        const SearchResult& r = rwsat_k3_at(n);
        const std::int64_t lo = std::max<std::int64_t>(n, c2(n) - c2(n - 1));
        const std::int64_t hi = 2 * n - 3;
        const bool ok = r.exact && r.value >= lo && r.value <= hi && r.value == golden.at(n);
        pass = pass && ok;
        d << "n=" << n << " rwsat=" << r.value << " in [" << lo << "," << hi << "] (" << r.seconds << "s)"
          << (ok ? "" : " FAILED") << "; ";
    }
    return {pass, d.str()};
}

Verdict criterion10()
{
    std::vector<std::pair<int, std::int64_t>> seq;
    for (int n = 2; n <= 6; ++n) {
        const SearchResult& r = rwsat_k3_at(n);
        if (!r.exact) return {false, "rwsat not exact at n=" + std::to_string(n)};
        seq.emplace_back(n, r.value);
    }
    const double slack = std::pow(3.0, 14.0);
    const bool ok = check_subadditive(seq, slack, 2.0);
    const auto minimal = min_subadditive_slack(seq, 2.0);
    std::ostringstream d;
    d << "rwsat(n,K3) n=2..6:";
    for (const auto& [n, v] : seq) d << ' ' << v;
    d << "; t=2, slack 3^14; minimal slack " << (minimal ? std::to_string(*minimal) : "n/a");
    return {ok && minimal.has_value(), d.str()};
}

// ---------------------------------------------------------------- 9

bool closes_and_replays(const ColoredGraph& g, const Pattern& h)
{
    const ClosureResult r = greedy_closure(g, h, {workers()});
    return r.saturated && verify_certificate(g, h, r.certificate).accepted;
}

Verdict criterion9()
{
    std::ostringstream d;
    const Pattern k3(complete_graph(3));
    int smallest = 0;
    d << "K_r construction r=3 sweep:";
    for (int n = 4; n <= 8; ++n) {
        const bool ok = closes_and_replays(complete_graph_construction(n, 3), k3);
        d << " n=" << n << (ok ? ":accept" : ":reject");
        if (ok && smallest == 0) smallest = n;
    }
    d << " (smallest " << smallest << ")";
    const bool ff = closes_and_replays(family_F_construction(9, Pattern(cycle_graph(5))), Pattern(cycle_graph(5)));
    const bool c4 = closes_and_replays(c4_construction(7), Pattern(cycle_graph(4)));
    d << "; family F C5 n=9 " << (ff ? "accept" : "reject") << "; C4 n=7 " << (c4 ? "accept" : "reject");
    return {smallest != 0 && ff && c4, d.str()};
}

} // namespace

int main()
{
    const std::vector<std::function<Verdict()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                         criterion6, criterion7, criterion8, criterion9, criterion10};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i]();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !v.pass;
        std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << v.detail << " [" << secs << "s]"
                  << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
