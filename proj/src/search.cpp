#include "rainbow/search.hpp"

#include <chrono>
#include <string>
#include <unordered_set>

#include "rainbow/enumerate.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/parallel.hpp"
#include "rainbow/verifier.hpp"

namespace rainbow {

namespace {

bool closure_accepts(const Graph& g, const Pattern& pattern)
{
    return greedy_closure(ColoredGraph::rainbow(g), pattern).saturated;
}

} // namespace

std::vector<char> sweep_closure_serial(std::span<const Graph> candidates, const Pattern& pattern)
{
    std::vector<char> out(candidates.size(), 0);
    for (std::size_t i = 0; i < candidates.size(); ++i) out[i] = closure_accepts(candidates[i], pattern) ? 1 : 0;
    return out;
}

std::vector<char> sweep_closure_parallel(std::span<const Graph> candidates, const Pattern& pattern, int jobs)
{
    // one slot per candidate, so no two workers share a write target
    std::vector<char> out(candidates.size(), 0);
    parallel_for(candidates.size(), jobs,
                 [&](std::size_t i) { out[i] = closure_accepts(candidates[i], pattern) ? 1 : 0; });
    return out;
}

SearchResult exact_rwsat(int n, const Pattern& pattern, SearchOptions options)
{
    if (n < 1) throw PreconditionError("n must be positive");
    if (n > options.bound) {
        throw SizeExceeded("n = " + std::to_string(n) + " is above the small-graph bound " + std::to_string(options.bound));
    }
    const auto start = std::chrono::steady_clock::now();
    SearchResult result;
    result.n = n;
    result.pattern = pattern.graph();

    GraphEnumerator enumerator(n, {.bound = options.bound});
    const int top = enumerator.max_edges();
    for (int k = 0; k <= top; ++k) {
        const std::vector<Graph>& level = enumerator.level(k);
        if (options.budget != 0 && result.candidates_checked + level.size() > options.budget) {
            // levels below k were swept completely without a witness
            result.exact = false;
            result.lower = k;
            result.upper = choose2(n);
            result.upper_source = "complete graph";
            try {
                const BoundsReport bounds = paper_bounds(n, pattern, {.bound = options.bound, .jobs = options.jobs});
                if (bounds.upper < result.upper && bounds.upper >= k) {
                    result.upper = bounds.upper;
                    result.upper_source = bounds.upper_source;
                }
            } catch (const SizeExceeded&) {
            } catch (const BudgetExceeded&) {
            }
            result.value = result.lower;
            break;
        }
        const std::vector<char> verdicts = options.jobs == 1 ? sweep_closure_serial(level, pattern)
                                                             : sweep_closure_parallel(level, pattern, options.jobs);
        result.candidates_checked += level.size();
        LevelStats stats{k, level.size(), 0};
        for (std::size_t i = 0; i < level.size(); ++i) {
            if (verdicts[i]) {
                ++stats.accepted;
                result.witnesses.push_back(level[i]);
            }
        }
        result.levels.push_back(stats);
        if (stats.accepted > 0) {
            result.exact = true;
            result.value = result.lower = result.upper = k;
            break;
        }
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

namespace {

class OrderingSearch {
public:
    OrderingSearch(const ColoredGraph& g, const Pattern& pattern)
        : pattern_(pattern), non_edges_(g.graph().non_edges()), state_(g) {}

    std::optional<std::vector<Edge>> run()
    {
        if (dfs(0)) return state_.added();
        return std::nullopt;
    }

private:
    bool dfs(std::uint32_t used)
    {
        const std::uint32_t full = (std::uint32_t{1} << non_edges_.size()) - 1;
        if (used == full) return true;
        if (failed_.contains(used)) return false;
        for (std::size_t i = 0; i < non_edges_.size(); ++i) {
            if ((used >> i) & 1U) continue;
            if (!addable(state_, non_edges_[i], pattern_).verdict) continue;
            ColoredState saved = state_;
            state_.push(non_edges_[i]);
            if (dfs(used | (std::uint32_t{1} << i))) return true;
            state_ = std::move(saved);
        }
        failed_.insert(used);
        return false;
    }

    const Pattern& pattern_;
    std::vector<Edge> non_edges_;
    ColoredState state_;
    std::unordered_set<std::uint32_t> failed_;
};

} // namespace

std::optional<std::vector<Edge>> find_ordering_exhaustive(const ColoredGraph& g, const Pattern& pattern,
                                                          int max_non_edges)
{
    const auto missing = static_cast<int>(g.graph().non_edges().size());
    if (missing > max_non_edges || missing > 31) {
        throw BudgetExceeded(std::to_string(missing) + " non-edges exceed the exhaustive ordering limit of " +
                             std::to_string(max_non_edges));
    }
    return OrderingSearch(g, pattern).run();
}

bool exhaustive_ordering_check(const ColoredGraph& g, const Pattern& pattern, int max_non_edges)
{
    const auto order = find_ordering_exhaustive(g, pattern, max_non_edges);
    if (!order) return false;
    Certificate cert{g.graph(), pattern.graph(), {}};
    for (const Edge& e : *order) cert.steps.push_back({e, std::nullopt, std::nullopt});
    return verify_certificate(g, pattern, cert).accepted;
}

} // namespace rainbow
