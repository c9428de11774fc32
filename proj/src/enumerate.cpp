#include "rainbow/enumerate.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "rainbow/canonical.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

GraphEnumerator::GraphEnumerator(int n, EnumerateOptions options) : n_(n), options_(options)
{
    if (n < 0 || n > options_.bound) {
        throw SizeExceeded("enumeration order " + std::to_string(n) + " exceeds small-graph bound " +
                           std::to_string(options_.bound));
    }
    levels_[0] = {Graph(n)};
}

const std::vector<Graph>& GraphEnumerator::level(int k)
{
    if (k < 0 || k > max_edges()) {
        static const std::vector<Graph> none;
        return none;
    }
    if (auto it = levels_.find(k); it != levels_.end()) return it->second;
    const int mirror = max_edges() - k;
    if (mirror < k) {
        const std::vector<Graph>& base = level(mirror);
        std::vector<Graph> out;
        out.reserve(base.size());
        for (const Graph& g : base) out.push_back(canonical_form(complement(g), options_.bound).graph);
        std::ranges::sort(out);
        return levels_[k] = std::move(out);
    }
    return grow(k);
}

const std::vector<Graph>& GraphEnumerator::grow(int k)
{
    const std::vector<Graph>& parents = level(k - 1);
    std::unordered_set<Graph, GraphHash> seen;
    for (const Graph& parent : parents) {
        for (const Edge& e : parent.non_edges()) {
            Graph child = parent;
            child.add_edge(e);
            seen.insert(canonical_form(child, options_.bound).graph);
            if (options_.max_work != 0 && ++work_ > options_.max_work) {
                throw BudgetExceeded("more than " + std::to_string(options_.max_work) + " canonical labelings at n=" +
                                     std::to_string(n_));
            }
            if (seen.size() > options_.max_classes) {
                throw BudgetExceeded("more than " + std::to_string(options_.max_classes) + " classes at n=" +
                                     std::to_string(n_) + ", k=" + std::to_string(k));
            }
        }
    }
    std::vector<Graph> out(seen.begin(), seen.end());
    std::ranges::sort(out);
    return levels_[k] = std::move(out);
}

std::vector<Graph> enumerate_graphs(int n, int k, EnumerateOptions options)
{
    GraphEnumerator e(n, options);
    return e.level(k);
}

void for_each_graph(int n, const std::function<void(const Graph&)>& visit, EnumerateOptions options)
{
    GraphEnumerator e(n, options);
    for (int k = 0; k <= e.max_edges(); ++k) {
        for (const Graph& g : e.level(k)) visit(g);
    }
}

} // namespace rainbow
