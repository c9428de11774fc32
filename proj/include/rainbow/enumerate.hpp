#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

struct EnumerateOptions {
    int bound = kDefaultSmallGraphBound;
    /// Upper limit on the number of classes held for any single level.
    std::size_t max_classes = 4'000'000;
    /// Upper limit on canonical labelings over the enumerator's life; 0 = none.
    std::uint64_t max_work = 0;
};

/// Isomorphism classes of n-vertex graphs, one level (edge count) at a time.
///
/// Level k is grown from level k-1 by adding every non-edge and keeping one
/// canonical representative per class; levels above C(n,2)/2 are produced as
/// complements of the mirrored level. Levels are cached, so walking k upward
/// costs each level once. Representatives are canonical and sorted.
class GraphEnumerator {
public:
    explicit GraphEnumerator(int n, EnumerateOptions options = {});

    int order() const noexcept { return n_; }
    int max_edges() const noexcept { return static_cast<int>(choose2(n_)); }

    const std::vector<Graph>& level(int k);

private:
    const std::vector<Graph>& grow(int k);

    int n_;
    EnumerateOptions options_;
    std::map<int, std::vector<Graph>> levels_;
    std::uint64_t work_ = 0;
};

/// One canonical representative per class of n-vertex, k-edge graphs.
std::vector<Graph> enumerate_graphs(int n, int k, EnumerateOptions options = {});

/// Streams the classes of every edge count 0..C(n,2).
void for_each_graph(int n, const std::function<void(const Graph&)>& visit, EnumerateOptions options = {});

} // namespace rainbow
