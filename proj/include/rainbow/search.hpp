#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/rainbow_iso.hpp"

namespace rainbow {

struct SearchOptions {
    /// Maximum number of candidate graphs to run the closure on; 0 = no limit.
    std::uint64_t budget = 0;
    int jobs = 1;
    int bound = kDefaultSmallGraphBound;
};

struct LevelStats {
    int edges = 0;
    std::size_t candidates = 0;
    std::size_t accepted = 0;
};

struct SearchResult {
    int n = 0;
    Graph pattern;
    bool exact = false;
    /// rwsat(n, H) when exact; otherwise lower..upper brackets it.
    std::int64_t value = 0;
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    std::string upper_source;
    /// Canonical representatives accepted at the returned edge count.
    std::vector<Graph> witnesses;
    std::vector<LevelStats> levels;
    std::uint64_t candidates_checked = 0;
    double seconds = 0.0;
};

/// Minimum edge count of an n-vertex graph that, rainbow-colored by edge
/// index, is accepted by greedy_closure. Walks k = 0, 1, ... over one
/// representative per isomorphism class; K_n is always accepted, so the walk
/// ends by k = C(n,2). When the budget runs out first, the result is a bracket.
SearchResult exact_rwsat(int n, const Pattern& pattern, SearchOptions options = {});

/// Closure verdict for each candidate (rainbow-colored by edge index).
/// The serial kernel is the reference for the parallel one.
std::vector<char> sweep_closure_serial(std::span<const Graph> candidates, const Pattern& pattern);
std::vector<char> sweep_closure_parallel(std::span<const Graph> candidates, const Pattern& pattern, int jobs);

/// Some ordering of the non-edges in which every step is addable, found by a
/// depth-first search over added sets with failed sets memoized. Does not rely
/// on monotonicity. Throws BudgetExceeded above max_non_edges non-edges.
std::optional<std::vector<Edge>> find_ordering_exhaustive(const ColoredGraph& g, const Pattern& pattern,
                                                          int max_non_edges = 8);

/// True iff some permutation of the non-edges passes verify_certificate.
bool exhaustive_ordering_check(const ColoredGraph& g, const Pattern& pattern, int max_non_edges = 8);

} // namespace rainbow
