#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Non-negative rational num/den.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

/// Minimum degree over non-isolated vertices.
int delta_prime(const Pattern& pattern);

bool has_pendant_edge(const Graph& g);

/// H - {u, v} for every edge uv, one canonical graph per class, sorted.
/// Edgeless members (including the null graph) are kept.
std::vector<Graph> peeled_family(const Pattern& pattern);

/// Turán number: Finite(max edges) or "no family-free graph on n vertices".
struct ExValue {
    bool no_free_graph = false;
    std::int64_t edges = 0;

    static ExValue finite(std::int64_t k) { return {false, k}; }
    static ExValue none() { return {true, 0}; }

    friend bool operator==(const ExValue&, const ExValue&) = default;
};

struct TuranOptions {
    int bound = kDefaultSmallGraphBound;
    int jobs = 1;
    /// Canonical labelings allowed per search before BudgetExceeded.
    std::uint64_t max_work = 500'000;
};

/// Exact ex(n, family), by growing family-free classes until a level comes
/// out empty. When that exceeds the work budget, the levels above a
/// multipartite witness are scanned on the (mirrored) all-graph enumeration.
ExValue turan_ex(int n, std::span<const Graph> family, TuranOptions options = {});

/// ex(n, family) <= limit, deciding a single edge-count level. A family with
/// no free graph satisfies every limit.
bool turan_at_most(int n, std::span<const Graph> family, std::int64_t limit, TuranOptions options = {});

/// True iff some member of the family is a subgraph of g.
bool contains_any(const Graph& g, std::span<const Graph> family);

/// f(H), or the interval [|V(H)|-1, 5|V(H)|] when the Turán levels it needs
/// fall outside the small-graph bound or the enumeration budget.
struct FValue {
    bool exact = false;
    int value = 0;
    int lower = 0;
    int upper = 0;

    /// value when exact; throws PreconditionError otherwise.
    int require() const;
};

/// Memoized per isomorphism class of H.
FValue f_of_h(const Pattern& pattern, TuranOptions options = {});

/// Maximum independent set; checks |S| >= ceil(n/(2c+1)).
/// Requires 0 <= c <= (n-3)/6 and |E| <= c*n.
std::vector<int> find_independent_set(const Graph& g, Ratio c);

struct Biclique {
    std::vector<int> a;
    std::vector<int> b;
};

/// In a subgraph of K_{m,n} (parts given, n >= m >= 2) with at least m(n-1)
/// edges: floor(m/2) vertices of A and their common neighborhood in B, which
/// has at least floor(n/2) vertices.
Biclique find_biclique(const Graph& g, std::span<const int> part_a, std::span<const int> part_b);

/// An edge uv with d(u) = d(v) = 2 that is the middle edge of an induced P_4.
std::optional<Edge> in_family_F(const Pattern& pattern);

/// a_{m+n} <= a_m + a_n + c for all indices m, n >= t with m+n in range.
/// Indices must be contiguous.
bool check_subadditive(std::span<const std::pair<int, std::int64_t>> seq, double c, double t);

/// Smallest c making check_subadditive true; nullopt when no pair is testable.
std::optional<std::int64_t> min_subadditive_slack(std::span<const std::pair<int, std::int64_t>> seq, double t);

struct PatternProfile {
    int delta_prime = 0;
    bool has_pendant = false;
    std::vector<Graph> peeled_family;
    FValue f;
    std::optional<Edge> family_f_witness;
};

PatternProfile analyze_pattern(const Pattern& pattern, TuranOptions options = {});

struct BoundEntry {
    enum class Side { Lower, Upper };

    Side side = Side::Lower;
    std::string source;
    bool applicable = false;
    std::int64_t value = 0;
    std::string reason;  // why it is inapplicable
};

struct BoundsReport {
    std::int64_t lower = 0;
    std::string lower_source;
    std::int64_t upper = 0;
    std::string upper_source;
    std::vector<BoundEntry> entries;
};

/// Best in-regime lower and upper bounds on rwsat(n, H) with provenance.
BoundsReport paper_bounds(int n, const Pattern& pattern, TuranOptions options = {});

/// True iff the graph is K_r (no isolated vertices); r returned through `r`.
bool is_complete(const Graph& g, int* r = nullptr);

} // namespace rainbow
