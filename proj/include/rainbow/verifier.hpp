#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/rainbow_iso.hpp"

namespace rainbow {

/// A base graph with Concrete colors plus an ordered list of added edges; the
/// i-th added edge (1-based) carries the symbolic color Added(i).
class ColoredState {
public:
    ColoredState() = default;
    explicit ColoredState(ColoredGraph base, std::vector<Edge> added = {});

    const ColoredGraph& base() const noexcept { return base_; }
    const std::vector<Edge>& added() const noexcept { return added_; }
    /// Base plus added edges, the latter colored Added(1..i).
    const ColoredGraph& current() const noexcept { return current_; }

    /// Appends e as Added(i+1).
    void push(Edge e);

private:
    ColoredGraph base_;
    std::vector<Edge> added_;
    ColoredGraph current_;
};

/// Injective partial pinning of Added indices to Concrete colors. Unpinned
/// indices stand for fresh colors, distinct from everything else.
struct Assignment {
    std::map<int, ColorId> pins;

    bool injective() const;
    friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Concrete coloring of state + e (e as Added(i+1)) under an assignment.
ColoredGraph realize(const ColoredState& state, Edge e, const Assignment& assignment);

struct AddableResult {
    bool verdict = false;
    /// Present iff verdict is false; validated against find_rainbow_copy_through.
    std::optional<Assignment> breaking;
    /// Copies of H through e whose Concrete edges are pairwise distinct.
    int candidate_copies = 0;
    /// A copy made only of added edges, when one exists.
    std::optional<std::vector<Edge>> symbolic_witness;
};

/// Decides whether e creates a rainbow copy of H through it under every
/// pairwise distinct coloring of the added edges plus e.
AddableResult addable(const ColoredState& state, Edge e, const Pattern& pattern);

/// Number of canonical assignments of `symbols` added colors over a palette
/// of `base_colors`: sum_t C(symbols, t) * base!/(base-t)!.
std::uint64_t canonical_assignment_count(int symbols, int base_colors);

/// Independent check of addable: tries every canonical assignment.
/// Throws BudgetExceeded when the count is above `budget`.
bool naive_addable_oracle(const ColoredState& state, Edge e, const Pattern& pattern,
                          std::uint64_t budget = 10'000'000);

struct CertificateStep {
    Edge edge;
    /// Not recorded when parsed from a bare "u v" line.
    std::optional<int> candidate_copies;
    std::optional<std::vector<Edge>> witness;

    friend bool operator==(const CertificateStep&, const CertificateStep&) = default;
};

/// An addition ordering of every non-edge of `graph`, for pattern `pattern`.
struct Certificate {
    Graph graph;
    Graph pattern;
    std::vector<CertificateStep> steps;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct ClosureOptions {
    /// Workers for testing candidates of a round; 1 runs the serial path.
    int jobs = 1;
};

struct ClosureResult {
    bool saturated = false;
    Certificate certificate;
    ColoredState final_state;
};

/// Adds currently-addable non-edges until none is left. Each round tests all
/// remaining non-edges against the round's starting state and commits the
/// addable ones in lexicographic order, so the ordering does not depend on
/// the worker count. Saturated iff the final graph is complete.
ClosureResult greedy_closure(const ColoredGraph& g, const Pattern& pattern, ClosureOptions options = {});

struct VerifyResult {
    bool accepted = false;
    /// 0-based index of the first rejected step.
    std::optional<std::size_t> failed_step;
    std::optional<Assignment> breaking;
};

/// Replays a certificate through addable. Throws MalformedCertificate when
/// the ordering is not a permutation of the non-edges of g.
VerifyResult verify_certificate(const ColoredGraph& g, const Pattern& pattern, const Certificate& cert);

/// Same graph, every edge recolored with ColorId = its lexicographic index.
ColoredGraph rainbow_recolor(const ColoredGraph& g);

enum class GadgetPalette {
    /// Inner clique and the K_{2,f} between {u,v} and the rest use disjoint colors.
    Disjoint,
    /// The K_{2,f} reuses inner-clique colors wherever it can.
    Shared,
};

/// Builds K_{f_extra+2} colored as in the augmentation gadget and checks that
/// every canonical color of uv (each color present, plus a fresh one) leaves
/// a rainbow copy of H through uv. Requires f_extra >= f(H).
bool check_gadget(const Pattern& pattern, int f_extra, GadgetPalette palette = GadgetPalette::Disjoint);

} // namespace rainbow
