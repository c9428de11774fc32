#pragma once

#include <cstddef>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

struct CanonicalForm {
    Graph graph;
    /// perm[input label] = canonical label.
    std::vector<int> perm;
};

/// Canonical labeling by individualization-refinement with twin and
/// automorphism pruning. Throws SizeExceeded when order > bound.
CanonicalForm canonical_form(const Graph& g, int bound = kDefaultSmallGraphBound);

/// Reference labeling: lexicographically largest upper triangle over all
/// degree-sorted permutations. Exponential; kept as an independent check.
/// The representative differs from canonical_form's, the classes do not.
CanonicalForm canonical_form_exhaustive(const Graph& g, int bound = 9);

struct GraphHash {
    std::size_t operator()(const Graph& g) const noexcept;
};

} // namespace rainbow
