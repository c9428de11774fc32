#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// A color from the naturals; equality is the only structure that matters.
struct ColorId {
    std::uint64_t value = 0;

    auto operator<=>(const ColorId&) const = default;
};

/// Concrete colors sit on base-graph edges. Added(i) is the symbolic color
/// c_i of the i-th added edge: distinct from every other Added(j), and
/// undetermined relative to Concrete colors until an assignment pins it.
struct EdgeColor {
    enum class Kind : std::uint8_t { Concrete, Added };

    Kind kind = Kind::Concrete;
    std::uint64_t value = 0;

    static EdgeColor concrete(ColorId c) { return {Kind::Concrete, c.value}; }
    static EdgeColor added(int step) { return {Kind::Added, static_cast<std::uint64_t>(step)}; }

    bool is_added() const noexcept { return kind == Kind::Added; }
    ColorId color() const noexcept { return {value}; }
    int step() const noexcept { return static_cast<int>(value); }

    auto operator<=>(const EdgeColor&) const = default;
};

/// A graph together with a total edge coloring.
class ColoredGraph {
public:
    ColoredGraph() = default;
    /// `colors` follows the lexicographic edge order of `g`.
    ColoredGraph(Graph g, std::span<const ColorId> colors);

    /// Every edge gets ColorId = first + its lexicographic index.
    static ColoredGraph rainbow(Graph g, std::uint64_t first = 0);
    /// Every edge gets the same color.
    static ColoredGraph monochromatic(Graph g, ColorId c);

    const Graph& graph() const noexcept { return g_; }
    int order() const noexcept { return g_.order(); }

    EdgeColor color(int a, int b) const;
    EdgeColor color(Edge e) const { return color(e.u, e.v); }
    void set_color(Edge e, EdgeColor c);
    void add_edge(Edge e, EdgeColor c);

    bool all_concrete() const;
    /// Pairwise distinct colors, each Added index counting as unique.
    bool is_rainbow() const;
    /// Distinct Concrete colors, ascending.
    std::vector<ColorId> palette() const;
    /// Concrete colors in lexicographic edge order (throws on Added edges).
    std::vector<ColorId> concrete_colors() const;

    friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

private:
    std::size_t slot(int a, int b) const;

    Graph g_;
    std::vector<EdgeColor> colors_;
};

/// Injective vertex map of a pattern into a host together with its edge image.
struct Embedding {
    std::vector<int> vertex_map;
    std::vector<Edge> edges;  // host edges, sorted
};

/// All copies of H in G whose image contains e, one per distinct edge image.
std::vector<Embedding> embeddings_through(const Graph& host, const Pattern& pattern, Edge e);

/// First copy of H through e whose edges carry pairwise distinct colors.
/// Requires every color Concrete.
std::optional<Embedding> find_rainbow_copy_through(const ColoredGraph& host, const Pattern& pattern, Edge e);

} // namespace rainbow
