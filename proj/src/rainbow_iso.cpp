#include "rainbow/rainbow_iso.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

ColoredGraph::ColoredGraph(Graph g, std::span<const ColorId> colors)
    : g_(std::move(g)), colors_(static_cast<std::size_t>(g_.order() * g_.order()))
{
    const auto edges = g_.edges();
    if (edges.size() != colors.size()) {
        throw PreconditionError("coloring has " + std::to_string(colors.size()) + " entries for " +
                                std::to_string(edges.size()) + " edges");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) set_color(edges[i], EdgeColor::concrete(colors[i]));
}

ColoredGraph ColoredGraph::rainbow(Graph g, std::uint64_t first)
{
    std::vector<ColorId> colors;
    for (std::size_t i = 0; i < static_cast<std::size_t>(g.size()); ++i) colors.push_back({first + i});
    return ColoredGraph(std::move(g), colors);
}

ColoredGraph ColoredGraph::monochromatic(Graph g, ColorId c)
{
    std::vector<ColorId> colors(static_cast<std::size_t>(g.size()), c);
    return ColoredGraph(std::move(g), colors);
}

std::size_t ColoredGraph::slot(int a, int b) const
{
    Edge e = make_edge(a, b);
    return static_cast<std::size_t>(e.u * g_.order() + e.v);
}

EdgeColor ColoredGraph::color(int a, int b) const
{
    if (!g_.has_edge(a, b)) {
        throw PreconditionError("no edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    return colors_[slot(a, b)];
}

void ColoredGraph::set_color(Edge e, EdgeColor c)
{
    if (!g_.has_edge(e.u, e.v)) {
        throw PreconditionError("no edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    colors_[slot(e.u, e.v)] = c;
}

void ColoredGraph::add_edge(Edge e, EdgeColor c)
{
    if (g_.has_edge(e.u, e.v)) {
        throw PreconditionError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " already present");
    }
    g_.add_edge(e);
    colors_[slot(e.u, e.v)] = c;
}

bool ColoredGraph::all_concrete() const
{
    return std::ranges::none_of(g_.edges(), [&](const Edge& e) { return color(e).is_added(); });
}

bool ColoredGraph::is_rainbow() const
{
    std::set<EdgeColor> seen;
    for (const Edge& e : g_.edges()) {
        if (!seen.insert(color(e)).second) return false;
    }
    return true;
}

std::vector<ColorId> ColoredGraph::palette() const
{
    std::set<ColorId> seen;
    for (const Edge& e : g_.edges()) {
        EdgeColor c = color(e);
        if (!c.is_added()) seen.insert(c.color());
    }
    return {seen.begin(), seen.end()};
}

std::vector<ColorId> ColoredGraph::concrete_colors() const
{
    std::vector<ColorId> out;
    for (const Edge& e : g_.edges()) {
        EdgeColor c = color(e);
        if (c.is_added()) throw PreconditionError("edge carries a symbolic added color");
        out.push_back(c.color());
    }
    return out;
}

namespace {

// Backtracking over the non-isolated vertices of H. The first two vertices
// are an edge of H pinned onto e; the rest follow a connectivity-first order.
class ThroughSearch {
public:
    ThroughSearch(const Graph& host, const Pattern& pattern, Edge e, const ColoredGraph* colors)
        : host_(host), h_(pattern.graph()), e_(e), colors_(colors),
          image_(static_cast<std::size_t>(h_.order()), -1)
    {
    }

    // Calls `found` for every complete embedding; stops when it returns true.
    template <typename Found>
    void run(Found&& found)
    {
        if (h_.order() > host_.order() || h_.size() > host_.size()) return;
        if (!host_.has_edge(e_.u, e_.v)) {
            throw PreconditionError("designated edge is not an edge of the host");
        }
        for (const Edge& he : h_.edges()) {
            for (int flip = 0; flip < 2; ++flip) {
                const int a = flip ? he.v : he.u;
                const int b = flip ? he.u : he.v;
                order_ = order_from(a, b);
                std::ranges::fill(image_, -1);
                used_ = bit(e_.u) | bit(e_.v);
                image_[static_cast<std::size_t>(a)] = e_.u;
                image_[static_cast<std::size_t>(b)] = e_.v;
                colors_used_.clear();
                if (colors_) colors_used_.push_back(colors_->color(e_).value);
                if (extend(2, found)) return;
            }
        }
    }

    Embedding snapshot() const
    {
        Embedding out;
        out.vertex_map = image_;
        Bits taken = used_;
        for (std::size_t x = 0; x < out.vertex_map.size(); ++x) {
            if (out.vertex_map[x] < 0) {
                const int spare = __builtin_ctzll(host_.vertex_mask() & ~taken);
                out.vertex_map[x] = spare;
                taken |= bit(spare);
            }
        }
        for (const Edge& he : h_.edges()) {
            out.edges.push_back(make_edge(image_[static_cast<std::size_t>(he.u)], image_[static_cast<std::size_t>(he.v)]));
        }
        std::ranges::sort(out.edges);
        return out;
    }

private:
    std::vector<int> order_from(int a, int b) const
    {
        std::vector<int> order{a, b};
        Bits placed = bit(a) | bit(b);
        Bits remaining = 0;
        for (int v = 0; v < h_.order(); ++v) {
            if (h_.degree(v) > 0 && !((placed >> v) & 1U)) remaining |= bit(v);
        }
        while (remaining) {
            int best = -1;
            int best_links = -1;
            for (Bits r = remaining; r; r &= r - 1) {
                const int v = __builtin_ctzll(r);
                const int links = popcount(h_.neighbors(v) & placed);
                if (links > best_links) {
                    best = v;
                    best_links = links;
                }
            }
            order.push_back(best);
            placed |= bit(best);
            remaining &= ~bit(best);
        }
        return order;
    }

    template <typename Found>
    bool extend(std::size_t depth, Found& found)
    {
        if (depth == order_.size()) return found(*this);
        const int x = order_[depth];
        Bits candidates = host_.vertex_mask() & ~used_;
        for (Bits nb = h_.neighbors(x); nb; nb &= nb - 1) {
            const int y = __builtin_ctzll(nb);
            if (image_[static_cast<std::size_t>(y)] >= 0) candidates &= host_.neighbors(image_[static_cast<std::size_t>(y)]);
        }
        while (candidates) {
            const int c = __builtin_ctzll(candidates);
            candidates &= candidates - 1;
            const std::size_t mark = colors_used_.size();
            if (colors_ && !take_colors(x, c)) {
                colors_used_.resize(mark);
                continue;
            }
            image_[static_cast<std::size_t>(x)] = c;
            used_ |= bit(c);
            if (extend(depth + 1, found)) return true;
            used_ &= ~bit(c);
            image_[static_cast<std::size_t>(x)] = -1;
            colors_used_.resize(mark);
        }
        return false;
    }

    // Records the colors of edges from c to the images of x's mapped
    // neighbors; false if any repeats.
    bool take_colors(int x, int c)
    {
        for (Bits nb = h_.neighbors(x); nb; nb &= nb - 1) {
            const int y = __builtin_ctzll(nb);
            const int img = image_[static_cast<std::size_t>(y)];
            if (img < 0) continue;
            const std::uint64_t col = colors_->color(c, img).value;
            if (std::ranges::find(colors_used_, col) != colors_used_.end()) return false;
            colors_used_.push_back(col);
        }
        return true;
    }

    const Graph& host_;
    const Graph& h_;
    Edge e_;
    const ColoredGraph* colors_;
    std::vector<int> order_;
    std::vector<int> image_;
    std::vector<std::uint64_t> colors_used_;
    Bits used_ = 0;
};

} // namespace

std::vector<Embedding> embeddings_through(const Graph& host, const Pattern& pattern, Edge e)
{
    std::vector<Embedding> out;
    std::set<std::vector<Edge>> images;
    ThroughSearch search(host, pattern, e, nullptr);
    search.run([&](const ThroughSearch& s) {
        Embedding emb = s.snapshot();
        if (images.insert(emb.edges).second) out.push_back(std::move(emb));
        return false;
    });
    return out;
}

std::optional<Embedding> find_rainbow_copy_through(const ColoredGraph& host, const Pattern& pattern, Edge e)
{
    if (!host.all_concrete()) {
        throw PreconditionError("find_rainbow_copy_through needs an all-concrete coloring");
    }
    std::optional<Embedding> result;
    ThroughSearch search(host.graph(), pattern, e, &host);
    search.run([&](const ThroughSearch& s) {
        result = s.snapshot();
        return true;
    });
    return result;
}

} // namespace rainbow
