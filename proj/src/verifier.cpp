#include "rainbow/verifier.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/parallel.hpp"

namespace rainbow {

ColoredState::ColoredState(ColoredGraph base, std::vector<Edge> added)
    : base_(std::move(base)), current_(base_)
{
    if (!base_.all_concrete()) throw PreconditionError("base coloring must be concrete");
    for (const Edge& e : added) push(e);
}

void ColoredState::push(Edge e)
{
    e = make_edge(e.u, e.v);
    if (current_.graph().has_edge(e.u, e.v)) {
        throw PreconditionError("added edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                " is already present");
    }
    added_.push_back(e);
    current_.add_edge(e, EdgeColor::added(static_cast<int>(added_.size())));
}

bool Assignment::injective() const
{
    std::set<ColorId> seen;
    for (const auto& [step, color] : pins) {
        if (!seen.insert(color).second) return false;
    }
    return true;
}

ColoredGraph realize(const ColoredState& state, Edge e, const Assignment& assignment)
{
    ColoredGraph out = state.current();
    out.add_edge(make_edge(e.u, e.v), EdgeColor::added(static_cast<int>(state.added().size()) + 1));
    const auto palette = state.base().palette();
    const std::uint64_t fresh_base = palette.empty() ? 1 : palette.back().value + 1;
    for (const Edge& edge : out.graph().edges()) {
        EdgeColor c = out.color(edge);
        if (!c.is_added()) continue;
        auto pin = assignment.pins.find(c.step());
        out.set_color(edge, EdgeColor::concrete(pin != assignment.pins.end()
                                                    ? pin->second
                                                    : ColorId{fresh_base + static_cast<std::uint64_t>(c.step())}));
    }
    return out;
}

namespace {

// One surviving candidate copy: its added steps and its (pairwise distinct)
// concrete colors.
struct Copy {
    std::vector<int> steps;
    std::vector<std::uint64_t> colors;
};

// Searches for an injective pinning step -> color that hits every copy,
// i.e. pins one of its steps to one of its colors.
class KillSearch {
public:
    explicit KillSearch(std::vector<Copy> copies) : copies_(std::move(copies))
    {
        int max_step = 0;
        for (const Copy& c : copies_)
            for (int s : c.steps) max_step = std::max(max_step, s);
        pin_.assign(static_cast<std::size_t>(max_step) + 1, kUnpinned);
    }

    std::optional<Assignment> solve()
    {
        if (!descend()) return std::nullopt;
        Assignment a;
        for (std::size_t s = 0; s < pin_.size(); ++s) {
            if (pin_[s] != kUnpinned) a.pins[static_cast<int>(s)] = ColorId{pin_[s]};
        }
        return a;
    }

private:
    static constexpr std::uint64_t kUnpinned = ~std::uint64_t{0};

    bool killed(const Copy& c) const
    {
        for (int s : c.steps) {
            const std::uint64_t p = pin_[static_cast<std::size_t>(s)];
            if (p != kUnpinned && std::ranges::find(c.colors, p) != c.colors.end()) return true;
        }
        return false;
    }

    bool color_taken(std::uint64_t col) const { return std::ranges::find(pin_, col) != pin_.end(); }

    int open_options(const Copy& c) const
    {
        int count = 0;
        for (int s : c.steps) {
            if (pin_[static_cast<std::size_t>(s)] != kUnpinned) continue;
            for (std::uint64_t col : c.colors)
                if (!color_taken(col)) ++count;
        }
        return count;
    }

    bool descend()
    {
        const Copy* pick = nullptr;
        int fewest = 0;
        for (const Copy& c : copies_) {
            if (killed(c)) continue;
            const int k = open_options(c);
            if (k == 0) return false;
            if (!pick || k < fewest) {
                pick = &c;
                fewest = k;
            }
        }
        if (!pick) return true;
        for (int s : pick->steps) {
            if (pin_[static_cast<std::size_t>(s)] != kUnpinned) continue;
            for (std::uint64_t col : pick->colors) {
                if (color_taken(col)) continue;
                pin_[static_cast<std::size_t>(s)] = col;
                if (descend()) return true;
                pin_[static_cast<std::size_t>(s)] = kUnpinned;
            }
        }
        return false;
    }

    std::vector<Copy> copies_;
    std::vector<std::uint64_t> pin_;
};

} // namespace

AddableResult addable(const ColoredState& state, Edge e, const Pattern& pattern)
{
    e = make_edge(e.u, e.v);
    if (state.current().graph().has_edge(e.u, e.v)) {
        throw PreconditionError("candidate " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                " is already an edge");
    }
    ColoredGraph grown = state.current();
    const int step = static_cast<int>(state.added().size()) + 1;
    grown.add_edge(e, EdgeColor::added(step));

    AddableResult result;
    std::vector<Copy> copies;
    for (const Embedding& emb : embeddings_through(grown.graph(), pattern, e)) {
        Copy copy;
        bool repeated = false;
        for (const Edge& edge : emb.edges) {
            EdgeColor c = grown.color(edge);
            if (c.is_added()) {
                copy.steps.push_back(c.step());
            } else if (std::ranges::find(copy.colors, c.value) != copy.colors.end()) {
                repeated = true;
                break;
            } else {
                copy.colors.push_back(c.value);
            }
        }
        if (repeated) continue;
        ++result.candidate_copies;
        if (copy.colors.empty() && !result.symbolic_witness) result.symbolic_witness = emb.edges;
        copies.push_back(std::move(copy));
    }

    if (result.symbolic_witness) {
        result.verdict = true;
        return result;
    }
    auto kill = KillSearch(std::move(copies)).solve();
    if (!kill) {
        result.verdict = true;
        return result;
    }
    if (find_rainbow_copy_through(realize(state, e, *kill), pattern, e)) {
        throw std::logic_error("breaking assignment failed validation");
    }
    result.breaking = std::move(kill);
    return result;
}

std::uint64_t canonical_assignment_count(int symbols, int base_colors)
{
    // sum over t of C(symbols, t) * falling(base_colors, t), saturating.
    constexpr std::uint64_t kCap = ~std::uint64_t{0};
    std::uint64_t total = 0;
    std::uint64_t binom = 1;
    std::uint64_t falling = 1;
    for (int t = 0; t <= std::min(symbols, base_colors); ++t) {
        if (t > 0) {
            binom = binom * static_cast<std::uint64_t>(symbols - t + 1) / static_cast<std::uint64_t>(t);
            const auto factor = static_cast<std::uint64_t>(base_colors - t + 1);
            if (falling > kCap / factor) return kCap;
            falling *= factor;
        }
        if (binom != 0 && falling > kCap / binom) return kCap;
        const std::uint64_t term = binom * falling;
        if (total > kCap - term) return kCap;
        total += term;
    }
    return total;
}

bool naive_addable_oracle(const ColoredState& state, Edge e, const Pattern& pattern, std::uint64_t budget)
{
    const int symbols = static_cast<int>(state.added().size()) + 1;
    const auto palette = state.base().palette();
    const std::uint64_t count = canonical_assignment_count(symbols, static_cast<int>(palette.size()));
    if (count > budget) {
        throw BudgetExceeded("naive oracle needs " + std::to_string(count) + " assignments");
    }
    Assignment current;
    std::vector<bool> taken(palette.size(), false);
    // Step s is either fresh or pinned to an untaken palette color.
    auto all_survive = [&](auto&& self, int s) -> bool {
        if (s > symbols) return find_rainbow_copy_through(realize(state, e, current), pattern, e).has_value();
        if (!self(self, s + 1)) return false;
        for (std::size_t c = 0; c < palette.size(); ++c) {
            if (taken[c]) continue;
            taken[c] = true;
            current.pins[s] = palette[c];
            const bool ok = self(self, s + 1);
            current.pins.erase(s);
            taken[c] = false;
            if (!ok) return false;
        }
        return true;
    };
    return all_survive(all_survive, 1);
}

ClosureResult greedy_closure(const ColoredGraph& g, const Pattern& pattern, ClosureOptions options)
{
    ClosureResult out;
    out.final_state = ColoredState(g);
    out.certificate.graph = g.graph();
    out.certificate.pattern = pattern.graph();
    std::vector<Edge> remaining = g.graph().non_edges();
    while (!remaining.empty()) {
        std::vector<char> ok(remaining.size(), 0);
        const ColoredState& snapshot = out.final_state;
        parallel_for(remaining.size(), options.jobs, [&](std::size_t i) {
            ok[i] = addable(snapshot, remaining[i], pattern).verdict ? 1 : 0;
        });
        std::vector<Edge> next;
        bool progressed = false;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            if (!ok[i]) {
                next.push_back(remaining[i]);
                continue;
            }
            // Monotonicity keeps it addable after this round's earlier commits;
            // re-running records the step as a replay will see it.
            AddableResult step = addable(out.final_state, remaining[i], pattern);
            if (!step.verdict) throw std::logic_error("addability not monotone under extension");
            out.certificate.steps.push_back({remaining[i], step.candidate_copies, step.symbolic_witness});
            out.final_state.push(remaining[i]);
            progressed = true;
        }
        remaining = std::move(next);
        if (!progressed) break;
    }
    out.saturated = remaining.empty();
    return out;
}

VerifyResult verify_certificate(const ColoredGraph& g, const Pattern& pattern, const Certificate& cert)
{
    if (cert.graph != g.graph()) throw MalformedCertificate("certificate graph does not match the colored graph");
    if (cert.pattern != pattern.graph()) throw MalformedCertificate("certificate pattern does not match");
    std::vector<Edge> listed;
    for (const CertificateStep& s : cert.steps) {
        Edge e = s.edge;
        if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order()) {
            throw MalformedCertificate("step lists an invalid vertex pair");
        }
        e = make_edge(e.u, e.v);
        if (g.graph().has_edge(e.u, e.v)) {
            throw MalformedCertificate("step " + std::to_string(e.u) + " " + std::to_string(e.v) +
                                       " overlaps an existing edge");
        }
        listed.push_back(e);
    }
    std::ranges::sort(listed);
    if (std::ranges::adjacent_find(listed) != listed.end()) throw MalformedCertificate("ordering repeats a non-edge");
    if (listed != g.graph().non_edges()) throw MalformedCertificate("ordering does not cover every non-edge");

    VerifyResult out;
    ColoredState state(g);
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        AddableResult r = addable(state, cert.steps[i].edge, pattern);
        if (!r.verdict) {
            out.failed_step = i;
            out.breaking = std::move(r.breaking);
            return out;
        }
        state.push(cert.steps[i].edge);
    }
    out.accepted = true;
    return out;
}

ColoredGraph rainbow_recolor(const ColoredGraph& g)
{
    return ColoredGraph::rainbow(g.graph(), 0);
}

bool check_gadget(const Pattern& pattern, int f_extra, GadgetPalette palette)
{
    const FValue f = f_of_h(pattern);
    const int required = f.exact ? f.value : 5 * pattern.order();
    if (f_extra < required) {
        throw PreconditionError("gadget size " + std::to_string(f_extra) + " is below f(H) = " +
                                std::to_string(required));
    }
    const int order = f_extra + 2;
    if (order > kMaxVertices) throw SizeExceeded("gadget order exceeds " + std::to_string(kMaxVertices));
    const int u = 0;
    const int v = 1;
    Graph f_graph = complete_graph(order);
    f_graph.remove_edge(u, v);

    std::vector<ColorId> colors;
    std::uint64_t next = 0;
    std::vector<ColorId> inner;
    for (const Edge& e : f_graph.edges()) {
        if (e.u > v) inner.push_back({next++});
    }
    std::size_t reuse = 0;
    std::size_t inner_at = 0;
    for (const Edge& e : f_graph.edges()) {
        if (e.u > v) {
            colors.push_back(inner[inner_at++]);
        } else if (palette == GadgetPalette::Shared && reuse < inner.size()) {
            colors.push_back(inner[reuse++]);
        } else {
            colors.push_back({next++});
        }
    }
    const ColoredGraph base(f_graph, colors);

    std::vector<ColorId> options = base.palette();
    options.push_back({next});
    const Edge uv{u, v};
    for (ColorId c : options) {
        ColoredGraph trial = base;
        trial.add_edge(uv, EdgeColor::concrete(c));
        if (!find_rainbow_copy_through(trial, pattern, uv)) return false;
    }
    return true;
}

} // namespace rainbow
