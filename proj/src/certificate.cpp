#include "rainbow/certificate.hpp"

#include <charconv>
#include <map>
#include <vector>

#include "rainbow/errors.hpp"
#include "rainbow/graph6.hpp"

namespace rainbow {

namespace {

struct Line {
    std::string_view text;
    std::size_t offset;
};

std::vector<Line> split_lines(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        lines.push_back({text.substr(start, end - start), start});
        start = end + 1;
    }
    return lines;
}

// Reads a decimal integer at pos, advancing it.
template <typename Int>
Int read_int(std::string_view s, std::size_t& pos, std::size_t base_offset, const char* what)
{
    Int value{};
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
    if (ec != std::errc{} || ptr == s.data() + pos) {
        throw ParseError(std::string("expected ") + what, base_offset + pos);
    }
    pos = static_cast<std::size_t>(ptr - s.data());
    return value;
}

void expect(std::string_view s, std::size_t& pos, std::string_view token, std::size_t base_offset)
{
    if (s.substr(pos, token.size()) != token) {
        throw ParseError("expected \"" + std::string(token) + "\"", base_offset + pos);
    }
    pos += token.size();
}

std::string edge_text(const Edge& e) { return std::to_string(e.u) + " " + std::to_string(e.v); }

} // namespace

std::string serialize_certificate(const Certificate& cert)
{
    std::string out = encode_graph6(cert.graph) + "\n" + encode_graph6(cert.pattern) + "\n";
    for (const CertificateStep& s : cert.steps) {
        out += edge_text(s.edge);
        if (s.candidate_copies) {
            out += " # copies=" + std::to_string(*s.candidate_copies);
            if (s.witness) {
                out += " witness=";
                for (std::size_t i = 0; i < s.witness->size(); ++i) {
                    if (i) out += ",";
                    out += std::to_string((*s.witness)[i].u) + "-" + std::to_string((*s.witness)[i].v);
                }
            }
        }
        out += "\n";
    }
    return out;
}

Certificate parse_certificate(std::string_view text)
{
    const auto lines = split_lines(text);
    if (lines.size() < 2) throw MalformedCertificate("certificate needs graph and pattern header lines");
    Certificate cert;
    try {
        cert.graph = decode_graph6(lines[0].text);
        cert.pattern = decode_graph6(lines[1].text);
    } catch (const ParseError& e) {
        throw MalformedCertificate(std::string("bad certificate header: ") + e.what());
    }
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const std::string_view s = lines[i].text;
        const std::size_t base = lines[i].offset;
        std::size_t pos = 0;
        CertificateStep step;
        step.edge.u = read_int<int>(s, pos, base, "vertex");
        expect(s, pos, " ", base);
        step.edge.v = read_int<int>(s, pos, base, "vertex");
        if (pos < s.size()) {
            expect(s, pos, " # copies=", base);
            step.candidate_copies = read_int<int>(s, pos, base, "copy count");
            if (pos < s.size()) {
                expect(s, pos, " witness=", base);
                std::vector<Edge> witness;
                for (;;) {
                    Edge e;
                    e.u = read_int<int>(s, pos, base, "vertex");
                    expect(s, pos, "-", base);
                    e.v = read_int<int>(s, pos, base, "vertex");
                    witness.push_back(e);
                    if (pos == s.size()) break;
                    expect(s, pos, ",", base);
                }
                step.witness = std::move(witness);
            }
        }
        cert.steps.push_back(std::move(step));
    }
    return cert;
}

std::string write_color_map(const ColoredGraph& g)
{
    std::string out;
    for (const Edge& e : g.graph().edges()) {
        const EdgeColor c = g.color(e);
        if (c.is_added()) throw PreconditionError("color maps hold concrete colors only");
        out += edge_text(e) + ": " + std::to_string(c.value) + "\n";
    }
    return out;
}

ColoredGraph parse_color_map(const Graph& g, std::string_view text)
{
    std::map<Edge, ColorId> colors;
    for (const Line& line : split_lines(text)) {
        if (line.text.empty()) continue;
        std::size_t pos = 0;
        const int a = read_int<int>(line.text, pos, line.offset, "vertex");
        expect(line.text, pos, " ", line.offset);
        const int b = read_int<int>(line.text, pos, line.offset, "vertex");
        expect(line.text, pos, ": ", line.offset);
        const auto c = read_int<std::uint64_t>(line.text, pos, line.offset, "color id");
        if (pos != line.text.size()) throw ParseError("trailing characters", line.offset + pos);
        if (a < 0 || b < 0 || a >= g.order() || b >= g.order() || a == b || !g.has_edge(a, b)) {
            throw ParseError("colored pair is not an edge of the graph", line.offset);
        }
        if (!colors.emplace(make_edge(a, b), ColorId{c}).second) {
            throw ParseError("edge colored twice", line.offset);
        }
    }
    std::vector<ColorId> ordered;
    for (const Edge& e : g.edges()) {
        auto it = colors.find(e);
        if (it == colors.end()) {
            throw ParseError("edge " + edge_text(e) + " has no color", text.size());
        }
        ordered.push_back(it->second);
    }
    return ColoredGraph(g, ordered);
}

} // namespace rainbow
