#include "rainbow/graph6.hpp"

#include <algorithm>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void put_order(std::string& out, int n)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
        return;
    }
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
}

int sextet(std::string_view text, std::size_t pos)
{
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range [63,126]", pos);
    return c - 63;
}

} // namespace

std::string encode_graph6(const Graph& g)
{
    std::string out;
    put_order(out, g.order());
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < g.order(); ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph decode_graph6(std::string_view text)
{
    std::size_t pos = 0;
    if (text.starts_with(kHeader)) pos = kHeader.size();
    std::size_t end = text.size();
    if (end > pos && text[end - 1] == '\n') --end;
    if (pos >= end) throw ParseError("empty graph6 string", pos);

    int n = 0;
    if (static_cast<unsigned char>(text[pos]) == 126) {
        if (pos + 1 < end && static_cast<unsigned char>(text[pos + 1]) == 126) {
            throw ParseError("graph6 orders above 258047 are not supported", pos);
        }
        if (pos + 4 > end) throw ParseError("truncated graph6 order field", end);
        n = (sextet(text, pos + 1) << 12) | (sextet(text, pos + 2) << 6) | sextet(text, pos + 3);
        pos += 4;
    } else {
        n = sextet(text, pos);
        pos += 1;
    }
    if (n > kMaxVertices) {
        throw ParseError("graph order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices), pos - 1);
    }

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (end - pos != bytes) {
        throw ParseError("graph6 body has " + std::to_string(end - pos) + " bytes, expected " +
                             std::to_string(bytes),
                         pos + std::min(end - pos, bytes));
    }

    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const std::size_t at = pos + k / 6;
            if ((sextet(text, at) >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    for (std::size_t at = pos; at < end; ++at) sextet(text, at);
    if (bits % 6 != 0) {
        const int pad_mask = (1 << (6 - bits % 6)) - 1;
        if (sextet(text, end - 1) & pad_mask) throw ParseError("nonzero graph6 padding bits", end - 1);
    }
    return g;
}

} // namespace rainbow
