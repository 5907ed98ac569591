#include "mixedmoore/codec.hpp"

#include "mixedmoore/error.hpp"

#include <sstream>
#include <vector>

namespace mixedmoore::codec {

namespace {

constexpr std::string_view header = ">>digraph6<<";
constexpr int max_order = 62;

} // namespace

MixedGraph decode_digraph6(std::string_view text)
{
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.starts_with(header))
        text.remove_prefix(header.size());
    if (text.starts_with('&'))
        text.remove_prefix(1);
    if (text.empty())
        throw Error(ErrorKind::BadLength, "missing size field");
    for (char ch : text)
        if (ch < 63 || ch > 126)
            throw Error(ErrorKind::BadCharacter, "character code " + std::to_string(static_cast<int>(static_cast<unsigned char>(ch))));
    const int n = text[0] - 63;
    if (n > max_order)
        throw Error(ErrorKind::SizeOverflow, "multi-byte size fields are not supported");
    const std::size_t bits = static_cast<std::size_t>(n) * n;
    const std::size_t expected = (bits + 5) / 6;
    if (text.size() - 1 != expected)
        throw Error(ErrorKind::BadLength, "payload has " + std::to_string(text.size() - 1) + " characters, expected " + std::to_string(expected));

    std::vector<std::uint8_t> adj(bits, 0);
    for (std::size_t i = 0; i < bits; ++i) {
        const int value = text[1 + i / 6] - 63;
        adj[i] = (value >> (5 - i % 6)) & 1;
    }
    std::vector<Edge> edges;
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!adj[i * n + j])
                continue;
            if (i != j && adj[j * n + i]) {
                if (i < j)
                    edges.emplace_back(i, j);
            } else {
                arcs.push_back({i, j});
            }
        }
    }
    return MixedGraph::build(n, std::move(edges), std::move(arcs));
}

std::string encode_digraph6(const MixedGraph& g, bool emit_amp)
{
    const int n = g.order();
    if (n > max_order)
        throw Error(ErrorKind::SizeOverflow, "order " + std::to_string(n) + " needs a multi-byte size field");
    if (!g.edges().empty()) {
        // Digons and arcs parallel to edges would be read back as edges.
        for (const auto& a : g.arcs()) {
            if (a.from != a.to && (g.has_arc(a.to, a.from) || g.has_edge(a.from, a.to)))
                throw Error(ErrorKind::HasEdgeDigonAmbiguity,
                    "pair {" + std::to_string(a.from) + "," + std::to_string(a.to) + "} cannot be told apart from an edge");
        }
    }
    const std::size_t bits = static_cast<std::size_t>(n) * n;
    std::vector<std::uint8_t> adj(bits, 0);
    for (const auto& e : g.edges()) {
        adj[e.u * n + e.v] = 1;
        adj[e.v * n + e.u] = 1;
    }
    for (const auto& a : g.arcs())
        adj[a.from * n + a.to] = 1;

    std::string out;
    if (emit_amp)
        out += '&';
    out += static_cast<char>(63 + n);
    for (std::size_t i = 0; i < bits; i += 6) {
        int value = 0;
        for (std::size_t b = 0; b < 6; ++b)
            value = (value << 1) | (i + b < bits ? adj[i + b] : 0);
        out += static_cast<char>(63 + value);
    }
    return out;
}

MixedGraph read_text(std::istream& in)
{
    int n = -1;
    std::vector<Edge> edges;
    std::vector<Arc> arcs;
    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key))
            continue;
        if (key == "mixed") {
            if (n >= 0)
                fail("duplicate header");
            if (!(ls >> n) || n < 0)
                fail("bad vertex count");
        } else if (key == "e" || key == "a") {
            if (n < 0)
                fail("element before 'mixed <n>' header");
            int u, v;
            if (!(ls >> u >> v))
                fail("expected two vertex indices");
            if (key == "e")
                edges.emplace_back(u, v);
            else
                arcs.push_back({u, v});
        } else {
            fail("unknown keyword '" + key + "'");
        }
        std::string extra;
        if (ls >> extra)
            fail("trailing token '" + extra + "'");
    }
    if (n < 0)
        throw Error(ErrorKind::ParseError, "missing 'mixed <n>' header");
    return MixedGraph::build(n, std::move(edges), std::move(arcs));
}

MixedGraph parse_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return read_text(in);
}

void write_text(std::ostream& out, const MixedGraph& g)
{
    out << "mixed " << g.order() << '\n';
    for (const auto& e : g.edges())
        out << "e " << e.u << ' ' << e.v << '\n';
    for (const auto& a : g.arcs())
        out << "a " << a.from << ' ' << a.to << '\n';
}

std::string to_text(const MixedGraph& g)
{
    std::ostringstream out;
    write_text(out, g);
    return out.str();
}

} // namespace mixedmoore::codec
