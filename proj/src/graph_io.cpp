#include "bplab/graph_io.hpp"

#include <cctype>
#include <string>

#include "bplab/errors.hpp"

namespace bplab {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }

    void skip_space() {
        while (!done() && (text[pos] == ' ' || text[pos] == '\t' ||
                           text[pos] == '\r' || text[pos] == '\n'))
            ++pos;
    }

    long read_int(const char* what) {
        skip_space();
        std::size_t start = pos;
        if (done())
            throw ParseError(std::string("expected ") + what + ", got end of input", pos);
        bool neg = false;
        if (text[pos] == '-') {
            neg = true;
            ++pos;
        }
        if (done() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError(std::string("expected ") + what, start);
        long value = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1'000'000'000L)
                throw ParseError(std::string(what) + " out of range", start);
            ++pos;
        }
        if (!done() && !std::isspace(static_cast<unsigned char>(text[pos])))
            throw ParseError(std::string("malformed ") + what, pos);
        return neg ? -value : value;
    }
};

Graph parse_edge_list(std::string_view text) {
    Cursor cur{text};
    long n = cur.read_int("vertex count");
    if (n < 0)
        throw ParseError("vertex count must be nonnegative", 0);
    Graph g(static_cast<int>(n));
    while (true) {
        cur.skip_space();
        if (cur.done())
            break;
        std::size_t at = cur.pos;
        long u = cur.read_int("vertex id");
        long v = cur.read_int("vertex id");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge endpoint out of range", at);
        if (u == v)
            throw ParseError("self-loop", at);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

std::string serialize_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n());
    out.push_back('\n');
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out.push_back(' ');
        out += std::to_string(v);
        out.push_back('\n');
    }
    return out;
}

constexpr char G6_LO = 63;  // '?'
constexpr char G6_HI = 126; // '~'

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    const std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header)
        pos = header.size();
    while (pos < text.size() && text[pos] != '\n' && text[pos] != '\r' &&
           std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos >= text.size())
        throw ParseError("empty graph6 input", pos);
    unsigned char first = static_cast<unsigned char>(text[pos]);
    if (first == G6_HI)
        throw ParseError("graph6 orders above 62 are not supported", pos);
    if (first < G6_LO || first > G6_HI)
        throw ParseError("invalid graph6 order byte", pos);
    int n = first - G6_LO;
    ++pos;
    Graph g(n);
    long long need = static_cast<long long>(n) * (n - 1) / 2;
    int have = 0, buffer = 0, bits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (bits == 0) {
                if (pos >= text.size())
                    throw ParseError("graph6 payload truncated", pos);
                unsigned char c = static_cast<unsigned char>(text[pos]);
                if (c < G6_LO || c > G6_HI)
                    throw ParseError("invalid graph6 payload byte", pos);
                buffer = c - G6_LO;
                bits = 6;
                ++pos;
            }
            --bits;
            if ((buffer >> bits) & 1)
                g.add_edge(row, col);
            ++have;
        }
    }
    (void)need;
    while (pos < text.size()) {
        if (!std::isspace(static_cast<unsigned char>(text[pos])))
            throw ParseError("trailing bytes after graph6 payload", pos);
        ++pos;
    }
    return g;
}

std::string serialize_graph6(const Graph& g) {
    if (g.n() > 62)
        throw TooLarge("graph6 serialization limited to n <= 62");
    std::string out;
    out.push_back(static_cast<char>(G6_LO + g.n()));
    int buffer = 0, bits = 0;
    for (int col = 1; col < g.n(); ++col) {
        for (int row = 0; row < col; ++row) {
            buffer = (buffer << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(G6_LO + buffer));
                buffer = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0)
        out.push_back(static_cast<char>(G6_LO + (buffer << (6 - bits))));
    return out;
}

} // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
    switch (format) {
    case GraphFormat::edge_list:
        return parse_edge_list(text);
    case GraphFormat::graph6:
        return parse_graph6(text);
    }
    throw BadArgs("unknown graph format");
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    switch (format) {
    case GraphFormat::edge_list:
        return serialize_edge_list(g);
    case GraphFormat::graph6:
        return serialize_graph6(g);
    }
    throw BadArgs("unknown graph format");
}

} // namespace bplab
