#include "bplab/graph.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

#include "bplab/errors.hpp"
#include "bplab/rng.hpp"

namespace bplab {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0)
        throw BadArgs("graph order must be nonnegative");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw BadArgs("vertex " + std::to_string(v) + " out of range [0," +
                      std::to_string(n_) + ")");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        return false;
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw BadArgs("self-loop at vertex " + std::to_string(u));
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ULL << (v % 64);
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ULL << (u % 64);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        return;
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(1ULL << (v % 64));
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(1ULL << (u % 64));
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int w = 0; w < words_; ++w)
        d += std::popcount(bits_[static_cast<std::size_t>(v) * words_ + w]);
    return d;
}

long long Graph::edge_count() const {
    long long total = 0;
    for (int v = 0; v < n_; ++v)
        total += degree(v);
    return total / 2;
}

std::uint64_t Graph::row64(int v) const {
    check_vertex(v);
    if (n_ > 64)
        throw TooLarge("row64 requires n <= 64, have n = " + std::to_string(n_));
    return bits_[static_cast<std::size_t>(v) * words_];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v))
                out.emplace_back(u, v);
    return out;
}

Graph sample_gnp(const GnpSpec& spec) {
    if (spec.p < 0.0 || spec.p > 1.0)
        throw BadArgs("edge probability must lie in [0,1]");
    Graph g(spec.n);
    std::mt19937_64 gen(spec.seed);
    for (int u = 0; u < spec.n; ++u)
        for (int v = u + 1; v < spec.n; ++v)
            if (uniform53(gen) < spec.p)
                g.add_edge(u, v);
    return g;
}

Graph complement(const Graph& g) {
    Graph c(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v))
                c.add_edge(u, v);
    return c;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    VertexSet sorted = s;
    std::sort(sorted.begin(), sorted.end());
    for (int v : sorted)
        if (v < 0 || v >= g.n())
            throw BadArgs("induced_subgraph: vertex " + std::to_string(v) +
                          " out of range");
    Graph h(static_cast<int>(sorted.size()));
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (g.has_edge(sorted[i], sorted[j]))
                h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

} // namespace bplab
