#ifndef BPLAB_GRAPH_HPP
#define BPLAB_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace bplab {

// vertices of a host graph, kept sorted ascending
using VertexSet = std::vector<int>;

// Simple undirected graph: symmetric, irreflexive, dense bitset rows.
// add_edge/remove_edge are for construction and working copies; shared
// graphs are treated as immutable.
// Solver-grade paths additionally require n <= 64 so a row fits one word.
class Graph {
  public:
    Graph() : n_(0), words_(0) {}
    explicit Graph(int n);

    int n() const { return n_; }
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    int degree(int v) const;
    long long edge_count() const;

    // adjacency row as a single word, valid only for n <= 64
    std::uint64_t row64(int v) const;

    // edges in lexicographic (u,v) order, u < v
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

  private:
    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;

    void check_vertex(int v) const;
};

struct GnpSpec {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

// one uniform draw per unordered pair, pairs in lexicographic order
Graph sample_gnp(const GnpSpec& spec);

Graph complement(const Graph& g);

// relabels s (taken in ascending order) to 0..|s|-1
Graph induced_subgraph(const Graph& g, const VertexSet& s);

} // namespace bplab

#endif
