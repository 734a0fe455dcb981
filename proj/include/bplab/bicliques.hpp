#ifndef BPLAB_BICLIQUES_HPP
#define BPLAB_BICLIQUES_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bplab/graph.hpp"

namespace bplab {

// complete bipartite block given by its two disjoint nonempty sides
struct Biclique {
    VertexSet part1;
    VertexSet part2;
};

// ordered blocks meant to partition the edge set of host exactly
struct BicliquePartition {
    Graph host;
    std::vector<Biclique> blocks;
};

struct ValidityReport {
    std::vector<std::pair<int, int>> non_edges;      // claimed pairs absent from host
    std::vector<std::pair<int, int>> doubly_covered; // edges claimed by >= 2 blocks
    std::vector<std::pair<int, int>> uncovered;      // host edges claimed by no block
    std::vector<int> malformed_blocks;               // empty or overlapping sides

    bool valid() const {
        return non_edges.empty() && doubly_covered.empty() && uncovered.empty() &&
               malformed_blocks.empty();
    }
};

// induced subgraph of order k on k+r vertices whose edges split into
// at most r blocks, none of them a star
struct SpecialWitness {
    int k = 0;
    int r = 0;
    VertexSet vertices;
    std::vector<Biclique> blocks; // original vertex ids of the host graph
};

ValidityReport validate_partition(const BicliquePartition& p);

// a star has a side of size one (its center)
bool is_star(const Biclique& b);

// the side(s) of minimum size; two entries when the sides tie
std::vector<VertexSet> base_sets(const Biclique& b);

// stars centered at V minus the independent set, centers ascending;
// the i-th center covers its edges into the set and to later centers
BicliquePartition star_cover(const Graph& g, const VertexSet& independent);

// delete centers of star blocks round by round (ascending center id within
// a round) until only non-star blocks survive; the survivors witness a
// special subgraph of order k = n - |blocks|
SpecialWitness star_peel(const BicliquePartition& p);

// invariants of a SpecialWitness against its host graph
bool witness_ok(const Graph& g, const SpecialWitness& w);

std::string to_json(const BicliquePartition& p);
std::string to_json(const SpecialWitness& w);
SpecialWitness witness_from_json(std::string_view text);

} // namespace bplab

#endif
