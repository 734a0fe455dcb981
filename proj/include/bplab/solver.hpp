#ifndef BPLAB_SOLVER_HPP
#define BPLAB_SOLVER_HPP

#include <cstdint>
#include <optional>

#include "bplab/bicliques.hpp"
#include "bplab/graph.hpp"

namespace bplab {

struct SearchBudget {
    long long max_nodes = 200'000'000;
    double max_seconds = 600.0;
};

struct BpResult {
    int value = 0;
    bool optimal = false;
    long long nodes = 0;
    BicliquePartition witness;
};

// exact maximum independent set, branch and bound on the complement clique
// problem with greedy coloring bounds; n <= 64
VertexSet max_independent_set(const Graph& g);

// max(#positive, #negative) adjacency eigenvalues, tolerance 1e-9;
// a lower bound on the number of blocks in any biclique partition
int eigen_lower_bound(const Graph& g);

// minimum biclique partition size with a certifying partition; branches on
// the lexicographically least uncovered edge, candidate blocks largest
// first, pruned by the spectral bound of the uncovered subgraph
BpResult exact_bp(const Graph& g, const SearchBudget& budget = {});

// least r <= r_max such that E(h) partitions into r bicliques with both
// sides of size >= 2, or nullopt when no such partition exists
std::optional<int> min_nonstar_partition(const Graph& h, int r_max);

// search over r = 0,1,... and (k+r)-subsets for an induced subgraph whose
// edges split into at most r non-star blocks; exhaustive for small n,
// otherwise BudgetExhausted is thrown before absence can be claimed
std::optional<SpecialWitness> has_special_subgraph(const Graph& g, int k,
                                                   const SearchBudget& budget = {});

// size of the largest induced matching in complement(g); exact mode
// (n <= 20) solves it by branch and bound, otherwise a greedy lower bound
int induced_matching_complement(const Graph& g, bool exact);

} // namespace bplab

#endif
