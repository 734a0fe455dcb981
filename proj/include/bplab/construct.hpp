#ifndef BPLAB_CONSTRUCT_HPP
#define BPLAB_CONSTRUCT_HPP

#include "bplab/bicliques.hpp"
#include "bplab/graph.hpp"
#include "bplab/solver.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bplab {

// Parameters of the pair-family construction: an induced subgraph on k
// vertices that is bipartite between A (2r vertices in r pairs) and
// B = K minus A, with every B-vertex seeing each pair all-or-nothing.
struct FkParams {
    int k = 0;
    int r = 0;          // number of pairs; used when generalized
    double a = 0.0;     // |A| = a*k (strict mode), carried for bound reporting
    double c = 0.0;     // companion constant, carried for bound reporting
    bool generalized = true; // decouple (k, r) from a*k/2 for desk scale
};

// resolved pair count: params.r when generalized, round(a*k/2) otherwise;
// BadArgs unless k >= 2r >= 2
int fk_pair_count(const FkParams& params);

struct FkWitness {
    VertexSet K;
    std::vector<std::array<int, 2>> pairs; // disjoint 2-subsets covering A
    VertexSet B;                           // K minus the union of pairs
};

// structural membership: g[K] has no edge inside A, none inside B, and
// every (pair, beta in B) is all-or-nothing; MalformedWitness when the
// witness is not well-formed over g
bool check_fkprime(const Graph& g, const FkWitness& w);

// quantitative membership on top of check_fkprime: every a in A has
// 20*deg_B(a) >= 3k, and every two pairs have neighborhoods in B with
// symmetric difference |D| satisfying 4*|D| >= k (integer-exact forms of
// the 0.15k and 0.25k thresholds); NotInFkPrime when the structural
// check fails
bool check_fk(const Graph& g, const FkWitness& w);

// the partition the witness induces on all of g: one block (A_i, N_B(A_i))
// per pair with nonempty neighborhood, then stars centered at V minus K in
// ascending order covering every remaining edge; validates by construction
BicliquePartition fk_decomposition(const Graph& g, const FkWitness& w);

// randomized search for a witness: score non-adjacent pairs by twin-set
// size, grow the pair set, then grow B among vertices that are
// all-or-nothing for every chosen pair; seeded restarts, first hit wins.
// nullopt when the restarts exhaust without a hit (not a proof of
// absence); BudgetExhausted when the budget trips first
std::optional<FkWitness> search_fkprime(const Graph& g, const FkParams& params,
                                        std::uint64_t seed,
                                        const SearchBudget& budget = {});

std::string to_json(const FkWitness& w);
FkWitness fk_witness_from_json(const std::string& text);

} // namespace bplab

#endif
