#ifndef BPLAB_BKR_HPP
#define BPLAB_BKR_HPP

#include <cstdint>
#include <vector>

namespace bplab::bkr {

// Finite product space S^d with independent per-coordinate distributions.
// Outcomes are tuples in S^d, enumerated in lexicographic (mixed-radix,
// coordinate 0 most significant) order; events are bitsets over that
// enumeration. Everything here is exhaustive by design.
class ProductSpace {
public:
    // weights[i][s] = probability of symbol s at coordinate i
    ProductSpace(int alphabet_size, int d, std::vector<std::vector<double>> weights);

    // uniform weights at every coordinate
    static ProductSpace uniform(int alphabet_size, int d);

    int alphabet() const { return s_; }
    int dims() const { return d_; }
    long long outcome_count() const { return total_; }

    long long index_of(const std::vector<int>& omega) const;
    std::vector<int> outcome_at(long long index) const;
    double outcome_prob(const std::vector<int>& omega) const;

private:
    int s_;
    int d_;
    long long total_;
    std::vector<std::vector<double>> weights_;
};

class Event {
public:
    Event() = default;
    explicit Event(long long outcome_count);

    bool contains(long long index) const {
        return (bits_[static_cast<std::size_t>(index >> 6)] >>
                (static_cast<unsigned>(index) & 63u)) & 1u;
    }
    void insert(long long index) {
        bits_[static_cast<std::size_t>(index >> 6)] |=
            std::uint64_t{1} << (static_cast<unsigned>(index) & 63u);
    }
    long long size() const;
    long long universe() const { return count_; }

    Event intersect(const Event& other) const;
    Event unite(const Event& other) const;
    bool subset_of(const Event& other) const;
    bool operator==(const Event& other) const = default;

private:
    long long count_ = 0;
    std::vector<std::uint64_t> bits_;
};

// all outcomes of the whole space / none
Event full_event(const ProductSpace& space);
Event empty_event(const ProductSpace& space);

// sum of outcome probabilities over the event
double probability(const ProductSpace& space, const Event& e);

// coordinates are 0-based subsets of {0..d-1} throughout

// all outcomes agreeing with omega on every coordinate in k
Event cylinder(const ProductSpace& space, const std::vector<int>& omega,
               const std::vector<int>& k);

// {omega in a : cylinder(omega, j) is contained in a}: the outcomes that
// make it into a on the strength of their j-coordinates alone
Event entry_set(const ProductSpace& space, const Event& a,
                const std::vector<int>& j);

// disjoint occurrence of two events: outcomes omega admitting a split
// K, K^c with cylinder(omega,K) inside a and cylinder(omega,K^c) inside b;
// computed by scanning all 2^d index sets per outcome
Event box2(const ProductSpace& space, const Event& a, const Event& b);

// r-event generalization: union over ordered tuples of pairwise-disjoint
// index sets (J_1..J_r) of the intersection of entry sets [A_i]_{J_i};
// enumerated as (r+1)-colorings of the coordinates, one color meaning
// "in no J_i"
Event box_many(const ProductSpace& space, const std::vector<Event>& events);

struct BkrReport {
    double lhs;  // P(box of all events)
    double rhs;  // product of the P(A_i)
    bool holds;  // lhs <= rhs + 1e-12
};

BkrReport verify_bkr(const ProductSpace& space, const std::vector<Event>& events);

} // namespace bplab::bkr

#endif
