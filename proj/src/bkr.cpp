#include "bplab/bkr.hpp"

#include "bplab/errors.hpp"

#include <cmath>
#include <optional>

namespace bplab::bkr {

namespace {

constexpr long long kMaxOutcomes = 1LL << 24;

long long checked_pow(int s, int d, long long cap) {
    long long total = 1;
    for (int i = 0; i < d; ++i) {
        total *= s;
        if (total > cap) throw TooLarge("outcome space exceeds exhaustive limit");
    }
    return total;
}

std::uint32_t coord_mask(const ProductSpace& space, const std::vector<int>& coords) {
    std::uint32_t mask = 0;
    for (int c : coords) {
        if (c < 0 || c >= space.dims()) throw BadArgs("coordinate out of range");
        mask |= std::uint32_t{1} << c;
    }
    return mask;
}

// place value of coordinate i (coordinate 0 most significant)
std::vector<long long> place_values(const ProductSpace& space) {
    std::vector<long long> place(static_cast<std::size_t>(space.dims()));
    long long v = 1;
    for (int i = space.dims() - 1; i >= 0; --i) {
        place[static_cast<std::size_t>(i)] = v;
        v *= space.alphabet();
    }
    return place;
}

// enumerate all outcomes agreeing with omega outside `free_mask`, calling
// fn(index) for each; returns false early if fn does
template <class Fn>
bool scan_cylinder(const ProductSpace& space, const std::vector<int>& omega,
                   std::uint32_t free_mask, Fn&& fn) {
    auto place = place_values(space);
    long long base = 0;
    std::vector<long long> free_place;
    for (int i = 0; i < space.dims(); ++i) {
        if (free_mask >> i & 1u)
            free_place.push_back(place[static_cast<std::size_t>(i)]);
        else
            base += omega[static_cast<std::size_t>(i)] * place[static_cast<std::size_t>(i)];
    }
    std::vector<int> digits(free_place.size(), 0);
    long long idx = base;
    for (;;) {
        if (!fn(idx)) return false;
        std::size_t pos = 0;
        while (pos < digits.size()) {
            ++digits[pos];
            idx += free_place[pos];
            if (digits[pos] < space.alphabet()) break;
            idx -= static_cast<long long>(digits[pos]) * free_place[pos];
            digits[pos] = 0;
            ++pos;
        }
        if (pos == digits.size()) return true;
    }
}

bool cylinder_inside(const ProductSpace& space, const std::vector<int>& omega,
                     std::uint32_t fixed_mask, const Event& a) {
    std::uint32_t all = (std::uint32_t{1} << space.dims()) - 1;
    return scan_cylinder(space, omega, all & ~fixed_mask,
                         [&](long long idx) { return a.contains(idx); });
}

Event entry_set_mask(const ProductSpace& space, const Event& a, std::uint32_t jmask) {
    Event result(space.outcome_count());
    for (long long idx = 0; idx < space.outcome_count(); ++idx) {
        if (!a.contains(idx)) continue;
        if (cylinder_inside(space, space.outcome_at(idx), jmask, a)) result.insert(idx);
    }
    return result;
}

} // namespace

ProductSpace::ProductSpace(int alphabet_size, int d,
                           std::vector<std::vector<double>> weights)
    : s_(alphabet_size), d_(d), weights_(std::move(weights)) {
    if (s_ < 1 || d_ < 1 || d_ > 24) throw BadArgs("need alphabet >= 1 and 1 <= d <= 24");
    total_ = checked_pow(s_, d_, kMaxOutcomes);
    if (weights_.size() != static_cast<std::size_t>(d_))
        throw BadArgs("need one weight row per coordinate");
    for (const auto& row : weights_) {
        if (row.size() != static_cast<std::size_t>(s_))
            throw BadArgs("need one weight per symbol");
        double sum = 0.0;
        for (double w : row) {
            if (!(w >= 0.0)) throw BadArgs("weights must be nonnegative");
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-12) throw BadArgs("weights must sum to 1");
    }
}

ProductSpace ProductSpace::uniform(int alphabet_size, int d) {
    if (alphabet_size < 1) throw BadArgs("need alphabet >= 1");
    std::vector<std::vector<double>> w(
        static_cast<std::size_t>(d),
        std::vector<double>(static_cast<std::size_t>(alphabet_size),
                            1.0 / alphabet_size));
    return ProductSpace(alphabet_size, d, std::move(w));
}

long long ProductSpace::index_of(const std::vector<int>& omega) const {
    if (omega.size() != static_cast<std::size_t>(d_)) throw BadArgs("outcome arity mismatch");
    long long idx = 0;
    for (int v : omega) {
        if (v < 0 || v >= s_) throw BadArgs("symbol out of range");
        idx = idx * s_ + v;
    }
    return idx;
}

std::vector<int> ProductSpace::outcome_at(long long index) const {
    if (index < 0 || index >= total_) throw BadArgs("outcome index out of range");
    std::vector<int> omega(static_cast<std::size_t>(d_));
    for (int i = d_ - 1; i >= 0; --i) {
        omega[static_cast<std::size_t>(i)] = static_cast<int>(index % s_);
        index /= s_;
    }
    return omega;
}

double ProductSpace::outcome_prob(const std::vector<int>& omega) const {
    if (omega.size() != static_cast<std::size_t>(d_)) throw BadArgs("outcome arity mismatch");
    double p = 1.0;
    for (int i = 0; i < d_; ++i)
        p *= weights_[static_cast<std::size_t>(i)]
                     [static_cast<std::size_t>(omega[static_cast<std::size_t>(i)])];
    return p;
}

Event::Event(long long outcome_count)
    : count_(outcome_count),
      bits_(static_cast<std::size_t>((outcome_count + 63) / 64), 0) {}

long long Event::size() const {
    long long n = 0;
    for (auto w : bits_) n += __builtin_popcountll(w);
    return n;
}

Event Event::intersect(const Event& other) const {
    if (count_ != other.count_) throw BadArgs("events live in different spaces");
    Event r(count_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & other.bits_[i];
    return r;
}

Event Event::unite(const Event& other) const {
    if (count_ != other.count_) throw BadArgs("events live in different spaces");
    Event r(count_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] | other.bits_[i];
    return r;
}

bool Event::subset_of(const Event& other) const {
    if (count_ != other.count_) throw BadArgs("events live in different spaces");
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~other.bits_[i]) return false;
    return true;
}

Event full_event(const ProductSpace& space) {
    Event e(space.outcome_count());
    for (long long i = 0; i < space.outcome_count(); ++i) e.insert(i);
    return e;
}

Event empty_event(const ProductSpace& space) { return Event(space.outcome_count()); }

double probability(const ProductSpace& space, const Event& e) {
    if (e.universe() != space.outcome_count()) throw BadArgs("event/space mismatch");
    double total = 0.0;
    for (long long i = 0; i < space.outcome_count(); ++i)
        if (e.contains(i)) total += space.outcome_prob(space.outcome_at(i));
    return total;
}

Event cylinder(const ProductSpace& space, const std::vector<int>& omega,
               const std::vector<int>& k) {
    space.index_of(omega); // validates omega
    std::uint32_t kmask = coord_mask(space, k);
    std::uint32_t all = (std::uint32_t{1} << space.dims()) - 1;
    Event e(space.outcome_count());
    scan_cylinder(space, omega, all & ~kmask, [&](long long idx) {
        e.insert(idx);
        return true;
    });
    return e;
}

Event entry_set(const ProductSpace& space, const Event& a, const std::vector<int>& j) {
    if (a.universe() != space.outcome_count()) throw BadArgs("event/space mismatch");
    return entry_set_mask(space, a, coord_mask(space, j));
}

Event box2(const ProductSpace& space, const Event& a, const Event& b) {
    if (a.universe() != space.outcome_count() || b.universe() != space.outcome_count())
        throw BadArgs("event/space mismatch");
    if (space.dims() > 16 || space.outcome_count() > (1LL << 16))
        throw TooLarge("box2 scans 2^d index sets per outcome");
    std::uint32_t all = (std::uint32_t{1} << space.dims()) - 1;
    Event result(space.outcome_count());
    for (long long idx = 0; idx < space.outcome_count(); ++idx) {
        // omega itself lies in every cylinder it determines
        if (!a.contains(idx) || !b.contains(idx)) continue;
        auto omega = space.outcome_at(idx);
        for (std::uint32_t kmask = 0; kmask <= all; ++kmask) {
            if (cylinder_inside(space, omega, kmask, a) &&
                cylinder_inside(space, omega, all & ~kmask, b)) {
                result.insert(idx);
                break;
            }
        }
    }
    return result;
}

Event box_many(const ProductSpace& space, const std::vector<Event>& events) {
    std::size_t r = events.size();
    if (r < 1) throw BadArgs("box of zero events");
    if (r > 4 || space.dims() > 8) throw TooLarge("box_many limited to r <= 4, d <= 8");
    for (const auto& e : events)
        if (e.universe() != space.outcome_count()) throw BadArgs("event/space mismatch");

    // lazy per-event cache of entry sets, indexed by coordinate mask
    std::vector<std::vector<std::optional<Event>>> cache(
        r, std::vector<std::optional<Event>>(std::size_t{1} << space.dims()));
    auto entry = [&](std::size_t i, std::uint32_t jmask) -> const Event& {
        auto& slot = cache[i][jmask];
        if (!slot) slot = entry_set_mask(space, events[i], jmask);
        return *slot;
    };

    Event result(space.outcome_count());
    // (r+1)-coloring of coordinates; color r means "in no J_i"
    std::vector<int> color(static_cast<std::size_t>(space.dims()), 0);
    for (;;) {
        std::vector<std::uint32_t> jmask(r, 0);
        for (int i = 0; i < space.dims(); ++i)
            if (color[static_cast<std::size_t>(i)] < static_cast<int>(r))
                jmask[static_cast<std::size_t>(color[static_cast<std::size_t>(i)])] |=
                    std::uint32_t{1} << i;
        Event inter = entry(0, jmask[0]);
        for (std::size_t i = 1; i < r && inter.size() > 0; ++i)
            inter = inter.intersect(entry(i, jmask[i]));
        result = result.unite(inter);

        std::size_t pos = 0;
        while (pos < color.size() && ++color[pos] > static_cast<int>(r)) color[pos++] = 0;
        if (pos == color.size()) break;
    }
    return result;
}

BkrReport verify_bkr(const ProductSpace& space, const std::vector<Event>& events) {
    if (events.empty()) throw BadArgs("need at least one event");
    Event box = events.size() == 2 ? box2(space, events[0], events[1])
                                   : box_many(space, events);
    double lhs = probability(space, box);
    double rhs = 1.0;
    for (const auto& e : events) rhs *= probability(space, e);
    return {lhs, rhs, lhs <= rhs + 1e-12};
}

} // namespace bplab::bkr
