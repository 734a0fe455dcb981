#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "bplab/bkr.hpp"
#include "bplab/errors.hpp"
#include "bplab/rng.hpp"

using namespace bplab::bkr;
using bplab::BadArgs;
using bplab::TooLarge;

namespace {

// event from explicit outcome tuples
Event make_event(const ProductSpace& space,
                 const std::vector<std::vector<int>>& tuples) {
    Event e(space.outcome_count());
    for (const auto& t : tuples)
        e.insert(space.index_of(t));
    return e;
}

// {omega : omega[coord] = value}
Event coord_is(const ProductSpace& space, int coord, int value) {
    Event e(space.outcome_count());
    for (long long i = 0; i < space.outcome_count(); ++i)
        if (space.outcome_at(i)[static_cast<std::size_t>(coord)] == value)
            e.insert(i);
    return e;
}

Event random_event(const ProductSpace& space, std::mt19937_64& gen) {
    Event e(space.outcome_count());
    for (long long i = 0; i < space.outcome_count(); ++i)
        if (gen() & 1)
            e.insert(i);
    return e;
}

} // namespace

TEST_CASE("outcome enumeration is mixed-radix with coordinate 0 leading") {
    ProductSpace space = ProductSpace::uniform(3, 2);
    CHECK(space.outcome_count() == 9);
    CHECK(space.index_of({0, 0}) == 0);
    CHECK(space.index_of({0, 2}) == 2);
    CHECK(space.index_of({1, 0}) == 3);
    CHECK(space.index_of({2, 2}) == 8);
    for (long long i = 0; i < 9; ++i)
        CHECK(space.index_of(space.outcome_at(i)) == i);
    CHECK_THROWS_AS(space.index_of({0}), BadArgs);
    CHECK_THROWS_AS(space.index_of({0, 3}), BadArgs);
    CHECK_THROWS_AS(space.outcome_at(9), BadArgs);
}

TEST_CASE("outcome probabilities multiply across coordinates") {
    ProductSpace space(2, 3, {{0.7, 0.3}, {0.6, 0.4}, {0.5, 0.5}});
    CHECK(space.outcome_prob({0, 0, 0}) == doctest::Approx(0.21).epsilon(1e-12));
    CHECK(space.outcome_prob({1, 1, 1}) == doctest::Approx(0.06).epsilon(1e-12));
    CHECK(probability(space, full_event(space)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(probability(space, empty_event(space)) == 0.0);
}

TEST_CASE("space construction validates shape and mass") {
    CHECK_THROWS_AS(ProductSpace(2, 0, {}), BadArgs);
    CHECK_THROWS_AS(ProductSpace(2, 25, {}), BadArgs);
    CHECK_THROWS_AS(ProductSpace(2, 2, {{0.5, 0.5}}), BadArgs);
    CHECK_THROWS_AS(ProductSpace(2, 1, {{0.5, 0.4}}), BadArgs);
    CHECK_THROWS_AS(ProductSpace(2, 1, {{1.1, -0.1}}), BadArgs);
    CHECK_THROWS_AS(ProductSpace::uniform(3, 24), TooLarge); // 3^24 > 2^24
    CHECK_NOTHROW(ProductSpace::uniform(2, 24));
}

TEST_CASE("cylinders pin exactly the chosen coordinates") {
    ProductSpace space = ProductSpace::uniform(2, 3);
    std::vector<int> omega{1, 0, 1};

    Event full_pin = cylinder(space, omega, {0, 1, 2});
    CHECK(full_pin.size() == 1);
    CHECK(full_pin.contains(space.index_of(omega)));

    CHECK(cylinder(space, omega, {}) == full_event(space));

    Event two_free = cylinder(space, omega, {0, 2});
    CHECK(two_free.size() == 2);
    CHECK(two_free.contains(space.index_of({1, 0, 1})));
    CHECK(two_free.contains(space.index_of({1, 1, 1})));

    // |cylinder| = |S|^{d - |K|}
    CHECK(cylinder(space, omega, {1}).size() == 4);
    CHECK_THROWS_AS(cylinder(space, omega, {3}), BadArgs);
}

TEST_CASE("entry sets on the documented two-coordinate example") {
    ProductSpace space = ProductSpace::uniform(2, 2);
    CHECK(entry_set(space, full_event(space), {}) == full_event(space));

    Event a = make_event(space, {{1, 0}, {1, 1}}); // first coordinate is 1
    CHECK(entry_set(space, a, {0, 1}) == a);
    CHECK(entry_set(space, a, {0}) == a);       // coordinate 0 alone grants entry
    CHECK(entry_set(space, a, {1}).size() == 0); // coordinate 1 never does
    CHECK(entry_set(space, a, {}).size() == 0);  // only Omega enters on nothing
}

TEST_CASE("two-event box on the documented examples") {
    ProductSpace space = ProductSpace::uniform(2, 2);
    Event a = coord_is(space, 0, 1);
    Event b = coord_is(space, 1, 1);

    CHECK(box2(space, full_event(space), b) == b);
    CHECK(box2(space, a, full_event(space)) == a);

    Event ab = box2(space, a, b);
    CHECK(ab.size() == 1);
    CHECK(ab.contains(space.index_of({1, 1})));
    CHECK(probability(space, ab) == doctest::Approx(0.25).epsilon(1e-12));

    // no split can force the same coordinate twice
    CHECK(box2(space, a, a).size() == 0);
}

TEST_CASE("box results stay inside the intersection") {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 100; ++trial) {
        ProductSpace space = ProductSpace::uniform(2, 3 + static_cast<int>(gen() % 2));
        Event a = random_event(space, gen);
        Event b = random_event(space, gen);
        CHECK(box2(space, a, b).subset_of(a.intersect(b)));
    }
}

TEST_CASE("box is monotone in each argument") {
    std::mt19937_64 gen(9);
    for (int trial = 0; trial < 60; ++trial) {
        ProductSpace space = ProductSpace::uniform(2, 4);
        Event a = random_event(space, gen);
        Event b = random_event(space, gen);
        // carve a sub-event of a
        Event a_small(space.outcome_count());
        for (long long i = 0; i < space.outcome_count(); ++i)
            if (a.contains(i) && (gen() & 1))
                a_small.insert(i);
        CHECK(box2(space, a_small, b).subset_of(box2(space, a, b)));
    }
}

TEST_CASE("multi-event box: identity, annihilator, pairwise agreement") {
    ProductSpace space = ProductSpace::uniform(2, 3);
    std::mt19937_64 gen(13);
    Event a = random_event(space, gen);
    CHECK(box_many(space, {a}) == a);
    CHECK(box_many(space, {a, empty_event(space)}).size() == 0);

    for (int trial = 0; trial < 200; ++trial) {
        int d = 2 + static_cast<int>(gen() % 4); // 2..5
        ProductSpace sp = ProductSpace::uniform(2, d);
        Event x = random_event(sp, gen);
        Event y = random_event(sp, gen);
        CHECK(box_many(sp, {x, y}) == box2(sp, x, y));
    }
}

TEST_CASE("disjoint-occurrence probability never beats the product") {
    std::mt19937_64 gen(21);
    for (int trial = 0; trial < 2000; ++trial) {
        int d = 2 + static_cast<int>(gen() % 3); // 2..4
        std::vector<std::vector<double>> weights;
        for (int i = 0; i < d; ++i) {
            double w = 0.05 + 0.9 * bplab::uniform53(gen);
            weights.push_back({1.0 - w, w});
        }
        ProductSpace space(2, d, weights);
        Event a = random_event(space, gen);
        Event b = random_event(space, gen);
        BkrReport rep = verify_bkr(space, {a, b});
        CHECK(rep.holds);
        CHECK(rep.lhs <= rep.rhs + 1e-12);
    }
}

TEST_CASE("triple boxes obey the product bound too") {
    std::mt19937_64 gen(27);
    for (int trial = 0; trial < 200; ++trial) {
        ProductSpace space = ProductSpace::uniform(2, 3);
        std::vector<Event> events{random_event(space, gen), random_event(space, gen),
                                  random_event(space, gen)};
        BkrReport rep = verify_bkr(space, events);
        CHECK(rep.holds);
    }
}

TEST_CASE("independent single-coordinate events meet the bound with equality") {
    ProductSpace space = ProductSpace::uniform(2, 2);
    BkrReport rep = verify_bkr(space, {coord_is(space, 0, 1), coord_is(space, 1, 1)});
    CHECK(rep.holds);
    CHECK(rep.lhs == doctest::Approx(rep.rhs).epsilon(1e-12));
    CHECK(rep.lhs == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("exhaustive limits are enforced, not silently exceeded") {
    ProductSpace big = ProductSpace::uniform(2, 17);
    Event e = full_event(big);
    CHECK_THROWS_AS(box2(big, e, e), TooLarge);

    ProductSpace wide = ProductSpace::uniform(2, 9);
    Event w = full_event(wide);
    CHECK_THROWS_AS(box_many(wide, {w, w}), TooLarge);

    ProductSpace ok = ProductSpace::uniform(2, 4);
    Event o = full_event(ok);
    CHECK_THROWS_AS(box_many(ok, {o, o, o, o, o}), TooLarge); // r = 5
    CHECK_THROWS_AS(box_many(ok, {}), BadArgs);
    CHECK_THROWS_AS(verify_bkr(ok, {}), BadArgs);

    // events must belong to the queried space
    ProductSpace other = ProductSpace::uniform(2, 3);
    CHECK_THROWS_AS(box2(ok, full_event(other), o), BadArgs);
}
