#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "nsgr/errors.hpp"
#include "nsgr/semigroup.hpp"

using namespace nsgr;

namespace {

std::vector<int> random_generators(std::mt19937& rng) {
    std::uniform_int_distribution<int> count(1, 5);
    std::uniform_int_distribution<int> value(2, 24);
    while (true) {
        std::vector<int> gens;
        int n = count(rng);
        for (int i = 0; i < n; ++i) gens.push_back(value(rng));
        int d = 0;
        for (int g : gens) d = std::gcd(d, g);
        if (d == 1) return gens;
    }
}

}  // namespace

TEST_SUITE("sgp-core") {

TEST_CASE("construction canonicalizes to the minimal system") {
    auto s = new_semigroup({4, 5, 11});
    CHECK(s.generators() == std::vector<int>{4, 5, 11});
    CHECK(s.multiplicity() == 4);
    // Oracle: explicit closure gives gaps {1,2,3,6,7}.
    CHECK(brute::frobenius({4, 5, 11}) == 7);
    CHECK(s.frobenius() == 7);
    CHECK(s.conductor() == 8);
    CHECK(s.gaps() == std::vector<int>{1, 2, 3, 6, 7});

    auto redundant = new_semigroup({9, 4, 5, 4, 13});
    CHECK(redundant.generators() == std::vector<int>{4, 5});

    auto example = new_semigroup({12, 19, 29, 104});
    CHECK(example.generators() == std::vector<int>{12, 19, 29, 104});
}

TEST_CASE("the naturals") {
    auto n = new_semigroup({1});
    CHECK(n.is_naturals());
    CHECK(n.frobenius() == -1);
    CHECK(n.conductor() == 0);
    CHECK(n.contains(0));
    CHECK(n.contains(17));
    CHECK(is_symmetric(n));
    CHECK(apery(n) == std::vector<int>{0});
    CHECK(new_semigroup({1, 5, 7}).generators() == std::vector<int>{1});
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(new_semigroup({6, 8}), GcdNotOne);
    CHECK_THROWS_AS(new_semigroup(std::span<const int>{}), EmptyInput);
    CHECK_THROWS_AS(new_semigroup({0, 3}), ParseError);
    CHECK_THROWS_AS(new_semigroup({-2, 3}), ParseError);
}

TEST_CASE("membership") {
    auto s = new_semigroup({4, 5, 11});
    CHECK_FALSE(contains(s, 7));
    CHECK(contains(s, 0));
    CHECK_FALSE(contains(s, -4));
    CHECK(contains(s, 1'000'000));

    auto t = new_semigroup({8, 9, 12, 13, 19});
    CHECK(brute::frobenius({8, 9, 12, 13, 19}) == 23);
    CHECK(t.frobenius() == 23);
    CHECK_FALSE(contains(t, 23));
}

TEST_CASE("symmetry") {
    CHECK(is_symmetric(new_semigroup({9, 10, 11, 23})));
    CHECK(is_symmetric(new_semigroup({8, 9, 12, 13, 19})));
    CHECK_FALSE(is_symmetric(new_semigroup({4, 5, 11})));
    CHECK(is_symmetric(new_semigroup({4, 5})));
}

TEST_CASE("Apéry sets") {
    auto s = new_semigroup({8, 9, 15});
    auto ap = apery(s);
    CHECK(ap == brute::apery({8, 9, 15}, 8));
    CHECK(ap[6] == 30);
    CHECK(ap[5] == 45);

    auto t = apery(new_semigroup({10, 13, 14}));
    CHECK(t[5] == 55);
    CHECK(t[9] == 39);

    CHECK(apery(new_semigroup({12, 19, 29, 104}))[8] == 104);
}

TEST_CASE("order table") {
    auto s = new_semigroup({8, 9, 15});
    auto table = order_table(s, 100);
    CHECK(table.ord(0) == 0);
    CHECK(table.ord(45) == 5);
    CHECK(table.ord(30) == 2);
    CHECK(table.ord(15) == 1);
    CHECK(table.ord(45) == brute::ord({8, 9, 15}, 45));
    CHECK(table.ord(30) == brute::ord({8, 9, 15}, 30));
    CHECK(table.ord(7) == OrderTable::kAbsent);

    for (int g : s.generators()) CHECK(table.ord(g) == 1);
    CHECK_THROWS_AS(table.ord(100), InternalError);

    auto bigger = table.extended(s, 400);
    CHECK(bigger.bound() == 400);
    for (int x = 0; x < 100; ++x) CHECK(bigger.ord(x) == table.ord(x));
    CHECK(bigger.ord(399) == order_table(s, 400).ord(399));
}

TEST_CASE("ideal powers") {
    auto s = new_semigroup({17, 18, 21, 28, 29, 32, 33});
    CHECK(in_ideal_power(s, 68, 4));
    CHECK_FALSE(in_ideal_power(s, 67, 4));
    auto four = brute::power({17, 18, 21, 28, 29, 32, 33}, 4, 200);
    CHECK(*four.begin() == 68);
    for (int x = 68; x < 200; ++x) CHECK(four.count(x) == 1);

    auto t = new_semigroup({12, 19, 29, 104});
    CHECK(in_ideal_power(t, 116, 4));
    CHECK_FALSE(in_ideal_power(t, 116, 5));

    CHECK_FALSE(in_ideal_power(t, 0, 1));
    CHECK(in_ideal_power(t, 0, 0));
    CHECK(in_ideal_power(t, 12, 0));
    CHECK_FALSE(in_ideal_power(t, 13, 0));
}

TEST_CASE("order table agrees with explicit sumsets") {
    for (const std::vector<int>& gens : {std::vector<int>{4, 5, 11}, {5, 7, 9}, {6, 7, 15, 17}, {3, 5}}) {
        auto s = new_semigroup(gens);
        auto table = order_table(s, 60);
        for (int h = 0; h <= 6; ++h) {
            auto p = brute::power(gens, h, 60);
            for (int x = 0; x < 60; ++x) {
                CHECK_MESSAGE(table.in_power(x, h) == (p.count(x) == 1), s.to_string(), " x=", x, " h=", h);
            }
        }
    }
}

TEST_CASE("property: random semigroups") {
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 150; ++trial) {
        auto raw = random_generators(rng);
        auto s = NumericalSemigroup::from_generators(raw);
        CAPTURE(s.to_string());

        CHECK(s.generators() == brute::minimalize(raw));
        CHECK(s.frobenius() == brute::frobenius(raw));
        if (s.frobenius() >= 0) CHECK_FALSE(s.contains(s.frobenius()));

        const int c1 = std::max(s.conductor(), 1);
        const int gn = s.largest_generator();
        const int bound = c1 + 6 * gn;
        auto table = order_table(s, static_cast<std::size_t>(bound));

        std::uniform_int_distribution<int> pick(0, bound / 2 - 1);
        for (int k = 0; k < 200; ++k) {
            int x = pick(rng), y = pick(rng);
            if (!s.contains(x) || !s.contains(y)) continue;
            CHECK(s.contains(x + y));
            CHECK(table.ord(x + y) >= table.ord(x) + table.ord(y));
        }

        // The recurrence, checked on every member.
        for (int x = 1; x < bound; ++x) {
            if (!s.contains(x)) {
                CHECK(table.ord(x) == OrderTable::kAbsent);
                continue;
            }
            int best = -1;
            for (int g : s.generators()) {
                if (g <= x && s.contains(x - g)) best = std::max(best, table.ord(x - g));
            }
            CHECK(table.ord(x) == best + 1);
        }

        // Everything from max(c,1) + (h-1)·g_n on lies in hM.
        for (int h = 1; h <= 5; ++h) {
            for (int x = c1 + (h - 1) * gn; x < bound; x += 3) CHECK(table.in_power(x, h));
        }

        auto ap = apery(s);
        const int g1 = s.multiplicity();
        CHECK(ap.size() == static_cast<std::size_t>(g1));
        CHECK(*std::max_element(ap.begin(), ap.end()) == s.frobenius() + g1);
        CHECK(ap[0] == 0);
        for (int i = 0; i < g1; ++i) {
            CHECK(ap[i] % g1 == i);
            CHECK(s.contains(ap[i]));
            for (int y = i; y < ap[i]; y += g1) CHECK_FALSE(s.contains(y));
        }

        const auto gaps = static_cast<int>(s.gaps().size());
        bool pairing = true;
        for (int w : ap) {
            if (std::find(ap.begin(), ap.end(), s.frobenius() + g1 - w) == ap.end()) pairing = false;
        }
        CHECK(is_symmetric(s) == (2 * gaps == s.frobenius() + 1));
        CHECK(is_symmetric(s) == pairing);
    }
}

TEST_CASE("table limit applies to the membership sieve") {
    // 100000² far exceeds the default cap.
    CHECK_THROWS_AS(new_semigroup({99991, 100000}), TableLimitExceeded);
}

}  // TEST_SUITE
