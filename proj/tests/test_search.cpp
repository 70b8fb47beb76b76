#include <doctest.h>

#include <numeric>
#include <set>
#include <sstream>

#include "brute.hpp"
#include "nsgr/errors.hpp"
#include "nsgr/search.hpp"

using namespace nsgr;

namespace {

std::set<std::vector<int>> as_set(const std::vector<NumericalSemigroup>& v) {
    std::set<std::vector<int>> out;
    for (const auto& s : v) out.insert(s.generators());
    return out;
}

// Every minimal system with at most n entries ≤ v, found by minimalizing all subsets.
std::set<std::vector<int>> brute_systems(int n, int v) {
    std::set<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << v); ++mask) {
        std::vector<int> gens;
        for (int i = 0; i < v; ++i) {
            if (mask & (1u << i)) gens.push_back(i + 1);
        }
        if (static_cast<int>(gens.size()) > n) continue;
        int d = 0;
        for (int g : gens) d = std::gcd(d, g);
        if (d != 1) continue;
        auto m = brute::minimalize(gens);
        if (m == gens) out.insert(m);
    }
    return out;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("enumeration matches subset minimalization") {
    for (auto [n, v] : {std::pair{2, 7}, {3, 10}, {4, 12}}) {
        auto got = enumerate(EnumerationParams{n, v});
        CAPTURE(n);
        CAPTURE(v);
        CHECK(got.size() == as_set(got).size());
        CHECK(as_set(got) == brute_systems(n, v));
        CHECK(got.front().is_naturals());
    }
}

TEST_CASE("enumeration order and filters") {
    auto all = enumerate(EnumerationParams{3, 11});
    auto gens = as_set(all);
    CHECK(gens.count({4, 5, 11}) == 1);
    CHECK(std::count_if(all.begin(), all.end(), [](auto& s) { return s.is_naturals(); }) == 1);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].generators() < all[i].generators());
    CHECK(enumerate(EnumerationParams{3, 11}) == all);

    auto sym = enumerate(EnumerationParams{3, 11, 20, true});
    for (const auto& s : sym) {
        CHECK(is_symmetric(s));
        CHECK(s.frobenius() <= 20);
    }
    CHECK(as_set(sym).count({4, 5}) == 1);

    for (const auto& s : enumerate(EnumerationParams{4, 12, {}, false, true})) CHECK(GradedRing(s).is_m_pure());
    for (const auto& s : enumerate(EnumerationParams{4, 12, {}, false, false, true})) {
        CHECK(s.embedding_dimension() == 3);
    }
}

TEST_CASE("bounds validation") {
    CHECK_THROWS_AS(validate(EnumerationParams{1, 10}), InvalidBounds);
    CHECK_THROWS_AS(validate(EnumerationParams{3, 0}), InvalidBounds);
    CHECK_THROWS_AS(validate(EnumerationParams{3, 10, -2}), InvalidBounds);
    CHECK_THROWS_AS(validate(EnumerationParams{8, 400}), BoundsTooLarge);
    CHECK_NOTHROW(validate(EnumerationParams{5, 30}));
    EnumerationParams tight{3, 20};
    tight.max_candidates = 100;
    CHECK_THROWS_AS(validate(tight), BoundsTooLarge);
}

TEST_CASE("sweeps") {
    Corpus corpus(EnumerationParams{4, 20});
    auto seq = sweep_theorems(corpus, 1);
    CHECK(seq.violations.empty());
    CHECK(seq.corpus_size == enumerate(EnumerationParams{4, 20}).size());

    auto par = sweep_theorems(corpus, 4);
    seq.normalize();
    par.normalize();
    CHECK(par == seq);

    // The corpus must exercise both sides of the Buchsbaum checks.
    int buchsbaum_not_cm = 0, not_buchsbaum = 0;
    for (const auto& s : enumerate(EnumerationParams{4, 20})) {
        GradedRing ring(s);
        if (!ring.is_buchsbaum()) ++not_buchsbaum;
        else if (!ring.is_cm_full()) ++buchsbaum_not_cm;
    }
    CHECK(buchsbaum_not_cm > 0);
    CHECK(not_buchsbaum > 0);

    CHECK(sweep_theorems(Corpus(std::vector{new_semigroup({12, 19, 29, 104})})).violations.empty());
    auto empty = sweep_theorems(Corpus(std::vector<NumericalSemigroup>{}));
    CHECK(empty.corpus_size == 0);
    CHECK(empty.violations.empty());
}

TEST_CASE("hunt predicates on controls") {
    // s_J = r and not Buchsbaum.
    CHECK_FALSE(hunt_predicate(Question::Q57, GradedRing(new_semigroup({9, 10, 11, 23}))));
    // Buchsbaum fails.
    CHECK_FALSE(hunt_predicate(Question::Q58, GradedRing(new_semigroup({12, 19, 29, 104}))));
    // Symmetric and Buchsbaum with s_J = r.
    CHECK_FALSE(hunt_predicate(Question::Q57, GradedRing(new_semigroup({8, 9, 12, 13, 19}))));
    CHECK_FALSE(hunt_predicate(Question::Q57, GradedRing(new_semigroup({1}))));

    auto seq = hunt(Question::Q58, Corpus(EnumerationParams{4, 16}), 1);
    auto par = hunt(Question::Q58, Corpus(EnumerationParams{4, 16}), 3);
    seq.normalize();
    par.normalize();
    CHECK(seq == par);
    CHECK(seq.violations.empty());
}

TEST_CASE("corpus parsing") {
    CHECK(parse_generator_list("4, 5,11") == std::vector<int>{4, 5, 11});
    CHECK(parse_generator_list(" 7 ") == std::vector<int>{7});
    CHECK_THROWS_AS(parse_generator_list("4,,5"), ParseError);
    CHECK_THROWS_AS(parse_generator_list("4,x"), ParseError);
    CHECK_THROWS_AS(parse_generator_list("4,-5"), ParseError);
    CHECK_THROWS_AS(parse_generator_list(""), ParseError);

    std::istringstream good("# header\n4,5,11\n\n  9, 10, 11, 23  # trailing\n");
    auto items = read_corpus(good);
    REQUIRE(items.size() == 2);
    CHECK(items[1].generators() == std::vector<int>{9, 10, 11, 23});

    std::istringstream bad("4,5\n6,8\n");
    try {
        read_corpus(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(read_corpus_file("/nonexistent/corpus.txt"), ParseError);
}

}  // TEST_SUITE
