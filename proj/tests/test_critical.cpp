#include <doctest.h>

#include <striphom/critical.hpp>
#include <striphom/engine.hpp>

#include <set>
#include <stdexcept>

using namespace striphom;

TEST_CASE("critical cell predicate") {
    CHECK(is_critical(parse_symbol("1")));
    CHECK(is_critical(parse_symbol("2|1")));
    CHECK_FALSE(is_critical(parse_symbol("1|2")));    // singletons increase
    CHECK(is_critical(parse_symbol("1|3 2")));        // wheel shape
    CHECK(is_critical(parse_symbol("1|2 3")));        // increasing pair is free
    CHECK_FALSE(is_critical(parse_symbol("3 2|1")));  // leading decreasing pair
    CHECK_FALSE(is_critical(parse_symbol("2|3 1")));  // follower not dominating
    CHECK(is_critical(parse_symbol("2|5 3|1|4 6")));
    CHECK_FALSE(is_critical(parse_symbol("1 2 3")));  // block too wide
}

TEST_CASE("critical one cells with three labels") {
    auto crit = enumerate_critical(3, 1);
    std::set<std::string> got;
    for (const auto& c : crit) got.insert(c.text());
    std::set<std::string> want = {"1 2|3", "1 3|2", "2 3|1", "1|2 3",
                                  "1|3 2", "2|1 3", "3|1 2"};
    CHECK(got == want);
    CHECK(enumerate_critical(4, 1).size() == 31);
    CHECK(enumerate_critical(4, 2).size() == 6);
}

TEST_CASE("critical counts match betti numbers") {
    Engine eng;
    Width w2 = Width::bounded(2);
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k <= eng.max_dim(n, w2); ++k)
            CHECK(static_cast<std::int64_t>(enumerate_critical(n, k).size()) ==
                  eng.betti(n, w2, k));
}

TEST_CASE("factorization into points pairs and wheels") {
    auto factors = factor_critical(parse_symbol("2|1|4 3"));
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].kind == CriticalFactor::Kind::point);
    CHECK(factors[0].labels == std::vector<int>{2});
    CHECK(factors[1].kind == CriticalFactor::Kind::wheel);
    CHECK(factors[1].labels == std::vector<int>{1, 3, 4});

    factors = factor_critical(parse_symbol("1 2|3"));
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].kind == CriticalFactor::Kind::pair);
    CHECK(factors[0].labels == std::vector<int>{1, 2});
    CHECK(factors[1].kind == CriticalFactor::Kind::point);

    factors = factor_critical(parse_symbol("2|5 3|1|4 6"));
    REQUIRE(factors.size() == 3);
    CHECK(factors[0].kind == CriticalFactor::Kind::wheel);
    CHECK(factors[0].labels == std::vector<int>{2, 3, 5});
    CHECK(factors[1].kind == CriticalFactor::Kind::point);
    CHECK(factors[1].labels == std::vector<int>{1});
    CHECK(factors[2].kind == CriticalFactor::Kind::pair);
    CHECK(factors[2].labels == std::vector<int>{4, 6});
}

TEST_CASE("critical cycles are cycles carrying their cell") {
    for (int k = 0; k <= 2; ++k) {
        for (const auto& cell : enumerate_critical(4, k)) {
            Chain z = critical_cycle(cell);
            CHECK(boundary(z).is_zero());
            CHECK(z.coefficient(cell) == 1);
            CHECK(z.dimension() == k);
        }
    }
}

TEST_CASE("high insertion of a fresh label") {
    Symbol base = parse_symbol("2|5 3|1|4 6");
    CHECK(high_insert_cell(base, 0).text() == "7|2|5 3|1|4 6");
    CHECK(high_insert_cell(base, 1).text() == "2|5 3|7|1|4 6");
    CHECK(high_insert_cell(base, 2).text() == "2|5 3|1|4 6|7");
    CHECK_THROWS_AS(high_insert_cell(base, 3), std::invalid_argument);
    for (int j = 0; j <= 2; ++j)
        CHECK(is_critical(high_insert_cell(base, j)));
}

TEST_CASE("high insertion maps homology classes to homology classes") {
    Engine eng;
    auto hb3 = eng.critical_basis(3, 1);
    auto hb4 = eng.critical_basis(4, 1);
    for (const auto& z : hb3->basis()) {
        for (int j : {0, 1}) {
            Chain img = eng.high_insert(z, j);
            CHECK(boundary(img).is_zero());
            CHECK(img.labels() == std::vector<int>{1, 2, 3, 4});
            // lands in the span of the degree one critical basis
            (void)hb4->coordinates(img);
        }
    }
}
