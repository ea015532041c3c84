#include <doctest.h>

#include <striphom/h1basis.hpp>

#include <set>
#include <stdexcept>
#include <string>

using namespace striphom;

namespace {

std::set<std::string> texts(const std::vector<Symbol>& cells) {
    std::set<std::string> out;
    for (const auto& s : cells) out.insert(s.text());
    return out;
}

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::map<int, int> perm3(int a, int b, int c) {
    return {{1, a}, {2, b}, {3, c}};
}

}  // namespace

TEST_CASE("degree-one classification") {
    K1Class c = classify_k1(parse_symbol("1|3 2"));
    CHECK(c.decreasing);
    CHECK(c.m == 1);

    c = classify_k1(parse_symbol("1 2"));
    CHECK_FALSE(c.decreasing);
    CHECK(c.m == 0);

    c = classify_k1(parse_symbol("3|1|4 2"));
    CHECK(c.decreasing);
    CHECK(c.m == 2);

    c = classify_k1(parse_symbol("2|1 3|4"));
    CHECK_FALSE(c.decreasing);
    CHECK(c.m == 1);

    CHECK_THROWS_AS(classify_k1(parse_symbol("1|2|3")), std::invalid_argument);
    CHECK_THROWS_AS(classify_k1(parse_symbol("1 2|3 4")), std::invalid_argument);
    CHECK_THROWS_AS(classify_k1(parse_symbol("1 2 3")), std::invalid_argument);
}

TEST_CASE("wheel family enumeration") {
    CHECK(texts(enumerate_A(3, 1)) == std::set<std::string>{"1|3 2"});
    CHECK(texts(enumerate_A(4, 1)) ==
          std::set<std::string>{"1|3 2|4", "1|4 2|3", "1|4 3|2", "2|4 3|1"});
    CHECK(texts(enumerate_A(4, 2)) ==
          std::set<std::string>{"2|1|4 3", "3|1|4 2", "4|1|3 2"});

    for (int n = 3; n <= 6; ++n)
        for (int m = 1; m <= n - 2; ++m)
            CHECK((long)enumerate_A(n, m).size() ==
                  binom(n, m + 2) * binom(m + 1, 2));
}

TEST_CASE("pair family enumeration") {
    CHECK(texts(enumerate_B(3, 0)) == std::set<std::string>{"1 2|3", "1 3|2", "2 3|1"});
    CHECK(texts(enumerate_B(3, 1)) == std::set<std::string>{"1|2 3", "2|1 3", "3|1 2"});
    for (int n = 2; n <= 6; ++n) {
        long total = 0;
        for (int m = 0; m <= n - 2; ++m) total += (long)enumerate_B(n, m).size();
        CHECK(total == binom(n, 2) * (1L << (n - 2)));
    }
}

TEST_CASE("book keeping with five labels") {
    long total = 0;
    for (int m = 0; m <= 3; ++m) total += (long)enumerate_B(5, m).size();
    CHECK(total == 80);
    CHECK(enumerate_A(5, 1).size() == 10);
    CHECK(enumerate_A(5, 2).size() == 15);
    CHECK(enumerate_A(5, 3).size() == 6);

    Engine eng;
    CHECK(eng.betti(5, Width::bounded(2), 1) == 80 + 10 + 15 + 6);
}

TEST_CASE("leading value of cells") {
    CHECK(leading_value(parse_symbol("1|3 2")) == 2);
    CHECK(leading_value(parse_symbol("1 2")) == -1);
    CHECK(leading_value(parse_symbol("2|1 3")) == 1);
    CHECK(leading_value(parse_symbol("2|4 3|1")) == 2);
    CHECK(leading_value(parse_symbol("3|1|4 2")) == 4);
}

TEST_CASE("signature of critical cells") {
    Symbol s = parse_symbol("3 4|7|1|6 2|5");
    REQUIRE(is_critical(s));
    CHECK(signature(s) == std::vector<int>{-1, 4});

    CHECK(signature(parse_symbol("1|3 2")) == std::vector<int>{2});
    CHECK(signature(parse_symbol("1 2")) == std::vector<int>{-1});
    CHECK(signature(parse_symbol("2|1")) == std::vector<int>{});
    CHECK(signature(parse_symbol("1 2|3|5 4")) == std::vector<int>{-1, 2});
    CHECK_THROWS_AS(signature(parse_symbol("1|2")), std::invalid_argument);
}

TEST_CASE("leading value of cycles") {
    Engine eng;
    CHECK(leading_value(eng, critical_cycle(parse_symbol("1|3 2"))) == 2);
    CHECK(leading_value(eng, z_pair(1, 2)) == -1);

    // a boundary has the zero class and no leading value
    Chain bdry = boundary(Chain::unit(parse_symbol("1 2|3 4")));
    CHECK_FALSE(leading_value(eng, bdry).has_value());

    // mixing families takes the max grade
    Chain mix = critical_cycle(parse_symbol("1|3 2|4")) +
                critical_cycle(parse_symbol("1 2|4|3"));
    CHECK(leading_value(eng, mix) == 2);
}

TEST_CASE("alternating wheel representative") {
    Engine eng;
    Chain zp = z_prime_wheel(eng, 1, 2, 3);
    auto hb = eng.critical_basis(3, 1);
    auto cells = eng.critical_cells(3, 1);
    SparseQVec coords = hb->coordinates(zp);
    REQUIRE(coords.size() == 7);
    for (const auto& [idx, v] : coords) {
        if ((*cells)[idx] == parse_symbol("1|3 2"))
            CHECK(v == 1);
        else
            CHECK(abs(v) == Rational(1, 2));
    }

    // transpositions negate the class, 3-cycles preserve it
    for (auto sigma : {perm3(2, 1, 3), perm3(3, 2, 1), perm3(1, 3, 2)})
        CHECK(hb->coordinates(relabel(zp, sigma) + zp).empty());
    for (auto sigma : {perm3(2, 3, 1), perm3(3, 1, 2)})
        CHECK(hb->coordinates(relabel(zp, sigma) - zp).empty());

    // transported copy matches a direct injection
    Chain moved = z_prime_wheel(eng, 2, 3, 5);
    CHECK(moved == inject(zp, OrderInjection::into({1, 2, 3}, {2, 3, 5})));
}

TEST_CASE("wheel seed dimensions and normalization") {
    Engine eng;
    for (int m = 1; m <= 3; ++m) {
        auto seed = wheel_seed(eng, m);
        CHECK((long)seed->chains.size() == binom(m + 1, 2));
        int n = m + 2;
        auto hb = eng.critical_basis(n, 1);
        auto cells = eng.critical_cells(n, 1);

        // coordinates over the decreasing-pair cells of top grade form the
        // identity, in cell order
        std::vector<int> arows;
        for (size_t i = 0; i < cells->size(); ++i) {
            K1Class c = classify_k1((*cells)[i]);
            if (c.decreasing && c.m == m) arows.push_back((int)i);
        }
        REQUIRE((long)arows.size() == binom(m + 1, 2));
        for (size_t j = 0; j < seed->chains.size(); ++j) {
            SparseQVec coords = hb->coordinates(seed->chains[j]);
            for (size_t i = 0; i < arows.size(); ++i) {
                Rational want = i == j ? 1 : 0;
                Rational got = 0;
                for (const auto& [idx, v] : coords)
                    if (idx == arows[i]) got = v;
                CHECK(got == want);
            }
        }
    }
}

TEST_CASE("extended wheel family counts") {
    Engine eng;
    CHECK(build_A_prime(eng, 4, 1).size() == 4);
    CHECK(build_A_prime(eng, 5, 1).size() == 10);
    CHECK(build_A_prime(eng, 6, 1).size() == 20);
    CHECK(build_A_prime(eng, 5, 2).size() == 15);
    CHECK(build_A_prime(eng, 5, 3).size() == 6);

    // every member is a width-2 cycle on the full label set
    for (const Chain& c : build_A_prime(eng, 5, 2)) {
        CHECK(is_cycle(c, Width::bounded(2)));
        CHECK(c.labels() == std::vector<int>{1, 2, 3, 4, 5});
    }
}

TEST_CASE("first homology basis verification") {
    Engine eng;
    for (int n = 2; n <= 5; ++n) {
        H1Verification rep = verify_h1_basis(eng, n);
        CHECK(rep.ok());
        CHECK(rep.total == rep.betti);
        CHECK((int)rep.families.size() == 1 + std::max(0, n - 2));
    }
}

TEST_CASE("family counts inside the verification report") {
    Engine eng;
    H1Verification rep = verify_h1_basis(eng, 4);
    REQUIRE(rep.families.size() == 3);  // B, A(4,1), A(4,2)
    CHECK(rep.families[0].m == -1);
    CHECK(rep.families[0].count == 24);
    CHECK(rep.families[1].m == 1);
    CHECK(rep.families[1].count == 4);
    CHECK(rep.families[2].m == 2);
    CHECK(rep.families[2].count == 3);
    CHECK(rep.betti == 31);
}

TEST_CASE("trailing singleton transpositions act trivially") {
    Engine eng;
    auto hb = eng.critical_basis(4, 1);
    int labels[4] = {1, 2, 3, 4};
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            int p = -1, q = -1;
            for (int x : labels)
                if (x != labels[a] && x != labels[b]) (p < 0 ? p : q) = x;
            Chain pair = z_pair(labels[a], labels[b]);
            CHECK(hb->homologous(concat(concat(pair, z_point(p)), z_point(q)),
                                 concat(concat(pair, z_point(q)), z_point(p))));
            CHECK(hb->homologous(concat(concat(z_point(p), z_point(q)), pair),
                                 concat(concat(z_point(q), z_point(p)), pair)));
        }
}

TEST_CASE("leading value properties of the wheel families") {
    Engine eng;
    for (auto [n, m] : {std::pair{3, 1}, {4, 1}, {4, 2}}) {
        LeadingValueReport rep = verify_leading_value_props(eng, n, m, 20240817);
        CHECK(rep.ok());
        CHECK(rep.cells_checked == binom(n, m + 2) * binom(m + 1, 2));
        CHECK(rep.combos_checked > 0);
    }
}
