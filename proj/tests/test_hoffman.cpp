#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "fmzv/hoffman.hpp"
#include "fmzv/poly.hpp"
#include "fmzv/word.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace fmzv;

TEST_CASE("word basics") {
    Word e;
    CHECK(e.degree() == 0);
    CHECK(e.str() == "1");
    Word xy = Word::parse("xy");
    CHECK(xy.degree() == 2);
    CHECK(xy.front() == Letter::X);
    CHECK(xy.back() == Letter::Y);
    CHECK(xy.in_h0());
    CHECK(Word::parse("xxyxy").str() == "xxyxy");
    CHECK(e.concat(xy) == xy);
    CHECK(xy.concat(e) == xy);

    // degree-lex order with x < y
    CHECK(Word::parse("y") < Word::parse("xx"));
    CHECK(Word::parse("xxy") < Word::parse("xyy"));
    CHECK(Word::parse("xyy") < Word::parse("yxy"));
}

TEST_CASE("word_from_index") {
    CHECK(word_from_index(Index{}) == Word{});
    CHECK(word_from_index(Index{{2}}) == Word::parse("xy"));
    // z_3 z_2 concatenated by hand
    CHECK(word_from_index(Index{{3, 2}}) == Word::parse("xxyxy"));
}

TEST_CASE("index_from_word") {
    CHECK(index_from_word(Word::parse("xy")) == Index{{2}});
    CHECK(index_from_word(Word::parse("xxyxy")) == Index{{3, 2}});
    CHECK_THROWS_AS(index_from_word(Word::parse("xx")), std::invalid_argument);
}

TEST_CASE("index round trip through words") {
    for (int k = 0; k <= 10; ++k)
        for (const Index& ix : compositions_of(k))
            CHECK(index_from_word(word_from_index(ix)) == ix);
}

TEST_CASE("index parse and print") {
    CHECK(Index::parse("(2,1)") == Index{{2, 1}});
    CHECK(Index::parse("2,1") == Index{{2, 1}});
    CHECK(Index::parse("()") == Index{});
    CHECK(Index{{2, 1}}.str() == "(2,1)");
    CHECK(Index{}.str() == "()");
    CHECK_THROWS(Index::parse("(0)"));
    CHECK(part_lex_less(Index{{1, 1, 1, 2}}, Index{{1, 2, 2}}));
    CHECK(part_lex_less(Index{{1, 2}}, Index{{5}}));
}

TEST_CASE("poly_concat") {
    Poly x = Poly::letter(Letter::X);
    Poly y = Poly::letter(Letter::Y);
    CHECK(poly_concat(x, y) == Poly::word(Word::parse("xy")));
    Poly expect = Poly::word(Word::parse("xy")) + Poly::word(Word::parse("yy"));
    CHECK(poly_concat(x + y, y) == expect);
    CHECK(poly_concat(Poly{}, x + y).is_zero());
    CHECK(poly_concat(Poly::unit(), x) == x);
}

TEST_CASE("z_monomial") {
    CHECK(z_monomial(Index{{2}}) ==
          Poly::word(Word::parse("xy")) + Poly::word(Word::parse("yy")));
    Poly z3 = z_monomial(Index{{3}});
    Poly expect = Poly::word(Word::parse("xxy")) +
                  Poly::word(Word::parse("xyy")) +
                  Poly::word(Word::parse("yxy")) +
                  Poly::word(Word::parse("yyy"));
    CHECK(z3 == expect);
    CHECK(z_monomial(Index{{1, 1}}) == Poly::word(Word::parse("yy")));
    CHECK(z_monomial(Index{}) == Poly::unit());
}

TEST_CASE("harmonic product: unit and pinned expansions") {
    Poly w = Poly::word(Word::parse("xyy"));
    CHECK(harmonic_product(Poly::unit(), w) == w);
    CHECK(harmonic_product(w, Poly::unit()) == w);

    // z2 * z3 = z2 z3 + z3 z2 + z5
    Poly got = harmonic_product(Poly::word(word_from_index(Index{{2}})),
                                Poly::word(word_from_index(Index{{3}})));
    Poly expect = Poly::word(word_from_index(Index{{2, 3}})) +
                  Poly::word(word_from_index(Index{{3, 2}})) +
                  Poly::word(word_from_index(Index{{5}}));
    CHECK(got == expect);

    // z1 * z1 = 2 z1 z1 + z2
    Poly z1 = Poly::word(word_from_index(Index{{1}}));
    Poly got2 = harmonic_product(z1, z1);
    Poly expect2 =
        Poly::word(word_from_index(Index{{1, 1}})).scaled(2) +
        Poly::word(word_from_index(Index{{2}}));
    CHECK(got2 == expect2);

    CHECK_THROWS_AS(harmonic_product(Poly::letter(Letter::X), z1),
                    std::invalid_argument);
}

TEST_CASE("harmonic product matches the merge-enumeration oracle") {
    auto r = props::stuffle_vs_oracle(8);
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("harmonic product commutative, associative, weight-graded") {
    auto r = props::stuffle_comm_assoc(8);
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("derive: pinned values") {
    CHECK(derive(3, Poly::unit()).is_zero());
    for (int l = 1; l <= 4; ++l)
        CHECK(derive(l, Poly::letter(Letter::X) + Poly::letter(Letter::Y))
                  .is_zero());

    // d3(xy) = xyxyy + xyyyy - xxxxy - xxyxy
    Poly got = derive(3, Poly::word(Word::parse("xy")));
    Poly expect = Poly::word(Word::parse("xyxyy")) +
                  Poly::word(Word::parse("xyyyy")) -
                  Poly::word(Word::parse("xxxxy")) -
                  Poly::word(Word::parse("xxyxy"));
    CHECK(got == expect);
    CHECK_THROWS_AS(derive(0, Poly::unit()), std::invalid_argument);
}

TEST_CASE("derive satisfies the Leibniz rule") {
    auto r = props::leibniz_random(200, 8, 4, 0xfeed);
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("derive keeps Hy stable") {
    for (int k = 1; k <= 7; ++k)
        for (const Word& w : h1_words(k))
            for (int l = 1; l <= 4; ++l) {
                Poly d = derive(l, Poly::word(w));
                CHECK(d.in_h1());
            }
}

TEST_CASE("derive weight-shift identity") {
    auto r = props::weight_shift_identity(7, 4);
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("phi: pinned values, involution, automorphism") {
    CHECK(phi(Poly::unit()) == Poly::unit());
    CHECK(phi(Poly::letter(Letter::X)) ==
          Poly::letter(Letter::X) + Poly::letter(Letter::Y));
    CHECK(phi(Poly::letter(Letter::Y)) == -Poly::letter(Letter::Y));
    auto r = props::phi_automorphism(8, 0xabcd);
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("base-case duality identity") {
    auto r = props::base_case_duality(3, 4, 6);
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("refinements") {
    auto r2 = refinements(Index{{2}});
    CHECK(r2 == std::vector<Index>{Index{{2}}, Index{{1, 1}}});
    auto r3 = refinements(Index{{3}});
    CHECK(r3 == std::vector<Index>{Index{{3}}, Index{{2, 1}}, Index{{1, 2}},
                                   Index{{1, 1, 1}}});
    CHECK(refinements(Index{{1, 1}}) == std::vector<Index>{Index{{1, 1}}});
}

TEST_CASE("refinement and formal-sum identities") {
    auto r = props::refinement_identities(7);
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("subspace membership") {
    CHECK(subspace_membership(Poly::word(Word::parse("xy"))) == Subspace::H0);
    CHECK(subspace_membership(Poly::word(Word::parse("y"))) == Subspace::H1);
    CHECK(subspace_membership(Poly::word(Word::parse("x"))) == Subspace::H);
    CHECK(subspace_membership(Poly{}) == Subspace::H0);
    CHECK(subspace_membership(Poly::word(Word::parse("xy")) +
                              Poly::word(Word::parse("yy"))) == Subspace::H1);
}

TEST_CASE("basis enumerations") {
    CHECK(h1_words(0).size() == 1);
    CHECK(h1_words(4).size() == 8);
    CHECK(h0_words(1).empty());
    CHECK(h0_words(4).size() == 4);
    for (const Word& w : h1_words(5)) CHECK(w.in_h1());
    for (const Word& w : h0_words(5)) CHECK(w.in_h0());
}

TEST_CASE("concurrent harmonic products agree with serial ones") {
    // the memo cache may be raced; results must not depend on it
    std::vector<Poly> serial;
    auto pairs = std::vector<std::pair<Index, Index>>{
        {Index{{2, 1}}, Index{{3}}}, {Index{{1, 1}}, Index{{2, 2}}},
        {Index{{4}}, Index{{1, 2}}}, {Index{{2}}, Index{{2, 1, 1}}}};
    for (const auto& [u, v] : pairs)
        serial.push_back(harmonic_product(Poly::word(word_from_index(u)),
                                          Poly::word(word_from_index(v))));
    std::vector<Poly> parallel(pairs.size());
    std::vector<std::thread> ts;
    for (size_t i = 0; i < pairs.size(); ++i)
        ts.emplace_back([&, i] {
            parallel[i] =
                harmonic_product(Poly::word(word_from_index(pairs[i].first)),
                                 Poly::word(word_from_index(pairs[i].second)));
        });
    for (auto& t : ts) t.join();
    for (size_t i = 0; i < pairs.size(); ++i) CHECK(parallel[i] == serial[i]);
}

TEST_CASE("poly printing") {
    Poly p = -Poly::word(word_from_index(Index{{5}})) +
             Poly::word(word_from_index(Index{{2, 2, 1}}));
    CHECK(p.str_index() == "-1*z(5) + 1*z(2,2,1)");
    CHECK(Poly{}.str_index() == "0");
    Poly q = Poly::letter(Letter::X).scaled(Rational(3, 2));
    CHECK(q.str_letters() == "3/2*x");
}
