#include <stdexcept>

#include "doctest.h"
#include "morphic/fixed_point.hpp"

using namespace morphic;

namespace {

Morphism gamma() { return parse_morphism("a->aca,b->cab,c->b"); }
Morphism mu() { return parse_morphism("x->xy,y->xxy"); }

const char* const x_gamma = "acabacacabacabacabacacabacabacacabacabac";

}  // namespace

TEST_CASE("fixed point prefixes") {
    CHECK(fixed_point(gamma(), 'a').prefix(40).str() == x_gamma);
    CHECK(fixed_point(mu(), 'x').prefix(40).str() == "xyxxyxyxyxxyxyxxyxyxxyxyxyxxyxyxxyxyxyxx");
    CHECK(fixed_point(parse_morphism("a->ab,b->ba"), 'a').prefix(40).str() ==
          "abbabaabbaababbabaababbaabbabaabbaababba");
    CHECK(fixed_point(parse_morphism("a->bbaba,b->bba"), 'b').prefix(40).str() ==
          "bbabbabbababbabbabbababbabbabbababbabbab");
    CHECK(fixed_point(gamma(), 'a').prefix(0).empty());

    CHECK_THROWS_AS(FixedPointStream(gamma(), 'b'), std::domain_error);
    CHECK_THROWS_AS(FixedPointStream(Morphism::identity(Alphabet("ab")), 'a'), std::domain_error);
    CHECK_THROWS_AS(FixedPointStream(parse_morphism("x->ac,y->ab"), 'x'), std::domain_error);

    // a -> ab, b -> eps: the fixed point is the finite word "ab".
    FixedPointStream finite(parse_morphism("a->ab,b->-"), 'a');
    CHECK(finite.prefix(2) == Word("ab"));
    CHECK_THROWS_AS(finite.prefix(3), std::domain_error);
}

TEST_CASE("stream determinism and fixed-point property") {
    const Morphism cases[] = {gamma(), mu(), parse_morphism("a->ab,b->ba"), parse_morphism("a->bbaba,b->bba"),
                              parse_morphism("a->abbab,b->abb")};
    for (const auto& phi : cases) {
        const char seed = prolongable_letters(phi).front();
        FixedPointStream grown(phi, seed);
        FixedPointStream direct(phi, seed);
        const Word long_prefix = direct.prefix(5000);
        for (std::size_t n : {1u, 2u, 7u, 100u, 999u, 5000u}) {
            const Word p = grown.prefix(n);
            REQUIRE(long_prefix.starts_with(p));
            REQUIRE(apply(phi, p).starts_with(p));
        }
    }
}

TEST_CASE("factor search") {
    FixedPointStream s(gamma(), 'a');
    CHECK(find_factor(s, Word("bacacab"), 100) == 3u);
    CHECK_FALSE(find_factor(s, Word("aa"), 10000).has_value());
    CHECK(find_factor(s, s.prefix(5), 5) == 0u);
    CHECK(find_factor(s, s.prefix(5), 77) == 0u);
    CHECK(find_factor(s, Word(), 3) == 0u);
    CHECK_THROWS_AS(find_factor(s, Word("acab"), 3), std::invalid_argument);
    CHECK_FALSE(find_factor(s, Word("bacacab"), 9).has_value());
    CHECK(find_factor(s, Word("bacacab"), 10) == 3u);
}

TEST_CASE("parity structure of the gamma fixed point") {
    FixedPointStream s(gamma(), 'a');
    const Word w = s.prefix(2000);
    for (std::size_t i = 0; i < w.size(); ++i) REQUIRE((w[i] == 'a') == (i % 2 == 0));
}

TEST_CASE("desubstitution") {
    FixedPointStream xg(gamma(), 'a');
    FixedPointStream wm(mu(), 'x');
    const Morphism code = parse_morphism("x->ac,y->ab");
    for (std::size_t n : {1u, 10u, 250u, 1000u}) REQUIRE(decode_prefix_code(code, xg.prefix(2 * n)) == wm.prefix(n));
}

TEST_CASE("palindrome census") {
    FixedPointStream s(gamma(), 'a');
    const auto census = palindrome_census(s, 400);
    CHECK(census.scanned_length == 400);
    for (std::size_t len : {1u, 7u, 21u, 55u}) CHECK(census.contains_length(len));
    CHECK(census.first_position(7) == 0u);
    const Word w = s.prefix(400);
    for (const auto& [len, pos] : census.found) {
        REQUIRE(pos + len <= w.size());
        REQUIRE(is_palindrome(w.view().substr(pos, len)));
    }
    // Direct scan: the recorded position is the first occurrence of a palindrome of that length.
    for (std::size_t len = 1; len <= 60; ++len) {
        std::optional<std::size_t> first;
        for (std::size_t i = 0; i + len <= w.size() && !first; ++i)
            if (is_palindrome(w.view().substr(i, len))) first = i;
        REQUIRE(census.first_position(len) == first);
    }

    const auto small = palindrome_census(s, 50);
    for (const auto& [len, pos] : small.found) CHECK(census.contains_length(len));

    FixedPointStream constant(parse_morphism("a->aa"), 'a');
    const auto all = palindrome_census(constant, 30);
    CHECK(all.found.size() == 30);
    for (std::size_t len = 1; len <= 30; ++len) CHECK(all.first_position(len) == 0u);

    CHECK(palindrome_census(std::string_view("abc")).found.size() == 1);
}

TEST_CASE("fixing evidence") {
    FixedPointStream s(gamma(), 'a');
    CHECK(is_fixed_by(gamma(), s, 5000));
    CHECK(is_fixed_by(parse_morphism("a->ac,b->acab,c->ab"), s, 5000));
    CHECK(is_fixed_by(parse_morphism("a->-,b->acacab,c->acab"), s, 5000));
    CHECK_FALSE(is_fixed_by(parse_morphism("a->ab,b->ba,c->c"), s, 100));
    CHECK_FALSE(is_fixed_by(parse_morphism("a->ab,b->ba"), s, 100));
    CHECK(is_fixed_by(Morphism::identity(Alphabet("abc")), s, 100));
    CHECK_FALSE(is_fixed_by(parse_morphism("a->aca,b->cab,c->bb"), s, 100));
}
