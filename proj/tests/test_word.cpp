#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "morphic/word.hpp"
#include "oracles.hpp"

using namespace morphic;
using oracle::all_words;

namespace {

std::set<std::size_t> as_set(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("alphabet") {
    const Alphabet a("acb");
    CHECK(a.size() == 3);
    CHECK(a.index_of('b') == 2);
    CHECK(a.contains('c'));
    CHECK_FALSE(a.contains('d'));
    CHECK_THROWS_AS(a.index_of('d'), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet("aba"), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet("a b"), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet("a-"), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet("abcdefghijklmnopqrstuvwxyz0"), std::invalid_argument);
}

TEST_CASE("reverse and palindromes") {
    CHECK(reverse(Word("acab")) == Word("baca"));
    CHECK(reverse(Word()) == Word());
    CHECK(reverse(Word("bacacab")) == Word("bacacab"));
    CHECK(is_palindrome(Word("bacacabacabacabacacab")));
    CHECK_FALSE(is_palindrome(Word("cab")));
    CHECK(is_palindrome(Word()));
    CHECK(is_palindrome(Word("x")));
    CHECK(Word().display() == "eps");
}

TEST_CASE("periods") {
    CHECK(periods(Word("aaaa")) == std::vector<std::size_t>{1, 2, 3});
    CHECK(periods(Word("acab")).empty());
    CHECK(periods(Word("abaab")) == std::vector<std::size_t>{3});
    CHECK_THROWS_AS(periods(Word()), std::domain_error);
    for (std::size_t n = 1; n <= 8; ++n)
        for (const auto& w : all_words(n, 2)) REQUIRE(as_set(periods(w)) == oracle::periods(w));
}

TEST_CASE("fine and wilf") {
    CHECK(fine_wilf(Word("abababab"), 2, 4) == 2u);
    CHECK(fine_wilf(Word("aaaaa"), 2, 3) == 1u);
    CHECK(fine_wilf(Word("aba"), 2, 2) == 2u);
    CHECK(fine_wilf(Word("abaab"), 3, 3) == 3u);
    CHECK_FALSE(fine_wilf(Word("aabaa"), 3, 4).has_value());
    CHECK_THROWS_AS(fine_wilf(Word("abab"), 1, 2), std::invalid_argument);
}

TEST_CASE("fine and wilf exhaustive up to length 14") {
    std::size_t applied = 0;
    for (std::size_t n = 1; n <= 14; ++n) {
        for (const auto& w : all_words(n, 2)) {
            const auto ps = oracle::periods(w);
            for (auto p : ps) {
                for (auto q : ps) {
                    const auto g = std::gcd(p, q);
                    const auto r = fine_wilf(w, p, q);
                    if (n >= p + q - g) {
                        REQUIRE(r == g);
                        REQUIRE((g == n || ps.count(g) == 1));
                        ++applied;
                    } else {
                        REQUIRE_FALSE(r.has_value());
                    }
                }
            }
        }
    }
    CHECK(applied > 0);
}

TEST_CASE("primitive root") {
    const auto r = primitive_root(Word("abab"));
    CHECK(r.root == Word("ab"));
    CHECK(r.exponent == 2);
    CHECK_FALSE(is_primitive_word(Word("abab")));
    CHECK(is_primitive_word(Word("acabacacab")));
    CHECK(primitive_root(Word("aa")).root == Word("a"));
    CHECK(primitive_root(Word("aa")).exponent == 2);
    CHECK_THROWS_AS(primitive_root(Word()), std::domain_error);
    for (std::size_t n = 1; n <= 12; ++n) {
        for (const auto& w : all_words(n, 2)) {
            const auto root = primitive_root(w);
            REQUIRE(power(root.root, root.exponent) == w);
            REQUIRE(oracle::primitive(root.root));
            REQUIRE(is_primitive_word(w) == oracle::primitive(w));
        }
    }
}

TEST_CASE("symmetry points") {
    CHECK(symmetry_points(Word("abcdcbaxyzzyx")).points == std::vector<std::size_t>{6});
    CHECK(symmetry_points(Word("aa")).points == std::vector<std::size_t>{0, 1});
    CHECK(symmetry_points(Word("acab")).points == std::vector<std::size_t>{2});
    CHECK(symmetry_points(Word()).empty());
    CHECK(symmetry_points(Word("acab")).word_length == 4);
    CHECK(is_symmetric(Word("acab")));
    CHECK_FALSE(is_symmetric(Word("abc")));
}

TEST_CASE("points of symmetry equal palindrome splits up to length 12") {
    for (std::size_t n = 1; n <= 12; ++n) {
        for (const auto& w : all_words(n, 3)) {
            const auto computed = as_set(symmetry_points(w).points);
            REQUIRE(computed == oracle::symmetry_points(w));
            REQUIRE(computed == oracle::palindrome_splits(w));
        }
    }
}

TEST_CASE("symmetric iff product of two palindromes up to length 16") {
    for (std::size_t n = 1; n <= 16; ++n) {
        for (const auto& w : all_words(n, 2)) {
            bool split = false;
            for (std::size_t len = 0; len <= n && !split; ++len)
                split = is_palindrome(w.view().substr(0, len)) && is_palindrome(w.view().substr(len));
            REQUIRE(is_symmetric(w) == split);
        }
    }
}

TEST_CASE("rotation") {
    CHECK(rotate(Word("abbab"), 1) == Word("bbaba"));
    CHECK(rotate(Word("abbab"), 0) == Word("abbab"));
    CHECK(rotate(Word("abbab"), 5) == Word("abbab"));
    CHECK_THROWS_AS(rotate(Word("ab"), 3), std::invalid_argument);
}

TEST_CASE("rotation moves points of symmetry by twice the shift") {
    std::mt19937 rng(20261018);
    std::size_t tested = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t n = 1 + rng() % 16;
        // Build from two palindromes so that points exist.
        const std::size_t cut = rng() % (n + 1);
        std::string p;
        for (std::size_t i = 0; i < (cut + 1) / 2; ++i) p += static_cast<char>('a' + rng() % 3);
        std::string pr(p.rbegin() + (cut % 2), p.rend());
        std::string qh;
        for (std::size_t i = 0; i < (n - cut + 1) / 2; ++i) qh += static_cast<char>('a' + rng() % 3);
        std::string qr(qh.rbegin() + ((n - cut) % 2), qh.rend());
        const Word w(p + pr + qh + qr);
        const std::size_t l = rng() % (w.size() + 1);
        const auto before = symmetry_points(w);
        const auto after = symmetry_points(rotate(w, l));
        for (auto a : before.points) {
            REQUIRE(after.contains((a + 2 * (w.size() - l)) % w.size()));
            ++tested;
        }
    }
    CHECK(tested > 10000);
}

TEST_CASE("two points of symmetry force a period") {
    CHECK(two_points_imply_period(Word("aa"), 0, 1) == 1);
    const auto abab = symmetry_points(Word("abab"));
    REQUIRE(abab.size() == 2);
    CHECK(two_points_imply_period(Word("abab"), abab.points[0], abab.points[1]) == 2);
    CHECK_THROWS_AS(two_points_imply_period(Word("abab"), 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(two_points_imply_period(Word("acab"), 1, 2), std::invalid_argument);
    for (std::size_t n = 1; n <= 12; ++n) {
        for (const auto& w : all_words(n, 3)) {
            const auto pts = symmetry_points(w).points;
            if (pts.size() < 2) continue;
            REQUIRE_FALSE(oracle::primitive(w));
            for (std::size_t i = 0; i < pts.size(); ++i) {
                for (std::size_t j = i + 1; j < pts.size(); ++j) {
                    const auto g = two_points_imply_period(w, pts[i], pts[j]);
                    REQUIRE(g == std::gcd(pts[j] - pts[i], n));
                    REQUIRE((g == n || oracle::periods(w).count(g) == 1));
                }
            }
        }
    }
}

TEST_CASE("longest common prefix and radii") {
    CHECK(longest_common_prefix(Word("acabac"), Word("acab")) == 4);
    CHECK(longest_common_prefix(Word(""), Word("a")) == 0);
    const std::string w = "abacaba";
    const auto radius = palindrome_radii(w);
    for (std::size_t l = 0; l <= w.size(); ++l)
        for (std::size_t r = l; r <= w.size(); ++r)
            CHECK((radius[l + r] >= r - l) == is_palindrome(std::string_view(w).substr(l, r - l)));
}
