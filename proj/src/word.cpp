#include "morphic/word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace morphic {

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
    if (letters_.size() > max_size)
        throw std::invalid_argument("alphabet has more than 26 letters");
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        const char c = letters_[i];
        if (!std::isgraph(static_cast<unsigned char>(c)) || c == '-' || c == '>' || c == ',' || c == ';')
            throw std::invalid_argument(std::string("invalid letter '") + c + "'");
        if (letters_.find(c, i + 1) != std::string::npos)
            throw std::invalid_argument(std::string("repeated letter '") + c + "' in alphabet");
    }
}

std::size_t Alphabet::index_of(char c) const {
    const auto pos = letters_.find(c);
    if (pos == std::string::npos)
        throw std::invalid_argument(std::string("letter '") + c + "' is not in alphabet \"" + letters_ + "\"");
    return pos;
}

Word power(const Word& w, std::size_t p) {
    std::string out;
    out.reserve(w.size() * p);
    for (std::size_t i = 0; i < p; ++i) out += w.str();
    return Word(std::move(out));
}

Word reverse(const Word& w) { return Word(std::string(w.str().rbegin(), w.str().rend())); }

bool is_palindrome(std::string_view w) { return std::equal(w.begin(), w.begin() + w.size() / 2, w.rbegin()); }

bool has_period(const Word& w, std::size_t p) {
    if (p == 0 || p >= w.size()) return false;
    return w.view().substr(p) == w.view().substr(0, w.size() - p);
}

std::vector<std::size_t> periods(const Word& w) {
    if (w.empty()) throw std::domain_error("periods of the empty word are undefined");
    std::vector<std::size_t> out;
    for (std::size_t p = 1; p < w.size(); ++p)
        if (has_period(w, p)) out.push_back(p);
    return out;
}

std::optional<std::size_t> fine_wilf(const Word& w, std::size_t p, std::size_t q) {
    if (!has_period(w, p) || !has_period(w, q))
        throw std::invalid_argument("fine_wilf: p and q must both be periods of w");
    const std::size_t g = std::gcd(p, q);
    if (w.size() + g < p + q) return std::nullopt;
    if (g != p && g != q && !has_period(w, g))
        throw std::logic_error("fine_wilf: gcd is not a period of " + w.str());
    return g;
}

PrimitiveRoot primitive_root(const Word& w) {
    if (w.empty()) throw std::domain_error("primitive root of the empty word is undefined");
    // The smallest interior occurrence of w in ww is the root length.
    const std::string doubled = w.str() + w.str();
    const std::size_t d = doubled.find(w.str(), 1);
    return {w.slice(0, d), w.size() / d};
}

bool is_primitive_word(const Word& w) { return primitive_root(w).exponent == 1; }

Word rotate(const Word& w, std::size_t shift) {
    if (shift > w.size()) throw std::invalid_argument("rotate: shift exceeds word length");
    return w.slice(shift) + w.slice(0, shift);
}

std::size_t longest_common_prefix(std::string_view u, std::string_view v) {
    const auto [iu, iv] = std::mismatch(u.begin(), u.end(), v.begin(), v.end());
    return static_cast<std::size_t>(iu - u.begin());
}

bool SymmetryPointSet::contains(std::size_t a) const { return std::binary_search(points.begin(), points.end(), a); }

std::vector<std::size_t> palindrome_radii(std::string_view w) {
    const std::size_t m = 2 * w.size() + 1;
    auto at = [&](std::size_t i) -> int { return (i % 2 == 0) ? -1 : static_cast<unsigned char>(w[i / 2]); };
    std::vector<std::size_t> radius(m, 0);
    std::size_t center = 0, right = 0;
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t r = 0;
        if (i < right) r = std::min(right - i, radius[2 * center - i]);
        while (r + 1 <= i && i + r + 1 < m && at(i - r - 1) == at(i + r + 1)) ++r;
        radius[i] = r;
        if (i + r > right) {
            center = i;
            right = i + r;
        }
    }
    return radius;
}


SymmetryPointSet symmetry_points(const Word& w) {
    SymmetryPointSet out;
    out.word_length = w.size();
    const std::size_t n = w.size();
    if (n == 0) return out;
    const auto radius = palindrome_radii(w.view());
    auto palindrome = [&](std::size_t l, std::size_t r) { return l == r || radius[l + r] >= r - l; };
    for (std::size_t a = 0; a < n; ++a)
        if (palindrome(0, a + 1) && palindrome(a + 1, n)) out.points.push_back(a);
    return out;
}

bool is_symmetric(const Word& w) { return !symmetry_points(w).empty(); }

std::size_t two_points_imply_period(const Word& w, std::size_t a, std::size_t b) {
    const auto pts = symmetry_points(w);
    if (a == b || !pts.contains(a) || !pts.contains(b))
        throw std::invalid_argument("two_points_imply_period: need two distinct points of symmetry");
    const std::size_t g = std::gcd(a > b ? a - b : b - a, w.size());
    if (!has_period(w, g) || is_primitive_word(w))
        throw std::logic_error("two points of symmetry without a proper period in " + w.str());
    return g;
}

}  // namespace morphic
