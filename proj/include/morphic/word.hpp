#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace morphic {

// Ordered set of up to 26 distinct printable letters. The order is the one
// used when per-letter data (Fst, Lst, incidence rows) is rendered as a list.
class Alphabet {
public:
    static constexpr std::size_t max_size = 26;

    Alphabet() = default;
    explicit Alphabet(std::string_view letters);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    char operator[](std::size_t i) const { return letters_[i]; }
    const std::string& letters() const { return letters_; }

    bool contains(char c) const { return letters_.find(c) != std::string::npos; }
    // Position of `c` in the alphabet order; throws std::invalid_argument if absent.
    std::size_t index_of(char c) const;

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::string letters_;
};

// Finite word. Alphabet membership is enforced where a word meets an
// Alphabet (morphism application, parsing), not by the word itself.
class Word {
public:
    Word() = default;
    explicit Word(std::string symbols) : symbols_(std::move(symbols)) {}
    explicit Word(std::string_view symbols) : symbols_(symbols) {}
    explicit Word(const char* symbols) : symbols_(symbols) {}

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    char operator[](std::size_t i) const { return symbols_[i]; }
    char front() const { return symbols_.front(); }
    char back() const { return symbols_.back(); }

    const std::string& str() const { return symbols_; }
    std::string_view view() const { return symbols_; }

    auto begin() const { return symbols_.begin(); }
    auto end() const { return symbols_.end(); }

    Word slice(std::size_t pos, std::size_t len = std::string::npos) const {
        return Word(symbols_.substr(pos, len));
    }
    bool starts_with(const Word& w) const { return view().starts_with(w.view()); }
    bool ends_with(const Word& w) const { return view().ends_with(w.view()); }

    Word& operator+=(const Word& other) {
        symbols_ += other.symbols_;
        return *this;
    }
    Word& operator+=(char c) {
        symbols_ += c;
        return *this;
    }
    friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

    // Human-readable form: "eps" for the empty word.
    std::string display() const { return symbols_.empty() ? "eps" : symbols_; }

private:
    std::string symbols_;
};

Word power(const Word& w, std::size_t p);

Word reverse(const Word& w);
bool is_palindrome(std::string_view w);
inline bool is_palindrome(const Word& w) { return is_palindrome(w.view()); }

// Every p with 1 <= p < |w| and w_i = w_{i+p}. Throws std::domain_error on ε.
std::vector<std::size_t> periods(const Word& w);
bool has_period(const Word& w, std::size_t p);

// Returns gcd(p, q) when |w| >= p + q - gcd(p, q), nothing otherwise.
// Throws std::invalid_argument unless both p and q are periods of w.
std::optional<std::size_t> fine_wilf(const Word& w, std::size_t p, std::size_t q);

struct PrimitiveRoot {
    Word root;
    std::size_t exponent = 1;
};

// w = root^exponent with root primitive. Throws std::domain_error on ε.
PrimitiveRoot primitive_root(const Word& w);
bool is_primitive_word(const Word& w);

// Cyclic shift: w = xy with |x| = shift becomes yx.
Word rotate(const Word& w, std::size_t shift);

// Manacher radii over the separator-interleaved string (2|w|+1 centers):
// w[l, r) is a palindrome iff radius[l + r] >= r - l.
std::vector<std::size_t> palindrome_radii(std::string_view w);

std::size_t longest_common_prefix(std::string_view u, std::string_view v);
inline std::size_t longest_common_prefix(const Word& u, const Word& v) {
    return longest_common_prefix(u.view(), v.view());
}

// Points of symmetry of w: integers a in [0, n) such that w_{(a-i) mod n} = w_i
// for every i. Point a corresponds to the factorization w = pq into two
// palindromes with |p| = a + 1.
struct SymmetryPointSet {
    std::vector<std::size_t> points;  // ascending
    std::size_t word_length = 0;

    bool empty() const { return points.empty(); }
    std::size_t size() const { return points.size(); }
    bool contains(std::size_t a) const;
};

SymmetryPointSet symmetry_points(const Word& w);
bool is_symmetric(const Word& w);

// For distinct points of symmetry a, b of w returns g = gcd(|b - a|, |w|), which
// is a period of w; w is then not primitive. Throws std::invalid_argument if
// a or b is not a point of symmetry or a == b.
std::size_t two_points_imply_period(const Word& w, std::size_t a, std::size_t b);

}  // namespace morphic
