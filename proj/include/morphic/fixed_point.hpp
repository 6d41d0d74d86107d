#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "morphic/morphism.hpp"

namespace morphic {

// Lazily expanded fixed point of a morphism prolongable at `seed`.
//
// The cache always equals φ(cache[0, expanded)), so growing it only appends
// the image of the next unexpanded letter. A stream is not internally
// synchronized: confine it to one thread or lock around it. Distinct streams
// share nothing.
class FixedPointStream {
public:
    // Throws std::domain_error if φ is not prolongable at `seed`.
    FixedPointStream(Morphism generator, char seed);

    const Morphism& generator() const { return generator_; }
    char seed() const { return seed_; }
    std::size_t cached_length() const { return cache_.size(); }

    // First n letters. Throws std::domain_error if the fixed point is finite
    // and shorter than n (possible only for erasing generators).
    Word prefix(std::size_t n);
    std::string_view prefix_view(std::size_t n);

private:
    void grow_to(std::size_t n);

    Morphism generator_;
    char seed_;
    std::string cache_;
    std::size_t expanded_ = 0;
};

FixedPointStream fixed_point(const Morphism& phi, char seed);

// Least start position of f inside prefix(bound), if any.
// Throws std::invalid_argument when bound < |f|.
std::optional<std::size_t> find_factor(FixedPointStream& s, const Word& f, std::size_t bound);

struct PalindromeCensus {
    std::size_t scanned_length = 0;
    // (length, first start position), ascending length, one entry per length.
    std::vector<std::pair<std::size_t, std::size_t>> found;

    bool contains_length(std::size_t len) const;
    std::optional<std::size_t> first_position(std::size_t len) const;
};

// Every palindrome length occurring in the scanned word, with first occurrences.
PalindromeCensus palindrome_census(std::string_view w);
PalindromeCensus palindrome_census(FixedPointStream& s, std::size_t n);

// Finite evidence, not proof: true iff φ(x) and x agree on their first n
// letters, where x is the stream. Reads at most 2n + 2 letters of x so that
// erasing images can still produce n letters; false if they do not, or if a
// letter outside φ's source is met.
bool is_fixed_by(const Morphism& phi, FixedPointStream& s, std::size_t n);

}  // namespace morphic
