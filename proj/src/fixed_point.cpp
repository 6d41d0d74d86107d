#include "morphic/fixed_point.hpp"

#include <algorithm>
#include <stdexcept>

namespace morphic {

FixedPointStream::FixedPointStream(Morphism generator, char seed) : generator_(std::move(generator)), seed_(seed) {
    if (!generator_.is_endomorphism()) throw std::domain_error("fixed point: morphism is not an endomorphism");
    const auto prolongable = prolongable_letters(generator_);
    if (std::find(prolongable.begin(), prolongable.end(), seed) == prolongable.end())
        throw std::domain_error(std::string("morphism ") + generator_.literal() + " is not prolongable at '" + seed + "'");
    cache_ = generator_.image(seed).str();
    expanded_ = 1;
}

void FixedPointStream::grow_to(std::size_t n) {
    while (cache_.size() < n) {
        if (expanded_ >= cache_.size())
            throw std::domain_error("fixed point of " + generator_.literal() + " is finite (length " +
                                    std::to_string(cache_.size()) + ")");
        cache_ += generator_.image(cache_[expanded_++]).str();
    }
}

std::string_view FixedPointStream::prefix_view(std::size_t n) {
    grow_to(n);
    return std::string_view(cache_).substr(0, n);
}

Word FixedPointStream::prefix(std::size_t n) { return Word(prefix_view(n)); }

FixedPointStream fixed_point(const Morphism& phi, char seed) { return FixedPointStream(phi, seed); }

std::optional<std::size_t> find_factor(FixedPointStream& s, const Word& f, std::size_t bound) {
    if (bound < f.size()) throw std::invalid_argument("find_factor: bound shorter than the factor");
    const auto pos = s.prefix_view(bound).find(f.view());
    if (pos == std::string_view::npos) return std::nullopt;
    return pos;
}

bool PalindromeCensus::contains_length(std::size_t len) const { return first_position(len).has_value(); }

std::optional<std::size_t> PalindromeCensus::first_position(std::size_t len) const {
    const auto it = std::lower_bound(found.begin(), found.end(), std::make_pair(len, std::size_t{0}));
    if (it == found.end() || it->first != len) return std::nullopt;
    return it->second;
}

PalindromeCensus palindrome_census(std::string_view w) {
    PalindromeCensus census;
    census.scanned_length = w.size();
    const auto radius = palindrome_radii(w);
    // Lengths of one parity seen so far always form {parity, parity+2, ..., max},
    // and the first center reaching a length gives its first occurrence.
    std::size_t next_len[2] = {2, 1};
    for (std::size_t center = 0; center < radius.size(); ++center) {
        const std::size_t r = radius[center];
        auto& next = next_len[r % 2];
        for (; next <= r; next += 2) census.found.emplace_back(next, (center - next) / 2);
    }
    std::sort(census.found.begin(), census.found.end());
    return census;
}

PalindromeCensus palindrome_census(FixedPointStream& s, std::size_t n) { return palindrome_census(s.prefix_view(n)); }

bool is_fixed_by(const Morphism& phi, FixedPointStream& s, std::size_t n) {
    const Word reference = s.prefix(n);
    // Erasing images may need source letters past n before n letters are produced.
    const std::size_t read_limit = 2 * n + 2;
    std::string image;
    for (std::size_t i = 0; i < read_limit && image.size() < n; ++i) {
        const char c = s.prefix_view(i + 1)[i];
        if (!phi.source().contains(c)) return false;
        const std::size_t start = image.size();
        image += phi.image(c).str();
        const std::size_t end = std::min(image.size(), n);
        if (start < end && std::string_view(image).substr(start, end - start) != reference.view().substr(start, end - start))
            return false;
    }
    return image.size() >= n;
}

}  // namespace morphic
