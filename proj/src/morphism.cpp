#include "morphic/morphism.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace morphic {

Morphism::Morphism(Alphabet source, Alphabet target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.size())
        throw std::invalid_argument("morphism needs exactly one image per source letter");
    for (const auto& img : images_)
        for (char c : img)
            if (!target_.contains(c))
                throw std::invalid_argument(std::string("image letter '") + c + "' is not in the target alphabet");
}

Morphism::Morphism(Alphabet alphabet, std::vector<Word> images) : Morphism(alphabet, alphabet, std::move(images)) {}

Morphism Morphism::identity(const Alphabet& alphabet) {
    std::vector<Word> images;
    for (char c : alphabet) images.emplace_back(std::string(1, c));
    return Morphism(alphabet, std::move(images));
}

bool Morphism::is_erasing() const {
    return std::any_of(images_.begin(), images_.end(), [](const Word& w) { return w.empty(); });
}

bool Morphism::is_identity() const {
    if (!is_endomorphism()) return false;
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i].size() != 1 || images_[i][0] != source_[i]) return false;
    return true;
}

std::string Morphism::literal() const {
    std::string out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) out += ',';
        out += source_[i];
        out += "->";
        out += images_[i].empty() ? std::string("-") : images_[i].str();
    }
    return out;
}

namespace {

bool is_letter(char c) {
    return std::isgraph(static_cast<unsigned char>(c)) && c != '-' && c != '>' && c != ',' && c != ';';
}

}  // namespace

Morphism parse_morphism(std::string_view text, std::optional<Alphabet> source, std::optional<Alphabet> target) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty morphism literal");

    std::string letters;
    std::vector<std::string> images;
    std::size_t i = 0;
    while (true) {
        if (i >= s.size() || !is_letter(s[i])) throw ParseError("expected a source letter at offset " + std::to_string(i));
        const char letter = s[i++];
        if (letters.find(letter) != std::string::npos)
            throw ParseError(std::string("repeated source letter '") + letter + "'");
        if (s.compare(i, 2, "->") != 0) throw ParseError(std::string("expected \"->\" after '") + letter + "'");
        i += 2;
        std::string image;
        if (i < s.size() && s[i] == '-') {
            ++i;
        } else {
            while (i < s.size() && s[i] != ',' && s[i] != ';') {
                if (!is_letter(s[i])) throw ParseError(std::string("invalid image symbol '") + s[i] + "'");
                image += s[i++];
            }
            if (image.empty()) throw ParseError(std::string("empty image for '") + letter + "' (write \"-\" for ε)");
        }
        letters += letter;
        images.push_back(std::move(image));
        if (i == s.size()) break;
        if (s[i] != ',' && s[i] != ';') throw ParseError("expected ',' or ';' at offset " + std::to_string(i));
        ++i;
    }

    Alphabet src;
    try {
        src = source ? *source : Alphabet(letters);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    if (src.size() != letters.size()) throw ParseError("literal does not define exactly the declared source letters");
    std::vector<Word> ordered(src.size());
    for (std::size_t k = 0; k < letters.size(); ++k) {
        if (!src.contains(letters[k]))
            throw ParseError(std::string("source letter '") + letters[k] + "' is not in the declared alphabet");
        ordered[src.index_of(letters[k])] = Word(images[k]);
    }

    Alphabet tgt;
    if (target) {
        tgt = *target;
    } else {
        std::string extended = src.letters();
        for (const auto& img : images)
            for (char c : img)
                if (extended.find(c) == std::string::npos) extended += c;
        try {
            tgt = Alphabet(extended);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    for (const auto& img : ordered)
        for (char c : img)
            if (!tgt.contains(c)) throw ParseError(std::string("image letter '") + c + "' is not in the declared alphabet");
    return Morphism(std::move(src), std::move(tgt), std::move(ordered));
}

Word apply(const Morphism& phi, const Word& w) {
    std::string out;
    for (char c : w) out += phi.image(c).str();
    return Word(std::move(out));
}

Morphism compose(const Morphism& phi, const Morphism& psi) {
    if (!(psi.target() == phi.source())) throw std::invalid_argument("compose: alphabet mismatch");
    std::vector<Word> images;
    images.reserve(psi.images().size());
    for (const auto& img : psi.images()) images.push_back(apply(phi, img));
    return Morphism(psi.source(), phi.target(), std::move(images));
}

Morphism power(const Morphism& phi, std::size_t k) {
    if (!phi.is_endomorphism()) throw std::invalid_argument("power: morphism is not an endomorphism");
    Morphism out = Morphism::identity(phi.source());
    for (std::size_t i = 0; i < k; ++i) out = compose(phi, out);
    return out;
}

Morphism mirror(const Morphism& phi) {
    std::vector<Word> images;
    for (const auto& img : phi.images()) images.push_back(reverse(img));
    return Morphism(phi.source(), phi.target(), std::move(images));
}

std::vector<char> fst(const Morphism& phi) {
    if (phi.is_erasing()) throw std::domain_error("fst: morphism is erasing");
    std::vector<char> out;
    for (const auto& img : phi.images()) out.push_back(img.front());
    return out;
}

std::vector<char> lst(const Morphism& phi) {
    if (phi.is_erasing()) throw std::domain_error("lst: morphism is erasing");
    std::vector<char> out;
    for (const auto& img : phi.images()) out.push_back(img.back());
    return out;
}

std::vector<char> prolongable_letters(const Morphism& phi) {
    std::vector<char> out;
    for (std::size_t i = 0; i < phi.source().size(); ++i) {
        const auto& img = phi.image_at(i);
        if (img.size() >= 2 && img.front() == phi.source()[i]) out.push_back(phi.source()[i]);
    }
    return out;
}

IncidenceMatrix incidence_matrix(const Morphism& phi) {
    IncidenceMatrix m;
    m.entries.assign(phi.target().size(), std::vector<long long>(phi.source().size(), 0));
    for (std::size_t col = 0; col < phi.source().size(); ++col)
        for (char c : phi.image_at(col)) ++m.entries[phi.target().index_of(c)][col];
    return m;
}

bool is_primitive_morphism(const Morphism& phi) {
    if (!phi.is_endomorphism()) throw std::invalid_argument("is_primitive_morphism: source and target differ");
    const std::size_t n = phi.source().size();
    if (n == 0) return false;
    using Bool = std::vector<std::vector<char>>;
    const auto m = incidence_matrix(phi);
    Bool base(n, std::vector<char>(n, 0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) base[r][c] = m.entries[r][c] > 0;
    auto positive = [&](const Bool& b) {
        return std::all_of(b.begin(), b.end(), [](const auto& row) {
            return std::all_of(row.begin(), row.end(), [](char v) { return v != 0; });
        });
    };
    // Wielandt: a primitive n×n matrix has a positive power with exponent <= n² - 2n + 2.
    const std::size_t bound = n * n - 2 * n + 2;
    Bool acc = base;
    for (std::size_t k = 1; k <= bound; ++k) {
        if (positive(acc)) return true;
        Bool next(n, std::vector<char>(n, 0));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t t = 0; t < n; ++t)
                if (acc[r][t])
                    for (std::size_t c = 0; c < n; ++c) next[r][c] |= base[t][c];
        acc = std::move(next);
    }
    return false;
}

Polynomial char_poly(const IncidenceMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("char_poly: matrix is not square");
    if (n > 20) throw std::invalid_argument("char_poly: matrix too large for cofactor expansion");
    auto entry = [&](std::size_t r, std::size_t c) {
        Polynomial e = Polynomial::constant(-m.entries[r][c]);
        if (r == c) e += Polynomial::x();
        return e;
    };
    // Laplace expansion along successive rows, memoized on the set of used columns.
    std::map<unsigned, Polynomial> memo;
    auto det = [&](auto&& self, std::size_t row, unsigned used) -> Polynomial {
        if (row == n) return Polynomial::constant(1);
        if (auto it = memo.find(used); it != memo.end()) return it->second;
        Polynomial acc;
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (used & (1u << c)) continue;
            const Polynomial e = entry(row, c);
            if (!e.is_zero()) {
                const Polynomial term = e * self(self, row + 1, used | (1u << c));
                if (sign > 0)
                    acc += term;
                else
                    acc -= term;
            }
            sign = -sign;
        }
        memo.emplace(used, acc);
        return acc;
    };
    return det(det, 0, 0u);
}

bool is_prefix_code(const Morphism& code) {
    const auto& imgs = code.images();
    for (std::size_t i = 0; i < imgs.size(); ++i) {
        if (imgs[i].empty()) return false;
        for (std::size_t j = 0; j < imgs.size(); ++j)
            if (i != j && imgs[j].starts_with(imgs[i])) return false;
    }
    return true;
}

std::optional<Word> decode_prefix_code(const Morphism& code, const Word& w) {
    if (!is_prefix_code(code)) throw std::domain_error("decode_prefix_code: images do not form a prefix code");
    std::string out;
    std::size_t pos = 0;
    const auto view = w.view();
    while (pos < view.size()) {
        bool matched = false;
        for (std::size_t i = 0; i < code.images().size(); ++i) {
            const auto& img = code.image_at(i);
            if (view.substr(pos).starts_with(img.view())) {
                out += code.source()[i];
                pos += img.size();
                matched = true;
                break;
            }
        }
        if (!matched) return std::nullopt;
    }
    return Word(std::move(out));
}

}  // namespace morphic
