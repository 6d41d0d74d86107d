#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "morphic/morphism.hpp"

namespace morphic {

std::string_view to_string(ShiftDirection d) { return d == ShiftDirection::right ? "right" : "left"; }

std::string_view to_string(EnumerationStatus s) {
    switch (s) {
        case EnumerationStatus::complete: return "complete";
        case EnumerationStatus::cyclic: return "cyclic";
        case EnumerationStatus::cap_reached: return "cap_reached";
    }
    return "unknown";
}

std::optional<Morphism> right_conjugate_by(const Morphism& phi, const Word& w) {
    std::vector<Word> images;
    for (const auto& img : phi.images()) {
        Word shifted = img + w;
        if (!shifted.starts_with(w)) return std::nullopt;
        images.push_back(shifted.slice(w.size()));
    }
    return Morphism(phi.source(), phi.target(), std::move(images));
}

std::optional<Morphism> left_conjugate_by(const Morphism& phi, const Word& w) {
    std::vector<Word> images;
    for (const auto& img : phi.images()) {
        Word shifted = w + img;
        if (!shifted.ends_with(w)) return std::nullopt;
        images.push_back(shifted.slice(0, img.size()));
    }
    return Morphism(phi.source(), phi.target(), std::move(images));
}

namespace {

struct Chain {
    std::vector<Word> shifts;  // nonempty shifts, increasing length
    bool cap_reached = false;
};

// Valid right shifts are closed under prefixes, and a valid w extends by at
// most one letter: every nonerasing image forces the letter at position |w|
// of φ(α)·w. The chain is therefore walked one letter at a time.
Chain right_shift_chain(const Morphism& phi, std::size_t max_len, std::size_t cap) {
    Chain chain;
    std::vector<const Word*> nonerasing;
    for (const auto& img : phi.images())
        if (!img.empty()) nonerasing.push_back(&img);
    if (nonerasing.empty()) return chain;

    std::string w;
    while (w.size() < max_len) {
        auto forced = [&](const Word& img) { return w.size() < img.size() ? img[w.size()] : w[w.size() - img.size()]; };
        const char next = forced(*nonerasing.front());
        if (!std::all_of(nonerasing.begin(), nonerasing.end(), [&](const Word* img) { return forced(*img) == next; }))
            break;
        if (w.size() + 1 > cap) {
            chain.cap_reached = true;
            break;
        }
        w += next;
        chain.shifts.emplace_back(w);
    }
    return chain;
}

// Primitive root shared by all nonempty images, if any.
std::optional<Word> common_root(const Morphism& phi) {
    std::optional<Word> root;
    for (const auto& img : phi.images()) {
        if (img.empty()) continue;
        Word r = primitive_root(img).root;
        if (root && *root != r) return std::nullopt;
        root = std::move(r);
    }
    return root;
}

}  // namespace

ConjugateEnumeration enumerate_conjugates(const Morphism& phi, std::size_t cap) {
    ConjugateEnumeration out;
    out.conjugates.push_back({ShiftDirection::right, Word(), phi});

    auto add = [&](ShiftDirection dir, Word shift, Morphism result) {
        const bool seen = std::any_of(out.conjugates.begin(), out.conjugates.end(),
                                      [&](const ConjugacyWitness& c) { return c.result == result; });
        if (!seen) out.conjugates.push_back({dir, std::move(shift), std::move(result)});
    };

    std::size_t max_len = static_cast<std::size_t>(-1);
    if (const auto root = common_root(phi)) {
        // Every prefix of root^ω is a valid shift; one period lists each rotation once.
        out.status = EnumerationStatus::cyclic;
        max_len = root->size() - 1;
    } else if (std::all_of(phi.images().begin(), phi.images().end(), [](const Word& w) { return w.empty(); })) {
        // Every word is a valid shift, always giving φ back.
        return out;
    }

    const Chain right = right_shift_chain(phi, max_len, cap);
    const Chain left = right_shift_chain(mirror(phi), max_len, cap);
    if (right.cap_reached || left.cap_reached) out.status = EnumerationStatus::cap_reached;

    for (const auto& w : right.shifts) add(ShiftDirection::right, w, *right_conjugate_by(phi, w));
    for (const auto& w : left.shifts) {
        const Word shift = reverse(w);
        add(ShiftDirection::left, shift, *left_conjugate_by(phi, shift));
    }
    return out;
}

std::vector<ClassPWitness> class_p_witnesses(const Morphism& phi) {
    std::vector<ClassPWitness> out;
    const auto& imgs = phi.images();
    if (imgs.empty()) return out;
    std::size_t common = imgs.front().size();
    for (const auto& img : imgs) common = std::min(common, longest_common_prefix(imgs.front(), img));
    for (std::size_t len = 0; len <= common; ++len) {
        const std::string_view p = imgs.front().view().substr(0, len);
        if (!is_palindrome(p)) continue;
        ClassPWitness witness{Word(p), {}};
        bool ok = true;
        for (const auto& img : imgs) {
            if (!is_palindrome(img.view().substr(len))) {
                ok = false;
                break;
            }
            witness.q.push_back(img.slice(len));
        }
        if (ok) out.push_back(std::move(witness));
    }
    return out;
}

std::optional<ClassPWitness> is_class_p(const Morphism& phi) {
    auto all = class_p_witnesses(phi);
    if (all.empty()) return std::nullopt;
    return std::move(all.back());
}

std::optional<unsigned long long> common_symmetry_residue(const Morphism& phi) {
    using u128 = unsigned __int128;
    constexpr std::size_t max_residues = 1u << 20;

    // Inverse of a modulo m, gcd(a, m) = 1.
    auto inverse = [](long long a, long long m) {
        long long old_r = a % m, r = m, old_s = 1, s = 0;
        while (r != 0) {
            const long long q = old_r / r;
            std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
            std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        }
        return ((old_s % m) + m) % m;
    };

    // Candidates are kept as a residue set modulo the lcm of lengths seen so far.
    unsigned long long modulus = 1;
    std::vector<unsigned long long> residues{0};
    for (const auto& img : phi.images()) {
        if (img.empty()) continue;
        const auto points = symmetry_points(img).points;
        if (points.empty()) return std::nullopt;
        const unsigned long long n = img.size();
        const unsigned long long g = std::gcd(modulus, n);
        const u128 next_modulus = static_cast<u128>(modulus / g) * n;
        if (next_modulus > (u128(1) << 62)) throw std::overflow_error("common_symmetry_residue: modulus overflow");
        const unsigned long long step = n / g;
        const unsigned long long inv =
            step == 1 ? 0
                      : static_cast<unsigned long long>(
                            inverse(static_cast<long long>((modulus / g) % step), static_cast<long long>(step)));
        std::set<unsigned long long> combined;
        for (const auto r : residues) {
            for (const auto s : points) {
                if (r % g != s % g) continue;
                // x = r + modulus·t with modulus·t ≡ s - r (mod n).
                const unsigned long long diff = ((s % n) + n - (r % n)) % n / g;
                const unsigned long long t =
                    step == 1 ? 0 : static_cast<unsigned long long>((static_cast<u128>(diff % step) * inv) % step);
                combined.insert(static_cast<unsigned long long>((r + static_cast<u128>(modulus) * t) % next_modulus));
            }
        }
        if (combined.empty()) return std::nullopt;
        if (combined.size() > max_residues) throw std::overflow_error("common_symmetry_residue: too many residues");
        residues.assign(combined.begin(), combined.end());
        modulus = static_cast<unsigned long long>(next_modulus);
    }
    return residues.front();
}

ClassPConjugateSearch has_conjugate_in_class_p(const Morphism& phi, std::size_t cap, bool use_filter) {
    ClassPConjugateSearch out;
    if (use_filter && !common_symmetry_residue(phi)) {
        out.rejected_by_symmetry_filter = true;
        return out;
    }
    auto conjugates = enumerate_conjugates(phi, cap);
    out.status = conjugates.status;
    for (auto& c : conjugates.conjugates) {
        if (auto w = is_class_p(c.result)) {
            out.found = ClassPConjugate{std::move(c), std::move(*w)};
            break;
        }
    }
    return out;
}

}  // namespace morphic
