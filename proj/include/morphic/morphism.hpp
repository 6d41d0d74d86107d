#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "morphic/polynomial.hpp"
#include "morphic/word.hpp"

namespace morphic {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Morphism of free monoids source* -> target*, given by one image per source
// letter. Equality is extensional: same alphabets and same images.
class Morphism {
public:
    Morphism() = default;
    // images[i] is the image of source[i]; every image letter must be in target.
    Morphism(Alphabet source, Alphabet target, std::vector<Word> images);
    // Endomorphism shorthand.
    Morphism(Alphabet alphabet, std::vector<Word> images);

    static Morphism identity(const Alphabet& alphabet);

    const Alphabet& source() const { return source_; }
    const Alphabet& target() const { return target_; }
    const std::vector<Word>& images() const { return images_; }
    const Word& image(char letter) const { return images_[source_.index_of(letter)]; }
    const Word& image_at(std::size_t i) const { return images_[i]; }

    bool is_endomorphism() const { return source_ == target_; }
    bool is_erasing() const;
    bool is_identity() const;

    // Bit-exact literal, e.g. "a->aca,b->cab,c->b"; empty images as "-".
    std::string literal() const;

    friend bool operator==(const Morphism&, const Morphism&) = default;

private:
    Alphabet source_;
    Alphabet target_;
    std::vector<Word> images_;
};

// Parses `letter "->" word { ("," | ";") letter "->" word }`, whitespace
// ignored, "-" for the empty image. Without a declared source alphabet the
// source letters are taken in order of appearance. Without a declared target,
// target = source when every image letter is a source letter, otherwise the
// source letters followed by the new image letters in order of appearance.
Morphism parse_morphism(std::string_view text, std::optional<Alphabet> source = std::nullopt,
                        std::optional<Alphabet> target = std::nullopt);

Word apply(const Morphism& phi, const Word& w);
// phi ∘ psi: first psi, then phi.
Morphism compose(const Morphism& phi, const Morphism& psi);
Morphism power(const Morphism& phi, std::size_t k);
Morphism mirror(const Morphism& phi);

// First / last letter of each image, in source alphabet order.
// Throw std::domain_error for erasing morphisms.
std::vector<char> fst(const Morphism& phi);
std::vector<char> lst(const Morphism& phi);

// Letters a with phi(a) = a·w, w nonempty.
std::vector<char> prolongable_letters(const Morphism& phi);

// entries[row][col] = occurrences of target letter `row` in the image of source letter `col`.
struct IncidenceMatrix {
    std::vector<std::vector<long long>> entries;

    std::size_t rows() const { return entries.size(); }
    std::size_t cols() const { return entries.empty() ? 0 : entries.front().size(); }
};

IncidenceMatrix incidence_matrix(const Morphism& phi);
bool is_primitive_morphism(const Morphism& phi);
// det(xI - M) by cofactor expansion; throws std::invalid_argument for non-square M.
Polynomial char_poly(const IncidenceMatrix& m);

// Conjugacy: φ(α)·w = w·φ'(α) for every letter gives φ' by a *right* shift
// of w; w·φ(α) = φ'(α)·w gives φ' by a *left* shift. The two are inverse:
// if φ' is the right shift of φ by w then φ is the left shift of φ' by w.
enum class ShiftDirection { right, left };

std::string_view to_string(ShiftDirection d);

struct ConjugacyWitness {
    ShiftDirection direction = ShiftDirection::right;
    Word shift;
    Morphism result;
};

std::optional<Morphism> right_conjugate_by(const Morphism& phi, const Word& w);
std::optional<Morphism> left_conjugate_by(const Morphism& phi, const Word& w);

enum class EnumerationStatus {
    complete,     // every shift chain ended naturally
    cyclic,       // all nonempty images are powers of one primitive word; one full cycle listed
    cap_reached,  // a chain was still extending when the shift length hit the cap
};

std::string_view to_string(EnumerationStatus s);

struct ConjugateEnumeration {
    std::vector<ConjugacyWitness> conjugates;  // deduplicated; phi itself first (shift ε)
    EnumerationStatus status = EnumerationStatus::complete;
};

ConjugateEnumeration enumerate_conjugates(const Morphism& phi, std::size_t cap);

struct ClassPWitness {
    Word p;
    std::vector<Word> q;  // q[i] is the palindrome for source letter i
};

// All class-P decompositions φ(α) = p·q_α, ordered by increasing |p|.
std::vector<ClassPWitness> class_p_witnesses(const Morphism& phi);
// The decomposition with the longest p, if any.
std::optional<ClassPWitness> is_class_p(const Morphism& phi);

// Necessary condition for having a class-P conjugate: some integer a such that
// every nonempty image has a point of symmetry at a mod its length. Returns
// the least such a.
std::optional<unsigned long long> common_symmetry_residue(const Morphism& phi);

struct ClassPConjugate {
    ConjugacyWitness conjugacy;
    ClassPWitness decomposition;
};

struct ClassPConjugateSearch {
    std::optional<ClassPConjugate> found;
    EnumerationStatus status = EnumerationStatus::complete;
    bool rejected_by_symmetry_filter = false;
};

// Tries φ and every conjugate of φ. With `use_filter`, morphisms failing
// common_symmetry_residue are rejected without enumeration.
ClassPConjugateSearch has_conjugate_in_class_p(const Morphism& phi, std::size_t cap, bool use_filter = true);

// Image set is a prefix code: nonempty, pairwise distinct, none a prefix of another.
bool is_prefix_code(const Morphism& code);
// Preimage of w under the coding morphism, or nothing if w does not factor.
// Throws std::domain_error if the images do not form a prefix code.
std::optional<Word> decode_prefix_code(const Morphism& code, const Word& w);

}  // namespace morphic
