#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "morphic/fixed_point.hpp"
#include "morphic/morphism.hpp"
#include "morphic/report.hpp"

namespace morphic {

struct NamedMorphism {
    std::string name;
    Morphism morphism;
    std::vector<std::size_t> factorization;  // level-one generator indices, outermost first
};

// Reference morphisms and reference listings. Every check reads its inputs
// from here so that a corrupted entry must surface as a failing report.
struct Fixtures {
    Morphism rho;    // a->bbaba, b->bba
    Morphism theta;  // a->ab, b->ba
    Morphism tau;    // a->abbab, b->abb
    Morphism gamma;  // a->aca, b->cab, c->b
    Morphism mu;     // x->xy, y->xxy
    Morphism pi;     // x->ac, y->ab
    std::array<Morphism, 4> level_one;  // gamma0..gamma3, indexed by |φ(a)|
    Morphism g1;  // x->xy, y->x
    Morphism g2;  // x->x, y->yx
    // Level-2 stabilizer elements, named by their factorization over level_one.
    std::vector<NamedMorphism> level_two_listing;
    // The two level-3 elements outside the monoid generated by level_one.
    std::vector<NamedMorphism> level_three_exceptions;

    // Reference 40-letter prefixes of the fixed points of gamma, mu, theta, rho.
    std::string gamma_prefix, mu_prefix, theta_prefix, rho_prefix;

    static Fixtures standard();

    std::vector<std::string> names() const;
    // Throws std::invalid_argument for an unknown name.
    Morphism& by_name(const std::string& name);
};

// Alters one fixture by appending the first target letter to the image of the
// last source letter. Used to confirm that the suite notices corrupted input.
Fixtures corrupted(Fixtures f, const std::string& name);

// p_0 = b, p_{k+1} = γ(ca·p_k).
Word p_word(std::size_t k, const Morphism& gamma);
Word p_word(std::size_t k);

struct StabilizerLevel {
    std::size_t k = 0;
    std::size_t common_prefix_length = 0;  // |lcp(γ^k(π(x)), γ^k(π(y)))|
    std::vector<Morphism> elements;        // element i has |φ(a)| = i
};

// All φ with φ∘π = γ^k∘π: φ(a) ranges over the prefixes of the common prefix.
StabilizerLevel stabilizer_level(std::size_t k, const Fixtures& f);
bool in_stabilizer_level(const Morphism& phi, std::size_t k, const Fixtures& f);

// Searches all 4^k compositions of k level-one generators for φ. Returns the
// generator indices, outermost first ((2, 1) means gamma2∘gamma1). Throws
// std::invalid_argument if φ is not in level k.
std::optional<std::vector<std::size_t>> submonoid_member_level(const Morphism& phi, std::size_t k, const Fixtures& f);

struct SuiteConfig {
    std::size_t kmax = 6;
    std::size_t class_p_kmax = 5;
    std::size_t prefix_bound = 100000;
    std::size_t primitivity_maxlen = 12;
    std::size_t conjugacy_cap = 10000;
};

Report check_fixture_prefixes(const Fixtures& f);
Report check_class_p_battery(const Fixtures& f, std::size_t cap);
Report check_p_sequence(const Fixtures& f, std::size_t kmax);
Report check_palindromicity(const Fixtures& f, std::size_t kmax, std::size_t prefix_bound);
Report check_commutation(const Fixtures& f, std::size_t kmax, std::size_t decode_length = 1000);
Report check_odd_even(const Morphism& phi);
Report check_length_parity(const Fixtures& f, std::size_t kmax);
Report check_stabilizer_levels(const Fixtures& f, std::size_t kmax);
Report check_non_generation(const Fixtures& f, std::size_t kmax);
Report check_points_symmetry(const Fixtures& f, std::size_t kmax);
Report check_primitivity_preservation(const Fixtures& f, std::size_t maxlen);
Report check_no_class_p_conjugates(const Fixtures& f, std::size_t kmax, std::size_t stabilizer_kmax, std::size_t cap);
Report check_char_polys(const Fixtures& f);
Report check_rigidity_sanity(const Fixtures& f, std::size_t max_image_length = 5, std::size_t prefix_length = 400);

// Runs every check in a fixed order. A check that throws is reported as failed.
std::vector<Report> run_all(const SuiteConfig& config, const Fixtures& f = Fixtures::standard());

}  // namespace morphic
