#include "morphic/suite.hpp"

#include <algorithm>
#include <exception>
#include <functional>

namespace morphic {

using json = nlohmann::ordered_json;

namespace {

const Word aca("aca");

std::string letters_of(const std::vector<char>& v) { return std::string(v.begin(), v.end()); }

Report make_report(std::string name, json bounds = json::object()) {
    Report r;
    r.check = std::move(name);
    r.bounds = std::move(bounds);
    return r;
}

Report skipped(std::string name, json bounds, std::string reason) {
    Report r = make_report(std::move(name), std::move(bounds));
    r.status = CheckStatus::skipped;
    r.witness = {{"reason", std::move(reason)}};
    return r;
}

// π must send x and y to two-letter words sharing their first letter.
void require_block_coding(const Fixtures& f) {
    const auto& imgs = f.pi.images();
    if (imgs.size() != 2 || imgs[0].size() != 2 || imgs[1].size() != 2 || imgs[0][0] != imgs[1][0])
        throw std::invalid_argument("pi fixture is not a two-letter block coding: " + f.pi.literal());
}

json witness_json(const ClassPConjugate& c) {
    std::vector<std::string> q;
    for (const auto& w : c.decomposition.q) q.push_back(w.str());
    return {{"direction", std::string(to_string(c.conjugacy.direction))},
            {"shift", c.conjugacy.shift.str()},
            {"conjugate", c.conjugacy.result.literal()},
            {"p", c.decomposition.p.str()},
            {"q", q}};
}

}  // namespace

Word p_word(std::size_t k, const Morphism& gamma) {
    Word p("b");
    const Word ca("ca");
    for (std::size_t i = 0; i < k; ++i) p = apply(gamma, ca + p);
    return p;
}

Word p_word(std::size_t k) { return p_word(k, Fixtures::standard().gamma); }

StabilizerLevel stabilizer_level(std::size_t k, const Fixtures& f) {
    require_block_coding(f);
    const Morphism gk = power(f.gamma, k);
    const Word tx = apply(gk, f.pi.image_at(0));
    const Word ty = apply(gk, f.pi.image_at(1));
    const char head = f.pi.image_at(0)[0];
    const char cx = f.pi.image_at(0)[1];
    const char cy = f.pi.image_at(1)[1];
    const Alphabet& abc = f.gamma.source();

    StabilizerLevel level;
    level.k = k;
    level.common_prefix_length = longest_common_prefix(tx, ty);
    for (std::size_t len = 0; len <= level.common_prefix_length; ++len) {
        std::vector<Word> images(abc.size());
        images[abc.index_of(head)] = tx.slice(0, len);
        images[abc.index_of(cx)] = tx.slice(len);
        images[abc.index_of(cy)] = ty.slice(len);
        level.elements.emplace_back(abc, abc, std::move(images));
    }
    return level;
}

bool in_stabilizer_level(const Morphism& phi, std::size_t k, const Fixtures& f) {
    return compose(phi, f.pi) == compose(power(f.gamma, k), f.pi);
}

std::optional<std::vector<std::size_t>> submonoid_member_level(const Morphism& phi, std::size_t k, const Fixtures& f) {
    if (!in_stabilizer_level(phi, k, f))
        throw std::invalid_argument("submonoid_member_level: morphism is not in level " + std::to_string(k));
    const std::size_t g = f.level_one.size();
    std::vector<std::size_t> idx(k, 0);
    while (true) {
        Morphism product = Morphism::identity(phi.source());
        for (std::size_t i = k; i-- > 0;) product = compose(f.level_one[idx[i]], product);
        if (product == phi) return idx;
        std::size_t pos = k;
        while (pos > 0 && ++idx[pos - 1] == g) idx[--pos] = 0;
        if (pos == 0) return std::nullopt;
    }
}

Report check_fixture_prefixes(const Fixtures& f) {
    Report r = make_report("fixture_prefixes", {{"length", 40}});
    struct Case {
        const char* name;
        const Morphism* morphism;
        char seed;
        const std::string* expected;
    };
    const Case cases[] = {{"gamma", &f.gamma, 'a', &f.gamma_prefix},
                          {"mu", &f.mu, 'x', &f.mu_prefix},
                          {"theta", &f.theta, 'a', &f.theta_prefix},
                          {"rho", &f.rho, 'b', &f.rho_prefix}};
    for (const auto& c : cases) {
        FixedPointStream s(*c.morphism, c.seed);
        const Word got = s.prefix(c.expected->size());
        if (got.str() != *c.expected)
            r.fail({{"fixture", c.name}, {"expected", *c.expected}, {"actual", got.str()}});
    }
    return r;
}

Report check_class_p_battery(const Fixtures& f, std::size_t cap) {
    Report r = make_report("class_p_battery", {{"conjugacy_cap", cap}});
    const Morphism theta2 = power(f.theta, 2);
    const std::pair<const char*, std::pair<const Morphism*, bool>> membership[] = {
        {"rho", {&f.rho, true}}, {"theta^2", {&theta2, true}}, {"theta", {&f.theta, false}},
        {"tau", {&f.tau, false}}, {"gamma", {&f.gamma, false}}};
    for (const auto& [name, entry] : membership) {
        const bool got = is_class_p(*entry.first).has_value();
        if (got != entry.second)
            r.fail({{"property", "class_p"}, {"morphism", name}, {"expected", entry.second}, {"actual", got}});
    }

    const auto tau_search = has_conjugate_in_class_p(f.tau, cap);
    if (!tau_search.found || tau_search.found->conjugacy.direction != ShiftDirection::right ||
        tau_search.found->conjugacy.shift != Word("a") || tau_search.found->conjugacy.result != f.rho) {
        json w = {{"property", "tau_conjugate_to_rho"}};
        if (tau_search.found) w["found"] = witness_json(*tau_search.found);
        r.fail(w);
    } else {
        r.witness["tau"] = witness_json(*tau_search.found);
    }
    if (has_conjugate_in_class_p(f.theta, cap).found) r.fail({{"property", "theta_has_no_class_p_conjugate"}});
    if (!has_conjugate_in_class_p(theta2, cap).found) r.fail({{"property", "theta^2_has_class_p_conjugate"}});

    for (const auto* m : {&f.rho, &theta2}) {
        const auto conj = enumerate_conjugates(*m, cap);
        const Morphism mirrored = mirror(*m);
        const bool found = std::any_of(conj.conjugates.begin(), conj.conjugates.end(),
                                       [&](const ConjugacyWitness& c) { return c.result == mirrored; });
        if (!found) r.fail({{"property", "mirror_is_conjugate"}, {"morphism", m->literal()}});
    }
    return r;
}

Report check_p_sequence(const Fixtures& f, std::size_t kmax) {
    json bounds = {{"kmax", kmax}};
    if (kmax < 2) return skipped("p_sequence", bounds, "needs kmax >= 2");
    Report r = make_report("p_sequence", bounds);
    std::vector<Word> p;
    for (std::size_t k = 0; k <= kmax; ++k) p.push_back(k == 0 ? Word("b") : apply(f.gamma, Word("ca") + p.back()));

    for (std::size_t k = 0; k <= kmax; ++k) {
        if (!is_palindrome(p[k])) r.fail({{"property", "palindrome"}, {"k", k}, {"length", p[k].size()}});
        if (p[k].empty() || p[k].front() != 'b') r.fail({{"property", "starts_with_b"}, {"k", k}});
    }
    for (std::size_t k = 1; k < kmax; ++k) {
        const Word expected = p[k] + aca + p[k - 1] + aca + p[k];
        if (p[k + 1] != expected)
            r.fail({{"property", "recurrence"}, {"k", k}, {"lcp", longest_common_prefix(p[k + 1], expected)}});
    }
    for (std::size_t k = 1; k <= kmax; ++k) {
        const Word joined = p[k - 1] + aca + p[k];
        if (is_palindrome(joined)) r.fail({{"property", "junction_not_palindrome"}, {"k", k}});
    }
    if (r.passed()) r.witness = {{"p1", p[1].str()}, {"p2", p[2].str()}, {"length_kmax", p[kmax].size()}};
    return r;
}

Report check_palindromicity(const Fixtures& f, std::size_t kmax, std::size_t prefix_bound) {
    Report r = make_report("palindromicity", {{"kmax", kmax}, {"prefix_bound", prefix_bound}});
    FixedPointStream s(f.gamma, 'a');

    // Every b is preceded by ca.
    const Word head = s.prefix(std::min<std::size_t>(2000, prefix_bound));
    for (std::size_t i = 0; i < head.size(); ++i) {
        if (head[i] == 'b' && (i < 2 || head.view().substr(i - 2, 2) != "ca")) {
            r.fail({{"property", "b_preceded_by_ca"}, {"position", i}});
            break;
        }
    }

    json positions = json::array();
    std::size_t scanned = 0;
    Word p("b");
    std::vector<std::size_t> lengths;
    for (std::size_t k = 0; k <= kmax; ++k) {
        if (k > 0) p = apply(f.gamma, Word("ca") + p);
        lengths.push_back(p.size());
        std::optional<std::size_t> pos;
        std::size_t bound = std::min(prefix_bound, std::max<std::size_t>(1024, 2 * p.size()));
        while (bound >= p.size()) {
            pos = find_factor(s, p, bound);
            if (pos || bound == prefix_bound) break;
            bound = std::min(prefix_bound, 2 * bound);
        }
        if (!pos) {
            r.fail({{"property", "p_k_is_factor"}, {"k", k}, {"length", p.size()}, {"searched", bound}});
            break;
        }
        if (*pos < 2 || s.prefix_view(*pos).substr(*pos - 2) != "ca")
            if (!find_factor(s, Word("ca") + p, std::min(prefix_bound, std::max(bound, p.size() + 2))))
                r.fail({{"property", "ca_p_k_is_factor"}, {"k", k}});
        positions.push_back(*pos);
        scanned = std::max(scanned, *pos + p.size());
    }

    if (!r.failed()) {
        const auto census = palindrome_census(s, scanned);
        for (std::size_t k = 0; k < lengths.size(); ++k)
            if (!census.contains_length(lengths[k]))
                r.fail({{"property", "census_contains_p_k"}, {"k", k}, {"length", lengths[k]}});
        if (r.passed())
            r.witness = {{"positions", positions}, {"census_scanned", scanned}, {"census_lengths", census.found.size()}};
    }
    return r;
}

Report check_commutation(const Fixtures& f, std::size_t kmax, std::size_t decode_length) {
    Report r = make_report("commutation", {{"kmax", kmax}, {"decode_length", decode_length}});
    Morphism gk = Morphism::identity(f.gamma.source());
    Morphism mk = Morphism::identity(f.mu.source());
    for (std::size_t k = 1; k <= kmax; ++k) {
        gk = compose(f.gamma, gk);
        mk = compose(f.mu, mk);
        const Morphism lhs = compose(gk, f.pi);
        const Morphism rhs = compose(f.pi, mk);
        if (lhs != rhs) r.fail({{"property", "gamma^k.pi == pi.mu^k"}, {"k", k}, {"lhs", lhs.literal()}, {"rhs", rhs.literal()}});
    }
    FixedPointStream xg(f.gamma, 'a');
    FixedPointStream wm(f.mu, 'x');
    const auto decoded = decode_prefix_code(f.pi, xg.prefix(2 * decode_length));
    const Word expected = wm.prefix(decode_length);
    if (!decoded || *decoded != expected) {
        json w = {{"property", "desubstitution"}};
        if (decoded) w["mismatch_at"] = longest_common_prefix(*decoded, expected);
        r.fail(w);
    }
    return r;
}

Report check_odd_even(const Morphism& phi) {
    Report r = make_report("odd_even");
    std::vector<std::size_t> lengths;
    for (const auto& img : phi.images()) lengths.push_back(img.size());
    const bool same = std::all_of(lengths.begin(), lengths.end(), [&](std::size_t n) { return n % 2 == lengths.front() % 2; });
    if (!same) r.fail({{"morphism", phi.literal()}, {"lengths", lengths}});
    else r.witness = {{"lengths", lengths}};
    return r;
}

Report check_length_parity(const Fixtures& f, std::size_t kmax) {
    Report r = make_report("length_parity", {{"kmax", kmax}});
    std::size_t checked = 0;
    for (std::size_t k = 0; k <= kmax && !r.failed(); ++k) {
        for (const auto& phi : stabilizer_level(k, f).elements) {
            ++checked;
            if (auto sub = check_odd_even(phi); sub.failed()) {
                sub.witness["k"] = k;
                r.fail(sub.witness);
                break;
            }
        }
    }
    if (r.passed()) r.witness = {{"elements_checked", checked}};
    return r;
}

Report check_stabilizer_levels(const Fixtures& f, std::size_t kmax) {
    constexpr std::size_t sanity_prefix = 2000;
    const std::size_t grading_max = std::min<std::size_t>(kmax, 4);
    Report r = make_report("stabilizer_levels", {{"kmax", kmax}, {"fixed_prefix", sanity_prefix}, {"grading_max", grading_max}});
    FixedPointStream s(f.gamma, 'a');
    std::vector<StabilizerLevel> levels;
    json counts = json::array();
    for (std::size_t k = 0; k <= kmax; ++k) {
        levels.push_back(stabilizer_level(k, f));
        const auto& level = levels.back();
        const Morphism gk = power(f.gamma, k);
        const Word tx = apply(gk, f.pi.image_at(0));
        const Word ty = apply(gk, f.pi.image_at(1));
        std::size_t lcp = 0;
        while (lcp < tx.size() && lcp < ty.size() && tx[lcp] == ty[lcp]) ++lcp;
        if (level.common_prefix_length != lcp || level.elements.size() != lcp + 1)
            r.fail({{"property", "count"}, {"k", k}, {"lcp", lcp}, {"elements", level.elements.size()}});
        for (std::size_t i = 0; i < level.elements.size(); ++i) {
            const auto& phi = level.elements[i];
            if (phi.image('a').size() != i || !in_stabilizer_level(phi, k, f))
                r.fail({{"property", "level_membership"}, {"k", k}, {"morphism", phi.literal()}});
            if (!is_fixed_by(phi, s, sanity_prefix))
                r.fail({{"property", "fixes_prefix"}, {"k", k}, {"morphism", phi.literal()}});
        }
        counts.push_back(level.elements.size());
    }

    const bool has_identity = std::any_of(levels[0].elements.begin(), levels[0].elements.end(),
                                          [](const Morphism& m) { return m.is_identity(); });
    if (!has_identity) r.fail({{"property", "level0_contains_identity"}});

    if (kmax >= 1) {
        const auto& one = levels[1].elements;
        for (std::size_t i = 0; i < f.level_one.size(); ++i)
            if (one.size() != f.level_one.size() || one[i] != f.level_one[i])
                r.fail({{"property", "level1_listing"}, {"index", i}, {"expected", f.level_one[i].literal()},
                        {"actual", i < one.size() ? one[i].literal() : std::string()}});
    }
    if (kmax >= 2) {
        const auto& two = levels[2].elements;
        for (std::size_t i = 0; i < f.level_two_listing.size(); ++i)
            if (two.size() != f.level_two_listing.size() || two[i] != f.level_two_listing[i].morphism)
                r.fail({{"property", "level2_listing"}, {"name", f.level_two_listing[i].name},
                        {"expected", f.level_two_listing[i].morphism.literal()},
                        {"actual", i < two.size() ? two[i].literal() : std::string()}});
    }
    if (kmax >= 3) {
        const auto& three = levels[3].elements;
        for (const auto& e : f.level_three_exceptions) {
            const std::size_t la = e.morphism.image('a').size();
            if (la >= three.size() || three[la] != e.morphism)
                r.fail({{"property", "level3_listing"}, {"name", e.name}, {"expected", e.morphism.literal()}});
        }
    }

    for (std::size_t j = 0; j <= grading_max; ++j)
        for (std::size_t k = 0; j + k <= grading_max; ++k)
            for (const auto& phi : levels[j].elements)
                for (const auto& psi : levels[k].elements)
                    if (!in_stabilizer_level(compose(phi, psi), j + k, f))
                        r.fail({{"property", "grading"}, {"j", j}, {"k", k}, {"phi", phi.literal()}, {"psi", psi.literal()}});

    if (r.passed()) r.witness = {{"level_sizes", counts}};
    return r;
}

Report check_non_generation(const Fixtures& f, std::size_t kmax) {
    json bounds = {{"kmax", kmax}};
    if (kmax < 3) return skipped("non_generation", bounds, "needs kmax >= 3");
    Report r = make_report("non_generation", bounds);
    for (const auto& named : f.level_two_listing) {
        Morphism product = Morphism::identity(f.gamma.source());
        for (auto it = named.factorization.rbegin(); it != named.factorization.rend(); ++it)
            product = compose(f.level_one[*it], product);
        if (product != named.morphism)
            r.fail({{"property", "listed_factorization"}, {"name", named.name}, {"product", product.literal()}});
    }
    for (const auto& e : f.level_three_exceptions) {
        if (!in_stabilizer_level(e.morphism, 3, f)) {
            r.fail({{"property", "exception_in_level3"}, {"name", e.name}});
            continue;
        }
        if (const auto fac = submonoid_member_level(e.morphism, 3, f))
            r.fail({{"property", "exception_not_generated"}, {"name", e.name}, {"factorization", *fac}});
    }
    if (r.passed()) {
        std::size_t generated = 0;
        const auto level = stabilizer_level(3, f);
        for (const auto& phi : level.elements)
            if (submonoid_member_level(phi, 3, f)) ++generated;
        r.witness = {{"compositions", 64}, {"level3_size", level.elements.size()}, {"level3_generated", generated}};
    }
    return r;
}

Report check_points_symmetry(const Fixtures& f, std::size_t kmax) {
    const std::size_t primitive_max = std::max<std::size_t>(kmax, 8);
    json bounds = {{"kmax", kmax}, {"primitive_kmax", primitive_max}};
    if (kmax < 2) return skipped("points_symmetry", bounds, "needs kmax >= 2");
    Report r = make_report("points_symmetry", bounds);
    const Word ab("ab"), ac("ac");
    std::vector<Word> p{Word("b")};
    while (p.size() <= primitive_max) p.push_back(apply(f.gamma, Word("ca") + p.back()));

    Morphism gk = Morphism::identity(f.gamma.source());
    for (std::size_t k = 1; k <= primitive_max; ++k) {
        gk = compose(f.gamma, gk);
        const Word gab = apply(gk, ab);
        const Word gac = apply(gk, ac);
        if (k >= 2 && !is_primitive_word(gab)) r.fail({{"property", "gamma^k(ab)_primitive"}, {"k", k}});
        if (k > kmax) continue;
        if (gac != aca + p[k - 1]) r.fail({{"property", "gamma^k(ac)_factorization"}, {"k", k}});
        if (!symmetry_points(gac).contains(2)) r.fail({{"property", "gamma^k(ac)_point_2"}, {"k", k}});
        if (k < 2) continue;
        if (gab != aca + p[k - 2] + aca + p[k - 1]) r.fail({{"property", "gamma^k(ab)_factorization"}, {"k", k}});
        const auto pts = symmetry_points(gab);
        const std::vector<std::size_t> expected{p[k - 2].size() + 5};
        if (pts.points != expected)
            r.fail({{"property", "gamma^k(ab)_unique_point"}, {"k", k}, {"expected", expected}, {"actual", pts.points}});
    }
    return r;
}

Report check_primitivity_preservation(const Fixtures& f, std::size_t maxlen) {
    Report r = make_report("primitivity_preservation", {{"maxlen", maxlen}});
    if (maxlen < 2) return skipped("primitivity_preservation", r.bounds, "needs maxlen >= 2");
    const Alphabet& xy = f.mu.source();
    std::size_t words = 0;
    // Odometer over xy^len.
    auto for_each_word = [&](std::size_t len, const std::function<bool(const Word&)>& visit) {
        std::vector<std::size_t> idx(len, 0);
        while (true) {
            std::string w;
            for (auto i : idx) w += xy[i];
            if (!visit(Word(w))) return;
            std::size_t pos = len;
            while (pos > 0 && ++idx[pos - 1] == xy.size()) idx[--pos] = 0;
            if (pos == 0) return;
        }
    };
    for (std::size_t len = 1; len <= maxlen && !r.failed(); ++len) {
        for_each_word(len, [&](const Word& w) {
            ++words;
            if (is_primitive_word(apply(f.mu, w)) != is_primitive_word(w)) {
                r.fail({{"property", "mu_preserves_primitivity"}, {"w", w.str()}});
                return false;
            }
            return true;
        });
    }
    for (std::size_t blocks = 1; blocks <= maxlen / 2 && !r.failed(); ++blocks) {
        for_each_word(blocks, [&](const Word& v) {
            ++words;
            const Word w = apply(f.pi, v);
            if (is_primitive_word(apply(f.gamma, w)) != is_primitive_word(w)) {
                r.fail({{"property", "gamma_preserves_primitivity_on_blocks"}, {"w", w.str()}});
                return false;
            }
            return true;
        });
    }
    if (r.passed()) r.witness = {{"words_checked", words}};
    return r;
}

Report check_no_class_p_conjugates(const Fixtures& f, std::size_t kmax, std::size_t stabilizer_kmax, std::size_t cap) {
    Report r = make_report("no_class_p_conjugates",
                           {{"kmax", kmax}, {"stabilizer_kmax", stabilizer_kmax}, {"conjugacy_cap", cap}});
    Morphism gk = Morphism::identity(f.gamma.source());
    for (std::size_t k = 1; k <= kmax; ++k) {
        gk = compose(f.gamma, gk);
        const std::string first = letters_of(fst(gk));
        const std::string last = letters_of(lst(gk));
        if (first != (k % 2 == 0 ? "abc" : "acb") || last != "abb")
            r.fail({{"property", "fst_lst"}, {"k", k}, {"fst", first}, {"lst", last}});
        const auto conj = enumerate_conjugates(gk, cap);
        if (conj.conjugates.size() != 1 || conj.status != EnumerationStatus::complete)
            r.fail({{"property", "gamma^k_self_conjugate_only"}, {"k", k}, {"conjugates", conj.conjugates.size()},
                    {"status", std::string(to_string(conj.status))}});
        if (is_class_p(gk)) r.fail({{"property", "gamma^k_not_class_p"}, {"k", k}});
        for (const bool filter : {true, false})
            if (const auto hit = has_conjugate_in_class_p(gk, cap, filter); hit.found)
                r.fail({{"property", "gamma^k_no_class_p_conjugate"}, {"k", k}, {"witness", witness_json(*hit.found)}});
    }

    std::size_t checked = 0, filtered = 0;
    for (std::size_t k = 0; k <= stabilizer_kmax; ++k) {
        for (const auto& phi : stabilizer_level(k, f).elements) {
            if (phi.is_identity()) continue;
            ++checked;
            const auto fast = has_conjugate_in_class_p(phi, cap, true);
            const auto full = has_conjugate_in_class_p(phi, cap, false);
            if (fast.rejected_by_symmetry_filter) ++filtered;
            for (const auto* search : {&fast, &full}) {
                if (search->found)
                    r.fail({{"property", "stabilizer_element_has_class_p_conjugate"}, {"k", k},
                            {"morphism", phi.literal()}, {"witness", witness_json(*search->found)}});
                else if (search->status == EnumerationStatus::cap_reached)
                    r.fail({{"property", "conjugacy_cap_reached"}, {"k", k}, {"morphism", phi.literal()}});
            }
        }
    }
    if (r.passed()) r.witness = {{"stabilizer_elements_checked", checked}, {"rejected_by_symmetry_filter", filtered}};
    return r;
}

Report check_char_polys(const Fixtures& f) {
    Report r = make_report("char_polys");
    const Polynomial x = Polynomial::x();
    const Polynomial one = Polynomial::constant(1);
    const Polynomial quadratic({-1, -2, 1});
    const Polynomial expected_gamma = (x - one) * quadratic;
    const Polynomial gamma_poly = char_poly(incidence_matrix(f.gamma));
    if (gamma_poly != expected_gamma || gamma_poly != Polynomial({1, 1, -3, 1}))
        r.fail({{"property", "char_poly_gamma"}, {"actual", gamma_poly.to_string()}});
    const Polynomial mu_poly = char_poly(incidence_matrix(f.mu));
    if (mu_poly != quadratic) r.fail({{"property", "char_poly_mu"}, {"actual", mu_poly.to_string()}});
    const Polynomial id_poly = char_poly(incidence_matrix(Morphism::identity(f.gamma.source())));
    if (id_poly != (x - one) * (x - one) * (x - one))
        r.fail({{"property", "char_poly_identity"}, {"actual", id_poly.to_string()}});
    if (compose(f.g1, f.g2) != f.mu)
        r.fail({{"property", "mu_factorization"}, {"g1.g2", compose(f.g1, f.g2).literal()}});
    if (!is_primitive_morphism(f.gamma)) r.fail({{"property", "gamma_primitive"}});
    if (r.passed())
        r.witness = {{"gamma", gamma_poly.to_string() + " = " + factorization_string(factor_integer_roots(gamma_poly))},
                     {"mu", mu_poly.to_string()}};
    return r;
}

Report check_rigidity_sanity(const Fixtures& f, std::size_t max_image_length, std::size_t prefix_length) {
    Report r = make_report("rigidity_sanity", {{"max_image_length", max_image_length}, {"prefix_length", prefix_length}});
    const Alphabet& xy = f.mu.source();
    std::vector<Word> words{Word()};
    for (std::size_t len = 1; len <= max_image_length; ++len) {
        const std::size_t start = words.size();
        for (std::size_t i = 0; i < start; ++i)
            if (words[i].size() == len - 1)
                for (char c : xy) words.push_back(words[i] + Word(std::string(1, c)));
    }
    std::vector<Morphism> mu_powers{Morphism::identity(xy)};
    while (true) {
        Morphism next = compose(f.mu, mu_powers.back());
        const bool fits = std::all_of(next.images().begin(), next.images().end(),
                                      [&](const Word& w) { return w.size() <= max_image_length; });
        if (!fits) break;
        mu_powers.push_back(std::move(next));
    }
    FixedPointStream s(f.mu, 'x');
    json fixing = json::array();
    for (const auto& ix : words) {
        for (const auto& iy : words) {
            Morphism phi(xy, xy, {ix, iy});
            if (!is_fixed_by(phi, s, prefix_length)) continue;
            fixing.push_back(phi.literal());
            if (std::find(mu_powers.begin(), mu_powers.end(), phi) == mu_powers.end())
                r.fail({{"property", "fixing_morphism_not_power_of_mu"}, {"morphism", phi.literal()}});
        }
    }
    if (fixing.size() != mu_powers.size()) r.fail({{"property", "power_of_mu_not_fixing"}, {"found", fixing}});
    if (r.passed()) r.witness = {{"note", "bounded evidence only; rigidity is assumed"}, {"fixing", fixing}};
    return r;
}

std::vector<Report> run_all(const SuiteConfig& config, const Fixtures& f) {
    const std::size_t class_p_kmax = std::min(config.kmax, config.class_p_kmax);
    const std::vector<std::pair<std::string, std::function<Report()>>> checks = {
        {"fixture_prefixes", [&] { return check_fixture_prefixes(f); }},
        {"class_p_battery", [&] { return check_class_p_battery(f, config.conjugacy_cap); }},
        {"p_sequence", [&] { return check_p_sequence(f, config.kmax); }},
        {"palindromicity", [&] { return check_palindromicity(f, config.kmax, config.prefix_bound); }},
        {"commutation", [&] { return check_commutation(f, config.kmax); }},
        {"stabilizer_levels", [&] { return check_stabilizer_levels(f, config.kmax); }},
        {"length_parity", [&] { return check_length_parity(f, config.kmax); }},
        {"non_generation", [&] { return check_non_generation(f, config.kmax); }},
        {"points_symmetry", [&] { return check_points_symmetry(f, config.kmax); }},
        {"primitivity_preservation", [&] { return check_primitivity_preservation(f, config.primitivity_maxlen); }},
        {"no_class_p_conjugates", [&] { return check_no_class_p_conjugates(f, config.kmax, class_p_kmax, config.conjugacy_cap); }},
        {"char_polys", [&] { return check_char_polys(f); }},
        {"rigidity_sanity", [&] { return check_rigidity_sanity(f); }},
    };
    std::vector<Report> out;
    for (const auto& [name, run] : checks) {
        try {
            out.push_back(run());
        } catch (const std::exception& e) {
            Report r = make_report(name);
            r.fail({{"exception", e.what()}});
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace morphic
