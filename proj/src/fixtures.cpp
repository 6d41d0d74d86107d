#include <stdexcept>

#include "morphic/suite.hpp"

namespace morphic {

Fixtures Fixtures::standard() {
    const Alphabet ab("ab"), abc("abc"), xy("xy");
    Fixtures f;
    f.rho = parse_morphism("a->bbaba,b->bba", ab, ab);
    f.theta = parse_morphism("a->ab,b->ba", ab, ab);
    f.tau = parse_morphism("a->abbab,b->abb", ab, ab);
    f.gamma = parse_morphism("a->aca,b->cab,c->b", abc, abc);
    f.mu = parse_morphism("x->xy,y->xxy", xy, xy);
    f.pi = parse_morphism("x->ac,y->ab", xy, abc);
    f.level_one = {
        parse_morphism("a->-,b->acacab,c->acab", abc, abc),
        parse_morphism("a->a,b->cacab,c->cab", abc, abc),
        parse_morphism("a->ac,b->acab,c->ab", abc, abc),
        parse_morphism("a->aca,b->cab,c->b", abc, abc),
    };
    f.g1 = parse_morphism("x->xy,y->x", xy, xy);
    f.g2 = parse_morphism("x->x,y->yx", xy, xy);

    auto listed = [&](std::string name, std::string_view literal, std::vector<std::size_t> factors) {
        return NamedMorphism{std::move(name), parse_morphism(literal, abc, abc), std::move(factors)};
    };
    f.level_two_listing = {
        listed("gamma0^2", "a->-,b->acabacabacacab,c->acabacacab", {0, 0}),
        listed("gamma1^2", "a->a,b->cabacabacacab,c->cabacacab", {1, 1}),
        listed("gamma2gamma1", "a->ac,b->abacabacacab,c->abacacab", {2, 1}),
        listed("gamma3gamma1", "a->aca,b->bacabacacab,c->bacacab", {3, 1}),
        listed("gamma2^2", "a->acab,b->acabacacab,c->acacab", {2, 2}),
        listed("gamma1gamma3", "a->acaba,b->cabacacab,c->cacab", {1, 3}),
        listed("gamma2gamma3", "a->acabac,b->abacacab,c->acab", {2, 3}),
        listed("gamma3^2", "a->acabaca,b->bacacab,c->cab", {3, 3}),
    };
    f.level_three_exceptions = {
        listed("level3_a8", "a->acabacac,b->abacabacacabacabacabacacab,c->abacabacabacacab", {}),
        listed("level3_a9", "a->acabacaca,b->bacabacacabacabacabacacab,c->bacabacabacacab", {}),
    };

    f.gamma_prefix = "acabacacabacabacabacacabacabacacabacabac";
    f.mu_prefix = "xyxxyxyxyxxyxyxxyxyxxyxyxyxxyxyxxyxyxyxx";
    f.theta_prefix = "abbabaabbaababbabaababbaabbabaabbaababba";
    f.rho_prefix = "bbabbabbababbabbabbababbabbabbababbabbab";
    return f;
}

std::vector<std::string> Fixtures::names() const {
    std::vector<std::string> out{"rho", "theta", "tau", "gamma", "mu", "pi", "gamma0", "gamma1", "gamma2", "gamma3", "g1", "g2"};
    for (const auto& m : level_two_listing) out.push_back(m.name);
    for (const auto& m : level_three_exceptions) out.push_back(m.name);
    return out;
}

Morphism& Fixtures::by_name(const std::string& name) {
    if (name == "rho") return rho;
    if (name == "theta") return theta;
    if (name == "tau") return tau;
    if (name == "gamma") return gamma;
    if (name == "mu") return mu;
    if (name == "pi") return pi;
    if (name == "g1") return g1;
    if (name == "g2") return g2;
    for (std::size_t i = 0; i < level_one.size(); ++i)
        if (name == "gamma" + std::to_string(i)) return level_one[i];
    for (auto& m : level_two_listing)
        if (m.name == name) return m.morphism;
    for (auto& m : level_three_exceptions)
        if (m.name == name) return m.morphism;
    throw std::invalid_argument("unknown fixture \"" + name + "\"");
}

Fixtures corrupted(Fixtures f, const std::string& name) {
    Morphism& target = f.by_name(name);
    std::vector<Word> images = target.images();
    images.back() += target.target()[0];
    target = Morphism(target.source(), target.target(), std::move(images));
    return f;
}

}  // namespace morphic
