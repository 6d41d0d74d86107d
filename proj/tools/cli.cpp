#include "cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "morphic/fixed_point.hpp"
#include "morphic/morphism.hpp"
#include "morphic/suite.hpp"

namespace morphic::cli {

using json = nlohmann::ordered_json;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Morphism parse_literal(const std::string& literal, const std::string& alphabet) {
    if (alphabet.empty()) return parse_morphism(literal);
    const Alphabet a(alphabet);
    return parse_morphism(literal, a, a);
}

std::string join_words(const std::vector<Word>& words, const Alphabet& letters) {
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) out += ", ";
        out += letters[i];
        out += ':';
        out += words[i].display();
    }
    return out;
}

json class_p_json(const ClassPWitness& w, const Alphabet& letters) {
    json q = json::object();
    for (std::size_t i = 0; i < w.q.size(); ++i) q[std::string(1, letters[i])] = w.q[i].str();
    return {{"p", w.p.str()}, {"q", q}};
}

struct GenOptions {
    std::string literal;
    std::string alphabet;
    char seed = 0;
    std::size_t n = 0;
};

struct AnalyzeOptions {
    std::string literal;
    std::string alphabet;
    bool classp = false, conjugates = false, symmetry = false, charpoly = false, verbose = false;
    std::size_t cap = 10000;
};

void cmd_generate(const GenOptions& o, const std::string& format, std::ostream& out) {
    const Morphism phi = parse_literal(o.literal, o.alphabet);
    FixedPointStream s(phi, o.seed);
    const Word prefix = s.prefix(o.n);
    if (format == "json") {
        out << json{{"morphism", phi.literal()}, {"seed", std::string(1, o.seed)}, {"n", o.n}, {"prefix", prefix.str()}}.dump()
            << '\n';
    } else if (!prefix.empty()) {
        out << prefix.str() << '\n';
    }
}

void cmd_analyze(AnalyzeOptions o, const std::string& format, std::ostream& out) {
    const Morphism phi = parse_literal(o.literal, o.alphabet);
    if (!(o.classp || o.conjugates || o.symmetry || o.charpoly)) o.classp = o.conjugates = o.symmetry = o.charpoly = true;
    const Alphabet& src = phi.source();
    json j;
    j["morphism"] = phi.literal();
    std::vector<std::string> lines;

    if (o.classp) {
        const auto all = class_p_witnesses(phi);
        const auto conj = has_conjugate_in_class_p(phi, o.cap);
        json cp;
        cp["member"] = !all.empty();
        if (!all.empty()) cp["witness"] = class_p_json(all.back(), src);
        if (o.verbose) {
            json lens = json::array();
            for (const auto& w : all) lens.push_back(w.p.size());
            cp["p_lengths"] = lens;
        }
        cp["conjugate_member"] = conj.found.has_value();
        if (conj.found) {
            cp["conjugate"] = {{"direction", std::string(to_string(conj.found->conjugacy.direction))},
                               {"shift", conj.found->conjugacy.shift.str()},
                               {"morphism", conj.found->conjugacy.result.literal()},
                               {"witness", class_p_json(conj.found->decomposition, src)}};
        }
        j["class_p"] = cp;

        if (all.empty()) {
            lines.push_back("class P: no");
        } else {
            lines.push_back("class P: yes p=" + all.back().p.display() + " q=[" + join_words(all.back().q, src) + "]");
            if (o.verbose) {
                std::string lens;
                for (const auto& w : all) lens += (lens.empty() ? "" : ",") + std::to_string(w.p.size());
                lines.push_back("  valid |p|: " + lens);
            }
        }
        if (conj.found) {
            const auto& c = *conj.found;
            lines.push_back("conjugate in class P: yes via " + std::string(to_string(c.conjugacy.direction)) + " shift " +
                            c.conjugacy.shift.display() + " -> " + c.conjugacy.result.literal() + " p=" +
                            c.decomposition.p.display() + " q=[" + join_words(c.decomposition.q, src) + "]");
        } else {
            lines.push_back(std::string("conjugate in class P: no") +
                            (conj.rejected_by_symmetry_filter ? " (no common point of symmetry)" : ""));
        }
    }

    if (o.conjugates) {
        const auto e = enumerate_conjugates(phi, o.cap);
        json list = json::array();
        lines.push_back("conjugates (" + std::string(to_string(e.status)) + "): " + std::to_string(e.conjugates.size()));
        for (const auto& c : e.conjugates) {
            list.push_back({{"direction", std::string(to_string(c.direction))},
                            {"shift", c.shift.str()},
                            {"morphism", c.result.literal()}});
            lines.push_back("  " + std::string(to_string(c.direction)) + " shift " + c.shift.display() + ": " +
                            c.result.literal());
        }
        j["conjugates"] = {{"status", std::string(to_string(e.status))}, {"list", list}};
    }

    if (o.symmetry) {
        json sym = json::object();
        lines.push_back("points of symmetry:");
        for (std::size_t i = 0; i < src.size(); ++i) {
            const auto pts = symmetry_points(phi.image_at(i));
            sym[std::string(1, src[i])] = pts.points;
            std::string listed;
            for (auto p : pts.points) listed += (listed.empty() ? "" : ",") + std::to_string(p);
            lines.push_back("  " + std::string(1, src[i]) + " -> " + phi.image_at(i).display() + ": {" + listed + "}");
        }
        const auto residue = common_symmetry_residue(phi);
        j["symmetry"] = {{"points", sym}, {"common_residue", residue ? json(*residue) : json(nullptr)}};
        lines.push_back("  common residue: " + (residue ? std::to_string(*residue) : std::string("none")));
    }

    if (o.charpoly) {
        if (!phi.is_endomorphism()) throw UsageError("--charpoly needs an endomorphism");
        const Polynomial p = char_poly(incidence_matrix(phi));
        const auto factors = factor_integer_roots(p);
        const std::string factored = factorization_string(factors);
        const bool split = !factors.roots.empty() && p.degree() > 1;
        j["charpoly"] = {{"polynomial", p.to_string()}, {"factorization", factored}, {"primitive", is_primitive_morphism(phi)}};
        lines.push_back(split ? p.to_string() + " = " + factored : p.to_string());
    }

    if (format == "json") {
        out << j.dump() << '\n';
    } else {
        for (const auto& l : lines) out << l << '\n';
    }
}

void cmd_stab(std::size_t k, const std::string& format, std::ostream& out) {
    const auto level = stabilizer_level(k, Fixtures::standard());
    if (format == "json") {
        json list = json::array();
        for (const auto& e : level.elements) list.push_back(e.literal());
        out << json{{"k", k}, {"lcp", level.common_prefix_length}, {"elements", list}}.dump() << '\n';
        return;
    }
    out << "level " << k << ": " << level.elements.size() << " elements (lcp " << level.common_prefix_length << ")\n";
    for (std::size_t i = 0; i < level.elements.size(); ++i) out << "  " << i << ": " << level.elements[i].literal() << '\n';
}

int cmd_verify(const SuiteConfig& config, const std::string& corrupt, const std::string& format, std::ostream& out) {
    Fixtures fixtures = Fixtures::standard();
    if (!corrupt.empty()) {
        const auto names = fixtures.names();
        if (std::find(names.begin(), names.end(), corrupt) == names.end()) throw UsageError("unknown fixture " + corrupt);
        fixtures = corrupted(std::move(fixtures), corrupt);
    }
    const auto reports = run_all(config, fixtures);
    const auto failed = std::count_if(reports.begin(), reports.end(), [](const Report& r) { return r.failed(); });
    if (format == "json") {
        out << to_json(reports).dump(2) << '\n';
    } else {
        for (const auto& r : reports) out << to_text(r) << '\n';
        const auto skipped = std::count_if(reports.begin(), reports.end(),
                                           [](const Report& r) { return r.status == CheckStatus::skipped; });
        out << "summary: " << reports.size() << " checks, " << failed << " failed, " << skipped << " skipped\n";
    }
    return failed == 0 ? exit_ok : exit_verification_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Words, morphisms, fixed points and class-P analysis", "morphic"};
    app.require_subcommand(1);
    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Print a prefix of the fixed point of a morphism");
    gen_cmd->add_option("morphism", gen.literal, "Morphism literal, e.g. a->aca,b->cab,c->b")->required();
    gen_cmd->add_option("--seed", gen.seed, "Letter the fixed point starts with")->required();
    gen_cmd->add_option("--n", gen.n, "Prefix length")->required();
    gen_cmd->add_option("--alphabet", gen.alphabet, "Declared alphabet (letters in order)");
    add_format(gen_cmd);

    AnalyzeOptions an;
    auto* an_cmd = app.add_subcommand("analyze", "Class P, conjugates, symmetry points, characteristic polynomial");
    an_cmd->add_option("morphism", an.literal, "Morphism literal")->required();
    an_cmd->add_flag("--classp", an.classp, "Class-P witness and class-P conjugate search");
    an_cmd->add_flag("--conjugates", an.conjugates, "List all conjugate morphisms");
    an_cmd->add_flag("--symmetry", an.symmetry, "Points of symmetry of each image");
    an_cmd->add_flag("--charpoly", an.charpoly, "Characteristic polynomial of the incidence matrix");
    an_cmd->add_flag("--verbose", an.verbose, "List every valid class-P prefix length");
    an_cmd->add_option("--cap", an.cap, "Upper bound on conjugacy shift length")->check(CLI::PositiveNumber);
    an_cmd->add_option("--alphabet", an.alphabet, "Declared alphabet (letters in order)");
    add_format(an_cmd);

    std::size_t stab_k = 1;
    auto* stab_cmd = app.add_subcommand("stab", "List the stabilizer elements of a given level");
    stab_cmd->add_option("--k", stab_k, "Level")->required();
    add_format(stab_cmd);

    SuiteConfig config;
    std::string corrupt;
    auto* verify_cmd = app.add_subcommand("verify", "Run every verification check");
    verify_cmd->add_option("--kmax", config.kmax, "Largest level for symbolic checks")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--class-p-kmax", config.class_p_kmax, "Largest stabilizer level swept for class-P conjugates")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--prefix-bound", config.prefix_bound, "Longest fixed-point prefix searched")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--maxlen", config.primitivity_maxlen, "Longest word in the primitivity sweep")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--corrupt", corrupt)->group("");
    add_format(verify_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*gen_cmd) {
            cmd_generate(gen, format, out);
        } else if (*an_cmd) {
            cmd_analyze(an, format, out);
        } else if (*stab_cmd) {
            cmd_stab(stab_k, format, out);
        } else if (*verify_cmd) {
            return cmd_verify(config, corrupt, format, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_ok;
}

}  // namespace morphic::cli
