#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = morphic::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli gen") {
    auto r = run({"gen", "a->aca,b->cab,c->b", "--seed", "a", "--n", "40"});
    CHECK(r.code == 0);
    CHECK(r.out == "acabacacabacabacabacacabacabacacabacabac\n");

    r = run({"gen", "x->xy,y->xxy", "--seed", "x", "--n", "40"});
    CHECK(r.out == "xyxxyxyxyxxyxyxxyxyxxyxyxyxxyxyxxyxyxyxx\n");

    r = run({"gen", "a->aca,b->cab,c->b", "--seed", "a", "--n", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());

    r = run({"gen", "a->aca,b->cab,c->b", "--seed", "a", "--n", "5", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["prefix"] == "acaba");

    CHECK(run({"gen", "a->aca,b->cab,c->b", "--seed", "b", "--n", "5"}).code == 2);
    CHECK(run({"gen", "a->aca,b->cab,c->", "--seed", "a", "--n", "5"}).code == 2);
    CHECK(run({"gen", "a->ab,b->ba", "--seed", "a", "--n", "5", "--alphabet", "abc"}).code == 2);
    CHECK(run({"gen", "a->ab,b->ba", "--seed", "a"}).code == 2);
}

TEST_CASE("cli analyze") {
    auto r = run({"analyze", "a->abba,b->baab", "--classp"});
    CHECK(r.code == 0);
    CHECK(r.out.find("class P: yes p=eps") != std::string::npos);

    r = run({"analyze", "a->abbab,b->abb", "--conjugates"});
    CHECK(r.code == 0);
    CHECK(r.out.find("right shift a: a->bbaba,b->bba") != std::string::npos);

    r = run({"analyze", "a->aca,b->cab,c->b", "--charpoly"});
    CHECK(r.out == "x^3-3x^2+x+1 = (x-1)(x^2-2x-1)\n");

    r = run({"analyze", "a->aca,b->cab,c->b", "--symmetry"});
    CHECK(r.out.find("c -> b: {0}") != std::string::npos);
    CHECK(r.out.find("common residue: none") != std::string::npos);

    r = run({"analyze", "a->bbaba,b->bba", "--classp", "--verbose"});
    CHECK(r.out.find("valid |p|: 2") != std::string::npos);

    r = run({"analyze", "a->abbab,b->abb", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["class_p"]["conjugate_member"] == true);
    CHECK(j["class_p"]["conjugate"]["shift"] == "a");
    CHECK(j.contains("conjugates"));
    CHECK(j.contains("symmetry"));
    CHECK(j.contains("charpoly"));

    CHECK(run({"analyze", "a->b,a->c"}).code == 2);
    CHECK(run({"analyze", "x->ac,y->ab", "--charpoly"}).code == 2);
    CHECK(run({"analyze", "a->ab,b->ba", "--cap", "0"}).code == 2);
}

TEST_CASE("cli stab") {
    auto r = run({"stab", "--k", "1"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "level 1: 4 elements (lcp 3)\n"
          "  0: a->-,b->acacab,c->acab\n"
          "  1: a->a,b->cacab,c->cab\n"
          "  2: a->ac,b->acab,c->ab\n"
          "  3: a->aca,b->cab,c->b\n");
    r = run({"stab", "--k", "3", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["lcp"] == 17);
    CHECK(j["elements"].size() == 18);
}

TEST_CASE("cli verify") {
    auto r = run({"verify", "--kmax", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("summary: 13 checks, 0 failed") != std::string::npos);
    CHECK(r.out.find('{') == std::string::npos);

    r = run({"verify", "--kmax", "1", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    bool any_skipped = false;
    for (const auto& report : j) any_skipped = any_skipped || report["status"] == "skipped";
    CHECK(any_skipped);

    r = run({"verify", "--kmax", "5", "--corrupt", "gamma"});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL p_sequence") != std::string::npos);

    CHECK(run({"verify", "--corrupt", "nope"}).code == 2);
    CHECK(run({"verify", "--kmax", "0"}).code == 2);
    CHECK(run({"verify", "--format", "xml"}).code == 2);
}

TEST_CASE("cli usage") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli output is deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"verify", "--kmax", "3", "--format", "json"},
             {"analyze", "a->abbab,b->abb"},
             {"gen", "a->ab,b->ba", "--seed", "a", "--n", "100"}}) {
        CHECK(run(args).out == run(args).out);
    }
}
