#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "biserial/cli.hpp"

using namespace biserial;
using nlohmann::json;

namespace {

int cli(std::vector<std::string> args, std::string* out = nullptr) {
    std::string o, e;
    int code = run_cli(args, &o, &e);
    if (out) *out = o;
    return code;
}

}  // namespace

TEST_CASE("exit codes") {
    CHECK(cli({"witt", "--d", "4"}) == 0);
    CHECK(cli({}) == 2);
    CHECK(cli({"nonsense"}) == 2);
    CHECK(cli({"witt", "--d", "2"}) == 2);
    CHECK(cli({"suite", "nope"}) == 2);
    CHECK(cli({"algebra", "--family", "psl9"}) == 2);
    CHECK(cli({"algebra", "--family", "a7", "--d", "4"}) == 2);
    CHECK(cli({"module", "--word", "zz"}) == 2);
    CHECK(cli({"module", "--word", "be", "--projective", "1"}) == 2);
    CHECK(cli({"udr", "--word", "be- et"}) == 2);
    CHECK(cli({"udr", "--word", "1_1"}) == 1);
    CHECK(cli({"udr", "--word", "be- de- et-"}) == 0);
    CHECK(cli({"suite", "end-k", "--family", "psl2"}) == 2);
}

TEST_CASE("witt text output") {
    std::string out;
    REQUIRE(cli({"witt", "--d", "4"}, &out) == 0);
    CHECK(out.find("p_4(t) = t^3 - 2*t") != std::string::npos);
    CHECK(out.find("rho identity: holds") != std::string::npos);
}

TEST_CASE("suite report shape") {
    std::string out;
    REQUIRE(cli({"suite", "projectives", "--family", "psl1", "--d", "3", "--format", "json"}, &out) == 0);
    json j = json::parse(out);
    CHECK(j["schema"] == "biserial-suite-report");
    CHECK(j["suite"] == "projectives");
    CHECK(j["verdict"] == "pass");
    CHECK(j["presentation_hash"].get<std::string>().size() > 0);
    CHECK(j["toolkit_version"] == toolkit_version());
    std::vector<std::string> ids;
    for (const auto& c : j["checks"]) {
        ids.push_back(c["id"]);
        CHECK(c.contains("runtime_ms"));
        CHECK(c["verdict"] == "pass");
    }
    CHECK(std::is_sorted(ids.begin(), ids.end()));
}

TEST_CASE("overall verdict is the conjunction of the checks") {
    SuiteParams sp;
    SuiteReport r = run_suite("uniserial", sp);
    CHECK(r.pass());
    r.checks[0].pass = false;
    CHECK(!r.pass());
    CHECK(normalized(r)["verdict"] == "fail");
    CHECK(to_text(r).find("FAIL ") != std::string::npos);
}

TEST_CASE("normalized reports do not depend on jobs") {
    for (const char* fam : {"psl1", "a7"}) {
        std::string a, b;
        cli({"suite", "cross-oracle", "--family", fam, "--format", "json", "--normalize", "--jobs", "1"}, &a);
        cli({"suite", "cross-oracle", "--family", fam, "--format", "json", "--normalize", "--jobs", "4"}, &b);
        CHECK(a == b);
        CHECK(a.find("runtime_ms") == std::string::npos);
    }
}

TEST_CASE("cross-oracle compares over each requested field") {
    for (int e : {1, 3}) {
        SuiteParams sp;
        sp.family = "psl2";
        sp.field_ext = e;
        SuiteReport r = run_suite("cross-oracle", sp);
        CHECK(r.pass());
        CHECK(r.parameters["field_ext"] == e);
    }
}

TEST_CASE("other subcommands") {
    std::string out;
    CHECK(cli({"algebra", "--family", "psl2", "--d", "3", "--format", "json"}, &out) == 0);
    CHECK(json::parse(out)["projectives"].size() == 3);
    CHECK(cli({"strings", "--max-len", "2", "--format", "json"}, &out) == 0);
    CHECK(json::parse(out)["strings"].size() > 3);
    CHECK(cli({"strings", "--word", "be- de- et-", "--format", "json"}, &out) == 0);
    CHECK(json::parse(out)["valid"] == true);
    CHECK(cli({"strings", "--bands", "--max-len", "6"}, &out) == 0);
    CHECK(cli({"module", "--projective", "1", "--format", "json"}, &out) == 0);
    CHECK(json::parse(out)["projective"] == true);
    CHECK(cli({"strings", "--bands", "--max-len", "6", "--format", "json"}, &out) == 0);
    std::string band = json::parse(out)["bands"][0]["band"];
    CHECK(cli({"module", "--band", band, "--lambda", "2", "--format", "json"}, &out) == 0);
    CHECK(json::parse(out)["module"].is_object());
    CHECK(cli({"module", "--band", band, "--lambda", "0"}) == 2);
    CHECK(cli({"hom", "--source", "1_1", "--target", "be- de- et-", "--format", "json"}, &out) == 0);
    CHECK(json::parse(out)["hom_dim"] == json::parse(out)["intertwiner_dim"]);
    CHECK(cli({"suite", "list"}, &out) == 0);
    CHECK(out.find("cross-oracle") != std::string::npos);
}

TEST_CASE("classify writes component graphs") {
    std::string out;
    std::string path = "classify_graph_test.json";
    REQUIRE(cli({"classify", "--family", "a7", "--max-len", "8", "--format", "md", "--emit-graph", path}, &out) == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    json g = json::parse(f);
    CHECK(g["components"].size() > 0);
    CHECK(g["components"][0]["graph"]["directed"] == true);
    std::remove(path.c_str());
}
