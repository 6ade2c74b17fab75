#include <doctest.h>

#include "orbitcert/cli.hpp"
#include "orbitcert/serialize.hpp"

#include <sstream>

using orbitcert::Json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = orbitcert::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::vector<std::string> e8_certify{"certify",
                                          "--type", "E8",
                                          "--levi", "a1,a2,a3,a4,a5,a7",
                                          "--h", "5,3,1,-1,-3,-5,1,-1,0",
                                          "--lambda-prime", "1,7/6,1/3,1/2,2/3,5/6,1/6,-1/6,-9/2",
                                          "--principal"};

void check_round_trip(const std::string& s) {
    auto line = s.substr(0, s.find('\n'));
    CHECK(Json::parse(line).dump() == line);
}

} // namespace

TEST_CASE("documented outputs") {
    auto info = cli({"info", "--type", "E8"});
    CHECK(info.code == 0);
    CHECK(info.out == "{\"dim\":248,\"positive_roots\":120,\"rank\":8}\n");

    auto ind = cli({"induce", "--type", "sp", "--ambient", "4", "--levi", R"({"gl_blocks":[{"k":2,"d":[1,1]}]})"});
    CHECK(ind.code == 0);
    CHECK(ind.out == "[2,2]\n");

    auto tab = cli({"tables", "--table", "rigid", "--algebra", "E8", "--label", "A5+A1"});
    CHECK(tab.code == 0);
    CHECK(tab.out == "{\"dim_z\":46,\"q\":\"2A1\"}\n");

    auto integral = cli({"integral", "--type", "E8", "--lambda-prime", "1,7/6,1/3,1/2,2/3,5/6,1/6,-1/6,-9/2"});
    CHECK(integral.code == 0);
    auto j = Json::parse(integral.out);
    CHECK(j["integral_type"] == "A5+A2+A1");
    CHECK(j["cor68"] == "202");
    CHECK(j["simple_roots"].size() == 8);
}

TEST_CASE("certify exit codes") {
    auto ok = cli(e8_certify);
    CHECK(ok.code == 0);
    auto report = Json::parse(ok.out);
    CHECK(report["verdict"] == "pass");
    CHECK(report["cor68"] == "202");
    CHECK(report["orbit_dim"] == 202);
    for (const char* c : {"A", "B", "C", "D"})
        CHECK(report["conditions"][c]["verdict"] == "pass");

    auto fail = cli({"certify", "--type", "E8", "--levi", "a1,a2,a3,a4,a5,a7", "--h", "5,3,1,-1,-3,-5,1,-1,0",
                     "--lambda-prime", "7,6,5,4,3,2,1,0,-22", "--principal"});
    CHECK(fail.code == 1);
    CHECK(Json::parse(fail.out)["verdict"] == "fail");

    auto undecided = cli({"certify", "--type", "E8", "--levi", "a1,a2,a3,a4,a5,a7", "--h", "5,3,1,-1,-3,-5,1,-1,0",
                          "--lambda-prime", "1,7/6,1/3,1/2,2/3,5/6,1/6,-1/6,-9/2"});
    CHECK(undecided.code == 3);

    // --h defaults to the regular characteristic of the Levi.
    auto implied = cli({"certify", "--type", "E8", "--levi", "a1,a2,a3,a4,a5,a7", "--lambda-prime",
                        "1,7/6,1/3,1/2,2/3,5/6,1/6,-1/6,-9/2", "--principal"});
    CHECK(implied.code == 0);
    CHECK(implied.out == ok.out);

    auto text = cli([] {
        auto a = e8_certify;
        a.insert(a.end(), {"--output", "text"});
        return a;
    }());
    CHECK(text.code == 0);
    CHECK(text.out.find("verdict: pass") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({"info"}).code == 2);
    CHECK(cli({"info", "--type", "Q7"}).code == 2);
    CHECK(cli({"dimz", "--type", "sp", "--partition", "3,1"}).code == 2);
    CHECK(cli({"pairing", "--type", "E8", "--weight", "0.5,0,0,0,0,0,0,0,0", "--root", "a1"}).code == 2);
    CHECK(cli({"induce", "--type", "sp", "--ambient", "4", "--levi", "{not json"}).code == 2);
    CHECK(cli({"tables", "--table", "rigid", "--algebra", "E8", "--label", "E8"}).code == 2);
    CHECK(cli({"info", "--type", "E8", "--output", "xml"}).code == 2);
    auto u = cli({"bogus"});
    CHECK(u.err.find("certify") != std::string::npos);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("other subcommands") {
    auto p = cli({"pairing", "--type", "E8", "--weight", "1,7/6,1/3,1/2,2/3,5/6,1/6,-1/6,-9/2", "--root", "a8"});
    CHECK(p.out == "{\"pairing\":\"5/6\"}\n");
    auto ps = cli({"pairing", "--type", "A2", "--coords", "simple", "--weight", "1,0", "--root", "a1"});
    CHECK(ps.out == "{\"pairing\":\"2\"}\n");
    auto d = cli({"delta-prime", "--type", "E8", "--h", "5,3,1,-1,-3,-5,1,-1,0"});
    CHECK(d.out == "{\"delta_prime\":[\"1\",\"1/2\",\"3/2\",\"1/2\",\"1\",\"0\",\"1/2\",\"-1/2\",\"-9/2\"]}\n");
    CHECK(cli({"dimz", "--type", "so", "--partition", "3,2,2,1"}).out == "{\"dim_z\":12}\n");
    CHECK(cli({"rigid", "--type", "sp", "--partition", "2,1,1"}).out == "{\"rigid\":true}\n");
    auto r = cli({"rigid", "--type", "sp", "--partition", "4"});
    CHECK(Json::parse(r.out)["witness"]["gl_blocks"][0]["d"] == Json::array({2}));
    CHECK(cli({"oracle", "--kind", "centralizer", "--type", "sp", "--partition", "2,2"}).out == "{\"dim_z\":4}\n");
    auto csv = cli({"tables", "--table", "duality", "--format", "csv"});
    CHECK(csv.out.rfind("algebra,label,dual_label\nF4,~A1,F4(a1)\n", 0) == 0);
    auto all = cli({"tables", "--table", "rigid"});
    CHECK(Json::parse(all.out).size() == 34);
    auto ve = cli({"induce", "--type", "so", "--ambient", "4", "--levi", R"({"gl_blocks":[{"k":2,"d":[1,1]}]})"});
    CHECK(ve.out == "[2,2]\n");
    CHECK(ve.err.find("very even") != std::string::npos);
}

TEST_CASE("seeded oracle runs are reproducible") {
    const std::string levi = R"({"type":"so","ambient":10,"gl_blocks":[{"k":2,"d":[1,1]},{"k":1,"d":[1]}],"tail":{"m":4,"c":[3,1]}})";
    auto a = cli({"--seed", "17", "oracle", "--kind", "jordan", "--levi", levi});
    auto b = cli({"oracle", "--kind", "jordan", "--levi", levi, "--seed", "17"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == cli({"induce", "--levi", levi}).out);
}

TEST_CASE("JSON output round-trips byte for byte") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             e8_certify,
             {"info", "--type", "F4"},
             {"integral", "--type", "E8", "--lambda-prime", "1,7/6,1/3,1/2,2/3,5/6,1/6,-1/6,-9/2"},
             {"tables", "--table", "rigid"},
             {"tables", "--table", "duality"},
             {"rigid", "--type", "so", "--partition", "3,3,1"},
             {"delta-prime", "--type", "G2", "--h", "0,0,0"}}) {
        auto r = cli(args);
        CHECK(r.code == 0);
        check_round_trip(r.out);
    }
}
