#include <doctest.h>

#include <sstream>

#include "cli.hpp"

using whit::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("act") {
    const Result r = call({"act", "d1(0,1)", "w"});
    CHECK(r.code == 0);
    CHECK(r.out == "s1 * w\n");
    CHECK(call({"act", "d1(0,1)", "w", "--psi", "2,3,5"}).out == "2 * w\n");
    CHECK(call({"act", "h2", "d2(0,2) w"}).out == "s3 * h2 w\n");
}

TEST_CASE("bracket and normal form") {
    CHECK(call({"bracket", "d2(0,1)", "d2(0,2)"}).out == "d2(0,3)\n");
    CHECK(call({"nf", "d2(0,2) h2 w"}).out == "s3 * h2 w - 2*s3 * w\n");
}

TEST_CASE("wvectors") {
    const Result r = call({"wvectors", "--cap", "0,2", "--entries", "0,1;0,2", "--kmax", "1", "--rmax", "2", "--psi",
                           "1,1,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "w\nz w\nz^2 w\n");
    CHECK(call({"wvectors", "--cap", "0,2", "--entries", "0,1", "--psi", "symbolic"}).code == 2);
}

TEST_CASE("reduce and ideal") {
    const Result r = call({"reduce", "h2 w", "--psi", "1,2,3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("f = -6\n", 0) == 0);
    CHECK(r.out.find("lemma 3.7") != std::string::npos);
    CHECK(call({"ideal", "z^2 w - w", "z^2 w + 2*z w - 3 * w", "--psi", "1,2,3"}).out.rfind("g = z - 1\n", 0) == 0);
}

TEST_CASE("verify") {
    const Result d = call({"verify", "decompose"});
    CHECK(d.code == 0);
    CHECK(d.out.find("two-bracket form") != std::string::npos);
    CHECK(call({"verify", "3.7", "h2 w"}).code == 0);
    const Result e = call({"verify", "3.11.3", "--random", "3"});
    CHECK(e.code == 0);
    CHECK(e.out.find("3.11.3:psi-index") != std::string::npos);
    CHECK(call({"verify", "3.11.3", "--random", "3", "--strict"}).code == 1);
    CHECK(call({"verify", "3.5", "h2 w", "--omega", "d1(0,1)"}).code == 0);
    CHECK(call({"verify", "3.13"}).code == 2);
}

TEST_CASE("json output and input") {
    const Result r = call({"act", "d1(0,1)", "w", "--format", "json"});
    CHECK(r.code == 0);
    const Result back = call({"nf", r.out});
    CHECK(back.out == "s1 * w\n");
}

TEST_CASE("exit codes") {
    CHECK(call({"act", "d1(0 1)", "w"}).code == 2);
    CHECK(call({"nf", "d1(0,-1) x"}).code == 2);
    CHECK(call({"act", "d1(0,1)", "w", "--psi", "1,0,3"}).code == 3);
    CHECK(call({"probe", "w", "--a", "2", "--psi", "0,2,3"}).code == 3);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"--help"}).code == 0);
    CHECK(call({"probe", "d1(0,-1) w", "--a", "2", "--psi", "1,2,3"}).code == 0);
}

TEST_CASE("leading minus after the option terminator") {
    CHECK(call({"nf", "--", "-2 * z w"}).out == "-2 * z w\n");
}
