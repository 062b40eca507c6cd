#include <sstream>

#include "doctest.h"
#include "script.hpp"
#include "support.hpp"

using namespace ephem;
using namespace ephem::cli;
using namespace testing_support;

namespace {

std::vector<ScriptLine> parse(const std::string& s, bool tokens) {
    std::istringstream in(s);
    return parse_script(in, tokens);
}

}  // namespace

TEST_CASE("byte-mode scripts") {
    const auto lines = parse("D 13 13\nI -1 b\n\n# note\nX 3 a b\r\nI 0  x\n", false);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0].op == EditOp::erase(13, 13));
    CHECK(lines[1].op == EditOp::insert(-1, letters("b")));
    CHECK(lines[2].op == EditOp::substitute(3, letters("a b")));
    CHECK(lines[2].line_no == 5);
    CHECK(lines[3].op == EditOp::insert(0, letters(" x")));
    CHECK(parse("", false).empty());
}

TEST_CASE("token-mode scripts") {
    const auto lines = parse("I 4 7,0,1000000\nX 0 3\nD 1 2\n", true);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0].op == EditOp::insert(4, {7, 0, 1000000}));
    CHECK(lines[1].op == EditOp::substitute(0, {3}));
}

TEST_CASE("malformed lines name their line number") {
    CHECK_THROWS_WITH_AS(parse("D 1 2\nQ 3\n", false), doctest::Contains("line 2"), ScriptError);
    CHECK_THROWS_AS(parse("D 1\n", false), ScriptError);
    CHECK_THROWS_AS(parse("D 1 2 3\n", false), ScriptError);
    CHECK_THROWS_AS(parse("I x a\n", false), ScriptError);
    CHECK_THROWS_AS(parse("I 3\n", false), ScriptError);
    CHECK_THROWS_AS(parse("I 3 \n", false), ScriptError);
    CHECK_THROWS_AS(parse("I 3 1,,2\n", true), ScriptError);
    CHECK_THROWS_AS(parse("I 3 1,2,\n", true), ScriptError);
    CHECK_THROWS_AS(parse("I 3 -1\n", true), ScriptError);
    CHECK_THROWS_AS(parse("I 3 1 2\n", true), ScriptError);
}

TEST_CASE("token files") {
    std::istringstream ok(" 1 2\n3\t40 \n");
    CHECK(parse_tokens(ok, "t") == std::vector<Letter>{1, 2, 3, 40});
    std::istringstream bad("1 two 3");
    CHECK_THROWS_AS(parse_tokens(bad, "t"), ScriptError);
}
