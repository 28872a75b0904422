#include <doctest.h>

#include "gblab/io.hpp"

using namespace gblab;

TEST_CASE("text parser round trip") {
    const std::string text =
        "ring q=31 vars=x1,x2,x3\n"
        "x1^2 + 3*x1*x2 + 30*x3\n"
        "x2^2 + 5\n";
    const NamedSystem s = parseSystemText(text);
    CHECK(s.system.ring.modulus == 31);
    CHECK(s.system.ring.nvars == 3);
    CHECK(s.system.gens.size() == 2);
    CHECK(s.system.gens[0].degree() == 2);

    const NamedSystem again = parseSystemText(writeSystemText(s));
    for (std::size_t i = 0; i < s.system.gens.size(); ++i)
        CHECK(again.system.gens[i] == s.system.gens[i]);
}

TEST_CASE("parser accepts negative coefficients and comments") {
    const NamedSystem s = parseSystemText(
        "# comment line\n"
        "ring q=7 vars=a,b\n"
        "\n"
        "-a^2 - 2*a*b + b\n");
    CHECK(polyToString(s.system.gens[0], s.varNames) == "6*a^2 + 5*a*b + b");
}

TEST_CASE("parser rejections") {
    CHECK_THROWS_AS(parseSystemText("ring q=7 vars=x\n5\n"), ParseError);      // constant
    CHECK_THROWS_AS(parseSystemText("ring q=7 vars=x\n7*x - 7*x + x - x\n"), ParseError); // zero
    CHECK_THROWS_AS(parseSystemText("ring q=7 vars=x\ny + x\n"), ParseError);  // unknown var
    CHECK_THROWS_AS(parseSystemText("ring q=8 vars=x\nx^2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parseSystemText("q=7 vars=x\nx^2\n"), ParseError);         // bad header
    CHECK_THROWS_AS(parseSystemText("ring q=7 vars=x\nx^2 +\n"), ParseError);  // trailing op
    CHECK_THROWS_AS(parseSystemText("ring q=7 vars=x\nx^5000\n"), ParseError); // exponent cap
    CHECK_THROWS_AS(parseSystemText("ring q=7 vars=x\nx^^2\n"), ParseError);
    CHECK_THROWS_AS(parseSystemText("ring q=7 vars=x1,x2\nx1 x2\n"), ParseError);
    CHECK_THROWS_AS(parseSystemText("ring q=7 vars=x\n* x\n"), ParseError);
    CHECK_THROWS_AS(parseSystemText("ring q=7 vars=x\nx^\n"), ParseError);
}

TEST_CASE("exponents are not reduced modulo q") {
    const NamedSystem s = parseSystemText("ring q=7 vars=x\nx^9 + 9*x\n");
    CHECK(s.system.gens[0].degree() == 9);
    CHECK(polyToString(s.system.gens[0], s.varNames) == "x^9 + 2*x");
}

TEST_CASE("json parser validates exponents") {
    CHECK_THROWS_AS(
        parseSystemJson(R"({"ring":{"q":7,"vars":["x"]},"polys":[[[[-1],3]]]})"),
        ParseError);
}

TEST_CASE("json mirror round trip") {
    const NamedSystem s = parseSystemText(
        "ring q=73 vars=x1,x2\n"
        "x1^2 + 72*x1*x2 + 3*x2\n"
        "x2^2 + x1\n");
    const NamedSystem back = parseSystemJson(writeSystemJson(s));
    CHECK(back.system.ring == s.system.ring);
    CHECK(back.varNames == s.varNames);
    for (std::size_t i = 0; i < s.system.gens.size(); ++i)
        CHECK(back.system.gens[i] == s.system.gens[i]);
}

TEST_CASE("homogenized variable naming avoids clashes") {
    CHECK(homogenizedNames({"x1", "x2"}) == std::vector<std::string>{"x1", "x2", "y"});
    CHECK(homogenizedNames({"x", "y"}) == std::vector<std::string>{"x", "y", "y_"});
}
