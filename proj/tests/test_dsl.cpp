#include <doctest.h>

#include <orbilift/session.hpp>

#include "test_util.hpp"

using namespace orbilift;
using orbilift::dsl::parse;
using orbilift::dsl::print;

namespace {
Polynomial var(const std::string& n) { return Polynomial::variable(n); }
}  // namespace

TEST_CASE("parse a group declaration over a cyclotomic field") {
    auto spec = parse("group G = [[zeta(3), 0], [0, 1]]");
    REQUIRE(spec.groups.size() == 1);
    const auto& m = spec.groups[0].generators[0];
    CHECK(m.rows() == 2);
    CHECK(m.at(0, 0) == Cyclotomic::zeta(3));
    CHECK(m.at(1, 1) == Cyclotomic(1));
}

TEST_CASE("parse a mixed tensor declaration") {
    auto spec = parse("tensor T = y1 * d(y1) (x) ddy(y2)");
    REQUIRE(spec.tensors.size() == 1);
    const TensorField& T = spec.tensors[0].value;
    CHECK(T.p() == 1);
    CHECK(T.q() == 1);
    CHECK(T.coords() == VarList{"y1", "y2"});
    // contravariant slots come first in the stored index
    CHECK(T.component({1, 0}) == RationalFunction(var("y1")));
}

TEST_CASE("parse rational coefficients and scalar tensors") {
    auto spec = parse("tensor S = 1/2 * d(y) + y * d(y)\n"
                      "tensor F = 3/4");
    const TensorField& S = spec.find_tensor("S")->value;
    CHECK(S.component({0}) ==
          RationalFunction(var("y") + Polynomial::constant(Cyclotomic(BigRational(1, 2)))));
    const TensorField& F = spec.find_tensor("F")->value;
    CHECK(F.p() == 0);
    CHECK(F.q() == 0);
    CHECK(F.component({}) == RationalFunction(Polynomial::constant(Cyclotomic(BigRational(3, 4)))));
}

TEST_CASE("wedge expands with signs") {
    auto spec = parse("form w = (z1 - z2) * d(z1) ^ d(z2)");
    const TensorField& w = spec.find_tensor("w")->value;
    CHECK(w.q() == 2);
    CHECK(w.component({0, 1}) == RationalFunction(var("z1") - var("z2")));
    CHECK(w.component({1, 0}) == RationalFunction(var("z2") - var("z1")));
    CHECK(is_skew_covariant(w));
}

TEST_CASE("command parsing") {
    auto spec = parse("group G = [[-1]]\n"
                      "tensor T = d(y)\n"
                      "lift T over G\n"
                      "validate thm37\n"
                      "analyze G");
    REQUIRE(spec.commands.size() == 3);
    CHECK(spec.commands[0].kind == "lift");
    CHECK(spec.commands[0].args == std::vector<std::string>{"T", "G"});
    CHECK(spec.commands[1].kind == "validate");
    CHECK(spec.commands[2].kind == "analyze");
}

TEST_CASE("parse errors carry positions") {
    try {
        parse("group G = [[1, 2], [3]]");
        FAIL("expected a parse error");
    } catch (const dsl::ParseError& e) {
        CHECK(std::string(e.what()).find("1:11") == 0);
        CHECK(std::string(e.what()).find("square") != std::string::npos);
    }
    try {
        parse("tensor T = d(y) @");
        FAIL("expected a parse error");
    } catch (const dsl::ParseError& e) {
        CHECK(std::string(e.what()).find("unexpected character") != std::string::npos);
    }
    CHECK_THROWS_AS(parse("tensor T = d(y) - d(y)"), dsl::ParseError);  // identically zero
    CHECK_THROWS_AS(parse("tensor T = d(y) + ddy(y)"), dsl::ParseError);  // signature mismatch
    CHECK_THROWS_AS(parse("form w = d(z1) (x) d(z1)"), dsl::ParseError);  // not skew
}

TEST_CASE("parse-print-parse is a fixpoint") {
    const std::string source =
        "coords z1 z2\n"
        "group G = [[0, 1], [1, 0]]\n"
        "group K = [[zeta(3), 0], [0, 1]], [[1, 0], [0, -1]]\n"
        "tensor T = y1 * d(y1) (x) ddy(y2) + 1/2 * d(y2) (x) ddy(y1)\n"
        "form w = (z1 - z2) * d(z1) ^ d(z2)\n"
        "connection C [y] = { y y y : -1/(2*y) }\n"
        "map f [y] = (2*y) inverse (1/2*y)\n"
        "analyze G\n"
        "invariants K\n"
        "divisor G\n"
        "lift T over G\n"
        "solomon w over G\n"
        "validate thm37\n"
        "check-diffeo f from G to K\n";
    auto first = parse(source);
    auto second = parse(print(first));
    CHECK(first == second);
    // printing is deterministic
    CHECK(print(first) == print(second));
}

TEST_CASE("session: analyze, divisor and lift over the sign group") {
    const std::string source =
        "group Z2 = [[-1]]\n"
        "tensor T = d(y)\n"
        "tensor B = ddy(y)\n"
        "analyze Z2\n"
        "divisor Z2\n"
        "lift T over Z2\n"
        "lift B over Z2\n";
    auto result = session::run(parse(source));
    CHECK(result.exit_code == 0);
    REQUIRE(result.records.size() == 4);

    CHECK(result.records[0]["order"] == 2);
    CHECK(result.records[0]["reflections"] == 1);
    CHECK(result.records[0]["is_reflection_group"] == true);

    CHECK(result.records[1]["reflection_divisor"][0]["coefficient"] == "2");

    CHECK(result.records[2]["verdict"] == "lifts");
    CHECK(result.records[2]["lifted"] == "2*z*d(z)");
    CHECK(result.records[2]["cross_check"] == "ok");

    CHECK(result.records[3]["verdict"] == "fails");
    CHECK(result.records[3]["mu_S"] == -1);
}

TEST_CASE("session: pullback route over S_2") {
    const std::string source =
        "group S2 = [[0, 1], [1, 0]]\n"
        "tensor T = ddy(y1) + y1 * ddy(y2)\n"
        "lift T over S2\n";
    auto result = session::run(parse(source));
    REQUIRE(result.exit_code == 0);
    CHECK(result.records[0]["route"] == "pullback");
    CHECK(result.records[0]["verdict"] == "lifts");
}

TEST_CASE("session: engine errors are recorded with the command index") {
    const std::string source =
        "group PM = [[-1, 0], [0, -1]]\n"
        "tensor T = d(y1)\n"
        "analyze PM\n"
        "lift T over PM\n";
    auto result = session::run(parse(source));
    CHECK(result.exit_code == 1);
    REQUIRE(result.records.size() == 2);
    CHECK_FALSE(result.records[0].contains("error"));
    CHECK(result.records[1]["index"] == 1);
    CHECK(result.records[1].contains("error"));
}

TEST_CASE("session: lift-connection round trip") {
    const std::string source =
        "group Z3 = [[zeta(3)]]\n"
        "connection C [y] = { y y y : -2/(3*y) }\n"
        "connection D [y] = { }\n"
        "lift-connection C over Z3\n"
        "lift-connection D over Z3\n";
    auto result = session::run(parse(source));
    CHECK(result.exit_code == 0);
    CHECK(result.records[0]["verdict"] == "lifts");
    CHECK(result.records[0]["lifted"].empty());  // the flat connection upstairs
    CHECK(result.records[1]["verdict"] == "fails");
}

TEST_CASE("session: check-diffeo") {
    const std::string source =
        "group A = [[zeta(2)]]\n"
        "group B = [[zeta(3)]]\n"
        "map f [y] = (2*y) inverse (1/2*y)\n"
        "check-diffeo f from A to A\n"
        "check-diffeo f from A to B\n";
    auto result = session::run(parse(source));
    CHECK(result.exit_code == 0);
    CHECK(result.records[0]["preserves_divisor"] == true);
    CHECK(result.records[1]["preserves_divisor"] == false);
}

TEST_CASE("session honours the group enumeration cap") {
    const std::string source =
        "group G = [[0, 1, 0], [1, 0, 0], [0, 0, 1]], [[1, 0, 0], [0, 0, 1], [0, 1, 0]]\n"
        "analyze G\n";
    session::RunOptions opts;
    opts.group_cap = 4;  // S_3 has six elements
    auto result = session::run(parse(source), opts);
    CHECK(result.exit_code == 1);
    REQUIRE(result.records[0].contains("error"));
    CHECK(result.records[0]["error"] == "group too large or infinite");
}

TEST_CASE("session output is deterministic") {
    const std::string source =
        "group G = [[zeta(4), 0], [0, 1]]\n"
        "analyze G\n"
        "divisor G\n"
        "invariants G\n";
    auto r1 = session::run(parse(source));
    auto r2 = session::run(parse(source));
    CHECK(r1.json_lines() == r2.json_lines());
    CHECK(r1.text() == r2.text());
    CHECK_FALSE(r1.json_lines().empty());
}

TEST_CASE("custom V-side coordinate names flow through the session") {
    const std::string source =
        "coords x1 x2\n"
        "group G = [[1, 0], [0, zeta(4)]]\n"
        "analyze G\n"
        "divisor G\n";
    auto result = session::run(parse(source));
    REQUIRE(result.exit_code == 0);
    CHECK(result.records[0]["hyperplanes"][0]["form"] == "x2");
    CHECK(result.records[1]["reflection_divisor"][0]["hypersurface"] == "x2");
    CHECK(result.records[1]["reflection_divisor"][0]["coefficient"] == "4");
}

TEST_CASE("solomon through the session layer") {
    const std::string source =
        "group Z2 = [[-1]]\n"
        "form w = 2*z * d(z)\n"
        "solomon w over Z2\n";
    auto result = session::run(parse(source));
    REQUIRE(result.exit_code == 0);
    CHECK(result.records[0]["phi"] == "d(y)");
    CHECK(result.records[0]["round_trip"] == "exact");
}
