#include <random>
#include <string>

#include "doctest.h"
#include "sqtop/parse.hpp"
#include "support.hpp"

using namespace sqtop;
using sqtop::test::make_pres;
using sqtop::test::pc;

namespace {

const Presentation& fixture() {
    static Presentation p = make_pres("parse", Mode::Gf2Param, 60,
                                      {{"y2", 2}, {"y3", 3}, {"y12", 12}, {"y16", 16}},
                                      {}, {"a1", "b1"});
    return p;
}

std::string rt(const std::string& expr) {
    const Presentation& p = fixture();
    return render(parse_class(expr, p.gens(), p.params()), p.gens(), p.params());
}

}  // namespace

TEST_CASE("precedence: ^ over * over +") {
    const Presentation& p = fixture();
    CHECK(pc(p, "y2*y3^2") == pc(p, "y2*(y3*y3)"));
    CHECK(pc(p, "y2^2+y3*y3") == pc(p, "y3^2 + y2*y2"));
    CHECK(pc(p, "(y2+y3)^2") == pc(p, "y2^2 + y3^2"));
    CHECK(pc(p, "a1*y2 + b1*y2") == pc(p, "(a1+b1)*y2"));
}

TEST_CASE("whitespace is insignificant") {
    const Presentation& p = fixture();
    CHECK(pc(p, "  y2 ^ 3  *  y3 + y12 * y3 ") == pc(p, "y2^3*y3+y3*y12"));
}

TEST_CASE("integer literals reduce mod 2 in GF(2) domains") {
    const Presentation& p = fixture();
    CHECK(pc(p, "2*y2").is_zero());
    CHECK(pc(p, "3*y2") == pc(p, "y2"));
    CHECK(pc(p, "4").is_zero());
    CHECK(pc(p, "7") == Gf2Poly::unit(4));
    CHECK(pc(p, "0").is_zero());
}

TEST_CASE("render and parse are mutually inverse") {
    CHECK(rt("y2^9 + y2^3*y12 + a1*y3^2*y12 + (1+a1)*y2*y16") ==
          "y2^9 + y2^3*y12 + a1*y3^2*y12 + (1+a1) * y2*y16");
    // A second pass through the printed form is a fixed point.
    CHECK(rt(rt("(1+a1+b1)*y2*y3 + y2*y3")) == rt("(a1+b1)*y2*y3"));

    std::mt19937_64 rng(7);
    const Presentation& p = fixture();
    for (int trial = 0; trial < 100; ++trial) {
        Gf2Poly cls(4);
        for (int t = 0; t < 4; ++t) {
            std::vector<uint32_t> exps = {static_cast<uint32_t>(rng() % 4),
                                          static_cast<uint32_t>(rng() % 3),
                                          static_cast<uint32_t>(rng() % 2),
                                          static_cast<uint32_t>(rng() % 2)};
            cls.add_term(Monomial(exps, p.gens()), ParamPoly::from_masks({rng() % 4}));
        }
        std::string printed = render(cls, p.gens(), p.params());
        CHECK(parse_class(printed, p.gens(), p.params()) == cls);
    }
}

TEST_CASE("integer expressions accept subtraction and big literals") {
    GeneratorTable gens({{"t", 2}, {"w", 8}});
    IntPoly p = parse_int_class("t^4 - 3*w", gens);
    CHECK(p.term_count() == 2);
    CHECK(render(p, gens) == "t^4 - 3*w");
    CHECK(parse_int_class("-t", gens) == parse_int_class("0 - t", gens));
    CHECK(parse_int_class("5*t - 2*t - 3*t", gens).is_zero());

    IntPoly big = parse_int_class("9999999999999999999*t", gens);
    CHECK(big.terms().begin()->second == BigInt("9999999999999999999"));
    CHECK(render(big, gens) == "9999999999999999999*t");
    // Coefficients beyond one literal's range are still exact via products.
    IntPoly prod = parse_int_class("9999999999999999999*9999999999999999999*t", gens);
    CHECK(prod.terms().begin()->second == BigInt("9999999999999999999") * BigInt("9999999999999999999"));
}

TEST_CASE("GF(2) input rejects '-'") {
    const Presentation& p = fixture();
    CHECK_THROWS_WITH_AS(pc(p, "y2 - y3"),
                         "'-' is only available with integer coefficients (at offset 3)",
                         SyntaxError);
}

TEST_CASE("syntax errors carry offsets") {
    const Presentation& p = fixture();
    try {
        pc(p, "y2 + ");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(std::string(e.what()).find("unexpected end of expression") != std::string::npos);
    }
    try {
        pc(p, "y2 + @");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.pos == 5);
        CHECK(std::string(e.what()).find("unexpected character '@'") != std::string::npos);
    }
    CHECK_THROWS_AS(pc(p, "(y2 + y3"), SyntaxError);   // missing ')'
    CHECK_THROWS_AS(pc(p, "y2^"), SyntaxError);        // missing exponent
    CHECK_THROWS_AS(pc(p, ""), SyntaxError);
    CHECK_THROWS_AS(pc(p, "y2 y3"), SyntaxError);      // implicit product
}

TEST_CASE("unknown identifiers and bad exponents") {
    const Presentation& p = fixture();
    CHECK_THROWS_WITH_AS(pc(p, "zz + y2"), "unknown identifier 'zz' at offset 0",
                         UnknownIdentifier);
    try {
        pc(p, "y2^0 + y9");
        FAIL("expected UnknownIdentifier");
    } catch (const UnknownIdentifier& e) {
        CHECK(std::string(e.what()).find("'y9' at offset 7") != std::string::npos);
    }
    CHECK_THROWS_AS(pc(p, "y2^-2"), NegativeExponent);
    CHECK_THROWS_AS(pc(p, "y2^1000001"), SyntaxError);          // exponent cap
    CHECK_THROWS_AS(pc(p, "(y2+y3)^65"), SyntaxError);          // multi-term base cap
    CHECK_NOTHROW(pc(p, "(y2+y3)^12"));
    CHECK_THROWS_AS(pc(p, "99999999999999999999999999*y2"), SyntaxError);  // GF(2) literal cap
}

TEST_CASE("parameters are not generators and vice versa") {
    const Presentation& p = fixture();
    // Parameters carry degree 0, so a bare parameter is a degree-0 class.
    Gf2Poly bare = pc(p, "a1");
    CHECK(bare.degree() == 0);
    GeneratorTable int_gens({{"t", 2}});
    CHECK_THROWS_AS(parse_int_class("a1*t", int_gens), UnknownIdentifier);
}

TEST_CASE("exponent zero collapses to the unit") {
    const Presentation& p = fixture();
    CHECK(pc(p, "y2^0") == Gf2Poly::unit(4));
    CHECK(pc(p, "y2^0 * y3") == pc(p, "y3"));
    CHECK(pc(p, "(y2 + y3)^0") == Gf2Poly::unit(4));
}
