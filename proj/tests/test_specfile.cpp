#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pim/catalog.hpp"
#include "pim/specfile.hpp"

using namespace pim;

namespace {

const char* kExampleSpec = R"(# 5-dimensional solvable example
pim 1
name = lie5(lambda=1,mu=1)
n = 2
param lambda = 1
param mu = 1
bracket[0,1] = lambda*e2 - e3 + mu*e4
bracket[0,2] = -lambda*e1 - mu*e3 - e4
bracket[0,3] = -e1 + mu*e2 + lambda*e4
bracket[0,4] = -mu*e1 - e2 - lambda*e3
phi[1] = e3
phi[2] = e4
phi[3] = e1
phi[4] = e2
xi = e0
eta = 1 0 0 0 0
g = diag(1 1 1 1 1)
)";

}  // namespace

TEST_CASE("parametric spec parses to the built-in example") {
    const ParsedSpec spec = parse_spec(kExampleSpec);
    CHECK(spec.instance == build_section5({1, 1}));
    CHECK(spec.params.at("lambda") == 1);
    CHECK(spec.params.at("mu") == 1);
}

TEST_CASE("parameter overrides rebuild the family member") {
    const ParsedSpec spec =
        parse_spec(kExampleSpec, {{"lambda", Rational(2)}, {"mu", Rational(-3)}});
    PiManifoldInstance want = build_section5({2, -3});
    want.name = "lie5(lambda=1,mu=1)";  // the file's name survives overrides
    CHECK(spec.instance == want);
}

TEST_CASE("emit then parse is the identity on every catalog instance") {
    for (const auto& inst : build_catalog()) {
        CAPTURE(inst.name);
        const std::string text = emit_spec(inst);
        const ParsedSpec spec = parse_spec(text);
        CHECK(spec.instance == inst);
        CHECK(emit_spec(spec.instance) == text);
    }
}

TEST_CASE("alternative eta and g spellings") {
    std::string text = R"(pim 1
n = 1
phi[1] = e2
phi[2] = e1
xi = e0
eta[0] = 1
g[0,0] = 1
g[1,1] = 2
g[2,2] = 2
g[1,2] = 1
)";
    const ParsedSpec spec = parse_spec(text);
    CHECK(spec.instance.structure.metric.g(1, 2) == 1);
    CHECK(spec.instance.structure.metric.g(2, 1) == 1);
    CHECK(spec.instance.structure.eta(0) == 1);
}

TEST_CASE("parse errors carry the line") {
    CHECK_THROWS_WITH_AS(parse_spec("pim 2\n"), "line 1: expected header 'pim 1'",
                         ParseError);
    CHECK_THROWS_AS(parse_spec("pim 1\nbracket[0,1] = e2\n"), ParseError);  // before n
    CHECK_THROWS_AS(parse_spec("pim 1\nn = 2\nxi = e9\n"), ParseError);
    CHECK_THROWS_AS(parse_spec("pim 1\nn = 2\nbracket[0,1] = foo*e2\n"), ParseError);
    CHECK_THROWS_AS(parse_spec("pim 1\nn = 2\ng = diag(1 1 1)\n"), ParseError);
    CHECK_THROWS_AS(parse_spec(kExampleSpec, {{"nu", Rational(1)}}), ParseError);
}

TEST_CASE("structurally invalid files are rejected by identity name") {
    // phi with nonzero trace
    std::string text = R"(pim 1
n = 1
phi[1] = e1
phi[2] = e2
xi = e0
eta = 1 0 0
g = diag(1 1 1)
)";
    CHECK_THROWS_AS(parse_spec(text), ValidationError);
    try {
        parse_spec(text);
    } catch (const ValidationError& e) {
        const std::string what = e.what();
        CHECK((what == "trace-phi" || what == "phi-squared"));
    }

    // non-invertible metric
    std::string sing = R"(pim 1
n = 1
phi[1] = e2
phi[2] = e1
xi = e0
eta = 1 0 0
g = diag(1 1 0)
)";
    CHECK_THROWS_WITH_AS(parse_spec(sing), "metric-invertibility", ValidationError);
}
