#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pim/catalog.hpp"
#include "pim/classifier.hpp"

using namespace pim;

TEST_CASE("the example family is F4 with all special flags") {
    for (const auto& [l, m] : std::vector<std::pair<Rational, Rational>>{
             {0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, -3}, {Rational(1, 2), Rational(1, 3)}}) {
        const PiManifoldInstance inst = build_section5({l, m});
        CAPTURE(inst.name);
        const ClassificationReport c = classify(inst);
        CHECK(c.label == ClassLabel::F4);
        CHECK(c.theta_xi == -4);
        CHECK(c.theta_star_xi == 0);
        CHECK(c.f4_prime);        // theta(xi) = -2n with n = 2
        CHECK(c.para_sasaki);
        CHECK(c.paracontact);
        CHECK(c.zero_residual_labels == std::vector<ClassLabel>{ClassLabel::F4});
    }
}

TEST_CASE("abelian instances are F0") {
    for (const auto& inst : build_catalog()) {
        if (inst.name.rfind("abelian", 0) != 0) continue;
        CAPTURE(inst.name);
        const ClassificationReport c = classify(inst);
        CHECK(c.label == ClassLabel::F0);
        CHECK(c.theta_xi == 0);
        CHECK(!c.f4_prime);
    }
}

TEST_CASE("class residuals separate the main classes on the example") {
    const PiManifoldInstance inst = build_section5({1, 1});
    const auto c = classify(inst);
    CHECK(c.residuals.at(ClassLabel::F4).residual.is_zero());
    CHECK(!c.residuals.at(ClassLabel::F0).residual.is_zero());
    CHECK(!c.residuals.at(ClassLabel::F1).residual.is_zero());
    CHECK(!c.residuals.at(ClassLabel::F5).residual.is_zero());
    CHECK(!c.residuals.at(ClassLabel::F11).residual.is_zero());
}

TEST_CASE("class label names") {
    CHECK(to_string(ClassLabel::F0) == "F0");
    CHECK(to_string(ClassLabel::F4) == "F4");
    CHECK(to_string(ClassLabel::Unresolved) == "UNRESOLVED");
}
