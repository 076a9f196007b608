#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pim/rational.hpp"
#include "pim/tensor.hpp"

using namespace pim;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("4/2") == 2);
    CHECK(parse_rational("+1/3") == Rational(1, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/ 2"), ParseError);
    CHECK(to_string(Rational(-1, 2)) == "-1/2");
    CHECK(to_string(Rational(4)) == "4");
}

TEST_CASE("metric inverse 2x2") {
    Tensor g(2, 0, 2);
    g(0, 0) = 2;
    g(0, 1) = 1;
    g(1, 0) = 1;
    g(1, 1) = 1;
    MetricPair mp = metric_inverse(g);
    CHECK(mp.g_inv(0, 0) == 1);
    CHECK(mp.g_inv(0, 1) == -1);
    CHECK(mp.g_inv(1, 0) == -1);
    CHECK(mp.g_inv(1, 1) == 2);
}

TEST_CASE("metric inverse errors") {
    Tensor asym(2, 0, 2);
    asym(0, 1) = 1;  // (1,0) left zero
    asym(0, 0) = asym(1, 1) = 1;
    CHECK_THROWS_AS(metric_inverse(asym), NotSymmetric);

    Tensor sing(2, 0, 2);
    sing(0, 0) = 1;
    sing(0, 1) = sing(1, 0) = 2;
    sing(1, 1) = 4;
    CHECK_THROWS_AS(metric_inverse(sing), SingularMetric);
}

TEST_CASE("g contracted with its inverse is the identity") {
    Tensor g(3, 0, 2);
    g(0, 0) = 2;
    g(0, 1) = g(1, 0) = 1;
    g(1, 1) = 3;
    g(2, 2) = Rational(1, 5);
    MetricPair mp = metric_inverse(g);

    // Pair g_inv (2,0) with g (0,2) as a single (2,2)-tensor and trace.
    Tensor prod(3, 1, 1);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational s = 0;
            for (int m = 0; m < 3; ++m) s += mp.g_inv(i, m) * g(m, j);
            prod(i, j) = s;
        }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(prod(i, j) == (i == j ? 1 : 0));

    Tensor tr = contract(prod, 0, 1);
    CHECK(tr.scalar() == 3);
}

TEST_CASE("sharp then lower is the identity on 1-forms") {
    Tensor g(2, 0, 2);
    g(0, 0) = 2;
    g(0, 1) = g(1, 0) = 1;
    g(1, 1) = 1;
    MetricPair mp = metric_inverse(g);
    Tensor form(2, 0, 1);
    form(0) = Rational(3, 7);
    form(1) = -5;
    CHECK(lower_upper(sharp(form, mp), mp) == form);
}

TEST_CASE("contraction of two covariant slots needs a metric") {
    Tensor t(2, 0, 2);
    t(0, 0) = 1;
    CHECK_THROWS_AS(contract(t, 0, 1), MissingMetric);
}

TEST_CASE("trace of the identity endomorphism") {
    Tensor id(5, 1, 1);
    for (int i = 0; i < 5; ++i) id(i, i) = 1;
    CHECK(contract(id, 0, 1).scalar() == 5);
}

TEST_CASE("Kulkarni-Nomizu on the orthonormal frame") {
    const int d = 5;
    Tensor g(d, 0, 2);
    for (int i = 0; i < d; ++i) g(i, i) = 1;
    Tensor gg = kulkarni_nomizu(g, g);
    CHECK(gg(1, 2, 2, 1) == -2);
    CHECK(gg(1, 2, 1, 2) == 2);
    CHECK(gg(1, 2, 3, 4) == 0);

    Tensor ee(d, 0, 2);
    ee(0, 0) = 1;  // eta x eta for eta = dual of e0
    Tensor eg = kulkarni_nomizu(ee, g);
    CHECK(eg(0, 1, 1, 0) == -1);
    CHECK(eg(0, 1, 0, 1) == 1);
    CHECK(eg(1, 2, 2, 1) == 0);
}

TEST_CASE("congruence inertia") {
    Tensor g(4, 0, 2);
    g(0, 0) = 1;
    g(1, 1) = -2;
    g(2, 2) = 0;
    g(3, 3) = 5;
    Inertia in = congruence_inertia(g);
    CHECK(in.positive == 2);
    CHECK(in.negative == 1);
    CHECK(in.zero == 1);

    // Zero diagonal but indefinite: needs the off-diagonal fix-up.
    Tensor h(2, 0, 2);
    h(0, 1) = h(1, 0) = 1;
    Inertia ih = congruence_inertia(h);
    CHECK(ih.positive == 1);
    CHECK(ih.negative == 1);
    CHECK(ih.zero == 0);
}

TEST_CASE("max_abs reports the worst component") {
    Tensor t(3, 0, 2);
    t(0, 1) = Rational(1, 2);
    t(2, 2) = -3;
    auto [m, w] = t.max_abs();
    CHECK(m == 3);
    CHECK(w == std::vector<int>{2, 2});
}

TEST_CASE("shape mismatch in arithmetic") {
    Tensor a(3, 0, 2), b(3, 0, 3);
    CHECK_THROWS_AS(a + b, DimMismatch);
    Tensor c(4, 0, 2);
    CHECK_THROWS_AS(a + c, DimMismatch);
}
