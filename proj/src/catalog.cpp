#include "pim/catalog.hpp"

#include "pim/rational.hpp"

namespace pim {

namespace {

PiStructure standard_structure_d5() {
    const int d = 5;
    PiStructure s;
    s.n = 2;
    s.phi = Tensor(d, 1, 1);
    s.phi(3, 1) = 1;
    s.phi(4, 2) = 1;
    s.phi(1, 3) = 1;
    s.phi(2, 4) = 1;
    s.xi = Tensor(d, 1, 0);
    s.xi(0) = 1;
    s.eta = Tensor(d, 0, 1);
    s.eta(0) = 1;
    Tensor g(d, 0, 2);
    for (int i = 0; i < d; ++i) g(i, i) = 1;
    s.metric = metric_inverse(g);
    return s;
}

PiStructure standard_structure_d3() {
    const int d = 3;
    PiStructure s;
    s.n = 1;
    s.phi = Tensor(d, 1, 1);
    s.phi(2, 1) = 1;
    s.phi(1, 2) = 1;
    s.xi = Tensor(d, 1, 0);
    s.xi(0) = 1;
    s.eta = Tensor(d, 0, 1);
    s.eta(0) = 1;
    Tensor g(d, 0, 2);
    for (int i = 0; i < d; ++i) g(i, i) = 1;
    s.metric = metric_inverse(g);
    return s;
}

void set_bracket(LieAlgebra& a, int i, int j, int k, const Rational& c) {
    a.bracket(i, j, k) = c;
    a.bracket(j, i, k) = -c;
}

}  // namespace

PiManifoldInstance build_section5(const ExampleParams& p) {
    LieAlgebra a(5);
    set_bracket(a, 0, 1, 2, p.lambda);
    set_bracket(a, 0, 1, 3, -1);
    set_bracket(a, 0, 1, 4, p.mu);
    set_bracket(a, 0, 2, 1, -p.lambda);
    set_bracket(a, 0, 2, 3, -p.mu);
    set_bracket(a, 0, 2, 4, -1);
    set_bracket(a, 0, 3, 1, -1);
    set_bracket(a, 0, 3, 2, p.mu);
    set_bracket(a, 0, 3, 4, p.lambda);
    set_bracket(a, 0, 4, 1, -p.mu);
    set_bracket(a, 0, 4, 2, -1);
    set_bracket(a, 0, 4, 3, -p.lambda);

    PiManifoldInstance inst{std::move(a), standard_structure_d5(),
                            "lie5(lambda=" + to_string(p.lambda) + ",mu=" + to_string(p.mu) +
                                ")"};
    return inst;
}

std::vector<PiManifoldInstance> build_catalog() {
    std::vector<PiManifoldInstance> out;
    out.push_back({LieAlgebra(5), standard_structure_d5(), "abelian5"});
    for (const auto& [l, m] :
         std::vector<std::pair<Rational, Rational>>{{0, 0},
                                                    {1, 0},
                                                    {0, 1},
                                                    {1, 1},
                                                    {2, -3},
                                                    {Rational(1, 2), Rational(1, 3)}})
        out.push_back(build_section5({l, m}));
    out.push_back({LieAlgebra(3), standard_structure_d3(), "abelian3"});
    return out;
}

}  // namespace pim
