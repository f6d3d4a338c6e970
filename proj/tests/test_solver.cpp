#include "conslaw/model.hpp"
#include "conslaw/solver.hpp"

#include <doctest.h>

using namespace conslaw;

namespace {

SpacePtr uv_space() {
    return VariableSpace::make({{"u", 1, 1}, {"v", 1, 1}}, false,
                               VariableSpace::TimeVar::None);
}

} // namespace

TEST_CASE("monomial_basis counts and ordering") {
    auto sp = uv_space();
    auto basis = monomial_basis(sp, 2, 0);
    CHECK(basis.size() == 6); // 1, u, v, u^2, uv, v^2
    CHECK(basis.front() == Exponents{0, 0});
    // graded: degree never decreases
    for (std::size_t i = 1; i < basis.size(); ++i) {
        unsigned a = basis[i - 1][0] + basis[i - 1][1];
        unsigned b = basis[i][0] + basis[i][1];
        CHECK(a <= b);
    }
}

TEST_CASE("time degree cap restricts the time exponent only") {
    auto sp = VariableSpace::make({{"u", 1, 1}}, true,
                                  VariableSpace::TimeVar::Surrogate);
    auto basis = monomial_basis(sp, 3, 1);
    for (const auto& e : basis) CHECK(e[0] <= 1);
    auto uncapped = monomial_basis(sp, 3, 3);
    CHECK(uncapped.size() > basis.size());
}

TEST_CASE("field (v, u): degree-2 laws span u^2 - v^2") {
    auto sp = uv_space();
    VectorField f(sp);
    f.components[0] = Polynomial::variable(sp, 1);
    f.components[1] = Polynomial::variable(sp, 0);
    LawBasis basis = solve_laws({f}, 2, 0, 1);
    REQUIRE(basis.laws.size() == 1);
    CHECK(basis.independent == 1);
    Polynomial u = Polynomial::variable(sp, 0), v = Polynomial::variable(sp, 1);
    Polynomial expect = u * u - v * v;
    // laws are defined up to scale: normalize on the u^2 coefficient
    const Rational cu = basis.laws[0].terms().at(Exponents{2, 0});
    REQUIRE(cu != 0);
    CHECK(basis.laws[0].scaled(1 / cu) == expect);
}

TEST_CASE("NMF toy: mirror field of u*v gives law u - v") {
    // phi = uv, mirror metric: field (u d(uv)/du, v d(uv)/dv) = (uv, uv)
    auto sp = uv_space();
    Polynomial u = Polynomial::variable(sp, 0), v = Polynomial::variable(sp, 1);
    VectorField f(sp);
    f.components[0] = u * v;
    f.components[1] = u * v;
    LawBasis basis = solve_laws({f}, 1, 0, 3);
    REQUIRE(basis.laws.size() == 1);
    const Rational cu = basis.laws[0].terms().at(Exponents{1, 0});
    REQUIRE(cu != 0);
    CHECK(basis.laws[0].scaled(1 / cu) == u - v);
}

TEST_CASE("two independent fields leave no degree-2 law") {
    auto sp = uv_space();
    VectorField f1(sp), f2(sp);
    f1.components[0] = Polynomial::constant(sp, Rational(1));
    f2.components[1] = Polynomial::constant(sp, Rational(1));
    LawBasis basis = solve_laws({f1, f2}, 2, 0, 1);
    CHECK(basis.laws.empty());
    CHECK(basis.independent == 0);
}

TEST_CASE("witness sampling is deterministic and in range") {
    QVector a = sample_witness(20, 99), b = sample_witness(20, 99),
            c = sample_witness(20, 100);
    CHECK(a == b);
    CHECK(a != c);
    for (const auto& x : a) {
        CHECK(x != 0);
        CHECK(abs(x.get_num()) <= 19);
        CHECK(x.get_den() <= 7);
    }
}

TEST_CASE("solver re-verifies laws symbolically (balancedness example)") {
    Architecture arch = Architecture::linear({2, 1, 1});
    auto sp = arch.make_space(false, VariableSpace::TimeVar::None);
    auto fields = grad_phi(build_phi(arch, sp), sp);
    LawBasis basis = solve_laws(fields, 2, 0, 11);
    CHECK(basis.laws.size() == 1);
    CHECK(basis.independent == 1);
    CHECK(basis.witness_certificate > 0);
    for (const auto& law : basis.laws)
        for (const auto& f : fields) CHECK(gradient_pairing(law, f).is_zero());
}

TEST_CASE("count_independent uses gradient rank at the witness") {
    auto sp = uv_space();
    Polynomial u = Polynomial::variable(sp, 0), v = Polynomial::variable(sp, 1);
    QVector w = sample_witness(2, 1);
    // u, v, u+v: rank 2
    CHECK(count_independent({u, v, u + v}, w) == 2);
    // u^2 and u^2 (duplicated): rank 1
    CHECK(count_independent({u * u, (u * u).scaled(Rational(3))}, w) == 1);
}
