#include "conslaw/lie.hpp"
#include "conslaw/solver.hpp"

#include <doctest.h>

#include <random>

using namespace conslaw;

namespace {

SpacePtr vec_space(int n) {
    return VariableSpace::make({{"x", n, 1}}, false, VariableSpace::TimeVar::None);
}

VectorField linear_field(const SpacePtr& sp, const std::vector<std::vector<int>>& A) {
    VectorField f(sp);
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < A[i].size(); ++j)
            if (A[i][j] != 0)
                f.components[i] +=
                    Polynomial::variable(sp, j).scaled(Rational(A[i][j]));
    return f;
}

VectorField random_field(const SpacePtr& sp, std::mt19937_64& rng,
                         unsigned max_deg = 2) {
    std::uniform_int_distribution<int> num(-5, 5), nterms(1, 3);
    VectorField f(sp);
    for (auto& comp : f.components) {
        const int terms = nterms(rng);
        for (int t = 0; t < terms; ++t) {
            Exponents e(sp->size(), 0);
            unsigned budget =
                std::uniform_int_distribution<unsigned>(0, max_deg)(rng);
            for (unsigned d = 0; d < budget; ++d)
                e[std::uniform_int_distribution<std::size_t>(0, sp->size() - 1)(
                    rng)]++;
            comp.add_term(e, Rational(num(rng)));
        }
    }
    return f;
}

} // namespace

TEST_CASE("bracket of linear fields is the matrix commutator") {
    auto sp = vec_space(2);
    VectorField x = linear_field(sp, {{0, 1}, {0, 0}});
    VectorField y = linear_field(sp, {{0, 0}, {1, 0}});
    VectorField expect = linear_field(sp, {{1, 0}, {0, -1}});
    CHECK(lie_bracket(x, y) == expect);
}

TEST_CASE("commuting fields bracket to zero") {
    auto sp = vec_space(2);
    // (v, u) = A x with A = [[0,1],[1,0]] commutes with the identity field
    VectorField f = linear_field(sp, {{0, 1}, {1, 0}});
    VectorField id = linear_field(sp, {{1, 0}, {0, 1}});
    CHECK(lie_bracket(f, id).is_zero());
    CHECK(lie_bracket(f, f).is_zero());
}

TEST_CASE("bracket is bilinear and antisymmetric on random pairs") {
    auto sp = vec_space(3);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        VectorField x = random_field(sp, rng), y = random_field(sp, rng),
                    z = random_field(sp, rng);
        VectorField xy = lie_bracket(x, y), yx = lie_bracket(y, x);
        for (std::size_t k = 0; k < sp->size(); ++k)
            CHECK(xy.components[k] == -yx.components[k]);
        // [x + z, y] = [x, y] + [z, y]
        VectorField xz(sp);
        for (std::size_t k = 0; k < sp->size(); ++k)
            xz.components[k] = x.components[k] + z.components[k];
        VectorField lhs = lie_bracket(xz, y);
        VectorField zy = lie_bracket(z, y);
        for (std::size_t k = 0; k < sp->size(); ++k)
            CHECK(lhs.components[k] == xy.components[k] + zy.components[k]);
    }
}

TEST_CASE("Jacobi identity on random low-degree triples") {
    auto sp = vec_space(2);
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        VectorField x = random_field(sp, rng, 2), y = random_field(sp, rng, 2),
                    z = random_field(sp, rng, 2);
        VectorField a = lie_bracket(x, lie_bracket(y, z));
        VectorField b = lie_bracket(y, lie_bracket(z, x));
        VectorField c = lie_bracket(z, lie_bracket(x, y));
        for (std::size_t k = 0; k < sp->size(); ++k)
            CHECK((a.components[k] + b.components[k] + c.components[k]).is_zero());
    }
}

TEST_CASE("single field generates itself") {
    auto sp = vec_space(2);
    VectorField f = linear_field(sp, {{0, 1}, {1, 0}});
    LieBasis basis = generate_lie_algebra({f});
    CHECK(basis.basis.size() == 1);
    CHECK(basis.stabilized);
}

TEST_CASE("commuting coordinate fields stabilize at size 2") {
    auto sp = vec_space(2);
    VectorField e1(sp), e2(sp);
    e1.components[0] = Polynomial::constant(sp, Rational(1));
    e2.components[1] = Polynomial::constant(sp, Rational(1));
    LieBasis basis = generate_lie_algebra({e1, e2});
    CHECK(basis.basis.size() == 2);
    CHECK(basis.stabilized);
}

TEST_CASE("trace dimension monotone and correct on a simple pair") {
    auto sp = vec_space(2);
    VectorField f = linear_field(sp, {{0, 1}, {1, 0}});
    LieBasis basis = generate_lie_algebra({f});
    QVector w = {Rational(3), Rational(2)};
    CHECK(trace_dimension(basis, w) == 1);
}

TEST_CASE("saturation stops generation early") {
    auto sp = vec_space(2);
    VectorField e1(sp), e2(sp);
    e1.components[0] = Polynomial::constant(sp, Rational(1));
    e2.components[1] = Polynomial::constant(sp, Rational(1));
    QVector w = sample_witness(2, 1);
    LieBasis basis = generate_lie_algebra({e1, e2}, 8, 12, &w);
    CHECK(basis.saturated);
}

TEST_CASE("law count conversions and preconditions") {
    CHECK(law_count_from_dim(12, 6, FlowMode::MomentumFlow) == 1);
    CHECK(law_count_from_dim(1, 2, FlowMode::GradientFlow) == 1);
    CHECK(law_count_from_dim(5, 2, FlowMode::MomentumFlow) == 0);
    CHECK_THROWS_AS(law_count_from_dim(3, 2, FlowMode::GradientFlow),
                    std::invalid_argument);
}
