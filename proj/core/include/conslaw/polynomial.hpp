#ifndef CONSLAW_POLYNOMIAL_HPP
#define CONSLAW_POLYNOMIAL_HPP

#include "conslaw/rational.hpp"
#include "conslaw/variable_space.hpp"

#include <map>
#include <string>
#include <vector>

namespace conslaw {

using Exponents = std::vector<unsigned>;

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are keyed by dense exponent vectors (length = #variables of the
// shared VariableSpace); zero coefficients are never stored.
class Polynomial {
public:
    explicit Polynomial(SpacePtr space) : space_(std::move(space)) {}

    static Polynomial zero(SpacePtr space) { return Polynomial(std::move(space)); }
    static Polynomial constant(SpacePtr space, const Rational& c);
    static Polynomial variable(SpacePtr space, std::size_t var);
    static Polynomial monomial(SpacePtr space, Exponents exps, const Rational& c);

    const SpacePtr& space() const { return space_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    unsigned total_degree() const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);

    bool operator==(const Polynomial& rhs) const { return terms_ == rhs.terms_; }

    Polynomial partial(std::size_t var) const;
    Rational eval(const std::vector<Rational>& point) const;
    double eval(const std::vector<double>& point) const;

    void add_term(const Exponents& exps, const Rational& c);

    std::string str() const;

private:
    void check_same_space(const Polynomial& rhs) const;

    SpacePtr space_;
    std::map<Exponents, Rational> terms_;
};

// Vector of polynomials, one per ambient coordinate.
struct VectorField {
    SpacePtr space;
    std::vector<Polynomial> components;

    explicit VectorField(SpacePtr s)
        : space(s), components(s->size(), Polynomial::zero(s)) {}

    bool is_zero() const {
        for (const auto& c : components)
            if (!c.is_zero()) return false;
        return true;
    }
    bool operator==(const VectorField& rhs) const { return components == rhs.components; }
};

// <grad h, field> expanded exactly.
Polynomial gradient_pairing(const Polynomial& h, const VectorField& field);

} // namespace conslaw

#endif
