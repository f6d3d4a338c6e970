#include "conslaw/polynomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace conslaw {

Polynomial Polynomial::constant(SpacePtr space, const Rational& c) {
    Polynomial p(space);
    if (c != 0) p.terms_.emplace(Exponents(space->size(), 0), c);
    return p;
}

Polynomial Polynomial::variable(SpacePtr space, std::size_t var) {
    if (var >= space->size()) throw std::out_of_range("variable index");
    Exponents e(space->size(), 0);
    e[var] = 1;
    Polynomial p(space);
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(SpacePtr space, Exponents exps, const Rational& c) {
    if (exps.size() != space->size())
        throw std::invalid_argument("exponent vector length mismatch");
    Polynomial p(space);
    if (c != 0) p.terms_.emplace(std::move(exps), c);
    return p;
}

void Polynomial::check_same_space(const Polynomial& rhs) const {
    if (space_ != rhs.space_ && space_->names() != rhs.space_->names())
        throw std::invalid_argument("space mismatch");
}

unsigned Polynomial::total_degree() const {
    unsigned deg = 0;
    for (const auto& [e, c] : terms_) {
        unsigned d = std::accumulate(e.begin(), e.end(), 0u);
        if (d > deg) deg = d;
    }
    return deg;
}

void Polynomial::add_term(const Exponents& exps, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    check_same_space(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    check_same_space(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    Polynomial out = *this;
    out += rhs;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    Polynomial out = *this;
    out -= rhs;
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(space_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(space_);
    if (c == 0) return out;
    for (const auto& [e, coef] : terms_) out.terms_.emplace(e, coef * c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    check_same_space(rhs);
    Polynomial out(space_);
    Exponents e(space_->size());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Polynomial Polynomial::partial(std::size_t var) const {
    if (var >= space_->size()) throw std::out_of_range("variable index");
    Polynomial out(space_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        out.add_term(d, c * Rational(e[var]));
    }
    return out;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
    if (point.size() != space_->size())
        throw std::invalid_argument("point dimension mismatch");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
        total += term;
    }
    return total;
}

double Polynomial::eval(const std::vector<double>& point) const {
    if (point.size() != space_->size())
        throw std::invalid_argument("point dimension mismatch");
    double total = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = rational_to_double(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
        total += term;
    }
    return total;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rational_to_string(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << space_->name(i);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

Polynomial gradient_pairing(const Polynomial& h, const VectorField& field) {
    Polynomial out = Polynomial::zero(h.space());
    for (std::size_t j = 0; j < field.components.size(); ++j) {
        if (field.components[j].is_zero()) continue;
        Polynomial dj = h.partial(j);
        if (dj.is_zero()) continue;
        out += dj * field.components[j];
    }
    return out;
}

} // namespace conslaw
