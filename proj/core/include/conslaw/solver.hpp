#ifndef CONSLAW_SOLVER_HPP
#define CONSLAW_SOLVER_HPP

#include "conslaw/linalg.hpp"
#include "conslaw/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace conslaw {

// Degree-bounded polynomial conservation laws with an exact independence
// certificate at a generic rational witness point.
struct LawBasis {
    std::vector<Polynomial> laws; // constants excluded
    unsigned degree = 0;
    unsigned time_degree_cap = 0;
    std::size_t independent = 0;
    QVector witness;
    std::size_t witness_certificate = 0;
    std::uint64_t seed = 0;
};

// All monomials of total degree <= degree (time-like exponent additionally
// capped), in graded-lexicographic order. Includes the constant monomial.
std::vector<Exponents> monomial_basis(const SpacePtr& space, unsigned degree,
                                      unsigned time_degree_cap);

// Linear system whose nullspace is the coefficient space of degree-bounded
// laws: one column per ansatz monomial, one row per (field, result monomial).
struct OrthoSystem {
    std::vector<Exponents> columns;
    std::vector<SparseRow> rows;

    QMatrix dense() const;
};

OrthoSystem build_orthogonality_system(const std::vector<VectorField>& fields,
                                       unsigned degree, unsigned time_degree_cap);

// Samples a witness: numerators uniform in [-19,19]\{0}, denominators in [1,7].
QVector sample_witness(std::size_t dim, std::uint64_t seed);

// Genericity certificate at a witness: rank of the stacked parameter (and
// velocity) matrix when all weight matrices share a column count, otherwise
// rank of the stacked field values, compared to its generic value.
struct WitnessCertificate {
    std::size_t rank = 0;
    std::size_t required = 0;
    bool ok() const { return rank == required; }
};
WitnessCertificate witness_certificate(const SpacePtr& space,
                                       const std::vector<VectorField>& fields,
                                       const QVector& witness,
                                       std::uint64_t aux_seed);

LawBasis solve_laws(const std::vector<VectorField>& fields, unsigned degree,
                    unsigned time_degree_cap, std::uint64_t seed);

// exact_rank of the gradient matrix [grad h_k(witness)].
std::size_t count_independent(const std::vector<Polynomial>& laws,
                              const QVector& witness);

} // namespace conslaw

#endif
