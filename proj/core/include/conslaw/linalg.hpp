#ifndef CONSLAW_LINALG_HPP
#define CONSLAW_LINALG_HPP

#include "conslaw/rational.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace conslaw {

using QMatrix = std::vector<std::vector<Rational>>;
using QVector = std::vector<Rational>;

// Rank over the rationals via fraction-free (Bareiss) elimination,
// row-pivoting on the first nonzero entry of each pivot column.
std::size_t exact_rank(const QMatrix& m);

// Basis of the right nullspace; size = cols - rank, m*b = 0 exactly.
std::vector<QVector> exact_nullspace(const QMatrix& m);

// Sparse row: sorted (column, coefficient) pairs, coefficients nonzero.
using SparseRow = std::map<std::size_t, Rational>;

// Incremental exact row echelon over the rationals, for large sparse
// systems (orthogonality systems, functional-independence filters).
class SparseEchelon {
public:
    explicit SparseEchelon(std::size_t cols) : cols_(cols) {}

    // Reduces `row` against the current pivots; if a nonzero remainder is
    // left it becomes a new pivot row and true is returned.
    bool insert(SparseRow row);

    std::size_t rank() const { return pivots_.size(); }
    std::size_t cols() const { return cols_; }

    // Right nullspace of the accumulated row span.
    std::vector<QVector> nullspace() const;

private:
    using ZRow = std::map<std::size_t, mpz_class>;

    std::size_t cols_;
    // pivot column -> primitive integer row (content 1); fraction-free
    // updates avoid rational re-canonicalization on every operation
    std::map<std::size_t, ZRow> pivots_;
};

} // namespace conslaw

#endif
