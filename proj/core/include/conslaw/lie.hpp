#ifndef CONSLAW_LIE_HPP
#define CONSLAW_LIE_HPP

#include "conslaw/linalg.hpp"
#include "conslaw/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace conslaw {

// [x, y] = (Jx) y - (Jy) x, exact in polynomial coefficients.
VectorField lie_bracket(const VectorField& x, const VectorField& y);

struct LieBasis {
    std::vector<VectorField> generators;
    // maximal functionally-independent list of bracket-generated fields
    // (independence over polynomial coefficient vectors)
    std::vector<VectorField> basis;
    unsigned iterations = 0;
    bool stabilized = false;
    unsigned cap = 0;
    bool degree_warning = false; // some bracket exceeded the degree cap
    bool saturated = false;      // trace rank reached the ambient dimension
};

// Iterates W_k = W_{k-1} + [W_0, W_{k-1}] until no functionally independent
// field appears, or `cap` rounds. Cap exhaustion is a reported state.
// With a witness, stops early once the trace rank at the witness fills the
// whole space (the dimension is then exact even without stabilization).
LieBasis generate_lie_algebra(const std::vector<VectorField>& generators,
                              unsigned cap = 8, unsigned degree_cap = 12,
                              const QVector* witness = nullptr);

// exact_rank of the basis fields evaluated at the witness.
std::size_t trace_dimension(const LieBasis& basis, const QVector& witness);

// trace_dimension at a seeded generic witness (32 resamples max).
std::size_t trace_dimension_generic(const LieBasis& basis, std::uint64_t seed,
                                    QVector* witness_out = nullptr);

// Witness sampling + generation + trace dimension in one step.
struct LieResult {
    LieBasis basis;
    std::size_t dim = 0;
    QVector witness;
};
LieResult lie_trace_analysis(const std::vector<VectorField>& fields,
                             std::uint64_t seed, unsigned cap = 8,
                             unsigned degree_cap = 12);

enum class FlowMode { GradientFlow, MomentumFlow };

// Conservation-law count from a trace dimension: D - dim (gradient flows)
// or 2D+1 - dim (momentum flows).
std::size_t law_count_from_dim(std::size_t dim, std::size_t D, FlowMode mode);

} // namespace conslaw

#endif
