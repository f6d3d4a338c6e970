#ifndef CONSLAW_LAWS_HPP
#define CONSLAW_LAWS_HPP

#include "conslaw/lift.hpp"
#include "conslaw/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conslaw {

// A closed-form conservation law with its family metadata. The surrogate
// variable s stands for exp(tau*t) in momentum families.
struct LawFamily {
    std::string family;
    int layer = 0;           // layer pair index i (1-based), where applicable
    int skew_row = 0;        // elementary skew A = E_{k,l} - E_{l,k}
    int skew_col = 0;
    Polynomial realization;
};

// Euclidean GF balancedness: entries of U_i^T U_i - U_{i+1} U_{i+1}^T
// (upper triangle) for linear nets; diagonal entries per neuron for relu2,
// with -b_j^2 when a bias row is present.
std::vector<LawFamily> balancedness_gf_laws(const Architecture& arch,
                                            const SpacePtr& space);

// Euclidean momentum laws: exp-factor * (<U'_i, U_i A> + <U'_{i+1}, A^T U_{i+1}>)
// per layer pair and elementary skew, plus the extra family
// <U'_i, U_{i+1}^T A> + <U'_{i+1}^T, U_i A> when n_{i-1} = n_{i+1} = 1.
// Heavy ball realizes the factor as s (or 1 when tau = 0); Nesterov as t^3.
std::vector<LawFamily> pca_momentum_laws(const Architecture& arch,
                                         const FlowSpec& flow,
                                         const SpacePtr& space);

// Mirror GF column sums: 1_n^T U_j - 1_m^T V_j per column.
std::vector<LawFamily> nmf_gf_laws(int n, int m, int r, const SpacePtr& space);

// ICNN GF: 1_n^T U_j - (|V_j|^2 + b_j^2)/2 per hidden neuron.
std::vector<LawFamily> icnn_gf_laws(int n, int m, int r, const SpacePtr& space);

// Counting formulas for the two-layer linear case; generic ranks
// rk_gf = min(r, n+m), rk_mf = min(r, 2(n+m)) unless overridden.
long predicted_count_gf(int n, int m, int r, std::optional<long> rank_override = {});
long predicted_count_mf(int n, int m, int r, std::optional<long> rank_override = {});
// (n+m)[(r-2(n+m)) + r-1] when 2(n+m) <= r, else r(r-1)/2.
long constructed_count_mf(int n, int m, int r);
// gf count minus mf count.
long predicted_gap(int n, int m, int r);
// Momentum Lie trace dimension at generic points (two-layer linear).
long predicted_lie_dim_mf(int n, int m, int r);

} // namespace conslaw

#endif
