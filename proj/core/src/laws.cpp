#include "conslaw/laws.hpp"

#include <stdexcept>

namespace conslaw {

namespace {

Polynomial pvar(const SpacePtr& sp, std::size_t mat, int row, int col) {
    return Polynomial::variable(sp, sp->param_var(mat, row, col));
}
Polynomial vvar(const SpacePtr& sp, std::size_t mat, int row, int col) {
    return Polynomial::variable(sp, sp->velocity_var(mat, row, col));
}

} // namespace

std::vector<LawFamily> balancedness_gf_laws(const Architecture& arch,
                                            const SpacePtr& space) {
    std::vector<LawFamily> out;
    if (arch.kind == Architecture::Kind::Linear) {
        const auto& dims = arch.dims;
        for (std::size_t i = 0; i + 2 < dims.size(); ++i) {
            const int r = dims[i + 1];
            for (int k = 0; k < r; ++k)
                for (int l = k; l < r; ++l) {
                    // (U_i^T U_i - U_{i+1} U_{i+1}^T)_{k,l}
                    Polynomial h = Polynomial::zero(space);
                    for (int a = 0; a < dims[i]; ++a)
                        h += pvar(space, i, a, k) * pvar(space, i, a, l);
                    for (int b = 0; b < dims[i + 2]; ++b)
                        h -= pvar(space, i + 1, k, b) * pvar(space, i + 1, l, b);
                    out.push_back({"balancedness_gf", static_cast<int>(i + 1),
                                   k + 1, l + 1, std::move(h)});
                }
        }
        return out;
    }
    const int n = arch.dims[0], m = arch.dims[1], r = arch.dims[2];
    for (int j = 0; j < r; ++j) {
        Polynomial h = Polynomial::zero(space);
        for (int k = 0; k < n; ++k) h += pvar(space, 0, k, j) * pvar(space, 0, k, j);
        for (int l = 0; l < m; ++l) h -= pvar(space, 1, l, j) * pvar(space, 1, l, j);
        if (arch.bias) h -= pvar(space, 2, 0, j) * pvar(space, 2, 0, j);
        out.push_back({"relu_gf", 1, j + 1, j + 1, std::move(h)});
    }
    return out;
}

std::vector<LawFamily> pca_momentum_laws(const Architecture& arch,
                                         const FlowSpec& flow,
                                         const SpacePtr& space) {
    if (arch.kind != Architecture::Kind::Linear)
        throw std::invalid_argument("momentum families are for linear nets");
    if (flow.kind == FlowSpec::Kind::Gradient)
        throw std::invalid_argument("momentum families need a momentum flow");

    // exp(int tau) realized polynomially: s for heavy ball (1 when tau = 0),
    // t^3 for Nesterov
    Polynomial factor = Polynomial::constant(space, Rational(1));
    if (flow.kind == FlowSpec::Kind::HeavyBall && flow.tau != 0) {
        factor = Polynomial::variable(space, 0);
    } else if (flow.kind == FlowSpec::Kind::Nesterov) {
        Polynomial t = Polynomial::variable(space, 0);
        factor = t * t * t;
    }

    std::vector<LawFamily> out;
    const auto& dims = arch.dims;
    for (std::size_t i = 0; i + 2 < dims.size(); ++i) {
        const int r = dims[i + 1];
        for (int k = 0; k < r; ++k)
            for (int l = k + 1; l < r; ++l) {
                // <U'_i, U_i A> + <U'_{i+1}, A^T U_{i+1}>, A = E_{k,l} - E_{l,k}
                Polynomial h = Polynomial::zero(space);
                for (int a = 0; a < dims[i]; ++a)
                    h += vvar(space, i, a, l) * pvar(space, i, a, k) -
                         vvar(space, i, a, k) * pvar(space, i, a, l);
                for (int b = 0; b < dims[i + 2]; ++b)
                    h += vvar(space, i + 1, l, b) * pvar(space, i + 1, k, b) -
                         vvar(space, i + 1, k, b) * pvar(space, i + 1, l, b);
                out.push_back({"pca_mf", static_cast<int>(i + 1), k + 1, l + 1,
                               factor * h});
            }
        if (dims[i] == 1 && dims[i + 2] == 1) {
            // extra family <U'_i, U_{i+1}^T A> + <U'_{i+1}^T, U_i A>
            for (int k = 0; k < r; ++k)
                for (int l = k + 1; l < r; ++l) {
                    Polynomial h =
                        vvar(space, i, 0, l) * pvar(space, i + 1, k, 0) -
                        vvar(space, i, 0, k) * pvar(space, i + 1, l, 0) +
                        vvar(space, i + 1, l, 0) * pvar(space, i, 0, k) -
                        vvar(space, i + 1, k, 0) * pvar(space, i, 0, l);
                    out.push_back({"pca_mf_extra_11", static_cast<int>(i + 1),
                                   k + 1, l + 1, factor * h});
                }
        }
    }
    return out;
}

std::vector<LawFamily> nmf_gf_laws(int n, int m, int r, const SpacePtr& space) {
    std::vector<LawFamily> out;
    for (int j = 0; j < r; ++j) {
        Polynomial h = Polynomial::zero(space);
        for (int k = 0; k < n; ++k) h += pvar(space, 0, k, j);
        // second factor is stored as V^T (r x m), so row j holds V_{. j}
        for (int l = 0; l < m; ++l) h -= pvar(space, 1, j, l);
        out.push_back({"nmf_gf", 1, j + 1, j + 1, std::move(h)});
    }
    return out;
}

std::vector<LawFamily> icnn_gf_laws(int n, int m, int r, const SpacePtr& space) {
    const Rational half(1, 2);
    std::vector<LawFamily> out;
    for (int j = 0; j < r; ++j) {
        Polynomial h = Polynomial::zero(space);
        for (int k = 0; k < n; ++k) h += pvar(space, 0, k, j);
        for (int l = 0; l < m; ++l)
            h -= (pvar(space, 1, l, j) * pvar(space, 1, l, j)).scaled(half);
        h -= (pvar(space, 2, 0, j) * pvar(space, 2, 0, j)).scaled(half);
        out.push_back({"icnn_gf", 1, j + 1, j + 1, std::move(h)});
    }
    return out;
}

long predicted_count_gf(int n, int m, int r, std::optional<long> rank_override) {
    const long rk = rank_override.value_or(std::min<long>(r, n + m));
    return rk * (2L * r + 1 - rk) / 2;
}

long predicted_count_mf(int n, int m, int r, std::optional<long> rank_override) {
    if (n == 1 && m == 1) {
        if (r < 4)
            throw std::invalid_argument(
                "not covered for n=m=1 with r<4; use the computed Lie dimension");
        return 4L * r - 6;
    }
    const long rk = rank_override.value_or(std::min<long>(r, 2 * (n + m)));
    return rk * (2L * r - 1 - rk) / 2;
}

long constructed_count_mf(int n, int m, int r) {
    const long s = n + m;
    if (2 * s <= r) return s * ((r - 2 * s) + r - 1);
    return static_cast<long>(r) * (r - 1) / 2;
}

long predicted_gap(int n, int m, int r) {
    return predicted_count_gf(n, m, r) - predicted_count_mf(n, m, r);
}

long predicted_lie_dim_mf(int n, int m, int r) {
    const long s = n + m;
    if (n == 1 && m == 1) {
        if (r < 4)
            throw std::invalid_argument(
                "no closed form for n=m=1 with r<4; compute the trace dimension");
        return 7;
    }
    if (2 * s <= r) return s * (2 * s + 1) + 1;
    return 2 * s * static_cast<long>(r) + 1 - static_cast<long>(r) * (r - 1) / 2;
}

} // namespace conslaw
