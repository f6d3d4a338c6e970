#include "conslaw/lie.hpp"

#include "conslaw/solver.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace conslaw {

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
    if (x.space->names() != y.space->names())
        throw std::invalid_argument("space mismatch");
    const std::size_t n = x.space->size();
    VectorField out(x.space);
    for (std::size_t k = 0; k < n; ++k) {
        Polynomial acc = Polynomial::zero(x.space);
        for (std::size_t j = 0; j < n; ++j) {
            if (!y.components[j].is_zero()) {
                Polynomial d = x.components[k].partial(j);
                if (!d.is_zero()) acc += d * y.components[j];
            }
            if (!x.components[j].is_zero()) {
                Polynomial d = y.components[k].partial(j);
                if (!d.is_zero()) acc -= d * x.components[j];
            }
        }
        out.components[k] = std::move(acc);
    }
    return out;
}

namespace {

// Functional-independence filter: fields flattened to coefficient vectors
// over (component, monomial) columns, reduced incrementally.
class FieldEchelon {
public:
    bool insert(const VectorField& f) {
        SparseRow row;
        for (std::size_t k = 0; k < f.components.size(); ++k)
            for (const auto& [e, c] : f.components[k].terms())
                row.emplace(column_id(k, e), c);
        return ech_.insert(std::move(row));
    }

private:
    std::size_t column_id(std::size_t comp, const Exponents& e) {
        auto [it, inserted] = ids_.try_emplace({comp, e}, ids_.size());
        return it->second;
    }

    std::map<std::pair<std::size_t, Exponents>, std::size_t> ids_;
    SparseEchelon ech_{0}; // column count unused; only insert/rank needed
};

unsigned field_degree(const VectorField& f) {
    unsigned d = 0;
    for (const auto& c : f.components) d = std::max(d, c.total_degree());
    return d;
}

} // namespace

LieBasis generate_lie_algebra(const std::vector<VectorField>& generators,
                              unsigned cap, unsigned degree_cap,
                              const QVector* witness) {
    if (generators.empty()) throw std::invalid_argument("empty generator list");
    if (cap < 1) throw std::invalid_argument("cap must be >= 1");

    LieBasis out;
    out.generators = generators;
    out.cap = cap;

    const std::size_t ambient = generators.front().space->size();
    SparseEchelon trace(ambient);
    auto trace_row = [&](const VectorField& f) {
        SparseRow row;
        for (std::size_t j = 0; j < ambient; ++j) {
            Rational v = f.components[j].eval(*witness);
            if (v != 0) row.emplace(j, std::move(v));
        }
        trace.insert(std::move(row));
    };

    FieldEchelon filter;
    std::vector<VectorField> frontier;
    for (const auto& g : generators)
        if (filter.insert(g)) {
            if (witness) trace_row(g);
            out.basis.push_back(g);
            frontier.push_back(g);
        }
    if (witness && trace.rank() == ambient) {
        out.saturated = true;
        return out;
    }

    // `cap` bounds productive rounds; the final round that adds nothing is
    // the stabilization check. Once the cap is reached the check round only
    // needs one fresh field to conclude "not stabilized".
    for (;;) {
        const bool check_only = out.iterations == cap;
        std::vector<VectorField> added;
        for (const auto& g : generators) {
            for (const auto& b : frontier) {
                VectorField br = lie_bracket(g, b);
                if (br.is_zero()) continue;
                if (field_degree(br) > degree_cap) out.degree_warning = true;
                if (filter.insert(br)) added.push_back(std::move(br));
                if (check_only && !added.empty()) break;
            }
            if (check_only && !added.empty()) break;
        }
        if (added.empty()) {
            out.stabilized = true;
            break;
        }
        if (check_only) break;
        ++out.iterations;
        for (auto& f : added) {
            if (witness) trace_row(f);
            out.basis.push_back(f);
        }
        frontier = std::move(added);
        if (witness && trace.rank() == ambient) {
            out.saturated = true;
            break;
        }
    }
    return out;
}

std::size_t trace_dimension(const LieBasis& basis, const QVector& witness) {
    QMatrix m;
    for (const auto& f : basis.basis) {
        QVector row(witness.size());
        for (std::size_t j = 0; j < witness.size(); ++j)
            row[j] = f.components[j].eval(witness);
        m.push_back(std::move(row));
    }
    return exact_rank(m);
}

std::size_t trace_dimension_generic(const LieBasis& basis, std::uint64_t seed,
                                    QVector* witness_out) {
    const SpacePtr& space = basis.generators.front().space;
    for (int attempt = 0; attempt < 32; ++attempt) {
        QVector w = sample_witness(space->size(), seed + 1000 * attempt);
        WitnessCertificate cert =
            witness_certificate(space, basis.generators, w, seed + 777 + attempt);
        if (!cert.ok()) continue;
        if (witness_out) *witness_out = w;
        return trace_dimension(basis, w);
    }
    throw std::runtime_error("degenerate witness");
}

LieResult lie_trace_analysis(const std::vector<VectorField>& fields,
                             std::uint64_t seed, unsigned cap,
                             unsigned degree_cap) {
    const SpacePtr& space = fields.front().space;
    LieResult res;
    for (int attempt = 0; attempt < 32; ++attempt) {
        QVector w = sample_witness(space->size(), seed + 1000 * attempt);
        WitnessCertificate cert =
            witness_certificate(space, fields, w, seed + 777 + attempt);
        if (!cert.ok()) continue;
        res.witness = std::move(w);
        res.basis = generate_lie_algebra(fields, cap, degree_cap, &res.witness);
        res.dim = res.basis.saturated ? space->size()
                                      : trace_dimension(res.basis, res.witness);
        return res;
    }
    throw std::runtime_error("degenerate witness");
}

std::size_t law_count_from_dim(std::size_t dim, std::size_t D, FlowMode mode) {
    const std::size_t ambient = mode == FlowMode::MomentumFlow ? 2 * D + 1 : D;
    if (dim > ambient)
        throw std::invalid_argument("trace dimension exceeds ambient dimension");
    return ambient - dim;
}

} // namespace conslaw
