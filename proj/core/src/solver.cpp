#include "conslaw/solver.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace conslaw {

namespace {

void enumerate_monomials(const SpacePtr& space, unsigned degree,
                         unsigned time_cap, std::size_t var, unsigned left,
                         Exponents& cur, std::vector<Exponents>& out) {
    if (var == space->size()) {
        out.push_back(cur);
        return;
    }
    const bool time_like = space->has_time() && var == 0;
    const unsigned max_e = time_like ? std::min(left, time_cap) : left;
    for (unsigned e = 0; e <= max_e; ++e) {
        cur[var] = e;
        enumerate_monomials(space, degree, time_cap, var + 1, left - e, cur, out);
    }
    cur[var] = 0;
}

unsigned degree_of(const Exponents& e) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
}

} // namespace

std::vector<Exponents> monomial_basis(const SpacePtr& space, unsigned degree,
                                      unsigned time_degree_cap) {
    std::vector<Exponents> all;
    Exponents cur(space->size(), 0);
    enumerate_monomials(space, degree, time_degree_cap, 0, degree, cur, all);
    // graded-lex: by total degree, then lexicographic on exponents
    std::stable_sort(all.begin(), all.end(),
                     [](const Exponents& a, const Exponents& b) {
                         const unsigned da = degree_of(a), db = degree_of(b);
                         if (da != db) return da < db;
                         return a < b;
                     });
    return all;
}

QMatrix OrthoSystem::dense() const {
    QMatrix m(rows.size(), QVector(columns.size(), Rational(0)));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [c, v] : rows[i]) m[i][c] = v;
    return m;
}

OrthoSystem build_orthogonality_system(const std::vector<VectorField>& fields,
                                       unsigned degree, unsigned time_degree_cap) {
    if (fields.empty()) throw std::invalid_argument("empty field list");
    const SpacePtr& space = fields.front().space;
    for (const auto& f : fields)
        if (f.space->names() != space->names())
            throw std::invalid_argument("space mismatch");

    OrthoSystem sys;
    sys.columns = monomial_basis(space, degree, time_degree_cap);

    const std::size_t nvars = space->size();
    for (const auto& field : fields) {
        // rows of this field, keyed by result monomial
        std::map<Exponents, SparseRow> rowmap;
        for (std::size_t c = 0; c < sys.columns.size(); ++c) {
            const Exponents& mono = sys.columns[c];
            for (std::size_t j = 0; j < nvars; ++j) {
                if (mono[j] == 0 || field.components[j].is_zero()) continue;
                Exponents dm = mono;
                dm[j] -= 1;
                const Rational dcoef(mono[j]);
                for (const auto& [fe, fc] : field.components[j].terms()) {
                    Exponents res(nvars);
                    for (std::size_t v = 0; v < nvars; ++v) res[v] = dm[v] + fe[v];
                    auto [slot, inserted] = rowmap[std::move(res)].try_emplace(c, Rational(0));
                    slot->second += dcoef * fc;
                }
            }
        }
        for (auto& [mono, row] : rowmap) {
            for (auto it = row.begin(); it != row.end();)
                it = (it->second == 0) ? row.erase(it) : std::next(it);
            if (!row.empty()) sys.rows.push_back(std::move(row));
        }
    }
    return sys;
}

QVector sample_witness(std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-19, 19);
    std::uniform_int_distribution<int> den(1, 7);
    QVector w(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        int n = 0;
        while (n == 0) n = num(rng);
        w[i] = make_rational(n, den(rng));
    }
    return w;
}

WitnessCertificate witness_certificate(const SpacePtr& space,
                                       const std::vector<VectorField>& fields,
                                       const QVector& witness,
                                       std::uint64_t aux_seed) {
    const auto& shapes = space->shapes();
    bool stackable = !shapes.empty();
    for (const auto& s : shapes)
        if (s.cols != shapes[0].cols) stackable = false;

    WitnessCertificate cert;
    if (stackable) {
        // stacked (U_1; ...; U_q [; velocities]) at the witness
        const int r = shapes[0].cols;
        QMatrix stacked;
        for (std::size_t mat = 0; mat < shapes.size(); ++mat)
            for (int row = 0; row < shapes[mat].rows; ++row) {
                QVector line(r);
                for (int col = 0; col < r; ++col)
                    line[col] = witness[space->param_var(mat, row, col)];
                stacked.push_back(std::move(line));
            }
        if (space->has_velocity())
            for (std::size_t mat = 0; mat < shapes.size(); ++mat)
                for (int row = 0; row < shapes[mat].rows; ++row) {
                    QVector line(r);
                    for (int col = 0; col < r; ++col)
                        line[col] = witness[space->velocity_var(mat, row, col)];
                    stacked.push_back(std::move(line));
                }
        cert.rank = exact_rank(stacked);
        cert.required = std::min<std::size_t>(stacked.size(), r);
        return cert;
    }

    // fallback: trace rank of the fields must reach its generic value,
    // estimated as the max over 5 extra samples
    auto trace_rank = [&](const QVector& point) {
        QMatrix m;
        for (const auto& f : fields) {
            QVector row(space->size());
            for (std::size_t j = 0; j < space->size(); ++j)
                row[j] = f.components[j].eval(point);
            m.push_back(std::move(row));
        }
        return exact_rank(m);
    };
    cert.rank = trace_rank(witness);
    cert.required = 0;
    for (int s = 0; s < 5; ++s)
        cert.required = std::max(
            cert.required, trace_rank(sample_witness(space->size(), aux_seed + s)));
    return cert;
}

LawBasis solve_laws(const std::vector<VectorField>& fields, unsigned degree,
                    unsigned time_degree_cap, std::uint64_t seed) {
    OrthoSystem sys = build_orthogonality_system(fields, degree, time_degree_cap);
    const SpacePtr& space = fields.front().space;

    // drop the constant monomial: it is trivially conserved and would only
    // contribute a zero column
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < sys.columns.size(); ++c)
        if (degree_of(sys.columns[c]) > 0) keep.push_back(c);
    std::vector<std::size_t> col_of(sys.columns.size(), SIZE_MAX);
    for (std::size_t i = 0; i < keep.size(); ++i) col_of[keep[i]] = i;

    SparseEchelon ech(keep.size());
    for (const auto& row : sys.rows) {
        SparseRow r;
        for (const auto& [c, v] : row)
            if (col_of[c] != SIZE_MAX) r.emplace(col_of[c], v);
        ech.insert(std::move(r));
    }

    LawBasis basis;
    basis.degree = degree;
    basis.time_degree_cap = time_degree_cap;
    basis.seed = seed;
    for (const auto& coeffs : ech.nullspace()) {
        Polynomial h = Polynomial::zero(space);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != 0) h.add_term(sys.columns[keep[i]], coeffs[i]);
        // soundness: exact symbolic re-substitution
        for (const auto& f : fields)
            if (!gradient_pairing(h, f).is_zero())
                throw std::logic_error("solver produced a non-law; elimination bug");
        basis.laws.push_back(std::move(h));
    }

    for (int attempt = 0; attempt < 32; ++attempt) {
        QVector w = sample_witness(space->size(), seed + 1000 * attempt);
        WitnessCertificate cert =
            witness_certificate(space, fields, w, seed + 777 + attempt);
        if (!cert.ok()) continue;
        basis.witness = std::move(w);
        basis.witness_certificate = cert.rank;
        basis.independent = count_independent(basis.laws, basis.witness);
        return basis;
    }
    throw std::runtime_error("degenerate witness");
}

std::size_t count_independent(const std::vector<Polynomial>& laws,
                              const QVector& witness) {
    if (laws.empty()) return 0;
    QMatrix grads;
    for (const auto& h : laws) {
        QVector row(witness.size());
        for (std::size_t j = 0; j < witness.size(); ++j)
            row[j] = h.partial(j).eval(witness);
        grads.push_back(std::move(row));
    }
    return exact_rank(grads);
}

} // namespace conslaw
