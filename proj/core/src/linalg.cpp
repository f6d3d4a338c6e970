#include "conslaw/linalg.hpp"

#include <stdexcept>

namespace conslaw {

namespace {

struct Echelon {
    std::vector<std::vector<mpz_class>> rows; // echelon rows, integer entries
    std::vector<std::size_t> pivot_cols;      // one per echelon row
};

// Fraction-free (Bareiss) elimination. Denominators are cleared row-wise
// first, then the two-row cross-multiplication update with exact division
// by the previous pivot keeps every intermediate an integer minor.
Echelon bareiss(const QMatrix& m) {
    Echelon ech;
    if (m.empty()) return ech;
    const std::size_t nr = m.size(), nc = m[0].size();

    std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc));
    for (std::size_t i = 0; i < nr; ++i) {
        if (m[i].size() != nc) throw std::invalid_argument("ragged matrix");
        mpz_class lcm = 1;
        for (const auto& q : m[i]) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        for (std::size_t j = 0; j < nc; ++j)
            a[i][j] = m[i][j].get_num() * (lcm / m[i][j].get_den());
    }

    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < nc && r < nr; ++col) {
        // first nonzero entry in this column at or below row r
        std::size_t piv = r;
        while (piv < nr && a[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = r + 1; i < nr; ++i) {
            for (std::size_t j = col + 1; j < nc; ++j) {
                mpz_class t = a[r][col] * a[i][j] - a[i][col] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[r][col];
        ech.pivot_cols.push_back(col);
        ++r;
    }
    a.resize(r);
    ech.rows = std::move(a);
    return ech;
}

} // namespace

std::size_t exact_rank(const QMatrix& m) {
    return bareiss(m).pivot_cols.size();
}

std::vector<QVector> exact_nullspace(const QMatrix& m) {
    if (m.empty()) return {};
    const std::size_t nc = m[0].size();
    Echelon ech = bareiss(m);
    const std::size_t rank = ech.pivot_cols.size();

    std::vector<bool> is_pivot(nc, false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<QVector> basis;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        QVector x(nc, Rational(0));
        x[f] = 1;
        for (std::size_t i = rank; i-- > 0;) {
            const std::size_t p = ech.pivot_cols[i];
            Rational acc(0);
            for (std::size_t j = p + 1; j < nc; ++j) {
                if (ech.rows[i][j] == 0 || x[j] == 0) continue;
                acc += Rational(ech.rows[i][j]) * x[j];
            }
            x[p] = -acc / Rational(ech.rows[i][p]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

namespace {

// divide a sparse integer row by the gcd of its entries (sign-normalized
// so the leading entry is positive)
void make_primitive(std::map<std::size_t, mpz_class>& row) {
    mpz_class g = 0;
    for (const auto& [col, val] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), val.get_mpz_t());
        if (g == 1) break;
    }
    if (row.begin()->second < 0) g = -g;
    if (g != 1 && g != 0)
        for (auto& [col, val] : row)
            mpz_divexact(val.get_mpz_t(), val.get_mpz_t(), g.get_mpz_t());
}

} // namespace

bool SparseEchelon::insert(SparseRow rational_row) {
    // clear denominators: scale by the lcm, then strip content
    ZRow row;
    mpz_class lcm = 1;
    for (const auto& [col, val] : rational_row)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), val.get_den_mpz_t());
    for (const auto& [col, val] : rational_row) {
        mpz_class e = val.get_num() * (lcm / val.get_den());
        if (e != 0) row.emplace(col, std::move(e));
    }
    if (row.empty()) return false;
    make_primitive(row);

    // fraction-free cancellation of the leading entry against stored
    // primitive pivot rows until the leading column is pivot-free
    while (true) {
        while (!row.empty() && row.begin()->second == 0) row.erase(row.begin());
        if (row.empty()) return false;
        auto piv = pivots_.find(row.begin()->first);
        if (piv == pivots_.end()) break;
        const mpz_class a = piv->second.begin()->second; // pivot lead > 0
        const mpz_class b = row.begin()->second;
        for (auto& [col, val] : row) val *= a;
        for (const auto& [col, val] : piv->second) {
            auto [slot, inserted] = row.try_emplace(col, mpz_class(0));
            slot->second -= b * val;
        }
        for (auto it = row.begin(); it != row.end();)
            it = (it->second == 0) ? row.erase(it) : std::next(it);
        if (row.empty()) return false;
        make_primitive(row);
    }

    const std::size_t lead = row.begin()->first;
    pivots_.emplace(lead, std::move(row));
    return true;
}

std::vector<QVector> SparseEchelon::nullspace() const {
    std::vector<bool> is_pivot(cols_, false);
    for (const auto& [c, r] : pivots_) is_pivot[c] = true;

    std::vector<QVector> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        QVector x(cols_, Rational(0));
        x[f] = 1;
        // pivots_ is ordered by pivot column; substitute bottom-up
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            if (it->first > f) continue;
            Rational acc(0);
            for (const auto& [col, val] : it->second) {
                if (col == it->first) continue;
                if (x[col] != 0) acc += Rational(val) * x[col];
            }
            x[it->first] = -acc / Rational(it->second.begin()->second);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace conslaw
