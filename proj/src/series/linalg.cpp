#include "series/linalg.hpp"

#include <algorithm>
#include <map>

namespace orifold {

void LinearSystem::add_row(std::vector<std::pair<int, Scalar>> entries, Scalar rhs) {
    Row r;
    std::map<int, Scalar> acc;
    for (auto& [c, v] : entries) {
        if (c >= ncols) ncols = c + 1;
        acc[c] += v;
    }
    for (auto& [c, v] : acc)
        if (!v.is_zero()) r.entries.emplace_back(c, v);
    r.rhs = std::move(rhs);
    rows.push_back(std::move(r));
}

namespace {

struct Elim {
    int ncols;
    // reduced rows: pivot column -> (row entries, rhs)
    std::map<int, std::pair<std::map<int, Scalar>, Scalar>> pivots;
    bool inconsistent = false;

    void insert(std::map<int, Scalar> row, Scalar rhs) {
        for (;;) {
            while (!row.empty() && row.begin()->second.is_zero()) row.erase(row.begin());
            if (row.empty()) {
                if (!rhs.is_zero()) inconsistent = true;
                return;
            }
            int c = row.begin()->first;
            auto it = pivots.find(c);
            if (it == pivots.end()) {
                Scalar inv = row.begin()->second.inv();
                std::map<int, Scalar> norm;
                for (auto& [k, v] : row)
                    if (!v.is_zero()) norm[k] = v * inv;
                norm.erase(c);
                pivots[c] = {std::move(norm), rhs * inv};
                return;
            }
            Scalar f = row.begin()->second;
            row.erase(row.begin());
            for (auto& [k, v] : it->second.first) row[k] -= f * v;
            rhs -= f * it->second.second;
        }
    }
};

}  // namespace

std::optional<std::vector<Scalar>> LinearSystem::solve() const {
    Elim el;
    el.ncols = ncols;
    for (const auto& r : rows) {
        std::map<int, Scalar> row;
        for (auto& [c, v] : r.entries) row[c] += v;
        el.insert(std::move(row), r.rhs);
        if (el.inconsistent) return std::nullopt;
    }
    std::vector<Scalar> x(static_cast<size_t>(ncols));
    // back-substitute in decreasing pivot order; free variables stay zero
    for (auto it = el.pivots.rbegin(); it != el.pivots.rend(); ++it) {
        Scalar v = it->second.second;
        for (auto& [k, coef] : it->second.first) v -= coef * x[static_cast<size_t>(k)];
        x[static_cast<size_t>(it->first)] = v;
    }
    return x;
}

std::optional<std::vector<Scalar>> LinearSystem::solve_unique() const {
    Elim el;
    el.ncols = ncols;
    for (const auto& r : rows) {
        std::map<int, Scalar> row;
        for (auto& [c, v] : r.entries) row[c] += v;
        el.insert(std::move(row), r.rhs);
        if (el.inconsistent) return std::nullopt;
    }
    if (static_cast<int>(el.pivots.size()) != ncols) return std::nullopt;
    std::vector<Scalar> x(static_cast<size_t>(ncols));
    for (auto it = el.pivots.rbegin(); it != el.pivots.rend(); ++it) {
        Scalar v = it->second.second;
        for (auto& [k, coef] : it->second.first) v -= coef * x[static_cast<size_t>(k)];
        x[static_cast<size_t>(it->first)] = v;
    }
    return x;
}

std::vector<std::vector<Scalar>> nullspace(const std::vector<std::vector<Scalar>>& a, int cols) {
    // row echelon
    std::vector<std::vector<Scalar>> rows = a;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int p = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (!rows[static_cast<size_t>(i)][static_cast<size_t>(c)].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(rows[static_cast<size_t>(p)], rows[static_cast<size_t>(r)]);
        Scalar inv = rows[static_cast<size_t>(r)][static_cast<size_t>(c)].inv();
        for (auto& x : rows[static_cast<size_t>(r)]) x *= inv;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r) continue;
            Scalar f = rows[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (f.is_zero()) continue;
            for (int j = 0; j < cols; ++j)
                rows[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * rows[static_cast<size_t>(r)][static_cast<size_t>(j)];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<Scalar> v(static_cast<size_t>(cols));
        v[static_cast<size_t>(f)] = Scalar(1);
        for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
            v[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] =
                -rows[static_cast<size_t>(i)][static_cast<size_t>(f)];
        basis.push_back(std::move(v));
    }
    return basis;
}

QiPoly char_poly(const ScalarMatrix& m) {
    int n = m.rows();
    // Faddeev-LeVerrier: M_1 = M, c_{n-1} = -tr M_1, M_{k+1} = M(M_k + c_{n-k} I)
    std::vector<Scalar> c(static_cast<size_t>(n) + 1);
    c[static_cast<size_t>(n)] = Scalar(1);
    ScalarMatrix mk = m;
    for (int k = 1; k <= n; ++k) {
        Scalar ck = -(Scalar(Rat(1, k)) * mk.trace());
        c[static_cast<size_t>(n - k)] = ck;
        if (k < n) {
            ScalarMatrix adj = mk + ck * ScalarMatrix::identity(n);
            mk = m * adj;
        }
    }
    QiPoly p;
    p.c = c;
    return p;
}

std::optional<SimpleSpectrum> simple_spectrum(const ScalarMatrix& m) {
    QiPoly p = char_poly(m);
    if (!poly_squarefree(p)) return std::nullopt;
    auto roots = qi_roots_distinct(p);
    if (!roots) return std::nullopt;
    // deterministic eigenvalue order
    std::sort(roots->begin(), roots->end());
    int n = m.rows();
    SimpleSpectrum s;
    s.eigenvalues = *roots;
    for (int i = 0; i < n; ++i) {
        ScalarMatrix proj = ScalarMatrix::identity(n);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            Scalar den = s.eigenvalues[static_cast<size_t>(i)] - s.eigenvalues[static_cast<size_t>(j)];
            proj = proj * (den.inv() * (m - s.eigenvalues[static_cast<size_t>(j)] * ScalarMatrix::identity(n)));
        }
        s.projectors.push_back(proj);
    }
    return s;
}

}  // namespace orifold
