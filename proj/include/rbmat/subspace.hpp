#pragma once

#include <optional>
#include <vector>

#include "rbmat/linop.hpp"

namespace rbmat {

using Vec = std::vector<Scalar>;

namespace linalg {

// Reduced row echelon form; returns the nonzero rows with ascending pivot
// columns, each pivot normalized to 1 and cleared above and below.
inline std::vector<Vec> rref(std::vector<Vec> rows) {
    if (rows.empty()) return rows;
    std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (!rows[i][c].is_zero()) { pivot = i; break; }
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        Scalar inv = rows[r][c].inverse();
        for (auto& x : rows[r]) x = x * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Scalar f = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        ++r;
    }
    rows.resize(r, Vec{});
    return rows;
}

// Reduce v against RREF rows; returns the remainder and the coefficients used.
inline std::pair<Vec, Vec> reduce(const std::vector<Vec>& basis, Vec v) {
    Vec coords;
    coords.reserve(basis.size());
    for (const auto& row : basis) {
        std::size_t p = 0;
        while (p < row.size() && row[p].is_zero()) ++p;
        Scalar c = v[p];
        coords.push_back(c);
        if (!c.is_zero())
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] - c * row[j];
    }
    return {std::move(v), std::move(coords)};
}

inline bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// Null space of the linear map given by `rows` (each row one equation).
inline std::vector<Vec> nullspace(const std::vector<Vec>& rows, std::size_t cols,
                                  const ScalarDomain& dom) {
    std::vector<Vec> rr = rref(rows);
    std::vector<long> pivot_of_col(cols, -1);
    for (std::size_t i = 0; i < rr.size(); ++i) {
        std::size_t p = 0;
        while (p < cols && rr[i][p].is_zero()) ++p;
        pivot_of_col[p] = static_cast<long>(i);
    }
    std::vector<Vec> out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        Vec v(cols, Scalar(dom));
        v[free] = Scalar::from_int(1, dom);
        for (std::size_t c = 0; c < cols; ++c) {
            long pi = pivot_of_col[c];
            if (pi >= 0) v[c] = -rr[static_cast<std::size_t>(pi)][free];
        }
        out.push_back(std::move(v));
    }
    return out;
}

// One exact solution of (rows) * x = rhs with free variables set to zero.
inline std::optional<Vec> solve(const std::vector<Vec>& rows, const Vec& rhs,
                                const ScalarDomain& dom) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::vector<Vec> aug = rows;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
    std::vector<Vec> rr = rref(aug);
    Vec x(cols, Scalar(dom));
    for (const auto& row : rr) {
        std::size_t p = 0;
        while (p < cols && row[p].is_zero()) ++p;
        if (p == cols) {
            if (!row[cols].is_zero()) return std::nullopt;  // inconsistent
            continue;
        }
        x[p] = row[cols];
    }
    // clear contributions of free variables (they are zero) -- verify
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Scalar acc(dom);
        for (std::size_t j = 0; j < cols; ++j) acc = acc + rows[i][j] * x[j];
        if (acc != rhs[i]) return std::nullopt;
    }
    return x;
}

}  // namespace linalg

inline Vec flatten(const Matrix<Scalar>& m) {
    Vec v;
    v.reserve(static_cast<std::size_t>(m.n()) * m.n());
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) v.push_back(m.at(i, j));
    return v;
}

inline Matrix<Scalar> unflatten(const Vec& v, int n, const ScalarDomain& dom) {
    Matrix<Scalar> m = Matrix<Scalar>::zero(n, Scalar(dom));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = v[static_cast<std::size_t>(i) * n + j];
    return m;
}

// A subspace of M_n in canonical reduced echelon form over the flattened
// entries (unit order e11 < e12 < ... < enn), so equal subspaces have equal
// bases.
class Subspace {
public:
    Subspace(int n, const ScalarDomain& dom) : n_(n), dom_(dom) {}

    static Subspace span(int n, const ScalarDomain& dom,
                         const std::vector<Matrix<Scalar>>& mats) {
        Subspace s(n, dom);
        std::vector<Vec> rows;
        rows.reserve(mats.size());
        for (const auto& m : mats) {
            if (m.n() != n) throw error("subspace dimension mismatch");
            rows.push_back(flatten(m));
        }
        s.basis_ = linalg::rref(std::move(rows));
        return s;
    }

    int n() const { return n_; }
    const ScalarDomain& domain() const { return dom_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec>& basis_rows() const { return basis_; }

    Matrix<Scalar> basis_matrix(int k) const {
        return unflatten(basis_[static_cast<std::size_t>(k)], n_, dom_);
    }

    std::vector<Matrix<Scalar>> basis_matrices() const {
        std::vector<Matrix<Scalar>> out;
        for (int k = 0; k < dim(); ++k) out.push_back(basis_matrix(k));
        return out;
    }

    bool contains(const Matrix<Scalar>& m) const {
        return linalg::vec_is_zero(linalg::reduce(basis_, flatten(m)).first);
    }

    std::optional<Vec> coordinates(const Matrix<Scalar>& m) const {
        auto [rem, coords] = linalg::reduce(basis_, flatten(m));
        if (!linalg::vec_is_zero(rem)) return std::nullopt;
        return coords;
    }

    Subspace intersect(const Subspace& other) const {
        if (n_ != other.n_ || dom_ != other.dom_) throw error("subspace context mismatch");
        // lambda-coefficients on my basis whose combination reduces to zero
        // against the other basis
        std::vector<Vec> residual_cols;
        for (const auto& row : basis_)
            residual_cols.push_back(linalg::reduce(other.basis_, row).first);
        std::size_t m = static_cast<std::size_t>(n_) * n_;
        std::vector<Vec> eqs;
        for (std::size_t c = 0; c < m; ++c) {
            Vec eq;
            for (const auto& col : residual_cols) eq.push_back(col[c]);
            eqs.push_back(std::move(eq));
        }
        std::vector<Vec> lambdas = linalg::nullspace(eqs, basis_.size(), dom_);
        std::vector<Matrix<Scalar>> gens;
        for (const auto& lam : lambdas) {
            Vec v(m, Scalar(dom_));
            for (std::size_t i = 0; i < basis_.size(); ++i)
                for (std::size_t j = 0; j < m; ++j) v[j] = v[j] + lam[i] * basis_[i][j];
            gens.push_back(unflatten(v, n_, dom_));
        }
        return span(n_, dom_, gens);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.dom_ == b.dom_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    int n_;
    ScalarDomain dom_;
    std::vector<Vec> basis_;
};

// Exact echelon bases of the image and kernel of the n^2 x n^2 linearization.
inline std::pair<Subspace, Subspace> image_and_kernel(const LinearOperator<Scalar>& L) {
    int n = L.n();
    const ScalarDomain& dom = L.exemplar().domain();
    std::vector<Matrix<Scalar>> images;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) images.push_back(L.image(i, j));
    Subspace im = Subspace::span(n, dom, images);

    // rows of the linearization: row r = entry r of the flattened image,
    // indexed over the unit coordinates
    std::size_t m = static_cast<std::size_t>(n) * n;
    std::vector<Vec> flat;
    for (const auto& img : images) flat.push_back(flatten(img));
    std::vector<Vec> eqs(m, Vec(m, Scalar(dom)));
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t r = 0; r < m; ++r) eqs[r][u] = flat[u][r];
    std::vector<Matrix<Scalar>> kernel_gens;
    for (const auto& v : linalg::nullspace(eqs, m, dom))
        kernel_gens.push_back(unflatten(v, n, dom));
    Subspace ker = Subspace::span(n, dom, kernel_gens);
    return {std::move(im), std::move(ker)};
}

// b b' stays inside S for all basis pairs
inline bool closure_check(const Subspace& s) {
    auto basis = s.basis_matrices();
    for (const auto& a : basis)
        for (const auto& b : basis)
            if (!s.contains(a * b)) return false;
    return true;
}

// Im * Ker and Ker * Im stay inside Ker
inline bool bimodule_check(const Subspace& im, const Subspace& ker) {
    auto ib = im.basis_matrices();
    auto kb = ker.basis_matrices();
    for (const auto& a : ib)
        for (const auto& k : kb) {
            if (!ker.contains(a * k)) return false;
            if (!ker.contains(k * a)) return false;
        }
    return true;
}

// Jacobson radical of a subalgebra of M_n in characteristic zero, as the
// kernel of the trace form x, y -> tr(xy) (Dickson's criterion).
inline Subspace radical_basis(const Subspace& a) {
    if (!a.domain().is_char_zero())
        throw error("radical computation requires characteristic zero");
    if (!closure_check(a)) throw error("radical of a non-subalgebra");
    auto basis = a.basis_matrices();
    std::size_t k = basis.size();
    std::vector<Vec> gram(k, Vec(k, Scalar(a.domain())));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) gram[j][i] = (basis[i] * basis[j]).trace();
    std::vector<Matrix<Scalar>> gens;
    for (const auto& lam : linalg::nullspace(gram, k, a.domain())) {
        Matrix<Scalar> m = Matrix<Scalar>::zero(a.n(), Scalar(a.domain()));
        for (std::size_t i = 0; i < k; ++i) m = m + basis[i].scaled(lam[i]);
        gens.push_back(std::move(m));
    }
    return Subspace::span(a.n(), a.domain(), gens);
}

// Over an infinite field a subspace contains an invertible matrix iff the
// determinant of its generic element is not the zero polynomial.
inline bool nondegenerate_exists(const Subspace& s) {
    if (s.domain().kind() != DomainKind::Rationals)
        throw error("nondegeneracy test is implemented over Q");
    if (s.dim() == 0) return false;
    std::vector<std::string> vars;
    for (int i = 0; i < s.dim(); ++i) vars.push_back("t" + std::to_string(i + 1));
    PolyRing ring(vars);
    Matrix<MPoly> generic = Matrix<MPoly>::zero(s.n(), MPoly::zero(ring));
    for (int k = 0; k < s.dim(); ++k) {
        Matrix<Scalar> b = s.basis_matrix(k);
        MPoly t = MPoly::variable(ring, vars[static_cast<std::size_t>(k)]);
        for (int i = 0; i < s.n(); ++i)
            for (int j = 0; j < s.n(); ++j) {
                auto q = b.at(i, j).as_rational();
                if (!q) throw error("nondegeneracy test needs rational entries");
                if (*q != 0) generic.at(i, j) = generic.at(i, j) + t.scaled(*q);
            }
    }
    return !poly_is_zero(generic.det());
}

// Determinant polynomial of the generic element (used by diagnostics/tests).
inline MPoly generic_determinant(const Subspace& s) {
    if (s.dim() == 0) throw error("generic determinant of the zero subspace");
    std::vector<std::string> vars;
    for (int i = 0; i < s.dim(); ++i) vars.push_back("t" + std::to_string(i + 1));
    PolyRing ring(vars);
    Matrix<MPoly> generic = Matrix<MPoly>::zero(s.n(), MPoly::zero(ring));
    for (int k = 0; k < s.dim(); ++k) {
        Matrix<Scalar> b = s.basis_matrix(k);
        MPoly t = MPoly::variable(ring, vars[static_cast<std::size_t>(k)]);
        for (int i = 0; i < s.n(); ++i)
            for (int j = 0; j < s.n(); ++j) {
                auto q = b.at(i, j).as_rational();
                if (!q) throw error("generic determinant needs rational entries");
                if (*q != 0) generic.at(i, j) = generic.at(i, j) + t.scaled(*q);
            }
    }
    return generic.det();
}

}  // namespace rbmat
