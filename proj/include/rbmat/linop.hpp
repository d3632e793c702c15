#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbmat/matrix.hpp"

namespace rbmat {

// Ordered pair of matrix units, kept 1-based for display ("e21").
struct UnitPair {
    int i1, j1, i2, j2;

    std::string to_string() const {
        return "(e" + std::to_string(i1) + std::to_string(j1) + ", e" + std::to_string(i2) +
               std::to_string(j2) + ")";
    }
};

// A linear map on M_n given by the images of the n^2 matrix units, together
// with the weight it is meant to have in the Rota-Baxter identity.
template <class R>
class LinearOperator {
public:
    LinearOperator(int n, const R& exemplar)
        : n_(n), weight_(ring_zero(exemplar)) {
        images_.reserve(static_cast<std::size_t>(n) * n);
        for (int k = 0; k < n * n; ++k) images_.push_back(Matrix<R>::zero(n, exemplar));
    }

    int n() const { return n_; }
    const R& weight() const { return weight_; }
    void set_weight(const R& w) { weight_ = w; }
    const R& exemplar() const { return weight_; }

    // image of the unit e_{i+1,j+1}; 0-based indices
    Matrix<R>& image(int i, int j) { return images_[static_cast<std::size_t>(i) * n_ + j]; }
    const Matrix<R>& image(int i, int j) const {
        return images_[static_cast<std::size_t>(i) * n_ + j];
    }

    bool is_zero() const {
        for (const auto& m : images_)
            if (!m.is_zero()) return false;
        return true;
    }

    friend bool operator==(const LinearOperator& a, const LinearOperator& b) {
        return a.n_ == b.n_ && a.weight_ == b.weight_ && a.images_ == b.images_;
    }
    friend bool operator!=(const LinearOperator& a, const LinearOperator& b) {
        return !(a == b);
    }

    // L(X) = sum_ij X[i][j] * L(e_ij)
    Matrix<R> apply(const Matrix<R>& x) const {
        if (x.n() != n_) throw error("operator/matrix dimension mismatch");
        Matrix<R> acc = Matrix<R>::zero(n_, exemplar());
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                const R& c = x.at(i, j);
                if (c.is_zero()) continue;
                acc = acc + image(i, j).scaled(c);
            }
        return acc;
    }

    LinearOperator scaled(const R& c) const {
        LinearOperator r = *this;
        for (auto& m : r.images_) m = m.scaled(c);
        return r;
    }

    friend LinearOperator compose(const LinearOperator& f, const LinearOperator& g) {
        if (f.n_ != g.n_) throw error("operator dimension mismatch");
        LinearOperator r(f.n_, f.exemplar());
        for (int i = 0; i < f.n_; ++i)
            for (int j = 0; j < f.n_; ++j) r.image(i, j) = f.apply(g.image(i, j));
        return r;
    }

private:
    int n_;
    std::vector<Matrix<R>> images_;
    R weight_;
};

// R(x)R(y) - R( R(x)y + xR(y) + w*xy ); zero iff the Rota-Baxter identity of
// weight w holds on the pair (x, y).
template <class R>
Matrix<R> rb_residual(const LinearOperator<R>& L, const Matrix<R>& x, const Matrix<R>& y) {
    Matrix<R> rx = L.apply(x);
    Matrix<R> ry = L.apply(y);
    Matrix<R> inner = rx * y + x * ry;
    if (!L.weight().is_zero()) inner = inner + (x * y).scaled(L.weight());
    return rx * ry - L.apply(inner);
}

template <class R>
struct RbReport {
    bool ok = true;
    std::optional<UnitPair> first_failure;
    std::optional<Matrix<R>> residual;
};

// Checks the identity on all n^4 ordered unit pairs in lexicographic order;
// by bilinearity this is equivalent to checking it on all of M_n x M_n.
template <class R>
RbReport<R> rb_check(const LinearOperator<R>& L) {
    int n = L.n();
    for (int i1 = 0; i1 < n; ++i1)
        for (int j1 = 0; j1 < n; ++j1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = 0; j2 < n; ++j2) {
                    Matrix<R> x = Matrix<R>::unit(n, i1, j1, L.exemplar());
                    Matrix<R> y = Matrix<R>::unit(n, i2, j2, L.exemplar());
                    Matrix<R> res = rb_residual(L, x, y);
                    if (!res.is_zero())
                        return {false, UnitPair{i1 + 1, j1 + 1, i2 + 1, j2 + 1}, std::move(res)};
                }
    return {};
}

template <class R>
Matrix<R> unit_image(const LinearOperator<R>& L) {
    return L.apply(Matrix<R>::identity(L.n(), L.exemplar()));
}

// Least k <= bound with L^k = 0 as an operator, or nullopt.
template <class R>
std::optional<int> nilpotency_index(const LinearOperator<R>& L, int bound) {
    if (bound < 1) throw error("nilpotency bound must be at least 1");
    LinearOperator<R> p = L;
    for (int k = 1; k <= bound; ++k) {
        if (p.is_zero()) return k;
        p = compose(L, p);
    }
    return std::nullopt;
}

template <class R>
std::optional<int> nilpotency_index(const LinearOperator<R>& L) {
    return nilpotency_index(L, 2 * L.n() + 1);
}

// (R(1))^k == k! * R^k(1)
template <class R>
bool factorial_unit_check(const LinearOperator<R>& L, int k) {
    if (k < 1) throw error("factorial check needs k >= 1");
    Matrix<R> lhs = matrix_power(unit_image(L), k);
    Matrix<R> iter = Matrix<R>::identity(L.n(), L.exemplar());
    for (int i = 0; i < k; ++i) iter = L.apply(iter);
    Rational fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    return lhs == iter.scaled(ring_from_rational(L.exemplar(), fact));
}

// Nonzero scalar multiples preserve the identity only at weight zero, so
// scaling an operator of nonzero weight is rejected.
template <class R>
LinearOperator<R> scale(const LinearOperator<R>& L, const R& alpha) {
    if (!L.weight().is_zero()) throw error("scaling is restricted to weight-zero operators");
    return L.scaled(alpha);
}

// tr(R(x) y) + tr(x R(y)) = 0 on all unit pairs.
template <class R>
bool skew_symmetric_check(const LinearOperator<R>& L) {
    int n = L.n();
    for (int i1 = 0; i1 < n; ++i1)
        for (int j1 = 0; j1 < n; ++j1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = 0; j2 < n; ++j2) {
                    Matrix<R> x = Matrix<R>::unit(n, i1, j1, L.exemplar());
                    Matrix<R> y = Matrix<R>::unit(n, i2, j2, L.exemplar());
                    R s = (L.apply(x) * y).trace() + (x * L.apply(y)).trace();
                    if (!s.is_zero()) return false;
                }
    return true;
}

// An (anti)automorphism of M_n: X -> A^-1 X A, or X -> A^-1 X^T A when
// transpose_first is set.
class AutoDescriptor {
public:
    AutoDescriptor(Matrix<Scalar> conjugator, bool transpose_first = false, std::string tag = "")
        : a_(std::move(conjugator)),
          ainv_(Matrix<Scalar>::zero(a_.n(), a_.exemplar())),
          transpose_first_(transpose_first),
          tag_(std::move(tag)) {
        auto inv = inverse(a_);
        if (!inv) throw error("conjugator is singular");
        ainv_ = *inv;
    }

    static AutoDescriptor identity(int n, const ScalarDomain& dom) {
        return AutoDescriptor(Matrix<Scalar>::identity(n, Scalar(dom)), false, "id");
    }

    static AutoDescriptor transpose(int n, const ScalarDomain& dom) {
        return AutoDescriptor(Matrix<Scalar>::identity(n, Scalar(dom)), true, "T");
    }

    int n() const { return a_.n(); }
    const Matrix<Scalar>& conjugator() const { return a_; }
    bool transpose_first() const { return transpose_first_; }
    bool is_antiautomorphism() const { return transpose_first_; }
    const std::string& tag() const { return tag_; }

    Matrix<Scalar> apply(const Matrix<Scalar>& x) const {
        return transpose_first_ ? ainv_ * x.transposed() * a_ : ainv_ * x * a_;
    }

    Matrix<Scalar> apply_inverse(const Matrix<Scalar>& x) const {
        return transpose_first_ ? (a_ * x * ainv_).transposed() : a_ * x * ainv_;
    }

    AutoDescriptor inversed() const {
        if (!transpose_first_) return AutoDescriptor(ainv_, false, tag_.empty() ? "" : tag_ + "^-1");
        return AutoDescriptor(a_.transposed(), true, tag_.empty() ? "" : tag_ + "^-1");
    }

private:
    Matrix<Scalar> a_;
    Matrix<Scalar> ainv_;
    bool transpose_first_;
    std::string tag_;
};

// R^(psi) = psi^-1 . R . psi
inline LinearOperator<Scalar> conjugate(const LinearOperator<Scalar>& L,
                                        const AutoDescriptor& psi) {
    if (psi.n() != L.n()) throw error("conjugator dimension mismatch");
    LinearOperator<Scalar> r(L.n(), L.exemplar());
    r.set_weight(L.weight());
    for (int i = 0; i < L.n(); ++i)
        for (int j = 0; j < L.n(); ++j) {
            Matrix<Scalar> u = Matrix<Scalar>::unit(L.n(), i, j, L.exemplar());
            r.image(i, j) = psi.apply_inverse(L.apply(psi.apply(u)));
        }
    return r;
}

// ---- Z_2 grading of M_3 (A_0 spanned by e11, e12, e21, e22, e33) ----

inline bool grading_a0_contains(int i, int j) {
    return (i < 2 && j < 2) || (i == 2 && j == 2);
}

template <class R>
Matrix<R> grading_project_a0(const Matrix<R>& x) {
    Matrix<R> r = x;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!grading_a0_contains(i, j)) r.at(i, j) = ring_zero(x.exemplar());
    return r;
}

template <class R>
struct GradedProjection {
    LinearOperator<R> p0;  // A_0 component of L restricted to A_0
    bool valid = false;
};

// Projection onto the even part of the Z_2 grading: P0 is an RB operator on A_0
// provided the odd projection of Im L multiplies to zero and L(L(x)y),
// L(y L(x)) stay in A_0 for x, y even.
template <class R>
GradedProjection<R> graded_projection(const LinearOperator<R>& L) {
    if (L.n() != 3) throw error("grading is defined for n = 3 only");
    GradedProjection<R> out{LinearOperator<R>(3, L.exemplar()), true};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (grading_a0_contains(i, j))
                out.p0.image(i, j) = grading_project_a0(L.image(i, j));

    // odd projections of Im L must have trivial products
    std::vector<Matrix<R>> odd;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Matrix<R> m = L.image(i, j) - grading_project_a0(L.image(i, j));
            if (!m.is_zero()) odd.push_back(std::move(m));
        }
    for (const auto& u : odd)
        for (const auto& v : odd)
            if (!(u * v).is_zero()) out.valid = false;

    // L(L(x)y) and L(y L(x)) must stay even for even x, y
    for (int xi = 0; xi < 3 && out.valid; ++xi)
        for (int xj = 0; xj < 3 && out.valid; ++xj) {
            if (!grading_a0_contains(xi, xj)) continue;
            Matrix<R> lx = L.image(xi, xj);
            for (int yi = 0; yi < 3 && out.valid; ++yi)
                for (int yj = 0; yj < 3 && out.valid; ++yj) {
                    if (!grading_a0_contains(yi, yj)) continue;
                    Matrix<R> y = Matrix<R>::unit(3, yi, yj, L.exemplar());
                    Matrix<R> a = L.apply(lx * y);
                    Matrix<R> b = L.apply(y * lx);
                    if (a != grading_project_a0(a) || b != grading_project_a0(b))
                        out.valid = false;
                }
        }
    return out;
}

// Restriction of a (projected) operator on A_0 to the M_2 corner spanned by
// e11, e12, e21, e22.
template <class R>
LinearOperator<R> restrict_to_corner(const LinearOperator<R>& p0) {
    if (p0.n() != 3) throw error("corner restriction is defined for n = 3 only");
    LinearOperator<R> r(2, p0.exemplar());
    r.set_weight(p0.weight());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const Matrix<R>& m = p0.image(i, j);
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) r.image(i, j).at(a, b) = m.at(a, b);
        }
    return r;
}

}  // namespace rbmat
