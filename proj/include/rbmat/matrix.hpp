#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbmat/poly.hpp"
#include "rbmat/scalar.hpp"

namespace rbmat {

inline Scalar ring_zero(const Scalar& x) { return Scalar(x.domain()); }
inline Scalar ring_one(const Scalar& x) { return Scalar::from_int(1, x.domain()); }
inline Scalar ring_from_rational(const Scalar& x, const Rational& c) {
    return Scalar::from_rational(c, x.domain());
}

inline MPoly ring_zero(const MPoly& x) { return MPoly::zero(x.ring()); }
inline MPoly ring_one(const MPoly& x) { return MPoly::constant(x.ring(), 1); }
inline MPoly ring_from_rational(const MPoly& x, const Rational& c) {
    return MPoly::constant(x.ring(), c);
}

// Dense square matrix over an exact commutative ring (Scalar or MPoly).
template <class R>
class Matrix {
public:
    Matrix(int n, const R& fill) : n_(n), e_(static_cast<std::size_t>(n) * n, fill) {
        if (n < 1) throw error("matrix dimension must be positive");
    }

    static Matrix zero(int n, const R& exemplar) { return Matrix(n, ring_zero(exemplar)); }

    static Matrix identity(int n, const R& exemplar) {
        Matrix m = zero(n, exemplar);
        R one = ring_one(exemplar);
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    // Matrix unit e_{i+1,j+1} (indices are 0-based here).
    static Matrix unit(int n, int i, int j, const R& exemplar) {
        Matrix m = zero(n, exemplar);
        m.at(i, j) = ring_one(exemplar);
        return m;
    }

    int n() const { return n_; }
    R& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const R& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const R& exemplar() const { return e_[0]; }

    bool is_zero() const {
        for (const R& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = r.e_[k] + b.e_[k];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = r.e_[k] - b.e_[k];
        return r;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (R& x : r.e_) x = -x;
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = zero(a.n_, a.exemplar());
        for (int i = 0; i < a.n_; ++i) {
            for (int k = 0; k < a.n_; ++k) {
                const R& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < a.n_; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
                }
            }
        }
        return r;
    }

    Matrix scaled(const R& c) const {
        Matrix r = *this;
        for (R& x : r.e_) x = x * c;
        return r;
    }

    Matrix transposed() const {
        Matrix r = *this;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i);
        return r;
    }

    R trace() const {
        R t = ring_zero(exemplar());
        for (int i = 0; i < n_; ++i) t = t + at(i, i);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    // Cofactor expansion; meant for the small dimensions used here.
    R det() const {
        if (n_ == 1) return at(0, 0);
        std::vector<int> cols(n_);
        for (int j = 0; j < n_; ++j) cols[j] = j;
        return det_rec(0, cols);
    }

    std::string to_string() const {
        std::string out = "[";
        for (int i = 0; i < n_; ++i) {
            out += i == 0 ? "[" : ", [";
            for (int j = 0; j < n_; ++j) {
                if (j) out += ", ";
                out += at(i, j).to_string();
            }
            out += "]";
        }
        return out + "]";
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (n_ != o.n_) throw error("matrix dimension mismatch");
    }

    R det_rec(int row, std::vector<int>& cols) const {
        if (cols.size() == 1) return at(row, cols[0]);
        R acc = ring_zero(exemplar());
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const R& pivot = at(row, cols[k]);
            if (pivot.is_zero()) continue;
            int col = cols[k];
            cols.erase(cols.begin() + static_cast<long>(k));
            R minor = det_rec(row + 1, cols);
            cols.insert(cols.begin() + static_cast<long>(k), col);
            R term = pivot * minor;
            acc = (k % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    }

    int n_;
    std::vector<R> e_;
};

// ---- field-only helpers (R = Scalar) ----

inline std::optional<Matrix<Scalar>> inverse(const Matrix<Scalar>& m) {
    int n = m.n();
    Scalar zero = ring_zero(m.exemplar());
    Matrix<Scalar> a = m;
    Matrix<Scalar> inv = Matrix<Scalar>::identity(n, zero);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) return std::nullopt;
        for (int j = 0; j < n; ++j) {
            std::swap(a.at(col, j), a.at(pivot, j));
            std::swap(inv.at(col, j), inv.at(pivot, j));
        }
        Scalar pinv = a.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            a.at(col, j) = a.at(col, j) * pinv;
            inv.at(col, j) = inv.at(col, j) * pinv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            Scalar f = a.at(r, col);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) = a.at(r, j) - f * a.at(col, j);
                inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

inline int rank(const Matrix<Scalar>& m) {
    int n = m.n();
    Matrix<Scalar> a = m;
    int r = 0;
    for (int col = 0; col < n && r < n; ++col) {
        int pivot = -1;
        for (int row = r; row < n; ++row)
            if (!a.at(row, col).is_zero()) { pivot = row; break; }
        if (pivot < 0) continue;
        for (int j = 0; j < n; ++j) std::swap(a.at(r, j), a.at(pivot, j));
        Scalar pinv = a.at(r, col).inverse();
        for (int j = 0; j < n; ++j) a.at(r, j) = a.at(r, j) * pinv;
        for (int row = 0; row < n; ++row) {
            if (row == r || a.at(row, col).is_zero()) continue;
            Scalar f = a.at(row, col);
            for (int j = 0; j < n; ++j) a.at(row, j) = a.at(row, j) - f * a.at(r, j);
        }
        ++r;
    }
    return r;
}

// Least k >= 1 with X^k = 0, or nullopt when X is not nilpotent (a nilpotent
// n x n matrix has index at most n).
inline std::optional<int> matrix_nilindex(const Matrix<Scalar>& x) {
    Matrix<Scalar> p = x;
    for (int k = 1; k <= x.n(); ++k) {
        if (p.is_zero()) return k;
        p = p * x;
    }
    return std::nullopt;
}

template <class R>
Matrix<R> matrix_power(const Matrix<R>& x, int k) {
    Matrix<R> acc = Matrix<R>::identity(x.n(), x.exemplar());
    for (int i = 0; i < k; ++i) acc = acc * x;
    return acc;
}

}  // namespace rbmat
