#pragma once

#include <array>
#include <set>
#include <vector>

#include "rbmat/subspace.hpp"

namespace rbmat {

// ---- univariate polynomials over Q, coefficients low to high ----

namespace upoly {

using P = std::vector<Rational>;

inline void normalize(P& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const P& p) { return static_cast<int>(p.size()) - 1; }

inline Rational eval(const P& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline P mul(const P& a, const P& b) {
    if (a.empty() || b.empty()) return {};
    P r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    normalize(r);
    return r;
}

inline std::pair<P, P> divmod(P a, const P& b) {
    if (b.empty()) throw error("polynomial division by zero");
    P q;
    normalize(a);
    while (degree(a) >= degree(b)) {
        int shift = degree(a) - degree(b);
        Rational c = a.back() / b.back();
        if (static_cast<int>(q.size()) < shift + 1) q.resize(static_cast<std::size_t>(shift) + 1, Rational(0));
        q[static_cast<std::size_t>(shift)] += c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[static_cast<std::size_t>(shift) + i] -= c * b[i];
        normalize(a);
    }
    normalize(q);
    return {q, a};
}

inline P monic(P p) {
    normalize(p);
    if (p.empty()) return p;
    Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

// extended gcd: returns (g, u, v) with u a + v b = g, g monic
inline std::tuple<P, P, P> ext_gcd(P a, P b) {
    P r0 = std::move(a), r1 = std::move(b);
    P u0 = {Rational(1)}, u1 = {};
    P v0 = {}, v1 = {Rational(1)};
    normalize(r0);
    normalize(r1);
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        P u2 = u0, v2 = v0;
        // u2 = u0 - q u1, v2 = v0 - q v1
        P qu = mul(q, u1), qv = mul(q, v1);
        u2.resize(std::max(u2.size(), qu.size()), Rational(0));
        for (std::size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
        v2.resize(std::max(v2.size(), qv.size()), Rational(0));
        for (std::size_t i = 0; i < qv.size(); ++i) v2[i] -= qv[i];
        normalize(u2);
        normalize(v2);
        r0 = std::move(r1); r1 = std::move(r);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (r0.empty()) throw error("gcd of zero polynomials");
    Rational lead = r0.back();
    for (auto& c : r0) c /= lead;
    for (auto& c : u0) c /= lead;
    for (auto& c : v0) c /= lead;
    return {r0, u0, v0};
}

struct RootSplit {
    std::vector<Rational> roots;  // distinct rational roots (squarefree input)
    P leftover;                   // rational-root-free cofactor (may be constant)
    bool conclusive = true;       // leftover certified irreducible (or constant)
};

// Rational roots of a squarefree polynomial.  Degrees 1 and 2 are exact for
// any coefficient size; for degree >= 3 the classical divisor search is used
// with a size cutoff, past which the split is reported inconclusive.
inline RootSplit rational_roots(P m) {
    RootSplit out;
    normalize(m);
    while (degree(m) >= 1) {
        if (degree(m) == 1) {
            out.roots.push_back(-m[0] / m[1]);
            m = {Rational(1)};
            break;
        }
        if (degree(m) == 2) {
            Rational disc = m[1] * m[1] - 4 * m[2] * m[0];
            auto s = rational_sqrt_exact(disc);
            if (!s) break;  // irreducible quadratic
            out.roots.push_back((-m[1] + *s) / (2 * m[2]));
            if (*s != 0) out.roots.push_back((-m[1] - *s) / (2 * m[2]));
            m = {Rational(1)};
            break;
        }
        // degree >= 3
        if (m[0] == 0) {
            out.roots.push_back(Rational(0));
            m.erase(m.begin());
            normalize(m);
            continue;
        }
        Integer denlcm = 1;
        for (const auto& c : m) denlcm = denlcm / gcd(denlcm, c.get_den()) * c.get_den();
        std::vector<Integer> ic;
        for (const auto& c : m) ic.push_back(Integer(c * denlcm));
        Integer a0 = abs(ic.front()), ad = abs(ic.back());
        if (a0 > 1000000000 || ad > 1000000000) {
            out.conclusive = false;
            break;
        }
        auto divisors = [](const Integer& v) {
            std::vector<long> out_divs;
            long n = static_cast<long>(v.get_si());
            for (long d = 1; d * d <= n; ++d)
                if (n % d == 0) {
                    out_divs.push_back(d);
                    out_divs.push_back(n / d);
                }
            return out_divs;
        };
        bool found = false;
        for (long p : divisors(a0)) {
            for (long q : divisors(ad)) {
                for (int sgn = 0; sgn < 2 && !found; ++sgn) {
                    Rational cand = rat(sgn == 0 ? p : -p, q);
                    if (eval(m, cand) == 0) {
                        out.roots.push_back(cand);
                        auto [quot, rem] = divmod(m, P{-cand, Rational(1)});
                        m = quot;
                        found = true;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) {
            // no rational root; a cubic is then irreducible, higher degrees
            // are not certified
            if (degree(m) > 3) out.conclusive = false;
            break;
        }
    }
    normalize(m);
    out.leftover = m;
    if (degree(out.leftover) > 3) out.conclusive = false;
    return out;
}

}  // namespace upoly

// ---- semisimple quotient of a subalgebra of M_n ----

// A/Rad(A) with multiplication through chosen complement representatives.
class QuotientAlgebra {
public:
    QuotientAlgebra(const Subspace& a, const Subspace& rad)
        : a_(a), rad_(rad), dom_(a.domain()) {
        if (a.domain().kind() != DomainKind::Rationals)
            throw error("quotient machinery is implemented over Q");
        // pick complement representatives among the echelon basis of A
        std::vector<Vec> tracked = rad.basis_rows();
        for (int k = 0; k < a.dim(); ++k) {
            Vec row = a.basis_rows()[static_cast<std::size_t>(k)];
            auto probe = tracked;
            probe.push_back(row);
            if (static_cast<int>(linalg::rref(probe).size()) > static_cast<int>(tracked.size())) {
                tracked.push_back(row);
                reps_.push_back(a.basis_matrix(k));
            }
        }
        dim_ = static_cast<int>(reps_.size());

        // decomposition equations: columns are rad basis then reps
        std::size_t m = static_cast<std::size_t>(a.n()) * a.n();
        std::size_t cols = rad.basis_rows().size() + reps_.size();
        eqs_.assign(m, Vec(cols, Scalar(dom_)));
        for (std::size_t c = 0; c < rad.basis_rows().size(); ++c)
            for (std::size_t r = 0; r < m; ++r) eqs_[r][c] = rad.basis_rows()[c][r];
        for (std::size_t c = 0; c < reps_.size(); ++c) {
            Vec f = flatten(reps_[c]);
            for (std::size_t r = 0; r < m; ++r) eqs_[r][rad.basis_rows().size() + c] = f[r];
        }

        mult_.assign(static_cast<std::size_t>(dim_),
                     std::vector<Vec>(static_cast<std::size_t>(dim_)));
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                mult_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    project(reps_[static_cast<std::size_t>(i)] * reps_[static_cast<std::size_t>(j)]);

        unit_ = solve_unit();
    }

    int dim() const { return dim_; }
    const ScalarDomain& domain() const { return dom_; }
    const Vec& unit() const { return unit_; }

    Vec zero() const { return Vec(static_cast<std::size_t>(dim_), Scalar(dom_)); }

    Vec mul(const Vec& x, const Vec& y) const {
        Vec out = zero();
        for (int i = 0; i < dim_; ++i) {
            if (x[static_cast<std::size_t>(i)].is_zero()) continue;
            for (int j = 0; j < dim_; ++j) {
                if (y[static_cast<std::size_t>(j)].is_zero()) continue;
                Scalar c = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
                const Vec& t = mult_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                for (int k = 0; k < dim_; ++k)
                    out[static_cast<std::size_t>(k)] =
                        out[static_cast<std::size_t>(k)] + c * t[static_cast<std::size_t>(k)];
            }
        }
        return out;
    }

    Matrix<Scalar> representative(const Vec& coords) const {
        Matrix<Scalar> m = Matrix<Scalar>::zero(a_.n(), Scalar(dom_));
        for (int i = 0; i < dim_; ++i)
            m = m + reps_[static_cast<std::size_t>(i)].scaled(coords[static_cast<std::size_t>(i)]);
        return m;
    }

    // quotient coordinates of an element of A
    Vec project(const Matrix<Scalar>& m) const {
        auto sol = linalg::solve(eqs_, flatten(m), dom_);
        if (!sol) throw error("element is not in the subalgebra");
        Vec out(static_cast<std::size_t>(dim_), Scalar(dom_));
        std::size_t off = rad_.basis_rows().size();
        for (int i = 0; i < dim_; ++i) out[static_cast<std::size_t>(i)] = (*sol)[off + static_cast<std::size_t>(i)];
        return out;
    }

    // monic minimal polynomial of x inside the unital corner with unit e
    upoly::P minimal_polynomial(const Vec& x, const Vec& e) const {
        std::vector<Vec> powers = {e};
        Vec cur = e;
        for (int k = 1; k <= dim_ + 1; ++k) {
            cur = mul(cur, x);
            // try to express cur over the previous powers
            std::vector<Vec> rows(static_cast<std::size_t>(dim_), Vec(powers.size(), Scalar(dom_)));
            for (std::size_t c = 0; c < powers.size(); ++c)
                for (int r = 0; r < dim_; ++r)
                    rows[static_cast<std::size_t>(r)][c] = powers[c][static_cast<std::size_t>(r)];
            if (auto sol = linalg::solve(rows, cur, dom_)) {
                upoly::P m(powers.size() + 1, Rational(0));
                m[powers.size()] = 1;
                for (std::size_t i = 0; i < powers.size(); ++i) {
                    auto q = (*sol)[i].as_rational();
                    if (!q) throw error("non-rational coefficient in minimal polynomial");
                    m[i] = -*q;
                }
                return m;
            }
            powers.push_back(cur);
        }
        throw error("minimal polynomial search did not terminate");
    }

    Vec eval_poly(const upoly::P& p, const Vec& x, const Vec& e) const {
        Vec acc = zero();
        Vec power = e;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] != 0) {
                Scalar c = Scalar::from_rational(p[i], dom_);
                for (int k = 0; k < dim_; ++k)
                    acc[static_cast<std::size_t>(k)] =
                        acc[static_cast<std::size_t>(k)] + c * power[static_cast<std::size_t>(k)];
            }
            if (i + 1 < p.size()) power = mul(power, x);
        }
        return acc;
    }

private:
    Vec solve_unit() const {
        // u with u b_j = b_j u = b_j for all j; a semisimple algebra has one
        std::vector<Vec> rows;
        Vec rhs;
        for (int j = 0; j < dim_; ++j) {
            for (int r = 0; r < dim_; ++r) {
                Vec left(static_cast<std::size_t>(dim_), Scalar(dom_));
                Vec right(static_cast<std::size_t>(dim_), Scalar(dom_));
                for (int i = 0; i < dim_; ++i) {
                    left[static_cast<std::size_t>(i)] =
                        mult_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                             [static_cast<std::size_t>(r)];
                    right[static_cast<std::size_t>(i)] =
                        mult_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]
                             [static_cast<std::size_t>(r)];
                }
                Scalar want = r == j ? Scalar::from_int(1, dom_) : Scalar(dom_);
                rows.push_back(left);
                rhs.push_back(want);
                rows.push_back(right);
                rhs.push_back(want);
            }
        }
        auto sol = linalg::solve(rows, rhs, dom_);
        if (!sol) throw error("semisimple quotient has no unit (unexpected)");
        return *sol;
    }

    Subspace a_;
    Subspace rad_;
    ScalarDomain dom_;
    int dim_ = 0;
    std::vector<Matrix<Scalar>> reps_;
    std::vector<std::vector<Vec>> mult_;
    std::vector<Vec> eqs_;
    Vec unit_;
};

struct IdempotentInventory {
    std::set<int> ranks;
    bool inconclusive = false;
};

namespace detail {

inline bool vec_equal(const Vec& a, const Vec& b) { return a == b; }

// orthogonal split of the corner idempotent e along the coprime factors of
// the minimal polynomial of x
inline std::vector<Vec> crt_split(const QuotientAlgebra& q, const Vec& x, const Vec& e,
                                  const upoly::P& m, const std::vector<upoly::P>& factors) {
    std::vector<Vec> out;
    for (const auto& f : factors) {
        auto [h, rem] = upoly::divmod(m, f);
        if (!rem.empty()) throw error("factor does not divide the minimal polynomial");
        auto [g, u, v] = upoly::ext_gcd(h, f);
        if (upoly::degree(g) != 0) throw error("factors are not coprime");
        upoly::P ef = upoly::divmod(upoly::mul(u, h), m).second;  // u h mod m
        out.push_back(q.eval_poly(ef, x, e));
    }
    return out;
}

}  // namespace detail

// The set of matrix ranks of nonzero idempotents of a subalgebra A of M_n:
// split the semisimple quotient A/Rad(A) into orthogonal primitive
// idempotents, lift every subset sum back to A (Newton iteration through the
// nilpotent radical), and record matrix ranks.  An undecidable split is
// reported through the `inconclusive` flag, never guessed.
inline IdempotentInventory idempotent_ranks(const Subspace& a) {
    if (!a.domain().is_char_zero())
        throw error("idempotent inventory requires characteristic zero");
    if (!closure_check(a)) throw error("idempotent inventory of a non-subalgebra");
    IdempotentInventory out;
    Subspace rad = radical_basis(a);
    if (rad.dim() == a.dim()) return out;  // nil algebra: no nonzero idempotents

    QuotientAlgebra q(a, rad);
    const ScalarDomain& dom = a.domain();

    // refine corners until primitive
    std::vector<Vec> primitives;
    std::vector<Vec> pending = {q.unit()};
    int guard = 0;
    while (!pending.empty()) {
        if (++guard > 64) throw error("idempotent refinement did not terminate");
        Vec e = pending.back();
        pending.pop_back();

        // corner basis: RREF span of e b e over quotient coordinates
        std::vector<Vec> corner_rows;
        for (int i = 0; i < q.dim(); ++i) {
            Vec b(static_cast<std::size_t>(q.dim()), Scalar(dom));
            b[static_cast<std::size_t>(i)] = Scalar::from_int(1, dom);
            corner_rows.push_back(q.mul(q.mul(e, b), e));
        }
        corner_rows = linalg::rref(corner_rows);
        if (corner_rows.size() <= 1) {
            primitives.push_back(e);
            continue;
        }

        // probes: corner basis, pairwise sums, pairwise products
        std::vector<Vec> probes = corner_rows;
        for (std::size_t i = 0; i < corner_rows.size(); ++i)
            for (std::size_t j = i + 1; j < corner_rows.size(); ++j) {
                Vec s(static_cast<std::size_t>(q.dim()), Scalar(dom));
                for (int k = 0; k < q.dim(); ++k)
                    s[static_cast<std::size_t>(k)] = corner_rows[i][static_cast<std::size_t>(k)] +
                                                     corner_rows[j][static_cast<std::size_t>(k)];
                probes.push_back(std::move(s));
                probes.push_back(q.mul(corner_rows[i], corner_rows[j]));
            }

        bool split_done = false;
        bool saw_inconclusive = false;
        for (const auto& x : probes) {
            upoly::P m = q.minimal_polynomial(x, e);
            auto rs = upoly::rational_roots(m);
            if (!rs.conclusive) saw_inconclusive = true;
            std::vector<upoly::P> factors;
            for (const auto& r : rs.roots) factors.push_back(upoly::P{-r, Rational(1)});
            if (upoly::degree(rs.leftover) >= 1) factors.push_back(upoly::monic(rs.leftover));
            if (factors.size() < 2) continue;
            for (auto& piece : detail::crt_split(q, x, e, upoly::monic(m), factors)) {
                if (linalg::vec_is_zero(piece)) continue;
                pending.push_back(std::move(piece));
            }
            split_done = true;
            break;
        }
        if (split_done) continue;

        // unsplittable corner: a commutative corner whose basis elements all
        // have irreducible minimal polynomials is a field (no proper
        // idempotents over Q); anything else cannot be certified
        bool commutative = true;
        for (std::size_t i = 0; i < corner_rows.size() && commutative; ++i)
            for (std::size_t j = i + 1; j < corner_rows.size() && commutative; ++j)
                if (q.mul(corner_rows[i], corner_rows[j]) != q.mul(corner_rows[j], corner_rows[i]))
                    commutative = false;
        if (!commutative || saw_inconclusive) out.inconclusive = true;
        primitives.push_back(e);
    }

    // lift every nonempty subset sum and record its matrix rank
    std::size_t count = primitives.size();
    if (count > 12) throw error("unexpectedly many primitive idempotents");
    for (std::size_t mask = 1; mask < (1ULL << count); ++mask) {
        Vec s(static_cast<std::size_t>(q.dim()), Scalar(dom));
        for (std::size_t i = 0; i < count; ++i) {
            if (!(mask & (1ULL << i))) continue;
            for (int k = 0; k < q.dim(); ++k)
                s[static_cast<std::size_t>(k)] =
                    s[static_cast<std::size_t>(k)] + primitives[i][static_cast<std::size_t>(k)];
        }
        if (linalg::vec_is_zero(s)) continue;
        Matrix<Scalar> lift = q.representative(s);
        int iter = 0;
        while (lift * lift != lift) {
            if (++iter > 40) throw error("idempotent lifting did not converge");
            Matrix<Scalar> sq = lift * lift;
            lift = sq.scaled(Scalar::from_int(3, dom)) -
                   (sq * lift).scaled(Scalar::from_int(2, dom));
        }
        if (!lift.is_zero()) out.ranks.insert(rank(lift));
    }
    return out;
}

// ---- isomorphism-invariant profile of a subalgebra ----

struct AlgebraProfile {
    int dim = 0;
    int radical_dim = 0;
    int radical_sq_dim = 0;
    bool has_unit = false;
    bool has_left_unit = false;
    bool has_right_unit = false;
    bool commutative = false;
    int ann_left = 0;   // dim { x in A : x Rad = 0 }
    int ann_right = 0;  // dim { x in A : Rad x = 0 }
    int ann_two = 0;

    friend bool operator==(const AlgebraProfile&, const AlgebraProfile&) = default;

    // comparison key invariant under anti-isomorphism (transpose swaps the
    // one-sided data)
    std::array<int, 10> sym_key() const {
        return {dim,
                radical_dim,
                radical_sq_dim,
                has_unit ? 1 : 0,
                (has_left_unit ? 1 : 0) + (has_right_unit ? 1 : 0),
                commutative ? 1 : 0,
                std::min(ann_left, ann_right),
                std::max(ann_left, ann_right),
                ann_two,
                0};
    }
};

inline AlgebraProfile algebra_profile(const Subspace& a) {
    if (!a.domain().is_char_zero()) throw error("profile requires characteristic zero");
    if (!closure_check(a)) throw error("profile of a non-subalgebra");
    const ScalarDomain& dom = a.domain();
    AlgebraProfile p;
    p.dim = a.dim();
    Subspace rad = radical_basis(a);
    p.radical_dim = rad.dim();

    auto basis = a.basis_matrices();
    auto rad_basis = rad.basis_matrices();

    std::vector<Matrix<Scalar>> rad_sq;
    for (const auto& x : rad_basis)
        for (const auto& y : rad_basis) rad_sq.push_back(x * y);
    p.radical_sq_dim = Subspace::span(a.n(), dom, rad_sq).dim();

    p.commutative = true;
    for (const auto& x : basis)
        for (const auto& y : basis)
            if (x * y != y * x) p.commutative = false;

    // unit systems: unknown u = sum lambda_i b_i
    std::size_t k = basis.size();
    std::size_t m = static_cast<std::size_t>(a.n()) * a.n();
    auto unit_system = [&](bool left, bool right) {
        std::vector<Vec> rows;
        Vec rhs;
        for (std::size_t j = 0; j < k; ++j) {
            Vec target = flatten(basis[j]);
            if (left) {
                for (std::size_t r = 0; r < m; ++r) {
                    Vec eq;
                    for (std::size_t i = 0; i < k; ++i) eq.push_back(flatten(basis[i] * basis[j])[r]);
                    rows.push_back(std::move(eq));
                    rhs.push_back(target[r]);
                }
            }
            if (right) {
                for (std::size_t r = 0; r < m; ++r) {
                    Vec eq;
                    for (std::size_t i = 0; i < k; ++i) eq.push_back(flatten(basis[j] * basis[i])[r]);
                    rows.push_back(std::move(eq));
                    rhs.push_back(target[r]);
                }
            }
        }
        return linalg::solve(rows, rhs, dom).has_value();
    };
    if (k > 0) {
        p.has_left_unit = unit_system(true, false);
        p.has_right_unit = unit_system(false, true);
        p.has_unit = unit_system(true, true);
    }

    // annihilators of the radical inside A
    auto ann_dim = [&](bool left, bool right) {
        if (rad_basis.empty()) return static_cast<int>(k);
        std::vector<Vec> rows;
        for (const auto& r : rad_basis) {
            for (std::size_t e = 0; e < m; ++e) {
                if (left) {
                    Vec eq;
                    for (std::size_t i = 0; i < k; ++i) eq.push_back(flatten(basis[i] * r)[e]);
                    rows.push_back(std::move(eq));
                }
                if (right) {
                    Vec eq;
                    for (std::size_t i = 0; i < k; ++i) eq.push_back(flatten(r * basis[i])[e]);
                    rows.push_back(std::move(eq));
                }
            }
        }
        return static_cast<int>(linalg::nullspace(rows, k, dom).size());
    };
    if (k > 0) {
        p.ann_left = ann_dim(true, false);
        p.ann_right = ann_dim(false, true);
        p.ann_two = ann_dim(true, true);
    }
    return p;
}

}  // namespace rbmat
