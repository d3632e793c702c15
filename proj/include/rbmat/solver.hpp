#pragma once

#include <map>
#include <string>
#include <vector>

#include "rbmat/catalog.hpp"
#include "rbmat/subspace.hpp"

namespace rbmat {

// A linear operator on M_3 whose unit images carry polynomial entries in the
// template unknowns.
struct OperatorTemplate {
    std::string id;
    int n = 3;
    PolyRing ring;
    LinearOperator<MPoly> op;
};

namespace detail {

class TemplateBuilder {
public:
    explicit TemplateBuilder(PolyRing ring)
        : ring_(std::move(ring)), op_(3, MPoly::zero(ring_)) {}

    MPoly v(const std::string& name) const { return MPoly::variable(ring_, name); }
    MPoly c(const Rational& q) const { return MPoly::constant(ring_, q); }
    MPoly c(long long q) const { return MPoly::constant(ring_, rat(q)); }

    // image of e_ij (1-based) given as a 3x3 array of polynomials
    void set(int i, int j, const std::array<std::array<MPoly, 3>, 3>& rows) {
        Matrix<MPoly> m = Matrix<MPoly>::zero(3, MPoly::zero(ring_));
        for (int r = 0; r < 3; ++r)
            for (int cix = 0; cix < 3; ++cix) m.at(r, cix) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(cix)];
        op_.image(i - 1, j - 1) = std::move(m);
    }

    OperatorTemplate take(std::string id) {
        return OperatorTemplate{std::move(id), 3, ring_, std::move(op_)};
    }

private:
    PolyRing ring_;
    LinearOperator<MPoly> op_;
};

}  // namespace detail

// The three parametrized stages checked by the solver:
//   section3        -- R(1) = e12 + e23, unknown images of e21, e32, e31
//   section4-21par  -- R(1) = e12 with 21 residual unknowns
//   section4-stage1 -- the earlier R(1) = e12 stage with 29 unknowns
inline OperatorTemplate make_template(std::string_view id) {
    using detail::TemplateBuilder;
    if (id == "section3") {
        PolyRing ring({"r13", "p13", "a13", "a22", "a23", "b11", "b13", "b23", "c11", "c12",
                       "c13", "c21", "c22", "c23", "c31", "c32", "c33"});
        TemplateBuilder b(ring);
        auto z = b.c(0);
        auto half = b.c(rat(1, 2));
        b.set(1, 1, {{{z, b.c(1), b.v("r13")}, {z, z, half}, {z, z, z}}});
        b.set(1, 2, {{{z, z, half}, {z, z, z}, {z, z, z}}});
        b.set(2, 2, {{{z, z, b.v("p13")}, {z, z, half}, {z, z, z}}});
        b.set(3, 3, {{{z, z, z - b.v("r13") - b.v("p13")}, {z, z, z}, {z, z, z}}});
        b.set(2, 1, {{{b.v("a22") - b.c(1), b.v("a23") - b.v("r13") + b.v("p13"), b.v("a13")},
                      {z, b.v("a22"), b.v("a23")},
                      {z, z, b.v("a22")}}});
        b.set(3, 2, {{{b.v("b11"), b.v("b23") - b.v("r13") - b.v("p13").scaled(2), b.v("b13")},
                      {z, b.v("b11"), b.v("b23")},
                      {z, z, b.v("b11") + half}}});
        b.set(3, 1, {{{b.v("c11"), b.v("c12"), b.v("c13")},
                      {b.v("c21"), b.v("c22"), b.v("c23")},
                      {b.v("c31"), b.v("c32"), b.v("c33")}}});
        return b.take("section3");
    }
    if (id == "section4-21par") {
        PolyRing ring({"b12", "b13", "c12", "c13", "d12", "d13", "f11", "f12", "f13", "f32",
                       "f33", "s12", "s13", "s22", "s32", "s33", "t12", "t13", "t22", "t32",
                       "t33"});
        TemplateBuilder b(ring);
        auto z = b.c(0);
        b.set(3, 2, {{{z, b.v("b12"), b.v("b13")}, {z, z, z}, {z, z, z}}});
        b.set(1, 1, {{{z, b.v("d12"), b.v("d13")}, {z, z, z}, {z, z, z}}});
        b.set(2, 2, {{{z, b.v("d12") + b.v("c12"), b.v("d13") + b.v("c13")}, {z, z, z}, {z, z, z}}});
        b.set(3, 3, {{{z, b.c(1) - b.v("d12").scaled(2) - b.v("c12"),
                       z - b.v("d13").scaled(2) - b.v("c13")},
                      {z, z, z},
                      {z, z, z}}});
        b.set(2, 3, {{{b.v("f11"), b.v("f12"), b.v("f13")},
                      {z, b.v("f11"), z},
                      {z, b.v("f32"), b.v("f33")}}});
        b.set(3, 1, {{{b.v("s22") + b.v("b12"), b.v("s12"), b.v("s13")},
                      {z, b.v("s22"), -b.v("b13")},
                      {z, b.v("s32"), b.v("s33")}}});
        b.set(2, 1, {{{b.v("t22") + b.v("c12"), b.v("t12"), b.v("t13")},
                      {z, b.v("t22"), -b.v("c13")},
                      {z, b.v("t32"), b.v("t33")}}});
        return b.take("section4-21par");
    }
    if (id == "section4-stage1") {
        PolyRing ring({"a12", "a13", "a32", "b12", "b13", "b32", "c12", "c13", "c32",
                       "d11", "d12", "d13", "d32", "d33", "f11", "f12", "f13", "f32", "f33",
                       "s12", "s13", "s22", "s32", "s33", "t12", "t13", "t22", "t32", "t33"});
        TemplateBuilder b(ring);
        auto z = b.c(0);
        b.set(1, 3, {{{z, b.v("a12"), b.v("a13")}, {z, z, z}, {z, b.v("a32"), z}}});
        b.set(3, 2, {{{z, b.v("b12"), b.v("b13")}, {z, z, z}, {z, b.v("b32"), z}}});
        b.set(1, 1, {{{b.v("d11"), b.v("d12"), b.v("d13")},
                      {z, b.v("d11"), z},
                      {z, b.v("d32"), b.v("d33")}}});
        b.set(2, 2, {{{b.v("d11"), b.v("d12") + b.v("c12"), b.v("d13") + b.v("c13")},
                      {z, b.v("d11"), z},
                      {z, b.v("d32") + b.v("c32"), b.v("d33")}}});
        b.set(3, 3, {{{-b.v("d11").scaled(2), b.c(1) - b.v("d12").scaled(2) - b.v("c12"),
                       z - b.v("d13").scaled(2) - b.v("c13")},
                      {z, -b.v("d11").scaled(2), z},
                      {z, z - b.v("d32").scaled(2) - b.v("c32"), -b.v("d33").scaled(2)}}});
        b.set(2, 1, {{{b.v("t22") + b.v("c12"), b.v("t12"), b.v("t13")},
                      {z, b.v("t22"), -b.v("c13")},
                      {b.v("c32"), b.v("t32"), b.v("t33")}}});
        b.set(2, 3, {{{b.v("f11"), b.v("f12"), b.v("f13")},
                      {z, b.v("f11") + b.v("a12"), b.v("a13")},
                      {-b.v("a32"), b.v("f32"), b.v("f33")}}});
        b.set(3, 1, {{{b.v("s22") + b.v("b12"), b.v("s12"), b.v("s13")},
                      {z, b.v("s22"), -b.v("b13")},
                      {b.v("b32"), b.v("s32"), b.v("s33")}}});
        return b.take("section4-stage1");
    }
    throw error("unknown template id: " + std::string(id));
}

// Residual of the weight-zero identity on a pair of matrix units (1-based).
inline Matrix<MPoly> pair_residual(const OperatorTemplate& t, int i1, int j1, int i2, int j2) {
    Matrix<MPoly> x = Matrix<MPoly>::unit(t.n, i1 - 1, j1 - 1, MPoly::zero(t.ring));
    Matrix<MPoly> y = Matrix<MPoly>::unit(t.n, i2 - 1, j2 - 1, MPoly::zero(t.ring));
    return rb_residual(t.op, x, y);
}

struct Equation {
    MPoly poly;     // normalized: leading graded-lex coefficient 1
    UnitPair pair;  // first pair it appeared at
    int row = 0, col = 0;  // 1-based entry position
};

struct QuadraticSystem {
    PolyRing ring;
    std::vector<Equation> equations;
};

// All residual entries over the n^4 ordered unit pairs, deduplicated up to a
// rational scalar multiple, in first-occurrence order.
inline QuadraticSystem generate_system(const OperatorTemplate& t) {
    QuadraticSystem sys{t.ring, {}};
    std::vector<std::string> seen;
    for (int i1 = 1; i1 <= t.n; ++i1)
        for (int j1 = 1; j1 <= t.n; ++j1)
            for (int i2 = 1; i2 <= t.n; ++i2)
                for (int j2 = 1; j2 <= t.n; ++j2) {
                    Matrix<MPoly> res = pair_residual(t, i1, j1, i2, j2);
                    for (int r = 0; r < t.n; ++r)
                        for (int c = 0; c < t.n; ++c) {
                            const MPoly& p = res.at(r, c);
                            if (p.is_zero()) continue;
                            MPoly norm = p.scaled(1 / p.leading_coefficient());
                            std::string key = norm.to_string();
                            bool dup = false;
                            for (const auto& s : seen)
                                if (s == key) { dup = true; break; }
                            if (dup) continue;
                            seen.push_back(std::move(key));
                            sys.equations.push_back(
                                Equation{norm, UnitPair{i1, j1, i2, j2}, r + 1, c + 1});
                        }
                }
    return sys;
}

using Assignment = std::map<std::string, Scalar>;

struct SubstitutionReport {
    bool all_zero = true;
    std::optional<std::size_t> first_nonzero;  // index into equations
};

inline SubstitutionReport substitute_solution(const QuadraticSystem& sys, const Assignment& sigma,
                                              const ScalarDomain& dom) {
    for (std::size_t k = 0; k < sys.equations.size(); ++k) {
        if (!sys.equations[k].poly.eval(sigma, dom).is_zero())
            return {false, k};
    }
    return {};
}

inline LinearOperator<Scalar> instantiate(const OperatorTemplate& t, const Assignment& sigma,
                                          const ScalarDomain& dom) {
    LinearOperator<Scalar> op(t.n, Scalar(dom));
    for (int i = 0; i < t.n; ++i)
        for (int j = 0; j < t.n; ++j) {
            for (int r = 0; r < t.n; ++r)
                for (int c = 0; c < t.n; ++c)
                    op.image(i, j).at(r, c) = t.op.image(i, j).at(r, c).eval(sigma, dom);
        }
    return op;
}

namespace detail {

// affine polynomial -> (constant, per-variable coefficients)
inline std::pair<Rational, std::vector<Rational>> affine_parts(const MPoly& p) {
    std::vector<Rational> coef(p.ring().size(), Rational(0));
    Rational cst = 0;
    for (const auto& [e, c] : p.terms()) {
        int deg = 0, var = -1;
        for (std::size_t i = 0; i < e.size(); ++i) {
            deg += e[i];
            if (e[i] == 1) var = static_cast<int>(i);
        }
        if (deg == 0) {
            cst = c;
        } else if (deg == 1) {
            coef[static_cast<std::size_t>(var)] = c;
        } else {
            throw error("template image entry is not affine");
        }
    }
    return {cst, coef};
}

inline std::optional<Assignment> fit_images(const LinearOperator<Scalar>& L,
                                            const OperatorTemplate& t) {
    const ScalarDomain& dom = L.exemplar().domain();
    std::size_t vars = t.ring.size();
    std::vector<Vec> rows;
    Vec rhs;
    for (int i = 0; i < t.n; ++i)
        for (int j = 0; j < t.n; ++j)
            for (int r = 0; r < t.n; ++r)
                for (int c = 0; c < t.n; ++c) {
                    auto [cst, coef] = affine_parts(t.op.image(i, j).at(r, c));
                    Vec eq;
                    eq.reserve(vars);
                    for (std::size_t v = 0; v < vars; ++v)
                        eq.push_back(Scalar::from_rational(coef[v], dom));
                    rows.push_back(std::move(eq));
                    rhs.push_back(L.image(i, j).at(r, c) - Scalar::from_rational(cst, dom));
                }
    auto sol = linalg::solve(rows, rhs, dom);
    if (!sol) return std::nullopt;
    Assignment out;
    for (std::size_t v = 0; v < vars; ++v) out.emplace(t.ring.name(v), (*sol)[v]);
    return out;
}

}  // namespace detail

struct FitResult {
    Assignment sigma;
    std::string route;  // "direct", "scaled", "scaled+theta12*T"
    Scalar scale_applied;
};

// Match an operator against a template: as-is, rescaled so that R(1) = e12,
// and finally the theta12*T conjugate of the rescaled operator.
inline std::optional<FitResult> fit_template(const LinearOperator<Scalar>& L,
                                             const OperatorTemplate& t) {
    if (L.n() != t.n) return std::nullopt;
    const ScalarDomain& dom = L.exemplar().domain();
    Scalar one = Scalar::from_int(1, dom);

    if (auto direct = detail::fit_images(L, t))
        return FitResult{std::move(*direct), "direct", one};

    Matrix<Scalar> u = unit_image(L);
    Matrix<Scalar> e12 = Matrix<Scalar>::unit(t.n, 0, 1, Scalar(dom));
    Scalar c = u.at(0, 1);
    if (c.is_zero() || u != e12.scaled(c)) return std::nullopt;
    LinearOperator<Scalar> scaled_op = scale(L, c.inverse());
    if (auto scaled = detail::fit_images(scaled_op, t))
        return FitResult{std::move(*scaled), "scaled", c.inverse()};

    AutoDescriptor flip = build_automorphism("theta12*T", ParamMap{}, dom);
    if (auto flipped = detail::fit_images(conjugate(scaled_op, flip), t))
        return FitResult{std::move(*flipped), "scaled+theta12*T", c.inverse()};
    return std::nullopt;
}

// ---- displayed relation groups for the 21-parameter stage ----

struct RelationGroup {
    std::string name;
    std::vector<MPoly> rows;
    std::vector<MPoly> cols;  // every row*col product must vanish on solutions
};

inline std::vector<RelationGroup> relation_groups(const PolyRing& ring) {
    auto v = [&](const char* n) { return MPoly::variable(ring, n); };
    auto c = [&](long long q) { return MPoly::constant(ring, rat(q)); };
    std::vector<RelationGroup> g;
    g.push_back({"group1",
                 {v("b12"), v("b13"), v("c13"), v("d13"), v("s13"), v("s22"), v("s33"),
                  v("f13") + v("t22") - v("t33"), v("d12").scaled(2) + v("c12") - c(1)},
                 {v("f11"), v("f33"), v("f32")}});
    g.push_back({"group2",
                 {v("b13"), v("c13"), v("d13"), v("d12"), v("t32"), v("s22") - v("s33"),
                  v("t22") - v("t33"), v("s32"), v("f13")},
                 {v("b12") - v("c13")}});
    g.push_back({"group3",
                 {v("b13"), v("c13"), v("d13")},
                 {v("s12"), v("s13"), v("t12"), v("t13"), v("f12") + v("t32"),
                  v("d12").scaled(3) + v("c12") - c(1) + v("f13")}});
    g.push_back({"group4",
                 {v("b13"), v("c13"), v("d13"), v("b12")},
                 {v("d13").scaled(3) + v("c13").scaled(2) + v("s22") - v("s33")}});
    g.push_back({"group5",
                 {v("b13"), v("c13"), v("d13"), v("s33") - v("s22")},
                 {v("c12") + v("t22") - v("t33") + v("s32")}});
    g.push_back({"group6",
                 {v("b13"), v("c13"), v("d13"), v("d12").scaled(2) + v("c12") - c(1), v("b12")},
                 {v("f13") + v("s32")}});
    g.push_back({"group7", {v("f11")}, {v("f33"), v("t33")}});
    return g;
}

// quadratic relations of the b13 != 0 branch, valid after the c13-killing and
// b13 = 1 normalizations
inline std::vector<MPoly> case1_quadratics(const PolyRing& ring) {
    auto v = [&](const char* n) { return MPoly::variable(ring, n); };
    auto c = [&](long long q) { return MPoly::constant(ring, rat(q)); };
    return {
        (v("c12").scaled(2) - c(1)) * (v("c12") + c(1)),
        v("d13") * (v("c12") + c(1)),
        (v("d13") * v("d13")).scaled(6) + v("c12").scaled(2) - c(1),
        v("s33") * (v("s33") - v("d13").scaled(3)) - (v("c12") + v("t33")),
        v("t33") * (v("s33") - v("d13").scaled(3)),
        v("t33") * (v("t33") + v("c12")),
    };
}

// linear relations of the same normalized branch
inline std::vector<MPoly> case1_linear(const PolyRing& ring) {
    auto v = [&](const char* n) { return MPoly::variable(ring, n); };
    auto c = [&](long long q) { return MPoly::constant(ring, rat(q)); };
    return {v("c13"), v("b12"), v("f11"), v("f33"), v("f32"), v("s12"), v("s13"), v("t12"),
            v("t13"), v("f12"), v("s32") + v("c12"), v("t32"), v("t22") - v("t33"),
            v("d12").scaled(3) + v("c12").scaled(2) - c(1), v("f13") - v("c12"),
            v("s22") - v("s33") + v("d13").scaled(3)};
}

// ---- branch normalization used before checking the case-1 relations ----

namespace detail {

inline LinearOperator<Scalar> lift_domain(const LinearOperator<Scalar>& L,
                                          const ScalarDomain& target) {
    LinearOperator<Scalar> out(L.n(), Scalar(target));
    for (int i = 0; i < L.n(); ++i)
        for (int j = 0; j < L.n(); ++j)
            for (int r = 0; r < L.n(); ++r)
                for (int c = 0; c < L.n(); ++c) {
                    auto q = L.image(i, j).at(r, c).as_rational();
                    if (!q) throw error("domain lift needs rational entries");
                    out.image(i, j).at(r, c) = Scalar::from_rational(*q, target);
                }
    return out;
}

inline long long squarefree_part(const Rational& q) {
    // q = squarefree_part * (rational square), for positive q
    Integer n = q.get_num() * q.get_den();
    if (n <= 0) throw error("squarefree part of a nonpositive rational");
    if (n > 1000000000) throw error("normalization coefficient too large");
    long long v = n.get_si(), core = 1;
    for (long long p = 2; p * p <= v; ++p) {
        int e = 0;
        while (v % p == 0) { v /= p; ++e; }
        if (e % 2 == 1) core *= p;
    }
    core *= v;  // leftover prime
    return core;
}

}  // namespace detail

struct Case1Normalized {
    LinearOperator<Scalar> op;
    Assignment sigma;
    ScalarDomain domain;
};

// Move a fitted b13 != 0 solution to the displayed normal form: kill c13 with
// phi(0,0,1,delta), then set b13 = 1 with phi(0,0,lambda,0); the second step
// may require the quadratic extension containing sqrt(b13).
inline Case1Normalized case1_normalize(const LinearOperator<Scalar>& L,
                                       const OperatorTemplate& t) {
    auto fit0 = fit_template(L, t);
    if (!fit0) throw error("operator does not fit the 21-parameter stage");
    const ScalarDomain& dom = L.exemplar().domain();
    Scalar b13 = fit0->sigma.at("b13");
    Scalar c13 = fit0->sigma.at("c13");
    if (b13.is_zero()) throw error("case-1 normalization requires b13 != 0");
    LinearOperator<Scalar> cur = scale(L, fit0->scale_applied);

    if (!c13.is_zero()) {
        Scalar delta = -(c13 / b13);
        for (int attempt = 0; attempt < 2; ++attempt) {
            ParamMap pm{{"alpha", Scalar(dom)},
                        {"beta", Scalar(dom)},
                        {"lambda", Scalar::from_int(1, dom)},
                        {"delta", attempt == 0 ? delta : -delta}};
            auto cand = conjugate(cur, build_automorphism("phi", pm, dom));
            auto f = fit_template(cand, t);
            if (f && f->sigma.at("c13").is_zero()) {
                cur = std::move(cand);
                break;
            }
            if (attempt == 1) throw error("c13 normalization failed");
        }
    }

    auto fit1 = fit_template(cur, t);
    if (!fit1) throw error("lost the template fit after c13 normalization");
    Scalar b = fit1->sigma.at("b13");
    auto brat = b.as_rational();
    if (!brat || *brat <= 0) {
        // b13 < 0 would need sqrt of a negative value; scale by -1 first
        // (sign changes are part of the allowed normalizations)
        cur = scale(cur, Scalar::from_int(-1, dom));
        fit1 = fit_template(cur, t);
        if (!fit1) throw error("lost the template fit after sign flip");
        b = fit1->sigma.at("b13");
        brat = b.as_rational();
        if (!brat || *brat <= 0) throw error("cannot normalize b13");
    }

    ScalarDomain target = dom;
    if (!rational_sqrt_exact(*brat)) {
        long long core = detail::squarefree_part(*brat);
        target = ScalarDomain::quadratic(core);
    }
    LinearOperator<Scalar> lifted =
        target == dom ? cur : detail::lift_domain(cur, target);
    Scalar broot = *Scalar::from_rational(*brat, target).sqrt();

    for (int attempt = 0; attempt < 2; ++attempt) {
        Scalar lambda = attempt == 0 ? broot : broot.inverse();
        ParamMap pm{{"alpha", Scalar(target)},
                    {"beta", Scalar(target)},
                    {"lambda", lambda},
                    {"delta", Scalar(target)}};
        auto cand = conjugate(lifted, build_automorphism("phi", pm, target));
        auto f = fit_template(cand, t);
        if (f && f->sigma.at("b13").is_one())
            return Case1Normalized{std::move(cand), std::move(f->sigma), target};
    }
    throw error("b13 normalization failed");
}

// ---- staged residual checkpoints for the section3 template ----

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Every displayed relation polynomial must vanish on every fitted assignment;
// fits with b13 != 0 are additionally moved to the normalized branch (possibly
// over Q(sqrt(d))) where the six quadratic relations apply.  Violations are
// reported with the entry label and the relation.
inline std::vector<CheckResult> relation_group_check(
    const std::vector<std::pair<std::string, Assignment>>& fits) {
    OperatorTemplate t = make_template("section4-21par");
    const ScalarDomain Q = ScalarDomain::rationals();
    auto groups = relation_groups(t.ring);
    auto quads = case1_quadratics(t.ring);
    auto linears = case1_linear(t.ring);
    std::vector<CheckResult> out;
    for (const auto& [label, sigma] : fits) {
        for (const auto& g : groups)
            for (const auto& r : g.rows)
                for (const auto& c : g.cols)
                    if (!(r * c).eval(sigma, Q).is_zero())
                        out.push_back({label + " / " + g.name, false,
                                       "(" + r.to_string() + ")*(" + c.to_string() + ") != 0"});
        if (!sigma.at("b13").is_zero()) {
            auto norm = case1_normalize(instantiate(t, sigma, Q), t);
            for (const auto& q : quads)
                if (!q.eval(norm.sigma, norm.domain).is_zero())
                    out.push_back({label + " / branch quadratic", false, q.to_string() + " != 0"});
            for (const auto& l : linears)
                if (!l.eval(norm.sigma, norm.domain).is_zero())
                    out.push_back({label + " / branch relation", false, l.to_string() + " != 0"});
        }
    }
    if (out.empty())
        out.push_back({"relation groups on " + std::to_string(fits.size()) + " fitted assignments",
                       true, ""});
    return out;
}

inline std::vector<CheckResult> section3_checkpoints() {
    OperatorTemplate t = make_template("section3");
    const PolyRing& ring = t.ring;
    auto v = [&](const char* n) { return MPoly::variable(ring, n); };
    auto c = [&](const Rational& q) { return MPoly::constant(ring, q); };
    std::vector<CheckResult> out;
    auto expect = [&](const std::string& name, const MPoly& got, const MPoly& want) {
        out.push_back({name, got == want,
                       got == want ? "" : "got " + got.to_string() + ", want " + want.to_string()});
    };

    // pair (e21, e21): the (2,3) entry is r13 - p13, the (1,2) entry is
    // -(a23 - r13 + p13)
    Matrix<MPoly> r2121 = pair_residual(t, 2, 1, 2, 1);
    expect("e21,e21 entry(2,3) == r13 - p13", r2121.at(1, 2), v("r13") - v("p13"));
    expect("e21,e21 entry(1,2) == -(a23 - r13 + p13)", r2121.at(0, 1),
           -(v("a23") - v("r13") + v("p13")));

    // pair (e32, e32): the (2,3) entry forces b23 = 0, the (1,2) entry carries
    // b23 - r13 - 2 p13, and the (1,3) entry reduces to -b13/2 once the
    // earlier consequences are substituted
    Matrix<MPoly> r3232 = pair_residual(t, 3, 2, 3, 2);
    expect("e32,e32 entry(2,3) == -b23/2", r3232.at(1, 2), -v("b23").scaled(rat(1, 2)));
    expect("e32,e32 entry(1,2) == -(b23 - r13 - 2 p13)/2", r3232.at(0, 1),
           -(v("b23") - v("r13") - v("p13").scaled(2)).scaled(rat(1, 2)));
    std::map<std::string, MPoly> stage2 = {
        {"b23", c(0)}, {"r13", c(0)}, {"p13", c(0)}};
    expect("e32,e32 entry(1,3) at b23=r13=p13=0 == -b13/2", r3232.at(0, 2).substituted(stage2),
           -v("b13").scaled(rat(1, 2)));

    // unit-sum combination for x = e31: trace equals 3(a22 - b11 - 1/2)
    Matrix<MPoly> delta = Matrix<MPoly>::zero(3, MPoly::zero(ring));
    for (int k = 1; k <= 3; ++k)
        delta = delta + pair_residual(t, 3, 1, k, k) - pair_residual(t, k, k, 3, 1);
    expect("sum_k [res(e31,ekk) - res(ekk,e31)] trace == 3(a22 - b11 - 1/2)", delta.trace(),
           (v("a22") - v("b11") - c(rat(1, 2))).scaled(3));

    // pair (e31, e31) at the fully constrained stage: entries force
    // c11 = 0, c13 = 0 and c23 = 0
    std::map<std::string, MPoly> stage3 = {
        {"r13", c(0)},  {"p13", c(0)},        {"a23", c(0)}, {"b23", c(0)},
        {"b13", c(0)},  {"a22", c(0)},        {"b11", c(rat(-1, 2))},
        {"c31", c(0)},  {"c21", c(rat(-1, 2))}, {"c22", v("c11")}, {"c33", v("c11")},
        {"c12", v("c23") - v("a13")},          {"c32", c(0)}};
    Matrix<MPoly> r3131 = pair_residual(t, 3, 1, 3, 1);
    expect("e31,e31 entry(3,3) == -c11^2 (constrained)", r3131.at(2, 2).substituted(stage3),
           -(v("c11") * v("c11")));
    expect("e31,e31 entry(2,3) == -c13 (constrained)", r3131.at(1, 2).substituted(stage3),
           -v("c13"));
    expect("e31,e31 entry(1,1) == c23 - c11^2 (constrained)", r3131.at(0, 0).substituted(stage3),
           v("c23") - v("c11") * v("c11"));
    return out;
}

}  // namespace rbmat
