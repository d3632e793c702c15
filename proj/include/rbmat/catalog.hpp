#pragma once

#include <map>
#include <string>
#include <vector>

#include "rbmat/linop.hpp"

namespace rbmat {

using ParamMap = std::map<std::string, Scalar>;

inline ParamMap params_from_rationals(const std::map<std::string, Rational>& vals,
                                      const ScalarDomain& dom) {
    ParamMap out;
    for (const auto& [k, v] : vals) out.emplace(k, Scalar::from_rational(v, dom));
    return out;
}

struct ParamSpec {
    std::string name;
    bool two_valued = false;            // restricted to {0, -1}
    std::vector<Rational> excluded;     // field parameters may exclude values
    bool dimension = false;             // Example1's n
};

struct CatalogEntry {
    std::string id;
    std::string label;
    int n = 3;  // for Example1 the default when no n parameter is given
    std::vector<ParamSpec> params;
    std::string required_domain = "Q";
};

inline const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;
        auto kappa = ParamSpec{"kappa", true, {}, false};
        auto mu = ParamSpec{"mu", true, {}, false};
        for (int i = 1; i <= 4; ++i) v.push_back({"L" + std::to_string(i), "(L" + std::to_string(i) + ")", 2, {}, "Q"});
        v.push_back({"L34", "(L3/L4 joined)", 2, {kappa}, "Q"});
        v.push_back({"Q1", "(Q1)", 3, {}, "Q"});
        v.push_back({"Q2", "(Q2)", 3, {}, "Q"});
        v.push_back({"Q3", "(Q3)", 3, {kappa, ParamSpec{"alpha", false, {}, false}}, "Q"});
        v.push_back({"Q4", "(Q4)", 3, {kappa}, "Q"});
        v.push_back({"Q5", "(Q5)", 3, {kappa, ParamSpec{"beta", false, {rat(-1)}, false}}, "Q"});
        v.push_back({"Q6", "(Q6)", 3, {kappa, mu}, "Q"});
        v.push_back({"Q7", "(Q7)", 3, {}, "Q"});
        v.push_back({"Q8", "(Q8)", 3, {kappa}, "Q"});
        v.push_back({"Q9", "(Q9)", 3, {kappa}, "Q"});
        v.push_back({"Q10", "(Q10)", 3, {}, "Q"});
        v.push_back({"Q11", "(Q11)", 3, {}, "Q"});
        v.push_back({"Q12", "(Q12)", 3, {}, "Q"});
        v.push_back({"Q13", "(Q13)", 3, {kappa}, "Q"});
        v.push_back({"Q14", "(Q14)", 3, {}, "Q"});
        v.push_back({"Q15", "(Q15)", 3, {kappa}, "Q"});
        v.push_back({"Q16", "(Q16)", 3, {}, "Q"});
        v.push_back({"Q17", "(Q17)", 3, {}, "Q"});
        v.push_back({"Q18", "(Q18)", 3, {}, "Q"});
        v.push_back({"Q19", "(Q19)", 3, {kappa}, "Q"});
        v.push_back({"Q20", "(Q20)", 3, {}, "Q"});
        v.push_back({"Q21", "(Q21)", 3, {kappa}, "Q"});
        v.push_back({"Q22", "(Q22)", 3, {kappa, mu}, "Q"});
        v.push_back({"Q23", "(Q23)", 3, {kappa, ParamSpec{"gamma", false, {rat(-1)}, false}}, "Q"});
        v.push_back({"Q24", "(Q24)", 3, {kappa}, "Q"});
        for (int i = 1; i <= 8; ++i) v.push_back({"R" + std::to_string(i), "(R" + std::to_string(i) + ")", 3, {}, "Q"});
        v.push_back({"Example1", "(Example 1)", 3, {ParamSpec{"n", false, {}, true}}, "Q"});
        v.push_back({"Section3Final", "(sec.3 final form)", 3, {ParamSpec{"a", false, {}, false}}, "Q"});
        v.push_back({"SectionP", "(sec.3 operator P)", 3, {ParamSpec{"q", false, {}, false}}, "Q"});
        return v;
    }();
    return entries;
}

inline const CatalogEntry& catalog_entry(std::string_view id) {
    for (const auto& e : catalog_entries())
        if (e.id == id) return e;
    throw error("unknown catalog id: " + std::string(id));
}

namespace detail {

class OperatorBuilder {
public:
    OperatorBuilder(int n, const ScalarDomain& dom)
        : dom_(dom), op_(n, Scalar(dom)) {}

    Scalar c(long long v) const { return Scalar::from_int(v, dom_); }
    Scalar c(const Rational& v) const { return Scalar::from_rational(v, dom_); }

    // matrix unit with 1-based indices, matching the classification labels
    Matrix<Scalar> u(int i, int j) const {
        return Matrix<Scalar>::unit(op_.n(), i - 1, j - 1, Scalar(dom_));
    }

    Matrix<Scalar> E() const { return Matrix<Scalar>::identity(op_.n(), Scalar(dom_)); }

    void set(int i, int j, const Matrix<Scalar>& m) { op_.image(i - 1, j - 1) = m; }

    LinearOperator<Scalar> take() { return std::move(op_); }

private:
    ScalarDomain dom_;
    LinearOperator<Scalar> op_;
};

inline Scalar require_param(const ParamMap& params, const std::string& name,
                            const ScalarDomain& dom) {
    auto it = params.find(name);
    if (it == params.end()) throw error("missing parameter '" + name + "'");
    if (it->second.domain() != dom) throw error("parameter '" + name + "' is in the wrong domain");
    return it->second;
}

inline Scalar require_two_valued(const ParamMap& params, const std::string& name,
                                 const ScalarDomain& dom) {
    Scalar v = require_param(params, name, dom);
    if (v != Scalar::from_int(0, dom) && v != Scalar::from_int(-1, dom))
        throw error("parameter '" + name + "' must be 0 or -1");
    return v;
}

}  // namespace detail

// Exact operator for a catalog id; unlisted unit images are zero.
inline LinearOperator<Scalar> build_operator(std::string_view id, const ParamMap& params,
                                             const ScalarDomain& dom) {
    using detail::OperatorBuilder;
    using detail::require_param;
    using detail::require_two_valued;

    const CatalogEntry& entry = catalog_entry(id);
    for (const auto& spec : entry.params) {
        if (spec.dimension) continue;
        Scalar v = spec.two_valued ? require_two_valued(params, spec.name, dom)
                                   : require_param(params, spec.name, dom);
        for (const Rational& bad : spec.excluded)
            if (v == Scalar::from_rational(bad, dom))
                throw error("parameter '" + spec.name + "' = " + rational_to_string(bad) +
                            " is excluded for " + entry.id);
    }

    if (id == "Example1") {
        Scalar nv = require_param(params, "n", dom);
        auto nr = nv.as_rational();
        if (!nr || !is_integer(*nr)) throw error("Example1 needs an integer dimension n");
        long long n = nr->get_num().get_si();
        if (n < 2 || n > 8) throw error("Example1 dimension must be in 2..8");
        OperatorBuilder b(static_cast<int>(n), dom);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (j == n) continue;
                Matrix<Scalar> m = Matrix<Scalar>::zero(static_cast<int>(n), Scalar(dom));
                if (i <= j) {
                    for (int t = 0; i + t <= n - 1 - (j - i); ++t)
                        m = m + b.u(i + t, j + 1 + t);
                } else {
                    for (int t = 0; t <= j - 1; ++t) m = m - b.u(i - 1 - t, j - t);
                }
                b.set(i, j, m);
            }
        return b.take();
    }

    OperatorBuilder b(entry.n, dom);
    auto one = b.c(1);

    if (id == "L1") {
        b.set(2, 1, b.u(1, 2));
    } else if (id == "L2") {
        b.set(2, 1, b.u(1, 1));
    } else if (id == "L3") {
        b.set(2, 1, b.u(1, 1));
        b.set(2, 2, b.u(1, 2));
    } else if (id == "L4") {
        b.set(2, 1, -b.u(1, 1));
        b.set(1, 1, b.u(1, 2));
    } else if (id == "L34") {
        Scalar k = require_two_valued(params, "kappa", dom);
        b.set(2, 2, b.u(1, 2));
        b.set(2, 1, b.E().scaled(k) + b.u(1, 1));
    } else if (id == "Q1") {
        b.set(1, 2, b.u(1, 3));
        b.set(1, 1, b.u(1, 2) + b.u(2, 3));
        b.set(2, 2, b.u(2, 3));
        b.set(2, 1, -b.u(1, 1));
        b.set(3, 2, -(b.u(1, 1) + b.u(2, 2)));
        b.set(3, 1, -b.u(2, 1));
    } else if (id == "Q2") {
        b.set(3, 3, b.u(1, 2));
    } else if (id == "Q3") {
        // alpha ranges over the whole field here; the intermediate stage that
        // produces this family excludes 0 and +-1, but the final statement
        // absorbs those values into the same series.
        Scalar k = require_two_valued(params, "kappa", dom);
        Scalar alpha = require_param(params, "alpha", dom);
        b.set(3, 2, b.u(1, 2));
        b.set(3, 3, b.u(1, 2));
        b.set(2, 3, b.u(1, 2).scaled(alpha));
        b.set(3, 1, b.E().scaled(k) + b.u(1, 1));
    } else if (id == "Q4") {
        Scalar k = require_two_valued(params, "kappa", dom);
        b.set(2, 2, b.u(1, 2));
        b.set(3, 3, b.u(1, 2));
        b.set(2, 3, b.u(1, 2));
        b.set(2, 1, b.E().scaled(k) + b.u(1, 1));
    } else if (id == "Q5") {
        Scalar k = require_two_valued(params, "kappa", dom);
        Scalar beta = require_param(params, "beta", dom);
        b.set(2, 2, b.u(1, 2));
        b.set(3, 3, b.u(1, 2).scaled(beta));
        b.set(2, 1, b.E().scaled(k) + b.u(1, 1));
    } else if (id == "Q6") {
        Scalar k = require_two_valued(params, "kappa", dom);
        Scalar m = require_two_valued(params, "mu", dom);
        b.set(2, 2, b.u(1, 2));
        b.set(3, 1, b.u(1, 3).scaled(-m));
        b.set(2, 1, b.E().scaled(k + one) - b.u(2, 2));
    } else if (id == "Q7") {
        b.set(1, 1, b.u(1, 2));
        b.set(3, 1, b.u(3, 3));
        b.set(2, 1, b.u(2, 2));
    } else if (id == "Q8") {
        Scalar k = require_two_valued(params, "kappa", dom);
        b.set(2, 2, b.u(1, 2));
        b.set(3, 1, b.u(3, 3));
        b.set(2, 1, b.E().scaled(k + one) - b.u(2, 2));
    } else if (id == "Q9") {
        Scalar k = require_two_valued(params, "kappa", dom);
        b.set(2, 2, b.u(1, 2));
        b.set(2, 3, b.u(1, 3));
        b.set(2, 1, b.E().scaled(k + one) - b.u(2, 2));
    } else if (id == "Q10") {
        b.set(2, 2, b.u(1, 2));
        b.set(3, 1, b.u(1, 1) + b.u(2, 2));
        b.set(2, 1, -b.u(2, 2));
    } else if (id == "Q11") {
        b.set(1, 1, b.u(1, 2));
        b.set(3, 1, b.u(1, 1) + b.u(2, 2) + b.u(3, 2));
        b.set(2, 1, -b.u(1, 1));
    } else if (id == "Q12") {
        b.set(1, 1, b.u(1, 2));
        b.set(3, 1, b.u(3, 2) + b.u(3, 3));
        b.set(2, 1, -b.u(1, 1));
    } else if (id == "Q13") {
        Scalar k = require_two_valued(params, "kappa", dom);
        b.set(2, 2, b.u(1, 2));
        b.set(2, 3, b.u(1, 3));
        b.set(2, 1, b.E().scaled(k) + b.u(1, 1));
    } else if (id == "Q14") {
        b.set(3, 2, b.u(1, 3));
        b.set(2, 3, b.u(1, 3));
        b.set(2, 2, b.u(1, 2));
        b.set(3, 3, b.u(1, 2));
        b.set(3, 1, -(b.u(2, 3) + b.u(3, 2)));
        b.set(2, 1, -(b.u(2, 2) + b.u(3, 3)));
    } else if (id == "Q15") {
        Scalar k = require_two_valued(params, "kappa", dom);
        b.set(3, 2, b.u(1, 3).scaled(b.c(2)));
        b.set(2, 2, b.u(1, 3));
        b.set(1, 1, b.u(1, 2) + b.u(1, 3));
        b.set(2, 3, -b.u(1, 3));
        b.set(3, 1, b.E().scaled(k - one) - b.u(2, 3).scaled(b.c(2)) + b.u(3, 2) +
                        b.u(3, 3).scaled(b.c(3)));
        b.set(2, 1, -b.u(1, 1));
        // stated R(1) = e12 pins the omitted image of e33
        b.set(3, 3, b.u(1, 2) - (b.u(1, 2) + b.u(1, 3)) - b.u(1, 3));
    } else if (id == "Q16") {
        Scalar half = b.c(rat(1, 2));
        b.set(2, 1, b.u(1, 1).scaled(half));
        b.set(2, 2, b.u(1, 2).scaled(half));
        b.set(2, 3, b.u(1, 3).scaled(half));
        b.set(3, 2, b.u(1, 3).scaled(b.c(2)));
        b.set(3, 3, b.u(1, 2).scaled(half));
        b.set(3, 1, b.E() - b.u(2, 3).scaled(b.c(2)) - b.u(3, 2).scaled(half));
    } else if (id == "Q17") {
        Scalar half = b.c(rat(1, 2));
        b.set(3, 2, b.u(1, 3).scaled(b.c(2)) - b.u(1, 2));
        b.set(1, 1, b.u(1, 2).scaled(half) + b.u(1, 3));
        b.set(2, 1, b.u(2, 2).scaled(half) + b.u(2, 3));
        b.set(3, 3, b.u(1, 2).scaled(half) - b.u(1, 3));
        b.set(3, 1, -b.u(2, 3).scaled(b.c(2)) + b.u(2, 2) + b.u(3, 3).scaled(b.c(2)));
    } else if (id == "Q18") {
        b.set(2, 1, b.u(1, 1));
        b.set(2, 2, b.u(1, 2));
        b.set(2, 3, b.u(1, 3));
        b.set(3, 1, b.u(1, 1) + b.u(2, 2) - b.u(3, 2));
    } else if (id == "Q19") {
        Scalar k = require_two_valued(params, "kappa", dom);
        b.set(2, 2, b.u(1, 2));
        b.set(2, 3, b.u(1, 3));
        b.set(3, 1, b.u(3, 3));
        b.set(2, 1, b.E().scaled(k + one) - b.u(2, 2));
    } else if (id == "Q20") {
        b.set(1, 1, b.u(1, 2));
        b.set(2, 1, -b.u(1, 1));
        b.set(2, 3, -b.u(1, 3));
        b.set(3, 1, b.u(1, 1) + b.u(2, 2) + b.u(3, 2));
    } else if (id == "Q21") {
        Scalar k = require_two_valued(params, "kappa", dom);
        b.set(1, 1, b.u(1, 2));
        b.set(2, 3, -b.u(1, 3));
        b.set(3, 1, b.u(3, 2) + b.u(3, 3));
        b.set(2, 1, b.E().scaled(k + one) - b.u(1, 1));
    } else if (id == "Q22") {
        Scalar k = require_two_valued(params, "kappa", dom);
        Scalar m = require_two_valued(params, "mu", dom);
        b.set(1, 1, b.u(1, 2));
        b.set(2, 3, -b.u(1, 3));
        b.set(3, 1, b.u(3, 2) - b.u(1, 3).scaled(m));
        b.set(2, 1, b.E().scaled(k + one) - b.u(1, 1));
    } else if (id == "Q23") {
        Scalar k = require_two_valued(params, "kappa", dom);
        Scalar g = require_param(params, "gamma", dom);
        b.set(2, 2, b.u(1, 2));
        b.set(2, 3, b.u(1, 3));
        b.set(3, 3, b.u(1, 2).scaled(g));
        b.set(3, 1, -b.u(3, 2));
        b.set(2, 1, b.E().scaled(k) + b.u(1, 1));
    } else if (id == "Q24") {
        Scalar k = require_two_valued(params, "kappa", dom);
        b.set(2, 2, b.u(1, 2));
        b.set(3, 3, b.u(1, 2));
        b.set(2, 3, b.u(1, 3));
        b.set(3, 1, -b.u(3, 2) + b.u(1, 2));
        b.set(2, 1, b.E().scaled(k) + b.u(1, 1));
    } else if (id == "R1") {
        b.set(3, 1, b.u(2, 3));
        b.set(3, 2, -b.u(1, 3));
    } else if (id == "R2") {
        b.set(1, 1, -b.u(2, 1) - b.u(3, 2));
        b.set(1, 2, b.u(1, 1) + b.u(3, 1));
        b.set(1, 3, b.u(1, 2) - b.u(2, 1));
        b.set(2, 1, -b.u(3, 1));
        b.set(2, 2, -b.u(3, 2));
        b.set(2, 3, b.u(1, 1) + b.u(2, 2));
    } else if (id == "R3") {
        b.set(2, 3, b.u(2, 2));
        b.set(2, 2, -b.u(3, 2));
    } else if (id == "R4") {
        b.set(1, 3, b.u(1, 2) - b.u(2, 1));
        b.set(1, 2, b.u(3, 1));
        b.set(2, 1, -b.u(3, 1));
        b.set(2, 3, b.u(1, 1) + b.u(2, 2));
        b.set(1, 1, -b.u(3, 2));
        b.set(2, 2, -b.u(3, 2));
    } else if (id == "R5") {
        b.set(1, 3, b.u(1, 2));
        b.set(2, 1, -b.u(3, 1));
        b.set(2, 3, b.u(1, 1) + b.u(2, 2));
        b.set(1, 1, -b.u(3, 2));
        b.set(2, 2, -b.u(3, 2));
    } else if (id == "R6") {
        b.set(3, 3, b.u(3, 2));
        b.set(2, 3, -b.u(3, 3));
        b.set(1, 3, b.u(1, 1) + b.u(1, 2));
        b.set(1, 1, -b.u(3, 1));
        b.set(2, 1, -b.u(3, 1));
    } else if (id == "R7") {
        b.set(2, 3, -(b.u(1, 1) + b.u(3, 3)));
        b.set(1, 1, b.u(3, 2));
        b.set(3, 3, b.u(3, 2));
    } else if (id == "R8") {
        b.set(1, 3, b.u(1, 2));
        b.set(2, 1, -b.u(3, 1));
        b.set(3, 3, b.u(3, 2));
        b.set(2, 3, -b.u(3, 3));
    } else if (id == "Section3Final") {
        Scalar a = require_param(params, "a", dom);
        Scalar half = b.c(rat(1, 2));
        b.set(1, 2, b.u(1, 3).scaled(half));
        b.set(1, 1, b.u(1, 2) + b.u(2, 3).scaled(half));
        b.set(2, 2, b.u(2, 3).scaled(half));
        b.set(2, 1, -b.u(1, 1) + b.u(1, 3).scaled(a));
        b.set(3, 2, -(b.u(1, 1) + b.u(2, 2)).scaled(half));
        b.set(3, 1, -b.u(1, 2).scaled(a) - b.u(2, 1).scaled(half));
    } else if (id == "SectionP") {
        Scalar q = require_param(params, "q", dom);
        b.set(1, 2, b.u(1, 3));
        b.set(1, 1, b.u(1, 2) + b.u(2, 3));
        b.set(2, 2, b.u(2, 3));
        b.set(2, 1, -b.u(1, 1) + b.u(1, 3).scaled(q));
        b.set(3, 2, -(b.u(1, 1) + b.u(2, 2)));
        b.set(3, 1, -b.u(2, 1) - b.u(1, 2).scaled(q));
    } else {
        throw error("unknown catalog id: " + std::string(id));
    }
    return b.take();
}

// ---- named (anti)automorphisms ----

namespace detail {

inline Matrix<Scalar> permutation_conjugator(int n, int a, int bcol, const ScalarDomain& dom) {
    // transposition (a b), 1-based
    Matrix<Scalar> p = Matrix<Scalar>::identity(n, Scalar(dom));
    Scalar zero(dom), one = Scalar::from_int(1, dom);
    p.at(a - 1, a - 1) = zero;
    p.at(bcol - 1, bcol - 1) = zero;
    p.at(a - 1, bcol - 1) = one;
    p.at(bcol - 1, a - 1) = one;
    return p;
}

// self-check helper: the descriptor's action on each unit must match the
// expected image table
inline void validate_action(const AutoDescriptor& psi,
                            const std::vector<std::pair<std::pair<int, int>, Matrix<Scalar>>>& table) {
    for (const auto& [unit, expected] : table) {
        Matrix<Scalar> got = psi.apply(
            Matrix<Scalar>::unit(psi.n(), unit.first - 1, unit.second - 1, expected.exemplar()));
        if (got != expected)
            throw error("automorphism action table mismatch at e" + std::to_string(unit.first) +
                        std::to_string(unit.second));
    }
}

}  // namespace detail

// ids: psi (r, s), phi (alpha, beta, lambda, delta), theta12/theta13/theta23,
// transpose, and the composites theta12*T / theta13*T / theta23*T.
inline AutoDescriptor build_automorphism(std::string_view id, const ParamMap& params,
                                         const ScalarDomain& dom) {
    Scalar zero(dom);
    Scalar one = Scalar::from_int(1, dom);
    if (id == "psi") {
        Scalar r = detail::require_param(params, "r", dom);
        Scalar s = detail::require_param(params, "s", dom);
        if (r.is_zero() || s.is_zero()) throw error("psi needs nonzero r, s");
        Matrix<Scalar> a = Matrix<Scalar>::zero(3, zero);
        a.at(0, 0) = one;
        a.at(1, 1) = r;
        a.at(2, 2) = r * s;
        AutoDescriptor psi(a, false, "psi");
        // diagonal conjugation scales e_ij by (column weight)/(row weight)
        auto u = [&](int i, int j) { return Matrix<Scalar>::unit(3, i - 1, j - 1, zero); };
        detail::validate_action(psi, {
            {{1, 1}, u(1, 1)}, {{2, 2}, u(2, 2)}, {{3, 3}, u(3, 3)},
            {{1, 2}, u(1, 2).scaled(r)},
            {{2, 3}, u(2, 3).scaled(s)},
            {{1, 3}, u(1, 3).scaled(r * s)},
            {{2, 1}, u(2, 1).scaled(r.inverse())},
            {{3, 2}, u(3, 2).scaled(s.inverse())},
            {{3, 1}, u(3, 1).scaled((r * s).inverse())},
        });
        return psi;
    }
    if (id == "phi") {
        Scalar al = detail::require_param(params, "alpha", dom);
        Scalar be = detail::require_param(params, "beta", dom);
        Scalar la = detail::require_param(params, "lambda", dom);
        Scalar de = detail::require_param(params, "delta", dom);
        if (la.is_zero()) throw error("phi needs nonzero lambda");
        Matrix<Scalar> a = Matrix<Scalar>::zero(3, zero);
        a.at(0, 0) = one;   a.at(0, 1) = al;        a.at(0, 2) = be;
        a.at(1, 1) = one;
        a.at(2, 1) = -(de * la);                    a.at(2, 2) = la;
        AutoDescriptor phi(a, false, "phi");
        // fixes e12 by construction; check the generating entries of its table
        auto u = [&](int i, int j) { return Matrix<Scalar>::unit(3, i - 1, j - 1, zero); };
        detail::validate_action(phi, {
            {{1, 2}, u(1, 2)},
            {{1, 3}, (u(1, 2).scaled(-de) + u(1, 3)).scaled(la)},
            {{3, 2}, (u(3, 2) - u(1, 2).scaled(be)).scaled(la.inverse())},
        });
        return phi;
    }
    auto theta = [&](int x, int y, bool with_transpose) {
        std::string tag = "theta" + std::to_string(x) + std::to_string(y) +
                          (with_transpose ? "*T" : "");
        return AutoDescriptor(detail::permutation_conjugator(3, x, y, dom), with_transpose, tag);
    };
    if (id == "theta12") return theta(1, 2, false);
    if (id == "theta13") return theta(1, 3, false);
    if (id == "theta23") return theta(2, 3, false);
    if (id == "theta12*T") return theta(1, 2, true);
    if (id == "theta13*T") return theta(1, 3, true);
    if (id == "theta23*T") return theta(2, 3, true);
    if (id == "transpose" || id == "T") return AutoDescriptor::transpose(3, dom);
    if (id == "id") return AutoDescriptor::identity(3, dom);
    throw error("unknown automorphism id: " + std::string(id));
}

inline AutoDescriptor build_automorphism(std::string_view id,
                                         const std::map<std::string, Rational>& params,
                                         const ScalarDomain& dom) {
    return build_automorphism(id, params_from_rationals(params, dom), dom);
}

inline LinearOperator<Scalar> build_operator(std::string_view id,
                                             const std::map<std::string, Rational>& params,
                                             const ScalarDomain& dom) {
    return build_operator(id, params_from_rationals(params, dom), dom);
}

inline LinearOperator<Scalar> build_operator_q(std::string_view id,
                                               const std::map<std::string, Rational>& params = {}) {
    return build_operator(id, params, ScalarDomain::rationals());
}

}  // namespace rbmat
