#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "rbmat/common.hpp"
#include "rbmat/scalar.hpp"

namespace rbmat {

// Fixed ordered variable list shared by every polynomial of one ring.
class PolyRing {
public:
    explicit PolyRing(std::vector<std::string> names)
        : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
        for (std::size_t i = 0; i < names_->size(); ++i) {
            if ((*names_)[i].empty()) throw error("empty variable name");
            for (std::size_t j = i + 1; j < names_->size(); ++j)
                if ((*names_)[i] == (*names_)[j])
                    throw error("duplicate variable name: " + (*names_)[i]);
        }
    }

    std::size_t size() const { return names_->size(); }
    const std::string& name(std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const { return *names_; }

    std::optional<std::size_t> index_of(std::string_view var) const {
        for (std::size_t i = 0; i < names_->size(); ++i)
            if ((*names_)[i] == var) return i;
        return std::nullopt;
    }

    bool operator==(const PolyRing& o) const {
        return names_ == o.names_ || *names_ == *o.names_;
    }
    bool operator!=(const PolyRing& o) const { return !(*this == o); }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

namespace detail {

// graded lexicographic: total degree first, then lex on the exponent vector
struct GradedLex {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

}  // namespace detail

// Sparse multivariate polynomial over Q; no zero coefficients are stored, so
// the zero polynomial has an empty term map.
class MPoly {
public:
    using TermMap = std::map<std::vector<int>, Rational, detail::GradedLex>;

    explicit MPoly(const PolyRing& ring) : ring_(ring) {}

    static MPoly zero(const PolyRing& ring) { return MPoly(ring); }

    static MPoly constant(const PolyRing& ring, const Rational& c) {
        MPoly p(ring);
        if (c != 0) p.terms_[std::vector<int>(ring.size(), 0)] = c;
        return p;
    }

    static MPoly variable(const PolyRing& ring, std::string_view name) {
        auto idx = ring.index_of(name);
        if (!idx) throw error("unknown variable: " + std::string(name));
        MPoly p(ring);
        std::vector<int> e(ring.size(), 0);
        e[*idx] = 1;
        p.terms_[std::move(e)] = 1;
        return p;
    }

    const PolyRing& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_)
            d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        return d;
    }

    bool depends_on(std::string_view var) const {
        auto idx = ring_.index_of(var);
        if (!idx) return false;
        for (const auto& [e, c] : terms_)
            if (e[*idx] != 0) return true;
        return false;
    }

    friend MPoly operator+(const MPoly& p, const MPoly& q) {
        p.require_same_ring(q);
        MPoly r = p;
        for (const auto& [e, c] : q.terms_) r.add_term(e, c);
        return r;
    }

    friend MPoly operator-(const MPoly& p, const MPoly& q) {
        p.require_same_ring(q);
        MPoly r = p;
        for (const auto& [e, c] : q.terms_) r.add_term(e, -c);
        return r;
    }

    MPoly operator-() const {
        MPoly r(ring_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend MPoly operator*(const MPoly& p, const MPoly& q) {
        p.require_same_ring(q);
        MPoly r(p.ring_);
        for (const auto& [ea, ca] : p.terms_) {
            for (const auto& [eb, cb] : q.terms_) {
                std::vector<int> e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    MPoly scaled(const Rational& c) const {
        MPoly r(ring_);
        if (c == 0) return r;
        for (const auto& [e, coef] : terms_) r.terms_[e] = coef * c;
        return r;
    }

    friend bool operator==(const MPoly& p, const MPoly& q) {
        return p.ring_ == q.ring_ && p.terms_ == q.terms_;
    }
    friend bool operator!=(const MPoly& p, const MPoly& q) { return !(p == q); }

    // Exact evaluation; the assignment must cover every variable that occurs.
    Scalar eval(const std::map<std::string, Scalar>& sigma, const ScalarDomain& dom) const {
        Scalar acc(dom);
        std::vector<std::optional<Scalar>> values(ring_.size());
        for (const auto& [e, c] : terms_) {
            Scalar term = Scalar::from_rational(c, dom);
            for (std::size_t i = 0; i < e.size(); ++i) {
                for (int k = 0; k < e[i]; ++k) {
                    if (!values[i]) {
                        auto it = sigma.find(ring_.name(i));
                        if (it == sigma.end())
                            throw error("missing assignment for variable " + ring_.name(i));
                        if (it->second.domain() != dom) throw error("scalar domain mismatch");
                        values[i] = it->second;
                    }
                    term = term * *values[i];
                }
            }
            acc = acc + term;
        }
        return acc;
    }

    // Substitute polynomials (same ring) for selected variables.
    MPoly substituted(const std::map<std::string, MPoly>& sub) const {
        std::vector<const MPoly*> repl(ring_.size(), nullptr);
        for (const auto& [name, poly] : sub) {
            auto idx = ring_.index_of(name);
            if (!idx) throw error("unknown variable: " + name);
            require_same_ring(poly);
            repl[*idx] = &poly;
        }
        MPoly acc(ring_);
        for (const auto& [e, c] : terms_) {
            MPoly term = MPoly::constant(ring_, c);
            std::vector<int> kept(e.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (repl[i] == nullptr) {
                    kept[i] = e[i];
                    continue;
                }
                for (int k = 0; k < e[i]; ++k) term = term * *repl[i];
            }
            MPoly mono(ring_);
            mono.terms_[kept] = 1;
            acc = acc + term * mono;
        }
        return acc;
    }

    const Rational& leading_coefficient() const {
        if (terms_.empty()) throw error("leading coefficient of zero polynomial");
        return terms_.rbegin()->second;
    }

    // Canonical print, highest graded-lex term first.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational abs = c < 0 ? Rational(-c) : c;
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            std::string vars;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!vars.empty()) vars += "*";
                vars += ring_.name(i);
                if (e[i] > 1) vars += "^" + std::to_string(e[i]);
            }
            if (vars.empty()) {
                out += rational_to_string(abs);
            } else if (abs == 1) {
                out += vars;
            } else {
                out += rational_to_string(abs) + "*" + vars;
            }
        }
        return out;
    }

private:
    void require_same_ring(const MPoly& o) const {
        if (ring_ != o.ring_) throw error("polynomial variable-list mismatch");
    }

    void add_term(const std::vector<int>& e, const Rational& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    PolyRing ring_;
    TermMap terms_;
};

inline MPoly poly_arith(const MPoly& p, const MPoly& q, std::string_view op) {
    if (op == "add") return p + q;
    if (op == "sub") return p - q;
    if (op == "mul") return p * q;
    throw error("unknown polynomial operation: " + std::string(op));
}

inline bool poly_is_zero(const MPoly& p) { return p.is_zero(); }

}  // namespace rbmat
