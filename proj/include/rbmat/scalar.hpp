#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rbmat/common.hpp"

namespace rbmat {

enum class DomainKind { Rationals, Quadratic, PrimeField };

// A scalar domain: Q, a quadratic extension Q(sqrt(d)) with d squarefree and
// not a square (d = -1 gives Q(i)), or a prime field F_p with p not 2 or 3.
class ScalarDomain {
public:
    static ScalarDomain rationals() { return ScalarDomain(DomainKind::Rationals, 0, 0); }

    static ScalarDomain quadratic(long long d) {
        if (d == 0 || d == 1) throw error("quadratic extension needs d not in {0, 1}");
        if (!is_squarefree(d)) throw error("quadratic extension needs squarefree d");
        return ScalarDomain(DomainKind::Quadratic, d, 0);
    }

    static ScalarDomain prime_field(std::uint64_t p) {
        if (p == 2 || p == 3) throw error("prime field characteristic 2 or 3 is not supported");
        if (p >= (1ULL << 31)) throw error("prime field modulus too large");
        if (!is_prime(p)) throw error("prime field modulus must be prime");
        return ScalarDomain(DomainKind::PrimeField, 0, p);
    }

    DomainKind kind() const { return kind_; }
    long long d() const { return d_; }
    std::uint64_t p() const { return p_; }
    bool is_char_zero() const { return kind_ != DomainKind::PrimeField; }

    bool operator==(const ScalarDomain& o) const {
        return kind_ == o.kind_ && d_ == o.d_ && p_ == o.p_;
    }
    bool operator!=(const ScalarDomain& o) const { return !(*this == o); }

    std::string to_string() const {
        switch (kind_) {
            case DomainKind::Rationals: return "Q";
            case DomainKind::Quadratic: return d_ == -1 ? "Qi" : "Qsqrt:" + std::to_string(d_);
            case DomainKind::PrimeField: return "Fp:" + std::to_string(p_);
        }
        return "?";
    }

    // Accepts the CLI grammar Q | Qi | Qsqrt:d | Fp:p.
    static ScalarDomain parse(std::string_view text) {
        if (text == "Q") return rationals();
        if (text == "Qi") return quadratic(-1);
        if (text.rfind("Qsqrt:", 0) == 0)
            return quadratic(std::stoll(std::string(text.substr(6))));
        if (text.rfind("Fp:", 0) == 0)
            return prime_field(std::stoull(std::string(text.substr(3))));
        throw error("unknown scalar domain: '" + std::string(text) + "'");
    }

private:
    ScalarDomain(DomainKind k, long long d, std::uint64_t p) : kind_(k), d_(d), p_(p) {}

    DomainKind kind_;
    long long d_;
    std::uint64_t p_;
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw error("division by zero in prime field");
    return powmod(a % p, p - 2, p);
}

inline std::uint64_t reduce_integer_mod(const Integer& n, std::uint64_t p) {
    Integer r = n % Integer(static_cast<unsigned long>(p));
    if (r < 0) r += Integer(static_cast<unsigned long>(p));
    return r.get_ui();
}

// Tonelli-Shanks; p odd prime, a a quadratic residue.
inline std::optional<std::uint64_t> sqrtmod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    std::uint64_t q = p - 1, s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    std::uint64_t z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t m = s;
    std::uint64_t c = powmod(z, q, p);
    std::uint64_t t = powmod(a, q, p);
    std::uint64_t r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) { tt = mulmod(tt, tt, p); ++i; }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

}  // namespace detail

// An immutable exact field element tagged with its domain.  Representation:
// rationals use `a`; Q(sqrt(d)) uses the pair a + b*sqrt(d); F_p keeps the
// residue in `r`.
class Scalar {
public:
    explicit Scalar(const ScalarDomain& dom) : dom_(dom) {}  // zero

    static Scalar from_rational(const Rational& q, const ScalarDomain& dom) {
        Scalar s(dom);
        switch (dom.kind()) {
            case DomainKind::Rationals:
            case DomainKind::Quadratic: s.a_ = q; break;
            case DomainKind::PrimeField: {
                std::uint64_t p = dom.p();
                if (q.get_den() % Integer(static_cast<unsigned long>(p)) == 0)
                    throw error("denominator not invertible modulo p");
                std::uint64_t num = detail::reduce_integer_mod(q.get_num(), p);
                std::uint64_t den = detail::reduce_integer_mod(q.get_den(), p);
                s.r_ = detail::mulmod(num, detail::invmod(den, p), p);
                break;
            }
        }
        return s;
    }

    static Scalar from_int(long long v, const ScalarDomain& dom) {
        return from_rational(rat(v), dom);
    }

    static Scalar quadratic(const Rational& a, const Rational& b, const ScalarDomain& dom) {
        if (dom.kind() != DomainKind::Quadratic)
            throw error("quadratic scalar requires a quadratic domain");
        Scalar s(dom);
        s.a_ = a;
        s.b_ = b;
        return s;
    }

    const ScalarDomain& domain() const { return dom_; }
    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    std::uint64_t residue() const { return r_; }

    // The value as a rational if it is one (surd part zero, char-zero domain).
    std::optional<Rational> as_rational() const {
        if (dom_.kind() == DomainKind::Rationals) return a_;
        if (dom_.kind() == DomainKind::Quadratic && b_ == 0) return a_;
        return std::nullopt;
    }

    bool is_zero() const {
        switch (dom_.kind()) {
            case DomainKind::Rationals: return a_ == 0;
            case DomainKind::Quadratic: return a_ == 0 && b_ == 0;
            case DomainKind::PrimeField: return r_ == 0;
        }
        return false;
    }

    bool is_one() const {
        switch (dom_.kind()) {
            case DomainKind::Rationals: return a_ == 1;
            case DomainKind::Quadratic: return a_ == 1 && b_ == 0;
            case DomainKind::PrimeField: return r_ == 1;
        }
        return false;
    }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        x.require_same_domain(y);
        Scalar s(x.dom_);
        switch (x.dom_.kind()) {
            case DomainKind::Rationals: s.a_ = x.a_ + y.a_; break;
            case DomainKind::Quadratic: s.a_ = x.a_ + y.a_; s.b_ = x.b_ + y.b_; break;
            case DomainKind::PrimeField: s.r_ = (x.r_ + y.r_) % x.dom_.p(); break;
        }
        return s;
    }

    friend Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

    Scalar operator-() const {
        Scalar s(dom_);
        switch (dom_.kind()) {
            case DomainKind::Rationals: s.a_ = -a_; break;
            case DomainKind::Quadratic: s.a_ = -a_; s.b_ = -b_; break;
            case DomainKind::PrimeField: s.r_ = r_ == 0 ? 0 : dom_.p() - r_; break;
        }
        return s;
    }

    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        x.require_same_domain(y);
        Scalar s(x.dom_);
        switch (x.dom_.kind()) {
            case DomainKind::Rationals: s.a_ = x.a_ * y.a_; break;
            case DomainKind::Quadratic: {
                Rational d = rat(x.dom_.d());
                s.a_ = x.a_ * y.a_ + d * x.b_ * y.b_;
                s.b_ = x.a_ * y.b_ + x.b_ * y.a_;
                break;
            }
            case DomainKind::PrimeField: s.r_ = detail::mulmod(x.r_, y.r_, x.dom_.p()); break;
        }
        return s;
    }

    Scalar inverse() const {
        if (is_zero()) throw error("inverse of zero scalar");
        Scalar s(dom_);
        switch (dom_.kind()) {
            case DomainKind::Rationals: s.a_ = 1 / a_; break;
            case DomainKind::Quadratic: {
                // (a + b sqrt(d))^-1 = (a - b sqrt(d)) / (a^2 - d b^2); the norm is
                // nonzero because d is not a square.
                Rational norm = a_ * a_ - rat(dom_.d()) * b_ * b_;
                s.a_ = a_ / norm;
                s.b_ = -b_ / norm;
                break;
            }
            case DomainKind::PrimeField: s.r_ = detail::invmod(r_, dom_.p()); break;
        }
        return s;
    }

    friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        if (x.dom_ != y.dom_) return false;
        switch (x.dom_.kind()) {
            case DomainKind::Rationals: return x.a_ == y.a_;
            case DomainKind::Quadratic: return x.a_ == y.a_ && x.b_ == y.b_;
            case DomainKind::PrimeField: return x.r_ == y.r_;
        }
        return false;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    // Square root inside the domain, if one exists.  Of the two roots the one
    // with nonnegative rational part is returned (nonnegative surd part when
    // the rational part vanishes; the smaller residue in a prime field).
    std::optional<Scalar> sqrt() const {
        switch (dom_.kind()) {
            case DomainKind::Rationals: {
                auto r = rational_sqrt_exact(a_);
                if (!r) return std::nullopt;
                return from_rational(*r, dom_);
            }
            case DomainKind::Quadratic: {
                Rational d = rat(dom_.d());
                if (b_ == 0) {
                    if (auto x = rational_sqrt_exact(a_)) return from_rational(*x, dom_);
                    if (auto y = rational_sqrt_exact(a_ / d)) return quadratic(0, *y, dom_);
                    return std::nullopt;
                }
                // x + y sqrt(d) squares to a + b sqrt(d) iff x^2 + d y^2 = a and
                // 2xy = b; eliminating y leaves x^2 = (a +- sqrt(a^2 - d b^2))/2.
                auto norm_root = rational_sqrt_exact(a_ * a_ - d * b_ * b_);
                if (!norm_root) return std::nullopt;
                for (int sign = 0; sign < 2; ++sign) {
                    Rational signed_root = sign == 0 ? *norm_root : Rational(-*norm_root);
                    Rational cand = (a_ + signed_root) / 2;
                    auto x = rational_sqrt_exact(cand);
                    if (!x || *x == 0) continue;
                    Rational y = b_ / (2 * *x);
                    Scalar root = quadratic(*x, y, dom_);
                    return root;
                }
                return std::nullopt;
            }
            case DomainKind::PrimeField: {
                auto r = detail::sqrtmod(r_, dom_.p());
                if (!r) return std::nullopt;
                std::uint64_t other = (*r == 0) ? 0 : dom_.p() - *r;
                Scalar s(dom_);
                s.r_ = std::min(*r, other == 0 ? *r : other);
                return s;
            }
        }
        return std::nullopt;
    }

    std::string to_string() const {
        switch (dom_.kind()) {
            case DomainKind::Rationals: return rational_to_string(a_);
            case DomainKind::Quadratic:
                if (b_ == 0) return rational_to_string(a_);
                if (a_ == 0 && dom_.d() == -1) return rational_to_string(b_) + "*i";
                return rational_to_string(a_) + " + " + rational_to_string(b_) + "*sqrt(" +
                       std::to_string(dom_.d()) + ")";
            case DomainKind::PrimeField: return std::to_string(r_);
        }
        return "?";
    }

    // Grammar: int | int/int | rat "+" rat "*sqrt(" int ")" | rat "*i",
    // whitespace-insensitive.  A bare rational is accepted in every domain.
    static Scalar parse(std::string_view text, const ScalarDomain& dom) {
        std::string s;
        s.reserve(text.size());
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
        if (s.empty()) throw error("empty scalar literal");

        if (auto sq = s.find("*sqrt("); sq != std::string::npos) {
            if (dom.kind() != DomainKind::Quadratic)
                throw error("sqrt literal outside a quadratic domain");
            if (s.back() != ')') throw error("malformed sqrt literal: '" + std::string(text) + "'");
            long long d = std::stoll(s.substr(sq + 6, s.size() - sq - 7));
            if (d != dom.d()) throw error("sqrt radicand does not match domain");
            // split "<rat>+<rat>" or a bare "<rat>" before "*sqrt("
            std::string head = s.substr(0, sq);
            Rational a = 0, b;
            std::size_t split = head.npos;
            for (std::size_t i = 1; i < head.size(); ++i) {
                if (head[i] == '+' || head[i] == '-') {
                    char prev = head[i - 1];
                    if (std::isdigit(static_cast<unsigned char>(prev))) split = i;
                }
            }
            if (split == head.npos) {
                b = parse_rational(head);
            } else {
                a = parse_rational(head.substr(0, split));
                std::string tail = head.substr(split);
                if (tail[0] == '+') tail = tail.substr(1);
                b = parse_rational(tail);
            }
            return quadratic(a, b, dom);
        }
        if (s.size() >= 2 && s.compare(s.size() - 2, 2, "*i") == 0) {
            if (dom.kind() != DomainKind::Quadratic || dom.d() != -1)
                throw error("'*i' literal requires the domain Qi");
            return quadratic(0, parse_rational(s.substr(0, s.size() - 2)), dom);
        }
        return from_rational(parse_rational(s), dom);
    }

private:
    void require_same_domain(const Scalar& o) const {
        if (dom_ != o.dom_) throw error("scalar domain mismatch");
    }

    ScalarDomain dom_;
    Rational a_;
    Rational b_;
    std::uint64_t r_ = 0;
};

}  // namespace rbmat
