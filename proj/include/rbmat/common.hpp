#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rbmat {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Integer  = mpz_class;
using Rational = mpq_class;

inline Rational rat(long long num, long long den = 1) {
    if (den == 0) throw error("rational with zero denominator");
    Rational q{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Strict grammar: [+-]?digits or [+-]?digits/digits (the sign sits on the numerator).
inline Rational parse_rational(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw error("empty rational literal");

    auto is_digits = [](std::string_view v) {
        if (v.empty()) return false;
        for (char c : v)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view v = s;
    bool neg = false;
    if (v.front() == '+' || v.front() == '-') {
        neg = v.front() == '-';
        v.remove_prefix(1);
    }
    std::string_view num = v, den = "1";
    if (auto slash = v.find('/'); slash != std::string_view::npos) {
        num = v.substr(0, slash);
        den = v.substr(slash + 1);
    }
    if (!is_digits(num) || !is_digits(den))
        throw error("malformed rational literal: '" + std::string(text) + "'");
    Integer n{std::string(num)};
    Integer d{std::string(den)};
    if (d == 0) throw error("rational with zero denominator: '" + std::string(text) + "'");
    Rational q{n, d};
    q.canonicalize();
    if (neg) q = -q;
    return q;
}

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

inline std::optional<Integer> integer_sqrt_exact(const Integer& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline std::optional<Rational> rational_sqrt_exact(const Rational& q) {
    if (q < 0) return std::nullopt;
    auto n = integer_sqrt_exact(q.get_num());
    if (!n) return std::nullopt;
    auto d = integer_sqrt_exact(q.get_den());
    if (!d) return std::nullopt;
    return Rational(*n, *d);
}

inline bool is_squarefree(long long d) {
    unsigned long long m = d < 0 ? static_cast<unsigned long long>(-d)
                                 : static_cast<unsigned long long>(d);
    if (m == 0) return false;
    for (unsigned long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return false;
        }
    }
    return true;
}

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

// splitmix64: tiny deterministic generator for randomized checks; seeds are
// fixed in the tests so every run exercises the same inputs.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi], both ends included
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace rbmat
