#include <doctest.h>

#include "rbmat/scalar.hpp"

using namespace rbmat;

namespace {

Scalar random_scalar(SplitMix64& rng, const ScalarDomain& dom) {
    switch (dom.kind()) {
        case DomainKind::Rationals:
            return Scalar::from_rational(rat(rng.range(-20, 20), rng.range(1, 12)), dom);
        case DomainKind::Quadratic:
            return Scalar::quadratic(rat(rng.range(-10, 10), rng.range(1, 6)),
                                     rat(rng.range(-10, 10), rng.range(1, 6)), dom);
        case DomainKind::PrimeField:
            return Scalar::from_int(rng.range(0, static_cast<long long>(dom.p()) - 1), dom);
    }
    throw error("unreachable");
}

}  // namespace

TEST_CASE("domain construction and validation") {
    CHECK_NOTHROW(ScalarDomain::rationals());
    CHECK_NOTHROW(ScalarDomain::quadratic(-1));
    CHECK_NOTHROW(ScalarDomain::quadratic(2));
    CHECK_THROWS_AS(ScalarDomain::quadratic(4), error);   // not squarefree
    CHECK_THROWS_AS(ScalarDomain::quadratic(12), error);  // 4 | 12
    CHECK_THROWS_AS(ScalarDomain::quadratic(1), error);
    CHECK_THROWS_AS(ScalarDomain::quadratic(0), error);
    CHECK_NOTHROW(ScalarDomain::prime_field(5));
    CHECK_NOTHROW(ScalarDomain::prime_field(101));
    CHECK_THROWS_AS(ScalarDomain::prime_field(2), error);
    CHECK_THROWS_AS(ScalarDomain::prime_field(3), error);
    CHECK_THROWS_AS(ScalarDomain::prime_field(15), error);

    CHECK(ScalarDomain::parse("Q") == ScalarDomain::rationals());
    CHECK(ScalarDomain::parse("Qi") == ScalarDomain::quadratic(-1));
    CHECK(ScalarDomain::parse("Qsqrt:2") == ScalarDomain::quadratic(2));
    CHECK(ScalarDomain::parse("Fp:7") == ScalarDomain::prime_field(7));
    CHECK_THROWS_AS(ScalarDomain::parse("R"), error);
}

TEST_CASE("parse examples") {
    auto Q = ScalarDomain::rationals();
    CHECK(Scalar::parse("1/2", Q) == Scalar::from_rational(rat(1, 2), Q));
    CHECK(Scalar::parse("0", Q).is_zero());
    CHECK(Scalar::parse(" -3 / 6 ", Q) == Scalar::from_rational(rat(-1, 2), Q));

    auto Qi = ScalarDomain::quadratic(-1);
    Scalar i = Scalar::parse("1*i", Qi);
    CHECK(i * i == Scalar::from_int(-1, Qi));
    CHECK(Scalar::parse("0", Qi).is_zero());

    auto Qs2 = ScalarDomain::quadratic(2);
    Scalar s = Scalar::parse("1/2 + -1/3*sqrt(2)", Qs2);
    CHECK(s.rational_part() == rat(1, 2));
    CHECK(s.surd_part() == rat(-1, 3));
    CHECK(Scalar::parse("3*sqrt(2)", Qs2) == Scalar::quadratic(0, rat(3), Qs2));

    auto F5 = ScalarDomain::prime_field(5);
    CHECK(Scalar::parse("7", F5) == Scalar::from_int(2, F5));
    CHECK(Scalar::parse("1/2", F5) == Scalar::from_int(3, F5));  // 2*3 = 6 = 1 mod 5

    CHECK_THROWS_AS(Scalar::parse("1/0", Q), error);
    CHECK_THROWS_AS(Scalar::parse("x+1", Q), error);
    CHECK_THROWS_AS(Scalar::parse("1*i", Q), error);
    CHECK_THROWS_AS(Scalar::parse("1+1*sqrt(3)", Qs2), error);  // radicand mismatch
    CHECK_THROWS_AS(Scalar::parse("1/5", F5), error);
}

TEST_CASE("print-parse round trip on random scalars") {
    std::vector<ScalarDomain> doms = {ScalarDomain::rationals(), ScalarDomain::quadratic(-1),
                                      ScalarDomain::quadratic(2), ScalarDomain::prime_field(101)};
    SplitMix64 rng(0x5ca1ab1e);
    for (const auto& dom : doms) {
        for (int k = 0; k < 1000; ++k) {
            Scalar s = random_scalar(rng, dom);
            CHECK(Scalar::parse(s.to_string(), dom) == s);
        }
    }
}

TEST_CASE("field axioms hold exactly on random triples") {
    std::vector<ScalarDomain> doms = {ScalarDomain::rationals(), ScalarDomain::quadratic(-1),
                                      ScalarDomain::quadratic(2), ScalarDomain::prime_field(101)};
    SplitMix64 rng(0xfeedbee5);
    for (const auto& dom : doms) {
        Scalar one = Scalar::from_int(1, dom);
        for (int k = 0; k < 1000; ++k) {
            Scalar x = random_scalar(rng, dom);
            Scalar y = random_scalar(rng, dom);
            Scalar z = random_scalar(rng, dom);
            CHECK((x * y) * z == x * (y * z));
            CHECK((x + y) + z == x + (y + z));
            CHECK(x * y == y * x);
            CHECK(x * (y + z) == x * y + x * z);
            if (!x.is_zero()) CHECK(x * x.inverse() == one);
        }
    }
}

TEST_CASE("scalar domain mismatch is rejected") {
    Scalar a = Scalar::from_int(1, ScalarDomain::rationals());
    Scalar b = Scalar::from_int(1, ScalarDomain::quadratic(2));
    CHECK_THROWS_AS(a + b, error);
    CHECK_THROWS_AS(a * b, error);
    CHECK(a != b);
}

TEST_CASE("sqrt_in_domain examples") {
    auto Q = ScalarDomain::rationals();
    CHECK(*Scalar::from_int(4, Q).sqrt() == Scalar::from_int(2, Q));
    CHECK(!Scalar::from_int(2, Q).sqrt());
    CHECK(!Scalar::from_int(-4, Q).sqrt());
    CHECK(*Scalar::from_rational(rat(9, 4), Q).sqrt() == Scalar::from_rational(rat(3, 2), Q));

    auto Qs2 = ScalarDomain::quadratic(2);
    CHECK(*Scalar::from_int(2, Qs2).sqrt() == Scalar::quadratic(0, 1, Qs2));
    // 1/2 = (1/2*sqrt(2))^2
    CHECK(*Scalar::from_rational(rat(1, 2), Qs2).sqrt() == Scalar::quadratic(0, rat(1, 2), Qs2));
    // (1 + sqrt(2))^2 = 3 + 2 sqrt(2)
    Scalar t = Scalar::quadratic(3, 2, Qs2);
    CHECK(*t.sqrt() == Scalar::quadratic(1, 1, Qs2));

    auto Qi = ScalarDomain::quadratic(-1);
    CHECK(*Scalar::from_int(-1, Qi).sqrt() == Scalar::quadratic(0, 1, Qi));
    // 2i = (1+i)^2
    CHECK(*Scalar::quadratic(0, 2, Qi).sqrt() == Scalar::quadratic(1, 1, Qi));

    auto F13 = ScalarDomain::prime_field(13);
    auto r = Scalar::from_int(4, F13).sqrt();
    REQUIRE(r);
    CHECK(*r == Scalar::from_int(2, F13));  // smaller of {2, 11}
    CHECK(!Scalar::from_int(5, F13).sqrt());  // 5 is a non-residue mod 13
}

TEST_CASE("sqrt of squares returns +/- the root") {
    std::vector<ScalarDomain> doms = {ScalarDomain::rationals(), ScalarDomain::quadratic(-1),
                                      ScalarDomain::quadratic(2), ScalarDomain::prime_field(101)};
    SplitMix64 rng(0xabcdef12);
    for (const auto& dom : doms) {
        for (int k = 0; k < 200; ++k) {
            Scalar t = random_scalar(rng, dom);
            auto r = (t * t).sqrt();
            REQUIRE(r);
            CHECK((*r == t || *r == -t));
        }
    }
}
