#include <doctest.h>

#include "rbmat/catalog.hpp"
#include "rbmat/linop.hpp"

using namespace rbmat;

namespace {

const ScalarDomain Q = ScalarDomain::rationals();

Matrix<Scalar> u3(int i, int j) { return Matrix<Scalar>::unit(3, i - 1, j - 1, Scalar(Q)); }

Matrix<Scalar> random_invertible(SplitMix64& rng, int n, const ScalarDomain& dom) {
    // product of elementary transvections and an invertible diagonal; keeps
    // entries small while sampling a rich set of conjugators
    Matrix<Scalar> a = Matrix<Scalar>::identity(n, Scalar(dom));
    static const Rational coefs[] = {rat(1), rat(-1), rat(2), rat(-2), rat(1, 2), rat(3)};
    for (int step = 0; step < 6; ++step) {
        int i = static_cast<int>(rng.range(0, n - 1));
        int j = static_cast<int>(rng.range(0, n - 1));
        if (i == j) continue;
        Matrix<Scalar> t = Matrix<Scalar>::identity(n, Scalar(dom));
        t.at(i, j) = Scalar::from_rational(coefs[rng.range(0, 5)], dom);
        a = a * t;
    }
    Matrix<Scalar> d = Matrix<Scalar>::identity(n, Scalar(dom));
    static const Rational scales[] = {rat(1), rat(2), rat(1, 2), rat(-1), rat(3)};
    for (int i = 0; i < n; ++i) d.at(i, i) = Scalar::from_rational(scales[rng.range(0, 4)], dom);
    return a * d;
}

}  // namespace

TEST_CASE("apply") {
    auto q2 = build_operator_q("Q2");
    CHECK(q2.apply(u3(3, 3)) == u3(1, 2));
    CHECK(q2.apply(Matrix<Scalar>::zero(3, Scalar(Q))).is_zero());

    auto q1 = build_operator_q("Q1");
    CHECK(unit_image(q1) == u3(1, 2) + u3(2, 3).scaled(Scalar::from_int(2, Q)));
    CHECK_THROWS_AS(q2.apply(Matrix<Scalar>::zero(2, Scalar(Q))), error);
}

TEST_CASE("rb_residual examples") {
    auto q2 = build_operator_q("Q2");
    CHECK(rb_residual(q2, u3(3, 3), u3(3, 3)).is_zero());

    // the identity map is not an RB operator of weight zero
    LinearOperator<Scalar> idmap(2, Scalar(Q));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) idmap.image(i, j) = Matrix<Scalar>::unit(2, i, j, Scalar(Q));
    Matrix<Scalar> e11 = Matrix<Scalar>::unit(2, 0, 0, Scalar(Q));
    CHECK(rb_residual(idmap, e11, e11) == -e11);

    auto rep = rb_check(idmap);
    CHECK(!rep.ok);
    REQUIRE(rep.first_failure);
    CHECK(rep.first_failure->to_string() == "(e11, e11)");
}

TEST_CASE("rb_check on catalog entries") {
    CHECK(rb_check(LinearOperator<Scalar>(3, Scalar(Q))).ok);  // zero operator
    CHECK(rb_check(build_operator_q("Q14")).ok);
    CHECK(rb_check(build_operator_q("Q2")).ok);
}

TEST_CASE("unit_image examples") {
    CHECK(unit_image(build_operator_q("Q2")) == u3(1, 2));
    CHECK(unit_image(build_operator_q("Q5", {{"kappa", rat(0)}, {"beta", rat(2)}})) ==
          u3(1, 2).scaled(Scalar::from_int(3, Q)));
}

TEST_CASE("nilpotency_index") {
    CHECK(*nilpotency_index(build_operator_q("Q1")) == 5);
    CHECK(*nilpotency_index(build_operator_q("Q2")) == 2);
    CHECK(*nilpotency_index(build_operator_q("Q14")) == 3);

    LinearOperator<Scalar> idmap(2, Scalar(Q));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) idmap.image(i, j) = Matrix<Scalar>::unit(2, i, j, Scalar(Q));
    CHECK(!nilpotency_index(idmap, 5));
}

TEST_CASE("matrix_nilindex") {
    CHECK(*matrix_nilindex(u3(1, 2)) == 2);
    CHECK(*matrix_nilindex(u3(1, 2) + u3(2, 3).scaled(Scalar::from_int(2, Q))) == 3);
    CHECK(!matrix_nilindex(Matrix<Scalar>::identity(3, Scalar(Q))));
}

TEST_CASE("factorial_unit_check") {
    auto q1 = build_operator_q("Q1");
    CHECK(factorial_unit_check(q1, 1));
    CHECK(factorial_unit_check(q1, 2));
    auto q2 = build_operator_q("Q2");
    CHECK(factorial_unit_check(q2, 1));
    CHECK(factorial_unit_check(q2, 2));
}

TEST_CASE("scale") {
    auto q2 = build_operator_q("Q2");
    CHECK(rb_check(scale(q2, Scalar::from_int(3, Q))).ok);
    CHECK(scale(q2, Scalar(Q)).is_zero());
    auto q14 = build_operator_q("Q14");
    CHECK(unit_image(scale(q14, Scalar::from_rational(rat(1, 2), Q))) == u3(1, 2));

    LinearOperator<Scalar> nonzero_weight(3, Scalar(Q));
    nonzero_weight.set_weight(Scalar::from_int(1, Q));
    CHECK_THROWS_AS(scale(nonzero_weight, Scalar::from_int(2, Q)), error);
}

TEST_CASE("conjugation chain from the maximal-index normal form") {
    // psi_{1,1/2} carries the final stage-form with parameter a to the
    // operator P with q = 2a
    for (long long av : {0LL, 1LL, 2LL, -3LL}) {
        auto r = build_operator_q("Section3Final", {{"a", rat(av)}});
        auto psi = build_automorphism("psi", {{"r", rat(1)}, {"s", rat(1, 2)}}, Q);
        auto p = build_operator_q("SectionP", {{"q", rat(2 * av)}});
        CHECK(conjugate(r, psi) == p);

        // E - q e13 then lands on Q1 exactly
        Matrix<Scalar> a = Matrix<Scalar>::identity(3, Scalar(Q));
        a.at(0, 2) = Scalar::from_int(-2 * av, Q);
        CHECK(conjugate(p, AutoDescriptor(a)) == build_operator_q("Q1"));
    }
}

TEST_CASE("conjugate with identity and inverses") {
    auto q13 = build_operator_q("Q13", {{"kappa", rat(-1)}});
    CHECK(conjugate(q13, AutoDescriptor::identity(3, Q)) == q13);

    SplitMix64 rng(0x900d);
    for (int k = 0; k < 20; ++k) {
        AutoDescriptor psi(random_invertible(rng, 3, Q), k % 2 == 1);
        CHECK(conjugate(conjugate(q13, psi), psi.inversed()) == q13);
    }
}

TEST_CASE("conjugation and scaling preserve the identity") {
    SplitMix64 rng(0xc0ffee);
    for (const char* id : {"Q1", "Q14", "Q22"}) {
        auto op = id == std::string("Q22")
                      ? build_operator_q(id, {{"kappa", rat(-1)}, {"mu", rat(0)}})
                      : build_operator_q(id);
        for (int k = 0; k < 10; ++k) {
            AutoDescriptor psi(random_invertible(rng, 3, Q));
            CHECK(rb_check(conjugate(op, psi)).ok);
        }
        CHECK(rb_check(scale(op, Scalar::from_rational(rat(-7, 3), Q))).ok);
    }
    CHECK_THROWS_AS(AutoDescriptor(Matrix<Scalar>::zero(3, Scalar(Q))), error);
}

TEST_CASE("skew_symmetric_check") {
    CHECK(skew_symmetric_check(build_operator_q("R1")));
    CHECK(skew_symmetric_check(build_operator_q("R3")));
    CHECK(!skew_symmetric_check(build_operator_q("Q2")));
}

TEST_CASE("graded projection onto the even part") {
    // (Q5)_0 with beta = 0 restricts to (L3) on the M_2 corner
    auto q5 = build_operator_q("Q5", {{"kappa", rat(0)}, {"beta", rat(0)}});
    auto pr = graded_projection(q5);
    CHECK(pr.valid);
    CHECK(restrict_to_corner(pr.p0) == build_operator_q("L3"));
    CHECK(rb_check(restrict_to_corner(pr.p0)).ok);

    // (Q6)_{-1} with mu = 0 restricts to (L4) up to the e11 <-> e22 flip
    auto q6 = build_operator_q("Q6", {{"kappa", rat(-1)}, {"mu", rat(0)}});
    auto pr6 = graded_projection(q6);
    CHECK(pr6.valid);
    auto corner = restrict_to_corner(pr6.p0);
    CHECK(rb_check(corner).ok);
    Matrix<Scalar> p12 = Matrix<Scalar>::zero(2, Scalar(Q));
    p12.at(0, 1) = Scalar::from_int(1, Q);
    p12.at(1, 0) = Scalar::from_int(1, Q);
    AutoDescriptor flip(p12, true, "theta12*T");
    CHECK(conjugate(corner, flip) == build_operator_q("L4"));

    auto pr0 = graded_projection(LinearOperator<Scalar>(3, Scalar(Q)));
    CHECK(pr0.valid);
    CHECK(pr0.p0.is_zero());

    CHECK_THROWS_AS(graded_projection(LinearOperator<Scalar>(2, Scalar(Q))), error);
}
