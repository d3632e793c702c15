#include <doctest.h>

#include "rbmat/catalog.hpp"
#include "rbmat/fingerprint.hpp"

using namespace rbmat;

namespace {

const ScalarDomain Q = ScalarDomain::rationals();

Matrix<Scalar> u3(int i, int j) { return Matrix<Scalar>::unit(3, i - 1, j - 1, Scalar(Q)); }

Subspace span3(const std::vector<Matrix<Scalar>>& mats) { return Subspace::span(3, Q, mats); }

}  // namespace

TEST_CASE("image and kernel") {
    auto [im, ker] = image_and_kernel(build_operator_q("Q2"));
    CHECK(im.dim() == 1);
    CHECK(im == span3({u3(1, 2)}));
    CHECK(ker.dim() == 8);
    CHECK(ker.contains(u3(1, 1)));
    CHECK(!ker.contains(u3(3, 3)));

    auto [im0, ker0] = image_and_kernel(LinearOperator<Scalar>(3, Scalar(Q)));
    CHECK(im0.dim() == 0);
    CHECK(ker0.dim() == 9);

    auto [im13, ker13] = image_and_kernel(build_operator_q("Q13", {{"kappa", rat(0)}}));
    CHECK(im13.dim() == 3);
    CHECK(im13 == span3({u3(1, 2), u3(1, 3), u3(1, 1)}));
    CHECK(im13.dim() + ker13.dim() == 9);
}

TEST_CASE("closure and bimodule checks") {
    CHECK(closure_check(span3({u3(1, 2), u3(1, 3), u3(1, 1)})));
    CHECK(!closure_check(span3({u3(1, 2), u3(2, 1)})));
    CHECK(closure_check(span3({})));

    for (const char* id : {"Q2", "Q14"}) {
        auto [im, ker] = image_and_kernel(build_operator_q(id));
        CHECK(closure_check(im));
        CHECK(bimodule_check(im, ker));
    }
    CHECK(bimodule_check(span3({u3(1, 1)}), span3({u3(1, 2)})));
}

TEST_CASE("radical basis") {
    Subspace im13 = span3({u3(1, 2), u3(1, 3), u3(1, 1)});
    Subspace rad = radical_basis(im13);
    CHECK(rad.dim() == 2);
    CHECK(rad == span3({u3(1, 2), u3(1, 3)}));

    Subspace nil = span3({u3(1, 2)});
    CHECK(radical_basis(nil) == nil);

    CHECK(radical_basis(span3({u3(1, 1)})).dim() == 0);

    // every radical element is nilpotent and the radical is an ideal
    auto [im, ker] = image_and_kernel(build_operator_q("Q14"));
    Subspace r14 = radical_basis(im);
    for (const auto& x : r14.basis_matrices()) CHECK(matrix_nilindex(x));
    for (const auto& a : im.basis_matrices())
        for (const auto& x : r14.basis_matrices()) {
            CHECK(r14.contains(a * x));
            CHECK(r14.contains(x * a));
        }

    CHECK_THROWS_AS(radical_basis(span3({u3(1, 2), u3(2, 1)})), error);
}

TEST_CASE("idempotent ranks") {
    auto im_of = [](const LinearOperator<Scalar>& L) { return image_and_kernel(L).first; };

    auto inv13_0 = idempotent_ranks(im_of(build_operator_q("Q13", {{"kappa", rat(0)}})));
    CHECK(inv13_0.ranks == std::set<int>{1});
    CHECK(!inv13_0.inconclusive);

    auto inv13_1 = idempotent_ranks(im_of(build_operator_q("Q13", {{"kappa", rat(-1)}})));
    CHECK(inv13_1.ranks.count(2) == 1);
    CHECK(!inv13_1.inconclusive);

    CHECK(idempotent_ranks(span3({u3(1, 2), u3(1, 3)})).ranks.empty());

    // the full matrix algebra realizes every rank
    std::vector<Matrix<Scalar>> all;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) all.push_back(u3(i, j));
    auto inv_full = idempotent_ranks(span3(all));
    CHECK(inv_full.ranks == std::set<int>{1, 2, 3});
    CHECK(!inv_full.inconclusive);
}

TEST_CASE("nondegenerate element detection") {
    auto ker_q8 = image_and_kernel(build_operator_q("Q8", {{"kappa", rat(0)}})).second;
    CHECK(nondegenerate_exists(ker_q8));
    MPoly det = generic_determinant(ker_q8);
    CHECK(det.terms().size() == 1);  // a single degree-3 monomial, +/- t_a t_b t_c
    CHECK(det.total_degree() == 3);

    CHECK(!nondegenerate_exists(span3({u3(1, 2), u3(1, 3)})));

    std::vector<Matrix<Scalar>> all;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) all.push_back(u3(i, j));
    CHECK(nondegenerate_exists(span3(all)));
}

TEST_CASE("algebra profile") {
    AlgebraProfile p1 = algebra_profile(span3({u3(1, 1)}));
    CHECK(p1.dim == 1);
    CHECK(p1.radical_dim == 0);
    CHECK(p1.has_unit);
    CHECK(p1.commutative);

    AlgebraProfile p2 = algebra_profile(span3({u3(1, 2), u3(1, 3)}));
    CHECK(p2.dim == 2);
    CHECK(p2.radical_dim == 2);
    CHECK(p2.radical_sq_dim == 0);
    CHECK(!p2.has_unit);

    auto prof = [](const LinearOperator<Scalar>& L) {
        return algebra_profile(image_and_kernel(L).first);
    };
    AlgebraProfile q19 = prof(build_operator_q("Q19", {{"kappa", rat(0)}}));
    AlgebraProfile q21 = prof(build_operator_q("Q21", {{"kappa", rat(0)}}));
    CHECK(q19.sym_key() != q21.sym_key());
}

TEST_CASE("fingerprint fields") {
    Fingerprint f2 = fingerprint(build_operator_q("Q2"));
    CHECK(f2.dim_im == 1);
    CHECK(f2.radical_dim == 1);
    CHECK(f2.idempotent_ranks.empty());
    CHECK(f2.r_squared_zero);

    Fingerprint f1 = fingerprint(build_operator_q("Q1"));
    CHECK(f1.nil_index_r == 5);
    CHECK(!f1.unit_image_square_zero);

    Fingerprint f6 = fingerprint(build_operator_q("Q6", {{"kappa", rat(0)}, {"mu", rat(-1)}}));
    Fingerprint f9 = fingerprint(build_operator_q("Q9", {{"kappa", rat(0)}}));
    CHECK(f6.dim_im == f9.dim_im);
    CHECK(f6.ker_contains_nondegenerate);
    CHECK(!f9.ker_contains_nondegenerate);
    CHECK(f6 != f9);
}

TEST_CASE("fingerprint invariance under conjugation and scaling") {
    SplitMix64 rng(0x1234);
    auto random_invertible = [&](int n) {
        Matrix<Scalar> a = Matrix<Scalar>::identity(n, Scalar(Q));
        static const Rational coefs[] = {rat(1), rat(-1), rat(2), rat(1, 2), rat(-3)};
        for (int step = 0; step < 6; ++step) {
            int i = static_cast<int>(rng.range(0, n - 1));
            int j = static_cast<int>(rng.range(0, n - 1));
            if (i == j) continue;
            Matrix<Scalar> t = Matrix<Scalar>::identity(n, Scalar(Q));
            t.at(i, j) = Scalar::from_rational(coefs[rng.range(0, 4)], Q);
            a = a * t;
        }
        return a;
    };
    for (const char* id : {"Q13", "Q22"}) {
        std::map<std::string, Rational> params = {{"kappa", rat(-1)}};
        if (id == std::string("Q22")) params["mu"] = rat(0);
        auto op = build_operator_q(id, params);
        Fingerprint base = fingerprint(op);
        for (int k = 0; k < 10; ++k) {
            AutoDescriptor psi(random_invertible(3));
            CHECK(fingerprint(conjugate(op, psi)) == base);
        }
        CHECK(fingerprint(scale(op, Scalar::from_rational(rat(-5, 3), Q))) == base);
    }
}

TEST_CASE("central radical ratio recovers the family parameter") {
    for (long long g : {0LL, 2LL, 5LL}) {
        auto q23 = build_operator_q("Q23", {{"kappa", rat(0)}, {"gamma", rat(g)}});
        auto ratio = central_radical_ratio(q23);
        REQUIRE(ratio);
        CHECK(*ratio == Scalar::from_int(g, Q));
        auto q23m = build_operator_q("Q23", {{"kappa", rat(-1)}, {"gamma", rat(g)}});
        auto ratio_m = central_radical_ratio(q23m);
        REQUIRE(ratio_m);
        CHECK(*ratio_m == Scalar::from_int(g, Q));
    }
}

TEST_CASE("subspace intersection") {
    Subspace a = span3({u3(1, 2), u3(1, 3), u3(1, 1)});
    Subspace b = span3({u3(1, 2), u3(2, 2)});
    Subspace c = a.intersect(b);
    CHECK(c.dim() == 1);
    CHECK(c.contains(u3(1, 2)));
}

TEST_CASE("trace form is nondegenerate on a radical complement") {
    auto [im, ker] = image_and_kernel(build_operator_q("Q14"));
    Subspace rad = radical_basis(im);
    // complement basis: echelon rows of Im independent from Rad
    std::vector<Matrix<Scalar>> comp;
    std::vector<Vec> tracked = rad.basis_rows();
    for (int k = 0; k < im.dim(); ++k) {
        auto probe = tracked;
        probe.push_back(im.basis_rows()[static_cast<std::size_t>(k)]);
        if (linalg::rref(probe).size() > tracked.size()) {
            tracked.push_back(im.basis_rows()[static_cast<std::size_t>(k)]);
            comp.push_back(im.basis_matrix(k));
        }
    }
    REQUIRE(comp.size() == static_cast<std::size_t>(im.dim() - rad.dim()));
    std::vector<Vec> gram(comp.size(), Vec(comp.size(), Scalar(Q)));
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = 0; j < comp.size(); ++j) gram[j][i] = (comp[i] * comp[j]).trace();
    CHECK(linalg::nullspace(gram, comp.size(), Q).empty());
}
