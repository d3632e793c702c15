#pragma once

#include <sstream>

#include "rbmat/algebra.hpp"

namespace rbmat {

// The conjugation-invariant record used to separate operator orbits: exact
// dimensions, radical data, idempotent ranks, nilpotency indices and kernel
// nondegeneracy.  Comparison goes through a transpose-symmetric key, because
// orbits are taken up to antiautomorphisms as well.
struct Fingerprint {
    int dim_im = 0;
    int dim_ker = 0;
    int dim_im_cap_ker = 0;
    int radical_dim = 0;
    std::set<int> idempotent_ranks;
    bool idempotent_inconclusive = false;
    int nil_index_r = 0;
    int unit_image_rank = 0;
    bool unit_image_square_zero = false;
    bool ker_contains_nondegenerate = false;
    AlgebraProfile image_profile;
    bool r_squared_zero = false;

    std::string key() const {
        std::ostringstream os;
        os << dim_im << '|' << dim_ker << '|' << dim_im_cap_ker << '|' << radical_dim << '|';
        for (int r : idempotent_ranks) os << r << ',';
        os << '|' << (idempotent_inconclusive ? 1 : 0) << '|' << nil_index_r << '|'
           << unit_image_rank << '|' << (unit_image_square_zero ? 1 : 0) << '|'
           << (ker_contains_nondegenerate ? 1 : 0) << '|' << (r_squared_zero ? 1 : 0) << '|';
        for (int v : image_profile.sym_key()) os << v << ',';
        return os.str();
    }

    friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
        return a.key() == b.key();
    }
    friend bool operator!=(const Fingerprint& a, const Fingerprint& b) { return !(a == b); }
};

inline Fingerprint fingerprint(const LinearOperator<Scalar>& L) {
    if (!L.exemplar().domain().is_char_zero())
        throw error("fingerprint requires characteristic zero");
    Fingerprint f;
    auto [im, ker] = image_and_kernel(L);
    f.dim_im = im.dim();
    f.dim_ker = ker.dim();
    f.dim_im_cap_ker = im.intersect(ker).dim();
    f.radical_dim = radical_basis(im).dim();
    auto inv = idempotent_ranks(im);
    f.idempotent_ranks = inv.ranks;
    f.idempotent_inconclusive = inv.inconclusive;
    auto nil = nilpotency_index(L, 2 * L.n() + 1);
    f.nil_index_r = nil ? *nil : -1;
    Matrix<Scalar> r1 = unit_image(L);
    f.unit_image_rank = rank(r1);
    f.unit_image_square_zero = (r1 * r1).is_zero();
    f.ker_contains_nondegenerate = nondegenerate_exists(ker);
    f.image_profile = algebra_profile(im);
    f.r_squared_zero = compose(L, L).is_zero();
    return f;
}

// Targeted families check: coefficients of R(e22) and R(e33) on the central
// element of Rad(Im R).  For the one-parameter family this ratio recovers the
// parameter exactly and is conjugation-invariant.
inline std::optional<Scalar> central_radical_ratio(const LinearOperator<Scalar>& L) {
    if (L.n() != 3) throw error("central ratio check is defined for n = 3");
    const ScalarDomain& dom = L.exemplar().domain();
    auto [im, ker] = image_and_kernel(L);
    Subspace rad = radical_basis(im);
    auto rb = rad.basis_matrices();
    // center of the radical as an algebra
    std::vector<Vec> rows;
    std::size_t m = 9;
    for (const auto& r : rb) {
        for (std::size_t e = 0; e < m; ++e) {
            Vec eq;
            for (const auto& x : rb) eq.push_back(flatten(x * r - r * x)[e]);
            rows.push_back(std::move(eq));
        }
    }
    auto lambdas = linalg::nullspace(rows, rb.size(), dom);
    std::vector<Matrix<Scalar>> gens;
    for (const auto& lam : lambdas) {
        Matrix<Scalar> g = Matrix<Scalar>::zero(3, Scalar(dom));
        for (std::size_t i = 0; i < rb.size(); ++i) g = g + rb[i].scaled(lam[i]);
        gens.push_back(std::move(g));
    }
    Subspace center = Subspace::span(3, dom, gens);
    if (center.dim() != 1) return std::nullopt;
    Subspace line = center;
    Matrix<Scalar> r22 = L.image(1, 1);  // image of e22
    Matrix<Scalar> r33 = L.image(2, 2);  // image of e33
    auto c22 = line.coordinates(r22);
    auto c33 = line.coordinates(r33);
    if (!c22 || !c33 || (*c22)[0].is_zero()) return std::nullopt;
    return (*c33)[0] / (*c22)[0];
}

}  // namespace rbmat
