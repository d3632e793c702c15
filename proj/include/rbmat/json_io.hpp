#pragma once

#include <json.hpp>

#include "rbmat/solver.hpp"
#include "rbmat/verify.hpp"

namespace rbmat {

// Ordered JSON keeps emission deterministic: identical inputs give
// byte-identical dumps.
using Json = nlohmann::ordered_json;

inline std::string unit_name(int i, int j) {
    return "e" + std::to_string(i + 1) + std::to_string(j + 1);
}

inline Json matrix_to_json(const Matrix<Scalar>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.n(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.n(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json matrix_to_json(const Matrix<MPoly>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.n(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.n(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json operator_to_json(const LinearOperator<Scalar>& L) {
    Json out;
    out["n"] = L.n();
    out["domain"] = L.exemplar().domain().to_string();
    out["weight"] = L.weight().to_string();
    Json images;
    for (int i = 0; i < L.n(); ++i)
        for (int j = 0; j < L.n(); ++j) images[unit_name(i, j)] = matrix_to_json(L.image(i, j));
    out["images"] = std::move(images);
    return out;
}

inline LinearOperator<Scalar> operator_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    if (n < 2 || n > 8) throw error("operator dimension out of range");
    ScalarDomain dom = ScalarDomain::parse(j.at("domain").get<std::string>());
    LinearOperator<Scalar> L(n, Scalar(dom));
    L.set_weight(Scalar::parse(j.at("weight").get<std::string>(), dom));
    const Json& images = j.at("images");
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj) {
            auto it = images.find(unit_name(i, jj));
            if (it == images.end()) continue;  // omitted images stay zero
            const Json& rows = *it;
            if (rows.size() != static_cast<std::size_t>(n)) throw error("bad image shape");
            for (int r = 0; r < n; ++r) {
                const Json& row = rows[static_cast<std::size_t>(r)];
                if (row.size() != static_cast<std::size_t>(n)) throw error("bad image shape");
                for (int c = 0; c < n; ++c)
                    L.image(i, jj).at(r, c) =
                        Scalar::parse(row[static_cast<std::size_t>(c)].get<std::string>(), dom);
            }
        }
    return L;
}

inline Json subspace_to_json(const Subspace& s) {
    Json out = Json::array();
    for (int k = 0; k < s.dim(); ++k) out.push_back(matrix_to_json(s.basis_matrix(k)));
    return out;
}

inline Json profile_to_json(const AlgebraProfile& p) {
    Json out;
    out["dim"] = p.dim;
    out["radicalDim"] = p.radical_dim;
    out["radicalSquaredDim"] = p.radical_sq_dim;
    out["hasUnit"] = p.has_unit;
    out["hasLeftUnit"] = p.has_left_unit;
    out["hasRightUnit"] = p.has_right_unit;
    out["commutative"] = p.commutative;
    out["radicalAnnihilatorDims"] = Json::array({p.ann_left, p.ann_right, p.ann_two});
    return out;
}

inline Json fingerprint_to_json(const Fingerprint& f) {
    Json out;
    out["dimIm"] = f.dim_im;
    out["dimKer"] = f.dim_ker;
    out["dimImCapKer"] = f.dim_im_cap_ker;
    out["radicalDim"] = f.radical_dim;
    out["idempotentRanks"] = f.idempotent_ranks;
    out["idempotentInconclusive"] = f.idempotent_inconclusive;
    out["nilIndexR"] = f.nil_index_r;
    out["unitImageRank"] = f.unit_image_rank;
    out["unitImageSquareZero"] = f.unit_image_square_zero;
    out["kerContainsNondegenerate"] = f.ker_contains_nondegenerate;
    out["imageProfile"] = profile_to_json(f.image_profile);
    out["rSquaredZero"] = f.r_squared_zero;
    return out;
}

inline Json system_to_json(const QuadraticSystem& sys) {
    Json eqs = Json::array();
    for (const auto& eq : sys.equations) {
        Json e;
        e["poly"] = eq.poly.to_string();
        e["pair"] = Json::array({unit_name(eq.pair.i1 - 1, eq.pair.j1 - 1),
                                 unit_name(eq.pair.i2 - 1, eq.pair.j2 - 1)});
        e["entry"] = Json::array({eq.row, eq.col});
        eqs.push_back(std::move(e));
    }
    Json out;
    out["variables"] = sys.ring.names();
    out["equations"] = std::move(eqs);
    return out;
}

inline Json template_to_json(const OperatorTemplate& t) {
    Json out;
    out["id"] = t.id;
    out["n"] = t.n;
    out["variables"] = t.ring.names();
    Json images;
    for (int i = 0; i < t.n; ++i)
        for (int j = 0; j < t.n; ++j) images[unit_name(i, j)] = matrix_to_json(t.op.image(i, j));
    out["images"] = std::move(images);
    return out;
}

inline Json assignment_to_json(const Assignment& sigma) {
    Json out;
    for (const auto& [name, value] : sigma) out[name] = value.to_string();
    return out;
}

inline Assignment assignment_from_json(const Json& j, const ScalarDomain& dom) {
    Assignment out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out.emplace(it.key(), Scalar::parse(it.value().get<std::string>(), dom));
    return out;
}

inline Json manifest_to_json() {
    Json out = Json::array();
    for (const auto& e : catalog_entries()) {
        Json item;
        item["id"] = e.id;
        item["label"] = e.label;
        item["n"] = e.n;
        Json specs = Json::array();
        for (const auto& p : e.params) {
            Json s;
            s["name"] = p.name;
            if (p.dimension) {
                s["kind"] = "dimension";
            } else if (p.two_valued) {
                s["kind"] = "twoValued";
            } else {
                s["kind"] = "field";
                Json excl = Json::array();
                for (const auto& x : p.excluded) excl.push_back(rational_to_string(x));
                s["excluded"] = std::move(excl);
            }
            specs.push_back(std::move(s));
        }
        item["parameterSpec"] = std::move(specs);
        item["requiredDomain"] = e.required_domain;
        out.push_back(std::move(item));
    }
    return out;
}

}  // namespace rbmat
