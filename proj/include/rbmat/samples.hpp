#pragma once

#include <map>
#include <string>
#include <vector>

#include "rbmat/catalog.hpp"

namespace rbmat {

struct SampleInstance {
    std::string id;
    std::map<std::string, Rational> params;

    std::string display() const {
        if (params.empty()) return id;
        std::string out = id + "[";
        bool first = true;
        for (const auto& [k, v] : params) {
            if (!first) out += ",";
            first = false;
            out += k + "=" + rational_to_string(v);
        }
        return out + "]";
    }
};

// Fixed parameter sampling used by verification batteries: kappa, mu over
// both admissible values, alpha/beta in {0, 2, -3}, gamma in {0, 2, 5},
// Example1 dimensions 2..6.
inline std::vector<SampleInstance> sample_instances(const CatalogEntry& entry) {
    static const std::vector<Rational> kappa_vals = {rat(0), rat(-1)};
    static const std::vector<Rational> alpha_vals = {rat(0), rat(2), rat(-3)};
    static const std::vector<Rational> beta_vals = {rat(0), rat(2), rat(-3)};
    static const std::vector<Rational> gamma_vals = {rat(0), rat(2), rat(5)};
    static const std::vector<Rational> free_vals = {rat(0), rat(2), rat(-3)};

    std::vector<std::map<std::string, Rational>> grids = {{}};
    for (const auto& spec : entry.params) {
        const std::vector<Rational>* vals;
        if (spec.dimension) {
            static const std::vector<Rational> dims = {rat(2), rat(3), rat(4), rat(5), rat(6)};
            vals = &dims;
        } else if (spec.two_valued) {
            vals = &kappa_vals;
        } else if (spec.name == "alpha") {
            vals = &alpha_vals;
        } else if (spec.name == "beta") {
            vals = &beta_vals;
        } else if (spec.name == "gamma") {
            vals = &gamma_vals;
        } else {
            vals = &free_vals;
        }
        std::vector<std::map<std::string, Rational>> next;
        for (const auto& g : grids)
            for (const auto& v : *vals) {
                auto g2 = g;
                g2.emplace(spec.name, v);
                next.push_back(std::move(g2));
            }
        grids = std::move(next);
    }
    std::vector<SampleInstance> out;
    for (auto& g : grids) out.push_back({entry.id, std::move(g)});
    return out;
}

// trailing-star glob plus exact match; "Q*" selects Q1..Q24
inline bool selector_matches(std::string_view selector, std::string_view id) {
    if (selector == "*") return true;
    if (!selector.empty() && selector.back() == '*')
        return id.size() >= selector.size() - 1 &&
               id.substr(0, selector.size() - 1) == selector.substr(0, selector.size() - 1);
    return selector == id;
}

inline std::vector<SampleInstance> sampling_grid(std::string_view selector = "*") {
    std::vector<SampleInstance> out;
    for (const auto& e : catalog_entries()) {
        if (!selector_matches(selector, e.id)) continue;
        auto inst = sample_instances(e);
        out.insert(out.end(), inst.begin(), inst.end());
    }
    return out;
}

// the Theorem-style representative list: one fixed parameter sample per
// two-valued choice, used for fingerprint separation tables
inline std::vector<SampleInstance> representative_instances() {
    std::vector<SampleInstance> out;
    for (const auto& e : catalog_entries()) {
        if (e.id.size() < 2 || e.id[0] != 'Q') continue;
        std::vector<std::map<std::string, Rational>> grids = {{}};
        for (const auto& spec : e.params) {
            std::vector<Rational> vals;
            if (spec.two_valued)
                vals = {rat(0), rat(-1)};
            else if (spec.name == "gamma")
                vals = {rat(2)};
            else
                vals = {rat(2)};
            std::vector<std::map<std::string, Rational>> next;
            for (const auto& g : grids)
                for (const auto& v : vals) {
                    auto g2 = g;
                    g2.emplace(spec.name, v);
                    next.push_back(std::move(g2));
                }
            grids = std::move(next);
        }
        for (auto& g : grids) out.push_back({e.id, std::move(g)});
    }
    return out;
}

}  // namespace rbmat
