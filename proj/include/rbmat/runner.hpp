#pragma once

#include <chrono>
#include <mutex>
#include <sstream>

#include "rbmat/json_io.hpp"
#include "rbmat/parallel.hpp"

namespace rbmat {

// exit code 2
class usage_error : public error {
public:
    using error::error;
};

struct RunItem {
    std::string name;
    bool pass = true;
    std::string detail;
    Json payload;  // machine-readable result for --json
};

struct RunReport {
    std::string command;
    std::vector<RunItem> items;
    double seconds = 0.0;

    bool passed() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }

    int exit_status() const { return passed() ? 0 : 1; }

    // wall time stays out of the JSON so identical inputs give identical bytes
    Json to_json() const {
        Json out;
        out["command"] = command;
        Json arr = Json::array();
        for (const auto& it : items) {
            Json j;
            j["name"] = it.name;
            j["pass"] = it.pass;
            if (!it.detail.empty()) j["detail"] = it.detail;
            if (!it.payload.is_null()) j["result"] = it.payload;
            arr.push_back(std::move(j));
        }
        out["items"] = std::move(arr);
        out["passed"] = passed();
        return out;
    }

    std::string to_table() const {
        std::size_t width = 12;
        for (const auto& it : items) width = std::max(width, it.name.size());
        std::ostringstream os;
        for (const auto& it : items) {
            os << it.name;
            os << std::string(width - it.name.size() + 2, ' ');
            os << (it.pass ? "pass" : "FAIL");
            if (!it.detail.empty()) os << "  " << it.detail;
            os << "\n";
        }
        os << (passed() ? "all passed" : "FAILURES present") << " (" << items.size()
           << " items, " << seconds << " s)\n";
        return os.str();
    }
};

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline std::string fingerprint_summary(const Fingerprint& f) {
    std::ostringstream os;
    os << "dimIm=" << f.dim_im << " rad=" << f.radical_dim << " nil=" << f.nil_index_r
       << " ranks={";
    bool first = true;
    for (int r : f.idempotent_ranks) {
        if (!first) os << ",";
        first = false;
        os << r;
    }
    os << "}";
    return os.str();
}

}  // namespace detail

// entries used by the fingerprint table: two-valued parameters on both
// branches, field parameters at a fixed sample
inline std::vector<SampleInstance> fingerprint_grid(std::string_view selector) {
    std::vector<SampleInstance> out;
    for (const auto& e : catalog_entries()) {
        if (!selector_matches(selector, e.id)) continue;
        std::vector<std::map<std::string, Rational>> grids = {{}};
        for (const auto& spec : e.params) {
            std::vector<Rational> vals;
            if (spec.dimension)
                vals = {rat(2), rat(3)};
            else if (spec.two_valued)
                vals = {rat(0), rat(-1)};
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

inline RunReport cmd_verify(std::string_view selector, const ScalarDomain& dom,
                            bool with_fingerprint = true,
                            const std::optional<std::map<std::string, Rational>>& params =
                                std::nullopt) {
    detail::Stopwatch timer;
    std::vector<SampleInstance> instances;
    if (params) {
        // explicit parameters select a single instance of one entry
        bool known = false;
        for (const auto& e : catalog_entries()) known = known || e.id == selector;
        if (!known) throw usage_error("unknown catalog id: " + std::string(selector));
        instances.push_back({std::string(selector), *params});
    } else {
        instances = sampling_grid(selector);
    }
    if (instances.empty()) throw usage_error("selector matches no catalog entry: " +
                                             std::string(selector));
    RunReport report;
    report.command = "verify " + std::string(selector);
    report.items.resize(instances.size());
    parallel_for(instances.size(), [&](std::size_t k) {
        const auto& inst = instances[k];
        // fingerprints are informative only for small n; the battery itself
        // runs everywhere
        bool fp = with_fingerprint && inst.id != "Example1";
        EntryReport rep = verify_entry(inst, dom, fp);
        RunItem item;
        item.name = inst.display();
        item.pass = rep.passed();
        std::ostringstream os;
        os << "rb=" << (rep.rb_ok ? "ok" : "FAIL") << " nil=" << rep.nilindex
           << " skew=" << (rep.skew ? "yes" : "no");
        if (rep.fp) os << " " << detail::fingerprint_summary(*rep.fp);
        if (!rep.rb_ok && rep.rb_failure) os << " first failure " << rep.rb_failure->to_string();
        item.detail = os.str();
        Json payload;
        payload["rb"] = rep.rb_ok;
        payload["nilindex"] = rep.nilindex;
        payload["skew"] = rep.skew;
        payload["factorial"] = rep.factorial_ok;
        payload["unitImageNilpotent"] = rep.unit_image_nilpotent;
        if (rep.fp) payload["fingerprint"] = fingerprint_to_json(*rep.fp);
        item.payload = std::move(payload);
        report.items[k] = std::move(item);
    });
    report.seconds = timer.seconds();
    return report;
}

inline RunReport cmd_fingerprint(std::string_view selector) {
    detail::Stopwatch timer;
    auto instances = fingerprint_grid(selector);
    if (instances.empty()) throw usage_error("selector matches no catalog entry: " +
                                             std::string(selector));
    RunReport report;
    report.command = "fingerprint " + std::string(selector);
    std::vector<Fingerprint> fps(instances.size());
    std::vector<RunItem> items(instances.size());
    parallel_for(instances.size(), [&](std::size_t k) {
        const auto& inst = instances[k];
        auto op = build_operator_q(inst.id, inst.params);
        fps[k] = fingerprint(op);
        RunItem item;
        item.name = inst.display();
        item.detail = detail::fingerprint_summary(fps[k]);
        item.payload = fingerprint_to_json(fps[k]);
        auto [im, ker] = image_and_kernel(op);
        item.payload["imageBasis"] = subspace_to_json(im);
        item.payload["kernelBasis"] = subspace_to_json(ker);
        items[k] = std::move(item);
    });
    report.items = std::move(items);

    // pairwise distinctness matrix over the table
    Json matrix = Json::array();
    std::ostringstream table;
    for (std::size_t i = 0; i < fps.size(); ++i) {
        Json row = Json::array();
        std::string line;
        for (std::size_t j = 0; j < fps.size(); ++j) {
            bool same = fps[i] == fps[j];
            row.push_back(same);
            line += same ? '=' : '.';
        }
        matrix.push_back(std::move(row));
        table << instances[i].display() << "  " << line << "\n";
    }
    RunItem m;
    m.name = "pairwise-distinctness";
    m.detail = "\n" + table.str();
    m.payload = std::move(matrix);
    report.items.push_back(std::move(m));
    report.seconds = timer.seconds();
    return report;
}

inline RunReport cmd_claims() {
    detail::Stopwatch timer;
    RunReport report;
    report.command = "claims";
    for (const auto& c : mapping_claims()) report.items.push_back({c.name, c.pass, c.detail, {}});
    for (const auto& c : nilindex_partition_claims(false))
        report.items.push_back({c.name, c.pass, c.detail, {}});
    // the narrow literal class list is kept as a claim; machine verification
    // shows it omits five kappa = 0 families, so these rows are expected to
    // fail and document the discrepancy
    for (const auto& c : nilindex_partition_claims(true))
        report.items.push_back({c.name, c.pass, c.detail, {}});
    for (const auto& c : graded_restriction_claims())
        report.items.push_back({c.name, c.pass, c.detail, {}});
    // displayed relation groups over every fitted classified assignment
    {
        OperatorTemplate t = make_template("section4-21par");
        std::vector<std::pair<std::string, Assignment>> fits;
        for (const auto& inst : sampling_grid("Q*")) {
            if (inst.id == "Q1") continue;
            auto fit = fit_template(build_operator_q(inst.id, inst.params), t);
            if (!fit) {
                report.items.push_back({inst.display() + " template fit", false, "no fit", {}});
                continue;
            }
            fits.emplace_back(inst.display(), std::move(fit->sigma));
        }
        for (const auto& c : relation_group_check(fits))
            report.items.push_back({c.name, c.pass, c.detail, {}});
    }
    report.seconds = timer.seconds();
    return report;
}

inline RunReport cmd_derive(std::string_view template_id, const std::optional<Json>& check,
                            const ScalarDomain& dom) {
    detail::Stopwatch timer;
    if (template_id != "section3" && template_id != "section4-21par" &&
        template_id != "section4-stage1")
        throw usage_error("unknown template id: " + std::string(template_id));
    OperatorTemplate t = make_template(template_id);
    QuadraticSystem sys = generate_system(t);
    RunReport report;
    report.command = "derive " + std::string(template_id);
    RunItem dump;
    dump.name = std::string(template_id);
    dump.detail = std::to_string(sys.equations.size()) + " equations over " +
                  std::to_string(t.ring.size()) + " variables";
    Json payload;
    payload["template"] = template_to_json(t);
    payload["system"] = system_to_json(sys);
    dump.payload = std::move(payload);
    report.items.push_back(std::move(dump));

    if (check) {
        std::vector<Json> assignments;
        if (check->is_array())
            for (const auto& a : *check) assignments.push_back(a);
        else
            assignments.push_back(*check);
        for (std::size_t k = 0; k < assignments.size(); ++k) {
            Assignment sigma = assignment_from_json(assignments[k], dom);
            for (const auto& name : t.ring.names())
                if (!sigma.count(name)) sigma.emplace(name, Scalar(dom));
            auto rep = substitute_solution(sys, sigma, dom);
            RunItem item;
            item.name = "assignment " + std::to_string(k);
            item.pass = rep.all_zero;
            if (!rep.all_zero)
                item.detail = "first nonzero equation: " +
                              sys.equations[*rep.first_nonzero].poly.to_string() + " from " +
                              sys.equations[*rep.first_nonzero].pair.to_string();
            Json p;
            p["allZero"] = rep.all_zero;
            if (rep.first_nonzero) p["firstNonzero"] = *rep.first_nonzero;
            item.payload = std::move(p);
            report.items.push_back(std::move(item));
        }
    }
    report.seconds = timer.seconds();
    return report;
}

// "psi(1,1/2)", "phi(0,0,-1,-1)", "theta13", "theta12*T", "transpose",
// "inner:[[...],[...],[...]]"
inline AutoDescriptor descriptor_from_spec(std::string_view spec, const ScalarDomain& dom) {
    std::string s(spec);
    if (s.rfind("inner:", 0) == 0) {
        Json j = Json::parse(s.substr(6));
        int n = static_cast<int>(j.size());
        Matrix<Scalar> a = Matrix<Scalar>::zero(n, Scalar(dom));
        for (int i = 0; i < n; ++i)
            for (int c = 0; c < n; ++c)
                a.at(i, c) = Scalar::parse(j[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]
                                              .get<std::string>(),
                                          dom);
        return AutoDescriptor(a, false, "inner");
    }
    auto open = s.find('(');
    if (open == std::string::npos) return build_automorphism(s, ParamMap{}, dom);
    if (s.back() != ')') throw usage_error("malformed automorphism spec: " + s);
    std::string name = s.substr(0, open);
    std::string argstr = s.substr(open + 1, s.size() - open - 2);
    std::vector<Scalar> args;
    std::size_t pos = 0;
    while (pos <= argstr.size()) {
        auto comma = argstr.find(',', pos);
        std::string tok = argstr.substr(pos, comma == std::string::npos ? argstr.npos : comma - pos);
        if (!tok.empty()) args.push_back(Scalar::parse(tok, dom));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (name == "psi") {
        if (args.size() != 2) throw usage_error("psi expects (r, s)");
        return build_automorphism("psi", ParamMap{{"r", args[0]}, {"s", args[1]}}, dom);
    }
    if (name == "phi") {
        if (args.size() != 4) throw usage_error("phi expects (alpha, beta, lambda, delta)");
        return build_automorphism("phi",
                                  ParamMap{{"alpha", args[0]},
                                           {"beta", args[1]},
                                           {"lambda", args[2]},
                                           {"delta", args[3]}},
                                  dom);
    }
    throw usage_error("unknown automorphism spec: " + s);
}

inline RunReport cmd_conjugate(const LinearOperator<Scalar>& op, std::string_view by_spec) {
    detail::Stopwatch timer;
    AutoDescriptor psi = descriptor_from_spec(by_spec, op.exemplar().domain());
    auto result = conjugate(op, psi);
    RunReport report;
    report.command = "conjugate " + std::string(by_spec);
    RunItem item;
    item.name = "conjugate";
    item.pass = true;
    item.detail = rb_check(result).ok ? "result satisfies the identity"
                                      : "result violates the identity";
    item.payload = operator_to_json(result);
    report.items.push_back(std::move(item));
    report.seconds = timer.seconds();
    return report;
}

inline RunReport cmd_manifest() {
    detail::Stopwatch timer;
    RunReport report;
    report.command = "manifest";
    RunItem item;
    item.name = "catalog";
    item.detail = std::to_string(catalog_entries().size()) + " entries";
    item.payload = manifest_to_json();
    report.items.push_back(std::move(item));
    report.seconds = timer.seconds();
    return report;
}

}  // namespace rbmat
