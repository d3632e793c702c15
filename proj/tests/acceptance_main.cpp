// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout, zero tolerances.  Exit status is nonzero when any criterion
// fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "rbmat/claims.hpp"
#include "rbmat/json_io.hpp"
#include "rbmat/parallel.hpp"
#include "rbmat/verify.hpp"

using namespace rbmat;

namespace {

const ScalarDomain Q = ScalarDomain::rationals();

Matrix<Scalar> random_invertible(SplitMix64& rng, int n) {
    Matrix<Scalar> a = Matrix<Scalar>::identity(n, Scalar(Q));
    static const Rational coefs[] = {rat(1), rat(-1), rat(2), rat(-2), rat(1, 2), rat(3)};
    for (int step = 0; step < 2 * n; ++step) {
        int i = static_cast<int>(rng.range(0, n - 1));
        int j = static_cast<int>(rng.range(0, n - 1));
        if (i == j) continue;
        Matrix<Scalar> t = Matrix<Scalar>::identity(n, Scalar(Q));
        t.at(i, j) = Scalar::from_rational(coefs[rng.range(0, 5)], Q);
        a = a * t;
    }
    Matrix<Scalar> d = Matrix<Scalar>::identity(n, Scalar(Q));
    static const Rational scales[] = {rat(1), rat(2), rat(1, 2), rat(-1), rat(3)};
    for (int i = 0; i < n; ++i) d.at(i, i) = Scalar::from_rational(scales[rng.range(0, 4)], Q);
    return a * d;
}

// the catalog enumeration the criteria quantify over
std::vector<SampleInstance> acceptance_instances() {
    std::vector<SampleInstance> out;
    for (const char* sel : {"L1", "L2", "L3", "L4"})
        for (auto& i : sampling_grid(sel)) out.push_back(std::move(i));
    for (auto& i : sampling_grid("Q*")) out.push_back(std::move(i));
    for (auto& i : sampling_grid("R*")) out.push_back(std::move(i));
    for (auto& i : sampling_grid("Example1")) out.push_back(std::move(i));
    return out;
}

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void fail(const std::string& note) {
        pass = false;
        notes.push_back(note);
    }
    void note(const std::string& note) { notes.push_back(note); }
};

// ---- criterion 1: every catalog entry satisfies the identity, fast ----
Outcome criterion1() {
    Outcome out;
    auto instances = acceptance_instances();
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> failures(instances.size());
    parallel_for(instances.size(), [&](std::size_t k) {
        auto op = build_operator_q(instances[k].id, instances[k].params);
        auto rep = rb_check(op);
        if (!rep.ok)
            failures[k] = instances[k].display() + " fails at " + rep.first_failure->to_string();
    });
    for (const auto& f : failures)
        if (!f.empty()) out.fail(f);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.note(std::to_string(instances.size()) + " instances verified in " + std::to_string(secs) +
             " s");
    if (secs >= 10.0) out.fail("runtime bound of 10 s exceeded");
    return out;
}

// ---- criterion 2: the literal nilindex-class partition ----
Outcome criterion2() {
    Outcome out;
    for (const auto& c : nilindex_partition_claims(true))
        if (!c.pass) out.fail(c.name + ": " + c.detail);
    // cross-check: the partition matching the classification's own case
    // analysis does hold; the narrow literal class list is the only divergence
    bool corrected_ok = true;
    for (const auto& c : nilindex_partition_claims(false)) corrected_ok = corrected_ok && c.pass;
    out.note(std::string("corrected partition (Q19_0, Q21_0, Q22_0, Q23_0, Q24_0 moved ") +
             "to the R^2 = 0 class): " + (corrected_ok ? "holds" : "violated"));
    if (!corrected_ok) out.fail("corrected partition violated");
    return out;
}

// ---- criterion 3: maximal-index family ----
Outcome criterion3() {
    Outcome out;
    for (long long n = 2; n <= 6; ++n) {
        auto op = build_operator_q("Example1", {{"n", rat(n)}});
        auto idx = nilpotency_index(op, 2 * static_cast<int>(n) + 1);
        if (!idx || *idx != 2 * n - 1)
            out.fail("Example1(n=" + std::to_string(n) + ") has nilindex " +
                     std::to_string(idx ? *idx : -1) + ", expected " + std::to_string(2 * n - 1));
    }
    if (build_operator_q("Example1", {{"n", rat(2)}}) != build_operator_q("L4"))
        out.fail("Example1(2) differs from (L4)");
    return out;
}

// ---- criterion 4: propositions battery ----
Outcome criterion4() {
    Outcome out;
    auto instances = acceptance_instances();
    std::vector<std::string> failures(instances.size());
    parallel_for(instances.size(), [&](std::size_t k) {
        const auto& inst = instances[k];
        std::ostringstream bad;
        auto op = build_operator_q(inst.id, inst.params);
        auto [im, ker] = image_and_kernel(op);
        if (!closure_check(im)) bad << "image not a subalgebra; ";
        if (!bimodule_check(im, ker)) bad << "kernel not a bimodule; ";
        for (long long a : {2LL, -1LL, 7LL})
            if (!rb_check(scale(op, Scalar::from_int(a, Q))).ok)
                bad << "scaling by " << a << " breaks the identity; ";
        SplitMix64 rng(0xacce97edUL ^ (k * 0x9e3779b9UL));
        for (int c = 0; c < 100; ++c) {
            AutoDescriptor psi(random_invertible(rng, op.n()));
            if (!rb_check(conjugate(op, psi)).ok) {
                bad << "conjugation " << c << " breaks the identity; ";
                break;
            }
        }
        for (int kk = 1; kk <= 4; ++kk)
            if (!factorial_unit_check(op, kk))
                bad << "unit-power identity fails at k=" << kk << "; ";
        if (!op.is_zero() && !matrix_nilindex(unit_image(op))) bad << "R(1) not nilpotent; ";
        failures[k] = bad.str().empty() ? "" : inst.display() + ": " + bad.str();
    });
    for (const auto& f : failures)
        if (!f.empty()) out.fail(f);
    out.note(std::to_string(instances.size()) +
             " instances x (subalgebra, bimodule, 3 scalings, 100 conjugations, unit powers)");
    return out;
}

// ---- criterion 5: the skew-symmetric list ----
Outcome criterion5() {
    Outcome out;
    for (int k = 1; k <= 8; ++k) {
        auto op = build_operator_q("R" + std::to_string(k));
        if (!skew_symmetric_check(op)) out.fail("R" + std::to_string(k) + " is not trace-skew");
        bool unit_zero = unit_image(op).is_zero();
        if ((k == 1) != unit_zero)
            out.fail("R" + std::to_string(k) + " has unexpected unit image");
    }
    int claim_count = 0;
    for (const auto& c : mapping_claims()) {
        if (c.name.rfind("(R", 0) != 0) continue;
        ++claim_count;
        if (!c.pass) out.fail(c.name + ": " + c.detail);
    }
    out.note(std::to_string(claim_count) + " conjugacy claims checked image-by-image");
    return out;
}

// ---- criterion 6: section-3 checkpoints and the normalization chain ----
Outcome criterion6() {
    Outcome out;
    for (const auto& r : section3_checkpoints())
        if (!r.pass) out.fail(r.name + ": " + r.detail);
    for (const auto& c : mapping_claims()) {
        if (c.name.rfind("stage chain", 0) != 0) continue;
        if (!c.pass) out.fail(c.name + ": " + c.detail);
    }
    return out;
}

// ---- criterion 7: fit-and-substitute over the 21-parameter stage ----
Outcome criterion7() {
    Outcome out;
    OperatorTemplate t = make_template("section4-21par");
    QuadraticSystem sys = generate_system(t);
    auto groups = relation_groups(t.ring);
    auto quads = case1_quadratics(t.ring);
    auto linears = case1_linear(t.ring);
    std::vector<SampleInstance> instances;
    for (auto& inst : sampling_grid("Q*"))
        if (inst.id != "Q1") instances.push_back(std::move(inst));
    std::vector<std::string> failures(instances.size());
    parallel_for(instances.size(), [&](std::size_t k) {
        const auto& inst = instances[k];
        std::ostringstream bad;
        auto op = build_operator_q(inst.id, inst.params);
        auto fit = fit_template(op, t);
        if (!fit) {
            failures[k] = inst.display() + ": no template fit";
            return;
        }
        auto rep = substitute_solution(sys, fit->sigma, Q);
        if (!rep.all_zero)
            bad << "system residual " << sys.equations[*rep.first_nonzero].poly.to_string()
                << " nonzero; ";
        for (const auto& g : groups)
            for (const auto& r : g.rows)
                for (const auto& c : g.cols)
                    if (!(r * c).eval(fit->sigma, Q).is_zero()) bad << g.name << " violated; ";
        if (!fit->sigma.at("b13").is_zero()) {
            auto norm = case1_normalize(op, t);
            for (const auto& q : quads)
                if (!q.eval(norm.sigma, norm.domain).is_zero())
                    bad << "case-1 quadratic " << q.to_string() << " nonzero; ";
            for (const auto& l : linears)
                if (!l.eval(norm.sigma, norm.domain).is_zero())
                    bad << "case-1 relation " << l.to_string() << " nonzero; ";
        }
        failures[k] = bad.str().empty() ? "" : inst.display() + ": " + bad.str();
    });
    for (const auto& f : failures)
        if (!f.empty()) out.fail(f);
    out.note(std::to_string(instances.size()) + " fitted assignments against " +
             std::to_string(sys.equations.size()) + " equations");
    return out;
}

// ---- criterion 8: fingerprint separation and invariance ----
Outcome criterion8() {
    Outcome out;
    auto reps = representative_instances();
    std::vector<Fingerprint> fps(reps.size());
    parallel_for(reps.size(), [&](std::size_t k) {
        fps[k] = fingerprint(build_operator_q(reps[k].id, reps[k].params));
    });
    std::map<std::string, Fingerprint> by_name;
    for (std::size_t k = 0; k < reps.size(); ++k) by_name.emplace(reps[k].display(), fps[k]);
    auto fp_of = [&](const std::string& name) -> const Fingerprint& {
        auto it = by_name.find(name);
        if (it == by_name.end()) throw error("missing representative " + name);
        return it->second;
    };

    // named separations
    auto without_kernondeg = [](Fingerprint f) {
        f.ker_contains_nondegenerate = false;
        return f.key();
    };
    for (auto [a, b] : {std::pair<const char*, const char*>{"Q6[kappa=0,mu=-1]", "Q9[kappa=0]"},
                        std::pair<const char*, const char*>{"Q8[kappa=0]", "Q7"}}) {
        const Fingerprint& fa = fp_of(a);
        const Fingerprint& fb = fp_of(b);
        if (fa.ker_contains_nondegenerate == fb.ker_contains_nondegenerate)
            out.fail(std::string(a) + " vs " + b + ": kernel nondegeneracy does not separate");
        if (without_kernondeg(fa) != without_kernondeg(fb))
            out.fail(std::string(a) + " vs " + b +
                     ": fields other than kernel nondegeneracy differ");
    }
    if (fp_of("Q19[kappa=0]").image_profile.sym_key() ==
        fp_of("Q21[kappa=0]").image_profile.sym_key())
        out.fail("Q19[kappa=0] vs Q21[kappa=0]: image profiles coincide");
    if (fp_of("Q13[kappa=0]").idempotent_ranks == fp_of("Q13[kappa=-1]").idempotent_ranks)
        out.fail("Q13[kappa=0] vs Q13[kappa=-1]: idempotent ranks coincide");

    // distinctness matches the case analysis exactly: equal keys only for
    // pairs the proof separates by witness-level arguments
    std::vector<std::set<std::string>> same_classes = {
        {"Q3[alpha=2,kappa=0]", "Q4[kappa=0]", "Q5[beta=2,kappa=0]"},
        {"Q3[alpha=2,kappa=-1]", "Q4[kappa=-1]", "Q5[beta=2,kappa=-1]"},
        {"Q15[kappa=-1]", "Q18", "Q20", "Q21[kappa=-1]"},
        {"Q17", "Q19[kappa=-1]"},
        {"Q22[kappa=0,mu=0]", "Q22[kappa=0,mu=-1]"},
        {"Q22[kappa=-1,mu=0]", "Q22[kappa=-1,mu=-1]"},
        {"Q23[gamma=2,kappa=0]", "Q24[kappa=0]"},
        {"Q23[gamma=2,kappa=-1]", "Q24[kappa=-1]"},
    };
    auto same_class = [&](const std::string& a, const std::string& b) {
        for (const auto& cls : same_classes)
            if (cls.count(a) && cls.count(b)) return true;
        return false;
    };
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            bool equal = fps[i] == fps[j];
            bool expected_equal = same_class(reps[i].display(), reps[j].display());
            if (equal != expected_equal)
                out.fail(reps[i].display() + " vs " + reps[j].display() +
                         (equal ? ": unexpectedly identical fingerprints"
                                : ": expected witness-level-only separation"));
        }

    // invariance under conjugation and scaling
    std::vector<std::string> inv_failures(reps.size());
    parallel_for(reps.size(), [&](std::size_t k) {
        auto op = build_operator_q(reps[k].id, reps[k].params);
        SplitMix64 rng(0xf1d0UL ^ (k * 0x517cc1b727220a95UL));
        for (int c = 0; c < 100; ++c) {
            AutoDescriptor psi(random_invertible(rng, 3));
            if (fingerprint(conjugate(op, psi)) != fps[k]) {
                inv_failures[k] = reps[k].display() + ": conjugation changed the fingerprint";
                return;
            }
        }
        for (const Rational& a : {rat(-5, 3), rat(7)})
            if (fingerprint(scale(op, Scalar::from_rational(a, Q))) != fps[k])
                inv_failures[k] = reps[k].display() + ": scaling changed the fingerprint";
    });
    for (const auto& f : inv_failures)
        if (!f.empty()) out.fail(f);

    // the one-parameter family ratio comes back exactly
    for (const Rational& g : {rat(0), rat(2), rat(5)})
        for (const Rational& kpa : {rat(0), rat(-1)}) {
            auto op = build_operator_q("Q23", {{"kappa", kpa}, {"gamma", g}});
            auto ratio = central_radical_ratio(op);
            if (!ratio || *ratio != Scalar::from_rational(g, Q))
                out.fail("central ratio of Q23[gamma=" + rational_to_string(g) +
                         "] did not return gamma");
        }
    out.note(std::to_string(reps.size()) + " representatives, 100 conjugations each");
    return out;
}

// ---- criterion 9: solver soundness ----
Outcome criterion9() {
    Outcome out;
    SplitMix64 rng(0x5eed50f7);
    for (const char* id : {"section3", "section4-21par", "section4-stage1"}) {
        OperatorTemplate t = make_template(id);
        QuadraticSystem sys = generate_system(t);
        for (int k = 0; k < 50; ++k) {
            Assignment sigma;
            for (const auto& name : t.ring.names()) {
                Scalar val = rng.range(0, 3) == 0
                                 ? Scalar::from_rational(rat(rng.range(-2, 2), rng.range(1, 2)), Q)
                                 : Scalar(Q);
                sigma.emplace(name, val);
            }
            bool zero = substitute_solution(sys, sigma, Q).all_zero;
            bool rb = rb_check(instantiate(t, sigma, Q)).ok;
            if (zero != rb) {
                out.fail(std::string(id) + " sample " + std::to_string(k) +
                         ": substitution and identity disagree");
                return out;
            }
        }
    }
    out.note("150 random assignments, no counterexample");
    return out;
}

}  // namespace

int main() {
    struct Entry {
        int num;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Entry> criteria = {
        {1, "identity verification across the catalog (runtime < 10 s)", criterion1},
        {2, "literal nilindex-class partition", criterion2},
        {3, "maximal-index family bound and its n = 2 instance", criterion3},
        {4, "propositions battery (subalgebra, bimodule, scaling, conjugation, unit powers)",
         criterion4},
        {5, "skew-symmetric list and conjugacy claims", criterion5},
        {6, "stage-3 residual checkpoints and normalization chain", criterion6},
        {7, "fit-and-substitute across the 21-parameter stage", criterion7},
        {8, "fingerprint separation, invariance, and family ratio", criterion8},
        {9, "solver soundness (substitution iff identity)", criterion9},
    };

    int failures = 0;
    auto total0 = std::chrono::steady_clock::now();
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %d: %s - %s (%.2f s)\n", c.num, out.pass ? "PASS" : "FAIL", c.title,
                    secs);
        for (const auto& n : out.notes) std::printf("    %s\n", n.c_str());
        if (!out.pass) ++failures;
        std::fflush(stdout);
    }
    double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - total0).count();
    std::printf("%d/9 criteria passed in %.2f s\n", 9 - failures, total);
    return failures == 0 ? 0 : 1;
}
