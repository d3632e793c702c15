#pragma once

#include "rbmat/claims.hpp"
#include "rbmat/solver.hpp"

namespace rbmat {

// Full per-entry battery: the defining identity, nilpotency index, trace
// skew-symmetry, the unit-image power identity, and (over Q) the fingerprint.
struct EntryReport {
    SampleInstance instance;
    bool rb_ok = false;
    std::optional<UnitPair> rb_failure;
    int nilindex = -1;
    bool skew = false;
    bool factorial_ok = false;
    bool unit_image_nilpotent = false;
    std::optional<Fingerprint> fp;

    bool passed() const { return rb_ok && factorial_ok && unit_image_nilpotent; }
};

inline EntryReport verify_entry(const SampleInstance& inst, const ScalarDomain& dom,
                                bool with_fingerprint = true) {
    EntryReport rep;
    rep.instance = inst;
    auto op = build_operator(inst.id, params_from_rationals(inst.params, dom), dom);
    auto rb = rb_check(op);
    rep.rb_ok = rb.ok;
    rep.rb_failure = rb.first_failure;
    auto idx = nilpotency_index(op, 2 * op.n() + 1);
    rep.nilindex = idx ? *idx : -1;
    rep.skew = skew_symmetric_check(op);
    rep.factorial_ok = true;
    for (int k = 1; k <= 4; ++k) rep.factorial_ok = rep.factorial_ok && factorial_unit_check(op, k);
    rep.unit_image_nilpotent = op.is_zero() || matrix_nilindex(unit_image(op)).has_value();
    if (with_fingerprint && dom.kind() == DomainKind::Rationals)
        rep.fp = fingerprint(op);
    return rep;
}

}  // namespace rbmat
