#include "afinv/equivalence.hpp"

#include "afinv/errors.hpp"

#include <deque>

namespace afinv {

std::string Verdict::name() const {
    switch (kind) {
    case VerdictKind::Equivalent:
        return "equivalent";
    case VerdictKind::Inequivalent:
        return "inequivalent";
    default:
        return "unknown";
    }
}

int Verdict::exit_code() const {
    switch (kind) {
    case VerdictKind::Equivalent:
        return 0;
    case VerdictKind::Inequivalent:
        return 3;
    default:
        return 4;
    }
}

namespace {

void check_compatible(const InvariantData& a, const InvariantData& b) {
    if (!(a.group == b.group)) {
        throw InvalidInput("invariants are over different groups");
    }
    if (a.object_names != b.object_names || a.morphism_labels != b.morphism_labels ||
        a.morphism_source != b.morphism_source || a.morphism_target != b.morphism_target) {
        throw InvalidInput("invariants use different representative or morphism lists");
    }
}

std::string primes_text(const std::vector<std::int64_t>& ps) {
    std::string s = "{";
    for (std::size_t i = 0; i < ps.size(); ++i) {
        s += (i ? "," : "") + std::to_string(ps[i]);
    }
    return s + "}";
}

std::string prime_sets_text(const std::vector<std::vector<std::int64_t>>& sets) {
    std::string s;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        s += (i ? " ⊕ " : "") + primes_text(sets[i]);
    }
    return s.empty() ? "?" : s;
}

Verdict inequivalent(const InvariantData& a, std::size_t object, std::string kind, std::string details) {
    Verdict v;
    v.kind = VerdictKind::Inequivalent;
    v.certificate = Certificate{object, a.object_names[object], std::move(kind), std::move(details)};
    return v;
}

Verdict unknown(std::string reason) {
    Verdict v;
    v.kind = VerdictKind::Unknown;
    v.reason = std::move(reason);
    return v;
}

bool s_unit_ok(const InvariantData& a, const InvariantData& b, std::size_t q, const Rational& u) {
    const auto& primes = a.objects[q].rank_one().primes;
    return a.scales[q] && b.scales[q] && is_s_unit(u * *a.scales[q] / *b.scales[q], primes);
}

} // namespace

Verdict compare(const InvariantData& a, const InvariantData& b) {
    check_compatible(a, b);
    const std::size_t n = a.objects.size();

    for (std::size_t q = 0; q < n; ++q) {
        const auto ra = a.objects[q].limit_rank;
        const auto rb = b.objects[q].limit_rank;
        if (ra != rb) {
            return inequivalent(a, q, "rank", std::to_string(ra) + "≠" + std::to_string(rb));
        }
        const bool opaque = a.objects[q].prime_sets().empty() || b.objects[q].prime_sets().empty();
        if (!opaque && a.objects[q].prime_sets() != b.objects[q].prime_sets()) {
            return inequivalent(a, q, "prime-set",
                                prime_sets_text(a.objects[q].prime_sets()) + "≠" +
                                    prime_sets_text(b.objects[q].prime_sets()));
        }
    }

    if (a == b) {
        Verdict v;
        v.kind = VerdictKind::Equivalent;
        v.witness.assign(n, Rational(1));
        return v;
    }

    for (std::size_t q = 0; q < n; ++q) {
        if (!a.objects[q].is_rank_one() || !b.objects[q].is_rank_one()) {
            return unknown(a.object_names[q] + " is not identified with a localization of Z (" +
                           a.objects[q].variant_name() + " vs " + b.objects[q].variant_name() + ")");
        }
    }
    for (std::size_t m = 0; m < a.multipliers.size(); ++m) {
        if (!a.multipliers[m] || !b.multipliers[m]) {
            return unknown("no scalar multiplier for " + a.morphism_labels[m]);
        }
    }

    // u_target f1 = f2 u_source, propagated from u_0 = 1 and rescaled by pointedness below.
    std::vector<std::optional<Rational>> u(n);
    u[0] = Rational(1);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const auto cur = queue.front();
        queue.pop_front();
        for (std::size_t m = 0; m < a.multipliers.size(); ++m) {
            const auto p = a.morphism_source[m];
            const auto q = a.morphism_target[m];
            const auto& f1 = *a.multipliers[m];
            const auto& f2 = *b.multipliers[m];
            if (p == cur && !u[q] && f1 != 0 && f2 != 0) {
                u[q] = f2 * *u[p] / f1;
                queue.push_back(q);
            } else if (q == cur && !u[p] && f1 != 0 && f2 != 0) {
                u[p] = f1 * *u[q] / f2;
                queue.push_back(p);
            }
        }
    }
    for (std::size_t q = 0; q < n; ++q) {
        if (!u[q]) {
            return unknown(a.object_names[q] + " is not connected to " + a.object_names[0] +
                           " by nonzero multipliers");
        }
    }
    for (std::size_t m = 0; m < a.multipliers.size(); ++m) {
        const auto p = a.morphism_source[m];
        const auto q = a.morphism_target[m];
        if (*u[q] * *a.multipliers[m] != *b.multipliers[m] * *u[p]) {
            return inequivalent(a, q, "constraint-inconsistency",
                                "naturality fails for " + a.morphism_labels[m] + ": " +
                                    to_string(*a.multipliers[m]) + " vs " + to_string(*b.multipliers[m]));
        }
    }

    if (!a.pointed_value || !b.pointed_value) {
        return unknown("pointed value is not rational");
    }
    const auto& pa = *a.pointed_value;
    const auto& pb = *b.pointed_value;
    if (pa == 0 || pb == 0) {
        if (pa == pb) {
            return unknown("pointed value vanishes");
        }
        return inequivalent(a, 0, "pointed-obstruction", to_string(pa) + " vs " + to_string(pb));
    }
    const Rational scale = pb / pa;
    std::vector<Rational> witness;
    for (std::size_t q = 0; q < n; ++q) {
        witness.push_back(*u[q] * scale);
    }
    for (std::size_t q = 0; q < n; ++q) {
        const std::string kind = q == 0 ? "pointed-obstruction" : "unit-obstruction";
        if (witness[q] <= 0) {
            return inequivalent(a, q, kind, "u = " + to_string(witness[q]) + " is not positive");
        }
        if (!s_unit_ok(a, b, q, witness[q])) {
            return inequivalent(a, q, kind,
                                "u = " + to_string(witness[q]) + " does not map " + to_string(*a.scales[q]) +
                                    "Z[1/S] onto " + to_string(*b.scales[q]) + "Z[1/S]");
        }
    }
    if (!verify_witness(a, b, witness)) {
        throw InternalConsistency("computed witness fails verification");
    }
    Verdict v;
    v.kind = VerdictKind::Equivalent;
    v.witness = std::move(witness);
    return v;
}

bool verify_witness(const InvariantData& a, const InvariantData& b, const std::vector<Rational>& witness) {
    check_compatible(a, b);
    const std::size_t n = a.objects.size();
    if (witness.size() != n) {
        return false;
    }
    for (const auto& w : witness) {
        if (w <= 0) {
            return false;
        }
    }
    std::vector<bool> rank_one(n);
    for (std::size_t q = 0; q < n; ++q) {
        rank_one[q] = a.objects[q].is_rank_one() && b.objects[q].is_rank_one();
        if (rank_one[q]) {
            if (a.objects[q].rank_one().primes != b.objects[q].rank_one().primes || !s_unit_ok(a, b, q, witness[q])) {
                return false;
            }
        } else if (!(a.objects[q].matrix == b.objects[q].matrix) || witness[q] != 1) {
            // Without an identification only the identity on identical presentations is checkable.
            return false;
        }
    }
    for (std::size_t m = 0; m < a.multipliers.size(); ++m) {
        const auto p = a.morphism_source[m];
        const auto q = a.morphism_target[m];
        if (rank_one[p] && rank_one[q]) {
            if (!a.multipliers[m] || !b.multipliers[m] ||
                witness[q] * *a.multipliers[m] != *b.multipliers[m] * witness[p]) {
                return false;
            }
        } else if (!(a.morphism_tail_matrices[m] == b.morphism_tail_matrices[m]) || witness[p] != 1 ||
                   witness[q] != 1) {
            return false;
        }
    }
    if (rank_one[0]) {
        return a.pointed_value && b.pointed_value && witness[0] * *a.pointed_value == *b.pointed_value;
    }
    return a.pointed_vector == b.pointed_vector;
}

} // namespace afinv
