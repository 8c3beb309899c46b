#pragma once

// Isomorphism of pointed invariants. A witness assigns each representative a positive
// rational u_Q with u_Q f1(m) = f2(m) u_P for every simple m: P -> Q, u_{1_C} pointed1 =
// pointed2, and u_Q r1 / r2 an S-unit. Negative verdicts rest only on limit ranks, prime
// sets, and exact contradictions among these equations.

#include "afinv/invariant.hpp"

#include <optional>
#include <string>
#include <vector>

namespace afinv {

enum class VerdictKind { Equivalent, Inequivalent, Unknown };

struct Certificate {
    std::size_t object = 0;
    std::string object_name;
    std::string kind;  // rank, prime-set, constraint-inconsistency, unit-obstruction, pointed-obstruction
    std::string details;
};

struct Verdict {
    VerdictKind kind = VerdictKind::Unknown;
    std::vector<Rational> witness;  // per object, when equivalent
    std::optional<Certificate> certificate;
    std::string reason;  // when unknown

    std::string name() const;
    int exit_code() const;
};

/// Throws InvalidInput when the invariants live over different groups or representative lists.
Verdict compare(const InvariantData& a, const InvariantData& b);

bool verify_witness(const InvariantData& a, const InvariantData& b, const std::vector<Rational>& witness);

} // namespace afinv
