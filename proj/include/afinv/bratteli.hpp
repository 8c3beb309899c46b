#pragma once

// Ordered K0 of stationary Bratteli systems x_{n+1} = A x_n, identification of the
// limit with scaled localizations r Z[1/S] of Q, and the rational multipliers induced
// by ladder morphisms between such systems.
//
// Normalization: for a rank-one form with left Perron vector v (vA = λv),
//     val_n(x) = λ^{-n} (v·x) / (v·1).
// Multipliers depend on this choice; equivalence verdicts do not.

#include "afinv/matrix.hpp"
#include "afinv/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace afinv {

struct StationarySystem {
    IntMatrix matrix;
    std::vector<std::string> labels;
};

/// Throws InvalidInput unless the matrix is square, nonempty and nonnegative.
void validate(const StationarySystem& sys);

struct RankOneForm {
    Integer lambda;
    std::vector<Integer> left_vector;  // primitive, nonnegative, vA = λv
    std::vector<std::int64_t> primes;  // primes dividing λ
};

struct DirectSumForm {
    std::vector<RankOneForm> blocks;
    std::vector<std::vector<std::size_t>> partition;  // basis indices of each block
};

struct OpaquePresentation {
    IntMatrix matrix;
};

/// The subgroup scale * Z[1/primes] of Q with positive cone its nonnegative part.
struct ScaledLocalization {
    Rational scale;
    std::vector<std::int64_t> primes;

    bool operator==(const ScaledLocalization&) const = default;
};

struct K0Description {
    std::variant<RankOneForm, DirectSumForm, OpaquePresentation> form;
    IntMatrix matrix;          // the system the description was computed from
    std::size_t limit_rank = 0;

    bool is_rank_one() const { return std::holds_alternative<RankOneForm>(form); }
    const RankOneForm& rank_one() const { return std::get<RankOneForm>(form); }
    std::string variant_name() const;
    /// Sorted prime sets of the rank-one summands (one entry for rank-one, one per block
    /// for direct sums, empty for opaque presentations).
    std::vector<std::vector<std::int64_t>> prime_sets() const;
};

K0Description stationary_k0(const StationarySystem& sys);
std::size_t limit_rank(const StationarySystem& sys);

/// Attempts the rank-one identification of a single square system.
std::optional<RankOneForm> rank_one_form(const IntMatrix& a);

ScaledLocalization localization(const RankOneForm& form);

/// val_level(x). Throws InvalidInput on a length mismatch.
Rational value_map(const RankOneForm& form, std::int64_t level, const std::vector<Integer>& x);

/// q with val_Q(Mx) = q val_P(x), when both sides are rank-one, M intertwines the
/// two systems (A_Q M = M A_P) and v_Q M is proportional to v_P. Throws InvalidInput
/// on a shape mismatch.
std::optional<Rational> morphism_multiplier(const K0Description& p, const K0Description& q, const IntMatrix& m);

/// R A = B R, S B = A S, S R = A^lag, R S = B^lag with nonnegative integer R, S.
struct ShiftEquivalence {
    IntMatrix r;
    IntMatrix s;
    std::size_t lag = 0;
};

/// Exhaustive search for a shift equivalence with lag <= lag_bound and entries <= entry_bound.
/// An empty result is inconclusive. `max_candidates` caps the enumeration size per lag.
std::optional<ShiftEquivalence> shift_equivalent_bounded(const IntMatrix& a, const IntMatrix& b,
                                                         std::size_t lag_bound, std::int64_t entry_bound,
                                                         std::uint64_t max_candidates = 5'000'000);

bool verify_shift_equivalence(const IntMatrix& a, const IntMatrix& b, const ShiftEquivalence& w);

} // namespace afinv
