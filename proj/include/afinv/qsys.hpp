#pragma once

// Q-systems in Hilb(G) for finite abelian G with trivial associator, their simple
// bimodules, explicit graded models of those bimodules, and the relative tensor
// product (fusion) that composes them.

#include "afinv/abelian.hpp"
#include "afinv/cyclotomic.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace afinv {

/// A connected Q-system (H, mu); realized as the group algebra C[H] when mu is trivial.
struct QSystem {
    Subgroup subgroup;
    CocycleTable cocycle;

    std::size_t dimension() const { return subgroup.order(); }
    bool operator==(const QSystem& other) const { return subgroup == other.subgroup; }
};

/// Untwisted Q-system on a subgroup.
QSystem make_qsystem(const Subgroup& h);

struct QSystemList {
    std::vector<QSystem> systems;
    /// False when some subgroup is non-cyclic: twisted Morita classes then exist and are not listed.
    bool complete = true;
    std::vector<std::string> warnings;
};

/// One representative per subgroup, in canonical subgroup order (the trivial Q-system first).
QSystemList qsystems(const FiniteAbelianGroup& group, std::size_t max_order = kDefaultMaxGroupOrder);

/// An irreducible H-K bimodule: a coset of H+K and a character of the stabilizer H∩K,
/// where t in H∩K acts through u_t ▷ x ◁ u_{-t}.
struct SimpleBimodule {
    Subgroup source;  // acts on the left
    Subgroup target;  // acts on the right
    Coset coset;
    Character character;

    std::size_t dimension() const { return coset.members.size(); }

    using Key = std::tuple<std::vector<Elem>, std::vector<Elem>, Elem, std::vector<std::int64_t>>;
    Key key() const {
        return {source.elements(), target.elements(), coset.rep, character.unit_values()};
    }
    bool operator==(const SimpleBimodule& other) const { return key() == other.key(); }
    bool operator<(const SimpleBimodule& other) const;
};

/// Throws InvalidInput when the coset or character does not fit the pair (H, K).
SimpleBimodule make_simple(const Subgroup& source, const Subgroup& target, Elem coset_element,
                           const Character& character);

/// [G : H+K] * |H∩K| simples ordered by coset representative, then character.
std::vector<SimpleBimodule> simple_bimodules(const QSystem& h, const QSystem& k);
SimpleBimodule identity_bimodule(const QSystem& h);
/// The conjugate K-H bimodule (-Γ, conj(χ)).
SimpleBimodule dual(const SimpleBimodule& s);

/// A monomial matrix whose column j has a single entry zeta_e^phase[j] in row target[j].
struct MonomialMatrix {
    std::int64_t order = 1;
    std::vector<std::size_t> target;
    std::vector<std::int64_t> phase;

    std::size_t size() const { return target.size(); }
    CyclotomicNumber coefficient(std::size_t column) const {
        return CyclotomicNumber::power_of_zeta(phase[column], order);
    }
    /// this ∘ other.
    MonomialMatrix compose(const MonomialMatrix& other) const;
    bool operator==(const MonomialMatrix& other) const {
        return order == other.order && target == other.target && phase == other.phase;
    }
};

/// Induced-module model of a simple bimodule: basis vectors u_h ▷ v ◁ u_k indexed by
/// lexicographically least representatives (h, k) of (H x K)/Stab.
struct ExplicitBimoduleModel {
    SimpleBimodule simple;
    std::vector<std::pair<Elem, Elem>> basis;
    Elem base_point = 0;
    std::vector<Elem> grading;
    std::vector<MonomialMatrix> left_action;   // indexed like simple.source.elements()
    std::vector<MonomialMatrix> right_action;  // indexed like simple.target.elements()

    std::size_t size() const { return basis.size(); }
    const MonomialMatrix& left(Elem h) const { return left_action[simple.source.index_of(h)]; }
    const MonomialMatrix& right(Elem k) const { return right_action[simple.target.index_of(k)]; }
};

/// Model based at the coset representative.
ExplicitBimoduleModel realize(const SimpleBimodule& s);
/// Model based at an arbitrary point of the coset (throws InvalidInput otherwise).
ExplicitBimoduleModel realize(const SimpleBimodule& s, Elem base_point);
/// Throws UnsupportedFeature if either Q-system carries a nontrivial cocycle.
ExplicitBimoduleModel realize(const QSystem& source, const QSystem& target, const SimpleBimodule& s);

struct FusionTerm {
    SimpleBimodule simple;
    std::int64_t multiplicity = 0;

    bool operator==(const FusionTerm& other) const {
        return multiplicity == other.multiplicity && simple == other.simple;
    }
};
/// Nonzero terms in canonical simple order.
using FusionResult = std::vector<FusionTerm>;

/// S1 ⊠_K S2 for S1: H -> K and S2: K -> L, by exact idempotent traces.
/// Throws InvalidComposition on a middle mismatch and InternalConsistency if a
/// multiplicity is not a nonnegative integer or dimensions are not conserved.
FusionResult fuse(const SimpleBimodule& s1, const SimpleBimodule& s2);
FusionResult fuse_models(const ExplicitBimoduleModel& x, const ExplicitBimoduleModel& y);

/// Appendix-style display name M_{i-j,k}^l, with i, j the 1-based positions of the
/// subgroups in canonical order.
std::string bimodule_label(const SimpleBimodule& s, const std::vector<Subgroup>& ordered_subgroups);

/// All simples between all representative Q-systems and every composable product.
class FusionTable {
public:
    using Product = std::vector<std::pair<std::size_t, std::int64_t>>;

    FusionTable(const FiniteAbelianGroup& group, std::size_t max_order = kDefaultMaxGroupOrder);

    const FiniteAbelianGroup& group() const { return group_; }
    const QSystemList& qsystem_list() const { return qsystems_; }
    const std::vector<QSystem>& qsystems() const { return qsystems_.systems; }
    const std::vector<Subgroup>& subgroups() const { return subgroups_; }
    const std::vector<SimpleBimodule>& simples() const { return simples_; }

    std::size_t qsystem_index(const Subgroup& h) const;
    std::size_t source_qsystem(std::size_t simple) const { return source_of_[simple]; }
    std::size_t target_qsystem(std::size_t simple) const { return target_of_[simple]; }
    /// Indices of simples H -> K, in simple_bimodules order.
    const std::vector<std::size_t>& between(std::size_t source_q, std::size_t target_q) const;
    /// Throws InvalidInput if s is not a simple of this table.
    std::size_t index_of(const SimpleBimodule& s) const;
    std::string label(std::size_t simple) const;
    std::string qsystem_name(std::size_t q) const { return "Q" + std::to_string(q + 1); }

    bool composable(std::size_t i, std::size_t j) const { return target_of_[i] == source_of_[j]; }
    /// Throws InvalidComposition if the pair is not composable.
    const Product& product(std::size_t i, std::size_t j) const;
    /// Multiplicity of `k` in product(i, j).
    std::int64_t multiplicity(std::size_t i, std::size_t j, std::size_t k) const;
    std::size_t product_count() const { return products_.size(); }

    std::size_t identity_index(std::size_t q) const;

private:
    FiniteAbelianGroup group_;
    QSystemList qsystems_;
    std::vector<Subgroup> subgroups_;
    std::vector<SimpleBimodule> simples_;
    std::vector<std::size_t> source_of_;
    std::vector<std::size_t> target_of_;
    std::vector<std::vector<std::vector<std::size_t>>> between_;
    std::map<SimpleBimodule::Key, std::size_t> index_;
    std::map<std::pair<std::size_t, std::size_t>, Product> products_;
};

/// Memoized per group; the returned table is immutable and shared.
std::shared_ptr<const FusionTable> fusion_table(const FiniteAbelianGroup& group,
                                                std::size_t max_order = kDefaultMaxGroupOrder);

/// Independent floating-point evaluation of the same multiplicities with dense complex
/// matrices. Throws OracleFailure when a value is not within 1e-6 of a nonnegative integer.
FusionResult float_oracle_fuse(const SimpleBimodule& s1, const SimpleBimodule& s2);

/// Multiset equality of fusion results.
bool same_multiset(const FusionResult& a, const FusionResult& b);

} // namespace afinv
