#pragma once

// Finite abelian groups G = Z/m1 x ... x Z/mr, their subgroups, cosets and
// Q/Z-valued characters. Elements are addressed by a mixed-radix code whose
// numeric order agrees with the lexicographic order of the reduced vectors.

#include "afinv/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace afinv {

using Elem = std::uint32_t;
using ElementVector = std::vector<std::int64_t>;

inline constexpr std::size_t kDefaultMaxGroupOrder = 512;

class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<std::int64_t>{1}) {}
    /// Throws InvalidInput if any factor is <= 0 or the order does not fit in 32 bits.
    explicit FiniteAbelianGroup(std::vector<std::int64_t> cyclic_factors);

    const std::vector<std::int64_t>& cyclic_factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    std::int64_t exponent() const { return exponent_; }
    std::size_t order() const { return order_; }

    Elem identity() const { return 0; }
    Elem add(Elem a, Elem b) const;
    Elem negate(Elem a) const;
    Elem subtract(Elem a, Elem b) const { return add(a, negate(b)); }
    Elem multiple(Elem a, std::int64_t n) const;
    std::int64_t element_order(Elem a) const;

    ElementVector to_vector(Elem a) const;
    /// Reduces each coordinate mod its factor. Throws InvalidInput on length mismatch.
    Elem encode(const ElementVector& v) const;
    /// "[1]" or "[1,0]".
    std::string format(Elem a) const;

    bool operator==(const FiniteAbelianGroup& other) const { return factors_ == other.factors_; }

private:
    std::vector<std::int64_t> factors_;
    std::vector<std::uint32_t> stride_;
    std::int64_t exponent_ = 1;
    std::size_t order_ = 1;
};

FiniteAbelianGroup make_group(const std::vector<std::int64_t>& cyclic_factors);

class Subgroup {
public:
    Subgroup() = default;
    /// `elements` must be closed; it is sorted and deduplicated here.
    Subgroup(FiniteAbelianGroup parent, std::vector<Elem> elements);

    const FiniteAbelianGroup& parent() const { return parent_; }
    const std::vector<Elem>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(Elem a) const { return a < member_.size() && member_[a]; }
    /// Position of `a` in elements(); throws InvalidInput if absent.
    std::size_t index_of(Elem a) const;
    bool is_subgroup_of(const Subgroup& other) const;

    bool operator==(const Subgroup& other) const {
        return parent_ == other.parent_ && elements_ == other.elements_;
    }
    /// Canonical order: by order, then lexicographically on the element list.
    bool operator<(const Subgroup& other) const;

private:
    FiniteAbelianGroup parent_;
    std::vector<Elem> elements_;
    std::vector<bool> member_;
};

Subgroup closure(const FiniteAbelianGroup& group, const std::vector<Elem>& generators);
Subgroup trivial_subgroup(const FiniteAbelianGroup& group);
Subgroup whole_group(const FiniteAbelianGroup& group);
Subgroup sum_subgroups(const Subgroup& h, const Subgroup& k);
Subgroup intersect(const Subgroup& h, const Subgroup& k);

/// All subgroups in canonical order. Throws ResourceLimit if |G| > max_order.
std::vector<Subgroup> subgroups(const FiniteAbelianGroup& group,
                                std::size_t max_order = kDefaultMaxGroupOrder);

/// Checks that `elements` contains 0 and is closed under + and -.
bool is_closed(const FiniteAbelianGroup& group, const std::vector<Elem>& elements);

/// A homomorphism H -> Q/Z. Values are kept exactly as numerators over exponent(G),
/// which is a common denominator of every character of every subgroup of G.
class Character {
public:
    Character() = default;
    /// Throws InvalidInput if the values do not define a homomorphism.
    Character(Subgroup domain, std::vector<std::int64_t> units);

    const Subgroup& domain() const { return domain_; }
    /// theta(x) * exponent(G), in [0, exponent).
    std::int64_t units(Elem x) const { return units_[domain_.index_of(x)]; }
    const std::vector<std::int64_t>& unit_values() const { return units_; }
    /// theta(x) in [0,1) as a reduced fraction.
    Rational theta(Elem x) const;
    bool is_trivial() const;

    Character conjugate() const;
    Character operator*(const Character& other) const;
    /// Restriction to a subgroup of the domain.
    Character restrict_to(const Subgroup& sub) const;

    bool operator==(const Character& other) const {
        return domain_ == other.domain_ && units_ == other.units_;
    }
    bool operator<(const Character& other) const { return units_ < other.units_; }

private:
    struct Unchecked {};
    Character(Subgroup domain, std::vector<std::int64_t> units, Unchecked)
        : domain_(std::move(domain)), units_(std::move(units)) {}
    friend std::vector<Character> dual_characters(const Subgroup& h);

    Subgroup domain_;
    std::vector<std::int64_t> units_;
};

Character trivial_character(const Subgroup& domain);

/// All |H| characters, ordered lexicographically on their value vectors.
std::vector<Character> dual_characters(const Subgroup& h);

struct Coset {
    Elem rep = 0;
    std::vector<Elem> members;

    bool operator==(const Coset& other) const { return members == other.members; }
};

/// Cosets of `d` in `group`, ordered by representative (the least member).
std::vector<Coset> coset_space(const FiniteAbelianGroup& group, const Subgroup& d);
Coset coset_of(const Subgroup& d, Elem g);

/// True iff h is cyclic, i.e. its Schur multiplier vanishes.
bool schur_trivial(const Subgroup& h);

struct CocycleTable {
    Subgroup domain;
    std::map<std::pair<Elem, Elem>, Rational> values;

    /// The zero table on domain x domain.
    static CocycleTable trivial(const Subgroup& domain);
    /// Throws InvalidInput if (a, b) is not in the table.
    Rational at(Elem a, Elem b) const;
    bool is_trivial() const;
};

/// True iff normalized and the 2-cocycle identity holds mod 1.
/// Throws InvalidInput if the table is not total on domain x domain.
bool validate_2cocycle(const CocycleTable& table);

} // namespace afinv
