#pragma once

// Pointed invariant of an AF-action presented by an enriched Bratteli diagram: one K0
// description per representative Q-system, one multiplier per simple bimodule between
// representatives, and the value of the generator class.
//
// Edge orientation: an edge from level-n vertex v to level-(n+1) vertex w carries a
// Q_w-Q_v bimodule B, and the connecting map on hom(Q_v -> P) is x |-> B ⊠ x.

#include "afinv/bratteli.hpp"
#include "afinv/qsys.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace afinv {

struct DiagramEdge {
    std::size_t from_vertex = 0;  // position in levels[n]
    std::size_t to_vertex = 0;    // position in levels[n+1]
    std::size_t bimodule = 0;     // simple index in the group's fusion table
    std::int64_t multiplicity = 1;
};

/// levels[n] lists representative Q-system indices; edges[n] connects levels[n] and
/// levels[n+1]. The last transition repeats forever, so the final two levels must agree.
struct EnrichedBratteliDiagram {
    FiniteAbelianGroup group;
    std::vector<std::vector<std::size_t>> levels;
    std::vector<std::vector<DiagramEdge>> edges;
    /// Weights over the level-0 hom basis of the trivial Q-system; empty means all ones.
    std::vector<Integer> generator_weights;
};

/// Single vertex with a self-loop transition.
EnrichedBratteliDiagram homogeneous_diagram(const FiniteAbelianGroup& group, std::size_t vertex,
                                            const std::vector<std::pair<std::size_t, std::int64_t>>& edge,
                                            std::vector<Integer> generator_weights = {});

/// Throws InvalidInput describing the first violated condition.
void validate(const EnrichedBratteliDiagram& d, const FusionTable& table);

/// Hom basis of P at vertex v: the simple v -> P bimodules, as fusion-table indices.
std::vector<std::size_t> hom_basis(const FusionTable& table, std::size_t p, std::size_t v);

/// Connecting matrices of the diagram computing the value at P.
struct ObjectDiagram {
    std::vector<std::vector<std::size_t>> basis;  // per level, fusion-table simple indices
    std::vector<IntMatrix> transitions;           // transitions[n]: level n -> level n+1

    /// The repeating tail matrix.
    const IntMatrix& tail() const { return transitions.back(); }
    /// Images of level-0 vectors at the first tail level.
    std::vector<Integer> push_to_tail(std::vector<Integer> x) const;
};

ObjectDiagram object_diagram(const EnrichedBratteliDiagram& d, const FusionTable& table, std::size_t p);

/// Per-level matrices of L^X: x |-> x ⊠ X for X: P -> Q. Throws InternalConsistency
/// if they fail to intertwine the two object diagrams.
std::vector<IntMatrix> morphism_matrices(const EnrichedBratteliDiagram& d, const FusionTable& table,
                                         std::size_t x, const ObjectDiagram& p_diagram,
                                         const ObjectDiagram& q_diagram);

struct InvariantData {
    FiniteAbelianGroup group;
    std::vector<std::string> object_names;
    std::vector<K0Description> objects;
    /// r in r Z[1/S] for rank-one objects, otherwise empty.
    std::vector<std::optional<Rational>> scales;

    std::vector<std::string> morphism_labels;
    std::vector<std::size_t> morphism_source;
    std::vector<std::size_t> morphism_target;
    std::vector<std::optional<Rational>> multipliers;
    std::vector<IntMatrix> morphism_tail_matrices;

    std::vector<Integer> pointed_vector;  // generator class at the first tail level of 1_C
    std::optional<Rational> pointed_value;

    bool operator==(const InvariantData& other) const;
};

/// Value of the generator weights on the object diagram of the trivial Q-system.
std::optional<Rational> pointed_class(const EnrichedBratteliDiagram& d, const FusionTable& table);

/// Throws InternalConsistency if a rank-one multiplier table violates a fusion relation.
InvariantData compute_invariant(const EnrichedBratteliDiagram& d, std::size_t max_order = kDefaultMaxGroupOrder);

/// Changes the value normalization of object Q by factors[Q] > 0: multipliers of m: P -> Q
/// become factors[Q]/factors[P] times the old ones, scales and the pointed value follow.
InvariantData renormalized(const InvariantData& inv, const std::vector<Rational>& factors);

} // namespace afinv
