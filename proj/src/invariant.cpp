#include "afinv/invariant.hpp"

#include "afinv/errors.hpp"

#include <algorithm>

namespace afinv {

EnrichedBratteliDiagram homogeneous_diagram(const FiniteAbelianGroup& group, std::size_t vertex,
                                            const std::vector<std::pair<std::size_t, std::int64_t>>& edge,
                                            std::vector<Integer> generator_weights) {
    EnrichedBratteliDiagram d;
    d.group = group;
    d.levels = {{vertex}, {vertex}};
    d.edges.emplace_back();
    for (const auto& [bimodule, multiplicity] : edge) {
        d.edges[0].push_back(DiagramEdge{0, 0, bimodule, multiplicity});
    }
    d.generator_weights = std::move(generator_weights);
    return d;
}

std::vector<std::size_t> hom_basis(const FusionTable& table, std::size_t p, std::size_t v) {
    return table.between(v, p);
}

namespace {

std::size_t level_zero_size(const EnrichedBratteliDiagram& d, const FusionTable& table) {
    std::size_t n = 0;
    for (auto v : d.levels[0]) {
        n += hom_basis(table, 0, v).size();
    }
    return n;
}

std::vector<Integer> effective_weights(const EnrichedBratteliDiagram& d, const FusionTable& table) {
    if (!d.generator_weights.empty()) {
        return d.generator_weights;
    }
    return std::vector<Integer>(level_zero_size(d, table), Integer(1));
}

} // namespace

void validate(const EnrichedBratteliDiagram& d, const FusionTable& table) {
    if (!(d.group == table.group())) {
        throw InvalidInput("diagram group does not match the fusion table");
    }
    const std::size_t reps = table.qsystems().size();
    if (d.levels.size() < 2) {
        throw InvalidInput("diagram needs at least two levels");
    }
    if (d.edges.size() + 1 != d.levels.size()) {
        throw InvalidInput("diagram needs one edge list per pair of adjacent levels");
    }
    if (d.levels[d.levels.size() - 2] != d.levels.back()) {
        throw InvalidInput("the repeating final transition must connect identical vertex lists");
    }
    for (std::size_t n = 0; n < d.levels.size(); ++n) {
        if (d.levels[n].empty()) {
            throw InvalidInput("level " + std::to_string(n) + " has no vertices");
        }
        for (auto v : d.levels[n]) {
            if (v >= reps) {
                throw InvalidInput("vertex refers to an unknown Q-system");
            }
        }
    }
    for (std::size_t n = 0; n < d.edges.size(); ++n) {
        std::vector<bool> reached(d.levels[n + 1].size(), false);
        for (const auto& e : d.edges[n]) {
            if (e.from_vertex >= d.levels[n].size() || e.to_vertex >= d.levels[n + 1].size()) {
                throw InvalidInput("edge endpoint out of range at level " + std::to_string(n));
            }
            if (e.bimodule >= table.simples().size()) {
                throw InvalidInput("edge refers to an unknown bimodule");
            }
            if (e.multiplicity < 1) {
                throw InvalidInput("edge multiplicity must be positive");
            }
            const auto from_q = d.levels[n][e.from_vertex];
            const auto to_q = d.levels[n + 1][e.to_vertex];
            if (table.source_qsystem(e.bimodule) != to_q || table.target_qsystem(e.bimodule) != from_q) {
                throw InvalidInput("edge bimodule " + table.label(e.bimodule) + " must be a " +
                                   table.qsystem_name(to_q) + "-" + table.qsystem_name(from_q) + " bimodule");
            }
            reached[e.to_vertex] = true;
        }
        if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
            throw InvalidInput("unreached vertex at level " + std::to_string(n + 1));
        }
    }
    if (!d.generator_weights.empty()) {
        if (d.generator_weights.size() != level_zero_size(d, table)) {
            throw InvalidInput("generator weights must cover the level-0 hom basis of the trivial Q-system");
        }
        std::size_t offset = 0;
        for (auto v : d.levels[0]) {
            const auto block = hom_basis(table, 0, v).size();
            bool positive = false;
            for (std::size_t i = offset; i < offset + block; ++i) {
                if (d.generator_weights[i] < 0) {
                    throw InvalidInput("generator weights must be nonnegative");
                }
                positive = positive || d.generator_weights[i] > 0;
            }
            if (!positive) {
                throw InvalidInput("generator weights vanish on a level-0 vertex");
            }
            offset += block;
        }
    }
}

std::vector<Integer> ObjectDiagram::push_to_tail(std::vector<Integer> x) const {
    for (std::size_t n = 0; n + 1 < transitions.size(); ++n) {
        x = transitions[n] * x;
    }
    return x;
}

ObjectDiagram object_diagram(const EnrichedBratteliDiagram& d, const FusionTable& table, std::size_t p) {
    ObjectDiagram out;
    std::vector<std::vector<std::size_t>> offsets;
    for (const auto& level : d.levels) {
        std::vector<std::size_t> basis;
        std::vector<std::size_t> offs;
        for (auto v : level) {
            offs.push_back(basis.size());
            const auto& hb = hom_basis(table, p, v);
            basis.insert(basis.end(), hb.begin(), hb.end());
        }
        out.basis.push_back(std::move(basis));
        offsets.push_back(std::move(offs));
    }
    for (std::size_t n = 0; n < d.edges.size(); ++n) {
        IntMatrix t(out.basis[n + 1].size(), out.basis[n].size());
        for (const auto& e : d.edges[n]) {
            const auto v = d.levels[n][e.from_vertex];
            const auto w = d.levels[n + 1][e.to_vertex];
            const auto& xs = hom_basis(table, p, v);
            const auto& ys = hom_basis(table, p, w);
            for (std::size_t a = 0; a < xs.size(); ++a) {
                for (const auto& [k, m] : table.product(e.bimodule, xs[a])) {
                    const auto pos = std::find(ys.begin(), ys.end(), k) - ys.begin();
                    t(offsets[n + 1][e.to_vertex] + static_cast<std::size_t>(pos), offsets[n][e.from_vertex] + a) +=
                        Integer(e.multiplicity) * Integer(m);
                }
            }
        }
        out.transitions.push_back(std::move(t));
    }
    return out;
}

std::vector<IntMatrix> morphism_matrices(const EnrichedBratteliDiagram& d, const FusionTable& table,
                                         std::size_t x, const ObjectDiagram& p_diagram,
                                         const ObjectDiagram& q_diagram) {
    const auto p = table.source_qsystem(x);
    const auto q = table.target_qsystem(x);
    std::vector<IntMatrix> out;
    for (std::size_t n = 0; n < d.levels.size(); ++n) {
        IntMatrix m(q_diagram.basis[n].size(), p_diagram.basis[n].size());
        std::size_t p_off = 0;
        std::size_t q_off = 0;
        for (auto v : d.levels[n]) {
            const auto& xs = hom_basis(table, p, v);
            const auto& ys = hom_basis(table, q, v);
            for (std::size_t a = 0; a < xs.size(); ++a) {
                for (const auto& [k, mult] : table.product(xs[a], x)) {
                    const auto pos = std::find(ys.begin(), ys.end(), k) - ys.begin();
                    m(q_off + static_cast<std::size_t>(pos), p_off + a) += Integer(mult);
                }
            }
            p_off += xs.size();
            q_off += ys.size();
        }
        out.push_back(std::move(m));
    }
    for (std::size_t n = 0; n + 1 < d.levels.size(); ++n) {
        if (!(out[n + 1] * p_diagram.transitions[n] == q_diagram.transitions[n] * out[n])) {
            throw InternalConsistency("morphism matrices of " + table.label(x) +
                                      " do not intertwine at level " + std::to_string(n));
        }
    }
    return out;
}

std::optional<Rational> pointed_class(const EnrichedBratteliDiagram& d, const FusionTable& table) {
    const auto diagram = object_diagram(d, table, 0);
    const auto k0 = stationary_k0(StationarySystem{diagram.tail(), {}});
    if (!k0.is_rank_one()) {
        return std::nullopt;
    }
    return value_map(k0.rank_one(), 0, diagram.push_to_tail(effective_weights(d, table)));
}

bool InvariantData::operator==(const InvariantData& other) const {
    if (!(group == other.group) || objects.size() != other.objects.size()) {
        return false;
    }
    for (std::size_t i = 0; i < objects.size(); ++i) {
        if (!(objects[i].matrix == other.objects[i].matrix)) {
            return false;
        }
    }
    return object_names == other.object_names && scales == other.scales &&
           morphism_labels == other.morphism_labels && morphism_source == other.morphism_source &&
           morphism_target == other.morphism_target && multipliers == other.multipliers &&
           morphism_tail_matrices == other.morphism_tail_matrices && pointed_vector == other.pointed_vector &&
           pointed_value == other.pointed_value;
}

InvariantData compute_invariant(const EnrichedBratteliDiagram& d, std::size_t max_order) {
    const auto table_ptr = fusion_table(d.group, max_order);
    const FusionTable& table = *table_ptr;
    validate(d, table);

    InvariantData inv;
    inv.group = d.group;
    const std::size_t reps = table.qsystems().size();
    std::vector<ObjectDiagram> diagrams;
    for (std::size_t p = 0; p < reps; ++p) {
        diagrams.push_back(object_diagram(d, table, p));
        inv.object_names.push_back(table.qsystem_name(p));
        inv.objects.push_back(stationary_k0(StationarySystem{diagrams.back().tail(), {}}));
        const auto& obj = inv.objects.back();
        inv.scales.push_back(obj.is_rank_one() ? std::optional<Rational>(localization(obj.rank_one()).scale)
                                               : std::nullopt);
    }
    for (std::size_t x = 0; x < table.simples().size(); ++x) {
        const auto p = table.source_qsystem(x);
        const auto q = table.target_qsystem(x);
        auto mats = morphism_matrices(d, table, x, diagrams[p], diagrams[q]);
        inv.morphism_labels.push_back(table.label(x));
        inv.morphism_source.push_back(p);
        inv.morphism_target.push_back(q);
        inv.multipliers.push_back(morphism_multiplier(inv.objects[p], inv.objects[q], mats.back()));
        inv.morphism_tail_matrices.push_back(std::move(mats.back()));
    }
    // Fusion relations: q(X) q(Y) = sum_k m_k q(Z_k) whenever all terms are known.
    for (std::size_t i = 0; i < table.simples().size(); ++i) {
        for (std::size_t j = 0; j < table.simples().size(); ++j) {
            if (!table.composable(i, j) || !inv.multipliers[i] || !inv.multipliers[j]) {
                continue;
            }
            Rational total = 0;
            bool known = true;
            for (const auto& [k, m] : table.product(i, j)) {
                if (!inv.multipliers[k]) {
                    known = false;
                    break;
                }
                total += Rational(m) * *inv.multipliers[k];
            }
            if (known && total != *inv.multipliers[i] * *inv.multipliers[j]) {
                throw InternalConsistency("multipliers violate the fusion relation for " + table.label(i) +
                                          " ⊠ " + table.label(j));
            }
        }
    }
    inv.pointed_vector = diagrams[0].push_to_tail(effective_weights(d, table));
    if (inv.objects[0].is_rank_one()) {
        inv.pointed_value = value_map(inv.objects[0].rank_one(), 0, inv.pointed_vector);
    }
    return inv;
}

InvariantData renormalized(const InvariantData& inv, const std::vector<Rational>& factors) {
    if (factors.size() != inv.objects.size()) {
        throw InvalidInput("one normalization factor per object is required");
    }
    for (const auto& f : factors) {
        if (f <= 0) {
            throw InvalidInput("normalization factors must be positive");
        }
    }
    InvariantData out = inv;
    for (std::size_t i = 0; i < out.scales.size(); ++i) {
        if (out.scales[i]) {
            *out.scales[i] = strip_primes(*out.scales[i] * factors[i], out.objects[i].rank_one().primes);
        }
    }
    for (std::size_t x = 0; x < out.multipliers.size(); ++x) {
        if (out.multipliers[x]) {
            *out.multipliers[x] *= factors[out.morphism_target[x]] / factors[out.morphism_source[x]];
        }
    }
    if (out.pointed_value) {
        *out.pointed_value *= factors[0];
    }
    return out;
}

} // namespace afinv
