#pragma once

#include "afinv/errors.hpp"
#include "afinv/invariant.hpp"

#include <map>
#include <string>
#include <vector>

namespace afinv::testing {

using Multiset = std::map<std::size_t, std::int64_t>;

inline Multiset as_multiset(const FusionTable::Product& p) {
    Multiset m;
    for (const auto& [k, n] : p) {
        m[k] += n;
    }
    return m;
}

/// (sum_k m_k Z_k) ⊠ c, expanded through the table.
inline Multiset right_compose(const FusionTable& t, const Multiset& left, std::size_t c) {
    Multiset out;
    for (const auto& [k, m] : left) {
        for (const auto& [j, n] : t.product(k, c)) {
            out[j] += m * n;
        }
    }
    return out;
}

inline Multiset left_compose(const FusionTable& t, std::size_t a, const Multiset& right) {
    Multiset out;
    for (const auto& [k, m] : right) {
        for (const auto& [j, n] : t.product(a, k)) {
            out[j] += m * n;
        }
    }
    return out;
}

inline std::size_t by_label(const FusionTable& t, const std::string& label) {
    for (std::size_t i = 0; i < t.simples().size(); ++i) {
        if (t.label(i) == label) {
            return i;
        }
    }
    throw InvalidInput("no simple labelled " + label);
}

inline std::vector<std::pair<std::size_t, std::int64_t>> all_between(const FusionTable& t, std::size_t q,
                                                                      std::int64_t multiplicity = 1) {
    std::vector<std::pair<std::size_t, std::int64_t>> out;
    for (auto i : t.between(q, q)) {
        out.emplace_back(i, multiplicity);
    }
    return out;
}

/// The homogeneous Z/4 diagrams with all-ones weights: F on Q1, G on Q2, H on Q3 (every
/// endomorphism simple once), and E on Q3 with the identity edge four times.
inline EnrichedBratteliDiagram z4_diagram(char name) {
    const auto g = make_group({4});
    const auto t = fusion_table(g);
    switch (name) {
    case 'F':
        return homogeneous_diagram(g, 0, all_between(*t, 0));
    case 'G':
        return homogeneous_diagram(g, 1, all_between(*t, 1));
    case 'H':
        return homogeneous_diagram(g, 2, all_between(*t, 2));
    default:
        return homogeneous_diagram(g, 2, {{t->identity_index(2), 4}});
    }
}

inline std::vector<FiniteAbelianGroup> small_groups(std::size_t max_order) {
    const std::vector<std::vector<std::int64_t>> all = {
        {1}, {2}, {3}, {4}, {5}, {6}, {7}, {8}, {9}, {10}, {11}, {12}, {2, 2}, {2, 4}, {2, 2, 2}, {3, 3}, {2, 6},
    };
    std::vector<FiniteAbelianGroup> out;
    for (const auto& f : all) {
        FiniteAbelianGroup g(f);
        if (g.order() <= max_order) {
            out.push_back(g);
        }
    }
    return out;
}

} // namespace afinv::testing
