#include "afinv/crossed.hpp"

#include "afinv/cyclotomic.hpp"
#include "afinv/errors.hpp"

#include <algorithm>

namespace afinv {

CrossedProductBlocks crossed_product_blocks(const FiniteAbelianGroup& group, const Subgroup& k, const Subgroup& h) {
    if (!(k.parent() == group) || !(h.parent() == group)) {
        throw InvalidInput("crossed product data must live in the given group");
    }
    CrossedProductBlocks out;
    out.acting = h;
    out.fibre = k;
    out.points = coset_space(group, k);
    const std::size_t n = out.points.size();
    auto point_of = [&](Elem g) {
        const Elem rep = coset_of(k, g).rep;
        for (std::size_t i = 0; i < n; ++i) {
            if (out.points[i].rep == rep) {
                return i;
            }
        }
        throw InternalConsistency("coset not found");
    };
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) {
            continue;
        }
        std::vector<std::size_t> orbit;
        std::vector<Elem> stab;
        for (auto x : h.elements()) {
            const auto j = point_of(group.add(x, out.points[i].rep));
            if (j == i) {
                stab.push_back(x);
            }
            if (!seen[j]) {
                seen[j] = true;
                orbit.push_back(j);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        const Subgroup stabilizer(group, stab);
        const std::size_t index = out.orbits.size();
        out.orbits.push_back(orbit);
        for (const auto& chi : dual_characters(stabilizer)) {
            out.blocks.push_back(CrossedBlock{index, stabilizer, chi, orbit.size()});
        }
    }
    return out;
}

std::size_t k0_rank(const CrossedProductBlocks& b) { return b.blocks.size(); }

std::size_t algebra_dimension(const CrossedProductBlocks& b) {
    std::size_t total = 0;
    for (const auto& blk : b.blocks) {
        total += blk.matrix_size * blk.matrix_size;
    }
    return total;
}

TwistedGroupAlgebra twisted_group_algebra(const CocycleTable& mu) {
    if (!validate_2cocycle(mu)) {
        throw InvalidInput("table is not a normalized 2-cocycle");
    }
    TwistedGroupAlgebra out;
    out.domain = mu.domain;
    const auto& els = mu.domain.elements();
    const auto& group = mu.domain.parent();
    for (auto a : els) {
        std::vector<Rational> prow;
        std::vector<std::size_t> irow;
        for (auto b : els) {
            prow.push_back(frac_mod1(mu.at(a, b)));
            irow.push_back(mu.domain.index_of(group.add(a, b)));
        }
        out.phase.push_back(std::move(prow));
        out.product.push_back(std::move(irow));
    }
    return out;
}

bool TwistedGroupAlgebra::associative() const {
    const std::size_t n = phase.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                // (u_a u_b) u_c versus u_a (u_b u_c).
                const Rational left = phase[a][b] + phase[product[a][b]][c];
                const Rational right = phase[b][c] + phase[a][product[b][c]];
                if (product[product[a][b]][c] != product[a][product[b][c]] || frac_mod1(left - right) != 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool TwistedGroupAlgebra::commutative() const { return center_dimension() == phase.size(); }

std::size_t TwistedGroupAlgebra::center_dimension() const {
    // z = sum c_a u_a commutes with u_b iff c_a (zeta^{mu(a,b)} - zeta^{mu(b,a)}) = 0 for all a,
    // because a -> a+b permutes the basis.
    std::int64_t e = 1;
    for (const auto& row : phase) {
        for (const auto& p : row) {
            e = lcm_int(e, static_cast<std::int64_t>(denominator(p)));
        }
    }
    const std::size_t n = phase.size();
    std::size_t dim = 0;
    for (std::size_t a = 0; a < n; ++a) {
        bool central = true;
        for (std::size_t b = 0; b < n && central; ++b) {
            central = (root_of_unity(phase[a][b], e) - root_of_unity(phase[b][a], e)).is_zero();
        }
        dim += central ? 1 : 0;
    }
    return dim;
}

} // namespace afinv
