#pragma once

// Finite-dimensional crossed products C(G/K) ⋊ H computed from orbits and stabilizers
// alone, and twisted group algebras C_mu[H]. Used as an independent count of the simple
// bimodules between two Q-systems.

#include "afinv/abelian.hpp"

#include <vector>

namespace afinv {

struct CrossedBlock {
    std::size_t orbit = 0;  // index into CrossedProductBlocks::orbits
    Subgroup stabilizer;
    Character character;
    std::size_t matrix_size = 0;
};

struct CrossedProductBlocks {
    Subgroup acting;                  // H
    Subgroup fibre;                   // K, so that X = G/K
    std::vector<Coset> points;        // X
    std::vector<std::vector<std::size_t>> orbits;  // indices into points
    std::vector<CrossedBlock> blocks;
};

/// Blocks of C(G/K) ⋊ H with trivial twist. Throws InvalidInput if H or K is not a subgroup of G.
CrossedProductBlocks crossed_product_blocks(const FiniteAbelianGroup& group, const Subgroup& k, const Subgroup& h);

std::size_t k0_rank(const CrossedProductBlocks& b);

/// Sum of squared block sizes.
std::size_t algebra_dimension(const CrossedProductBlocks& b);

/// u_a u_b = exp(2 pi i phase[a][b]) u_{a+b}, indices as in domain.elements().
struct TwistedGroupAlgebra {
    Subgroup domain;
    std::vector<std::vector<Rational>> phase;
    std::vector<std::vector<std::size_t>> product;  // index of a+b

    bool associative() const;
    bool commutative() const;
    /// Dimension of the center.
    std::size_t center_dimension() const;
};

/// Throws InvalidInput unless the table is a normalized 2-cocycle.
TwistedGroupAlgebra twisted_group_algebra(const CocycleTable& mu);

} // namespace afinv
