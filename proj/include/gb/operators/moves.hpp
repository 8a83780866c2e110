#pragma once

#include <array>
#include <string_view>

#include "gb/core/genotype.hpp"
#include "gb/core/rng.hpp"

namespace gb {
class Problem;
}

namespace gb::ops {

// Neighborhood moves. Intra variants act inside one route; Inter variants
// relocate or exchange across routes and only apply to routed genotypes.
enum class MoveKind {
    TwoOpt,
    ThreeOpt,
    VertexInsertionIntra,
    VertexInsertionInter,
    SwapIntra,
    SwapInter,
};

std::string_view to_string(MoveKind kind);
MoveKind move_kind_from_string(std::string_view name);

// Reverses the inclusive segment [i..j]. Both positions must lie inside one
// route (no separator in between); i == j is the identity.
Genotype two_opt(const Genotype& g, int i, int j);

// Non-identity 3-opt reconnection count.
inline constexpr int kThreeOptVariants = 7;

// Cuts (c1 < c2 < c3) split one route segment into B = (c1..c2] and
// C = (c2..c3]; elements outside (c1..c3] stay fixed. Variants 1..7 apply the
// non-identity reconnections {B'C, BC', B'C', CB, CB', C'B, C'B'} (primes are
// reversals). A variant that happens to reproduce the input (degenerate
// reversal of a single element) is rejected with InvalidMoveError.
Genotype three_opt(const Genotype& g, std::array<int, 3> cuts, int variant);

// Removes the element at `from` and reinserts it so that it lands at index
// `to` of the shortened sequence. Same-route target = intra, different route
// = inter relocation.
Genotype vertex_insertion(const Genotype& g, int from, int to);

// Exchanges the labels at positions a and b (both non-separators).
Genotype swap_nodes(const Genotype& g, int a, int b);

// Applies `kind` with uniformly random legal arguments. Returns the input
// unchanged when the genotype admits no such move (engines count that as a
// non-improving successor). `context` supplies cluster information for
// clustered problems, whose inter-route moves relocate whole clusters so that
// cluster-to-route unity is never broken.
Genotype apply_random_move(const Genotype& g, MoveKind kind, RngStream& rng,
                           const Problem* context = nullptr);

}  // namespace gb::ops
