#pragma once

#include <span>
#include <vector>

#include "pcpeq/instance.hpp"
#include "pcpeq/morphism.hpp"

/// Equalisers of marked free monoid morphisms, by iterated block reduction.
namespace pcpeq::monoid {

/// At most one block per codomain letter, in codomain letter order. g and h
/// may have different domains but must share a codomain and be marked.
///
/// For a start letter the search follows the overhang: the suffix by which
/// one side's image leads the other. Markedness leaves at most one generator
/// able to extend the lagging side, and a repeated (side, overhang) state
/// means no block exists.
std::vector<Block> compute_blocks(const Morphism& g, const Morphism& h);

/// I = (Sigma, Delta, g, h) -> I' = (Sigma', Sigma, g', h') with one fresh
/// generator p0, p1, ... per block.
ReductionStep reduce_instance(const Instance& instance);

/// Marked morphism psi with image(psi) = Eq(g, h).
EqualiserResult solve_pair(const Instance& instance);

/// Marked morphism psi with image(psi) = Eq(S). Requires |S| >= 2.
EqualiserResult solve_set(std::span<const Morphism> maps);

} // namespace pcpeq::monoid
