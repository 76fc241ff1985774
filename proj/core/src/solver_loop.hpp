#pragma once

#include <functional>
#include <span>

#include "pcpeq/group_pcp.hpp"
#include "pcpeq/instance.hpp"

namespace pcpeq::detail {

using ReduceFn = std::function<ReductionStep(const Instance&)>;

/// Reduces until one of: empty alphabet, a single generator, all images of
/// length one, or a repeated canonical instance. psi is the trail composed
/// down to the input alphabet and restricted to the basis generators.
EqualiserResult solve_by_reduction(const Instance& input, const ReduceFn& reduce);

using PairSolver = std::function<EqualiserResult(const Instance&)>;
using IntersectFn = std::function<IntersectionStep(const Morphism&, const Morphism&)>;

/// Eq(S) = Eq(S \ {g}) and Eq(g, h), the intersection taken with the k-map.
EqualiserResult solve_set_by_induction(std::span<const Morphism> maps, const PairSolver& pair,
                                       const IntersectFn& intersect);

} // namespace pcpeq::detail
