#pragma once

#include <cstddef>
#include <span>

#include <boost/multiprecision/cpp_int.hpp>

#include "pcpeq/instance.hpp"
#include "pcpeq/morphism.hpp"

namespace pcpeq {

using BigCount = boost::multiprecision::cpp_int;

/// Number of distinct nonempty proper prefixes of the images of g, plus the
/// same count for h. Group mode takes images of Sigma and Sigma^-1; monoid
/// mode takes images of Sigma.
std::size_t prefix_complexity(const Instance& instance);

/// Upper bound on the number of distinct instances reachable by reduction:
/// (2|Delta|)^(2|Sigma|(sigma+1)) for groups, (|Delta|+1)^(...) for monoids.
BigCount iteration_bound(const Instance& instance);
BigCount iteration_bound(Mode mode, std::size_t delta_size, std::size_t sigma_size,
                         std::size_t prefix_complexity);

} // namespace pcpeq

/// Equalisers of immersions of free groups, by iterated core-graph reduction.
namespace pcpeq::group {

/// I -> I' = (Sigma', Sigma, g', h') read off the petals of Core(g, h).
ReductionStep reduce_group_instance(const Instance& instance);

/// Immersion psi with image(psi) = Eq(g, h).
EqualiserResult solve_pair(const Instance& instance);

/// Immersion psi with image(psi) = Eq(S). Requires |S| >= 2.
EqualiserResult solve_set(std::span<const Morphism> maps);

} // namespace pcpeq::group
