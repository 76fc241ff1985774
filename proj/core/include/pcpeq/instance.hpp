#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "pcpeq/morphism.hpp"
#include "pcpeq/stallings.hpp"
#include "pcpeq/words.hpp"

namespace pcpeq {

/// (Sigma, Delta, g, h): two morphisms with a shared domain and codomain.
class Instance {
public:
    Instance(Morphism g, Morphism h);

    const Morphism& g() const { return g_; }
    const Morphism& h() const { return h_; }
    const Alphabet& sigma() const { return g_.domain(); }
    const Alphabet& delta() const { return g_.codomain(); }
    Mode mode() const { return g_.mode(); }

    bool operator==(const Instance&) const = default;

private:
    Morphism g_;
    Morphism h_;
};

/// Minimal pair (u, v) with g(u) = h(v) starting with `letter`.
struct Block {
    Letter letter;
    Word u;
    Word v;
};

/// One reduction I -> I'. The reduced instance's morphisms are g' and h';
/// its codomain is the previous domain.
struct ReductionStep {
    Instance before;
    Instance after;
    std::vector<Block> blocks;          // monoid reductions
    std::optional<StallingsGraph> core; // group reductions

    const Morphism& g_prime() const { return after.g(); }
    const Morphism& h_prime() const { return after.h(); }
};

/// Intersection of two marked/immersed images, as used when solving sets:
/// image(k) = image(left) and image(right), k = left left' = right right'.
struct IntersectionStep {
    Morphism left_prime;
    Morphism right_prime;
    Morphism k;
};

enum class TerminationCase { alphabet_size_1, all_length_1, cycle, empty_alphabet };

std::string_view to_string(TerminationCase c);
std::optional<TerminationCase> termination_case_from_string(std::string_view text);

struct SolveStats {
    std::size_t reductions = 0;
    std::size_t distinct_instances = 0;
    std::size_t max_graph_vertices = 0; // largest product graph built (group mode)
    std::size_t max_prefix_complexity = 0;
};

/// psi : Sigma_S -> Sigma with image(psi) = Eq. basis[i] = psi(generator i).
struct EqualiserResult {
    Morphism psi;
    std::vector<Word> basis;
    std::vector<ReductionStep> trail;
    std::vector<IntersectionStep> intersections;
    TerminationCase termination = TerminationCase::empty_alphabet;
    SolveStats stats;
};

/// An instance with generator names erased and generators sorted, so two
/// instances compare equal iff they agree up to renaming the domain.
/// Letters are encoded as +-(index + 1).
struct CanonicalInstance {
    std::size_t domain_size = 0;
    std::size_t codomain_size = 0;
    std::vector<std::pair<std::vector<std::int32_t>, std::vector<std::int32_t>>> images;

    auto operator<=>(const CanonicalInstance&) const = default;
};

CanonicalInstance canonicalize(const Instance& instance);

} // namespace pcpeq
