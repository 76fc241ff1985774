#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcpeq/instance.hpp"
#include "pcpeq/morphism.hpp"

/// Brute-force ground truth on a finite ball of words.
///
/// Nothing in here calls the solver, the Stallings machinery, or
/// pcpeq::apply: words are re-encoded as signed integers and evaluated by
/// local routines so that the oracle stays an independent check.
namespace pcpeq::oracle {

struct BallSpec {
    std::size_t radius = 0;
    Mode mode = Mode::monoid;
};

/// Words w with |w| <= radius on which every morphism agrees, in shortlex
/// order. Reduced words only in group mode. Always contains the empty word.
std::vector<Word> enumerate_equaliser(std::span<const Morphism> maps, BallSpec ball);

/// Words of length <= radius in image(psi), decided by greedy decoding.
/// Throws PreconditionError unless psi is marked (monoid) / an immersion
/// (group).
std::vector<Word> image_ball(const Morphism& psi, BallSpec ball);

/// True iff every morphism in maps sends w to the same word.
bool is_equaliser_element(std::span<const Morphism> maps, const Word& w);

struct Report {
    bool passed = true;
    std::vector<std::string> violations;
    std::optional<Word> witness; // first word on which image and equaliser differ
    std::size_t equaliser_elements = 0;
    std::size_t image_elements = 0;
};

Report check_result(std::span<const Morphism> maps, const EqualiserResult& result,
                    BallSpec ball);
Report check_result(const Instance& instance, const EqualiserResult& result, BallSpec ball);

} // namespace pcpeq::oracle
