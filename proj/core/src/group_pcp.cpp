#include "pcpeq/group_pcp.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "pcpeq/stallings.hpp"
#include "solver_loop.hpp"

namespace pcpeq {

namespace {

std::size_t distinct_proper_prefixes(const Morphism& f) {
    std::set<std::vector<Letter>> prefixes;
    for (std::uint32_t a = 0; a < f.domain().size(); ++a) {
        for (std::int8_t sign : {std::int8_t{1}, std::int8_t{-1}}) {
            if (sign < 0 && f.mode() == Mode::monoid) {
                continue;
            }
            for (const Word& p : proper_prefixes(f.image(Letter{a, sign}))) {
                prefixes.emplace(p.letters().begin(), p.letters().end());
            }
        }
    }
    return prefixes.size();
}

} // namespace

std::size_t prefix_complexity(const Instance& instance) {
    return distinct_proper_prefixes(instance.g()) + distinct_proper_prefixes(instance.h());
}

BigCount iteration_bound(Mode mode, std::size_t delta_size, std::size_t sigma_size,
                         std::size_t prefix_complexity) {
    const BigCount base = mode == Mode::group ? BigCount(2 * delta_size) : BigCount(delta_size + 1);
    const std::size_t exponent = 2 * sigma_size * (prefix_complexity + 1);
    return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

BigCount iteration_bound(const Instance& instance) {
    return iteration_bound(instance.mode(), instance.delta().size(), instance.sigma().size(),
                           prefix_complexity(instance));
}

} // namespace pcpeq

namespace pcpeq::group {

namespace {

void require_immersion(const Morphism& f, std::string_view role) {
    if (f.mode() != Mode::group) {
        throw ModeError("group solver given a monoid morphism");
    }
    if (auto why = marking_violation(f)) {
        throw PreconditionError(std::string(role) + " is not an immersion: " + *why);
    }
}

IntersectionStep intersect_images(const Morphism& left, const Morphism& right) {
    const PairCore pair = core_of_pair(left, right);
    PetalMaps maps = petals_to_morphisms(pair, left, right);
    IntersectionStep step{std::move(maps.g_prime), std::move(maps.h_prime), Morphism()};
    step.k = compose(left, step.left_prime);
    return step;
}

} // namespace

ReductionStep reduce_group_instance(const Instance& instance) {
    require_immersion(instance.g(), "g");
    require_immersion(instance.h(), "h");
    PairCore pair = core_of_pair(instance.g(), instance.h());
    PetalMaps maps = petals_to_morphisms(pair, instance.g(), instance.h());
    Instance after(std::move(maps.g_prime), std::move(maps.h_prime));
    if (!is_marked(after.g()) || !is_marked(after.h())) {
        throw std::logic_error("reduction produced a non-immersion");
    }
    return ReductionStep{instance, std::move(after), {}, std::move(pair.core)};
}

EqualiserResult solve_pair(const Instance& instance) {
    require_immersion(instance.g(), "g");
    require_immersion(instance.h(), "h");
    return detail::solve_by_reduction(instance, reduce_group_instance);
}

EqualiserResult solve_set(std::span<const Morphism> maps) {
    for (std::size_t i = 0; i < maps.size(); ++i) {
        require_immersion(maps[i], "map #" + std::to_string(i + 1));
    }
    return detail::solve_set_by_induction(maps, solve_pair, intersect_images);
}

} // namespace pcpeq::group
