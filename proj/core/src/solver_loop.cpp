#include "solver_loop.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace pcpeq::detail {

namespace {

struct Terminal {
    TerminationCase kind;
    std::vector<std::size_t> basis;
};

std::vector<std::size_t> agreeing_generators(const Instance& instance) {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < instance.sigma().size(); ++a) {
        if (instance.g().image(a) == instance.h().image(a)) {
            out.push_back(a);
        }
    }
    return out;
}

std::optional<Terminal> terminal_case(const Instance& instance) {
    const std::size_t n = instance.sigma().size();
    if (n == 0) {
        return Terminal{TerminationCase::empty_alphabet, {}};
    }
    // Roots are unique, so a single generator is a solution iff g and h agree on it.
    if (n == 1) {
        return Terminal{TerminationCase::alphabet_size_1, agreeing_generators(instance)};
    }
    const bool all_letters = std::all_of(instance.g().images().begin(),
                                         instance.g().images().end(),
                                         [](const Word& w) { return w.size() == 1; }) &&
                             std::all_of(instance.h().images().begin(),
                                         instance.h().images().end(),
                                         [](const Word& w) { return w.size() == 1; });
    if (all_letters) {
        return Terminal{TerminationCase::all_length_1, agreeing_generators(instance)};
    }
    return std::nullopt;
}

std::size_t bouquet_vertices(const Morphism& f) {
    std::size_t n = 1;
    for (const Word& w : f.images()) {
        n += w.empty() ? 0 : w.size() - 1;
    }
    return n;
}

EqualiserResult compose_trail(const Instance& input, const Instance& last,
                              std::vector<ReductionStep> trail, const Terminal& terminal) {
    std::vector<std::string> names;
    std::vector<Word> images;
    for (std::size_t a : terminal.basis) {
        names.push_back(last.sigma().symbol(a));
        images.push_back(Word::single(last.sigma(), {static_cast<std::uint32_t>(a), 1}));
    }
    // Push the basis letters back through g_j, g_{j-1}, ..., g_1.
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
        for (Word& w : images) {
            w = apply(it->g_prime(), w);
        }
    }
    EqualiserResult result;
    result.psi = Morphism(Alphabet(std::move(names), input.mode()), input.sigma(), images);
    result.basis = std::move(images);
    result.trail = std::move(trail);
    result.termination = terminal.kind;
    return result;
}

} // namespace

EqualiserResult solve_by_reduction(const Instance& input, const ReduceFn& reduce) {
    const BigCount bound = iteration_bound(input);
    std::set<CanonicalInstance> seen;
    std::vector<ReductionStep> trail;
    SolveStats stats;
    Instance current = input;
    while (true) {
        stats.max_prefix_complexity =
            std::max(stats.max_prefix_complexity, prefix_complexity(current));
        std::optional<Terminal> terminal = terminal_case(current);
        if (!terminal && !seen.insert(canonicalize(current)).second) {
            // Cycle: only generators mapped to equal letters survive.
            terminal = Terminal{TerminationCase::cycle, agreeing_generators(current)};
        }
        if (terminal) {
            stats.reductions = trail.size();
            stats.distinct_instances = seen.size();
            EqualiserResult result = compose_trail(input, current, std::move(trail), *terminal);
            result.stats = stats;
            return result;
        }
        if (BigCount(trail.size()) >= bound) {
            throw std::logic_error("reduction exceeded the iteration bound without cycling");
        }
        if (current.mode() == Mode::group) {
            stats.max_graph_vertices =
                std::max(stats.max_graph_vertices,
                         bouquet_vertices(current.g()) * bouquet_vertices(current.h()));
        }
        trail.push_back(reduce(current));
        current = trail.back().after;
    }
}

EqualiserResult solve_set_by_induction(std::span<const Morphism> maps, const PairSolver& pair,
                                       const IntersectFn& intersect) {
    if (maps.size() < 2) {
        throw std::invalid_argument("solve_set needs at least two morphisms");
    }
    EqualiserResult first = pair(Instance(maps[0], maps[1]));
    if (maps.size() == 2) {
        return first;
    }
    EqualiserResult rest = solve_set_by_induction(maps.subspan(1), pair, intersect);
    IntersectionStep step = intersect(rest.psi, first.psi);

    EqualiserResult result;
    result.psi = step.k;
    result.basis = step.k.images();
    result.termination = first.termination;
    result.trail = std::move(first.trail);
    result.trail.insert(result.trail.end(), std::make_move_iterator(rest.trail.begin()),
                        std::make_move_iterator(rest.trail.end()));
    result.intersections = std::move(rest.intersections);
    result.intersections.push_back(std::move(step));
    result.stats.reductions = first.stats.reductions + rest.stats.reductions;
    result.stats.distinct_instances =
        first.stats.distinct_instances + rest.stats.distinct_instances;
    result.stats.max_graph_vertices =
        std::max(first.stats.max_graph_vertices, rest.stats.max_graph_vertices);
    result.stats.max_prefix_complexity =
        std::max(first.stats.max_prefix_complexity, rest.stats.max_prefix_complexity);
    return result;
}

} // namespace pcpeq::detail
