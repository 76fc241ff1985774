#include "pcpeq/monoid_pcp.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "solver_loop.hpp"

namespace pcpeq::monoid {

namespace {

void require_marked(const Morphism& f, std::string_view role) {
    if (f.mode() != Mode::monoid) {
        throw ModeError("monoid solver given a group morphism");
    }
    if (auto why = marking_violation(f)) {
        throw PreconditionError(std::string(role) + " is not marked: " + *why);
    }
}

/// first letter -> generator, for a marked morphism.
std::map<Letter, std::uint32_t> first_letter_index(const Morphism& f) {
    std::map<Letter, std::uint32_t> out;
    for (std::uint32_t a = 0; a < f.domain().size(); ++a) {
        out.emplace(f.image(a).front(), a);
    }
    return out;
}

std::optional<Block> find_block(const Morphism& g, const Morphism& h,
                                const std::map<Letter, std::uint32_t>& g_first,
                                const std::map<Letter, std::uint32_t>& h_first, Letter start) {
    auto gi = g_first.find(start);
    auto hi = h_first.find(start);
    if (gi == g_first.end() || hi == h_first.end()) {
        return std::nullopt;
    }
    std::vector<Letter> u{{gi->second, 1}};
    std::vector<Letter> v{{hi->second, 1}};
    // Unmatched tails of the two sides; at most one is nonempty between steps.
    std::vector<Letter> g_tail(g.image(gi->second).letters().begin(),
                               g.image(gi->second).letters().end());
    std::vector<Letter> h_tail(h.image(hi->second).letters().begin(),
                               h.image(hi->second).letters().end());
    std::set<std::pair<bool, std::vector<Letter>>> seen;
    while (true) {
        const std::size_t common = std::min(g_tail.size(), h_tail.size());
        if (!std::equal(g_tail.begin(), g_tail.begin() + common, h_tail.begin())) {
            return std::nullopt;
        }
        g_tail.erase(g_tail.begin(), g_tail.begin() + common);
        h_tail.erase(h_tail.begin(), h_tail.begin() + common);
        if (g_tail.empty() && h_tail.empty()) {
            return Block{start, Word(g.domain(), std::move(u)), Word(h.domain(), std::move(v))};
        }
        const bool g_leads = !g_tail.empty();
        const std::vector<Letter>& overhang = g_leads ? g_tail : h_tail;
        if (!seen.emplace(g_leads, overhang).second) {
            return std::nullopt;
        }
        const auto& lagging_first = g_leads ? h_first : g_first;
        auto next = lagging_first.find(overhang.front());
        if (next == lagging_first.end()) {
            return std::nullopt;
        }
        if (g_leads) {
            v.push_back({next->second, 1});
            const Word& img = h.image(next->second);
            h_tail.assign(img.letters().begin(), img.letters().end());
        } else {
            u.push_back({next->second, 1});
            const Word& img = g.image(next->second);
            g_tail.assign(img.letters().begin(), img.letters().end());
        }
    }
}

IntersectionStep intersect_images(const Morphism& left, const Morphism& right) {
    const auto blocks = compute_blocks(left, right);
    std::vector<std::string> names;
    std::vector<Word> left_images;
    std::vector<Word> right_images;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        names.push_back("p" + std::to_string(i));
        left_images.push_back(blocks[i].u);
        right_images.push_back(blocks[i].v);
    }
    const Alphabet fresh(std::move(names), Mode::monoid);
    IntersectionStep step{Morphism(fresh, left.domain(), std::move(left_images)),
                          Morphism(fresh, right.domain(), std::move(right_images)),
                          Morphism()};
    step.k = compose(left, step.left_prime);
    if (!(step.k == compose(right, step.right_prime))) {
        throw std::logic_error("block maps do not satisfy left left' = right right'");
    }
    return step;
}

} // namespace

std::vector<Block> compute_blocks(const Morphism& g, const Morphism& h) {
    require_marked(g, "g");
    require_marked(h, "h");
    if (!(g.codomain() == h.codomain())) {
        throw AlphabetMismatch("compute_blocks: morphisms have different codomains");
    }
    const auto g_first = first_letter_index(g);
    const auto h_first = first_letter_index(h);
    std::vector<Block> blocks;
    for (std::uint32_t a = 0; a < g.codomain().size(); ++a) {
        if (auto block = find_block(g, h, g_first, h_first, {a, 1})) {
            blocks.push_back(std::move(*block));
        }
    }
    return blocks;
}

ReductionStep reduce_instance(const Instance& instance) {
    auto blocks = compute_blocks(instance.g(), instance.h());
    std::vector<std::string> names;
    std::vector<Word> g_images;
    std::vector<Word> h_images;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        names.push_back("p" + std::to_string(i));
        g_images.push_back(blocks[i].u);
        h_images.push_back(blocks[i].v);
    }
    const Alphabet fresh(std::move(names), Mode::monoid);
    Instance after(Morphism(fresh, instance.sigma(), std::move(g_images)),
                   Morphism(fresh, instance.sigma(), std::move(h_images)));
    if (!is_marked(after.g()) || !is_marked(after.h())) {
        throw std::logic_error("reduction produced a non-marked morphism");
    }
    return ReductionStep{instance, std::move(after), std::move(blocks), std::nullopt};
}

EqualiserResult solve_pair(const Instance& instance) {
    require_marked(instance.g(), "g");
    require_marked(instance.h(), "h");
    return detail::solve_by_reduction(instance, reduce_instance);
}

EqualiserResult solve_set(std::span<const Morphism> maps) {
    for (std::size_t i = 0; i < maps.size(); ++i) {
        require_marked(maps[i], "map #" + std::to_string(i + 1));
    }
    return detail::solve_set_by_induction(maps, solve_pair, intersect_images);
}

} // namespace pcpeq::monoid
