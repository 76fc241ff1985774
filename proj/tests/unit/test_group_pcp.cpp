#include <gtest/gtest.h>

#include "pcpeq/group_pcp.hpp"
#include "pcpeq/instance_io.hpp"
#include "pcpeq/oracle.hpp"
#include "test_support.hpp"

using namespace pcpeq;
using namespace pcpeq::testing;

namespace {

/// Independent recount of the prefix set of one morphism over Sigma^{+-1}.
std::size_t count_prefixes(const Morphism& f) {
    std::set<std::string> seen;
    for (std::uint32_t a = 0; a < f.domain().size(); ++a) {
        for (const Word& img : {f.image(a), invert(f.image(a))}) {
            std::string text;
            for (std::size_t i = 0; i + 1 < img.size(); ++i) {
                text += letter_name(f.codomain(), img[i]) + " ";
                seen.insert(text);
            }
        }
    }
    return seen.size();
}

} // namespace

TEST(PrefixComplexity, TwoPetal) {
    const Instance I = two_petal();
    EXPECT_EQ(count_prefixes(I.g()), 10u);
    EXPECT_EQ(count_prefixes(I.h()), 6u);
    EXPECT_EQ(prefix_complexity(I), 16u);
}

TEST(PrefixComplexity, AllLengthOneIsZero) {
    const Alphabet s = make_alphabet("a b", Mode::group);
    EXPECT_EQ(prefix_complexity(Instance(Morphism::identity(s), Morphism::identity(s))), 0u);
}

TEST(PrefixComplexity, TwoPetalReduced) {
    const ReductionStep step = group::reduce_group_instance(two_petal());
    EXPECT_EQ(count_prefixes(step.g_prime()), 2u);
    EXPECT_EQ(count_prefixes(step.h_prime()), 6u);
    EXPECT_EQ(prefix_complexity(step.after), 8u);
}

TEST(PrefixComplexity, MonoidCountsForwardImagesOnly) {
    const Instance I = worked_monoid();
    // g: xy -> {x}; y -> {}. h: x -> {}; yy -> {y}.
    EXPECT_EQ(prefix_complexity(I), 2u);
}

TEST(IterationBound, Values) {
    EXPECT_EQ(iteration_bound(Mode::group, 3, 2, 0), BigCount(1296));
    EXPECT_EQ(iteration_bound(Mode::group, 1, 1, 0), BigCount(4));
    EXPECT_EQ(iteration_bound(Mode::monoid, 2, 1, 0), BigCount(9));
    EXPECT_EQ(iteration_bound(two_petal()), boost::multiprecision::pow(BigCount(6), 102));
}

TEST(ReduceGroupInstance, TwoPetal) {
    const Instance I = two_petal();
    const ReductionStep step = group::reduce_group_instance(I);
    const Alphabet& s = I.sigma();
    ASSERT_EQ(step.after.sigma().size(), 2u);
    EXPECT_EQ(step.after.delta(), s);
    EXPECT_EQ(step.g_prime().image(0), w(s, "a b^-1"));
    EXPECT_EQ(step.g_prime().image(1), w(s, "c"));
    EXPECT_EQ(step.h_prime().image(0), w(s, "a b"));
    EXPECT_EQ(step.h_prime().image(1), w(s, "c a c"));
    ASSERT_TRUE(step.core);
    EXPECT_EQ(step.core->edge_count(), 8u);
}

TEST(ReduceGroupInstance, EqualMapsAndDisjoint) {
    const Morphism h = two_petal().h();
    const ReductionStep same = group::reduce_group_instance(Instance(h, h));
    EXPECT_EQ(same.g_prime(), same.h_prime());
    EXPECT_EQ(same.after.sigma().size(), 3u);

    const Alphabet a = make_alphabet("a", Mode::group);
    const Alphabet xy = make_alphabet("x y", Mode::group);
    const ReductionStep none = group::reduce_group_instance(
        Instance(morphism(a, xy, {"x"}), morphism(a, xy, {"y"})));
    EXPECT_TRUE(none.after.sigma().empty());
}

TEST(ReduceGroupInstance, RejectsNonImmersion) {
    EXPECT_THROW(group::reduce_group_instance(Instance(non_immersion(), non_immersion())), PreconditionError);
}

TEST(ReduceGroupInstance, MonotoneOnRandomInstances) {
    Rng rng(303);
    for (int trial = 0; trial < 200; ++trial) {
        const Instance I = random_immersed_instance(rng, 3, 3, 4);
        const ReductionStep step = group::reduce_group_instance(I);
        EXPECT_LE(prefix_complexity(step.after), prefix_complexity(I));
        EXPECT_LE(step.after.sigma().size(), I.sigma().size());
        EXPECT_TRUE(is_immersion(step.g_prime()));
        EXPECT_TRUE(is_immersion(step.h_prime()));
    }
}

TEST(SolvePair, GroupEqualMaps) {
    const Morphism h = two_petal().h();
    const EqualiserResult r = group::solve_pair(Instance(h, h));
    EXPECT_EQ(r.basis, Morphism::identity(h.domain()).images());
}

TEST(SolvePair, GroupTrivial) {
    const Alphabet a = make_alphabet("a", Mode::group);
    const Alphabet xy = make_alphabet("x y", Mode::group);
    const EqualiserResult r =
        group::solve_pair(Instance(morphism(a, xy, {"x"}), morphism(a, xy, {"y"})));
    EXPECT_TRUE(r.basis.empty());
}

TEST(SolvePair, TwoPetalMatchesOracle) {
    const Instance I = two_petal();
    const EqualiserResult r = group::solve_pair(I);
    EXPECT_TRUE(is_immersion(r.psi));
    EXPECT_LE(r.basis.size(), 3u);
    const oracle::Report report = oracle::check_result(I, r, {6, Mode::group});
    EXPECT_TRUE(report.passed) << (report.violations.empty() ? "" : report.violations.front());
    EXPECT_LE(BigCount(r.trail.size()), iteration_bound(I));
}

TEST(SolvePair, GroupRandomMatchesOracle) {
    Rng rng(404);
    for (int trial = 0; trial < 40; ++trial) {
        const Instance I = random_immersed_instance(rng, 3, 3, 3);
        const EqualiserResult r = group::solve_pair(I);
        const oracle::Report report = oracle::check_result(I, r, {5, Mode::group});
        ASSERT_TRUE(report.passed) << io::serialize_instance(I) << report.violations.front();
        for (const Word& b : r.basis) {
            EXPECT_EQ(apply(I.g(), b), apply(I.h(), b));
        }
    }
}

TEST(SolvePair, GroupRejectsMonoidAndNonImmersion) {
    EXPECT_THROW(group::solve_pair(worked_monoid()), ModeError);
    EXPECT_THROW(group::solve_pair(Instance(non_immersion(), non_immersion())), PreconditionError);
}

TEST(SolveSet, GroupCases) {
    const Instance I = two_petal();
    const std::vector<Morphism> ff{I.h(), I.h()};
    EXPECT_EQ(group::solve_set(ff).basis, Morphism::identity(I.sigma()).images());

    const std::vector<Morphism> gh{I.g(), I.h()};
    EXPECT_EQ(group::solve_set(gh).basis, group::solve_pair(I).basis);

    const std::vector<Morphism> ghh{I.g(), I.h(), I.h()};
    const EqualiserResult r = group::solve_set(ghh);
    EXPECT_TRUE(oracle::check_result(ghh, r, {6, Mode::group}).passed);
    EXPECT_EQ(oracle::image_ball(r.psi, {6, Mode::group}),
              oracle::image_ball(group::solve_pair(I).psi, {6, Mode::group}));
}

TEST(SolveSet, GroupRandomTriples) {
    Rng rng(505);
    for (int trial = 0; trial < 30; ++trial) {
        const Instance I = random_immersed_instance(rng, 3, 3, 3);
        std::vector<Morphism> maps{I.g(), I.h()};
        maps.push_back(random_partner(rng, I.g(), [&] {
            return random_immersion(rng, I.sigma(), I.delta(), 3);
        }));
        const EqualiserResult r = group::solve_set(maps);
        const oracle::Report report = oracle::check_result(maps, r, {5, Mode::group});
        ASSERT_TRUE(report.passed) << report.violations.front();
        EXPECT_LE(r.basis.size(), I.sigma().size());
    }
}

TEST(Canonicalize, ErasesNames) {
    const Instance I = two_petal();
    const Alphabet renamed = make_alphabet("p q r", Mode::group);
    const Instance J(Morphism(renamed, I.delta(), I.g().images()),
                     Morphism(renamed, I.delta(), I.h().images()));
    EXPECT_EQ(canonicalize(I), canonicalize(J));
    EXPECT_NE(canonicalize(I), canonicalize(Instance(I.h(), I.g())));
}
