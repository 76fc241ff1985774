#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "pcpeq/instance_io.hpp"
#include "pcpeq/monoid_pcp.hpp"
#include "test_support.hpp"

using namespace pcpeq;
using namespace pcpeq::testing;

namespace {

std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(PCPEQ_FIXTURE_DIR) + "/" + name);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void expect_error_at(std::string_view text, std::size_t line, std::size_t column,
                     std::string_view fragment) {
    try {
        io::parse(text);
        FAIL() << "expected a parse error containing '" << fragment << "'";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), line) << e.what();
        EXPECT_EQ(e.column(), column) << e.what();
        EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
}

constexpr std::string_view kHeader = "mode monoid\nsigma a b\ndelta x y\n";

} // namespace

TEST(Parse, TwoPetalFixture) {
    const Instance I = io::parse_instance(read_fixture("two_petal.pcp"));
    EXPECT_EQ(I, two_petal());
}

TEST(Parse, CommentsBlankLinesAndCrlf) {
    const std::string text =
        "# header\r\nmode monoid   # trailing\r\n\r\nsigma a b\r\ndelta x y\r\nmap g\r\na = x y\r\n"
        "b = y\r\nmap h\r\na = x\r\nb = y y\r\n";
    EXPECT_EQ(io::parse_instance(text), worked_monoid());
}

TEST(Parse, EpsImageAllowed) {
    const io::MorphismFile f =
        io::parse(std::string(kHeader) + "map g\na = eps\nb = y\nmap h\na = x\nb = y\n");
    EXPECT_TRUE(f.maps[0].map.image(0).empty());
    EXPECT_FALSE(is_marked(f.maps[0].map));
}

TEST(Parse, SplitInverseToken) {
    expect_error_at("mode group\nsigma a\ndelta x\nmap g\na = x ^-1\nmap h\na = x\n", 5, 7,
                    "^-1");
}

TEST(Parse, Errors) {
    const std::string h(kHeader);
    expect_error_at(h + "map g\nc = x\n", 5, 1, "unknown symbol `c`");
    expect_error_at(h + "map g\na = q\n", 5, 5, "unknown symbol 'q'");
    expect_error_at(h + "map g\na = x\na = y\n", 6, 1, "duplicate mapping");
    expect_error_at(h + "map g\na = x\nmap h\na = x\nb = y\n", 4, 1, "no mapping for `b`");
    expect_error_at(h + "map g\na = x\nb = y\nmap g\na = x\nb = y\n", 7, 5, "duplicate map name");
    expect_error_at(h + "map g\na = x^-1\nb = y\nmap h\na = x\nb = y\n", 5, 5,
                    "inverse letter in monoid mode");
    expect_error_at("mode group\nsigma a\ndelta x y\nmap g\na = x y y^-1\nmap h\na = x\n", 5, 9,
                    "not freely reduced");
    expect_error_at(h + "map g\na = x\nb = y\n", 7, 1, "at least 2 map blocks");
    expect_error_at("mode ring\n", 1, 1, "mode");
    expect_error_at("sigma a\n", 1, 1, "before `mode`");
    expect_error_at(h + "map g\na =\n", 5, 3, "missing image");
    expect_error_at(h + "map g\na x\n", 5, 1, "expected `<symbol> = <word>`");
    expect_error_at("mode monoid\nsigma a a\n", 2, 9, "duplicate symbol");
    expect_error_at(h + "a = x\n", 4, 1, "unexpected");
}

TEST(Parse, SingleMapWithMinimum) {
    const io::MorphismFile f = io::parse(read_fixture("non_immersion.pcp"), 1);
    ASSERT_EQ(f.maps.size(), 1u);
    EXPECT_EQ(f.maps[0].map, non_immersion());
    EXPECT_THROW(io::parse(read_fixture("non_immersion.pcp")), ParseError);
}

TEST(Serialize, InstanceRoundTripRandom) {
    Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const Instance I = trial % 2 ? random_immersed_instance(rng, 3, 4, 5)
                                     : random_marked_instance(rng, 3, 4, 5);
        EXPECT_EQ(io::parse_instance(io::serialize_instance(I)), I);
    }
    // Arbitrary (unmarked, possibly empty-image) maps round-trip too.
    for (int trial = 0; trial < 100; ++trial) {
        const Alphabet s = numbered(uniform(rng, 0, 3), "a", Mode::group);
        const Alphabet d = numbered(uniform(rng, 1, 3), "x", Mode::group);
        const Instance I(random_morphism(rng, s, d, 0, 4), random_morphism(rng, s, d, 0, 4));
        EXPECT_EQ(io::parse_instance(io::serialize_instance(I)), I);
    }
}

TEST(Serialize, FileFormatIsExact) {
    EXPECT_EQ(io::serialize_instance(worked_monoid()),
              "mode monoid\nsigma a b\ndelta x y\nmap g\na = x y\nb = y\nmap h\na = x\nb = y y\n");
}

TEST(Serialize, ResultFormats) {
    const EqualiserResult worked = monoid::solve_pair(worked_monoid());
    EXPECT_EQ(io::serialize(worked), "case cycle\nbasis 1\np0 = a b\n");

    const Alphabet ab = make_alphabet("a b", Mode::monoid);
    const EqualiserResult id = monoid::solve_pair(Instance(Morphism::identity(ab), Morphism::identity(ab)));
    EXPECT_EQ(io::serialize(id), "case all-length-1\nbasis 2\na = a\nb = b\n");

    const Alphabet a = make_alphabet("a", Mode::monoid);
    const Alphabet xy = make_alphabet("x y", Mode::monoid);
    const EqualiserResult none =
        monoid::solve_pair(Instance(morphism(a, xy, {"x"}), morphism(a, xy, {"y"})));
    EXPECT_EQ(io::serialize(none), "case alphabet-size-1\nbasis 0\n");
}

TEST(Serialize, PsiRoundTrip) {
    const EqualiserResult worked = monoid::solve_pair(worked_monoid());
    const io::MorphismFile f = io::parse(io::serialize_psi(worked.psi), 1);
    EXPECT_EQ(f.maps[0].map, worked.psi);
}
