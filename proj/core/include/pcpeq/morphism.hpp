#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pcpeq/words.hpp"

namespace pcpeq {

/// A solver entry condition failed (input not marked / not an immersion).
/// The message names the offending generator(s).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Generator -> word table between two alphabets of the same mode.
class Morphism {
public:
    Morphism() = default;
    Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images);

    static Morphism identity(const Alphabet& alphabet);

    const Alphabet& domain() const { return domain_; }
    const Alphabet& codomain() const { return codomain_; }
    Mode mode() const { return domain_.mode(); }
    const std::vector<Word>& images() const { return images_; }
    const Word& image(std::size_t generator) const { return images_.at(generator); }
    /// f(x) for x a generator or an inverse generator.
    Word image(Letter letter) const;

    bool operator==(const Morphism& other) const = default;

private:
    Alphabet domain_;
    Alphabet codomain_;
    std::vector<Word> images_;
};

Word apply(const Morphism& f, const Word& w);

/// f after g: a |-> f(g(a)). Requires g.codomain() == f.domain().
Morphism compose(const Morphism& f, const Morphism& g);

/// The restriction of f to the listed generators, keeping their names and
/// order.
Morphism restrict_to(const Morphism& f, std::span<const std::size_t> generators);

/// Monoid: images nonempty with pairwise distinct first letters. Group: the
/// same condition on the 2|Sigma| images of generators and their inverses.
bool is_marked(const Morphism& f);

/// Human-readable reason f is not marked, naming the generators involved.
std::optional<std::string> marking_violation(const Morphism& f);

enum class ImmersionTest {
    marked_images,   // images of Sigma and Sigma^-1 form a marked set
    folded_bouquet,  // the bouquet graph is deterministic both ways
    length_identity, // |f(xy)| = |f(x)| + |f(y)| whenever xy != 1
    all,
};

struct ImmersionReport {
    bool marked_images = false;
    bool folded_bouquet = false;
    bool length_identity = false;

    bool agree() const {
        return marked_images == folded_bouquet && folded_bouquet == length_identity;
    }
};

/// Evaluates all three characterisations independently. Requires group mode.
ImmersionReport immersion_report(const Morphism& f);

/// With ImmersionTest::all, throws std::logic_error if the characterisations
/// disagree.
bool is_immersion(const Morphism& f, ImmersionTest test = ImmersionTest::all);

/// Exhaustive search for u != v with f(u) = f(v) among words of length at
/// most radius (reduced words in group mode). Returns the first collision in
/// shortlex order of the later word.
std::optional<std::pair<Word, Word>> injectivity_witness(const Morphism& f, std::size_t radius);

} // namespace pcpeq
