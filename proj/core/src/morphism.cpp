#include "pcpeq/morphism.hpp"

#include <map>
#include <stdexcept>

#include "pcpeq/stallings.hpp"

namespace pcpeq {

Morphism::Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
    if (domain_.mode() != codomain_.mode()) {
        throw ModeError("morphism domain and codomain have different modes");
    }
    if (images_.size() != domain_.size()) {
        throw std::invalid_argument("morphism needs exactly one image per domain generator");
    }
    for (const Word& w : images_) {
        if (!(w.alphabet() == codomain_)) {
            throw AlphabetMismatch("morphism image is not a word over the codomain");
        }
    }
}

Morphism Morphism::identity(const Alphabet& alphabet) {
    std::vector<Word> images;
    for (std::uint32_t i = 0; i < alphabet.size(); ++i) {
        images.push_back(Word::single(alphabet, {i, 1}));
    }
    return Morphism(alphabet, alphabet, std::move(images));
}

Word Morphism::image(Letter letter) const {
    const Word& w = images_.at(letter.index);
    return letter.sign > 0 ? w : invert(w);
}

Word apply(const Morphism& f, const Word& w) {
    if (!(w.alphabet() == f.domain())) {
        throw AlphabetMismatch("apply: word is not over the morphism's domain");
    }
    std::vector<Letter> raw;
    for (Letter l : w.letters()) {
        const Word& img = f.image(l.index);
        if (l.sign > 0) {
            raw.insert(raw.end(), img.letters().begin(), img.letters().end());
        } else {
            for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
                raw.push_back(it->inverse());
            }
        }
    }
    if (f.mode() == Mode::group) {
        return free_reduce(f.codomain(), raw);
    }
    return Word(f.codomain(), std::move(raw));
}

Morphism compose(const Morphism& f, const Morphism& g) {
    if (!(g.codomain() == f.domain())) {
        throw AlphabetMismatch("compose: inner codomain differs from outer domain");
    }
    std::vector<Word> images;
    images.reserve(g.images().size());
    for (const Word& w : g.images()) {
        images.push_back(apply(f, w));
    }
    return Morphism(g.domain(), f.codomain(), std::move(images));
}

Morphism restrict_to(const Morphism& f, std::span<const std::size_t> generators) {
    std::vector<std::string> names;
    std::vector<Word> images;
    for (std::size_t g : generators) {
        names.push_back(f.domain().symbol(g));
        images.push_back(f.image(g));
    }
    return Morphism(Alphabet(std::move(names), f.mode()), f.codomain(), std::move(images));
}

std::optional<std::string> marking_violation(const Morphism& f) {
    // Map first letter -> the (signed) generator whose image starts with it.
    std::map<Letter, Letter> owner;
    const Alphabet& dom = f.domain();
    for (std::uint32_t i = 0; i < dom.size(); ++i) {
        for (std::int8_t sign : {std::int8_t{1}, std::int8_t{-1}}) {
            if (sign < 0 && f.mode() == Mode::monoid) {
                continue;
            }
            const Letter gen{i, sign};
            const Word img = f.image(gen);
            if (img.empty()) {
                return "image of " + letter_name(dom, gen) + " is empty";
            }
            auto [it, fresh] = owner.emplace(img.front(), gen);
            if (!fresh) {
                return "images of " + letter_name(dom, it->second) + " and " +
                       letter_name(dom, gen) + " both start with " +
                       letter_name(f.codomain(), img.front());
            }
        }
    }
    return std::nullopt;
}

bool is_marked(const Morphism& f) {
    return !marking_violation(f).has_value();
}

namespace {

bool satisfies_length_identity(const Morphism& f) {
    const Alphabet& dom = f.domain();
    std::vector<Letter> letters;
    for (std::uint32_t i = 0; i < dom.size(); ++i) {
        letters.push_back({i, 1});
        letters.push_back({i, -1});
    }
    for (Letter x : letters) {
        // A trivial image is a degenerate petal; the identity alone cannot see it.
        if (f.image(x.index).empty()) {
            return false;
        }
        for (Letter y : letters) {
            if (x.is_inverse_of(y)) {
                continue;
            }
            const Word fxy = apply(f, Word(dom, {x, y}));
            if (fxy.size() != f.image(x.index).size() + f.image(y.index).size()) {
                return false;
            }
        }
    }
    return true;
}

bool bouquet_is_folded(const Morphism& f) {
    for (const Word& w : f.images()) {
        if (w.empty()) {
            return false;
        }
    }
    return is_folded_both_ways(bouquet(f));
}

} // namespace

ImmersionReport immersion_report(const Morphism& f) {
    if (f.mode() != Mode::group) {
        throw ModeError("immersion is only defined for free group morphisms");
    }
    return {is_marked(f), bouquet_is_folded(f), satisfies_length_identity(f)};
}

bool is_immersion(const Morphism& f, ImmersionTest test) {
    if (f.mode() != Mode::group) {
        throw ModeError("immersion is only defined for free group morphisms");
    }
    switch (test) {
    case ImmersionTest::marked_images:
        return is_marked(f);
    case ImmersionTest::folded_bouquet:
        return bouquet_is_folded(f);
    case ImmersionTest::length_identity:
        return satisfies_length_identity(f);
    case ImmersionTest::all:
        break;
    }
    const ImmersionReport r = immersion_report(f);
    if (!r.agree()) {
        throw std::logic_error("immersion characterisations disagree");
    }
    return r.marked_images;
}

std::optional<std::pair<Word, Word>> injectivity_witness(const Morphism& f, std::size_t radius) {
    std::map<std::vector<Letter>, Word, std::less<>> seen;
    std::optional<std::pair<Word, Word>> witness;
    for_each_word(f.domain(), radius, [&](const Word& w) {
        const Word img = apply(f, w);
        std::vector<Letter> key(img.letters().begin(), img.letters().end());
        auto [it, fresh] = seen.emplace(std::move(key), w);
        if (!fresh) {
            witness.emplace(it->second, w);
            return false;
        }
        return true;
    });
    return witness;
}

} // namespace pcpeq
