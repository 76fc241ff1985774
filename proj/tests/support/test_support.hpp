#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pcpeq/instance.hpp"
#include "pcpeq/morphism.hpp"
#include "pcpeq/words.hpp"

namespace pcpeq::testing {

inline Alphabet make_alphabet(std::string_view symbols, Mode mode) {
    std::vector<std::string> names;
    std::size_t i = 0;
    while (i < symbols.size()) {
        while (i < symbols.size() && symbols[i] == ' ') {
            ++i;
        }
        const std::size_t start = i;
        while (i < symbols.size() && symbols[i] != ' ') {
            ++i;
        }
        if (i > start) {
            names.emplace_back(symbols.substr(start, i - start));
        }
    }
    return Alphabet(std::move(names), mode);
}

inline Word w(const Alphabet& alphabet, std::string_view text) {
    return parse_word(alphabet, text);
}

inline Morphism morphism(const Alphabet& domain, const Alphabet& codomain,
                         std::vector<std::string_view> images) {
    std::vector<Word> words;
    for (auto text : images) {
        words.push_back(parse_word(codomain, text));
    }
    return Morphism(domain, codomain, std::move(words));
}

inline Alphabet numbered(std::size_t count, std::string_view stem, Mode mode) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < count; ++i) {
        names.push_back(std::string(stem) + std::to_string(i));
    }
    return Alphabet(std::move(names), mode);
}

// Fixed instances shared across test files.

/// g(a)=xy, g(b)=y; h(a)=x, h(b)=yy.
inline Instance worked_monoid() {
    const Alphabet sigma = make_alphabet("a b", Mode::monoid);
    const Alphabet delta = make_alphabet("x y", Mode::monoid);
    return Instance(morphism(sigma, delta, {"x y", "y"}), morphism(sigma, delta, {"x", "y y"}));
}

inline Instance two_petal() {
    const Alphabet sigma = make_alphabet("a b c", Mode::group);
    const Alphabet delta = make_alphabet("x y z", Mode::group);
    return Instance(morphism(sigma, delta, {"x y x x", "y^-1", "z x z"}),
                    morphism(sigma, delta, {"x", "y x x y", "z"}));
}

/// g(a)=x^-2 y, g(b)=y^2 x.
inline Morphism non_immersion() {
    const Alphabet sigma = make_alphabet("a b", Mode::group);
    const Alphabet delta = make_alphabet("x y", Mode::group);
    return morphism(sigma, delta, {"x^-1 x^-1 y", "y y x"});
}

// Random generation.

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::vector<Letter> signed_letters(std::size_t m, Mode mode) {
    std::vector<Letter> out;
    for (std::uint32_t i = 0; i < m; ++i) {
        out.push_back({i, 1});
        if (mode == Mode::group) {
            out.push_back({i, -1});
        }
    }
    return out;
}

/// Uniform letters, rejecting cancellations in group mode.
inline Word random_word(Rng& rng, const Alphabet& alphabet, std::size_t length) {
    const auto letters = signed_letters(alphabet.size(), alphabet.mode());
    std::vector<Letter> out;
    while (out.size() < length) {
        const Letter l = letters[uniform(rng, 0, letters.size() - 1)];
        if (alphabet.mode() == Mode::group && !out.empty() && l.is_inverse_of(out.back())) {
            continue;
        }
        out.push_back(l);
    }
    return Word(alphabet, std::move(out));
}

/// Any morphism, images of length 0..max_len.
inline Morphism random_morphism(Rng& rng, const Alphabet& sigma, const Alphabet& delta,
                                std::size_t min_len, std::size_t max_len) {
    std::vector<Word> images;
    for (std::size_t a = 0; a < sigma.size(); ++a) {
        images.push_back(random_word(rng, delta, uniform(rng, min_len, max_len)));
    }
    return Morphism(sigma, delta, std::move(images));
}

/// Reduced word of length len from `first` to `last`; len >= 2 unless first == last.
inline Word random_word_between(Rng& rng, const Alphabet& delta, Letter first, Letter last,
                                std::size_t len) {
    if (len == 1) {
        return Word(delta, {first});
    }
    const auto letters = signed_letters(delta.size(), Mode::group);
    while (true) {
        std::vector<Letter> out{first};
        while (out.size() + 1 < len) {
            const Letter l = letters[uniform(rng, 0, letters.size() - 1)];
            if (!l.is_inverse_of(out.back())) {
                out.push_back(l);
            }
        }
        if (!last.is_inverse_of(out.back())) {
            out.push_back(last);
            return Word(delta, std::move(out));
        }
    }
}

/// Marked monoid morphism: k <= |delta| distinct first letters, lengths 1..max_len.
inline Morphism random_marked(Rng& rng, const Alphabet& sigma, const Alphabet& delta,
                              std::size_t max_len) {
    std::vector<std::uint32_t> firsts(delta.size());
    for (std::uint32_t i = 0; i < firsts.size(); ++i) {
        firsts[i] = i;
    }
    std::shuffle(firsts.begin(), firsts.end(), rng);
    std::vector<Word> images;
    for (std::size_t a = 0; a < sigma.size(); ++a) {
        Word tail = random_word(rng, delta, uniform(rng, 0, max_len - 1));
        images.push_back(concat(Word(delta, {{firsts[a], 1}}), tail));
    }
    return Morphism(sigma, delta, std::move(images));
}

/// Immersion: first letters of the images and of their inverses are 2k
/// distinct letters chosen by a random permutation.
inline Morphism random_immersion(Rng& rng, const Alphabet& sigma, const Alphabet& delta,
                                 std::size_t max_len) {
    auto letters = signed_letters(delta.size(), Mode::group);
    std::shuffle(letters.begin(), letters.end(), rng);
    std::vector<Word> images;
    for (std::size_t a = 0; a < sigma.size(); ++a) {
        const Letter first = letters[2 * a];
        const Letter last = letters[2 * a + 1].inverse();
        const std::size_t min_len = first == last ? 1 : 2;
        const std::size_t len = uniform(rng, min_len, std::max(min_len, max_len));
        images.push_back(random_word_between(rng, delta, first, last, len));
    }
    return Morphism(sigma, delta, std::move(images));
}

/// A partner for g that shares structure with it, so equalisers are often
/// nontrivial: an independent map, g with some images redrawn, or g with two
/// images swapped.
template <typename Draw>
Morphism random_partner(Rng& rng, const Morphism& g, Draw&& draw) {
    const std::size_t style = uniform(rng, 0, 3);
    if (style == 0) {
        return draw();
    }
    if (style == 1 && g.domain().size() >= 2) {
        std::vector<Word> images = g.images();
        const std::size_t a = uniform(rng, 0, images.size() - 1);
        const std::size_t b = (a + 1 + uniform(rng, 0, images.size() - 2)) % images.size();
        std::swap(images[a], images[b]);
        return Morphism(g.domain(), g.codomain(), std::move(images));
    }
    // Keep a random subset of g's images; redraw the rest until marked.
    for (int attempt = 0; attempt < 64; ++attempt) {
        const Morphism fresh = draw();
        std::vector<Word> images = g.images();
        for (std::size_t a = 0; a < images.size(); ++a) {
            if (uniform(rng, 0, 1) == 0) {
                images[a] = fresh.image(a);
            }
        }
        Morphism candidate(g.domain(), g.codomain(), std::move(images));
        if (is_marked(candidate)) {
            return candidate;
        }
    }
    return draw();
}

inline Instance random_marked_instance(Rng& rng, std::size_t max_sigma, std::size_t max_delta,
                                       std::size_t max_len) {
    const std::size_t m = uniform(rng, 1, max_delta);
    const std::size_t k = uniform(rng, 1, std::min(max_sigma, m));
    const Alphabet sigma = numbered(k, "a", Mode::monoid);
    const Alphabet delta = numbered(m, "x", Mode::monoid);
    const Morphism g = random_marked(rng, sigma, delta, max_len);
    return Instance(g, random_partner(rng, g, [&] { return random_marked(rng, sigma, delta, max_len); }));
}

inline Instance random_immersed_instance(Rng& rng, std::size_t max_sigma, std::size_t max_delta,
                                         std::size_t max_len) {
    const std::size_t m = uniform(rng, 1, max_delta);
    const std::size_t k = uniform(rng, 1, std::min(max_sigma, m));
    const Alphabet sigma = numbered(k, "a", Mode::group);
    const Alphabet delta = numbered(m, "x", Mode::group);
    const Morphism g = random_immersion(rng, sigma, delta, max_len);
    return Instance(g,
                    random_partner(rng, g, [&] { return random_immersion(rng, sigma, delta, max_len); }));
}

/// Reduced words of length n over m generators, tallied by (first, last)
/// letter rank (rank = 2 * index + inverted). Plain odometer enumeration.
inline std::map<std::pair<int, int>, long long> reduced_word_tally(std::size_t m, std::size_t n) {
    std::map<std::pair<int, int>, long long> out;
    const int letters = static_cast<int>(2 * m);
    std::vector<int> word(n, 0);
    while (true) {
        bool reduced = true;
        for (std::size_t i = 1; i < n; ++i) {
            reduced = reduced && word[i] != (word[i - 1] ^ 1);
        }
        if (reduced) {
            ++out[{word.front(), word.back()}];
        }
        std::size_t i = 0;
        while (i < n && ++word[i] == letters) {
            word[i++] = 0;
        }
        if (i == n) {
            break;
        }
    }
    return out;
}

inline std::vector<Letter> letters_from_ranks(const std::vector<int>& ranks) {
    std::vector<Letter> out;
    for (int r : ranks) {
        out.push_back({static_cast<std::uint32_t>(r / 2), static_cast<std::int8_t>(r % 2 ? -1 : 1)});
    }
    return out;
}

/// Words in `counts` whose first rank is not in `a` and last rank not in `b`.
inline long long count_avoiding(const std::map<std::pair<int, int>, long long>& counts,
                                const std::vector<int>& a, const std::vector<int>& b) {
    long long total = 0;
    for (const auto& [ends, c] : counts) {
        const bool bad_first = std::find(a.begin(), a.end(), ends.first) != a.end();
        const bool bad_last = std::find(b.begin(), b.end(), ends.second) != b.end();
        total += bad_first || bad_last ? 0 : c;
    }
    return total;
}

} // namespace pcpeq::testing
