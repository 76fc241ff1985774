#include "pcpeq/density.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pcpeq/morphism.hpp"

namespace pcpeq::density {

namespace {

std::size_t intersection_size(const std::vector<Letter>& a, const std::vector<Letter>& b,
                              bool invert_a) {
    std::size_t out = 0;
    for (Letter x : std::set<Letter>(a.begin(), a.end())) {
        const Letter y = invert_a ? x.inverse() : x;
        if (std::find(b.begin(), b.end(), y) != b.end()) {
            ++out;
        }
    }
    return out;
}

std::size_t distinct(const std::vector<Letter>& letters) {
    return std::set<Letter>(letters.begin(), letters.end()).size();
}

/// Growth-normalised constant of reduced_word_count(m, n, A, B): its
/// coefficient of (2m-1)^(n-1) when m >= 2, its average over n when m = 1.
Rational leading_coefficient(std::size_t m, const std::vector<Letter>& a,
                             const std::vector<Letter>& b) {
    const long long two_m = 2 * static_cast<long long>(m);
    const long long na = static_cast<long long>(distinct(a));
    const long long nb = static_cast<long long>(distinct(b));
    const Rational main((two_m - na) * (two_m - nb), two_m);
    if (m >= 2) {
        return main;
    }
    const long long x = static_cast<long long>(intersection_size(a, b, false)) -
                        static_cast<long long>(intersection_size(a, b, true));
    return main + Rational(x, two_m);
}

std::vector<Letter> signed_letters(std::size_t m, bool group) {
    std::vector<Letter> out;
    for (std::uint32_t i = 0; i < m; ++i) {
        out.push_back({i, 1});
        if (group) {
            out.push_back({i, -1});
        }
    }
    return out;
}

Alphabet letters_alphabet(std::size_t count, const char* stem, Mode mode) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < count; ++i) {
        names.push_back(stem + std::to_string(i));
    }
    return Alphabet(std::move(names), mode);
}

/// An image class: empty, or (first, last) letters. Monoid classes only
/// look at the first letter; last is then unused.
struct ImageClass {
    bool empty = true;
    Letter first;
    Letter last;
    Count count; // words of length 1..n in this class
};

/// Shortest reduced word in the class; nullopt when there is none.
std::optional<std::vector<Letter>> representative(const ImageClass& c, std::size_t m, bool group) {
    if (c.empty) {
        return std::vector<Letter>{};
    }
    if (!group || c.first == c.last) {
        return std::vector<Letter>{c.first};
    }
    if (!c.last.is_inverse_of(c.first)) {
        return std::vector<Letter>{c.first, c.last};
    }
    for (std::uint32_t i = 0; i < m; ++i) {
        if (i != c.first.index) {
            return std::vector<Letter>{c.first, Letter{i, 1}, c.last};
        }
    }
    return std::nullopt;
}

std::vector<ImageClass> image_classes(std::size_t m, std::size_t n, bool group) {
    const std::vector<Letter> letters = signed_letters(m, group);
    std::vector<ImageClass> out;
    out.push_back(ImageClass{true, {}, {}, Count(1)});
    if (!group) {
        for (Letter f : letters) {
            Count total = 0;
            Count layer = 1;
            for (std::size_t len = 1; len <= n; ++len) {
                total += layer;
                layer *= m;
            }
            out.push_back(ImageClass{false, f, f, total});
        }
        return out;
    }
    // by_end[f][l]: reduced words of the current length from f to l.
    const std::size_t L = letters.size();
    std::vector<std::vector<Count>> by_end(L, std::vector<Count>(L, 0));
    std::vector<std::vector<Count>> totals(L, std::vector<Count>(L, 0));
    for (std::size_t f = 0; f < L; ++f) {
        by_end[f][f] = 1;
    }
    for (std::size_t len = 1; len <= n; ++len) {
        if (len > 1) {
            std::vector<std::vector<Count>> next(L, std::vector<Count>(L, 0));
            for (std::size_t f = 0; f < L; ++f) {
                for (std::size_t l = 0; l < L; ++l) {
                    for (std::size_t p = 0; p < L; ++p) {
                        if (!letters[p].is_inverse_of(letters[l])) {
                            next[f][l] += by_end[f][p];
                        }
                    }
                }
            }
            by_end = std::move(next);
        }
        for (std::size_t f = 0; f < L; ++f) {
            for (std::size_t l = 0; l < L; ++l) {
                totals[f][l] += by_end[f][l];
            }
        }
    }
    for (std::size_t f = 0; f < L; ++f) {
        for (std::size_t l = 0; l < L; ++l) {
            if (totals[f][l] > 0) {
                out.push_back(ImageClass{false, letters[f], letters[l], totals[f][l]});
            }
        }
    }
    return out;
}

bool accepts(const Morphism& f, Kind kind) {
    return kind == Kind::marked_monoid ? is_marked(f)
                                       : is_immersion(f, ImmersionTest::marked_images);
}

void validate(const Params& p) {
    if (p.m == 0 || p.n == 0) {
        throw std::invalid_argument("density needs m >= 1 and n >= 1");
    }
    if (p.k > p.m) {
        throw std::invalid_argument("density needs k <= m");
    }
}

Rational exact_fraction(const Params& p, Kind kind) {
    const bool group = kind == Kind::immersion_group;
    const Mode mode = group ? Mode::group : Mode::monoid;
    const std::vector<ImageClass> classes = image_classes(p.m, p.n, group);
    const Alphabet sigma = letters_alphabet(p.k, "a", mode);
    const Alphabet delta = letters_alphabet(p.m, "x", mode);

    double tuples = std::pow(static_cast<double>(classes.size()), static_cast<double>(p.k));
    if (tuples > 5e7) {
        throw std::invalid_argument("exact density enumeration too large; use --samples");
    }
    std::vector<std::vector<Letter>> reps;
    for (const ImageClass& c : classes) {
        reps.push_back(*representative(c, p.m, group));
    }

    Count total_words = 0;
    for (const ImageClass& c : classes) {
        total_words += c.count;
    }
    Count hits = 0;
    std::vector<std::size_t> pick(p.k, 0);
    while (true) {
        std::vector<Word> images;
        Count weight = 1;
        for (std::size_t i = 0; i < p.k; ++i) {
            images.emplace_back(delta, reps[pick[i]]);
            weight *= classes[pick[i]].count;
        }
        if (accepts(Morphism(sigma, delta, std::move(images)), kind)) {
            hits += weight;
        }
        std::size_t i = 0;
        while (i < p.k && ++pick[i] == classes.size()) {
            pick[i++] = 0;
        }
        if (i == p.k) {
            break;
        }
    }
    return Rational(hits, boost::multiprecision::pow(total_words, static_cast<unsigned>(p.k)));
}

std::vector<Letter> sample_word(std::mt19937_64& rng, std::size_t m, std::size_t length,
                                bool group) {
    const std::vector<Letter> letters = signed_letters(m, group);
    std::vector<Letter> out;
    while (out.size() < length) {
        std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
        const Letter next = letters[pick(rng)];
        if (group && !out.empty() && next.is_inverse_of(out.back())) {
            continue;
        }
        out.push_back(next);
    }
    return out;
}

Rational sampled_fraction(const Params& p, Kind kind) {
    const bool group = kind == Kind::immersion_group;
    const Mode mode = group ? Mode::group : Mode::monoid;
    const Alphabet sigma = letters_alphabet(p.k, "a", mode);
    const Alphabet delta = letters_alphabet(p.m, "x", mode);

    // Word counts per length, in log space so large n does not overflow.
    std::vector<double> log_weight;
    for (std::size_t len = 0; len <= p.n; ++len) {
        if (len == 0) {
            log_weight.push_back(0.0);
        } else if (group) {
            log_weight.push_back(std::log(2.0 * p.m) + (len - 1) * std::log(2.0 * p.m - 1));
        } else {
            log_weight.push_back(len * std::log(static_cast<double>(p.m)));
        }
    }
    const double top = *std::max_element(log_weight.begin(), log_weight.end());
    std::vector<double> weight;
    for (double w : log_weight) {
        weight.push_back(std::exp(w - top));
    }
    std::discrete_distribution<std::size_t> length(weight.begin(), weight.end());

    std::mt19937_64 rng(p.seed);
    std::size_t hits = 0;
    for (std::size_t s = 0; s < p.samples; ++s) {
        std::vector<Word> images;
        for (std::size_t i = 0; i < p.k; ++i) {
            images.emplace_back(delta, sample_word(rng, p.m, length(rng), group));
        }
        if (accepts(Morphism(sigma, delta, std::move(images)), kind)) {
            ++hits;
        }
    }
    return Rational(hits, p.samples);
}

std::string decimal(const Rational& r) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << static_cast<double>(r);
    return out.str();
}

} // namespace

std::string_view to_string(Kind kind) {
    return kind == Kind::marked_monoid ? "marked-monoid" : "immersion-group";
}

std::optional<Kind> kind_from_string(std::string_view text) {
    if (text == "marked-monoid") {
        return Kind::marked_monoid;
    }
    if (text == "immersion-group") {
        return Kind::immersion_group;
    }
    return std::nullopt;
}

Rational marked_density_limit(std::size_t k, std::size_t m) {
    if (k > m) {
        return 0;
    }
    // m (m-1) ... (m-k+1) / m^k
    Count falling = 1;
    Count power = 1;
    for (std::size_t i = 0; i < k; ++i) {
        falling *= m - i;
        power *= m;
    }
    return Rational(falling, power);
}

Count reduced_word_count(std::size_t m, std::size_t n, const std::vector<Letter>& a,
                         const std::vector<Letter>& b) {
    if (n < 1) {
        throw std::invalid_argument("reduced_word_count needs n >= 1");
    }
    const Count two_m = 2 * m;
    const Count na = distinct(a);
    const Count nb = distinct(b);
    const Count x = Count(intersection_size(a, b, false)) - Count(intersection_size(a, b, true));
    const Count y = Count(intersection_size(a, b, false)) + Count(intersection_size(a, b, true));
    Count numerator = (two_m - na) * (two_m - nb) *
                          boost::multiprecision::pow(two_m - 1, static_cast<unsigned>(n - 1)) +
                      x * m;
    const Count alternating = na * nb - y * m;
    numerator += n % 2 == 0 ? alternating : Count(-alternating);
    if (numerator % two_m != 0) {
        throw std::logic_error("reduced_word_count: non-integral count");
    }
    return numerator / two_m;
}

Rational immersion_density_limit(std::size_t k, std::size_t m) {
    if (k > m || m == 0) {
        return 0;
    }
    const std::vector<Letter> letters = signed_letters(m, true);
    const Rational total = leading_coefficient(m, {}, {});
    // Words starting exactly at f and ending exactly at l, by inclusion-exclusion.
    auto class_weight = [&](Letter f, Letter l) {
        return (total - leading_coefficient(m, {f}, {}) - leading_coefficient(m, {}, {l}) +
                leading_coefficient(m, {f}, {l})) /
               total;
    };
    std::vector<std::pair<Letter, Letter>> classes;
    std::vector<Rational> weights;
    for (Letter f : letters) {
        for (Letter l : letters) {
            const Rational w = class_weight(f, l);
            if (w != 0) {
                classes.emplace_back(f, l);
                weights.push_back(w);
            }
        }
    }
    // Sum over class tuples whose first letters and inverted last letters are
    // 2k distinct letters.
    Rational sum = 0;
    auto recurse = [&](auto&& self, std::size_t depth, std::set<Letter>& used,
                       const Rational& product) -> void {
        if (depth == k) {
            sum += product;
            return;
        }
        for (std::size_t c = 0; c < classes.size(); ++c) {
            const Letter f = classes[c].first;
            const Letter l_inv = classes[c].second.inverse();
            if (f == l_inv || used.count(f) || used.count(l_inv)) {
                continue;
            }
            used.insert(f);
            used.insert(l_inv);
            self(self, depth + 1, used, product * weights[c]);
            used.erase(f);
            used.erase(l_inv);
        }
    };
    std::set<Letter> used;
    recurse(recurse, 0, used, Rational(1));
    return sum;
}

Measurement measure_density(const Params& params, Kind kind) {
    validate(params);
    Measurement out;
    out.empirical = params.samples == 0 ? exact_fraction(params, kind)
                                        : sampled_fraction(params, kind);
    out.predicted = kind == Kind::marked_monoid ? marked_density_limit(params.k, params.m)
                                                : immersion_density_limit(params.k, params.m);
    return out;
}

std::string csv_header() { return "kind,k,m,n,samples,empirical,predicted"; }

std::string csv_row(const Params& params, Kind kind, const Measurement& result) {
    std::ostringstream out;
    out << to_string(kind) << ',' << params.k << ',' << params.m << ',' << params.n << ','
        << params.samples << ',' << decimal(result.empirical) << ','
        << decimal(result.predicted);
    return out.str();
}

} // namespace pcpeq::density
