#include "pcpeq/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pcpeq::oracle {

namespace {

// Letters are +-(index + 1); ordering by (|code|, negative second) matches
// Letter::rank.
using Code = int;
using Raw = std::vector<Code>;

struct Table {
    bool group = false;
    std::size_t domain_size = 0;
    std::vector<Raw> images;
};

Raw encode(const Word& w) {
    Raw out;
    for (Letter l : w.letters()) {
        out.push_back(static_cast<Code>(l.index + 1) * l.sign);
    }
    return out;
}

Word decode(const Alphabet& alphabet, const Raw& raw) {
    std::vector<Letter> letters;
    for (Code c : raw) {
        letters.push_back({static_cast<std::uint32_t>(std::abs(c) - 1),
                           static_cast<std::int8_t>(c > 0 ? 1 : -1)});
    }
    return Word(alphabet, std::move(letters));
}

Table table_of(const Morphism& f) {
    Table t{f.mode() == Mode::group, f.domain().size(), {}};
    for (const Word& w : f.images()) {
        t.images.push_back(encode(w));
    }
    return t;
}

Raw image_of(const Table& t, Code c) {
    const Raw& img = t.images[static_cast<std::size_t>(std::abs(c) - 1)];
    if (c > 0) {
        return img;
    }
    Raw inv(img.rbegin(), img.rend());
    for (Code& x : inv) {
        x = -x;
    }
    return inv;
}

Raw evaluate(const Table& t, const Raw& w) {
    Raw out;
    for (Code c : w) {
        for (Code x : image_of(t, c)) {
            if (t.group && !out.empty() && out.back() == -x) {
                out.pop_back();
            } else {
                out.push_back(x);
            }
        }
    }
    return out;
}

std::vector<Code> letters_of(std::size_t size, bool group) {
    std::vector<Code> out;
    for (std::size_t i = 1; i <= size; ++i) {
        out.push_back(static_cast<Code>(i));
        if (group) {
            out.push_back(-static_cast<Code>(i));
        }
    }
    return out;
}

/// Shortlex enumeration of the ball; reduced words only when group.
template <typename Visit>
void enumerate_ball(std::size_t alphabet_size, bool group, std::size_t radius, Visit&& visit) {
    const std::vector<Code> letters = letters_of(alphabet_size, group);
    std::vector<Raw> layer{Raw{}};
    visit(layer.front());
    for (std::size_t len = 1; len <= radius; ++len) {
        std::vector<Raw> next;
        for (const Raw& w : layer) {
            for (Code c : letters) {
                if (group && !w.empty() && w.back() == -c) {
                    continue;
                }
                Raw extended = w;
                extended.push_back(c);
                visit(extended);
                next.push_back(std::move(extended));
            }
        }
        layer = std::move(next);
    }
}

/// first letter of image -> signed generator. Empty if not marked / immersed.
std::optional<std::map<Code, Code>> marked_index(const Table& t) {
    std::map<Code, Code> owner;
    for (Code c : letters_of(t.domain_size, t.group)) {
        const Raw img = image_of(t, c);
        if (img.empty() || !owner.emplace(img.front(), c).second) {
            return std::nullopt;
        }
    }
    return owner;
}

bool greedy_decodes(const Table& t, const std::map<Code, Code>& owner, const Raw& w) {
    std::size_t pos = 0;
    while (pos < w.size()) {
        auto it = owner.find(w[pos]);
        if (it == owner.end()) {
            return false;
        }
        const Raw img = image_of(t, it->second);
        if (pos + img.size() > w.size() || !std::equal(img.begin(), img.end(), w.begin() + pos)) {
            return false;
        }
        pos += img.size();
    }
    return true;
}

void check_mode(const Morphism& f, BallSpec ball) {
    if (f.mode() != ball.mode) {
        throw ModeError("ball mode does not match the morphism mode");
    }
}

std::string show(const Alphabet& alphabet, const Raw& raw) {
    return to_string(decode(alphabet, raw));
}

std::vector<Raw> raw_equaliser(std::span<const Morphism> maps, BallSpec ball) {
    std::vector<Table> tables;
    for (const Morphism& f : maps) {
        check_mode(f, ball);
        tables.push_back(table_of(f));
    }
    std::vector<Raw> out;
    const std::size_t n = maps.empty() ? 0 : maps.front().domain().size();
    enumerate_ball(n, ball.mode == Mode::group, ball.radius, [&](const Raw& w) {
        if (tables.empty()) {
            out.push_back(w);
            return;
        }
        const Raw first = evaluate(tables.front(), w);
        for (std::size_t i = 1; i < tables.size(); ++i) {
            if (evaluate(tables[i], w) != first) {
                return;
            }
        }
        out.push_back(w);
    });
    return out;
}

std::vector<Raw> raw_image(const Morphism& psi, BallSpec ball) {
    check_mode(psi, ball);
    const Table t = table_of(psi);
    const auto owner = marked_index(t);
    if (!owner) {
        throw PreconditionError(ball.mode == Mode::group ? "image_ball: psi is not an immersion"
                                                         : "image_ball: psi is not marked");
    }
    std::vector<Raw> out;
    enumerate_ball(psi.codomain().size(), t.group, ball.radius, [&](const Raw& w) {
        if (greedy_decodes(t, *owner, w)) {
            out.push_back(w);
        }
    });
    return out;
}

} // namespace

std::vector<Word> enumerate_equaliser(std::span<const Morphism> maps, BallSpec ball) {
    if (maps.empty()) {
        throw std::invalid_argument("enumerate_equaliser: no morphisms given");
    }
    std::vector<Word> out;
    for (const Raw& w : raw_equaliser(maps, ball)) {
        out.push_back(decode(maps.front().domain(), w));
    }
    return out;
}

std::vector<Word> image_ball(const Morphism& psi, BallSpec ball) {
    std::vector<Word> out;
    for (const Raw& w : raw_image(psi, ball)) {
        out.push_back(decode(psi.codomain(), w));
    }
    return out;
}

bool is_equaliser_element(std::span<const Morphism> maps, const Word& w) {
    if (maps.empty()) {
        return true;
    }
    const Raw raw = encode(w);
    const Raw first = evaluate(table_of(maps.front()), raw);
    return std::all_of(maps.begin() + 1, maps.end(), [&](const Morphism& f) {
        return evaluate(table_of(f), raw) == first;
    });
}

Report check_result(std::span<const Morphism> maps, const EqualiserResult& result,
                    BallSpec ball) {
    Report report;
    auto fail = [&](std::string message) {
        report.passed = false;
        report.violations.push_back(std::move(message));
    };
    if (maps.empty()) {
        fail("no morphisms to check against");
        return report;
    }
    const Alphabet& sigma = maps.front().domain();
    const Morphism& psi = result.psi;
    if (!(psi.codomain() == sigma)) {
        fail("psi does not map into the instance's domain alphabet");
        return report;
    }
    const Table psi_table = table_of(psi);
    const auto owner = marked_index(psi_table);
    if (!owner) {
        fail(ball.mode == Mode::group ? "psi is not an immersion" : "psi is not marked");
    }
    if (result.basis.size() > sigma.size()) {
        fail("basis has " + std::to_string(result.basis.size()) + " elements, more than |Sigma| = " +
             std::to_string(sigma.size()));
    }
    if (result.basis.size() != psi.domain().size()) {
        fail("basis size differs from the number of psi generators");
    }
    for (std::size_t i = 0; i < result.basis.size(); ++i) {
        if (i < psi.domain().size() && !(result.basis[i] == psi.image(i))) {
            fail("basis element " + std::to_string(i) + " is not the image of psi generator " +
                 psi.domain().symbol(i));
        }
        if (!is_equaliser_element(maps, result.basis[i])) {
            fail("basis element " + to_string(result.basis[i]) + " is not an equaliser element");
        }
    }
    if (!owner) {
        return report;
    }

    const std::vector<Raw> equaliser = raw_equaliser(maps, ball);
    std::vector<Raw> image;
    enumerate_ball(sigma.size(), ball.mode == Mode::group, ball.radius, [&](const Raw& w) {
        if (greedy_decodes(psi_table, *owner, w)) {
            image.push_back(w);
        }
    });
    report.equaliser_elements = equaliser.size();
    report.image_elements = image.size();

    // Both lists are in the same shortlex enumeration order; walk them together.
    std::size_t i = 0;
    std::size_t j = 0;
    auto shortlex = [](const Raw& a, const Raw& b) {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        auto key = [](Code c) { return 2 * (std::abs(c) - 1) + (c < 0 ? 1 : 0); };
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [&](Code x, Code y) { return key(x) < key(y); });
    };
    while (i < equaliser.size() || j < image.size()) {
        if (j == image.size() || (i < equaliser.size() && shortlex(equaliser[i], image[j]))) {
            fail("equaliser element " + show(sigma, equaliser[i]) + " is missing from image(psi)");
            if (!report.witness) {
                report.witness = decode(sigma, equaliser[i]);
            }
            ++i;
        } else if (i == equaliser.size() || shortlex(image[j], equaliser[i])) {
            fail("image(psi) element " + show(sigma, image[j]) + " is not an equaliser element");
            if (!report.witness) {
                report.witness = decode(sigma, image[j]);
            }
            ++j;
        } else {
            ++i;
            ++j;
        }
    }
    return report;
}

Report check_result(const Instance& instance, const EqualiserResult& result, BallSpec ball) {
    const Morphism maps[] = {instance.g(), instance.h()};
    return check_result(std::span<const Morphism>(maps), result, ball);
}

} // namespace pcpeq::oracle
