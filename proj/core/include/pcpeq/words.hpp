#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pcpeq {

enum class Mode { monoid, group };

std::string_view to_string(Mode mode);

/// Raised when two values that must share an alphabet do not.
class AlphabetMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is undefined for the mode of its operands
/// (free reduction of a monoid word, inversion in a monoid, ...).
class ModeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Ordered finite set of generator names. Cheap to copy; the symbol table is
/// shared and immutable.
class Alphabet {
public:
    Alphabet();
    Alphabet(std::vector<std::string> symbols, Mode mode);

    Mode mode() const { return data_->mode; }
    std::size_t size() const { return data_->symbols.size(); }
    bool empty() const { return data_->symbols.empty(); }
    const std::string& symbol(std::size_t index) const { return data_->symbols.at(index); }
    const std::vector<std::string>& symbols() const { return data_->symbols; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const Alphabet& other) const;

private:
    struct Data {
        std::vector<std::string> symbols;
        Mode mode;
    };
    std::shared_ptr<const Data> data_;
};

/// Generator index with an exponent sign. Monoid letters are always positive.
struct Letter {
    std::uint32_t index = 0;
    std::int8_t sign = 1;

    constexpr Letter inverse() const { return {index, static_cast<std::int8_t>(-sign)}; }
    /// Position in the order x < x^-1 < y < y^-1 < ...
    constexpr std::uint32_t rank() const { return 2 * index + (sign < 0 ? 1u : 0u); }
    constexpr bool is_inverse_of(Letter other) const {
        return index == other.index && sign == -other.sign;
    }

    friend constexpr bool operator==(Letter a, Letter b) = default;
    friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
        return a.rank() <=> b.rank();
    }
};

/// A monoid word, or a freely reduced group word, over one alphabet.
///
/// Group words are reduced on construction, so structural equality is group
/// equality.
class Word {
public:
    Word() = default;
    explicit Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    /// Validates letters against the alphabet. Group-mode input must already
    /// be freely reduced; use free_reduce for arbitrary sequences.
    Word(Alphabet alphabet, std::vector<Letter> letters);

    static Word single(Alphabet alphabet, Letter letter);

    const Alphabet& alphabet() const { return alphabet_; }
    Mode mode() const { return alphabet_.mode(); }
    std::span<const Letter> letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter front() const { return letters_.front(); }
    Letter back() const { return letters_.back(); }

    Word prefix(std::size_t length) const;
    Word suffix_from(std::size_t start) const;

    bool operator==(const Word& other) const;

private:
    struct Trusted {};
    Word(Trusted, Alphabet alphabet, std::vector<Letter> letters)
        : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {}

    friend Word free_reduce(const Alphabet&, std::span<const Letter>);
    friend Word concat(const Word&, const Word&);
    friend Word invert(const Word&);

    Alphabet alphabet_;
    std::vector<Letter> letters_;
};

Word free_reduce(const Alphabet& alphabet, std::span<const Letter> raw);
Word concat(const Word& u, const Word& v);
Word invert(const Word& w);

/// Nonempty strict prefixes of w, shortest first.
std::vector<Word> proper_prefixes(const Word& w);

Word longest_common_prefix(const Word& u, const Word& v);

/// Length first, then letter rank.
bool shortlex_less(const Word& u, const Word& v);

/// Calls visit for every word of length <= radius in shortlex order (reduced
/// words only in group mode). Stops early when visit returns false.
void for_each_word(const Alphabet& alphabet, std::size_t radius,
                   const std::function<bool(const Word&)>& visit);

/// Text form: space-separated letters, `x^-1` for inverses, `eps` for the
/// empty word.
std::string to_string(const Word& w);
std::string letter_name(const Alphabet& alphabet, Letter letter);

/// Error in word or file text, positioned 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Parses the text form produced by to_string. `line` and `column_offset`
/// position errors inside a larger document. Group words must be reduced.
Word parse_word(const Alphabet& alphabet, std::string_view text, std::size_t line = 1,
                std::size_t column_offset = 0);

bool is_valid_symbol(std::string_view name);

} // namespace pcpeq
