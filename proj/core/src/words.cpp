#include "pcpeq/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace pcpeq {

std::string_view to_string(Mode mode) {
    return mode == Mode::monoid ? "monoid" : "group";
}

bool is_valid_symbol(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) {
        return false;
    }
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

Alphabet::Alphabet() : data_(std::make_shared<const Data>(Data{{}, Mode::monoid})) {}

Alphabet::Alphabet(std::vector<std::string> symbols, Mode mode) {
    std::set<std::string_view> seen;
    for (const auto& s : symbols) {
        if (!is_valid_symbol(s)) {
            throw std::invalid_argument("invalid symbol name '" + s + "'");
        }
        if (s == "eps") {
            throw std::invalid_argument("'eps' is reserved for the empty word");
        }
        if (!seen.insert(s).second) {
            throw std::invalid_argument("duplicate symbol '" + s + "'");
        }
    }
    data_ = std::make_shared<const Data>(Data{std::move(symbols), mode});
}

std::optional<std::size_t> Alphabet::index_of(std::string_view name) const {
    const auto& syms = data_->symbols;
    auto it = std::find(syms.begin(), syms.end(), name);
    if (it == syms.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - syms.begin());
}

bool Alphabet::operator==(const Alphabet& other) const {
    if (data_ == other.data_) {
        return true;
    }
    return data_->mode == other.data_->mode && data_->symbols == other.data_->symbols;
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        const Letter l = letters_[i];
        if (l.index >= alphabet_.size()) {
            throw AlphabetMismatch("letter index out of range for alphabet");
        }
        if (l.sign != 1 && l.sign != -1) {
            throw std::invalid_argument("letter sign must be +1 or -1");
        }
        if (alphabet_.mode() == Mode::monoid && l.sign != 1) {
            throw ModeError("inverse letter in a monoid word");
        }
        if (alphabet_.mode() == Mode::group && i > 0 && l.is_inverse_of(letters_[i - 1])) {
            throw std::invalid_argument("group word is not freely reduced at position " +
                                        std::to_string(i));
        }
    }
}

Word Word::single(Alphabet alphabet, Letter letter) {
    return Word(std::move(alphabet), std::vector<Letter>{letter});
}

Word Word::prefix(std::size_t length) const {
    length = std::min(length, letters_.size());
    return Word(Trusted{}, alphabet_,
                std::vector<Letter>(letters_.begin(), letters_.begin() + length));
}

Word Word::suffix_from(std::size_t start) const {
    start = std::min(start, letters_.size());
    return Word(Trusted{}, alphabet_,
                std::vector<Letter>(letters_.begin() + start, letters_.end()));
}

bool Word::operator==(const Word& other) const {
    return letters_ == other.letters_ && alphabet_ == other.alphabet_;
}

Word free_reduce(const Alphabet& alphabet, std::span<const Letter> raw) {
    if (alphabet.mode() != Mode::group) {
        throw ModeError("free reduction is only defined in group mode");
    }
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (Letter l : raw) {
        if (l.index >= alphabet.size()) {
            throw AlphabetMismatch("letter index out of range for alphabet");
        }
        if (!out.empty() && out.back().is_inverse_of(l)) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return Word(Word::Trusted{}, alphabet, std::move(out));
}

Word concat(const Word& u, const Word& v) {
    if (!(u.alphabet() == v.alphabet())) {
        throw AlphabetMismatch("concat: words over different alphabets");
    }
    if (u.mode() == Mode::group) {
        std::vector<Letter> joined(u.letters_.begin(), u.letters_.end());
        // Cancellation can only happen at the seam.
        std::size_t j = 0;
        while (!joined.empty() && j < v.letters_.size() &&
               joined.back().is_inverse_of(v.letters_[j])) {
            joined.pop_back();
            ++j;
        }
        joined.insert(joined.end(), v.letters_.begin() + j, v.letters_.end());
        return Word(Word::Trusted{}, u.alphabet(), std::move(joined));
    }
    std::vector<Letter> joined = u.letters_;
    joined.insert(joined.end(), v.letters_.begin(), v.letters_.end());
    return Word(Word::Trusted{}, u.alphabet(), std::move(joined));
}

Word invert(const Word& w) {
    if (w.mode() != Mode::group) {
        throw ModeError("inverse is only defined in group mode");
    }
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) {
        out.push_back(it->inverse());
    }
    return Word(Word::Trusted{}, w.alphabet(), std::move(out));
}

std::vector<Word> proper_prefixes(const Word& w) {
    std::vector<Word> out;
    for (std::size_t n = 1; n < w.size(); ++n) {
        out.push_back(w.prefix(n));
    }
    return out;
}

Word longest_common_prefix(const Word& u, const Word& v) {
    if (!(u.alphabet() == v.alphabet())) {
        throw AlphabetMismatch("longest_common_prefix: words over different alphabets");
    }
    std::size_t n = 0;
    while (n < u.size() && n < v.size() && u[n] == v[n]) {
        ++n;
    }
    return u.prefix(n);
}

bool shortlex_less(const Word& u, const Word& v) {
    if (u.size() != v.size()) {
        return u.size() < v.size();
    }
    auto a = u.letters();
    auto b = v.letters();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void for_each_word(const Alphabet& alphabet, std::size_t radius,
                   const std::function<bool(const Word&)>& visit) {
    std::vector<Letter> letters;
    for (std::uint32_t i = 0; i < alphabet.size(); ++i) {
        letters.push_back({i, 1});
        if (alphabet.mode() == Mode::group) {
            letters.push_back({i, -1});
        }
    }
    std::vector<Word> layer{Word(alphabet)};
    if (!visit(layer.front())) {
        return;
    }
    for (std::size_t len = 1; len <= radius; ++len) {
        std::vector<Word> next;
        for (const Word& w : layer) {
            for (Letter l : letters) {
                if (!w.empty() && w.back().is_inverse_of(l)) {
                    continue;
                }
                std::vector<Letter> seq(w.letters().begin(), w.letters().end());
                seq.push_back(l);
                next.emplace_back(alphabet, std::move(seq));
                if (!visit(next.back())) {
                    return;
                }
            }
        }
        layer = std::move(next);
    }
}

std::string letter_name(const Alphabet& alphabet, Letter letter) {
    std::string name = alphabet.symbol(letter.index);
    if (letter.sign < 0) {
        name += "^-1";
    }
    return name;
}

std::string to_string(const Word& w) {
    if (w.empty()) {
        return "eps";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += letter_name(w.alphabet(), w[i]);
    }
    return out;
}

namespace {

std::string format_parse_error(std::size_t line, std::size_t column, const std::string& message) {
    std::ostringstream os;
    os << "line " << line << ", column " << column << ": " << message;
    return os.str();
}

} // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(format_parse_error(line, column, message)), line_(line), column_(column) {}

Word parse_word(const Alphabet& alphabet, std::string_view text, std::size_t line,
                std::size_t column_offset) {
    struct Token {
        std::string_view text;
        std::size_t column;
    };
    std::vector<Token> tokens;
    for (std::size_t i = 0; i < text.size();) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        tokens.push_back({text.substr(start, i - start), column_offset + start + 1});
    }
    if (tokens.empty()) {
        throw ParseError(line, column_offset + 1, "expected a word or 'eps'");
    }
    if (tokens.size() == 1 && tokens.front().text == "eps") {
        return Word(alphabet);
    }

    std::vector<Letter> letters;
    for (const Token& tok : tokens) {
        std::string_view name = tok.text;
        std::int8_t sign = 1;
        constexpr std::string_view inverse_suffix = "^-1";
        if (name == "eps") {
            throw ParseError(line, tok.column, "'eps' cannot appear inside a nonempty word");
        }
        if (name.size() >= inverse_suffix.size() &&
            name.substr(name.size() - inverse_suffix.size()) == inverse_suffix) {
            name.remove_suffix(inverse_suffix.size());
            sign = -1;
            if (name.empty()) {
                throw ParseError(line, tok.column, "inverse marker '^-1' must follow a symbol");
            }
        }
        if (!is_valid_symbol(name)) {
            throw ParseError(line, tok.column, "malformed letter '" + std::string(tok.text) + "'");
        }
        auto index = alphabet.index_of(name);
        if (!index) {
            throw ParseError(line, tok.column, "unknown symbol '" + std::string(name) + "'");
        }
        if (sign < 0 && alphabet.mode() == Mode::monoid) {
            throw ParseError(line, tok.column, "inverse letter in monoid mode");
        }
        Letter l{static_cast<std::uint32_t>(*index), sign};
        if (!letters.empty() && letters.back().is_inverse_of(l)) {
            throw ParseError(line, tok.column, "group word is not freely reduced");
        }
        letters.push_back(l);
    }
    return Word(alphabet, std::move(letters));
}

} // namespace pcpeq
