#include "pcpeq/instance_io.hpp"

#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace pcpeq::io {

namespace {

struct Token {
    std::string_view text;
    std::size_t column; // 1-based
};

std::vector<Token> split(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
            ++i;
        }
        if (i > start) {
            out.push_back({line.substr(start, i - start), start + 1});
        }
    }
    return out;
}

std::string_view strip_comment(std::string_view line) {
    if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
    }
    const auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

class Parser {
public:
    Parser(std::string_view text, std::size_t min_maps) : min_maps_(min_maps) {
        std::size_t start = 0;
        while (start <= text.size()) {
            const auto end = text.find('\n', start);
            lines_.push_back(text.substr(start, end == std::string_view::npos ? text.size() - start
                                                                               : end - start));
            if (end == std::string_view::npos) {
                break;
            }
            start = end + 1;
        }
    }

    MorphismFile run() {
        for (std::size_t i = 0; i < lines_.size(); ++i) {
            line_no_ = i + 1;
            const std::string_view body = strip_comment(lines_[i]);
            const auto tokens = split(body);
            if (!tokens.empty()) {
                handle(body, tokens);
            }
        }
        line_no_ = lines_.size();
        finish_map();
        if (!saw_mode_ || !saw_sigma_ || !saw_delta_) {
            fail(1, !saw_mode_ ? "missing `mode` line"
                    : !saw_sigma_ ? "missing `sigma` line" : "missing `delta` line");
        }
        if (file_.maps.size() < min_maps_) {
            fail(1, "expected at least " + std::to_string(min_maps_) + " map blocks, found " +
                        std::to_string(file_.maps.size()));
        }
        return std::move(file_);
    }

private:
    [[noreturn]] void fail(std::size_t column, const std::string& message) const {
        throw ParseError(line_no_, column, message);
    }

    void handle(std::string_view body, const std::vector<Token>& tokens) {
        const std::string_view head = tokens.front().text;
        if (head == "mode") {
            if (saw_mode_) {
                fail(tokens[0].column, "duplicate `mode` line");
            }
            if (tokens.size() != 2 || (tokens[1].text != "monoid" && tokens[1].text != "group")) {
                fail(tokens[0].column, "expected `mode monoid` or `mode group`");
            }
            file_.mode = tokens[1].text == "group" ? Mode::group : Mode::monoid;
            saw_mode_ = true;
        } else if (head == "sigma" || head == "delta") {
            if (!saw_mode_) {
                fail(tokens[0].column, "`" + std::string(head) + "` before `mode`");
            }
            bool& seen = head == "sigma" ? saw_sigma_ : saw_delta_;
            if (seen) {
                fail(tokens[0].column, "duplicate `" + std::string(head) + "` line");
            }
            if (!maps_started_.empty()) {
                fail(tokens[0].column, "`" + std::string(head) + "` after the first map block");
            }
            seen = true;
            (head == "sigma" ? file_.sigma : file_.delta) = alphabet(tokens);
        } else if (head == "map") {
            if (!saw_sigma_ || !saw_delta_) {
                fail(tokens[0].column, "map block before `sigma` and `delta`");
            }
            if (tokens.size() != 2 || !is_valid_symbol(tokens[1].text)) {
                fail(tokens[0].column, "expected `map <name>`");
            }
            finish_map();
            const std::string name(tokens[1].text);
            if (!maps_started_.insert(name).second) {
                fail(tokens[1].column, "duplicate map name `" + name + "`");
            }
            current_ = Pending{name, line_no_, {}};
        } else {
            mapping(body, tokens);
        }
    }

    Alphabet alphabet(const std::vector<Token>& tokens) const {
        std::vector<std::string> names;
        std::set<std::string_view> seen;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            if (!is_valid_symbol(tokens[i].text) || tokens[i].text == "eps") {
                fail(tokens[i].column, "invalid symbol `" + std::string(tokens[i].text) + "`");
            }
            if (!seen.insert(tokens[i].text).second) {
                fail(tokens[i].column, "duplicate symbol `" + std::string(tokens[i].text) + "`");
            }
            names.emplace_back(tokens[i].text);
        }
        return Alphabet(std::move(names), file_.mode);
    }

    void mapping(std::string_view body, const std::vector<Token>& tokens) {
        if (!current_) {
            fail(tokens[0].column, "unexpected `" + std::string(tokens[0].text) + "`");
        }
        if (tokens.size() < 2 || tokens[1].text != "=") {
            fail(tokens[0].column, "expected `<symbol> = <word>`");
        }
        const auto generator = file_.sigma.index_of(tokens[0].text);
        if (!generator) {
            fail(tokens[0].column, "unknown symbol `" + std::string(tokens[0].text) + "` in sigma");
        }
        if (current_->images.count(*generator)) {
            fail(tokens[0].column, "duplicate mapping for `" + std::string(tokens[0].text) + "`");
        }
        const std::size_t rhs = tokens[1].column; // column of '=' (1-based) == offset after it
        if (tokens.size() < 3) {
            fail(rhs, "missing image after `=`");
        }
        current_->images.emplace(*generator,
                                 parse_word(file_.delta, body.substr(rhs), line_no_, rhs));
    }

    void finish_map() {
        if (!current_) {
            return;
        }
        std::vector<Word> images;
        for (std::size_t a = 0; a < file_.sigma.size(); ++a) {
            auto it = current_->images.find(a);
            if (it == current_->images.end()) {
                throw ParseError(current_->line, 1,
                                 "map `" + current_->name + "` has no mapping for `" +
                                     file_.sigma.symbol(a) + "`");
            }
            images.push_back(it->second);
        }
        file_.maps.push_back({current_->name, Morphism(file_.sigma, file_.delta, std::move(images))});
        current_.reset();
    }

    struct Pending {
        std::string name;
        std::size_t line;
        std::map<std::size_t, Word> images;
    };

    std::vector<std::string_view> lines_;
    std::size_t min_maps_;
    std::size_t line_no_ = 0;
    bool saw_mode_ = false;
    bool saw_sigma_ = false;
    bool saw_delta_ = false;
    std::set<std::string> maps_started_;
    std::optional<Pending> current_;
    MorphismFile file_;
};

std::string join(const std::vector<std::string>& symbols) {
    std::string out;
    for (const auto& s : symbols) {
        out += ' ';
        out += s;
    }
    return out;
}

} // namespace

Instance MorphismFile::instance() const {
    if (maps.size() < 2) {
        throw std::invalid_argument("instance needs two maps");
    }
    return Instance(maps[0].map, maps[1].map);
}

std::vector<Morphism> MorphismFile::morphisms() const {
    std::vector<Morphism> out;
    for (const auto& m : maps) {
        out.push_back(m.map);
    }
    return out;
}

MorphismFile parse(std::string_view text, std::size_t min_maps) {
    return Parser(text, min_maps).run();
}

Instance parse_instance(std::string_view text) { return parse(text, 2).instance(); }

std::string serialize(const MorphismFile& file) {
    std::ostringstream out;
    out << "mode " << to_string(file.mode) << '\n';
    out << "sigma" << join(file.sigma.symbols()) << '\n';
    out << "delta" << join(file.delta.symbols()) << '\n';
    for (const auto& [name, map] : file.maps) {
        out << "map " << name << '\n';
        for (std::size_t a = 0; a < file.sigma.size(); ++a) {
            out << file.sigma.symbol(a) << " = " << to_string(map.image(a)) << '\n';
        }
    }
    return out.str();
}

std::string serialize_instance(const Instance& instance, std::string_view g_name,
                               std::string_view h_name) {
    return serialize(MorphismFile{instance.mode(),
                                  instance.sigma(),
                                  instance.delta(),
                                  {{std::string(g_name), instance.g()},
                                   {std::string(h_name), instance.h()}}});
}

std::string serialize(const EqualiserResult& result) {
    std::ostringstream out;
    out << "case " << to_string(result.termination) << '\n';
    out << "basis " << result.basis.size() << '\n';
    for (std::size_t i = 0; i < result.basis.size(); ++i) {
        out << result.psi.domain().symbol(i) << " = " << to_string(result.basis[i]) << '\n';
    }
    return out.str();
}

std::string serialize_psi(const Morphism& psi, std::string_view name) {
    return serialize(MorphismFile{psi.mode(), psi.domain(), psi.codomain(),
                                  {{std::string(name), psi}}});
}

} // namespace pcpeq::io
