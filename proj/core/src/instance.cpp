#include "pcpeq/instance.hpp"

#include <algorithm>
#include <array>

namespace pcpeq {

Instance::Instance(Morphism g, Morphism h) : g_(std::move(g)), h_(std::move(h)) {
    if (!(g_.domain() == h_.domain())) {
        throw AlphabetMismatch("instance morphisms have different domains");
    }
    if (!(g_.codomain() == h_.codomain())) {
        throw AlphabetMismatch("instance morphisms have different codomains");
    }
}

namespace {

constexpr std::array<std::pair<TerminationCase, std::string_view>, 4> kCaseNames{{
    {TerminationCase::alphabet_size_1, "alphabet-size-1"},
    {TerminationCase::all_length_1, "all-length-1"},
    {TerminationCase::cycle, "cycle"},
    {TerminationCase::empty_alphabet, "empty-alphabet"},
}};

std::vector<std::int32_t> encode(const Word& w) {
    std::vector<std::int32_t> out;
    out.reserve(w.size());
    for (Letter l : w.letters()) {
        out.push_back(static_cast<std::int32_t>(l.index + 1) * l.sign);
    }
    return out;
}

} // namespace

std::string_view to_string(TerminationCase c) {
    for (const auto& [value, name] : kCaseNames) {
        if (value == c) {
            return name;
        }
    }
    return "unknown";
}

std::optional<TerminationCase> termination_case_from_string(std::string_view text) {
    for (const auto& [value, name] : kCaseNames) {
        if (name == text) {
            return value;
        }
    }
    return std::nullopt;
}

CanonicalInstance canonicalize(const Instance& instance) {
    CanonicalInstance c;
    c.domain_size = instance.sigma().size();
    c.codomain_size = instance.delta().size();
    for (std::size_t a = 0; a < c.domain_size; ++a) {
        c.images.emplace_back(encode(instance.g().image(a)), encode(instance.h().image(a)));
    }
    std::sort(c.images.begin(), c.images.end());
    return c;
}

} // namespace pcpeq
