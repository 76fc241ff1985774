#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pcpeq/instance.hpp"
#include "pcpeq/morphism.hpp"

/// Line-oriented text format:
///
///     mode group
///     sigma a b c
///     delta x y z
///     map g
///     a = x y x x
///     b = y^-1
///     ...
///
/// `#` starts a comment, blank lines are skipped, CRLF is accepted.
namespace pcpeq::io {

struct NamedMorphism {
    std::string name;
    Morphism map;
};

struct MorphismFile {
    Mode mode = Mode::monoid;
    Alphabet sigma;
    Alphabet delta;
    std::vector<NamedMorphism> maps;

    Instance instance() const; // first two maps
    std::vector<Morphism> morphisms() const;
};

/// Throws ParseError (with line and column) on malformed input or when the
/// file has fewer than min_maps map blocks.
MorphismFile parse(std::string_view text, std::size_t min_maps = 2);
Instance parse_instance(std::string_view text);

std::string serialize(const MorphismFile& file);
std::string serialize_instance(const Instance& instance, std::string_view g_name = "g",
                               std::string_view h_name = "h");

/// `case <name>`, `basis <n>`, then `<generator> = <word>` per basis element.
std::string serialize(const EqualiserResult& result);

/// psi as a single-map file (sigma = psi's generators, delta = Sigma).
std::string serialize_psi(const Morphism& psi, std::string_view name = "psi");

} // namespace pcpeq::io
