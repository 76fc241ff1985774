#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pcpeq/words.hpp"

/// How common marked morphisms and immersions are among all morphisms with
/// images of length at most n.
namespace pcpeq::density {

using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Kind { marked_monoid, immersion_group };

std::string_view to_string(Kind kind);
std::optional<Kind> kind_from_string(std::string_view text);

inline constexpr std::uint64_t default_seed = 20061017;

struct Params {
    std::size_t k = 1;       // |Sigma|
    std::size_t m = 1;       // |Delta|
    std::size_t n = 1;       // max image length
    std::size_t samples = 0; // 0 = exact enumeration
    std::uint64_t seed = default_seed;
};

/// m! / (m^k (m-k)!); zero when k > m.
Rational marked_density_limit(std::size_t k, std::size_t m);

/// Reduced words of length n over m generators whose first letter is not in
/// A and whose last letter is not in B. Letters of A and B are signed.
/// Throws std::invalid_argument for n < 1.
Count reduced_word_count(std::size_t m, std::size_t n, const std::vector<Letter>& a,
                         const std::vector<Letter>& b);

/// Limit of the immersion fraction as n grows, assembled from the leading
/// behaviour of reduced_word_count per first/last letter class.
Rational immersion_density_limit(std::size_t k, std::size_t m);

struct Measurement {
    Rational empirical;
    Rational predicted;
};

/// Exact when params.samples == 0, otherwise Monte Carlo with params.seed.
/// Throws std::invalid_argument when k > m, m == 0 or n == 0.
Measurement measure_density(const Params& params, Kind kind);

std::string csv_header();
std::string csv_row(const Params& params, Kind kind, const Measurement& result);

} // namespace pcpeq::density
