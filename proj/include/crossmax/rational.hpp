#ifndef CROSSMAX_RATIONAL_HPP
#define CROSSMAX_RATIONAL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace crossmax {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses an integer or a fraction `p/q`. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Integer values print without a denominator, everything else as `p/q`.
std::string to_string(const Rational& value);

Integer floor_of(const Rational& value);

/// Exact binomial coefficient; 0 when k < 0 or k > n.
std::int64_t binom(std::int64_t n, std::int64_t k);

/// Edge weights multiplied by the lcm of their denominators.
///
/// Search kernels work on these int64 values; a pair of edges then contributes
/// `w[e] * w[f]`, which is the true rational weight product times `scale^2`.
struct ScaledWeights {
    std::vector<std::int64_t> values;
    Integer scale = 1;

    Rational unscale_pair_sum(std::int64_t sum) const;
    Rational unscale_sum(std::int64_t sum) const;
};

/// Throws std::overflow_error when `max_pair_total` (an upper bound on any pair
/// sum the caller will form, in rational units) would not fit into int64.
ScaledWeights scale_to_integers(std::span<const Rational> weights, const Rational& max_pair_total);

}  // namespace crossmax

#endif  // CROSSMAX_RATIONAL_HPP
