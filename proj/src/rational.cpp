#include "crossmax/rational.hpp"

#include <limits>
#include <stdexcept>

#include <boost/integer/common_factor_rt.hpp>

namespace crossmax {

namespace {

Integer parse_integer(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') i = 1;
    if (i == text.size()) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9') {
            throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        }
    }
    return Integer(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const Integer num = parse_integer(text.substr(0, slash));
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

Integer floor_of(const Rational& value) {
    Integer q = numerator(value) / denominator(value);
    // cpp_int division truncates toward zero
    if (value < 0 && q * denominator(value) != numerator(value)) q -= 1;
    return q;
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Rational ScaledWeights::unscale_pair_sum(std::int64_t sum) const {
    return Rational(Integer(sum), scale * scale);
}

Rational ScaledWeights::unscale_sum(std::int64_t sum) const { return Rational(Integer(sum), scale); }

ScaledWeights scale_to_integers(std::span<const Rational> weights, const Rational& max_pair_total) {
    ScaledWeights out;
    for (const auto& w : weights) {
        out.scale = boost::integer::lcm(out.scale, Integer(denominator(w)));
    }
    const Rational bound = max_pair_total * Rational(out.scale * out.scale) + 1;
    const Integer limit = std::numeric_limits<std::int64_t>::max() / 4;
    if (bound > Rational(limit)) throw std::overflow_error("weighted instance too large for 64-bit search");
    out.values.reserve(weights.size());
    for (const auto& w : weights) {
        const Integer v = numerator(w) * (out.scale / denominator(w));
        if (v > limit) throw std::overflow_error("edge weight too large for 64-bit search");
        out.values.push_back(static_cast<std::int64_t>(v));
    }
    return out;
}

}  // namespace crossmax
