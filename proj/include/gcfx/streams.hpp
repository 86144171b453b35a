#pragma once

// Lazy partial-coefficient sequences. A stream hands out the pair
// (a_n, b_n) for any index n >= 1 together with the integer part b_0.
// Generators must be pure: the same index always yields the same pair.

#include "gcfx/errors.hpp"
#include "gcfx/numeric.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <utility>

namespace gcfx {

template <class Number>
struct coefficient_pair {
    Number a;
    Number b;
};

template <class Number>
class basic_stream {
  public:
    using pair_type = coefficient_pair<Number>;
    using generator_type = std::function<pair_type(std::uint64_t)>;

    basic_stream(Number b0, generator_type gen, std::string label = {})
        : b0_(std::move(b0)), gen_(std::move(gen)), label_(std::move(label)) {
        if (b0_ < 0) throw invalid_coefficient_error("integer part b0 must be non-negative");
    }

    // n >= 1. Rejects non-positive coefficients at generation time.
    pair_type at(std::uint64_t n) const {
        if (n == 0) throw invalid_value_error("partial coefficients are indexed from 1");
        pair_type p = gen_(n);
        if (p.a <= 0 || p.b <= 0)
            throw invalid_coefficient_error("stream \"" + label_ + "\" produced a non-positive coefficient at index " +
                                            std::to_string(n));
        return p;
    }

    const Number& integer_part() const { return b0_; }
    const std::string& label() const { return label_; }

  private:
    Number b0_;
    generator_type gen_;
    std::string label_;
};

using coefficient_stream = basic_stream<bigint>;
using rational_stream = basic_stream<bigrat>;

inline coefficient_stream constant_stream(const bigint& a, const bigint& b, bigint b0 = 0) {
    return coefficient_stream(std::move(b0), [a, b](std::uint64_t) { return coefficient_pair<bigint>{a, b}; },
                              "const(" + a.str() + "," + b.str() + ")");
}

} // namespace gcfx
