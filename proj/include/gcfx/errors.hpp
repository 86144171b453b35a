#pragma once

#include <stdexcept>
#include <string>

namespace gcfx {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A generated partial coefficient was not a positive integer (or positive
// rational for rational streams).
struct invalid_coefficient_error : error {
    using error::error;
};

// An equivalence scaling factor e_n was zero.
struct invalid_scaling_error : error {
    using error::error;
};

// Degenerate linear fractional map (q = 0 or t = 0).
struct invalid_map_error : error {
    using error::error;
};

struct invalid_value_error : error {
    using error::error;
};

// A theorem's hypothesis does not hold for the given parameters.
struct condition_violated_error : error {
    using error::error;
};

// Ceiling could not be resolved by interval arithmetic at the precision cap.
struct tie_unresolved_error : error {
    using error::error;
};

// An audit enclosure was too wide to decide an inequality; recoverable by
// building a deeper plan or evaluating further.
struct needs_more_precision_error : error {
    using error::error;
};

// Denominator bit length exceeded the configured cap.
struct resource_limit_error : error {
    using error::error;
};

struct family_param_error : error {
    using error::error;
};

struct usage_error : error {
    using error::error;
};

} // namespace gcfx
