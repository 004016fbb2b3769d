#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace snakefrac {

// Bad user input: malformed continued fractions, out-of-range indices,
// domain violations such as a first entry below 2. CLI exit code 1.
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Enumeration would exceed the configured matching limit. The predicted
// count is known before any work happens. CLI exit code 2.
struct limit_error : std::runtime_error {
    limit_error(const mpz_class& predicted_count, unsigned long long limit_value)
        : limit_error("predicted count " + predicted_count.get_str() + " exceeds the limit of "
                          + std::to_string(limit_value),
                      predicted_count, limit_value) {}

    limit_error(const std::string& msg, const mpz_class& predicted_count, unsigned long long limit_value)
        : std::runtime_error(msg), predicted(predicted_count), limit(limit_value) {}

    mpz_class predicted;
    unsigned long long limit;
};

// A mathematical invariant that the theory guarantees failed at runtime:
// cross-method disagreement, a non-polynomial formula result, a broken
// matching completion. CLI exit code 3.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw consistency_error(what);
}

}  // namespace snakefrac
