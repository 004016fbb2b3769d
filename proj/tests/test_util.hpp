#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "snakefrac/contfrac.hpp"

namespace snakefrac::testutil {

// All continued fractions with 1 <= n <= max_len and entries in
// [1, max_entry], optionally restricted to a_1 >= 2.
inline void for_each_cf(int max_len, int max_entry, bool a1_at_least_2,
                        const std::function<void(const ContinuedFraction&)>& fn) {
    std::vector<std::int64_t> current;
    std::function<void()> walk = [&]() {
        if (!current.empty()) fn(ContinuedFraction(current));
        if (static_cast<int>(current.size()) == max_len) return;
        std::int64_t lo = current.empty() && a1_at_least_2 ? 2 : 1;
        for (std::int64_t a = lo; a <= max_entry; ++a) {
            current.push_back(a);
            walk();
            current.pop_back();
        }
    };
    walk();
}

// Independent oracle for the convergent numerator: the literal recursion,
// no shared code with continuant().
inline mpz_class naive_continuant(const std::vector<std::int64_t>& entries) {
    if (entries.empty()) return 1;
    if (entries.size() == 1) return entries[0];
    std::vector<std::int64_t> shorter(entries.begin(), entries.end() - 1);
    std::vector<std::int64_t> shortest(entries.begin(), entries.end() - 2);
    return entries.back() * naive_continuant(shorter) + naive_continuant(shortest);
}

}  // namespace snakefrac::testutil
