#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace snakefrac {

// Exact rational in lowest terms. Denominator is always positive.
struct Rational {
    mpz_class num;
    mpz_class den;

    Rational(mpz_class n, mpz_class d);

    std::string to_string() const;  // "30/13"

    friend bool operator==(const Rational&, const Rational&) = default;
};

// A positive continued fraction a_1,...,a_n: every entry is an integer >= 1.
// The empty sequence is allowed as a value (it backs the single-edge base
// case of the grafting recursion) but parse() rejects it unless asked.
class ContinuedFraction {
public:
    ContinuedFraction() = default;
    explicit ContinuedFraction(std::vector<std::int64_t> entries);

    // Accepts comma- and/or whitespace-separated base-10 integers: "2,3,4", "2 3 4", "2, 2".
    static ContinuedFraction parse(std::string_view text, bool allow_empty = false);

    int length() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }

    // 1-based a_i.
    std::int64_t entry(int i) const;

    const std::vector<std::int64_t>& entries() const { return entries_; }

    // a_1 + ... + a_i for 0 <= i <= n; partial_sum(0) == 0.
    std::int64_t partial_sum(int i) const;

    // The first m entries, 0 <= m <= n.
    ContinuedFraction prefix(int m) const;

    // Entries a_2,...,a_n.
    ContinuedFraction tail() const;

    std::string to_string() const;  // "2,3,4"

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

private:
    std::vector<std::int64_t> entries_;
    std::vector<std::int64_t> sums_;  // sums_[i] = a_1 + ... + a_i, sums_[0] = 0
};

// The convergent numerator N[a_1,...,a_n]:
//   N[] = 1,  N[a_1] = a_1,  N[a_1..a_n] = a_n * N[a_1..a_{n-1}] + N[a_1..a_{n-2}].
mpz_class continuant(const ContinuedFraction& cf);

// Exact value of a_1 + 1/(a_2 + 1/(... + 1/a_n)). Requires a nonempty cf.
Rational value(const ContinuedFraction& cf);

}  // namespace snakefrac
