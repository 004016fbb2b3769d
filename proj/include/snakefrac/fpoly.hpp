#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "snakefrac/contfrac.hpp"
#include "snakefrac/errors.hpp"
#include "snakefrac/laurent.hpp"

namespace snakefrac {

// Both symbolic computations of the F-polynomial are written once, over an
// abstract commutative ring with distinguished invertible elements y_j.
// Instantiations: exact Laurent polynomials (the public API), the all-ones
// ring (counting: y_j -> 1), and modular evaluation at random points (the
// large-scale agreement probe).
template <class R>
concept coefficient_ring = requires(const R r, const typename R::value_type& v, int j, bool inv) {
    typename R::value_type;
    { r.one() } -> std::convertible_to<typename R::value_type>;
    { r.add(v, v) } -> std::convertible_to<typename R::value_type>;
    { r.mul(v, v) } -> std::convertible_to<typename R::value_type>;
    { r.y(j) } -> std::convertible_to<typename R::value_type>;
    { r.y_range(j, j, inv) } -> std::convertible_to<typename R::value_type>;
};

struct LaurentRing {
    using value_type = LaurentPolynomial;
    value_type one() const { return LaurentPolynomial::one(); }
    value_type add(const value_type& a, const value_type& b) const { return a.plus(b); }
    value_type mul(const value_type& a, const value_type& b) const { return a.times(b); }
    value_type y(int j) const { return LaurentPolynomial::variable(j); }
    value_type y_range(int lo, int hi, bool inverted) const { return variable_range_product(lo, hi, inverted); }
};

struct AllOnesRing {
    using value_type = mpz_class;
    value_type one() const { return 1; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type y(int) const { return 1; }
    value_type y_range(int, int, bool) const { return 1; }
};

// Arithmetic mod the Mersenne prime 2^61 - 1, with y_j mapped to seeded
// pseudorandom units.
class ModEvalRing {
public:
    using value_type = std::uint64_t;
    static constexpr std::uint64_t prime = (std::uint64_t(1) << 61) - 1;

    explicit ModEvalRing(std::uint64_t seed);

    value_type one() const { return 1; }
    value_type add(value_type a, value_type b) const;
    value_type mul(value_type a, value_type b) const;
    value_type y(int j) const;
    value_type y_range(int lo, int hi, bool inverted) const;

private:
    std::uint64_t seed_;
    value_type point(int j) const;    // the unit substituted for y_j
    value_type inverse(value_type) const;
};

namespace detail {

// phi_i: the F-polynomial of the i-th zigzag piece. Odd i climbs from the
// first tile of the piece, even i climbs down from the last; either way it
// has constant term 1 and exactly a_i terms.
template <coefficient_ring R>
typename R::value_type zigzag_fpoly_in(const R& r, const ContinuedFraction& cf, int i) {
    if (i < 1 || i > cf.length()) throw validation_error("entry index " + std::to_string(i) + " out of range");
    int lo = static_cast<int>(cf.partial_sum(i - 1));
    int hi = static_cast<int>(cf.partial_sum(i));
    auto acc = r.one();
    auto prod = r.one();
    if (i % 2 == 1) {
        for (int j = lo + 1; j <= hi - 1; ++j) {
            prod = r.mul(prod, r.y(j));
            acc = r.add(acc, prod);
        }
    } else {
        for (int j = hi - 1; j >= lo + 1; --j) {
            prod = r.mul(prod, r.y(j));
            acc = r.add(acc, prod);
        }
    }
    return acc;
}

// C_i: the correction monomial, a plain product of the first ell_{i-1}
// variables for odd i and an inverted product up to ell_i - 1 for even i.
template <coefficient_ring R>
typename R::value_type correction_in(const R& r, const ContinuedFraction& cf, int i, bool invert = false) {
    if (i < 1 || i > cf.length()) throw validation_error("entry index " + std::to_string(i) + " out of range");
    if (cf.entry(1) < 2) throw validation_error("correction monomials need a_1 >= 2");
    if (i % 2 == 1) return r.y_range(1, static_cast<int>(cf.partial_sum(i - 1)), invert);
    return r.y_range(1, static_cast<int>(cf.partial_sum(i)) - 1, !invert);
}

template <coefficient_ring R>
typename R::value_type laurent_entry_in(const R& r, const ContinuedFraction& cf, int i) {
    return r.mul(zigzag_fpoly_in(r, cf, i), correction_in(r, cf, i));
}

// N over ring entries: N[] = 1, N[x_1] = x_1,
// N[x_1..x_k] = x_k N[x_1..x_{k-1}] + N[x_1..x_{k-2}].
template <coefficient_ring R>
typename R::value_type continuant_in(const R& r, std::span<const typename R::value_type> entries) {
    if (entries.empty()) return r.one();
    auto prev = r.one();        // N of the two-shorter prefix, seeded so N[x_1] = x_1
    auto cur = entries.front();
    for (auto& x : entries.subspan(1)) {
        auto next = r.add(r.mul(x, cur), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

template <coefficient_ring R>
typename R::value_type formula_in(const R& r, const ContinuedFraction& cf) {
    if (cf.empty()) throw validation_error("F-polynomial of an empty continued fraction");
    if (cf.entry(1) < 2) throw validation_error("F-polynomial formula needs a_1 >= 2");
    int n = cf.length();
    std::vector<typename R::value_type> entries;
    entries.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) entries.push_back(laurent_entry_in(r, cf, i));
    auto big = continuant_in<R>(r, entries);
    if (n % 2 == 0) big = r.mul(correction_in(r, cf, n, /*invert=*/true), big);
    return big;
}

// The grafting recursion, run iteratively over prefixes:
//   F_0 = 1, F_1 = phi_1,
//   F_m = g_m * F_{m-1} * phi_m + h_m * F_{m-2},
// where for odd m the graft factor g_m is the connecting-tile variable and
// h_m = 1, and for even m g_m = 1 and h_m is the product of variables from
// position ell_{m-2} (an index of 0 contributes nothing) through ell_m - 1.
template <coefficient_ring R>
typename R::value_type graft_in(const R& r, const ContinuedFraction& cf) {
    if (cf.empty()) return r.one();  // the single-edge graph has F = 1
    if (cf.entry(1) < 2) throw validation_error("F-polynomial grafting needs a_1 >= 2");
    auto prev = r.one();  // F of the empty prefix
    auto cur = zigzag_fpoly_in(r, cf, 1);
    for (int m = 2; m <= cf.length(); ++m) {
        typename R::value_type graft_var =
            m % 2 == 1 ? r.y(static_cast<int>(cf.partial_sum(m - 1))) : r.one();
        typename R::value_type bypass =
            m % 2 == 1 ? r.one()
                       : r.y_range(static_cast<int>(cf.partial_sum(m - 2)),
                                   static_cast<int>(cf.partial_sum(m)) - 1, false);
        auto next = r.add(r.mul(r.mul(graft_var, cur), zigzag_fpoly_in(r, cf, m)), r.mul(bypass, prev));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace detail

// --- public, exact (Laurent polynomial) surface ---

LaurentPolynomial correction_monomial(const ContinuedFraction& cf, int i);
LaurentPolynomial zigzag_fpoly(const ContinuedFraction& cf, int i);
LaurentPolynomial laurent_entry(const ContinuedFraction& cf, int i);
LaurentPolynomial continuant_poly(std::span<const LaurentPolynomial> entries);

// Closed form: N over the Laurent entries, times the inverse correction
// monomial when n is even. The result provably clears all denominators;
// a surviving negative exponent is reported as a consistency error.
LaurentPolynomial fpoly_formula(const ContinuedFraction& cf);

// The grafting recursion. Independent of fpoly_formula except for the
// shared zigzag factors.
LaurentPolynomial fpoly_graft(const ContinuedFraction& cf);

// --- homomorphic images, for scale checks ---

mpz_class fpoly_formula_all_ones(const ContinuedFraction& cf);
mpz_class fpoly_graft_all_ones(const ContinuedFraction& cf);
std::uint64_t fpoly_formula_mod(const ContinuedFraction& cf, std::uint64_t seed);
std::uint64_t fpoly_graft_mod(const ContinuedFraction& cf, std::uint64_t seed);

}  // namespace snakefrac
