#include "snakefrac/fpoly.hpp"

#include <algorithm>

namespace snakefrac {

ModEvalRing::ModEvalRing(std::uint64_t seed) : seed_(seed) {}

ModEvalRing::value_type ModEvalRing::add(value_type a, value_type b) const {
    std::uint64_t s = a + b;
    if (s >= prime) s -= prime;
    return s;
}

ModEvalRing::value_type ModEvalRing::mul(value_type a, value_type b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % prime);
}

ModEvalRing::value_type ModEvalRing::point(int j) const {
    // splitmix64 over (seed, j), folded into [1, prime-1]
    std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(j);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z % (prime - 1) + 1;
}

ModEvalRing::value_type ModEvalRing::inverse(value_type a) const {
    // Fermat: a^(p-2) mod p
    value_type result = 1;
    value_type base = a;
    std::uint64_t e = prime - 2;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

ModEvalRing::value_type ModEvalRing::y(int j) const { return point(j); }

ModEvalRing::value_type ModEvalRing::y_range(int lo, int hi, bool inverted) const {
    value_type prod = 1;
    for (int j = std::max(lo, 1); j <= hi; ++j) prod = mul(prod, point(j));
    return inverted ? inverse(prod) : prod;
}

LaurentPolynomial correction_monomial(const ContinuedFraction& cf, int i) {
    return detail::correction_in(LaurentRing{}, cf, i);
}

LaurentPolynomial zigzag_fpoly(const ContinuedFraction& cf, int i) {
    return detail::zigzag_fpoly_in(LaurentRing{}, cf, i);
}

LaurentPolynomial laurent_entry(const ContinuedFraction& cf, int i) {
    return detail::laurent_entry_in(LaurentRing{}, cf, i);
}

LaurentPolynomial continuant_poly(std::span<const LaurentPolynomial> entries) {
    return detail::continuant_in(LaurentRing{}, entries);
}

LaurentPolynomial fpoly_formula(const ContinuedFraction& cf) {
    LaurentPolynomial f = detail::formula_in(LaurentRing{}, cf);
    internal_check(f.is_polynomial(),
                   "the formula left a negative exponent in F[" + cf.to_string() + "]");
    return f;
}

LaurentPolynomial fpoly_graft(const ContinuedFraction& cf) {
    if (cf.empty()) throw validation_error("F-polynomial of an empty continued fraction");
    LaurentPolynomial f = detail::graft_in(LaurentRing{}, cf);
    internal_check(f.is_polynomial(),
                   "grafting left a negative exponent in F[" + cf.to_string() + "]");
    return f;
}

mpz_class fpoly_formula_all_ones(const ContinuedFraction& cf) {
    return detail::formula_in(AllOnesRing{}, cf);
}

mpz_class fpoly_graft_all_ones(const ContinuedFraction& cf) {
    if (cf.empty()) throw validation_error("F-polynomial of an empty continued fraction");
    return detail::graft_in(AllOnesRing{}, cf);
}

std::uint64_t fpoly_formula_mod(const ContinuedFraction& cf, std::uint64_t seed) {
    return detail::formula_in(ModEvalRing{seed}, cf);
}

std::uint64_t fpoly_graft_mod(const ContinuedFraction& cf, std::uint64_t seed) {
    if (cf.empty()) throw validation_error("F-polynomial of an empty continued fraction");
    return detail::graft_in(ModEvalRing{seed}, cf);
}

}  // namespace snakefrac
