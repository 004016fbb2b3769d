#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace snakefrac {

// A Laurent monomial in y_1, y_2, ...: a sparse list of (variable, exponent)
// factors, sorted by variable, with no zero exponents. Exponents may be
// negative. The empty list is the monomial 1.
class Monomial {
public:
    Monomial() = default;

    static Monomial one() { return Monomial(); }
    static Monomial variable(int var, int exp = 1);

    // prod_{j=lo..hi} y_j (or its reciprocal). Indices <= 0 contribute
    // nothing (y_0 = 1); an empty range gives 1.
    static Monomial range_product(int lo, int hi, bool inverted = false);

    static Monomial from_factors(std::vector<std::pair<int, int>> factors);

    const std::vector<std::pair<int, int>>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    int exponent(int var) const;
    long long total_degree() const;
    bool has_negative_exponent() const;

    Monomial times(const Monomial& other) const;
    Monomial inverse() const;

    std::string to_text() const;   // "y3^2*y5", "1"
    std::string to_latex() const;  // "y_3^{2}y_5"

    // Canonical term order: total degree ascending, ties broken so that the
    // monomial with the larger exponent at the earliest differing variable
    // comes first. Reproduces the ordering 1, y1, y3, y1*y3, y1*y2*y3.
    static int compare(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::pair<int, int>> factors_;
};

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::compare(a, b) < 0; }
};

enum class PolyFormat { text, latex, json };

// Sparse Laurent polynomial: canonical-order map from monomial to nonzero
// arbitrary-precision coefficient. The zero polynomial is the empty map.
class LaurentPolynomial {
public:
    using TermMap = std::map<Monomial, mpz_class, MonomialLess>;

    LaurentPolynomial() = default;

    static LaurentPolynomial zero() { return LaurentPolynomial(); }
    static LaurentPolynomial one() { return from_monomial(Monomial::one()); }
    static LaurentPolynomial from_monomial(Monomial m, mpz_class coeff = 1);
    static LaurentPolynomial variable(int var, int exp = 1) { return from_monomial(Monomial::variable(var, exp)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    mpz_class coefficient(const Monomial& m) const;
    mpz_class constant_term() const { return coefficient(Monomial::one()); }

    // Last term in canonical order (the full product y_1...y_d for snake
    // graph F-polynomials). Requires a nonzero polynomial.
    const Monomial& top_term() const;

    LaurentPolynomial plus(const LaurentPolynomial& other) const;
    LaurentPolynomial minus(const LaurentPolynomial& other) const;
    LaurentPolynomial times(const LaurentPolynomial& other) const;
    LaurentPolynomial times(const Monomial& m, const mpz_class& coeff = 1) const;

    mpz_class eval_all_ones() const;  // sum of coefficients
    bool is_polynomial() const;       // no negative exponents anywhere
    bool all_coefficients_one() const;

    std::string to_text() const;
    std::string to_latex() const;
    nlohmann::json to_json() const;
    static LaurentPolynomial from_json(const nlohmann::json& j);

    std::string to_canonical_string(PolyFormat format) const;

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.plus(b); }
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.minus(b); }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.times(b); }

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

private:
    TermMap terms_;
};

// prod_{j=lo..hi} y_j as a one-term polynomial, reciprocal when inverted.
LaurentPolynomial variable_range_product(int lo, int hi, bool inverted = false);

}  // namespace snakefrac
