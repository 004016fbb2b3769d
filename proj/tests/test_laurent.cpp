#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "snakefrac/errors.hpp"
#include "snakefrac/laurent.hpp"

using namespace snakefrac;

namespace {

LaurentPolynomial y(int j, int e = 1) { return LaurentPolynomial::variable(j, e); }
LaurentPolynomial c(long v) { return LaurentPolynomial::from_monomial(Monomial::one(), v); }

// Hand-rolled generator: up to four terms, variables y1..y4, exponents in
// [-2, 2], coefficients in [-3, 3].
LaurentPolynomial random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), var(1, 4), exp(-2, 2), coeff(-3, 3);
    LaurentPolynomial p;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m;
        int nf = nterms(rng);
        for (int f = 0; f < nf; ++f) m = m.times(Monomial::variable(var(rng), exp(rng)));
        p = p.plus(LaurentPolynomial::from_monomial(m, coeff(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("addition merges and cancels") {
    CHECK((c(1) + y(1)) + (y(1) * y(2)) == c(1) + y(1) + y(1) * y(2));
    CHECK(y(3) + y(3).times(Monomial::one(), -1) == LaurentPolynomial::zero());
    CHECK((c(1) + y(1)) + (c(1) + y(3)) == c(2) + y(1) + y(3));
}

TEST_CASE("multiplication distributes and cancels exponents") {
    CHECK((c(1) + y(1)) * (c(1) + y(3)) == c(1) + y(1) + y(3) + y(1) * y(3));
    CHECK(y(1, -1) * (y(1) * y(2)) == y(2));
}

TEST_CASE("the second Laurent entry of the four-entry example") {
    // (1 + y4 + y3 y4) / (y1 y2 y3 y4)
    LaurentPolynomial numerator = c(1) + y(4) + y(3) * y(4);
    LaurentPolynomial entry = numerator * variable_range_product(1, 4, true);
    LaurentPolynomial expected = variable_range_product(1, 4, true)
                                 + y(1, -1) * y(2, -1) * y(3, -1)
                                 + y(1, -1) * y(2, -1);
    CHECK(entry == expected);
    CHECK_FALSE(entry.is_polynomial());
}

TEST_CASE("range products") {
    CHECK(variable_range_product(1, 0) == c(1));
    CHECK(variable_range_product(1, 4, true)
          == y(1, -1) * y(2, -1) * y(3, -1) * y(4, -1));
    CHECK(variable_range_product(0, 3) == y(1) * y(2) * y(3));  // index 0 contributes nothing
}

TEST_CASE("eval_all_ones sums coefficients") {
    LaurentPolynomial f = c(1) + y(1) + y(3) + y(1) * y(3) + y(1) * y(2) * y(3);
    CHECK(f.eval_all_ones() == 5);
    CHECK(LaurentPolynomial::zero().eval_all_ones() == 0);
}

TEST_CASE("term queries") {
    CHECK(y(1, -1).is_polynomial() == false);
    CHECK((c(1) + y(1)).all_coefficients_one());
    CHECK_FALSE((c(2) + y(1)).all_coefficients_one());
    CHECK((c(1) + y(1)).term_count() == 2);
    CHECK((c(1) + y(1)).constant_term() == 1);
    CHECK((c(1) + y(1) + y(1) * y(2)).top_term() == Monomial::range_product(1, 2));
}

TEST_CASE("canonical text ordering matches the published polynomial") {
    LaurentPolynomial f = c(1) + y(1) + y(3) + y(1) * y(3) + y(1) * y(2) * y(3);
    CHECK(f.to_text() == "1 + y1 + y3 + y1*y3 + y1*y2*y3");
    CHECK(LaurentPolynomial::zero().to_text() == "0");
    CHECK((y(1, -1) * y(2)).to_text() == "y1^-1*y2");
    CHECK((c(-2) * y(1) + c(1)).to_text() == "1 - 2*y1");
}

TEST_CASE("latex output") {
    // the degree-0 monomial sorts before the degree-1 one
    LaurentPolynomial f = c(1) + y(1) + y(10) * y(1, -1);
    CHECK(f.to_latex() == "1 + y_1^{-1}y_{10} + y_1");
    CHECK((y(1) * y(2) * y(3)).to_latex() == "y_1y_2y_3");
}

TEST_CASE("ring axioms on random inputs") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPolynomial a = random_poly(rng), b = random_poly(rng), d = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + d == a + (b + d));
        CHECK((a * b) * d == a * (b * d));
        CHECK(a * (b + d) == a * b + a * d);
        CHECK(a * LaurentPolynomial::one() == a);
        CHECK((a * b).eval_all_ones() == a.eval_all_ones() * b.eval_all_ones());
    }
}

TEST_CASE("json round-trips") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPolynomial p = random_poly(rng);
        auto parsed = LaurentPolynomial::from_json(nlohmann::json::parse(p.to_canonical_string(PolyFormat::json)));
        CHECK(parsed == p);
    }
}

TEST_CASE("json schema") {
    LaurentPolynomial p = c(1) + y(2, -1).times(Monomial::one(), 3);
    nlohmann::json j = p.to_json();
    REQUIRE(j.contains("terms"));
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["coeff"] == "3");
    CHECK(j["terms"][0]["exps"]["2"] == -1);
    CHECK(j["terms"][1]["coeff"] == "1");
    CHECK(j["terms"][1]["exps"].empty());
}

TEST_CASE("json rejects malformed input") {
    CHECK_THROWS_AS(LaurentPolynomial::from_json(nlohmann::json::parse("{}")), validation_error);
    CHECK_THROWS_AS(LaurentPolynomial::from_json(nlohmann::json::parse(R"({"terms":[{"coeff":"x","exps":{}}]})")),
                    validation_error);
    CHECK_THROWS_AS(
        LaurentPolynomial::from_json(nlohmann::json::parse(
            R"({"terms":[{"coeff":"1","exps":{}},{"coeff":"2","exps":{}}]})")),
        validation_error);
}

TEST_CASE("equal polynomials print identical bytes") {
    LaurentPolynomial a = (c(1) + y(1)) * (c(1) + y(3));
    LaurentPolynomial b = c(1) + y(3) + y(1) + y(3) * y(1);
    REQUIRE(a == b);
    CHECK(a.to_text() == b.to_text());
    CHECK(a.to_json().dump() == b.to_json().dump());
}
