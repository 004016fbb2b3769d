#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "snakefrac/errors.hpp"
#include "snakefrac/fpoly.hpp"
#include "snakefrac/matchings.hpp"
#include "test_util.hpp"

using namespace snakefrac;
using testutil::for_each_cf;

namespace {

LaurentPolynomial y(int j) { return LaurentPolynomial::variable(j); }
LaurentPolynomial one() { return LaurentPolynomial::one(); }

}  // namespace

TEST_CASE("correction monomials") {
    ContinuedFraction cf({2, 3, 4, 2});
    CHECK(correction_monomial(cf, 1) == one());
    CHECK(correction_monomial(cf, 3) == variable_range_product(1, 5));
    CHECK(correction_monomial(cf, 4) == variable_range_product(1, 10, true));
    CHECK_THROWS_AS(correction_monomial(cf, 5), validation_error);
    CHECK_THROWS_AS(correction_monomial(ContinuedFraction({1, 2}), 1), validation_error);
}

TEST_CASE("zigzag factors climb in the right direction") {
    ContinuedFraction cf({2, 3, 4});
    CHECK(zigzag_fpoly(cf, 1) == one() + y(1));
    CHECK(zigzag_fpoly(cf, 2) == one() + y(4) + y(3) * y(4));
    CHECK(zigzag_fpoly(cf, 3) == one() + y(6) + y(6) * y(7) + y(6) * y(7) * y(8));
}

TEST_CASE("zigzag factors have one term per unit and constant term 1") {
    for_each_cf(5, 4, true, [](const ContinuedFraction& cf) {
        for (int i = 1; i <= cf.length(); ++i) {
            LaurentPolynomial phi = zigzag_fpoly(cf, i);
            CHECK(phi.term_count() == static_cast<std::size_t>(cf.entry(i)));
            CHECK(phi.constant_term() == 1);
            CHECK(phi.is_polynomial());
        }
    });
}

TEST_CASE("Laurent entries of the four-entry example") {
    ContinuedFraction cf({2, 3, 4, 2});
    CHECK(laurent_entry(cf, 1) == one() + y(1));
    CHECK(laurent_entry(cf, 2) == (one() + y(4) + y(3) * y(4)) * variable_range_product(1, 4, true));
    CHECK(laurent_entry(cf, 3)
          == (one() + y(6) + y(6) * y(7) + y(6) * y(7) * y(8)) * variable_range_product(1, 5));
    CHECK(laurent_entry(cf, 4) == (one() + y(10)) * variable_range_product(1, 10, true));
}

TEST_CASE("the polynomial continuant expands as expected") {
    ContinuedFraction cf({2, 3, 4, 2});
    std::vector<LaurentPolynomial> L;
    for (int i = 1; i <= 4; ++i) L.push_back(laurent_entry(cf, i));

    std::vector<LaurentPolynomial> first3(L.begin(), L.begin() + 3);
    CHECK(continuant_poly(first3) == L[0] * L[1] * L[2] + L[0] + L[2]);

    CHECK(continuant_poly(L)
          == L[0] * L[1] * L[2] * L[3] + L[0] * L[1] + L[0] * L[3] + L[2] * L[3] + one());

    std::vector<LaurentPolynomial> single{L[2]};
    CHECK(continuant_poly(single) == L[2]);
    CHECK(continuant_poly(std::vector<LaurentPolynomial>{}) == one());
}

TEST_CASE("three-entry golden polynomial") {
    // expanded form of the published factored display
    LaurentPolynomial expected = (one() + y(1)) * (one() + y(4) + y(3) * y(4))
                                     * (one() + y(6) + y(6) * y(7) + y(6) * y(7) * y(8)) * y(5)
                                 + (one() + y(1))
                                 + (one() + y(6) + y(6) * y(7) + y(6) * y(7) * y(8))
                                       * (y(1) * y(2) * y(3) * y(4) * y(5));
    ContinuedFraction cf({2, 3, 4});
    LaurentPolynomial f = fpoly_formula(cf);
    CHECK(f == expected);
    CHECK(f.term_count() == 30);
    CHECK(f.eval_all_ones() == 30);
    CHECK(fpoly_graft(cf) == expected);
    CHECK(fpoly_from_matchings(build_snake_graph(cf)) == expected);
}

TEST_CASE("four-entry golden polynomial") {
    LaurentPolynomial phi3 = one() + y(6) + y(6) * y(7) + y(6) * y(7) * y(8);
    LaurentPolynomial expected =
        (one() + y(1)) * (one() + y(4) + y(3) * y(4)) * phi3 * (one() + y(10)) * y(5)
        + (one() + y(1)) * (one() + y(4) + y(3) * y(4)) * (y(5) * y(6) * y(7) * y(8) * y(9) * y(10))
        + (one() + y(1)) * (one() + y(10))
        + phi3 * (one() + y(10)) * (y(1) * y(2) * y(3) * y(4) * y(5))
        + variable_range_product(1, 10);
    ContinuedFraction cf({2, 3, 4, 2});
    LaurentPolynomial f = fpoly_formula(cf);
    CHECK(f == expected);
    CHECK(f.term_count() == 67);
    CHECK(f.eval_all_ones() == 67);
    CHECK(fpoly_graft(cf) == expected);
}

TEST_CASE("single- and two-entry cases") {
    CHECK(fpoly_formula(ContinuedFraction({2})) == one() + y(1));
    CHECK(fpoly_graft(ContinuedFraction({4})) == one() + y(1) + y(1) * y(2) + y(1) * y(2) * y(3));
    CHECK(fpoly_graft(ContinuedFraction({2, 2}))
          == (one() + y(1)) * (one() + y(3)) + y(1) * y(2) * y(3));
    CHECK(fpoly_graft(ContinuedFraction({2, 2}))
          == one() + y(1) + y(3) + y(1) * y(3) + y(1) * y(2) * y(3));
}

TEST_CASE("both methods reject a first entry below 2") {
    CHECK_THROWS_AS(fpoly_formula(ContinuedFraction({1, 3})), validation_error);
    CHECK_THROWS_AS(fpoly_graft(ContinuedFraction({1, 3})), validation_error);
    CHECK_THROWS_AS(fpoly_formula(ContinuedFraction()), validation_error);
    CHECK_THROWS_AS(fpoly_graft(ContinuedFraction()), validation_error);
}

TEST_CASE("three-way agreement with structure on a small grid") {
    for_each_cf(4, 3, true, [](const ContinuedFraction& cf) {
        LaurentPolynomial f = fpoly_formula(cf);
        CHECK(f == fpoly_graft(cf));
        CHECK(f == fpoly_from_matchings(build_snake_graph(cf)));

        mpz_class n = continuant(cf);
        CHECK(mpz_class(static_cast<unsigned long>(f.term_count())) == n);
        CHECK(f.eval_all_ones() == n);
        CHECK(f.constant_term() == 1);
        CHECK(f.all_coefficients_one());
        CHECK(f.is_polynomial());
        int d = static_cast<int>(cf.partial_sum(cf.length())) - 1;
        CHECK(f.top_term() == Monomial::range_product(1, d));
    });
}

TEST_CASE("zigzag factors equal the subgraph oracle") {
    for_each_cf(4, 4, true, [](const ContinuedFraction& cf) {
        SnakeGraph g = build_snake_graph(cf);
        for (int i = 1; i <= cf.length(); ++i) {
            if (cf.partial_sum(i - 1) + 1 > cf.partial_sum(i) - 1) continue;  // empty piece
            SnakeGraph h = subgraph_zigzag(g, cf, i);
            LaurentPolynomial oracle = fpoly_from_matchings(h, completed_minimal_matching(g, cf, i));
            CHECK(oracle == zigzag_fpoly(cf, i));
        }
    });
}

TEST_CASE("reflection invariance of the oracle") {
    for_each_cf(4, 3, true, [](const ContinuedFraction& cf) {
        LaurentPolynomial right = fpoly_from_matchings(build_snake_graph(cf, Step::Right));
        LaurentPolynomial up = fpoly_from_matchings(build_snake_graph(cf, Step::Up));
        CHECK(right == up);
    });
}

TEST_CASE("correction monomial identities from the proof") {
    for_each_cf(5, 4, true, [](const ContinuedFraction& cf) {
        for (int i = 3; i <= cf.length(); ++i) {
            LaurentPolynomial lhs = correction_monomial(cf, i);
            if (i % 2 == 1) {
                // C_i = y_{ell_{i-1}} * C_{i-1}^{-1}
                LaurentPolynomial rhs = y(static_cast<int>(cf.partial_sum(i - 1)))
                                        * detail::correction_in(LaurentRing{}, cf, i - 1, true);
                CHECK(lhs == rhs);
            } else {
                // (prod_{j=ell_{i-2}}^{ell_i - 1} y_j) * C_{i-2}^{-1} = C_i^{-1}
                LaurentPolynomial bypass = variable_range_product(static_cast<int>(cf.partial_sum(i - 2)),
                                                                  static_cast<int>(cf.partial_sum(i)) - 1);
                LaurentPolynomial rhs = bypass * detail::correction_in(LaurentRing{}, cf, i - 2, true);
                CHECK(rhs == detail::correction_in(LaurentRing{}, cf, i, true));
            }
        }
    });
}

TEST_CASE("homomorphic images agree with the symbolic results") {
    for_each_cf(3, 3, true, [](const ContinuedFraction& cf) {
        LaurentPolynomial f = fpoly_formula(cf);
        CHECK(fpoly_formula_all_ones(cf) == f.eval_all_ones());
        CHECK(fpoly_graft_all_ones(cf) == f.eval_all_ones());
        CHECK(fpoly_formula_mod(cf, 42) == fpoly_graft_mod(cf, 42));
    });
}

TEST_CASE("modular evaluation matches a direct substitution") {
    // evaluate F[2,2] = 1 + y1 + y3 + y1 y3 + y1 y2 y3 by hand mod p
    ContinuedFraction cf({2, 2});
    ModEvalRing ring(123);
    auto v1 = ring.y(1), v2 = ring.y(2), v3 = ring.y(3);
    auto expected = ring.add(ring.add(ring.add(ring.one(), v1), v3),
                             ring.add(ring.mul(v1, v3), ring.mul(ring.mul(v1, v2), v3)));
    CHECK(fpoly_formula_mod(cf, 123) == expected);
    CHECK(fpoly_graft_mod(cf, 123) == expected);
}

TEST_CASE("trailing entry 1 is permitted and consistent") {
    ContinuedFraction cf({2, 1});
    LaurentPolynomial f = fpoly_formula(cf);
    CHECK(f == one() + y(1) + y(1) * y(2));
    CHECK(f == fpoly_graft(cf));
    CHECK(f == fpoly_from_matchings(build_snake_graph(cf)));
    CHECK(zigzag_fpoly(cf, 2) == one());
}
