#include <doctest.h>

#include "rharm/combinatorics.hpp"
#include "rharm/families.hpp"
#include "rharm/series.hpp"

using namespace rharm;

namespace {

TruncatedSeries make(std::vector<Rational> coeffs) {
    unsigned order = static_cast<unsigned>(coeffs.size()) - 1;
    return TruncatedSeries(order, std::move(coeffs));
}

}  // namespace

TEST_CASE("basic series") {
    CHECK(series_basic(BasicSeries::NegLogOneMinusX, 3) ==
          make({0, 1, Rational(1, 2), Rational(1, 3)}));
    CHECK(series_basic(BasicSeries::InvPow, 2, 3) == make({1, 3, 6}));
    CHECK(series_basic(BasicSeries::ExpX, 2) == make({1, 1, Rational(1, 2)}));
}

TEST_CASE("series arithmetic") {
    TruncatedSeries geom = series_basic(BasicSeries::InvOneMinusX, 3);
    CHECK(geom * geom == make({1, 2, 3, 4}));
    TruncatedSeries a = series_basic(BasicSeries::ExpX, 5);
    CHECK(a + a.scaled(-1) == TruncatedSeries::zero(5));
    // harmonic number generating function
    CHECK(series_basic(BasicSeries::NegLogOneMinusX, 3) * geom ==
          make({0, 1, Rational(3, 2), Rational(11, 6)}));
}

TEST_CASE("arithmetic truncates to the common order") {
    TruncatedSeries a = series_basic(BasicSeries::ExpX, 8);
    TruncatedSeries b = series_basic(BasicSeries::InvOneMinusX, 5);
    CHECK((a * b).order() == 5);
    CHECK((a + b).order() == 5);
    CHECK(a.shifted(2).order() == 10);
    CHECK(a.derivative().order() == 7);
}

TEST_CASE("generator series") {
    CHECK(generator_series({GeneratorKind::HarmonicGF}, 4) ==
          make({0, 1, Rational(3, 2), Rational(11, 6), Rational(25, 12)}));
    TruncatedSeries hh2 =
        generator_series({GeneratorKind::HyperharmonicGF, 2}, 3);
    CHECK(hh2 == make({0, 1, Rational(5, 2), Rational(13, 3)}));
    // coefficients are hyperharmonic numbers from the recurrence
    for (unsigned n = 0; n <= 3; ++n)
        CHECK(hh2.coeff(n) == hyperharmonic(n, 2));
    CHECK(generator_series({GeneratorKind::Exp}, 1) == make({1, 1}));
}

TEST_CASE("diagonal operator") {
    TruncatedSeries x3 = TruncatedSeries::from_polynomial(
        Polynomial::monomial(3), 5);
    CHECK(xDr_apply(x3, 1, 2) ==
          TruncatedSeries::from_polynomial(Polynomial::monomial(3, 9), 5));
    CHECK(xDr_apply(x3, 2, 1) == TruncatedSeries::zero(5));
    TruncatedSeries x2 = TruncatedSeries::from_polynomial(
        Polynomial::monomial(2), 5);
    CHECK(xDr_apply(x2, 2, 3) ==
          TruncatedSeries::from_polynomial(Polynomial::monomial(2, 4), 5));
}

TEST_CASE("definitional operator route") {
    // m = r collapses to x^r f^(r)
    TruncatedSeries e = series_basic(BasicSeries::ExpX, 8);
    for (unsigned r = 0; r <= 3; ++r) {
        TruncatedSeries d = e;
        for (unsigned i = 0; i < r; ++i) d = d.derivative();
        CHECK(xDr_definitional(e, r, r) == d.shifted(r).prefix(8));
    }
    // (xD)^2 e^x = (x + x^2) e^x
    TruncatedSeries lhs = xDr_definitional(e, 0, 2);
    TruncatedSeries rhs =
        TruncatedSeries::from_polynomial(Polynomial({0, 1, 1}), 8) * e;
    CHECK(lhs == rhs);
    CHECK_THROWS_AS(xDr_definitional(series_basic(BasicSeries::ExpX, 3), 0, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(xDr_definitional(e, 3, 2), std::invalid_argument);
}

TEST_CASE("operator routes agree on generator series") {
    TruncatedSeries s = generator_series({GeneratorKind::Geom}, 12);
    for (unsigned r = 0; r <= 3; ++r)
        for (unsigned m = r; m <= 6; ++m)
            CHECK(xDr_apply(s, r, m) == xDr_definitional(s, r, m));
}

TEST_CASE("weighted series construction") {
    TruncatedSeries lhs =
        lhs_weighted_series(HarmonicClosedForm{2, 2}, 4);
    CHECK(lhs.coeff(2) == 3);
    CHECK(lhs.coeff(3) == 11);
    TruncatedSeries msum = lhs_weighted_series(MultipleSum{2, 2, 0}, 4);
    CHECK(msum.coeff(3) == 14);
}

TEST_CASE("closed form series construction") {
    CHECK(rhs_closed_form_series(HarmonicClosedForm{2, 2}, 4) ==
          make({0, 0, 3, 11, 25}));
    for (auto [m, r] : {std::pair{2u, 2u}, std::pair{3u, 3u}})
        CHECK(rhs_closed_form_series(HyperharmonicClosedForm{m, r, 1}, 12) ==
              rhs_closed_form_series(HarmonicClosedForm{m, r}, 12));
    CHECK(rhs_closed_form_series(MultipleSum{2, 2, 0}, 4) ==
          make({0, 0, 3, 14, 39}));
}

TEST_CASE("transformation identity verification") {
    VerifyReport rep = verify_identity(
        Transformation{{GeneratorKind::Exp}, Polynomial::monomial(4), 2}, 12);
    CHECK(rep.equal);
    // the finite factor on the RHS is e^x times the shifted family poly
    TruncatedSeries expected =
        TruncatedSeries::from_polynomial(r_exponential_poly(4, 2), 12) *
        series_basic(BasicSeries::ExpX, 12);
    CHECK(rep.rhs == expected);

    CHECK(verify_identity(
              Transformation{{GeneratorKind::Geom}, Polynomial::monomial(3), 0},
              12)
              .equal);
}

TEST_CASE("closed form identity verification") {
    CHECK(verify_identity(HarmonicClosedForm{3, 2}, 20).equal);
    CHECK(verify_identity(HyperharmonicClosedForm{3, 3, 2}, 16).equal);
    CHECK(verify_identity(MultipleSum{3, 2, 1}, 16).equal);
    CHECK(verify_identity(HyperharmonicMultipleSum{3, 2, 1, 2}, 16).equal);
}

TEST_CASE("derivative series of the harmonic generating function") {
    const unsigned order = 12;
    TruncatedSeries g =
        generator_series({GeneratorKind::HarmonicGF}, order + 5);
    TruncatedSeries neg_log =
        series_basic(BasicSeries::NegLogOneMinusX, order);
    for (unsigned k = 0; k <= 5; ++k) {
        TruncatedSeries deriv = g;
        for (unsigned i = 0; i < k; ++i) deriv = deriv.derivative();
        deriv = deriv.prefix(order);
        // k! (H_k - ln(1-x)) / (1-x)^(k+1)
        TruncatedSeries expected =
            (series_basic(BasicSeries::InvPow, order, k + 1)
                 .scaled(Rational(factorial(k)) * harmonic(k))) +
            (series_basic(BasicSeries::InvPow, order, k + 1) * neg_log)
                .scaled(Rational(factorial(k)));
        CHECK(deriv == expected);
        CHECK(deriv.coeff(0) == Rational(factorial(k)) * harmonic(k));
    }
}

TEST_CASE("derivative series of the hyperharmonic generating function") {
    const unsigned order = 12;
    for (unsigned alpha = 1; alpha <= 3; ++alpha) {
        TruncatedSeries g =
            generator_series({GeneratorKind::HyperharmonicGF, alpha},
                             order + 5);
        TruncatedSeries neg_log =
            series_basic(BasicSeries::NegLogOneMinusX, order);
        for (unsigned k = 0; k <= 5; ++k) {
            TruncatedSeries deriv = g;
            for (unsigned i = 0; i < k; ++i) deriv = deriv.derivative();
            deriv = deriv.prefix(order);
            // Gamma(k+a)/Gamma(a) (H_{k+a-1} - H_{a-1} - ln(1-x)) / (1-x)^(a+k)
            Rational gamma_ratio =
                Rational(factorial(k + alpha - 1)) /
                Rational(factorial(alpha - 1));
            TruncatedSeries inv =
                series_basic(BasicSeries::InvPow, order, alpha + k);
            TruncatedSeries expected =
                (inv.scaled(harmonic(k + alpha - 1) - harmonic(alpha - 1)) +
                 inv * neg_log)
                    .scaled(gamma_ratio);
            CHECK(deriv == expected);
            CHECK(deriv.coeff(0) ==
                  Rational(factorial(k)) * hyperharmonic(k, alpha));
        }
    }
}

TEST_CASE("smaller order yields a prefix of the larger") {
    for (unsigned order : {8u, 16u}) {
        VerifyReport small = verify_identity(HarmonicClosedForm{3, 2}, order);
        VerifyReport big = verify_identity(HarmonicClosedForm{3, 2}, 24);
        CHECK(small.lhs == big.lhs.prefix(order));
        CHECK(small.rhs == big.rhs.prefix(order));
    }
}

TEST_CASE("invalid identity parameters are rejected") {
    CHECK_THROWS_AS(verify_identity(HarmonicClosedForm{1, 2}, 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_identity(HarmonicClosedForm{3, 3}, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_identity(HyperharmonicClosedForm{2, 1, 0}, 10),
                    std::invalid_argument);
}
