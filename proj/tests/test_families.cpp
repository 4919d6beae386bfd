#include <doctest.h>

#include "rharm/families.hpp"

using namespace rharm;

TEST_CASE("exponential polynomials and numbers") {
    CHECK(exponential_poly(3) == Polynomial({0, 1, 3, 1}));
    CHECK(exponential_poly(0) == Polynomial({1}));
    CHECK(exponential_poly(4).eval(1) == 15);
}

TEST_CASE("geometric polynomials and numbers") {
    CHECK(geometric_poly(4) == Polynomial({0, 1, 14, 36, 24}));
    CHECK(geometric_poly(0) == Polynomial({1}));
    CHECK(geometric_poly(3).eval(1) == 13);
}

TEST_CASE("general geometric polynomials") {
    CHECK(general_geometric_poly(1, 2) == Polynomial({0, 2}));
    CHECK(general_geometric_poly(0, 3) == Polynomial({1}));
    for (unsigned n = 0; n <= 8; ++n)
        CHECK(general_geometric_poly(n, 1) == geometric_poly(n));
    CHECK_THROWS_AS(general_geometric_poly(2, 0), std::invalid_argument);
}

TEST_CASE("r-exponential family") {
    CHECK(r_exponential_poly(4, 2) == Polynomial({0, 0, 4, 5, 1}));
    CHECK(r_exponential_number(4, 2) == 10);
    CHECK(r_exponential_poly(1, 3).is_zero());
}

TEST_CASE("r-geometric family") {
    CHECK(r_geometric_poly(4, 2) == Polynomial({0, 0, 8, 30, 24}));
    CHECK(r_geometric_number(4, 3) == 42);
    CHECK(r_geometric_poly(2, 3).is_zero());
}

TEST_CASE("Mezo and Nyul variants via offset") {
    CHECK(r_bell_mezo_poly(2, 2) == Polynomial({4, 5, 1}));
    CHECK(r_fubini_nyul_poly(2, 2).shifted(2) == r_geometric_poly(4, 2));
    CHECK(r_bell_mezo_poly(0, 3) == Polynomial({1}));
    for (unsigned r = 0; r <= 4; ++r)
        for (unsigned n = 0; n <= 8; ++n) {
            CHECK(r_bell_mezo_poly(n, r).shifted(r) ==
                  r_exponential_poly(n + r, r));
            CHECK(r_fubini_nyul_poly(n, r).shifted(r) ==
                  r_geometric_poly(n + r, r));
        }
}

TEST_CASE("harmonic r-geometric family") {
    CHECK(harmonic_r_geometric_poly(4, 1) == Polynomial({0, 1, 21, 66, 50}));
    CHECK(harmonic_r_geometric_number(4, 1) == 138);
    CHECK(harmonic_r_geometric_poly(3, 3) ==
          Polynomial({0, 0, 0, 11}));
}

TEST_CASE("harmonic r-exponential family") {
    CHECK(harmonic_r_exponential_poly(4, 2) ==
          Polynomial({0, 0, 6, Rational(55, 6), Rational(25, 12)}));
    CHECK(harmonic_r_exponential_number(4, 1) == Rational(295, 12));
    CHECK(harmonic_r_exponential_poly(2, 3).is_zero());
}

TEST_CASE("hyperharmonic r-geometric family") {
    CHECK(hyperharmonic_r_geometric_poly(4, 2, 2) ==
          Polynomial({0, 0, 20, 130, 154}));
    CHECK(hyperharmonic_r_geometric_number(4, 1, 3) == 674);
    for (unsigned n = 0; n <= 6; ++n)
        CHECK(hyperharmonic_r_geometric_poly(n, 1, 1) ==
              harmonic_r_geometric_poly(n, 1));
    CHECK_THROWS_AS(hyperharmonic_r_geometric_poly(2, 1, 0),
                    std::invalid_argument);
}

TEST_CASE("general r-geometric family") {
    CHECK(general_r_geometric_poly(4, 2, 2) ==
          Polynomial({0, 0, 24, 120, 120}));
    CHECK(general_r_geometric_number(4, 2, 3) == 708);
    for (unsigned n = 0; n <= 6; ++n)
        CHECK(general_r_geometric_poly(n, 2, 1) == r_geometric_poly(n, 2));
    CHECK_THROWS_AS(general_r_geometric_poly(1, 1, 0), std::invalid_argument);
}

TEST_CASE("hyperharmonic r-exponential family") {
    CHECK(hyperharmonic_r_exponential_poly(4, 2, 2) ==
          Polynomial({0, 0, 10, Rational(65, 3), Rational(77, 12)}));
    CHECK(hyperharmonic_r_exponential_number(4, 1, 2) == Rational(611, 12));
    CHECK(hyperharmonic_r_exponential_number(3, 2, 3) == Rational(89, 6));
    CHECK_THROWS_AS(hyperharmonic_r_exponential_poly(1, 1, 0),
                    std::invalid_argument);
}

TEST_CASE("factorial transform") {
    CHECK(borel_transform(Polynomial({0, 1, 1})) == Polynomial({0, 1, 2}));
    CHECK(borel_transform(Polynomial({1})) == Polynomial({1}));
    CHECK(borel_transform(
              Polynomial({0, 1, Rational(9, 2), Rational(11, 6)})) ==
          Polynomial({0, 1, 9, 11}));
    for (unsigned r = 0; r <= 4; ++r)
        for (unsigned n = 0; n <= 8; ++n)
            CHECK(borel_transform(r_exponential_poly(n, r)) ==
                  r_geometric_poly(n, r));
}

TEST_CASE("first-kind re-expression routes agree") {
    CHECK(first_kind_reexpression_check(4, 1, 1));
    CHECK(first_kind_reexpression_check(3, 2, 2));
    CHECK(first_kind_reexpression_check(0, 0, 1));
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned r = 0; r <= 3; ++r)
            for (unsigned alpha = 1; alpha <= 3; ++alpha)
                CHECK(first_kind_reexpression_check(n, r, alpha));
}

TEST_CASE("families vanish below the shift") {
    for (unsigned r = 1; r <= 5; ++r)
        for (unsigned n = 0; n < r; ++n) {
            CHECK(r_exponential_poly(n, r).is_zero());
            CHECK(r_geometric_poly(n, r).is_zero());
            CHECK(harmonic_r_exponential_poly(n, r).is_zero());
            CHECK(hyperharmonic_r_geometric_poly(n, r, 2).is_zero());
        }
}
