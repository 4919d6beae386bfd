#include <doctest.h>

#include <thread>

#include "rharm/combinatorics.hpp"
#include "rharm/verify.hpp"

using namespace rharm;

TEST_CASE("second-kind r-Stirling values") {
    CHECK(stirling2_r(4, 2, 0) == 7);
    CHECK(stirling2_r(4, 3, 2) == 5);
    CHECK(stirling2_r(1, 1, 2) == 0);  // n < r
    CHECK(stirling2_r(4, 2, 2) == 4);
    // same value from the partition enumerator
    CHECK(stirling2_r(4, 2, 2) == count_partitions_r(4, 2, 2));
}

TEST_CASE("first-kind r-Stirling values") {
    // 3! * H_3 = 11
    CHECK(stirling1_r(4, 2, 0) == 11);
    // 2! * H_2^(2) = 5
    CHECK(stirling1_r(4, 3, 2) == 5);
    CHECK(stirling1_r(3, 1, 2) == 0);  // k < r
    CHECK(stirling1_r(4, 2, 0) == count_cycle_permutations_r(4, 2, 0));
}

TEST_CASE("triangle boundary structure") {
    for (unsigned r = 0; r <= 4; ++r) {
        for (unsigned n = 0; n < r; ++n)
            for (unsigned k = 0; k <= n + r; ++k) {
                CHECK(stirling2_r(n, k, r) == 0);
                CHECK(stirling1_r(n, k, r) == 0);
            }
        // delta row at n = r, and 1 on the diagonal above it
        for (unsigned k = 0; k <= r + 2; ++k) {
            CHECK(stirling2_r(r, k, r) == (k == r ? 1 : 0));
            CHECK(stirling1_r(r, k, r) == (k == r ? 1 : 0));
        }
        for (unsigned n = r; n <= r + 5; ++n) {
            CHECK(stirling2_r(n, n, r) == 1);
            CHECK(stirling2_r(n, n + 1, r) == 0);
            if (n >= 1) CHECK(stirling2_r(n, r > 0 ? r - 1 : 0, r) ==
                              (r > 0 ? BigInt(0) : stirling2_r(n, 0, 0)));
        }
    }
}

TEST_CASE("enumeration oracle agreement on the full small grid") {
    for (unsigned n = 0; n <= 10; ++n)
        for (unsigned r = 0; r <= n; ++r)
            for (unsigned k = 0; k <= n; ++k)
                CHECK(stirling2_r(n, k, r) == count_partitions_r(n, k, r));
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned r = 0; r <= n; ++r)
            for (unsigned k = 0; k <= n; ++k)
                CHECK(stirling1_r(n, k, r) ==
                      count_cycle_permutations_r(n, k, r));
}

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(50, 25) == BigInt("126410606437752"));
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0) == 0);
    CHECK(harmonic(3) == Rational(11, 6));
    CHECK(harmonic(4) == Rational(25, 12));
}

TEST_CASE("hyperharmonic numbers") {
    CHECK(hyperharmonic(4, 2) == Rational(77, 12));
    CHECK(hyperharmonic(3, 3) == Rational(47, 6));
    CHECK(hyperharmonic(0, 5) == 0);
    CHECK_THROWS_AS(hyperharmonic(3, 0), std::invalid_argument);
    // binomial closed form, e.g. binom(5,1) * (H_5 - H_1)
    CHECK(hyperharmonic(4, 2) ==
          Rational(binomial(5, 1)) * (harmonic(5) - harmonic(1)));
    for (unsigned alpha = 1; alpha <= 6; ++alpha)
        for (unsigned n = 0; n <= 30; ++n)
            CHECK(hyperharmonic(n, alpha) ==
                  Rational(binomial(n + alpha - 1, alpha - 1)) *
                      (harmonic(n + alpha - 1) - harmonic(alpha - 1)));
}

TEST_CASE("first-kind bridges to harmonic and hyperharmonic numbers") {
    for (unsigned k = 0; k <= 12; ++k)
        CHECK(Rational(stirling1_r(k + 1, 2, 0)) ==
              Rational(factorial(k)) * harmonic(k));
    for (unsigned r = 1; r <= 5; ++r)
        for (unsigned k = 0; k <= 10; ++k)
            CHECK(Rational(stirling1_r(k + r, r + 1, r)) ==
                  Rational(factorial(k)) * hyperharmonic(k, r));
}

TEST_CASE("concurrent readers see consistent values") {
    BigInt expected = stirling2_r(20, 7, 2);
    std::vector<std::thread> threads;
    std::vector<BigInt> results(8);
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([&, t] {
            results[t] = stirling2_r(20 + t % 3, 7, 2);
        });
    for (auto& th : threads) th.join();
    for (int t = 0; t < 8; ++t)
        CHECK(results[t] == stirling2_r(20 + t % 3, 7, 2));
    CHECK(stirling2_r(20, 7, 2) == expected);
}
