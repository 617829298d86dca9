// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "twinfock/numerics.hpp"

using namespace twinfock;

TEST_CASE("binomial small values") {
    CHECK(binomial(8, 6) == 28.0);
    CHECK(binomial(6, 6) == 1.0);
    CHECK(binomial(14, 6) == 3003.0);
    CHECK(binomial(0, 0) == 1.0);
    CHECK(binomial(5, 0) == 1.0);
}

TEST_CASE("binomial vanishing and range conventions") {
    CHECK(binomial(3, 5) == 0.0);
    CHECK(binomial(0, 1) == 0.0);
    CHECK_THROWS_AS(binomial(65, 2), std::out_of_range);
    CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
    CHECK_THROWS_AS(binomial(3, -1), std::domain_error);
}

TEST_CASE("binomial matches the Pascal recurrence up to the cap") {
    // Values stay below 2^53 through n = 56; after the double conversion
    // the recurrence only holds to rounding.
    for (int n = 1; n <= kBinomialCap; ++n)
        for (int k = 1; k < n; ++k) {
            const double combined = binomial(n - 1, k - 1) + binomial(n - 1, k);
            if (n <= 56)
                CHECK(binomial(n, k) == combined);
            else
                CHECK(binomial(n, k) == doctest::Approx(combined).epsilon(1e-15));
        }
}

TEST_CASE("binomial symmetry") {
    for (int n = 0; n <= kBinomialCap; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n, n - k));
}

TEST_CASE("Vandermonde identity") {
    for (int m = 1; m <= 14; ++m) {
        for (int mp = 0; mp <= 14; ++mp) {
            KahanSum sum;
            for (int k = 0; k <= mp; ++k)
                sum.add(binomial(m, k) * binomial(mp, k));
            CHECK(sum.value() == binomial(m + mp, mp));
        }
    }
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(-2.0, 2) == 2.0);
    CHECK(pochhammer(5.0, 3) == 210.0);
    CHECK(pochhammer(-2.0, 3) == 0.0);
    CHECK(pochhammer(3.7, 0) == 1.0);
    CHECK_THROWS_AS(pochhammer(1.0, -1), std::domain_error);
}

TEST_CASE("hyp2f1 analytic two-term case") {
    for (double z : {-3.0, 0.0, 0.5, 17.0, 1e4})
        CHECK(hyp2f1_terminating(1, 1, 1.0, z) == doctest::Approx(1.0 + z).epsilon(1e-15));
}

TEST_CASE("hyp2f1 at z=0 keeps only the n=0 term") {
    CHECK(hyp2f1_terminating(4, 9, 2.5, 0.0) == 1.0);
}

TEST_CASE("hyp2f1 three-term frozen value") {
    // 1 + (4/7)*361 + (4/56)*361^2/2
    CHECK(hyp2f1_terminating(2, 2, 7.0, 361.0) ==
          doctest::Approx(4861.607142857143).epsilon(1e-14));
}

TEST_CASE("hyp2f1 equals the explicit binomial-product sum") {
    const std::vector<double> zs = {0.0, 0.25, 1.0, 4.5, 100.0, 1e4};
    for (int m = 0; m <= 10; ++m) {
        for (int mp = 0; mp <= 10; ++mp) {
            for (double z : zs) {
                KahanSum direct;
                for (int k = 0; k <= std::min(m, mp); ++k)
                    direct.add(binomial(m, k) * binomial(mp, k) * std::pow(z, k));
                const double via_series = hyp2f1_terminating(m, mp, 1.0, z);
                CHECK(std::abs(via_series - direct.value()) <=
                      1e-12 * std::abs(direct.value()));
            }
        }
    }
}

TEST_CASE("safe_pow conventions") {
    CHECK(safe_pow(0.0, 0.0) == 1.0);
    CHECK(safe_pow(1.0, 3.0) == 1.0);
    CHECK(safe_pow(0.0, 5.0) == 0.0);
    CHECK(safe_pow(0.0, 0.5) == 0.0);

    double repeated = 1.0;
    for (int i = 0; i < 6; ++i)
        repeated *= 0.95;
    CHECK(safe_pow(0.95, 6.0) == doctest::Approx(repeated).epsilon(1e-15));
    CHECK(safe_pow(0.95, 6.0) == doctest::Approx(0.735091890625).epsilon(1e-12));

    CHECK_THROWS_AS(safe_pow(1.5, 2.0), std::domain_error);
    CHECK_THROWS_AS(safe_pow(0.5, -1.0), std::domain_error);
}

TEST_CASE("compensated accumulation survives cancellation") {
    KahanSum sum;
    sum.add(1e16);
    sum.add(1.0);
    sum.add(-1e16);
    CHECK(sum.value() == 1.0);
}
