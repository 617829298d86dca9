// SPDX-License-Identifier: Apache-2.0
#include "twinfock/numerics.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace twinfock {

namespace {

// Pascal triangle up to kBinomialCap, built once. Additions stay below
// 2^63 for n <= 64.
const std::array<std::array<std::uint64_t, kBinomialCap + 1>, kBinomialCap + 1>&
pascal_table() {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, kBinomialCap + 1>, kBinomialCap + 1> t{};
        for (int n = 0; n <= kBinomialCap; ++n) {
            t[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
        }
        return t;
    }();
    return table;
}

} // namespace

double binomial(int n, int k, int cap) {
    if (n < 0 || k < 0)
        throw std::domain_error("binomial: arguments must be non-negative");
    if (n > cap || cap > kBinomialCap)
        throw std::out_of_range("binomial: n exceeds cap " + std::to_string(cap));
    if (k > n)
        return 0.0;
    return static_cast<double>(pascal_table()[n][k]);
}

double pochhammer(double x, int n) {
    if (n < 0)
        throw std::domain_error("pochhammer: n must be non-negative");
    double r = 1.0;
    for (int i = 0; i < n; ++i)
        r *= x + i;
    return r;
}

double hyp2f1_terminating(int a_neg, int b_neg, double c, double z) {
    if (a_neg < 0 || b_neg < 0)
        throw std::domain_error("hyp2f1_terminating: negated parameters must be non-negative");
    if (!(c > 0.0))
        throw std::domain_error("hyp2f1_terminating: c must be positive");
    if (!std::isfinite(z))
        throw std::domain_error("hyp2f1_terminating: z must be finite");

    const int n_max = std::min(a_neg, b_neg);
    KahanSum sum;
    double term = 1.0;
    sum.add(term);
    for (int n = 0; n < n_max; ++n) {
        term *= (static_cast<double>(n) - a_neg) * (static_cast<double>(n) - b_neg) /
                ((c + n) * (n + 1)) * z;
        sum.add(term);
    }
    return sum.value();
}

double safe_pow(double base, double exponent) {
    if (!(base >= 0.0 && base <= 1.0))
        throw std::domain_error("safe_pow: base must lie in [0,1]");
    if (!(exponent >= 0.0))
        throw std::domain_error("safe_pow: exponent must be non-negative");
    if (exponent == 0.0)
        return 1.0;
    return std::pow(base, exponent);
}

} // namespace twinfock
