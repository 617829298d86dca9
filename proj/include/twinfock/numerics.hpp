// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

namespace twinfock {

/// Largest n accepted by binomial(); C(64,32) is the biggest value that
/// still fits a 64-bit integer without overflow.
inline constexpr int kBinomialCap = 64;

/// Neumaier-compensated accumulator for finite sums whose terms can span
/// many orders of magnitude.
class KahanSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// C(n,k) computed in exact integer arithmetic, then converted to double.
/// k > n yields 0 (vanishing-term convention); n > cap throws.
double binomial(int n, int k, int cap = kBinomialCap);

/// Rising factorial (x)_n = x(x+1)...(x+n-1), with (x)_0 = 1.
double pochhammer(double x, int n);

/// 2F1(-a, -b; c; z) as the exact finite sum terminating at min(a, b).
/// Requires c > 0.
double hyp2f1_terminating(int a_neg, int b_neg, double c, double z);

/// pow restricted to base in [0,1], exponent >= 0, with 0^0 = 1 so that
/// vanishing transmission/reflectance factors reduce correctly.
double safe_pow(double base, double exponent);

} // namespace twinfock
