// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <stdexcept>

#include "twinfock/numerics.hpp"

namespace twinfock {

/// Two-mode input state |m::m'> = (|m,m'> + |m',m>)/sqrt(2).
/// Requires m > m' >= 0: a vanishing photon-number difference has no
/// fringe and divides by zero downstream.
class TwinFockState {
public:
    TwinFockState(int m, int m_prime) : m_(m), m_prime_(m_prime) {
        if (m_prime < 0)
            throw std::domain_error("TwinFockState: m' must be non-negative");
        if (m <= m_prime)
            throw std::domain_error("TwinFockState: m must exceed m'");
        if (m > kBinomialCap)
            throw std::out_of_range("TwinFockState: m exceeds binomial cap");
    }

    int m() const { return m_; }
    int m_prime() const { return m_prime_; }
    int delta_m() const { return m_ - m_prime_; }
    int total() const { return m_ + m_prime_; }

    friend bool operator==(const TwinFockState&, const TwinFockState&) = default;

private:
    int m_;
    int m_prime_;
};

/// Per-arm loss rates L_a, L_b in [0,1]; transmissions are 1 - L.
class LossPair {
public:
    LossPair(double loss_a, double loss_b) : loss_a_(loss_a), loss_b_(loss_b) {
        if (!(loss_a >= 0.0 && loss_a <= 1.0))
            throw std::domain_error("LossPair: loss_a must lie in [0,1]");
        if (!(loss_b >= 0.0 && loss_b <= 1.0))
            throw std::domain_error("LossPair: loss_b must lie in [0,1]");
    }

    static LossPair equal_arms(double loss) { return LossPair(loss, loss); }
    static LossPair lossless() { return LossPair(0.0, 0.0); }

    double loss_a() const { return loss_a_; }
    double loss_b() const { return loss_b_; }
    double transmission_a() const { return 1.0 - loss_a_; }
    double transmission_b() const { return 1.0 - loss_b_; }
    double reflectance_a() const { return loss_a_; }
    double reflectance_b() const { return loss_b_; }

    LossPair swapped() const { return LossPair(loss_b_, loss_a_); }
    LossPair complement() const { return LossPair(1.0 - loss_a_, 1.0 - loss_b_); }

private:
    double loss_a_;
    double loss_b_;
};

/// Accumulated phase on arm b, radians.
class Phase {
public:
    explicit Phase(double phi) : phi_(phi) {
        if (!std::isfinite(phi))
            throw std::domain_error("Phase: value must be finite");
    }

    double value() const { return phi_; }

private:
    double phi_;
};

} // namespace twinfock
