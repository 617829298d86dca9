// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <limits>

#include "twinfock/parity.hpp"
#include "twinfock/state.hpp"

namespace twinfock {

/// Reported for a sensitivity evaluated at a fringe extremum, where the
/// slope vanishes and linear error propagation diverges. A value, not a
/// failure: sweeps record it.
inline constexpr double kDivergenceSentinel = std::numeric_limits<double>::infinity();

/// |d<Q>/dphi| below this counts as a fringe extremum.
inline constexpr double kDerivativeFloor = 1e-14;

struct VisibilityReport {
    TwinFockState state;
    LossPair loss;
    double signal = 0.0;      // k2 / (k1 + k2)
    double visibility = 0.0;  // signal normalised by its lossless value
};

struct SensitivityPoint {
    double phi = 0.0;
    double delta_phi = 0.0;  // kDivergenceSentinel at fringe extrema
    double shot_noise_limit = 0.0;
    double heisenberg_limit = 0.0;
    double effective_photons = 0.0;  // (m+m')(1 - L_a/2 - L_b/2)

    bool divergent() const { return delta_phi == kDivergenceSentinel; }
};

struct Limits {
    double snl = 0.0;
    double hl = 0.0;
};

VisibilityReport visibility(const TwinFockState& state, const LossPair& loss);

/// Linear-error-propagation phase uncertainty at a given phase. Uses
/// Q^2 = I, so the numerator is sqrt(1 - <Q>^2).
SensitivityPoint sensitivity(const TwinFockState& state, const LossPair& loss,
                             const Phase& phase);

/// Minimum of delta_phi over one fringe period (0, 2*pi/delta_m], located
/// by golden-section search seeded at the lossless optimal phases.
SensitivityPoint optimal_sensitivity(const TwinFockState& state, const LossPair& loss,
                                     double phi_tolerance = 1e-10);

/// Shot-noise and Heisenberg limits for the effective transmitted photon
/// number; throws at full loss where that number vanishes.
Limits limits(const TwinFockState& state, const LossPair& loss);

/// True iff delta_m^2 > m + m', the condition for sub-shot-noise
/// sensitivity at low loss.
bool beats_snl_criterion(const TwinFockState& state);

enum class ExpansionRegime { near_zero, near_half, near_one };

/// Leading-order prediction for the visibility complement 1 - V at
/// equal-arm loss L, in the stated regime.
double visibility_complement_expansion(const TwinFockState& state, double loss_scalar,
                                       ExpansionRegime regime);

/// First-order small-loss prediction for delta_phi; csc branch for even
/// delta_m, sec branch for odd. Test oracle only: at the odd-delta_m
/// optimal phases the printed branch's sign disagrees with the full
/// formula while the magnitude agrees to O(L^2).
double sensitivity_smallloss_expansion(const TwinFockState& state, double loss_scalar,
                                       const Phase& phase);

} // namespace twinfock
