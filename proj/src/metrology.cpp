// SPDX-License-Identifier: Apache-2.0
#include "twinfock/metrology.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "twinfock/numerics.hpp"

namespace twinfock {

namespace {

constexpr double kPi = std::numbers::pi;

double effective_photons(const TwinFockState& state, const LossPair& loss) {
    return state.total() * (1.0 - 0.5 * loss.loss_a() - 0.5 * loss.loss_b());
}

double delta_phi_from_fringe(const FringeCoefficients& fringe, int dm, double phi) {
    const double arg = dm * (phi - kPi / 2.0);
    const double expectation = fringe.k1 + fringe.k2 * std::cos(arg);
    const double slope = fringe.k2 * dm * std::abs(std::sin(arg));
    if (slope < kDerivativeFloor)
        return kDivergenceSentinel;
    return std::sqrt(std::max(0.0, 1.0 - expectation * expectation)) / slope;
}

SensitivityPoint make_point(const TwinFockState& state, const LossPair& loss,
                            double phi, double delta_phi) {
    const double n_eff = effective_photons(state, loss);
    SensitivityPoint point;
    point.phi = phi;
    point.delta_phi = delta_phi;
    point.effective_photons = n_eff;
    point.shot_noise_limit = n_eff > 0.0 ? 1.0 / std::sqrt(n_eff) : kDivergenceSentinel;
    point.heisenberg_limit = n_eff > 0.0 ? 1.0 / n_eff : kDivergenceSentinel;
    return point;
}

// Reduce x into (0, period].
double reduce_to_period(double x, double period) {
    double r = std::fmod(x, period);
    if (r <= 0.0)
        r += period;
    return r;
}

double golden_section_min(const std::function<double(double)>& f, double a, double b,
                          double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

VisibilityReport visibility(const TwinFockState& state, const LossPair& loss) {
    const auto fringe = fringe_coefficients(state, loss);
    // k1 + k2 vanishes only at the corner {L_a, L_b} = {0, 1}, where the
    // fringe is identically zero; a vanishing amplitude means no signal,
    // which is also the limit along either edge into the corner.
    const double signal =
        fringe.k2 == 0.0 ? 0.0 : fringe.k2 / (fringe.k1 + fringe.k2);

    const auto lossless = fringe_coefficients(state, LossPair::lossless());
    const double signal0 = lossless.k2 / (lossless.k1 + lossless.k2);
    return {state, loss, signal, signal / signal0};
}

SensitivityPoint sensitivity(const TwinFockState& state, const LossPair& loss,
                             const Phase& phase) {
    const auto fringe = fringe_coefficients(state, loss);
    const double dphi = delta_phi_from_fringe(fringe, state.delta_m(), phase.value());
    return make_point(state, loss, phase.value(), dphi);
}

SensitivityPoint optimal_sensitivity(const TwinFockState& state, const LossPair& loss,
                                     double phi_tolerance) {
    const int dm = state.delta_m();
    const auto fringe = fringe_coefficients(state, loss);
    const double period = 2.0 * kPi / dm;
    const double wall_spacing = kPi / dm;

    const auto objective = [&](double phi) {
        return delta_phi_from_fringe(fringe, dm, phi);
    };

    // The fringe crosses zero twice per period, midway between the
    // divergence walls; those crossings are the lossless optima.
    std::vector<double> seeds = {
        reduce_to_period(kPi / 2.0 + kPi / (2.0 * dm), period),
        reduce_to_period(kPi / 2.0 + kPi / (2.0 * dm) + wall_spacing, period)};
    std::sort(seeds.begin(), seeds.end());

    struct Candidate {
        double phi;
        double value;
        bool is_seed;
    };
    std::vector<Candidate> candidates;
    const double half_bracket = (0.5 - 1e-6) * wall_spacing;
    for (double seed : seeds) {
        candidates.push_back({seed, objective(seed), true});
        const double refined = golden_section_min(objective, seed - half_bracket,
                                                  seed + half_bracket, phi_tolerance);
        candidates.push_back({refined, objective(refined), false});
    }

    double best_value = kDivergenceSentinel;
    for (const auto& c : candidates)
        best_value = std::min(best_value, c.value);

    // Among near-ties prefer the exact seeds (then the smaller phase) so
    // the flat lossless fringe reports the analytic optimum.
    const Candidate* chosen = nullptr;
    for (const auto& c : candidates) {
        if (!(c.value <= best_value * (1.0 + 1e-12)))
            continue;
        if (chosen == nullptr || (c.is_seed && !chosen->is_seed) ||
            (c.is_seed == chosen->is_seed && c.phi < chosen->phi))
            chosen = &c;
    }
    return make_point(state, loss, chosen->phi, chosen->value);
}

Limits limits(const TwinFockState& state, const LossPair& loss) {
    const double n_eff = effective_photons(state, loss);
    if (!(n_eff > 0.0))
        throw std::out_of_range("limits: effective photon number vanishes at full loss");
    return {1.0 / std::sqrt(n_eff), 1.0 / n_eff};
}

bool beats_snl_criterion(const TwinFockState& state) {
    const int dm = state.delta_m();
    return dm * dm > state.total();
}

double visibility_complement_expansion(const TwinFockState& state, double loss_scalar,
                                       ExpansionRegime regime) {
    const int dm = state.delta_m();
    switch (regime) {
    case ExpansionRegime::near_zero:
        return binomial(state.m(), dm) * std::pow(loss_scalar, dm);
    case ExpansionRegime::near_half:
        return 0.5 + (static_cast<double>(dm) * dm / state.total()) * (loss_scalar - 0.5);
    case ExpansionRegime::near_one:
        return 1.0 - binomial(state.m(), dm) * std::pow(1.0 - loss_scalar, dm);
    }
    throw std::domain_error("visibility_complement_expansion: unknown regime");
}

double sensitivity_smallloss_expansion(const TwinFockState& state, double loss_scalar,
                                       const Phase& phase) {
    const int dm = state.delta_m();
    const double lead = 1.0 / dm;
    const double weight = static_cast<double>(state.total()) / dm * loss_scalar;
    if (dm % 2 == 0)
        return lead + weight / std::sin(dm * phase.value());
    return lead + weight / std::cos(dm * phase.value());
}

} // namespace twinfock
