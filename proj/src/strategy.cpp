// SPDX-License-Identifier: Apache-2.0
#include "twinfock/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace twinfock {

namespace {

double evaluate_quantity(SweepQuantity quantity, const SweepPoint& point) {
    switch (quantity) {
    case SweepQuantity::visibility:
        return visibility(point.state, point.loss).visibility;
    case SweepQuantity::expectation:
        return parity_expectation(point.state, point.loss, Phase(point.phi));
    case SweepQuantity::sensitivity:
        return sensitivity(point.state, point.loss, Phase(point.phi)).delta_phi;
    }
    throw std::invalid_argument("evaluate_quantity: unknown quantity");
}

SweepRow make_row(SweepQuantity quantity, const SweepPoint& point, double value) {
    SweepRow row;
    row.m = point.state.m();
    row.m_prime = point.state.m_prime();
    row.loss_a = point.loss.loss_a();
    row.loss_b = point.loss.loss_b();
    if (quantity != SweepQuantity::visibility)
        row.phi = point.phi;
    row.value = value;
    return row;
}

} // namespace

std::vector<SweepPoint> expand_grid(const SweepGrid& grid) {
    if (grid.states.empty() || grid.loss_a_values.empty() || grid.loss_b_values.empty() ||
        grid.phi_values.empty())
        throw std::invalid_argument("expand_grid: grid axes must be non-empty");

    std::vector<SweepPoint> points;
    points.reserve(grid.states.size() * grid.loss_a_values.size() *
                   grid.loss_b_values.size() * grid.phi_values.size());
    for (const auto& state : grid.states)
        for (double la : grid.loss_a_values)
            for (double lb : grid.loss_b_values)
                for (double phi : grid.phi_values)
                    points.push_back({state, LossPair(la, lb), phi});
    return points;
}

std::vector<SweepPoint> make_equal_arm_points(const std::vector<TwinFockState>& states,
                                              const std::vector<double>& loss_values,
                                              const std::vector<double>& phi_values) {
    if (states.empty() || loss_values.empty() || phi_values.empty())
        throw std::invalid_argument("make_equal_arm_points: axes must be non-empty");

    std::vector<SweepPoint> points;
    points.reserve(states.size() * loss_values.size() * phi_values.size());
    for (const auto& state : states)
        for (double loss : loss_values)
            for (double phi : phi_values)
                points.push_back({state, LossPair::equal_arms(loss), phi});
    return points;
}

std::vector<SweepRow> evaluate_points(const std::vector<SweepPoint>& points,
                                      SweepQuantity quantity, ExecutionPolicy policy) {
    std::vector<SweepRow> rows(points.size());
    if (policy == ExecutionPolicy::parallel) {
        const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(dynamic, 16)
        for (std::ptrdiff_t i = 0; i < n; ++i)
            rows[i] = make_row(quantity, points[i], evaluate_quantity(quantity, points[i]));
    } else {
        for (std::size_t i = 0; i < points.size(); ++i)
            rows[i] = make_row(quantity, points[i], evaluate_quantity(quantity, points[i]));
    }
    return rows;
}

std::vector<SweepRow> sweep(const SweepGrid& grid, SweepQuantity quantity,
                            ExecutionPolicy policy) {
    return evaluate_points(expand_grid(grid), quantity, policy);
}

namespace {

std::vector<TwinFockState> enumerate_candidates(const CandidateConstraint& constraint) {
    std::vector<TwinFockState> candidates;
    if (constraint.fixed_delta_m) {
        const int dm = *constraint.fixed_delta_m;
        if (dm < 1)
            throw std::invalid_argument("recommend: delta_m must be positive");
        for (int mp = 0; 2 * mp + dm <= constraint.max_total; ++mp)
            candidates.emplace_back(mp + dm, mp);
    } else {
        for (int m = 1; m <= constraint.max_total; ++m)
            for (int mp = 0; mp < m && m + mp <= constraint.max_total; ++mp)
                candidates.emplace_back(m, mp);
    }
    if (candidates.empty())
        throw std::invalid_argument("recommend: constraint admits no candidate states");
    return candidates;
}

} // namespace

std::vector<RecommendationEntry> recommend(const LossPair& loss,
                                           const CandidateConstraint& constraint,
                                           Objective objective, double phi_tolerance) {
    std::vector<RecommendationEntry> entries;
    for (const auto& state : enumerate_candidates(constraint)) {
        const double value =
            objective == Objective::visibility
                ? visibility(state, loss).visibility
                : optimal_sensitivity(state, loss, phi_tolerance).delta_phi;
        entries.push_back({state, value, objective, 0, beats_snl_criterion(state)});
    }

    const bool ascending = objective == Objective::optimal_sensitivity;
    std::sort(entries.begin(), entries.end(),
              [ascending](const RecommendationEntry& a, const RecommendationEntry& b) {
                  if (a.objective_value != b.objective_value)
                      return ascending ? a.objective_value < b.objective_value
                                       : a.objective_value > b.objective_value;
                  if (a.state.total() != b.state.total())
                      return a.state.total() < b.state.total();
                  return a.state.m() < b.state.m();
              });
    for (std::size_t i = 0; i < entries.size(); ++i)
        entries[i].rank = static_cast<int>(i) + 1;
    return entries;
}

double snl_crossover_loss(const TwinFockState& state) {
    if (!beats_snl_criterion(state))
        throw std::domain_error("snl_crossover_loss: state never beats the shot-noise limit");

    const auto excess = [&](double loss) {
        const auto point = optimal_sensitivity(state, LossPair::equal_arms(loss));
        return point.delta_phi - 1.0 / std::sqrt(state.total() * (1.0 - loss));
    };

    // Bracket by doubling; the gap to the shot-noise limit must grow
    // monotonically across the probes for the bisection to be meaningful.
    double lo = 0.0;
    double lo_excess = excess(lo);
    if (lo_excess >= 0.0)
        throw std::domain_error("snl_crossover_loss: not below the limit at zero loss");
    double hi = 0.01;
    double prev = lo_excess;
    while (excess(hi) < 0.0) {
        const double cur = excess(hi);
        if (cur <= prev)
            throw std::runtime_error("snl_crossover_loss: gap not increasing across bracket");
        prev = cur;
        lo = hi;
        hi = std::min(hi * 2.0, 0.999999);
        if (hi == lo)
            throw std::runtime_error("snl_crossover_loss: no crossing below full loss");
    }

    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        (excess(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<SensitivityTableRow> sensitivity_table(double loss, int delta_m, int max_total) {
    if (delta_m < 1)
        throw std::invalid_argument("sensitivity_table: delta_m must be positive");
    const auto pair = LossPair::equal_arms(loss);
    std::vector<SensitivityTableRow> rows;
    for (int mp = 0; 2 * mp + delta_m <= max_total; ++mp) {
        const TwinFockState state(mp + delta_m, mp);
        rows.push_back({state, optimal_sensitivity(state, pair).delta_phi,
                        limits(state, pair).snl});
    }
    if (rows.empty())
        throw std::invalid_argument("sensitivity_table: max_total below delta_m");
    return rows;
}

} // namespace twinfock
