// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "twinfock/metrology.hpp"
#include "twinfock/state.hpp"

namespace twinfock {

enum class SweepQuantity { visibility, expectation, sensitivity };

/// Cross-product evaluation grid. Output rows preserve the row-major
/// order states -> loss_a -> loss_b -> phi.
struct SweepGrid {
    std::vector<TwinFockState> states;
    std::vector<double> loss_a_values;
    std::vector<double> loss_b_values;
    std::vector<double> phi_values;
};

struct SweepPoint {
    TwinFockState state;
    LossPair loss;
    double phi = 0.0;
};

struct SweepRow {
    int m = 0;
    int m_prime = 0;
    double loss_a = 0.0;
    double loss_b = 0.0;
    std::optional<double> phi;  // empty for visibility rows
    double value = 0.0;
};

/// Serial is the reference path; parallel evaluates points with OpenMP
/// and must produce identical rows in identical order.
enum class ExecutionPolicy { serial, parallel };

std::vector<SweepPoint> expand_grid(const SweepGrid& grid);

/// Equal-arm slice: one row per (state, L, phi) with L applied to both arms.
std::vector<SweepPoint> make_equal_arm_points(const std::vector<TwinFockState>& states,
                                              const std::vector<double>& loss_values,
                                              const std::vector<double>& phi_values);

std::vector<SweepRow> evaluate_points(const std::vector<SweepPoint>& points,
                                      SweepQuantity quantity,
                                      ExecutionPolicy policy = ExecutionPolicy::parallel);

std::vector<SweepRow> sweep(const SweepGrid& grid, SweepQuantity quantity,
                            ExecutionPolicy policy = ExecutionPolicy::parallel);

enum class Objective { visibility, optimal_sensitivity };

/// Candidate set for a recommendation: either every m' >= 0 at a fixed
/// photon-number difference, or every valid (m, m'), both bounded by
/// m + m' <= max_total.
struct CandidateConstraint {
    std::optional<int> fixed_delta_m;
    int max_total = 20;
};

struct RecommendationEntry {
    TwinFockState state;
    double objective_value = 0.0;
    Objective objective = Objective::visibility;
    int rank = 0;
    bool beats_snl = false;
};

/// Ranks every candidate (visibility descending, sensitivity ascending,
/// divergent values last); ties go to fewer total photons, then smaller m.
std::vector<RecommendationEntry> recommend(const LossPair& loss,
                                           const CandidateConstraint& constraint,
                                           Objective objective,
                                           double phi_tolerance = 1e-10);

/// Equal-arm loss where the optimal sensitivity crosses the shot-noise
/// limit from below, by bisection to 1e-6. Requires delta_m^2 > m + m'.
double snl_crossover_loss(const TwinFockState& state);

struct SensitivityTableRow {
    TwinFockState state;
    double delta_phi = 0.0;
    double snl = 0.0;
};

/// Optimal sensitivity and shot-noise limit for the family m' = 0,1,2,...
/// at fixed delta_m under equal-arm loss, bounded by m + m' <= max_total.
std::vector<SensitivityTableRow> sensitivity_table(double loss, int delta_m, int max_total);

} // namespace twinfock
