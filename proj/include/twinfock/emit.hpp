// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "twinfock/metrology.hpp"
#include "twinfock/strategy.hpp"

namespace twinfock {

/// Numbers are serialized with 9 significant digits so emitted files are
/// stable across platforms; the divergence sentinel prints as "inf".
std::string format_number(double value);

inline constexpr const char* kSweepCsvHeader = "m,mprime,loss_a,loss_b,phi,value";
inline constexpr const char* kTable1CsvHeader = "m,mprime,delta_phi,snl";

std::string emit_sweep_csv(const std::vector<SweepRow>& rows);
std::string emit_table_csv(const std::vector<SensitivityTableRow>& rows);
std::string emit_recommendations_json(const std::vector<RecommendationEntry>& entries);

std::string emit_expectation_json(const TwinFockState& state, const LossPair& loss,
                                  double phi, const FringeCoefficients& fringe,
                                  double expectation);
std::string emit_visibility_json(const VisibilityReport& report);
std::string emit_sensitivity_json(const TwinFockState& state, const LossPair& loss,
                                  const SensitivityPoint& point);
std::string emit_optimal_json(const TwinFockState& state, const LossPair& loss,
                              const SensitivityPoint& point, bool beats_snl);

} // namespace twinfock
