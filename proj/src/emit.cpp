// SPDX-License-Identifier: Apache-2.0
#include "twinfock/emit.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace twinfock {

std::string format_number(double value) {
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

std::string emit_sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << kSweepCsvHeader << '\n';
    for (const auto& row : rows) {
        out << row.m << ',' << row.m_prime << ',' << format_number(row.loss_a) << ','
            << format_number(row.loss_b) << ',';
        if (row.phi)
            out << format_number(*row.phi);
        out << ',' << format_number(row.value) << '\n';
    }
    return out.str();
}

std::string emit_table_csv(const std::vector<SensitivityTableRow>& rows) {
    std::ostringstream out;
    out << kTable1CsvHeader << '\n';
    for (const auto& row : rows)
        out << row.state.m() << ',' << row.state.m_prime() << ','
            << format_number(row.delta_phi) << ',' << format_number(row.snl) << '\n';
    return out.str();
}

namespace {

const char* objective_name(Objective objective) {
    return objective == Objective::visibility ? "visibility" : "optimal_sensitivity";
}

// JSON has no infinity literal; the sentinel becomes the string "inf".
std::string json_number(double value) {
    if (std::isinf(value))
        return value > 0 ? "\"inf\"" : "\"-inf\"";
    return format_number(value);
}

} // namespace

std::string emit_recommendations_json(const std::vector<RecommendationEntry>& entries) {
    std::ostringstream out;
    out << "[\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        out << "  {\"rank\": " << e.rank << ", \"m\": " << e.state.m()
            << ", \"mprime\": " << e.state.m_prime() << ", \"objective\": \""
            << objective_name(e.objective) << "\", \"objective_value\": "
            << json_number(e.objective_value)
            << ", \"beats_snl\": " << (e.beats_snl ? "true" : "false") << "}"
            << (i + 1 < entries.size() ? "," : "") << '\n';
    }
    out << "]\n";
    return out.str();
}

std::string emit_expectation_json(const TwinFockState& state, const LossPair& loss,
                                  double phi, const FringeCoefficients& fringe,
                                  double expectation) {
    std::ostringstream out;
    out << "{\"m\": " << state.m() << ", \"mprime\": " << state.m_prime()
        << ", \"loss_a\": " << format_number(loss.loss_a())
        << ", \"loss_b\": " << format_number(loss.loss_b())
        << ", \"phi\": " << format_number(phi) << ", \"k1\": " << format_number(fringe.k1)
        << ", \"k2\": " << format_number(fringe.k2)
        << ", \"expectation\": " << format_number(expectation) << "}\n";
    return out.str();
}

std::string emit_visibility_json(const VisibilityReport& report) {
    std::ostringstream out;
    out << "{\"m\": " << report.state.m() << ", \"mprime\": " << report.state.m_prime()
        << ", \"loss_a\": " << format_number(report.loss.loss_a())
        << ", \"loss_b\": " << format_number(report.loss.loss_b())
        << ", \"signal\": " << format_number(report.signal)
        << ", \"visibility\": " << format_number(report.visibility) << "}\n";
    return out.str();
}

std::string emit_sensitivity_json(const TwinFockState& state, const LossPair& loss,
                                  const SensitivityPoint& point) {
    std::ostringstream out;
    out << "{\"m\": " << state.m() << ", \"mprime\": " << state.m_prime()
        << ", \"loss_a\": " << format_number(loss.loss_a())
        << ", \"loss_b\": " << format_number(loss.loss_b())
        << ", \"phi\": " << format_number(point.phi)
        << ", \"delta_phi\": " << json_number(point.delta_phi)
        << ", \"snl\": " << json_number(point.shot_noise_limit)
        << ", \"hl\": " << json_number(point.heisenberg_limit)
        << ", \"effective_photons\": " << format_number(point.effective_photons) << "}\n";
    return out.str();
}

std::string emit_optimal_json(const TwinFockState& state, const LossPair& loss,
                              const SensitivityPoint& point, bool beats_snl) {
    std::ostringstream out;
    out << "{\"m\": " << state.m() << ", \"mprime\": " << state.m_prime()
        << ", \"loss_a\": " << format_number(loss.loss_a())
        << ", \"loss_b\": " << format_number(loss.loss_b())
        << ", \"phi_opt\": " << format_number(point.phi)
        << ", \"delta_phi\": " << json_number(point.delta_phi)
        << ", \"snl\": " << json_number(point.shot_noise_limit)
        << ", \"hl\": " << json_number(point.heisenberg_limit)
        << ", \"beats_snl\": " << (beats_snl ? "true" : "false") << "}\n";
    return out.str();
}

} // namespace twinfock
