// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: single-point queries, grid sweeps, the fixed
// delta_m sensitivity table, and state recommendations. Grids emit CSV,
// single points and recommendations emit JSON.

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twinfock/emit.hpp"
#include "twinfock/metrology.hpp"
#include "twinfock/parity.hpp"
#include "twinfock/strategy.hpp"

namespace {

using namespace twinfock;

struct GridAxis {
    double start = 0.0;
    double stop = 0.0;
    int steps = 0;

    bool configured() const { return steps != 0; }

    std::vector<double> values(const std::string& flag) const {
        if (steps < 1)
            throw CLI::ValidationError(flag, "step count must be at least 1");
        std::vector<double> v;
        v.reserve(steps);
        for (int i = 0; i < steps; ++i)
            v.push_back(steps == 1 ? start
                                   : start + i * (stop - start) / (steps - 1));
        return v;
    }
};

void add_axis(CLI::App* cmd, const std::string& prefix, GridAxis& axis) {
    cmd->add_option("--" + prefix + "-start", axis.start);
    cmd->add_option("--" + prefix + "-stop", axis.stop);
    cmd->add_option("--" + prefix + "-steps", axis.steps);
}

TwinFockState parse_state(int m, int mprime) {
    if (mprime < 0)
        throw CLI::ValidationError("--mprime", "must be non-negative");
    if (m <= mprime)
        throw CLI::ValidationError("--m", "m must exceed mprime");
    return TwinFockState(m, mprime);
}

LossPair parse_loss(double loss_a, double loss_b) {
    if (loss_a < 0.0 || loss_a > 1.0)
        throw CLI::ValidationError("--loss-a", "must lie in [0,1]");
    if (loss_b < 0.0 || loss_b > 1.0)
        throw CLI::ValidationError("--loss-b", "must lie in [0,1]");
    return LossPair(loss_a, loss_b);
}

void write_output(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out)
        throw CLI::ValidationError("--output", "cannot open '" + output_path + "'");
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parity-detection metrology for twin Fock states in a lossy interferometer"};
    app.require_subcommand(1);
    app.set_config("--config")->configurable(false);
    app.fallthrough();

    std::string output_path;
    app.add_option("--output", output_path, "write the emission to a file instead of stdout")
        ->configurable(true);

    int m = 1, mprime = 0;
    double loss_a = 0.0, loss_b = 0.0, phi = 0.0;

    auto* expect = app.add_subcommand("expect", "parity expectation at a single point");
    expect->add_option("--m", m)->required();
    expect->add_option("--mprime", mprime)->required();
    expect->add_option("--loss-a", loss_a)->required();
    expect->add_option("--loss-b", loss_b)->required();
    expect->add_option("--phi", phi)->required();

    auto* vis = app.add_subcommand(
        "visibility", "relative visibility: single point or equal-arm loss sweep");
    vis->add_option("--m", m)->required();
    vis->add_option("--mprime", mprime)->required();
    auto* vis_la = vis->add_option("--loss-a", loss_a);
    auto* vis_lb = vis->add_option("--loss-b", loss_b);
    GridAxis vis_loss_axis;
    add_axis(vis, "loss", vis_loss_axis);

    auto* sens = app.add_subcommand("sensitivity", "phase sensitivity at a single point");
    sens->add_option("--m", m)->required();
    sens->add_option("--mprime", mprime)->required();
    sens->add_option("--loss-a", loss_a)->required();
    sens->add_option("--loss-b", loss_b)->required();
    sens->add_option("--phi", phi)->required();

    auto* optimal = app.add_subcommand("optimal", "optimal phase sensitivity over one period");
    optimal->add_option("--m", m)->required();
    optimal->add_option("--mprime", mprime)->required();
    optimal->add_option("--loss-a", loss_a)->required();
    optimal->add_option("--loss-b", loss_b)->required();

    double table_loss = 0.05;
    int table_delta_m = 6;
    int table_max_total = 22;
    auto* table1 = app.add_subcommand(
        "table1", "optimal sensitivity of the fixed-delta_m family under equal-arm loss");
    table1->add_option("--loss", table_loss);
    table1->add_option("--delta-m", table_delta_m);
    table1->add_option("--max-total", table_max_total);

    std::string quantity_name;
    GridAxis sweep_loss_axis, sweep_loss_b_axis, sweep_phi_axis;
    auto* sweep_cmd = app.add_subcommand("sweep", "grid sweep of a quantity, CSV output");
    sweep_cmd->add_option("--quantity", quantity_name)
        ->required()
        ->check(CLI::IsMember({"visibility", "expectation", "sensitivity"}));
    sweep_cmd->add_option("--m", m)->required();
    sweep_cmd->add_option("--mprime", mprime)->required();
    add_axis(sweep_cmd, "loss", sweep_loss_axis);
    add_axis(sweep_cmd, "loss-b", sweep_loss_b_axis);
    add_axis(sweep_cmd, "phi", sweep_phi_axis);
    sweep_cmd->add_option("--phi", phi);

    std::string objective_name = "optimal_sensitivity";
    int rec_max_total = 20;
    int rec_delta_m = 0;
    auto* rec = app.add_subcommand("recommend", "rank candidate states under a constraint");
    rec->add_option("--loss-a", loss_a)->required();
    rec->add_option("--loss-b", loss_b)->required();
    rec->add_option("--objective", objective_name)
        ->check(CLI::IsMember({"visibility", "optimal_sensitivity"}));
    rec->add_option("--max-total", rec_max_total);
    rec->add_option("--delta-m", rec_delta_m);

    try {
        app.parse(argc, argv);

        if (expect->parsed()) {
            const auto state = parse_state(m, mprime);
            const auto loss = parse_loss(loss_a, loss_b);
            const auto fringe = fringe_coefficients(state, loss);
            const double value = parity_expectation(state, loss, Phase(phi));
            write_output(emit_expectation_json(state, loss, phi, fringe, value), output_path);
        } else if (vis->parsed()) {
            const auto state = parse_state(m, mprime);
            if (vis_loss_axis.configured()) {
                const auto points = make_equal_arm_points(
                    {state}, vis_loss_axis.values("--loss-steps"), {0.0});
                write_output(emit_sweep_csv(evaluate_points(points, SweepQuantity::visibility)),
                             output_path);
            } else {
                if (vis_la->count() == 0 || vis_lb->count() == 0)
                    throw CLI::ValidationError(
                        "--loss-a", "give --loss-a/--loss-b or a --loss-start/stop/steps axis");
                const auto loss = parse_loss(loss_a, loss_b);
                write_output(emit_visibility_json(visibility(state, loss)), output_path);
            }
        } else if (sens->parsed()) {
            const auto state = parse_state(m, mprime);
            const auto loss = parse_loss(loss_a, loss_b);
            write_output(
                emit_sensitivity_json(state, loss, sensitivity(state, loss, Phase(phi))),
                output_path);
        } else if (optimal->parsed()) {
            const auto state = parse_state(m, mprime);
            const auto loss = parse_loss(loss_a, loss_b);
            write_output(emit_optimal_json(state, loss, optimal_sensitivity(state, loss),
                                           beats_snl_criterion(state)),
                         output_path);
        } else if (table1->parsed()) {
            if (table_loss < 0.0 || table_loss > 1.0)
                throw CLI::ValidationError("--loss", "must lie in [0,1]");
            if (table_delta_m < 1)
                throw CLI::ValidationError("--delta-m", "must be at least 1");
            write_output(
                emit_table_csv(sensitivity_table(table_loss, table_delta_m, table_max_total)),
                output_path);
        } else if (sweep_cmd->parsed()) {
            const auto state = parse_state(m, mprime);
            const auto quantity = quantity_name == "visibility" ? SweepQuantity::visibility
                                  : quantity_name == "expectation"
                                      ? SweepQuantity::expectation
                                      : SweepQuantity::sensitivity;
            if (!sweep_loss_axis.configured())
                throw CLI::ValidationError("--loss-steps", "a loss axis is required");
            const auto phi_values = sweep_phi_axis.configured()
                                        ? sweep_phi_axis.values("--phi-steps")
                                        : std::vector<double>{phi};
            std::vector<SweepRow> rows;
            if (sweep_loss_b_axis.configured()) {
                SweepGrid grid{{state},
                               sweep_loss_axis.values("--loss-steps"),
                               sweep_loss_b_axis.values("--loss-b-steps"),
                               phi_values};
                rows = sweep(grid, quantity);
            } else {
                rows = evaluate_points(
                    make_equal_arm_points({state}, sweep_loss_axis.values("--loss-steps"),
                                          phi_values),
                    quantity);
            }
            write_output(emit_sweep_csv(rows), output_path);
        } else if (rec->parsed()) {
            const auto loss = parse_loss(loss_a, loss_b);
            CandidateConstraint constraint;
            constraint.max_total = rec_max_total;
            if (rec_delta_m > 0)
                constraint.fixed_delta_m = rec_delta_m;
            const auto objective = objective_name == "visibility"
                                       ? Objective::visibility
                                       : Objective::optimal_sensitivity;
            write_output(emit_recommendations_json(recommend(loss, constraint, objective)),
                         output_path);
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
