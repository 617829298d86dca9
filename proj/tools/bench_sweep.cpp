// SPDX-License-Identifier: Apache-2.0
//
// Times the serial reference sweep against the OpenMP kernel on the same
// grid and checks the rows agree bit for bit.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "twinfock/strategy.hpp"

using namespace twinfock;

namespace {

double run_ms(const std::vector<SweepPoint>& points, SweepQuantity quantity,
              ExecutionPolicy policy, std::vector<SweepRow>& rows) {
    const auto t0 = std::chrono::steady_clock::now();
    rows = evaluate_points(points, quantity, policy);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    const int steps = argc > 1 ? std::atoi(argv[1]) : 161;

    SweepGrid grid;
    grid.states = {TwinFockState(6, 0), TwinFockState(8, 2), TwinFockState(14, 8)};
    for (int i = 0; i < steps; ++i)
        grid.loss_a_values.push_back(static_cast<double>(i) / (steps - 1));
    grid.loss_b_values = grid.loss_a_values;
    for (int i = 0; i < 8; ++i)
        grid.phi_values.push_back(0.05 + 0.4 * i);

    const auto points = expand_grid(grid);
    std::cout << "grid points: " << points.size() << "\n";
#ifdef _OPENMP
    std::cout << "omp threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "omp threads: 1 (OpenMP disabled)\n";
#endif

    std::vector<SweepRow> serial_rows, parallel_rows;
    const double t_serial = run_ms(points, SweepQuantity::sensitivity,
                                   ExecutionPolicy::serial, serial_rows);
    const double t_parallel = run_ms(points, SweepQuantity::sensitivity,
                                     ExecutionPolicy::parallel, parallel_rows);

    for (std::size_t i = 0; i < serial_rows.size(); ++i) {
        const bool same = serial_rows[i].value == parallel_rows[i].value ||
                          (serial_rows[i].value != serial_rows[i].value &&
                           parallel_rows[i].value != parallel_rows[i].value);
        if (!same) {
            std::cerr << "MISMATCH at row " << i << "\n";
            return 1;
        }
    }

    std::cout << "serial:   " << t_serial << " ms\n";
    std::cout << "parallel: " << t_parallel << " ms\n";
    std::cout << "speedup:  " << t_serial / t_parallel << "x\n";
    std::cout << "rows identical: yes\n";
    return 0;
}
