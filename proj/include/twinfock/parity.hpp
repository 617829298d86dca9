// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <map>

#include "twinfock/density_matrix.hpp"
#include "twinfock/state.hpp"

namespace twinfock {

/// Photon-number-basis parity observable pulled back through the output
/// beam splitter: sum_n i^n sum_k (-1)^k |k,n-k><n-k,k|, truncated at a
/// total-photon cutoff n_max. Squares to the identity on the cutoff space.
class ParityOperator {
public:
    using Key = std::pair<OccupationPair, OccupationPair>;
    using Map = std::map<Key, std::complex<double>>;

    explicit ParityOperator(int n_max);

    std::complex<double> entry(OccupationPair row, OccupationPair col) const;
    const Map& entries() const { return entries_; }
    int n_max() const { return n_max_; }

private:
    Map entries_;
    int n_max_;
};

ParityOperator parity_operator(int n_max);

/// Offset (k1) and amplitude (k2) of the parity fringe
/// <Q> = k1 + k2 * cos(delta_m * (phi - pi/2)).
struct FringeCoefficients {
    double k1 = 0.0;
    double k2 = 0.0;
};

/// Fringe coefficients as singularity-free binomial sums; valid for any
/// loss including 0 and 1.
FringeCoefficients fringe_coefficients(const TwinFockState& state, const LossPair& loss);

/// Cross-check route through the terminating hypergeometric closed form.
/// The hypergeometric argument T_a T_b / (R_a R_b) diverges at zero loss,
/// so this path requires both reflectances strictly positive.
FringeCoefficients fringe_coefficients_hypergeometric(const TwinFockState& state,
                                                      const LossPair& loss);

/// Closed-form fringe value k1 + k2 * cos(delta_m * (phi - pi/2)).
///
/// The pi/2 offset is the i^delta_m carried by the operator's i^n factors
/// into the off-diagonal trace terms; a fringe written as cos(delta_m*phi)
/// corresponds to shifting the phase origin by pi/2.
double parity_expectation(const TwinFockState& state, const LossPair& loss,
                          const Phase& phase);

/// Tr(Q rho) evaluated from the sparse structures; requires the operator
/// cutoff to cover rho and the imaginary part to vanish within 1e-12.
double parity_expectation_trace(const TwoModeDensityMatrix& rho, const ParityOperator& op);

} // namespace twinfock
