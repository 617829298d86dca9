// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <complex>
#include <map>

#include "twinfock/state.hpp"

namespace twinfock {

/// Occupation numbers (n_a, n_b) of the two output modes.
struct OccupationPair {
    int a = 0;
    int b = 0;
    auto operator<=>(const OccupationPair&) const = default;
};

/// Sparse Hermitian matrix over two-mode Fock occupation pairs.
class TwoModeDensityMatrix {
public:
    using Key = std::pair<OccupationPair, OccupationPair>;
    using Map = std::map<Key, std::complex<double>>;

    explicit TwoModeDensityMatrix(int dim_hint = 0) : dim_hint_(dim_hint) {}

    void add(OccupationPair row, OccupationPair col, std::complex<double> value);
    std::complex<double> entry(OccupationPair row, OccupationPair col) const;

    const Map& entries() const { return entries_; }
    int dim_hint() const { return dim_hint_; }

    double trace() const;
    /// Largest |rho(r,c) - conj(rho(c,r))| over stored entries.
    double hermiticity_defect() const;
    /// Largest n_a + n_b appearing in any stored ket or bra.
    int max_total_photons() const;

private:
    Map entries_;
    int dim_hint_;
};

/// d_i(k, k') weight of the loss-channel output matrix, i in 1..4.
/// Indices outside the block's summation range yield 0.
double coefficient_d(int which, const TwinFockState& state, const LossPair& loss,
                     int k, int k_prime);

/// Output density matrix of the lossy interferometer in closed form:
/// diagonal blocks weighted by d1/d2, off-diagonal blocks by
/// exp(-+ i*delta_m*phi) * d3/d4. Trace is 1 by construction.
TwoModeDensityMatrix lossy_density_matrix(const TwinFockState& state,
                                          const LossPair& loss, const Phase& phase);

/// Brute-force reference: expands each Fock ket through its loss beam
/// splitter into output x environment amplitudes, forms the pure state,
/// and partial-traces the environment. Exponential bookkeeping, capped at
/// m + m' <= 12.
TwoModeDensityMatrix oracle_density_matrix(const TwinFockState& state,
                                           const LossPair& loss, const Phase& phase);

inline constexpr int kOracleTotalCap = 12;

/// Conjugates rho by the arm-b phase unitary exp(i*phi*n_b).
TwoModeDensityMatrix apply_phase_shift(const TwoModeDensityMatrix& rho, const Phase& phase);

} // namespace twinfock
