// SPDX-License-Identifier: Apache-2.0
#include "twinfock/parity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "twinfock/numerics.hpp"

namespace twinfock {

namespace {

std::complex<double> i_power(int n) {
    switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

} // namespace

ParityOperator::ParityOperator(int n_max) : n_max_(n_max) {
    if (n_max < 0)
        throw std::domain_error("ParityOperator: cutoff must be non-negative");
    if (n_max > kBinomialCap)
        throw std::out_of_range("ParityOperator: cutoff exceeds cap");
    for (int n = 0; n <= n_max; ++n) {
        const auto in = i_power(n);
        for (int k = 0; k <= n; ++k) {
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            entries_[{{k, n - k}, {n - k, k}}] = sign * in;
        }
    }
}

std::complex<double> ParityOperator::entry(OccupationPair row, OccupationPair col) const {
    const auto it = entries_.find({row, col});
    return it == entries_.end() ? std::complex<double>{0.0, 0.0} : it->second;
}

ParityOperator parity_operator(int n_max) { return ParityOperator(n_max); }

FringeCoefficients fringe_coefficients(const TwinFockState& state, const LossPair& loss) {
    const int m = state.m();
    const int mp = state.m_prime();
    const int dm = state.delta_m();
    const double ta = loss.transmission_a();
    const double tb = loss.transmission_b();
    const double ra = loss.reflectance_a();
    const double rb = loss.reflectance_b();

    KahanSum k1;
    for (int k = 0; k <= mp; ++k)
        k1.add(0.5 * binomial(m, k) * binomial(mp, k) * safe_pow(ta * tb, k) *
               (safe_pow(ra, m - k) * safe_pow(rb, mp - k) +
                safe_pow(ra, mp - k) * safe_pow(rb, m - k)));

    KahanSum k2;
    for (int k = 0; k <= mp; ++k)
        k2.add(binomial(m, dm + k) * binomial(mp, k) * safe_pow(ta * tb, k) *
               safe_pow(ra * rb, mp - k));

    return {k1.value(), safe_pow(ta * tb, 0.5 * dm) * k2.value()};
}

FringeCoefficients fringe_coefficients_hypergeometric(const TwinFockState& state,
                                                      const LossPair& loss) {
    const int m = state.m();
    const int mp = state.m_prime();
    const int dm = state.delta_m();
    const double ta = loss.transmission_a();
    const double tb = loss.transmission_b();
    const double ra = loss.reflectance_a();
    const double rb = loss.reflectance_b();
    if (!(ra > 0.0 && rb > 0.0))
        throw std::domain_error(
            "fringe_coefficients_hypergeometric: requires nonzero loss on both arms");

    const double z = (ta * tb) / (ra * rb);
    const double k1 = 0.5 * (safe_pow(ra, mp) * safe_pow(rb, m) +
                             safe_pow(ra, m) * safe_pow(rb, mp)) *
                      hyp2f1_terminating(m, mp, 1.0, z);
    const double k2 = safe_pow(ra * rb, mp) * safe_pow(ta * tb, 0.5 * dm) *
                      binomial(m, dm) * hyp2f1_terminating(mp, mp, 1.0 + dm, z);
    return {k1, k2};
}

double parity_expectation(const TwinFockState& state, const LossPair& loss,
                          const Phase& phase) {
    const auto fringe = fringe_coefficients(state, loss);
    const double arg = state.delta_m() * (phase.value() - std::numbers::pi / 2.0);
    return fringe.k1 + fringe.k2 * std::cos(arg);
}

double parity_expectation_trace(const TwoModeDensityMatrix& rho, const ParityOperator& op) {
    if (op.n_max() < rho.max_total_photons())
        throw std::out_of_range("parity_expectation_trace: operator cutoff below rho support");

    KahanSum real_part;
    KahanSum imag_part;
    for (const auto& [key, q] : op.entries()) {
        const auto r = rho.entry(key.second, key.first);
        if (r != std::complex<double>{0.0, 0.0}) {
            const auto term = q * r;
            real_part.add(term.real());
            imag_part.add(term.imag());
        }
    }
    if (std::abs(imag_part.value()) > 1e-12)
        throw std::runtime_error("parity_expectation_trace: trace has an imaginary part");
    return real_part.value();
}

} // namespace twinfock
