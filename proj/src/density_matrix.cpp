// SPDX-License-Identifier: Apache-2.0
#include "twinfock/density_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "twinfock/numerics.hpp"

namespace twinfock {

void TwoModeDensityMatrix::add(OccupationPair row, OccupationPair col,
                               std::complex<double> value) {
    entries_[{row, col}] += value;
}

std::complex<double> TwoModeDensityMatrix::entry(OccupationPair row,
                                                 OccupationPair col) const {
    const auto it = entries_.find({row, col});
    return it == entries_.end() ? std::complex<double>{0.0, 0.0} : it->second;
}

double TwoModeDensityMatrix::trace() const {
    KahanSum sum;
    for (const auto& [key, value] : entries_)
        if (key.first == key.second)
            sum.add(value.real());
    return sum.value();
}

double TwoModeDensityMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (const auto& [key, value] : entries_) {
        const auto mirror = entry(key.second, key.first);
        worst = std::max(worst, std::abs(value - std::conj(mirror)));
    }
    return worst;
}

int TwoModeDensityMatrix::max_total_photons() const {
    int n = 0;
    for (const auto& [key, value] : entries_) {
        n = std::max(n, key.first.a + key.first.b);
        n = std::max(n, key.second.a + key.second.b);
    }
    return n;
}

double coefficient_d(int which, const TwinFockState& state, const LossPair& loss,
                     int k, int k_prime) {
    const int m = state.m();
    const int mp = state.m_prime();
    const int dm = state.delta_m();
    const double ta = loss.transmission_a();
    const double tb = loss.transmission_b();
    const double ra = loss.reflectance_a();
    const double rb = loss.reflectance_b();

    switch (which) {
    case 1:
        if (k < 0 || k > m || k_prime < 0 || k_prime > mp)
            return 0.0;
        return 0.5 * binomial(m, k) * binomial(mp, k_prime) * safe_pow(ta, k) *
               safe_pow(ra, m - k) * safe_pow(tb, k_prime) * safe_pow(rb, mp - k_prime);
    case 2:
        if (k < 0 || k > m || k_prime < 0 || k_prime > mp)
            return 0.0;
        return 0.5 * binomial(m, k) * binomial(mp, k_prime) * safe_pow(ta, k_prime) *
               safe_pow(ra, mp - k_prime) * safe_pow(tb, k) * safe_pow(rb, m - k);
    case 3:
        if (k < 0 || k > mp || k_prime < 0 || k_prime > mp)
            return 0.0;
        return 0.5 *
               std::sqrt(binomial(m, dm + k) * binomial(m, dm + k_prime) *
                         binomial(mp, k) * binomial(mp, k_prime)) *
               safe_pow(ta, 0.5 * (dm + 2 * k)) * safe_pow(ra, mp - k) *
               safe_pow(tb, 0.5 * (dm + 2 * k_prime)) * safe_pow(rb, mp - k_prime);
    case 4:
        if (k < 0 || k > mp || k_prime < 0 || k_prime > mp)
            return 0.0;
        return 0.5 *
               std::sqrt(binomial(m, dm + k) * binomial(m, dm + k_prime) *
                         binomial(mp, k) * binomial(mp, k_prime)) *
               safe_pow(ta, 0.5 * (dm + 2 * k_prime)) * safe_pow(ra, mp - k_prime) *
               safe_pow(tb, 0.5 * (dm + 2 * k)) * safe_pow(rb, mp - k);
    default:
        throw std::domain_error("coefficient_d: index must be 1..4");
    }
}

TwoModeDensityMatrix lossy_density_matrix(const TwinFockState& state,
                                          const LossPair& loss, const Phase& phase) {
    const int m = state.m();
    const int mp = state.m_prime();
    const int dm = state.delta_m();

    // The branch prefactors contribute phases only; the 1/2 normalisation
    // lives inside the d_i so that the trace comes out 1.
    const auto cross_phase = std::polar(1.0, -dm * phase.value());

    TwoModeDensityMatrix rho(state.total());
    for (int k = 0; k <= m; ++k) {
        for (int kp = 0; kp <= mp; ++kp) {
            const double d1 = coefficient_d(1, state, loss, k, kp);
            if (d1 != 0.0)
                rho.add({k, kp}, {k, kp}, d1);
            const double d2 = coefficient_d(2, state, loss, k, kp);
            if (d2 != 0.0)
                rho.add({kp, k}, {kp, k}, d2);
        }
    }
    for (int k = 0; k <= mp; ++k) {
        for (int kp = 0; kp <= mp; ++kp) {
            const double d3 = coefficient_d(3, state, loss, k, kp);
            if (d3 != 0.0)
                rho.add({dm + k, kp}, {k, dm + kp}, cross_phase * d3);
            const double d4 = coefficient_d(4, state, loss, k, kp);
            if (d4 != 0.0)
                rho.add({kp, dm + k}, {dm + kp, k}, std::conj(cross_phase) * d4);
        }
    }
    return rho;
}

namespace {

// Amplitude of |n> -> |k>_out |n-k>_env through a loss beam splitter of
// transmission t.
double splitter_amplitude(int n, int k, double transmission) {
    return std::sqrt(binomial(n, k) * safe_pow(transmission, k) *
                     safe_pow(1.0 - transmission, n - k));
}

struct KetAmplitude {
    OccupationPair out;
    OccupationPair env;
    std::complex<double> amp;
};

} // namespace

TwoModeDensityMatrix oracle_density_matrix(const TwinFockState& state,
                                           const LossPair& loss, const Phase& phase) {
    if (state.total() > kOracleTotalCap)
        throw std::out_of_range("oracle_density_matrix: m + m' exceeds oracle cap");

    const int m = state.m();
    const int mp = state.m_prime();
    const double ta = loss.transmission_a();
    const double tb = loss.transmission_b();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const auto alpha = std::polar(inv_sqrt2, mp * phase.value());
    const auto beta = std::polar(inv_sqrt2, m * phase.value());

    std::vector<KetAmplitude> kets;
    for (int ka = 0; ka <= m; ++ka)
        for (int kb = 0; kb <= mp; ++kb)
            kets.push_back({{ka, kb},
                            {m - ka, mp - kb},
                            alpha * splitter_amplitude(m, ka, ta) *
                                splitter_amplitude(mp, kb, tb)});
    for (int ka = 0; ka <= mp; ++ka)
        for (int kb = 0; kb <= m; ++kb)
            kets.push_back({{ka, kb},
                            {mp - ka, m - kb},
                            beta * splitter_amplitude(mp, ka, ta) *
                                splitter_amplitude(m, kb, tb)});

    // Partial trace over the two environment modes: only terms with equal
    // environment occupations survive.
    std::map<OccupationPair, std::vector<KetAmplitude>> by_env;
    for (const auto& ket : kets)
        if (ket.amp != std::complex<double>{0.0, 0.0})
            by_env[ket.env].push_back(ket);

    TwoModeDensityMatrix rho(state.total());
    for (const auto& [env, bucket] : by_env)
        for (const auto& lhs : bucket)
            for (const auto& rhs : bucket)
                rho.add(lhs.out, rhs.out, lhs.amp * std::conj(rhs.amp));
    return rho;
}

TwoModeDensityMatrix apply_phase_shift(const TwoModeDensityMatrix& rho, const Phase& phase) {
    TwoModeDensityMatrix out(rho.dim_hint());
    for (const auto& [key, value] : rho.entries()) {
        const int db = key.first.b - key.second.b;
        out.add(key.first, key.second, std::polar(1.0, db * phase.value()) * value);
    }
    return out;
}

} // namespace twinfock
