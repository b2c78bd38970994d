// Stick-spectrum amplitudes and closed-form first-order peak predictions.
#include "methylspin/observables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace methyl {

namespace {

// Levels of each carbon peak block, m = +3/2, +1/2, -1/2, -3/2.
const int kBlockSize[4] = {1, 3, 3, 1};
const int kBlocks[4][3] = {{0, -1, -1}, {1, 4, 6}, {2, 5, 7}, {3, -1, -1}};

std::array<double, kLevels16> diagonal_populations(const ComplexMatrix& rho16) {
    if (rho16.dim != kLevels16)
        throw std::invalid_argument("peaks: density matrix must be 16x16");
    std::array<double, kLevels16> p{};
    for (int i = 0; i < kLevels16; ++i) {
        const cplx d = rho16.at(i, i);
        if (std::abs(d.imag()) > 1e-9)
            throw std::invalid_argument("peaks: density matrix diagonal must be real");
        p[i] = d.real();
    }
    return p;
}

void check_dim16(const PopulationVector& p) {
    if (p.size() != kLevels16)
        throw std::invalid_argument("peaks: population vector must have 16 entries");
}

template <typename Pop>
std::array<double, 4> carbon_from(const Pop& p) {
    std::array<double, 4> peaks{};
    for (int b = 0; b < 4; ++b) {
        double s = 0.0;
        for (int k = 0; k < kBlockSize[b]; ++k) {
            const int l = kBlocks[b][k];
            s += p[l] - p[l + kLevels];
        }
        peaks[b] = 0.5 * s;
    }
    return peaks;
}

template <typename Pop>
std::array<double, 2> proton_from(const Pop& p) {
    std::array<double, 2> peaks{};
    for (int l = 0; l < kLevels; ++l) {
        const double m = 0.5 * level_twice_m(l);
        peaks[0] += m * p[l];
        peaks[1] += m * p[l + kLevels];
    }
    return peaks;
}

} // namespace

GammaFactors gamma_factors(const SpectralDensitySet& J) {
    GammaFactors f{};
    const Sym e[2] = {Sym::Ep, Sym::Em};
    for (int i = 0; i < 2; ++i) {
        f.gamma[i] = J.het_rate(e[i], 2) - J.het_rate(e[i], 0) / 6.0;
        f.gamma_tilde[i] = J.het_rate(e[i], 2) - J.het_rate(sym_neg(e[i]), 0) / 6.0;
    }
    return f;
}

std::array<double, 4> carbon_peaks(const PopulationVector& p16) {
    check_dim16(p16);
    return carbon_from(p16);
}

std::array<double, 4> carbon_peaks(const ComplexMatrix& rho16) {
    return carbon_from(diagonal_populations(rho16));
}

std::array<double, 2> proton_peaks(const PopulationVector& p16) {
    check_dim16(p16);
    return proton_from(p16);
}

std::array<double, 2> proton_peaks(const ComplexMatrix& rho16) {
    return proton_from(diagonal_populations(rho16));
}

double proton_sz(const PopulationVector& p8) {
    if (p8.size() != kLevels)
        throw std::invalid_argument("proton_sz: population vector must have 8 entries");
    double s = 0.0;
    for (int l = 0; l < kLevels; ++l) s += 0.5 * level_twice_m(l) * p8[l];
    return s;
}

PeakSet predicted_peaks_first_order(const PolarizationParams& params,
                                    const SpectralDensitySet& J, double dt) {
    const auto p0 = seed_populations(params);
    const auto d1 = first_step_heteronuclear(params, J, dt);
    std::array<double, kLevels16> p{};
    for (int i = 0; i < kLevels16; ++i) p[i] = p0[i] + d1[i];
    PeakSet peaks;
    peaks.carbon = carbon_from(p);
    peaks.proton = proton_from(p);
    return peaks;
}

double homo_proton_signal_first_order(const PolarizationParams& params,
                                      const SpectralDensitySet& g, double dt) {
    const ImbalanceSeeds s = seeds(params);
    const double dg1 = g.homo_rate(Sym::Ep, 1) - g.homo_rate(Sym::Em, 1);
    const double dg2 = g.homo_rate(Sym::Ep, 2) - g.homo_rate(Sym::Em, 2);
    return dt * (s.c_plus - s.c_minus) * (dg1 + 2.0 * dg2);
}

void peak_frequencies(const SpectrumConfig& config, PeakSet& peaks) {
    const double two_pi = 2.0 * std::numbers::pi;
    const double m_values[4] = {1.5, 0.5, -0.5, -1.5};
    for (int b = 0; b < 4; ++b)
        peaks.carbon_frequency[b] = config.larmor.omega_I + two_pi * config.j_hc * m_values[b];
    peaks.proton_frequency[0] = config.larmor.omega_S + std::numbers::pi * config.j_hc;
    peaks.proton_frequency[1] = config.larmor.omega_S - std::numbers::pi * config.j_hc;
    peaks.has_frequencies = true;
}

} // namespace methyl
