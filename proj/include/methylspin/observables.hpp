// NMR stick-spectrum amplitudes (carbon quartet, proton doublet) computed
// from populations, and closed-form first-order peak predictions.
#ifndef METHYLSPIN_OBSERVABLES_HPP
#define METHYLSPIN_OBSERVABLES_HPP

#include <array>

#include "methylspin/master.hpp"

namespace methyl {

// Gamma^l = J2^l - J0^l / 6, GammaTilde^l = J2^l - J0^{-l} / 6 (1/s),
// index 0 = E+, 1 = E-.
struct GammaFactors {
    std::array<double, 2> gamma;
    std::array<double, 2> gamma_tilde;
};
GammaFactors gamma_factors(const SpectralDensitySet& J);

struct PeakSet {
    // <Pi^m (x) I_z> for m = +3/2, +1/2, -1/2, -3/2
    std::array<double, 4> carbon{};
    // <S_z (x) |up><up|>, <S_z (x) |down><down|>
    std::array<double, 2> proton{};
    std::array<double, 4> carbon_frequency{}; // rad/s, optional
    std::array<double, 2> proton_frequency{};
    bool has_frequencies = false;
};

struct SpectrumConfig {
    double j_hc = 125.0; // Hz, proton-carbon scalar coupling (demo default)
    double j_hh = 0.0;   // Hz, proton-proton scalar coupling
    FrequencyParams larmor;
};

// Carbon quartet amplitudes <Pi^m (x) I_z> = (1/2)(sum of up populations of
// the m block - sum of down populations). Population order: test spin slowest.
std::array<double, 4> carbon_peaks(const PopulationVector& p16);
std::array<double, 4> carbon_peaks(const ComplexMatrix& rho16);

// Proton doublet <S_z (x) |t><t|> = sum over levels of m * population.
std::array<double, 2> proton_peaks(const PopulationVector& p16);
std::array<double, 2> proton_peaks(const ComplexMatrix& rho16);

// <S_z> of an 8-level proton population vector.
double proton_sz(const PopulationVector& p8);

// Peaks at t = dt for the protected seed under the default heteronuclear
// generator: the static (t = 0) part plus the closed-form first step.
// For alpha = 0, beta = 0 the carbon quartet reduces to
//   peak(+-3/2) = peak(+-1/2) = -+ (gamma dt / 16)(Gamma^{E+} + Gamma^{E-})
// and the proton doublet to -+ (gamma dt / 4)(GammaTilde^{E+} + GammaTilde^{E-}).
PeakSet predicted_peaks_first_order(const PolarizationParams& params,
                                    const SpectralDensitySet& J, double dt);

// First-order homonuclear proton signal
//   <S_z>_dt = dt (C+ - C-) ((g1^{E+} - g1^{E-}) + 2 (g2^{E+} - g2^{E-})).
double homo_proton_signal_first_order(const PolarizationParams& params,
                                      const SpectralDensitySet& g, double dt);

// Stick positions: carbon peak m at w_I + 2 pi j_hc m, proton peaks at
// w_S +- pi j_hc.
void peak_frequencies(const SpectrumConfig& config, PeakSet& peaks);

} // namespace methyl

#endif
