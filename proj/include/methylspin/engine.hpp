// Run configuration, trajectory simulation, verification suites and their
// serialized forms. This is the layer the C API and the CLI sit on.
#ifndef METHYLSPIN_ENGINE_HPP
#define METHYLSPIN_ENGINE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "methylspin/observables.hpp"

namespace methyl {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RunMode { Het, Homo, BothSequential };
enum class SeedKind { Lls, Protected, Thermal };

struct RunConfig {
    RunMode mode = RunMode::Het;
    PolarizationParams params;
    SpectralDensitySet spectral;
    double dt = 0.0;
    int steps = 0;
    bool include_sq = false;
    bool include_symmetric = false;
    SpectrumConfig spectrum;
    SeedKind seed_kind = SeedKind::Lls;
    double alpha_proton = 0.0; // thermal-seed proton polarization
    double corrupt_rate = 0.0; // verify fault-injection hook
    std::string output_path;
};

// Parse and validate a flat JSON key-value document. Unknown keys, missing
// required keys (dt, steps), out-of-range values and negative spectral
// densities all raise ParseError naming the offending key.
RunConfig parse_config(const std::string& json_text);

struct RunRecord {
    int step = 0;
    double time = 0.0;
    std::array<double, kLevels16> populations{};
    std::array<double, 4> carbon{};
    std::array<double, 2> proton{};
};

// Deterministic explicit-Euler trajectory; identical configs produce
// identical records. Records include the seed (step 0).
std::vector<RunRecord> run_simulate(const RunConfig& config);

// CSV with a mandatory header row; floats carry 17 significant digits.
std::string records_to_csv(const std::vector<RunRecord>& records);

struct VerifyCheck {
    std::string name;
    double max_deviation = 0.0;
    bool pass = false;
};

struct VerifyReport {
    double tolerance = 0.0;
    std::vector<VerifyCheck> checks;
    bool passed = false;
};

// Run the oracle-equivalence and identity suites against `tolerance`
// (a check passes iff its deviation is strictly below the tolerance).
VerifyReport run_verify(const RunConfig& config, double tolerance);

std::string report_to_json(const VerifyReport& report);

// Predicted first-order peaks for the config, with stick frequencies.
PeakSet run_peaks(const RunConfig& config);

std::string peaks_to_json(const PeakSet& peaks);

const char* version();

} // namespace methyl

#endif
