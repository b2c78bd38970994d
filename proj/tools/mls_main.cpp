// mls: command-line front end for the methylspin shared library.
// Talks to the core exclusively through the C API.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "methylspin.h"

namespace {

int fail(const std::string& what) {
    std::cerr << "error: " << what << ": " << mls_last_error() << "\n";
    return 2;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream os;
    os << in.rdbuf();
    out = os.str();
    return true;
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << text;
    return static_cast<bool>(out);
}

struct ConfigHandle {
    mls_config* ptr = nullptr;
    ~ConfigHandle() { mls_config_free(ptr); }
};

int load_config(const std::string& path, ConfigHandle& handle) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read config file " << path << "\n";
        return 2;
    }
    if (mls_config_parse(text.c_str(), &handle.ptr) != MLS_OK) return fail("config");
    return 0;
}

int cmd_simulate(const std::string& config_path, const std::string& out_arg) {
    ConfigHandle config;
    if (int rc = load_config(config_path, config)) return rc;

    mls_trajectory* trajectory = nullptr;
    if (mls_simulate(config.ptr, &trajectory) != MLS_OK) return fail("simulate");
    const std::string csv = mls_trajectory_csv(trajectory);
    mls_trajectory_free(trajectory);

    std::string out_path = out_arg;
    if (out_path.empty()) out_path = mls_config_output_path(config.ptr);
    if (out_path.empty()) {
        std::cout << csv;
        return 0;
    }
    if (!write_file(out_path, csv)) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 2;
    }
    return 0;
}

int cmd_verify(const std::string& config_path, double tolerance) {
    ConfigHandle config;
    if (int rc = load_config(config_path, config)) return rc;

    mls_report* report = nullptr;
    if (mls_verify(config.ptr, tolerance, &report) != MLS_OK) return fail("verify");
    std::cout << mls_report_json(report);
    const bool passed = mls_report_passed(report) == 1;
    mls_report_free(report);
    return passed ? 0 : 1;
}

int cmd_peaks(const std::string& config_path) {
    ConfigHandle config;
    if (int rc = load_config(config_path, config)) return rc;

    mls_peak_set peaks{};
    if (mls_peaks(config.ptr, &peaks) != MLS_OK) return fail("peaks");

    static const char* kCarbon[4] = {"+3/2", "+1/2", "-1/2", "-3/2"};
    static const char* kProton[2] = {"up", "down"};
    char line[160];
    for (int i = 0; i < 4; ++i) {
        std::snprintf(line, sizeof line, "carbon m=%-4s  amplitude % .17g  frequency %.17g rad/s",
                      kCarbon[i], peaks.carbon[i], peaks.carbon_frequency[i]);
        std::cout << line << "\n";
    }
    for (int i = 0; i < 2; ++i) {
        std::snprintf(line, sizeof line, "proton %-4s    amplitude % .17g  frequency %.17g rad/s",
                      kProton[i], peaks.proton[i], peaks.proton_frequency[i]);
        std::cout << line << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"methyl-group dipolar relaxation simulator"};
    app.set_version_flag("--version", std::string(mls_version()));
    app.require_subcommand(1);

    std::string config_path, out_path;
    double tolerance = 1e-10;

    auto* simulate = app.add_subcommand("simulate", "run a population trajectory, emit CSV");
    simulate->add_option("--config", config_path, "JSON config file")->required();
    simulate->add_option("--out", out_path, "output CSV path (defaults to config output_path)");

    auto* verify = app.add_subcommand("verify", "run the verification suites, emit JSON report");
    verify->add_option("--config", config_path, "JSON config file")->required();
    verify->add_option("--tolerance", tolerance, "pass threshold for each check")->required();

    auto* peaks = app.add_subcommand("peaks", "print first-order peak predictions");
    peaks->add_option("--config", config_path, "JSON config file")->required();

    CLI11_PARSE(app, argc, argv);

    if (simulate->parsed()) return cmd_simulate(config_path, out_path);
    if (verify->parsed()) return cmd_verify(config_path, tolerance);
    if (peaks->parsed()) return cmd_peaks(config_path);
    return 2;
}
