// extern-C surface of the shared library. Exceptions from the core are
// converted to status codes; the message of the most recent failure is kept
// in a thread-local buffer.
#include "methylspin.h"

#include <string>

#include "methylspin/engine.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

template <typename F>
mls_status guarded(F&& f) {
    try {
        return f();
    } catch (const methyl::ParseError& e) {
        set_error(e.what());
        return MLS_ERR_PARSE;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return MLS_ERR_ARGUMENT;
    } catch (const std::exception& e) {
        set_error(e.what());
        return MLS_ERR_INTERNAL;
    }
}

} // namespace

struct mls_config {
    methyl::RunConfig config;
};

struct mls_trajectory {
    std::vector<methyl::RunRecord> records;
    std::string csv;
};

struct mls_report {
    methyl::VerifyReport report;
    std::string json;
};

extern "C" {

const char* mls_version(void) { return methyl::version(); }

const char* mls_last_error(void) { return g_last_error.c_str(); }

mls_status mls_config_parse(const char* json_text, mls_config** out) {
    if (json_text == nullptr || out == nullptr) {
        set_error("mls_config_parse: null argument");
        return MLS_ERR_ARGUMENT;
    }
    *out = nullptr;
    return guarded([&] {
        auto* handle = new mls_config{methyl::parse_config(json_text)};
        *out = handle;
        return MLS_OK;
    });
}

const char* mls_config_output_path(const mls_config* config) {
    return config == nullptr ? nullptr : config->config.output_path.c_str();
}

void mls_config_free(mls_config* config) { delete config; }

mls_status mls_simulate(const mls_config* config, mls_trajectory** out) {
    if (config == nullptr || out == nullptr) {
        set_error("mls_simulate: null argument");
        return MLS_ERR_ARGUMENT;
    }
    *out = nullptr;
    return guarded([&] {
        auto records = methyl::run_simulate(config->config);
        auto csv = methyl::records_to_csv(records);
        *out = new mls_trajectory{std::move(records), std::move(csv)};
        return MLS_OK;
    });
}

size_t mls_trajectory_rows(const mls_trajectory* trajectory) {
    return trajectory == nullptr ? 0 : trajectory->records.size();
}

const char* mls_trajectory_csv(const mls_trajectory* trajectory) {
    return trajectory == nullptr ? nullptr : trajectory->csv.c_str();
}

void mls_trajectory_free(mls_trajectory* trajectory) { delete trajectory; }

mls_status mls_verify(const mls_config* config, double tolerance, mls_report** out) {
    if (config == nullptr || out == nullptr) {
        set_error("mls_verify: null argument");
        return MLS_ERR_ARGUMENT;
    }
    *out = nullptr;
    return guarded([&] {
        auto report = methyl::run_verify(config->config, tolerance);
        auto json = methyl::report_to_json(report);
        *out = new mls_report{std::move(report), std::move(json)};
        return MLS_OK;
    });
}

int mls_report_passed(const mls_report* report) {
    return (report != nullptr && report->report.passed) ? 1 : 0;
}

const char* mls_report_json(const mls_report* report) {
    return report == nullptr ? nullptr : report->json.c_str();
}

void mls_report_free(mls_report* report) { delete report; }

mls_status mls_peaks(const mls_config* config, mls_peak_set* out) {
    if (config == nullptr || out == nullptr) {
        set_error("mls_peaks: null argument");
        return MLS_ERR_ARGUMENT;
    }
    return guarded([&] {
        const methyl::PeakSet peaks = methyl::run_peaks(config->config);
        for (int i = 0; i < 4; ++i) {
            out->carbon[i] = peaks.carbon[i];
            out->carbon_frequency[i] = peaks.carbon_frequency[i];
        }
        for (int i = 0; i < 2; ++i) {
            out->proton[i] = peaks.proton[i];
            out->proton_frequency[i] = peaks.proton_frequency[i];
        }
        return MLS_OK;
    });
}

} // extern "C"
