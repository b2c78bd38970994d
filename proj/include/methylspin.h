/*
 * methylspin C API
 *
 * Shared-library interface to the methyl-group dipolar relaxation simulator.
 * All functions return an mls_status; handles are opaque and must be released
 * with the matching *_free call. String pointers returned by getters are
 * owned by the handle and stay valid until it is freed. mls_last_error()
 * returns a thread-local description of the most recent failure.
 */
#ifndef METHYLSPIN_H
#define METHYLSPIN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mls_status {
    MLS_OK = 0,
    MLS_ERR_ARGUMENT = 1, /* null handle or invalid argument */
    MLS_ERR_PARSE = 2,    /* malformed or invalid configuration */
    MLS_ERR_INTERNAL = 3
} mls_status;

typedef struct mls_config mls_config;
typedef struct mls_trajectory mls_trajectory;
typedef struct mls_report mls_report;

typedef struct mls_peak_set {
    /* carbon quartet, m = +3/2, +1/2, -1/2, -3/2 */
    double carbon[4];
    double carbon_frequency[4]; /* rad/s */
    /* proton doublet: test spin up, test spin down */
    double proton[2];
    double proton_frequency[2];
} mls_peak_set;

const char* mls_version(void);
const char* mls_last_error(void);

/* Parse a JSON configuration document. */
mls_status mls_config_parse(const char* json_text, mls_config** out);
/* output_path from the config ("" when unset). */
const char* mls_config_output_path(const mls_config* config);
void mls_config_free(mls_config* config);

/* Run the population-dynamics simulation described by the config. */
mls_status mls_simulate(const mls_config* config, mls_trajectory** out);
size_t mls_trajectory_rows(const mls_trajectory* trajectory);
/* Full trajectory as CSV (header row + one line per record). */
const char* mls_trajectory_csv(const mls_trajectory* trajectory);
void mls_trajectory_free(mls_trajectory* trajectory);

/* Run the verification suites at the given tolerance. */
mls_status mls_verify(const mls_config* config, double tolerance, mls_report** out);
int mls_report_passed(const mls_report* report); /* 1 pass, 0 fail */
const char* mls_report_json(const mls_report* report);
void mls_report_free(mls_report* report);

/* First-order peak prediction with stick frequencies. */
mls_status mls_peaks(const mls_config* config, mls_peak_set* out);

#ifdef __cplusplus
}
#endif

#endif /* METHYLSPIN_H */
