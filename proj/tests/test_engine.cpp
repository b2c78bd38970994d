#include "doctest.h"

#include <cmath>

#include "methylspin/engine.hpp"

using namespace methyl;

namespace {

const char* kMinimal = R"({"gamma": 1, "dt": 1e-4, "steps": 10, "J2_Ep": 1, "J2_Em": 1})";

} // namespace

TEST_CASE("minimal config parses with defaults applied") {
    const RunConfig c = parse_config(kMinimal);
    CHECK(c.mode == RunMode::Het);
    CHECK(c.seed_kind == SeedKind::Lls);
    CHECK(c.params.gamma == 1.0);
    CHECK(c.params.beta == 0.0);
    CHECK(c.params.alpha == 0.0);
    CHECK(c.dt == 1e-4);
    CHECK(c.steps == 10);
    CHECK_FALSE(c.include_sq);
    CHECK_FALSE(c.include_symmetric);
    CHECK(c.spectral.het_rate(Sym::Ep, 2) == 1.0);
    CHECK(c.spectral.het_rate(Sym::Ep, 0) == 0.0);
    CHECK(c.spectrum.j_hc == 125.0);
    CHECK(c.output_path.empty());
}

TEST_CASE("config validation errors name the offending key") {
    CHECK_THROWS_WITH_AS(parse_config(R"({"gamma": 1.5, "dt": 1e-4, "steps": 1})"),
                         doctest::Contains("gamma"), ParseError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"J0_Ep": -1, "dt": 1e-4, "steps": 1})"),
                         doctest::Contains("J0_Ep"), ParseError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"steps": 1})"), doctest::Contains("dt"), ParseError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"dt": 1e-4})"), doctest::Contains("steps"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"dt": 1e-4, "steps": 0})"),
                         doctest::Contains("steps"), ParseError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"dt": 1e-4, "steps": 1, "funny": 3})"),
                         doctest::Contains("funny"), ParseError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"dt": 1e-4, "steps": 1, "mode": "x"})"),
                         doctest::Contains("mode"), ParseError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"dt": 1e-4, "steps": 1, "gamma": "big"})"),
                         doctest::Contains("gamma"), ParseError);
    CHECK_THROWS_AS(parse_config("not json"), ParseError);

    // Euler stability guard on dt times the largest rate
    CHECK_THROWS_WITH_AS(parse_config(R"({"dt": 1.0, "steps": 1, "J2_Ep": 1})"),
                         doctest::Contains("max_rate"), ParseError);
}

TEST_CASE("simulation emits the seed record plus one record per step") {
    RunConfig c = parse_config(R"({"gamma": 1, "dt": 1e-3, "steps": 1, "J2_Ep": 1, "J2_Em": 1})");
    const auto records = run_simulate(c);
    REQUIRE(records.size() == 2);
    CHECK(records[0].step == 0);
    CHECK(records[0].time == 0.0);
    CHECK(records[1].step == 1);

    // drain of the fully polarized edge level over one step
    const double delta = records[1].populations[0] - records[0].populations[0];
    CHECK(delta == doctest::Approx(-2.5e-4).epsilon(1e-12));
}

TEST_CASE("homonuclear mode keeps the proton peaks at zero for symmetric E seeds") {
    const RunConfig c = parse_config(
        R"({"mode": "homo", "gamma": 0.7, "beta": 0, "seed_kind": "protected",
            "dt": 1e-3, "steps": 50, "g0_Ep": 1, "g0_Em": 0.5, "g1_Ep": 0.8,
            "g1_Em": 0.2, "g2_Ep": 0.6, "g2_Em": 0.9})");
    for (const auto& rec : run_simulate(c)) {
        CHECK(std::abs(rec.proton[0]) < 1e-12);
        CHECK(std::abs(rec.proton[1]) < 1e-12);
    }
}

TEST_CASE("both-sequential mode applies the two generators in turn") {
    const RunConfig both = parse_config(
        R"({"mode": "both-sequential", "gamma": 0.4, "beta": 0.2, "seed_kind": "protected",
            "dt": 1e-3, "steps": 3, "J2_Ep": 1, "J2_Em": 0.5, "g1_Ep": 0.7})");
    const auto records = run_simulate(both);
    REQUIRE(records.size() == 4);
    double sum = 0.0;
    for (double v : records.back().populations) sum += v;
    CHECK(std::abs(sum - 1.0) < 1e-12);

    // a homo-only run from the same seed differs, so both parts contribute
    RunConfig homo = both;
    homo.mode = RunMode::Homo;
    RunConfig het = both;
    het.mode = RunMode::Het;
    const auto r_homo = run_simulate(homo);
    const auto r_het = run_simulate(het);
    double diff_homo = 0.0, diff_het = 0.0;
    for (int i = 0; i < kLevels16; ++i) {
        diff_homo = std::max(diff_homo, std::abs(records[1].populations[i] -
                                                 r_homo[1].populations[i]));
        diff_het = std::max(diff_het, std::abs(records[1].populations[i] -
                                               r_het[1].populations[i]));
    }
    CHECK(diff_homo > 0.0);
    CHECK(diff_het > 0.0);
}

TEST_CASE("identical configs produce byte-identical CSV") {
    const std::string text =
        R"({"gamma": 0.6, "beta": -0.3, "alpha": 0.2, "seed_kind": "protected",
            "dt": 1e-3, "steps": 25, "J0_Ep": 0.3, "J0_Em": 0.9, "J2_Ep": 1,
            "J2_Em": 0.4})";
    const std::string a = records_to_csv(run_simulate(parse_config(text)));
    const std::string b = records_to_csv(run_simulate(parse_config(text)));
    CHECK(a == b);
    CHECK(a.substr(0, 10) == std::string("step,time,"));
    // 17-significant-digit serialization keeps full precision
    CHECK(a.find("0.001") != std::string::npos);
}

TEST_CASE("thermal seed mode") {
    const RunConfig c = parse_config(
        R"({"seed_kind": "thermal", "alpha_proton": 0.3, "alpha": 0.5,
            "dt": 1e-3, "steps": 1, "J2_Ep": 1, "J2_Em": 1})");
    const auto records = run_simulate(c);
    double sum = 0.0;
    for (double v : records[0].populations) sum += v;
    CHECK(std::abs(sum - 1.0) < 1e-12);
    // all carbon peaks share the sign of the test-spin polarization
    for (double v : records[1].carbon) CHECK(v > 0.0);
}

TEST_CASE("verification report passes at 1e-10 and supports fault injection") {
    const std::string text =
        R"({"gamma": 0.5, "beta": 0.2, "dt": 1e-3, "steps": 5, "J0_Ep": 0.3,
            "J0_Em": 0.6, "J2_Ep": 1, "J2_Em": 0.4, "g0_Ep": 0.5, "g0_Em": 0.2,
            "g1_Ep": 0.8, "g1_Em": 0.3, "g2_Ep": 0.7, "g2_Em": 0.1})";
    const VerifyReport healthy = run_verify(parse_config(text), 1e-10);
    CHECK(healthy.passed);
    for (const auto& check : healthy.checks) CHECK(check.pass);

    // zero tolerance fails every check: deviations are never negative
    const VerifyReport strict = run_verify(parse_config(text), 0.0);
    CHECK_FALSE(strict.passed);
    for (const auto& check : strict.checks) CHECK_FALSE(check.pass);

    // a corrupted transition rate is caught by exactly the analytic-vs-rate check
    std::string corrupted = text;
    corrupted.insert(corrupted.rfind('}'), R"(, "corrupt_rate": 1e-3)");
    const VerifyReport faulty = run_verify(parse_config(corrupted), 1e-10);
    CHECK_FALSE(faulty.passed);
    for (const auto& check : faulty.checks) {
        if (check.name == "analytic_vs_rate") CHECK_FALSE(check.pass);
        else CHECK(check.pass);
    }

    const std::string json = report_to_json(faulty);
    CHECK(json.find("analytic_vs_rate") != std::string::npos);
    CHECK(json.find("\"passed\": false") != std::string::npos);
}

TEST_CASE("peak prediction output") {
    const RunConfig c = parse_config(
        R"({"gamma": 0.8, "dt": 1e-3, "steps": 1, "J0_Ep": 0.3, "J0_Em": 0.3,
            "J2_Ep": 1, "J2_Em": 1, "j_hc": 100})");
    const PeakSet peaks = run_peaks(c);
    CHECK(peaks.has_frequencies);
    CHECK(peaks.carbon[0] < 0.0);
    CHECK(peaks.carbon[3] > 0.0);
    CHECK(std::abs(peaks.carbon[0] + peaks.carbon[3]) < 1e-15);
    const std::string json = peaks_to_json(peaks);
    CHECK(json.find("frequency_rad_s") != std::string::npos);
}
