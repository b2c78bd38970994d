// Config parsing, trajectory runs, verification suites, serialization.
#include "methylspin/engine.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"

namespace methyl {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

const char* kCsvHeader =
    "step,time,"
    "A32u,A12u,Am12u,Am32u,Ep12u,Epm12u,Em12u,Emm12u,"
    "A32d,A12d,Am12d,Am32d,Ep12d,Epm12d,Em12d,Emm12d,"
    "carbon_3_2,carbon_1_2,carbon_m1_2,carbon_m3_2,proton_up,proton_down";

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Deterministic uniform generator for the verification draws.
struct Draws {
    std::uint64_t state;
    explicit Draws(std::uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ull) {}
    double uniform(double lo, double hi) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        const double u = static_cast<double>(state >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }
};

struct KeySpec {
    const char* name;
    enum Kind { Number, Boolean, String } kind;
};

const KeySpec kKnownKeys[] = {
    {"mode", KeySpec::String},          {"gamma", KeySpec::Number},
    {"beta", KeySpec::Number},          {"alpha", KeySpec::Number},
    {"dt", KeySpec::Number},            {"steps", KeySpec::Number},
    {"J0_Ep", KeySpec::Number},         {"J0_Em", KeySpec::Number},
    {"J1_Ep", KeySpec::Number},         {"J1_Em", KeySpec::Number},
    {"J2_Ep", KeySpec::Number},         {"J2_Em", KeySpec::Number},
    {"J0_A", KeySpec::Number},          {"J1_A", KeySpec::Number},
    {"J2_A", KeySpec::Number},          {"g0_Ep", KeySpec::Number},
    {"g0_Em", KeySpec::Number},         {"g1_Ep", KeySpec::Number},
    {"g1_Em", KeySpec::Number},         {"g2_Ep", KeySpec::Number},
    {"g2_Em", KeySpec::Number},         {"include_sq", KeySpec::Boolean},
    {"include_symmetric", KeySpec::Boolean}, {"j_hc", KeySpec::Number},
    {"j_hh", KeySpec::Number},          {"omega_S", KeySpec::Number},
    {"omega_I", KeySpec::Number},       {"seed_kind", KeySpec::String},
    {"output_path", KeySpec::String},   {"alpha_proton", KeySpec::Number},
    {"corrupt_rate", KeySpec::Number},
};

double get_number(const json& doc, const char* key, double fallback) {
    if (!doc.contains(key)) return fallback;
    const auto& v = doc.at(key);
    if (!v.is_number()) throw ParseError(std::string("key ") + key + " must be a number");
    return v.get<double>();
}

bool get_bool(const json& doc, const char* key, bool fallback) {
    if (!doc.contains(key)) return fallback;
    const auto& v = doc.at(key);
    if (!v.is_boolean()) throw ParseError(std::string("key ") + key + " must be a boolean");
    return v.get<bool>();
}

std::string get_string(const json& doc, const char* key, const std::string& fallback) {
    if (!doc.contains(key)) return fallback;
    const auto& v = doc.at(key);
    if (!v.is_string()) throw ParseError(std::string("key ") + key + " must be a string");
    return v.get<std::string>();
}

double require_range(double v, double lo, double hi, const char* key) {
    if (v < lo || v > hi) {
        std::ostringstream os;
        os << key << " must lie in [" << lo << ", " << hi << "] (got " << v << ")";
        throw ParseError(os.str());
    }
    return v;
}

double require_nonneg(double v, const char* key) {
    if (v < 0.0) {
        std::ostringstream os;
        os << key << " must be >= 0 (got " << v << ")";
        throw ParseError(os.str());
    }
    return v;
}

std::array<double, kLevels16> config_seed(const RunConfig& config) {
    switch (config.seed_kind) {
        case SeedKind::Lls:
            return seed_populations({config.params.gamma, 0.0, config.params.alpha});
        case SeedKind::Protected:
            return seed_populations(config.params);
        case SeedKind::Thermal:
            return thermal_populations(config.alpha_proton, config.params.alpha);
    }
    throw ParseError("bad seed kind");
}

void check_euler_stability(const RateMatrix& w, double dt) {
    const double product = dt * w.max_row_sum();
    if (!(product < 1.0)) {
        std::ostringstream os;
        os << "dt * max_row_sum(W) = " << product << " must be < 1";
        throw std::invalid_argument(os.str());
    }
}

// --- verification helpers ------------------------------------------------

double residual_operator_algebra() {
    double dev = 0.0;
    const FrequencyParams freqs{2.1, 0.9};
    const ComplexMatrix sz = kron(spin_z(), ComplexMatrix::identity(2));
    const ComplexMatrix iz = kron(ComplexMatrix::identity(2), spin_z());
    for (int q = -2; q <= 2; ++q) {
        const ComplexMatrix tq = two_spin_tensor(q);
        for (int q2 = -2; q2 <= 2; ++q2) {
            const cplx ip = hs_inner(tq, two_spin_tensor(q2));
            dev = std::max(dev, std::abs(ip - (q == q2 ? 1.0 : 0.0)));
        }
        dev = std::max(dev, max_abs_diff(adjoint(tq),
                                         std::pow(-1.0, q) * two_spin_tensor(-q)));
        dev = std::max(dev, max_abs_diff(commutator(sz + iz, tq), static_cast<double>(q) * tq));
        ComplexMatrix sum = ComplexMatrix::zero(4);
        for (int p = -1; p <= 1; ++p)
            if (valid_tensor_qp(q, p)) {
                const TensorComponent t = tensor_qp(q, p, freqs);
                sum = sum + t.op;
                dev = std::max(dev, max_abs_diff(commutator(freqs.omega_S * sz + freqs.omega_I * iz, t.op),
                                                 t.frequency * t.op));
            }
        dev = std::max(dev, max_abs_diff(sum, tq));
    }
    return dev;
}

double residual_symmetry_basis() {
    double dev = 0.0;
    const auto states = symmetry_states();
    const ComplexMatrix p = cyclic_permutation();
    for (int l = 0; l < kLevels; ++l) {
        const StateVector lhs = apply(p, states[l]);
        const cplx phase = eps_pow(level_sym(l));
        StateVector rhs = states[l];
        for (auto& amp : rhs.amp) amp *= phase;
        for (int i = 0; i < kLevels; ++i) dev = std::max(dev, std::abs(lhs.amp[i] - rhs.amp[i]));
    }
    dev = std::max(dev, max_abs_diff(p * p * p, ComplexMatrix::identity(kLevels)));
    for (int i = 0; i < kLevels; ++i)
        for (int j = 0; j < kLevels; ++j)
            dev = std::max(dev, std::abs(inner(states[i], states[j]) - (i == j ? 1.0 : 0.0)));

    // dual form of the gamma-polarized protected state
    for (int k = 0; k < 20; ++k) {
        const double gamma = -1.0 + 2.0 * k / 19.0;
        const ComplexMatrix q = q_lls(gamma);
        ComplexMatrix pauli = ComplexMatrix::identity(kLevels);
        const ComplexMatrix sig[3] = {pauli_x(), pauli_y(), pauli_z()};
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j)
                for (const auto& s : sig)
                    pauli = pauli + (gamma / 3.0) * (embed_single(s, i, 3) * embed_single(s, j, 3));
        dev = std::max(dev, max_abs_diff(q, (1.0 / 8.0) * pauli));
        for (char axis : {'x', 'y', 'z'})
            dev = std::max(dev, std::abs(trace(q * collective_spin(axis))));
    }
    return dev;
}

double residual_selection_rules(Draws& draws) {
    double dev = 0.0;
    const Sym lambdas[3] = {Sym::A, Sym::Ep, Sym::Em};

    for (Sym l : lambdas)
        for (int p = -1; p <= 1; ++p) {
            const ComplexMatrix op = sym_collective_spin(l, p);
            for (int x = 0; x < kLevels; ++x)
                for (int y = 0; y < kLevels; ++y) {
                    const bool allowed = level_sym(x) == sym_add(level_sym(y), l) &&
                                         level_twice_m(x) == level_twice_m(y) + 2 * p;
                    if (!allowed) dev = std::max(dev, std::abs(op.at(x, y)));
                }
        }
    for (Sym l : lambdas)
        for (int q = -2; q <= 2; ++q) {
            const ComplexMatrix op = homo_symmetrized(l, q);
            for (int x = 0; x < kLevels; ++x)
                for (int y = 0; y < kLevels; ++y) {
                    const bool allowed = level_sym(x) == sym_add(level_sym(y), l) &&
                                         level_twice_m(x) == level_twice_m(y) + 2 * q;
                    if (!allowed) dev = std::max(dev, std::abs(op.at(x, y)));
                }
            // no E+ <-> E- transitions for the single- and double-quantum families
            if (q != 0)
                for (int x = 4; x < kLevels; ++x)
                    for (int y = 4; y < kLevels; ++y)
                        if ((x < 6) != (y < 6)) dev = std::max(dev, std::abs(op.at(x, y)));
        }

    // reconstruction of the site sums from the symmetry-projected families
    for (int rep = 0; rep < 20; ++rep) {
        cplx b[3];
        for (auto& v : b) v = cplx(draws.uniform(-1, 1), draws.uniform(-1, 1));
        for (int q = -2; q <= 2; ++q)
            for (int p = -1; p <= 1; ++p) {
                if (!valid_tensor_qp(q, p)) continue;
                ComplexMatrix lhs = ComplexMatrix::zero(kLevels16);
                for (Sym l : lambdas)
                    lhs = lhs + sym_coefficient(l, b[0], b[1], b[2]) * het_symmetrized(l, q, p);
                ComplexMatrix rhs = ComplexMatrix::zero(kLevels16);
                for (int j = 1; j <= 3; ++j) rhs = rhs + b[j - 1] * het_site_tensor(j, q, p);
                dev = std::max(dev, max_abs_diff(lhs, rhs));
            }
        for (int q = -2; q <= 2; ++q) {
            ComplexMatrix lhs = ComplexMatrix::zero(kLevels);
            for (Sym l : lambdas)
                lhs = lhs + sym_coefficient(l, b[0], b[1], b[2]) * homo_symmetrized(l, q);
            ComplexMatrix rhs = b[0] * pair_tensor(q, 1, 2) + b[1] * pair_tensor(q, 2, 3) +
                                b[2] * pair_tensor(q, 3, 1);
            dev = std::max(dev, max_abs_diff(lhs, rhs));
        }
    }
    return dev;
}

SpectralDensitySet random_rates(Draws& draws) {
    SpectralDensitySet J;
    for (Sym l : {Sym::Ep, Sym::Em})
        for (int q = 0; q < 3; ++q) {
            J.set_het(l, q, draws.uniform(0.0, 1.0));
            J.set_homo(l, q, draws.uniform(0.0, 1.0));
        }
    return J;
}

PolarizationParams random_params(Draws& draws, bool with_alpha) {
    PolarizationParams p;
    p.gamma = draws.uniform(-0.95, 0.95);
    p.beta = draws.uniform(-0.95, 0.95);
    p.alpha = with_alpha ? draws.uniform(-0.9, 0.9) : 0.0;
    return p;
}

double residual_analytic_vs_rate(const RunConfig& config, Draws& draws) {
    double dev = 0.0;
    const double dt = 1e-3;
    for (int rep = 0; rep < 12; ++rep) {
        const PolarizationParams params =
            rep == 0 ? config.params : random_params(draws, true);
        const SpectralDensitySet J = rep == 0 ? config.spectral : random_rates(draws);

        RateMatrix w16 = rate_matrix(het_generator(J), kLevels16);
        if (config.corrupt_rate > 0.0) {
            // fault-injection hook: perturb the strongest transition rate
            int bx = 0, by = 1;
            for (int x = 0; x < kLevels16; ++x)
                for (int y = x + 1; y < kLevels16; ++y)
                    if (w16.at(x, y) > w16.at(bx, by)) {
                        bx = x;
                        by = y;
                    }
            w16.at(bx, by) *= 1.0 + config.corrupt_rate;
            w16.at(by, bx) *= 1.0 + config.corrupt_rate;
        }
        const auto seed = seed_populations(params);
        PopulationVector p(seed.begin(), seed.end());
        euler_step_in_place(p, w16, dt);
        const auto analytic = first_step_heteronuclear(params, J, dt);
        for (int i = 0; i < kLevels16; ++i)
            dev = std::max(dev, std::abs(p[i] - (seed[i] + analytic[i])));

        // second step, unpolarized test spin
        PolarizationParams p0 = params;
        p0.alpha = 0.0;
        const auto seed0 = seed_populations(p0);
        PopulationVector q(seed0.begin(), seed0.end());
        euler_step_in_place(q, w16, dt);
        PopulationVector q1 = q;
        euler_step_in_place(q1, w16, dt);
        const auto d2 = second_step_heteronuclear(p0, J, dt);
        const int rows[4] = {0, kLevels, 3, 3 + kLevels}; // A+-3/2, test up/down
        for (int r = 0; r < 4; ++r)
            dev = std::max(dev, std::abs((q1[rows[r]] - q[rows[r]]) - d2[r]));

        // homonuclear first step
        RateMatrix w8 = rate_matrix(homo_generator(J), kLevels);
        const auto q0 = seed_populations_proton(params.gamma, params.beta);
        PopulationVector h(q0.begin(), q0.end());
        euler_step_in_place(h, w8, dt);
        const auto homo = first_step_homonuclear(params, J, dt);
        for (int i = 0; i < kLevels; ++i)
            dev = std::max(dev, std::abs(h[i] - (q0[i] + homo[i])));
    }
    return dev;
}

double residual_rate_vs_lindblad(const RunConfig& config, Draws& draws) {
    double dev = 0.0;
    for (int rep = 0; rep < 3; ++rep) {
        const PolarizationParams params =
            rep == 0 ? config.params : random_params(draws, true);
        const SpectralDensitySet J = rep == 0 ? config.spectral : random_rates(draws);
        const auto terms = het_generator(J);
        if (terms.empty()) continue;
        const auto seed = seed_populations(params);

        ComplexMatrix rho0 = ComplexMatrix::zero(kLevels16);
        for (int i = 0; i < kLevels16; ++i) rho0.at(i, i) = seed[i];

        const RateMatrix w = rate_matrix(terms, kLevels16);
        const double scale = std::max(w.max_row_sum(), 1e-6);
        const double t = 0.2 / scale;
        const ComplexMatrix rho = lindblad_propagate(rho0, terms, t, t / 200.0);

        // reference: the same rate ODE integrated with the same scheme
        PopulationVector p(seed.begin(), seed.end());
        const int nsteps = 200;
        const double h = t / nsteps;
        auto flow = [&](const PopulationVector& v) {
            PopulationVector f(kLevels16, 0.0);
            for (int x = 0; x < kLevels16; ++x)
                for (int y = 0; y < kLevels16; ++y)
                    if (x != y) f[x] += w.at(x, y) * (v[y] - v[x]);
            return f;
        };
        for (int n = 0; n < nsteps; ++n) {
            const auto k1 = flow(p);
            PopulationVector tmp(kLevels16);
            for (int i = 0; i < kLevels16; ++i) tmp[i] = p[i] + 0.5 * h * k1[i];
            const auto k2 = flow(tmp);
            for (int i = 0; i < kLevels16; ++i) tmp[i] = p[i] + 0.5 * h * k2[i];
            const auto k3 = flow(tmp);
            for (int i = 0; i < kLevels16; ++i) tmp[i] = p[i] + h * k3[i];
            const auto k4 = flow(tmp);
            for (int i = 0; i < kLevels16; ++i)
                p[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        for (int i = 0; i < kLevels16; ++i)
            dev = std::max(dev, std::abs(rho.at(i, i).real() - p[i]));
        for (int x = 0; x < kLevels16; ++x)
            for (int y = 0; y < kLevels16; ++y)
                if (x != y) dev = std::max(dev, std::abs(rho.at(x, y)));
    }
    return dev;
}

double residual_peak_identities(const RunConfig& config, Draws& draws) {
    double dev = 0.0;
    const double dt = 1e-3;
    for (int rep = 0; rep < 12; ++rep) {
        PolarizationParams params = rep == 0 ? config.params : random_params(draws, false);
        params.alpha = 0.0;
        const SpectralDensitySet J = rep == 0 ? config.spectral : random_rates(draws);

        // proton doublet anti-phase, any beta
        PeakSet peaks = predicted_peaks_first_order(params, J, dt);
        dev = std::max(dev, std::abs(peaks.proton[0] + peaks.proton[1]));

        // carbon quartet pairwise equality at beta = 0
        PolarizationParams lls = params;
        lls.beta = 0.0;
        PeakSet pl = predicted_peaks_first_order(lls, J, dt);
        dev = std::max(dev, std::abs(pl.carbon[0] - pl.carbon[1]));
        dev = std::max(dev, std::abs(pl.carbon[3] - pl.carbon[2]));

        // beta dependence disappears for symmetric spectral densities
        SpectralDensitySet sym = J;
        for (int q = 0; q < 3; ++q) {
            sym.set_het(Sym::Em, q, sym.het_rate(Sym::Ep, q));
            sym.set_homo(Sym::Em, q, sym.homo_rate(Sym::Ep, q));
        }
        PolarizationParams pb = params;
        pb.beta = 0.7;
        PolarizationParams pb2 = params;
        pb2.beta = -0.3;
        const PeakSet s1 = predicted_peaks_first_order(pb, sym, dt);
        const PeakSet s2 = predicted_peaks_first_order(pb2, sym, dt);
        for (int i = 0; i < 4; ++i) dev = std::max(dev, std::abs(s1.carbon[i] - s2.carbon[i]));
        for (int i = 0; i < 2; ++i) dev = std::max(dev, std::abs(s1.proton[i] - s2.proton[i]));

        // closed form against the generator-driven step
        const RateMatrix w16 = rate_matrix(het_generator(J), kLevels16);
        const auto seed = seed_populations(params);
        PopulationVector p(seed.begin(), seed.end());
        euler_step_in_place(p, w16, dt);
        const auto c = carbon_peaks(p);
        const auto pr = proton_peaks(p);
        for (int i = 0; i < 4; ++i) dev = std::max(dev, std::abs(c[i] - peaks.carbon[i]));
        for (int i = 0; i < 2; ++i) dev = std::max(dev, std::abs(pr[i] - peaks.proton[i]));
    }
    return dev;
}

double residual_homonuclear_null(const RunConfig& config, Draws& draws) {
    double dev = 0.0;
    for (int rep = 0; rep < 6; ++rep) {
        PolarizationParams params = rep == 0 ? config.params : random_params(draws, false);
        const SpectralDensitySet g = rep == 0 ? config.spectral : random_rates(draws);
        const RateMatrix w8 = rate_matrix(homo_generator(g), kLevels);
        const double dt = 0.05 / std::max(w8.max_row_sum(), 1e-9);

        // beta = 0: no Zeeman polarization develops at any step
        const auto q0 = seed_populations_proton(params.gamma, 0.0);
        PopulationVector p(q0.begin(), q0.end());
        for (int n = 0; n < 200; ++n) {
            euler_step_in_place(p, w8, dt);
            dev = std::max(dev, std::abs(proton_sz(p)));
        }

        // first-order signal formula against the engine
        const auto q1 = seed_populations_proton(params.gamma, params.beta);
        PopulationVector h(q1.begin(), q1.end());
        euler_step_in_place(h, w8, dt);
        const double predicted = homo_proton_signal_first_order(params, g, dt);
        dev = std::max(dev, std::abs(proton_sz(h) - predicted));
    }
    return dev;
}

} // namespace

RunConfig parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("config must be a JSON object");

    std::set<std::string> known;
    for (const auto& k : kKnownKeys) known.insert(k.name);
    for (const auto& item : doc.items())
        if (!known.count(item.key())) throw ParseError("unknown key: " + item.key());

    for (const char* required : {"dt", "steps"})
        if (!doc.contains(required))
            throw ParseError(std::string("missing required key: ") + required);

    RunConfig c;
    const std::string mode = get_string(doc, "mode", "het");
    if (mode == "het") c.mode = RunMode::Het;
    else if (mode == "homo") c.mode = RunMode::Homo;
    else if (mode == "both-sequential") c.mode = RunMode::BothSequential;
    else throw ParseError("mode must be one of het, homo, both-sequential (got " + mode + ")");

    c.params.gamma = require_range(get_number(doc, "gamma", 0.0), -1.0, 1.0, "gamma");
    c.params.beta = require_range(get_number(doc, "beta", 0.0), -1.0, 1.0, "beta");
    c.params.alpha = require_range(get_number(doc, "alpha", 0.0), -1.0, 1.0, "alpha");
    c.alpha_proton =
        require_range(get_number(doc, "alpha_proton", 0.0), -1.0, 1.0, "alpha_proton");

    c.dt = get_number(doc, "dt", 0.0);
    if (!(c.dt > 0.0)) throw ParseError("dt must be > 0");
    const double steps = get_number(doc, "steps", 0.0);
    if (steps < 1.0 || steps != std::floor(steps))
        throw ParseError("steps must be an integer >= 1");
    c.steps = static_cast<int>(steps);

    struct RateKey {
        const char* name;
        Sym lambda;
        int q;
        bool het;
    };
    const RateKey rate_keys[] = {
        {"J0_Ep", Sym::Ep, 0, true}, {"J0_Em", Sym::Em, 0, true},
        {"J1_Ep", Sym::Ep, 1, true}, {"J1_Em", Sym::Em, 1, true},
        {"J2_Ep", Sym::Ep, 2, true}, {"J2_Em", Sym::Em, 2, true},
        {"J0_A", Sym::A, 0, true},   {"J1_A", Sym::A, 1, true},
        {"J2_A", Sym::A, 2, true},   {"g0_Ep", Sym::Ep, 0, false},
        {"g0_Em", Sym::Em, 0, false}, {"g1_Ep", Sym::Ep, 1, false},
        {"g1_Em", Sym::Em, 1, false}, {"g2_Ep", Sym::Ep, 2, false},
        {"g2_Em", Sym::Em, 2, false},
    };
    for (const auto& rk : rate_keys) {
        const double v = require_nonneg(get_number(doc, rk.name, 0.0), rk.name);
        if (rk.het) c.spectral.set_het(rk.lambda, rk.q, v);
        else c.spectral.set_homo(rk.lambda, rk.q, v);
    }

    c.include_sq = get_bool(doc, "include_sq", false);
    c.include_symmetric = get_bool(doc, "include_symmetric", false);
    c.spectrum.j_hc = get_number(doc, "j_hc", 125.0);
    c.spectrum.j_hh = get_number(doc, "j_hh", 0.0);
    c.spectrum.larmor.omega_S =
        get_number(doc, "omega_S", 2.0 * std::numbers::pi * 500.0e6);
    c.spectrum.larmor.omega_I =
        get_number(doc, "omega_I", 2.0 * std::numbers::pi * 125.7e6);

    const std::string seed = get_string(doc, "seed_kind", "lls");
    if (seed == "lls") c.seed_kind = SeedKind::Lls;
    else if (seed == "protected") c.seed_kind = SeedKind::Protected;
    else if (seed == "thermal") c.seed_kind = SeedKind::Thermal;
    else throw ParseError("seed_kind must be one of lls, protected, thermal (got " + seed + ")");

    c.corrupt_rate = require_nonneg(get_number(doc, "corrupt_rate", 0.0), "corrupt_rate");
    c.output_path = get_string(doc, "output_path", "");

    const double guard = c.dt * c.spectral.max_rate() * 16.0;
    if (!(guard < 1.0)) {
        std::ostringstream os;
        os << "dt * max_rate * 16 = " << guard << " must be < 1 (Euler stability guard)";
        throw ParseError(os.str());
    }
    return c;
}

std::vector<RunRecord> run_simulate(const RunConfig& config) {
    const HetGeneratorOptions options{config.include_sq, config.include_symmetric};
    RateMatrix w_het, w_homo;
    const bool use_het = config.mode != RunMode::Homo;
    const bool use_homo = config.mode != RunMode::Het;
    if (use_het) {
        w_het = rate_matrix(het_generator(config.spectral, options), kLevels16);
        check_euler_stability(w_het, config.dt);
    }
    if (use_homo) {
        w_homo = lift_to_test_space(rate_matrix(homo_generator(config.spectral), kLevels));
        check_euler_stability(w_homo, config.dt);
    }

    const auto seed = config_seed(config);
    PopulationVector p(seed.begin(), seed.end());

    std::vector<RunRecord> records;
    records.reserve(static_cast<size_t>(config.steps) + 1);
    for (int step = 0; step <= config.steps; ++step) {
        if (step > 0) {
            if (use_het) euler_step_in_place(p, w_het, config.dt);
            if (use_homo) euler_step_in_place(p, w_homo, config.dt);
        }
        RunRecord rec;
        rec.step = step;
        rec.time = step * config.dt;
        for (int i = 0; i < kLevels16; ++i) rec.populations[i] = p[i];
        rec.carbon = carbon_peaks(p);
        rec.proton = proton_peaks(p);
        records.push_back(rec);
    }
    return records;
}

std::string records_to_csv(const std::vector<RunRecord>& records) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& rec : records) {
        out += std::to_string(rec.step);
        out += ',';
        out += fmt17(rec.time);
        for (double v : rec.populations) {
            out += ',';
            out += fmt17(v);
        }
        for (double v : rec.carbon) {
            out += ',';
            out += fmt17(v);
        }
        for (double v : rec.proton) {
            out += ',';
            out += fmt17(v);
        }
        out += '\n';
    }
    return out;
}

VerifyReport run_verify(const RunConfig& config, double tolerance) {
    VerifyReport report;
    report.tolerance = tolerance;

    Draws draws(20240817ull);
    auto add = [&](const std::string& name, double dev) {
        report.checks.push_back({name, dev, dev < tolerance});
    };
    add("operator_algebra", residual_operator_algebra());
    add("symmetry_basis", residual_symmetry_basis());
    add("selection_rules", residual_selection_rules(draws));
    add("analytic_vs_rate", residual_analytic_vs_rate(config, draws));
    add("rate_vs_lindblad", residual_rate_vs_lindblad(config, draws));
    add("peak_identities", residual_peak_identities(config, draws));
    add("homonuclear_null", residual_homonuclear_null(config, draws));

    report.passed = true;
    for (const auto& check : report.checks) report.passed = report.passed && check.pass;
    return report;
}

std::string report_to_json(const VerifyReport& report) {
    json doc;
    doc["tolerance"] = report.tolerance;
    doc["passed"] = report.passed;
    doc["checks"] = json::array();
    for (const auto& check : report.checks) {
        json c;
        c["name"] = check.name;
        c["max_deviation"] = check.max_deviation;
        c["pass"] = check.pass;
        doc["checks"].push_back(c);
    }
    return doc.dump(2) + "\n";
}

PeakSet run_peaks(const RunConfig& config) {
    PeakSet peaks;
    const bool default_het = config.mode == RunMode::Het && !config.include_sq &&
                             !config.include_symmetric &&
                             config.seed_kind != SeedKind::Thermal;
    if (default_het) {
        PolarizationParams params = config.params;
        if (config.seed_kind == SeedKind::Lls) params.beta = 0.0;
        peaks = predicted_peaks_first_order(params, config.spectral, config.dt);
    } else {
        // general seeds and modes: one generator step from the configured seed
        RunConfig one = config;
        one.steps = 1;
        const auto records = run_simulate(one);
        peaks.carbon = records.back().carbon;
        peaks.proton = records.back().proton;
    }
    peak_frequencies(config.spectrum, peaks);
    return peaks;
}

std::string peaks_to_json(const PeakSet& peaks) {
    static const char* kCarbonLabels[4] = {"+3/2", "+1/2", "-1/2", "-3/2"};
    static const char* kProtonLabels[2] = {"up", "down"};
    json doc;
    doc["carbon"] = json::array();
    for (int i = 0; i < 4; ++i) {
        json p;
        p["m"] = kCarbonLabels[i];
        p["amplitude"] = peaks.carbon[i];
        if (peaks.has_frequencies) p["frequency_rad_s"] = peaks.carbon_frequency[i];
        doc["carbon"].push_back(p);
    }
    doc["proton"] = json::array();
    for (int i = 0; i < 2; ++i) {
        json p;
        p["test_spin"] = kProtonLabels[i];
        p["amplitude"] = peaks.proton[i];
        if (peaks.has_frequencies) p["frequency_rad_s"] = peaks.proton_frequency[i];
        doc["proton"].push_back(p);
    }
    return doc.dump(2) + "\n";
}

const char* version() { return kVersion; }

} // namespace methyl
