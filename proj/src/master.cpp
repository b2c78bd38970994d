// Dipolar relaxation generators, the master-equation oracle, the classical
// rate reduction, and the closed-form short-time solutions.
//
// Every symmetrized Lindblad operator maps a level |s, m, t> to a single
// level, so the generator closes on diagonal states and the diagonal sector
// obeys classical rate equations exactly. The closed forms below are the
// per-level transition sums written out; their pair tables (partners and
// squared amplitudes) are hard-coded and cross-checked against the
// operator-built rate matrix by the test suite. Squared amplitudes of the
// collective raising operators: 1 for transitions touching m = +-3/2, 1/3
// for the other A<->E channels, 4/3 for the E+<->E- channel.
#include "methylspin/master.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace methyl {

namespace {

constexpr int kA32 = 0, kA12 = 1, kAm12 = 2, kAm32 = 3;
constexpr int kEp12 = 4, kEpm12 = 5, kEm12 = 6, kEmm12 = 7;

int up(int level) { return level; }
int down(int level) { return level + kLevels; }

struct Raise {
    int src;
    int dst;
    double weight; // squared matrix element of the collective raising operator
};

// m -> m+1 transitions of S^l_+ (levels src -> dst), per lambda.
const Raise kHetRaise[2][5] = {
    // lambda = E+ : s -> s + 1
    {{kAm32, kEpm12, 1.0},
     {kAm12, kEp12, 1.0 / 3.0},
     {kEpm12, kEm12, 4.0 / 3.0},
     {kEm12, kA32, 1.0},
     {kEmm12, kA12, 1.0 / 3.0}},
    // lambda = E- : s -> s - 1
    {{kAm32, kEmm12, 1.0},
     {kAm12, kEm12, 1.0 / 3.0},
     {kEmm12, kEp12, 4.0 / 3.0},
     {kEp12, kA32, 1.0},
     {kEpm12, kA12, 1.0 / 3.0}},
};

// m -> m+1 transitions of the homonuclear T^l_1 family.
const Raise kHomoSingle[2][4] = {
    {{kAm32, kEpm12, 0.25},
     {kAm12, kEp12, 0.75},
     {kEm12, kA32, 0.25},
     {kEmm12, kA12, 0.75}},
    {{kAm32, kEmm12, 0.25},
     {kAm12, kEm12, 0.75},
     {kEp12, kA32, 0.25},
     {kEpm12, kA12, 0.75}},
};

// m -> m+2 transitions of T^l_2.
const Raise kHomoDouble[2][2] = {
    {{kAm32, kEp12, 1.0}, {kEmm12, kA32, 1.0}},
    {{kAm32, kEm12, 1.0}, {kEpm12, kA32, 1.0}},
};

// m-preserving flip-flop pairs (either lambda direction links the same pair).
const Raise kHomoFlipFlop[6] = {
    {kA12, kEp12, 1.0 / 3.0},  {kEp12, kEm12, 4.0 / 3.0},  {kEm12, kA12, 1.0 / 3.0},
    {kAm12, kEpm12, 1.0 / 3.0}, {kEpm12, kEmm12, 4.0 / 3.0}, {kEmm12, kAm12, 1.0 / 3.0},
};

const Sym kELambdas[2] = {Sym::Ep, Sym::Em};

void add_term(std::vector<LindbladTerm>& terms, double rate, ComplexMatrix op) {
    if (rate > 0.0) terms.push_back({rate, std::move(op)});
}

void accumulate_pair_flow(std::array<double, kLevels16>& delta,
                          const std::array<double, kLevels16>& p, int x, int y,
                          double w, double dt) {
    const double flow = dt * w * (p[y] - p[x]);
    delta[x] += flow;
    delta[y] -= flow;
}

void accumulate_pair_flow8(std::array<double, kLevels>& delta,
                           const std::array<double, kLevels>& p, int x, int y,
                           double w, double dt) {
    const double flow = dt * w * (p[y] - p[x]);
    delta[x] += flow;
    delta[y] -= flow;
}

void check_polarizations(const PolarizationParams& params) {
    if (std::abs(params.gamma) > 1.0 || std::abs(params.beta) > 1.0 ||
        std::abs(params.alpha) > 1.0)
        throw std::invalid_argument("polarization parameters must lie in [-1, 1]");
}

} // namespace

double SpectralDensitySet::het_rate(Sym lambda, int q) const {
    return het[sym_index(lambda)][q];
}

double SpectralDensitySet::homo_rate(Sym lambda, int q) const {
    return homo[sym_index(lambda)][q];
}

void SpectralDensitySet::set_het(Sym lambda, int q, double value) {
    het[sym_index(lambda)][q] = value;
}

void SpectralDensitySet::set_homo(Sym lambda, int q, double value) {
    homo[sym_index(lambda)][q] = value;
}

double SpectralDensitySet::max_rate() const {
    double m = 0.0;
    for (int s = 0; s < 3; ++s)
        for (int q = 0; q < 3; ++q) m = std::max({m, het[s][q], homo[s][q]});
    return m;
}

void SpectralDensitySet::validate() const {
    for (int s = 0; s < 3; ++s)
        for (int q = 0; q < 3; ++q)
            if (het[s][q] < 0.0 || homo[s][q] < 0.0)
                throw std::invalid_argument("spectral densities must be non-negative");
}

ComplexMatrix dissipator(const LindbladTerm& term, const ComplexMatrix& rho) {
    if (term.op.dim != rho.dim) throw std::invalid_argument("dissipator: dimension mismatch");
    if (term.rate < 0.0) throw std::invalid_argument("dissipator: rate must be >= 0");
    const ComplexMatrix ldag = adjoint(term.op);
    return term.rate * (term.op * rho * ldag - 0.5 * anticommutator(ldag * term.op, rho));
}

std::vector<LindbladTerm> het_generator(const SpectralDensitySet& J,
                                        HetGeneratorOptions options) {
    J.validate();
    std::vector<LindbladTerm> terms;
    const ComplexMatrix ip = sigma_plus(), im = sigma_minus(), iz = spin_z();

    std::vector<Sym> lambdas = {Sym::Ep, Sym::Em};
    if (options.include_symmetric) lambdas.push_back(Sym::A);

    for (Sym l : lambdas) {
        const Sym nl = sym_neg(l);
        add_term(terms, J.het_rate(l, 0) / 6.0, kron(im, sym_collective_spin(l, +1)));
        add_term(terms, J.het_rate(l, 0) / 6.0, kron(ip, sym_collective_spin(nl, -1)));
        add_term(terms, J.het_rate(l, 2), kron(ip, sym_collective_spin(l, +1)));
        add_term(terms, J.het_rate(l, 2), kron(im, sym_collective_spin(nl, -1)));
        if (options.include_sq) {
            add_term(terms, J.het_rate(l, 1), kron(iz, sym_collective_spin(l, +1)));
            add_term(terms, J.het_rate(l, 1), kron(iz, sym_collective_spin(nl, -1)));
            add_term(terms, J.het_rate(l, 1), kron(ip, sym_collective_spin(l, 0)));
            add_term(terms, J.het_rate(l, 1), kron(im, sym_collective_spin(nl, 0)));
        }
    }
    return terms;
}

std::vector<LindbladTerm> homo_generator(const SpectralDensitySet& g) {
    g.validate();
    std::vector<LindbladTerm> terms;
    for (Sym l : kELambdas) {
        const Sym nl = sym_neg(l);
        add_term(terms, g.homo_rate(l, 0) / 6.0, homo_flip_flop(l));
        add_term(terms, g.homo_rate(l, 0) / 6.0, homo_flip_flop(nl));
        add_term(terms, g.homo_rate(l, 2), homo_symmetrized(l, +2));
        add_term(terms, g.homo_rate(l, 2), homo_symmetrized(nl, -2));
        add_term(terms, g.homo_rate(l, 1), homo_symmetrized(l, +1));
        add_term(terms, g.homo_rate(l, 1), homo_symmetrized(nl, -1));
    }
    return terms;
}

ComplexMatrix lindblad_propagate(const ComplexMatrix& rho0,
                                 const std::vector<LindbladTerm>& terms,
                                 double t, double dt) {
    if (dt <= 0.0) throw std::invalid_argument("lindblad_propagate: dt must be > 0");
    if (t < 0.0) throw std::invalid_argument("lindblad_propagate: t must be >= 0");
    if (!is_hermitian(rho0, 1e-10))
        throw std::invalid_argument("lindblad_propagate: rho0 must be Hermitian");
    if (std::abs(trace(rho0) - 1.0) > 1e-8)
        throw std::invalid_argument("lindblad_propagate: rho0 must have unit trace");
    for (const auto& term : terms)
        if (term.op.dim != rho0.dim)
            throw std::invalid_argument("lindblad_propagate: term dimension mismatch");
    if (t == 0.0) return rho0;

    struct Prepared {
        double rate;
        ComplexMatrix l, ldag, m; // m = L^dag L
    };
    std::vector<Prepared> prep;
    prep.reserve(terms.size());
    for (const auto& term : terms) {
        ComplexMatrix ld = adjoint(term.op);
        prep.push_back({term.rate, term.op, ld, ld * term.op});
    }

    auto generator = [&](const ComplexMatrix& rho) {
        ComplexMatrix out = ComplexMatrix::zero(rho.dim);
        for (const auto& q : prep)
            out = out + q.rate * (q.l * rho * q.ldag - 0.5 * anticommutator(q.m, rho));
        return out;
    };

    const int nsteps = std::max(1, static_cast<int>(std::ceil(t / dt - 1e-12)));
    const double h = t / nsteps;
    ComplexMatrix rho = rho0;
    for (int n = 0; n < nsteps; ++n) {
        const ComplexMatrix k1 = generator(rho);
        const ComplexMatrix k2 = generator(rho + (0.5 * h) * k1);
        const ComplexMatrix k3 = generator(rho + (0.5 * h) * k2);
        const ComplexMatrix k4 = generator(rho + h * k3);
        rho = rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return rho;
}

double RateMatrix::max_row_sum() const {
    double m = 0.0;
    for (int x = 0; x < dim; ++x) {
        double s = 0.0;
        for (int y = 0; y < dim; ++y) s += at(x, y);
        m = std::max(m, s);
    }
    return m;
}

RateMatrix rate_matrix(const std::vector<LindbladTerm>& terms, int dim) {
    RateMatrix w;
    w.dim = dim;
    w.w.assign(static_cast<size_t>(dim) * dim, 0.0);
    for (const auto& term : terms) {
        if (term.op.dim != dim) throw std::invalid_argument("rate_matrix: dimension mismatch");
        for (int x = 0; x < dim; ++x)
            for (int y = 0; y < dim; ++y) {
                if (x == y) continue;
                const double amp = std::abs(term.op.at(x, y));
                w.at(x, y) += term.rate * amp * amp;
            }
    }
    return w;
}

RateMatrix lift_to_test_space(const RateMatrix& w8) {
    if (w8.dim != kLevels) throw std::invalid_argument("lift_to_test_space: need dim 8");
    RateMatrix w;
    w.dim = kLevels16;
    w.w.assign(static_cast<size_t>(kLevels16) * kLevels16, 0.0);
    for (int t = 0; t < 2; ++t)
        for (int x = 0; x < kLevels; ++x)
            for (int y = 0; y < kLevels; ++y)
                w.at(t * kLevels + x, t * kLevels + y) = w8.at(x, y);
    return w;
}

void euler_step_in_place(PopulationVector& p, const RateMatrix& w, double dt) {
    const int n = w.dim;
    PopulationVector delta(n, 0.0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) delta[x] += w.at(x, y) * (p[y] - p[x]);
    for (int x = 0; x < n; ++x) p[x] += dt * delta[x];
}

std::vector<PopulationVector> rate_propagate(const PopulationVector& p0,
                                             const RateMatrix& w, double dt, int steps) {
    if (static_cast<int>(p0.size()) != w.dim)
        throw std::invalid_argument("rate_propagate: population/matrix dimension mismatch");
    if (steps < 0) throw std::invalid_argument("rate_propagate: steps must be >= 0");
    double sum = 0.0;
    for (double v : p0) {
        if (v < -1e-12) throw std::invalid_argument("rate_propagate: negative population");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("rate_propagate: populations must sum to 1");
    const double product = dt * w.max_row_sum();
    if (!(product < 1.0)) {
        std::ostringstream os;
        os << "rate_propagate: dt * max_row_sum(W) = " << product << " must be < 1";
        throw std::invalid_argument(os.str());
    }

    std::vector<PopulationVector> traj;
    traj.reserve(static_cast<size_t>(steps) + 1);
    traj.push_back(p0);
    PopulationVector p = p0;
    for (int n = 0; n < steps; ++n) {
        euler_step_in_place(p, w, dt);
        traj.push_back(p);
    }
    return traj;
}

std::array<double, kLevels> seed_populations_proton(double gamma, double beta) {
    if (std::abs(gamma) > 1.0 || std::abs(beta) > 1.0)
        throw std::invalid_argument("seed_populations_proton: parameters must lie in [-1, 1]");
    const double a = (1.0 + gamma) / 8.0;
    const double ep = (1.0 - gamma) * (1.0 + beta) / 8.0;
    const double em = (1.0 - gamma) * (1.0 - beta) / 8.0;
    return {a, a, a, a, ep, ep, em, em};
}

std::array<double, kLevels16> seed_populations(const PolarizationParams& params) {
    check_polarizations(params);
    const auto q0 = seed_populations_proton(params.gamma, params.beta);
    std::array<double, kLevels16> p{};
    for (int l = 0; l < kLevels; ++l) {
        p[up(l)] = 0.5 * (1.0 + params.alpha) * q0[l];
        p[down(l)] = 0.5 * (1.0 - params.alpha) * q0[l];
    }
    return p;
}

std::array<double, kLevels16> thermal_populations(double alpha_proton, double alpha) {
    if (std::abs(alpha_proton) > 1.0 || std::abs(alpha) > 1.0)
        throw std::invalid_argument("thermal_populations: polarizations must lie in [-1, 1]");
    std::array<double, kLevels16> p{};
    for (int l = 0; l < kLevels; ++l) {
        const double m = 0.5 * level_twice_m(l);
        const double q = (1.0 + alpha_proton * m) / 8.0;
        p[up(l)] = 0.5 * (1.0 + alpha) * q;
        p[down(l)] = 0.5 * (1.0 - alpha) * q;
    }
    return p;
}

ImbalanceSeeds seeds(const PolarizationParams& params) {
    check_polarizations(params);
    const double kappa = (1.0 - params.gamma) / 8.0;
    ImbalanceSeeds s{};
    s.c_plus = params.gamma / 4.0 - params.beta * kappa;
    s.c_minus = params.gamma / 4.0 + params.beta * kappa;
    s.c_2 = s.c_minus - s.c_plus;
    const double ap = params.alpha / 4.0 + params.alpha * params.beta * kappa;
    const double am = params.alpha / 4.0 - params.alpha * params.beta * kappa;
    s.augmented = {s.c_plus + ap, s.c_plus - ap, s.c_minus + am, s.c_minus - am};
    const double ae = params.alpha * (1.0 - params.gamma) / 4.0;
    s.augmented_e = {s.c_2 + ae, s.c_2 - ae};
    return s;
}

std::array<double, kLevels16> first_step_heteronuclear(const PolarizationParams& params,
                                                       const SpectralDensitySet& J,
                                                       double dt) {
    J.validate();
    const auto p = seed_populations(params);
    std::array<double, kLevels16> delta{};
    for (int li = 0; li < 2; ++li) {
        const Sym l = kELambdas[li];
        const double j2 = J.het_rate(l, 2);
        const double j0_6 = J.het_rate(l, 0) / 6.0;
        for (const Raise& r : kHetRaise[li]) {
            // DQ: |src, down> <-> |dst, up>; ZQ: |src, up> <-> |dst, down>.
            accumulate_pair_flow(delta, p, up(r.dst), down(r.src), j2 * r.weight, dt);
            accumulate_pair_flow(delta, p, down(r.dst), up(r.src), j0_6 * r.weight, dt);
        }
    }
    return delta;
}

SecondStepConstants second_step_constants(const PolarizationParams& params,
                                          const SpectralDensitySet& J) {
    if (params.alpha != 0.0)
        throw std::invalid_argument("second_step_constants: alpha must be 0");
    const auto d1 = first_step_heteronuclear(params, J, 1.0);
    const double dq_minus = d1[down(kEm12)] - d1[up(kA32)];  // multiplies J2^{E+}
    const double dq_plus = d1[down(kEp12)] - d1[up(kA32)];   // multiplies J2^{E-}
    const double zq_minus = d1[up(kEm12)] - d1[down(kA32)];  // multiplies J0^{E+}
    const double zq_plus = d1[up(kEp12)] - d1[down(kA32)];   // multiplies J0^{E-}
    SecondStepConstants c{};
    c.a0 = 0.5 * (dq_minus + dq_plus);
    c.a_plus = dq_minus - c.a0;
    c.a_minus = dq_plus - c.a0;
    c.b0 = 0.5 * (zq_minus + zq_plus);
    c.b_plus = zq_minus - c.b0;
    c.b_minus = zq_plus - c.b0;
    return c;
}

std::array<double, 4> second_step_heteronuclear(const PolarizationParams& params,
                                                const SpectralDensitySet& J,
                                                double dt) {
    if (params.alpha != 0.0)
        throw std::invalid_argument("second_step_heteronuclear: alpha must be 0");
    const double dt2 = dt * dt;
    const double j2p = J.het_rate(Sym::Ep, 2), j2m = J.het_rate(Sym::Em, 2);
    const double j0p = J.het_rate(Sym::Ep, 0), j0m = J.het_rate(Sym::Em, 0);

    const auto d1 = first_step_heteronuclear(params, J, dt);
    const SecondStepConstants c = second_step_constants(params, J);

    PolarizationParams flipped = params;
    flipped.beta = -params.beta;
    const auto d1f = first_step_heteronuclear(flipped, J, dt);
    const SecondStepConstants cf = second_step_constants(flipped, J);

    std::array<double, 4> out{};
    // A,+3/2 rows from the constants; A,-3/2 rows by the beta -> -beta rule.
    out[0] = d1[up(kA32)] + dt2 * ((c.a0 + c.a_plus) * j2p + (c.a0 + c.a_minus) * j2m);
    out[1] = d1[down(kA32)] +
             dt2 / 6.0 * ((c.b0 + c.b_plus) * j0p + (c.b0 + c.b_minus) * j0m);
    out[2] = d1f[down(kA32)] +
             dt2 / 6.0 * ((cf.b0 + cf.b_plus) * j0p + (cf.b0 + cf.b_minus) * j0m);
    out[3] = d1f[up(kA32)] + dt2 * ((cf.a0 + cf.a_plus) * j2p + (cf.a0 + cf.a_minus) * j2m);
    return out;
}

std::array<double, kLevels> first_step_homonuclear(const PolarizationParams& params,
                                                   const SpectralDensitySet& g,
                                                   double dt) {
    g.validate();
    const auto q0 = seed_populations_proton(params.gamma, params.beta);
    std::array<double, kLevels> delta{};
    for (int li = 0; li < 2; ++li) {
        const Sym l = kELambdas[li];
        const double g1 = g.homo_rate(l, 1);
        const double g2 = g.homo_rate(l, 2);
        for (const Raise& r : kHomoSingle[li])
            accumulate_pair_flow8(delta, q0, r.dst, r.src, g1 * r.weight, dt);
        for (const Raise& r : kHomoDouble[li])
            accumulate_pair_flow8(delta, q0, r.dst, r.src, g2 * r.weight, dt);
    }
    const double zq = (g.homo_rate(Sym::Ep, 0) + g.homo_rate(Sym::Em, 0)) / 6.0;
    for (const Raise& r : kHomoFlipFlop)
        accumulate_pair_flow8(delta, q0, r.dst, r.src, zq * r.weight, dt);
    return delta;
}

} // namespace methyl
