// Lindblad dissipators for dipolar relaxation, a dense master-equation
// integrator, the classical rate-equation reduction, and the closed-form
// short-time solutions.
#ifndef METHYLSPIN_MASTER_HPP
#define METHYLSPIN_MASTER_HPP

#include <array>
#include <vector>

#include "methylspin/basis.hpp"
#include "methylspin/dipolar.hpp"
#include "methylspin/spinalg.hpp"

namespace methyl {

// User-supplied dissipator rates, all >= 0 (1/s). Heteronuclear J^l_q are
// understood at the transition frequencies (q=0 at w_S - w_I, q=2 at
// w_S + w_I, q=1 serving both w_S and w_I lines); homonuclear g^l_q at
// q w_S. One stored value covers both members of each (l,q)/(-l,-q)
// Lindblad pair, which encodes the classical-noise symmetry structurally.
struct SpectralDensitySet {
    // index [sym_index(lambda)][q], lambda in {A, E+, E-}, q in {0,1,2}
    double het[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    double homo[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};

    double het_rate(Sym lambda, int q) const;
    double homo_rate(Sym lambda, int q) const;
    void set_het(Sym lambda, int q, double value);
    void set_homo(Sym lambda, int q, double value);
    double max_rate() const;
    void validate() const; // throws std::invalid_argument on a negative rate
};

struct LindbladTerm {
    double rate = 0.0; // 1/s, >= 0
    ComplexMatrix op;
};

// rate * (L rho L^dag - (1/2){L^dag L, rho}); traceless for any rho.
ComplexMatrix dissipator(const LindbladTerm& term, const ComplexMatrix& rho);

struct HetGeneratorOptions {
    bool include_sq = false;        // single-quantum terms
    bool include_symmetric = false; // lambda = A terms
};

// ZQ/DQ (and optionally SQ) dissipators of the proton-test dipolar coupling,
// acting on the 16-dim space in the symmetry level basis. ZQ carries
// (1/6) J^l_0, DQ carries J^l_2, SQ carries J^l_1 on both of its lines.
// Zero-rate terms are omitted.
std::vector<LindbladTerm> het_generator(const SpectralDensitySet& J,
                                        HetGeneratorOptions options = {});

// ZQ/DQ/SQ dissipators of the proton-proton dipolar coupling (8-dim,
// symmetry level basis); ZQ uses the bare flip-flop operators at
// (1/6) g^l_0, DQ g^l_2, SQ g^l_1.
std::vector<LindbladTerm> homo_generator(const SpectralDensitySet& g);

// Fixed-step 4th-order integration of d rho/dt = sum_k D_k[rho] from 0 to t.
// dt is a step-size hint; the actual step divides t exactly. rho0 must be
// Hermitian with unit trace.
ComplexMatrix lindblad_propagate(const ComplexMatrix& rho0,
                                 const std::vector<LindbladTerm>& terms,
                                 double t, double dt);

struct RateMatrix {
    int dim = 0;
    std::vector<double> w; // row-major, symmetric, zero diagonal

    double& at(int x, int y) { return w[static_cast<size_t>(x) * dim + y]; }
    const double& at(int x, int y) const { return w[static_cast<size_t>(x) * dim + y]; }
    double max_row_sum() const;
};

// W_xy = sum_terms rate |<x|L|y>|^2 for x != y; the paired structure of the
// generators makes W symmetric.
RateMatrix rate_matrix(const std::vector<LindbladTerm>& terms, int dim);

// Lift an 8-dim proton rate matrix to the 16-dim space (test spin untouched).
RateMatrix lift_to_test_space(const RateMatrix& w8);

using PopulationVector = std::vector<double>;

// Explicit Euler trajectory of dp_x/dt = sum_y W_xy (p_y - p_x); returns
// steps+1 vectors including p0. Requires p0 on the probability simplex and
// dt * max_row_sum(W) < 1.
std::vector<PopulationVector> rate_propagate(const PopulationVector& p0,
                                             const RateMatrix& w, double dt, int steps);

void euler_step_in_place(PopulationVector& p, const RateMatrix& w, double dt);

// Initial populations. q0 entries depend only on the symmetry label:
// A levels (1+gamma)/8, E+ levels (1-gamma)(1+beta)/8, E- (1-gamma)(1-beta)/8.
std::array<double, kLevels> seed_populations_proton(double gamma, double beta);
// 16-level seed: q0 (x) ((1+alpha)/2, (1-alpha)/2), test spin slowest.
std::array<double, kLevels16> seed_populations(const PolarizationParams& params);
// Thermal seed (1 + alpha_proton S_z)/8 (x) (1 + alpha I_z)/2 as populations.
std::array<double, kLevels16> thermal_populations(double alpha_proton, double alpha);

// Level-population imbalances of the protected seed. c_plus/c_minus/c_2 are
// in q0 units (differences of the 8-level q0 entries); the alpha-augmented
// differences are also in q0 units, i.e. twice the 16-level population
// differences.
struct ImbalanceSeeds {
    double c_plus;  // q0[A] - q0[E+] = gamma/4 - beta(1-gamma)/8
    double c_minus; // q0[A] - q0[E-] = gamma/4 + beta(1-gamma)/8
    double c_2;     // c_minus - c_plus = beta(1-gamma)/4
    // [A,m,up]-[E+,m',down], [A,m,down]-[E+,m',up],
    // [A,m,up]-[E-,m',down], [A,m,down]-[E-,m',up]
    std::array<double, 4> augmented;
    // [E+,m',up]-[E-,m',down], [E+,m',down]-[E-,m',up]
    std::array<double, 2> augmented_e;
};
ImbalanceSeeds seeds(const PolarizationParams& params);

// Closed-form population changes over one Euler step of the default
// (ZQ + DQ) heteronuclear generator, from the protected seed; exact match
// to rate_propagate by construction of the transition table. 16 entries.
std::array<double, kLevels16> first_step_heteronuclear(const PolarizationParams& params,
                                                       const SpectralDensitySet& J,
                                                       double dt);

// Constants of the second-step closed form, split so that
//   D2[A,+3/2,up]  = D1 + dt^2 ((a0+a_plus) J2+ + (a0+a_minus) J2-)
//   D2[A,+3/2,dn]  = D1 + dt^2/6 ((b0+b_plus) J0+ + (b0+b_minus) J0-)
// and the m = -3/2 rows follow by the beta -> -beta substitution.
struct SecondStepConstants {
    double a0, a_plus, a_minus;
    double b0, b_plus, b_minus;
};
SecondStepConstants second_step_constants(const PolarizationParams& params,
                                          const SpectralDensitySet& J);

// Second-step changes Delta[x]_2 for the four m = +-3/2 levels, ordered
// [A,3/2,up; A,3/2,down; A,-3/2,up; A,-3/2,down]. alpha must be 0.
std::array<double, 4> second_step_heteronuclear(const PolarizationParams& params,
                                                const SpectralDensitySet& J,
                                                double dt);

// Closed-form first Euler step of the homonuclear generator from the
// protected seed (8 entries), including the flip-flop (g0) terms.
std::array<double, kLevels> first_step_homonuclear(const PolarizationParams& params,
                                                   const SpectralDensitySet& g,
                                                   double dt);

} // namespace methyl

#endif
