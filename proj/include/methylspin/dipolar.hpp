// Irreducible rank-2 dipolar tensors, their spatial coefficients, and the
// symmetry-adapted heteronuclear / homonuclear operator families.
#ifndef METHYLSPIN_DIPOLAR_HPP
#define METHYLSPIN_DIPOLAR_HPP

#include "methylspin/basis.hpp"
#include "methylspin/spinalg.hpp"

namespace methyl {

struct PhysicalConstants {
    double hbar;    // J s
    double mu0;     // T m / A
    double gamma_S; // rad/(s T), proton
    double gamma_I; // rad/(s T), test spin
    double c0;      // -hbar mu0 gamma_I gamma_S / (4 pi)
    double c1;      // -hbar mu0 gamma_I^2 / (4 pi)

    // c0 and c1 are always derived from the other fields.
    static PhysicalConstants make(double gamma_S, double gamma_I);
    static PhysicalConstants proton_carbon13();
};

struct SphericalCoordinate {
    double r;     // m, > 0
    double theta; // rad
    double phi;   // rad
};

struct FrequencyParams {
    double omega_S = 0.0; // rad/s, proton Larmor
    double omega_I = 0.0; // rad/s, test-spin Larmor
};

struct TensorComponent {
    int q = 0;
    int p = 0;
    ComplexMatrix op;       // 4x4, two-spin space S (x) I
    double frequency = 0.0; // p omega_S + (q - p) omega_I
};

// Normalized two-spin rank-2 tensor T_q on S (x) I (4x4), q in -2..2:
//   T_0   = sqrt(2/3) (3 S_z I_z - S.I)
//   T_+-1 = -+ (S_z I_+- + S_+- I_z)
//   T_+-2 = S_+- I_+-
ComplexMatrix two_spin_tensor(int q);

bool valid_tensor_qp(int q, int p);

// Zeeman-resolved component T_(q,p) proportional to S_p (x) I_(q-p); the
// q = +-1 entries keep the sign of T_+-1 so that sum_p T_(q,p) = T_q.
TensorComponent tensor_qp(int q, int p, const FrequencyParams& freqs);

// Spatial functions F_q(r, theta); F_{-q} = (-1)^q F_q. r > 0.
double spatial_F(int q, double r, double theta);

// B_q = c0 exp(-i q phi) F_q(r, theta).
cplx coupling_B(int q, const SphericalCoordinate& coord, const PhysicalConstants& constants);

// Symmetry-projected scalar coefficient (1/sqrt(3))(b1 + eps^l b2 + eps^l* b3).
// The same formula serves the homonuclear G^l with pair couplings as inputs.
cplx sym_coefficient(Sym lambda, cplx b1, cplx b2, cplx b3);

// Collective symmetrized single-spin operator
//   S^l_p = (1/sqrt(3)) (S^1_p + eps^l* S^2_p + eps^l S^3_p),  p in {-1,0,+1},
// which maps |s, m> -> |s + l, m + p|. 8x8.
ComplexMatrix sym_collective_spin(Sym lambda, int p, bool symmetry_basis = true);

// Single-site heteronuclear component T^j_(q,p) on protons (x) test spin,
// 16x16, test spin slowest. j in 1..3.
ComplexMatrix het_site_tensor(int j, int q, int p, bool symmetry_basis = true);

// Symmetrized heteronuclear component T^l_(q,p) (16x16), equal to the
// Table coefficient times S^l_p (x) I_(q-p).
ComplexMatrix het_symmetrized(Sym lambda, int q, int p, bool symmetry_basis = true);

// Proton pair tensor T^(i,j)_q on the 8-dim proton space. Pairs (1,2),(2,3),(3,1).
ComplexMatrix pair_tensor(int q, int i, int j, bool symmetry_basis = true);

// Symmetrized homonuclear tensor
//   T^l_q = (1/sqrt(3)) (T^(1,2)_q + eps^l* T^(2,3)_q + eps^l T^(3,1)_q). 8x8.
ComplexMatrix homo_symmetrized(Sym lambda, int q, bool symmetry_basis = true);

// Symmetrized bare flip-flop operator
//   (1/sqrt(3)) sum_pairs w (S^i_+ S^j_- + S^i_- S^j_+),
// the q = 0 homonuclear Lindblad operator; the sigma_z sigma_z part of T^l_0
// shifts energies and is excluded from transition generators.
ComplexMatrix homo_flip_flop(Sym lambda, bool symmetry_basis = true);

} // namespace methyl

#endif
