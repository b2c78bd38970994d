// Symmetry-adapted eigenbasis of three equivalent protons: the |s, m> states,
// the cyclic permutation operator, base projectors and protected states.
#ifndef METHYLSPIN_BASIS_HPP
#define METHYLSPIN_BASIS_HPP

#include <array>

#include "methylspin/spinalg.hpp"

namespace methyl {

// Symmetry label of the C3 permutation group. Integer values add mod 3:
// A + Ep = Ep, Ep + Ep = Em, Ep + Em = A.
enum class Sym : int { A = 0, Ep = +1, Em = -1 };

Sym sym_add(Sym a, Sym b);
Sym sym_neg(Sym a);
int sym_index(Sym s); // A -> 0, Ep -> 1, Em -> 2

// epsilon = exp(i 2 pi / 3); eps_pow(lambda) = epsilon^lambda for lambda in {0,+1,-1}.
cplx epsilon();
cplx eps_pow(Sym lambda);

inline constexpr int kLevels = 8;    // proton levels |s, m>
inline constexpr int kLevels16 = 16; // proton levels (x) test spin, test spin slowest

// Fixed global level order:
//   0 A,+3/2   1 A,+1/2   2 A,-1/2   3 A,-3/2
//   4 Ep,+1/2  5 Ep,-1/2  6 Em,+1/2  7 Em,-1/2
// The 16-level order is [all 8 with test up, then all 8 with test down].
Sym level_sym(int level);
int level_twice_m(int level); // 2m in {3, 1, -1, -3}
const char* level_name(int level);

struct LevelIndex {
    Sym s;
    int twice_m;
    int test = -1; // -1 none, 0 up, 1 down
};
LevelIndex level_index(int index16);

struct PolarizationParams {
    double gamma = 0.0; // A vs E population imbalance
    double beta = 0.0;  // E+ vs E- population imbalance
    double alpha = 0.0; // test-spin polarization
};

// The eight eigenstates in the fixed level order, as amplitudes over the
// product basis (site 1 most significant, index 0 = up). The m<0 states are
// generated from the m>0 ones by the global spin flip Xic(x)X(x)X.
std::array<StateVector, kLevels> symmetry_states();

// Unitary whose columns are the symmetry states: U[product][level].
ComplexMatrix symmetry_transform();

// Conjugate an 8-dim (product basis) or 16-dim operator into the symmetry
// level basis. 16-dim operators must already order the test spin slowest.
ComplexMatrix to_symmetry_basis(const ComplexMatrix& m);

// Cyclic permutation P+ sending site content 1 -> 2 -> 3 -> 1. Under this
// direction the Ep states acquire the phase epsilon (checked by tests,
// not assumed).
ComplexMatrix cyclic_permutation();

// rho_A, rho_{E+}, rho_{E-}: unit-trace states fully polarized in the
// symmetry label, fully mixed in m. Product basis.
std::array<ComplexMatrix, 3> base_projectors();

// Q_LLS(gamma) = ((1+gamma)/2) rho_A + ((1-gamma)/2)(rho_{E+}+rho_{E-})/2.
// Equals (1/8)(1 + (gamma/3) sum_{i<j} sigma_i . sigma_j). |gamma| <= 1.
ComplexMatrix q_lls(double gamma);

// Q_Protected(gamma, beta); |gamma| <= 1, |beta| <= 1.
ComplexMatrix q_protected(double gamma, double beta);

// Projector onto the total-magnetization-m subspace; twice_m in {3,1,-1,-3}.
ComplexMatrix magnetization_projector(int twice_m);

// Collective spin S_alpha = (1/2) sum_i sigma_alpha^(i), axis in {'x','y','z'}.
ComplexMatrix collective_spin(char axis);

} // namespace methyl

#endif
