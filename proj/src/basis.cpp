// Symmetry-adapted basis of three protons and the protected states built on it.
#include "methylspin/basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace methyl {

namespace {

constexpr int kA32 = 0, kA12 = 1, kAm12 = 2, kAm32 = 3;
constexpr int kEp12 = 4, kEpm12 = 5, kEm12 = 6, kEmm12 = 7;

const Sym kLevelSym[kLevels] = {Sym::A,  Sym::A,  Sym::A,  Sym::A,
                                Sym::Ep, Sym::Ep, Sym::Em, Sym::Em};
const int kLevelTwiceM[kLevels] = {3, 1, -1, -3, 1, -1, 1, -1};
const char* kLevelNames[kLevels] = {"A+3/2", "A+1/2", "A-1/2", "A-3/2",
                                    "E++1/2", "E+-1/2", "E-+1/2", "E--1/2"};

// Product-basis indices of the m = +1/2 component states, site 1 most
// significant, 0 = up: |up up down> = 1, |down up up> = 4, |up down up> = 2.
constexpr int kT1 = 1, kT2 = 4, kT3 = 2;

StateVector flipped(const StateVector& v) {
    StateVector r(v.dim());
    for (int i = 0; i < v.dim(); ++i) r.amp[v.dim() - 1 - i] = v.amp[i];
    return r;
}

} // namespace

Sym sym_add(Sym a, Sym b) {
    int r = (static_cast<int>(a) + static_cast<int>(b) + 3) % 3;
    return r == 2 ? Sym::Em : static_cast<Sym>(r);
}

Sym sym_neg(Sym a) { return static_cast<Sym>(-static_cast<int>(a)); }

int sym_index(Sym s) {
    switch (s) {
        case Sym::A: return 0;
        case Sym::Ep: return 1;
        case Sym::Em: return 2;
    }
    throw std::invalid_argument("sym_index: bad label");
}

cplx epsilon() {
    const double t = 2.0 * std::numbers::pi / 3.0;
    return {std::cos(t), std::sin(t)};
}

cplx eps_pow(Sym lambda) {
    switch (lambda) {
        case Sym::A: return 1.0;
        case Sym::Ep: return epsilon();
        case Sym::Em: return std::conj(epsilon());
    }
    throw std::invalid_argument("eps_pow: bad label");
}

Sym level_sym(int level) { return kLevelSym[level]; }
int level_twice_m(int level) { return kLevelTwiceM[level]; }
const char* level_name(int level) { return kLevelNames[level]; }

LevelIndex level_index(int index16) {
    const int level = index16 % kLevels;
    return {level_sym(level), level_twice_m(level), index16 / kLevels};
}

std::array<StateVector, kLevels> symmetry_states() {
    const cplx e = epsilon();
    const double w = 1.0 / std::sqrt(3.0);
    std::array<StateVector, kLevels> s;
    for (auto& v : s) v = StateVector(kLevels);

    s[kA32].amp[0] = 1.0; // |up up up>

    s[kA12].amp[kT1] = w;
    s[kA12].amp[kT2] = w;
    s[kA12].amp[kT3] = w;

    s[kEp12].amp[kT1] = w;
    s[kEp12].amp[kT2] = w * std::conj(e);
    s[kEp12].amp[kT3] = w * e;

    s[kEm12].amp[kT1] = w;
    s[kEm12].amp[kT2] = w * e;
    s[kEm12].amp[kT3] = w * std::conj(e);

    s[kAm32] = flipped(s[kA32]);
    s[kAm12] = flipped(s[kA12]);
    s[kEpm12] = flipped(s[kEp12]);
    s[kEmm12] = flipped(s[kEm12]);
    return s;
}

ComplexMatrix symmetry_transform() {
    const auto states = symmetry_states();
    ComplexMatrix u(kLevels);
    for (int level = 0; level < kLevels; ++level)
        for (int prod = 0; prod < kLevels; ++prod) u.at(prod, level) = states[level].amp[prod];
    return u;
}

ComplexMatrix to_symmetry_basis(const ComplexMatrix& m) {
    ComplexMatrix u = symmetry_transform();
    if (m.dim == kLevels16) u = kron(ComplexMatrix::identity(2), u);
    if (m.dim != u.dim) throw std::invalid_argument("to_symmetry_basis: need dim 8 or 16");
    return adjoint(u) * m * u;
}

ComplexMatrix cyclic_permutation() {
    ComplexMatrix p(kLevels);
    for (int old = 0; old < kLevels; ++old) {
        const int a = (old >> 2) & 1, b = (old >> 1) & 1, c = old & 1;
        p.at((c << 2) | (a << 1) | b, old) = 1.0;
    }
    return p;
}

std::array<ComplexMatrix, 3> base_projectors() {
    const auto states = symmetry_states();
    ComplexMatrix rho_a = ComplexMatrix::zero(kLevels);
    for (int l = kA32; l <= kAm32; ++l) rho_a = rho_a + outer(states[l], states[l]);
    rho_a = 0.25 * rho_a;

    ComplexMatrix rho_ep = 0.5 * (outer(states[kEp12], states[kEp12]) +
                                  outer(states[kEpm12], states[kEpm12]));
    ComplexMatrix rho_em = 0.5 * (outer(states[kEm12], states[kEm12]) +
                                  outer(states[kEmm12], states[kEmm12]));
    return {rho_a, rho_ep, rho_em};
}

ComplexMatrix q_lls(double gamma) {
    if (std::abs(gamma) > 1.0) throw std::invalid_argument("q_lls: |gamma| must be <= 1");
    return q_protected(gamma, 0.0);
}

ComplexMatrix q_protected(double gamma, double beta) {
    if (std::abs(gamma) > 1.0) throw std::invalid_argument("q_protected: |gamma| must be <= 1");
    if (std::abs(beta) > 1.0) throw std::invalid_argument("q_protected: |beta| must be <= 1");
    const auto rho = base_projectors();
    const double we = 0.5 * (1.0 - gamma);
    return 0.5 * (1.0 + gamma) * rho[0] + we * 0.5 * (1.0 + beta) * rho[1] +
           we * 0.5 * (1.0 - beta) * rho[2];
}

ComplexMatrix magnetization_projector(int twice_m) {
    if (twice_m != 3 && twice_m != 1 && twice_m != -1 && twice_m != -3)
        throw std::invalid_argument("magnetization_projector: 2m must be one of +-3, +-1");
    const auto states = symmetry_states();
    ComplexMatrix p = ComplexMatrix::zero(kLevels);
    for (int l = 0; l < kLevels; ++l)
        if (level_twice_m(l) == twice_m) p = p + outer(states[l], states[l]);
    return p;
}

ComplexMatrix collective_spin(char axis) {
    ComplexMatrix sigma(2);
    switch (axis) {
        case 'x': sigma = pauli_x(); break;
        case 'y': sigma = pauli_y(); break;
        case 'z': sigma = pauli_z(); break;
        default: throw std::invalid_argument("collective_spin: axis must be x, y or z");
    }
    ComplexMatrix s = ComplexMatrix::zero(kLevels);
    for (int site = 1; site <= 3; ++site) s = s + embed_single(sigma, site, 3);
    return 0.5 * s;
}

} // namespace methyl
