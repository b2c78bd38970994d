// Rank-2 dipolar tensors and their symmetry-projected families.
//
// Symmetrized operators use the weights (1, eps^l*, eps^l) on sites or pairs
// (1, 2, 3); conjugating with the cyclic permutation multiplies such a
// combination by eps^l, so it shifts the symmetry label by +l. The scalar
// coefficients use the conjugate pattern, which is what makes
// sum_l B^l T^l reproduce sum_j B^j T^j.
#include "methylspin/dipolar.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace methyl {

namespace {

constexpr double kHbar = 1.054571817e-34;   // J s
constexpr double kMu0 = 1.25663706212e-6;   // T m / A
constexpr double kGammaProton = 2.6752218744e8;
constexpr double kGammaCarbon13 = 6.728284e7;

// Operator weight on element k (1-based) of a symmetry-projected sum.
cplx op_weight(Sym lambda, int k) {
    switch (k) {
        case 1: return 1.0;
        case 2: return std::conj(eps_pow(lambda));
        case 3: return eps_pow(lambda);
    }
    throw std::invalid_argument("op_weight: bad element");
}

ComplexMatrix single_spin(int p) {
    switch (p) {
        case +1: return sigma_plus();
        case 0: return spin_z();
        case -1: return sigma_minus();
    }
    throw std::invalid_argument("single_spin: p must be -1, 0 or +1");
}

// Table coefficient of T_(q,p) relative to S_p (x) I_(q-p). The q = +1
// entries inherit the minus sign of T_+1 so that sum_p T_(q,p) = T_q.
double qp_coefficient(int q, int p) {
    if (q == 0) return p == 0 ? std::sqrt(8.0 / 3.0) : -1.0 / std::sqrt(6.0);
    if (q == 1) return -1.0;
    return 1.0; // q = -1, +-2
}

struct PairList {
    int first[3] = {1, 2, 3};
    int second[3] = {2, 3, 1};
};

ComplexMatrix site_op(int site, const ComplexMatrix& op2) { return embed_single(op2, site, 3); }

// Two-site tensor on the 8-dim proton space with S on site i, I on site j.
ComplexMatrix pair_tensor_product(int q, int i, int j) {
    auto prod = [&](const ComplexMatrix& a, const ComplexMatrix& b) {
        return site_op(i, a) * site_op(j, b);
    };
    const ComplexMatrix sz = spin_z(), sp = sigma_plus(), sm = sigma_minus();
    switch (q) {
        case 0: {
            ComplexMatrix sdots = prod(sz, sz) + 0.5 * (prod(sp, sm) + prod(sm, sp));
            return std::sqrt(2.0 / 3.0) * (3.0 * prod(sz, sz) - sdots);
        }
        case +1: return -1.0 * (prod(sz, sp) + prod(sp, sz));
        case -1: return prod(sz, sm) + prod(sm, sz);
        case +2: return prod(sp, sp);
        case -2: return prod(sm, sm);
    }
    throw std::invalid_argument("pair_tensor: q must be in -2..2");
}

ComplexMatrix maybe_sym(const ComplexMatrix& m, bool symmetry_basis) {
    return symmetry_basis ? to_symmetry_basis(m) : m;
}

} // namespace

PhysicalConstants PhysicalConstants::make(double gamma_S, double gamma_I) {
    PhysicalConstants c{};
    c.hbar = kHbar;
    c.mu0 = kMu0;
    c.gamma_S = gamma_S;
    c.gamma_I = gamma_I;
    const double pre = c.hbar * c.mu0 / (4.0 * std::numbers::pi);
    c.c0 = -pre * gamma_I * gamma_S;
    c.c1 = -pre * gamma_I * gamma_I;
    return c;
}

PhysicalConstants PhysicalConstants::proton_carbon13() {
    return make(kGammaProton, kGammaCarbon13);
}

ComplexMatrix two_spin_tensor(int q) {
    const ComplexMatrix sz = kron(spin_z(), ComplexMatrix::identity(2));
    const ComplexMatrix iz = kron(ComplexMatrix::identity(2), spin_z());
    const ComplexMatrix sp = kron(sigma_plus(), ComplexMatrix::identity(2));
    const ComplexMatrix sm = kron(sigma_minus(), ComplexMatrix::identity(2));
    const ComplexMatrix ip = kron(ComplexMatrix::identity(2), sigma_plus());
    const ComplexMatrix im = kron(ComplexMatrix::identity(2), sigma_minus());
    switch (q) {
        case 0: {
            ComplexMatrix sdoti = sz * iz + 0.5 * (sp * im + sm * ip);
            return std::sqrt(2.0 / 3.0) * (3.0 * (sz * iz) - sdoti);
        }
        case +1: return -1.0 * (sz * ip + sp * iz);
        case -1: return sz * im + sm * iz;
        case +2: return sp * ip;
        case -2: return sm * im;
    }
    throw std::invalid_argument("two_spin_tensor: q must be in -2..2");
}

bool valid_tensor_qp(int q, int p) {
    if (q == 0) return p == -1 || p == 0 || p == 1;
    if (q == 1) return p == 1 || p == 0;
    if (q == -1) return p == -1 || p == 0;
    if (q == 2) return p == 1;
    if (q == -2) return p == -1;
    return false;
}

TensorComponent tensor_qp(int q, int p, const FrequencyParams& freqs) {
    if (!valid_tensor_qp(q, p)) throw std::invalid_argument("tensor_qp: invalid (q, p) pair");
    TensorComponent t;
    t.q = q;
    t.p = p;
    t.op = qp_coefficient(q, p) * kron(single_spin(p), single_spin(q - p));
    t.frequency = p * freqs.omega_S + (q - p) * freqs.omega_I;
    return t;
}

double spatial_F(int q, double r, double theta) {
    if (r <= 0.0) throw std::invalid_argument("spatial_F: r must be > 0");
    const double r3 = r * r * r;
    const double c = std::cos(theta), s = std::sin(theta);
    switch (q) {
        case 0: return std::sqrt(1.5) * (3.0 * c * c - 1.0) / (2.0 * r3);
        case +1: return -1.5 * s * c / r3;
        case -1: return +1.5 * s * c / r3;
        case +2:
        case -2: return 0.75 * s * s / r3;
    }
    throw std::invalid_argument("spatial_F: q must be in -2..2");
}

cplx coupling_B(int q, const SphericalCoordinate& coord, const PhysicalConstants& constants) {
    const double f = spatial_F(q, coord.r, coord.theta);
    const cplx phase = std::exp(cplx(0.0, -q * coord.phi));
    return constants.c0 * phase * f;
}

cplx sym_coefficient(Sym lambda, cplx b1, cplx b2, cplx b3) {
    const cplx w = eps_pow(lambda);
    return (b1 + w * b2 + std::conj(w) * b3) / std::sqrt(3.0);
}

ComplexMatrix sym_collective_spin(Sym lambda, int p, bool symmetry_basis) {
    const ComplexMatrix op2 = single_spin(p);
    ComplexMatrix s = ComplexMatrix::zero(kLevels);
    for (int site = 1; site <= 3; ++site)
        s = s + op_weight(lambda, site) * site_op(site, op2);
    s = (1.0 / std::sqrt(3.0)) * s;
    return maybe_sym(s, symmetry_basis);
}

ComplexMatrix het_site_tensor(int j, int q, int p, bool symmetry_basis) {
    if (j < 1 || j > 3) throw std::invalid_argument("het_site_tensor: j must be in 1..3");
    if (!valid_tensor_qp(q, p)) throw std::invalid_argument("het_site_tensor: invalid (q, p)");
    ComplexMatrix proton = qp_coefficient(q, p) * site_op(j, single_spin(p));
    return kron(single_spin(q - p), maybe_sym(proton, symmetry_basis));
}

ComplexMatrix het_symmetrized(Sym lambda, int q, int p, bool symmetry_basis) {
    if (!valid_tensor_qp(q, p)) throw std::invalid_argument("het_symmetrized: invalid (q, p)");
    ComplexMatrix proton = ComplexMatrix::zero(kLevels);
    const ComplexMatrix op2 = single_spin(p);
    for (int site = 1; site <= 3; ++site)
        proton = proton + op_weight(lambda, site) * site_op(site, op2);
    proton = (qp_coefficient(q, p) / std::sqrt(3.0)) * proton;
    return kron(single_spin(q - p), maybe_sym(proton, symmetry_basis));
}

ComplexMatrix pair_tensor(int q, int i, int j, bool symmetry_basis) {
    if (i < 1 || i > 3 || j < 1 || j > 3 || i == j)
        throw std::invalid_argument("pair_tensor: need distinct sites in 1..3");
    return maybe_sym(pair_tensor_product(q, i, j), symmetry_basis);
}

ComplexMatrix homo_symmetrized(Sym lambda, int q, bool symmetry_basis) {
    const PairList pairs;
    ComplexMatrix t = ComplexMatrix::zero(kLevels);
    for (int k = 0; k < 3; ++k)
        t = t + op_weight(lambda, k + 1) * pair_tensor_product(q, pairs.first[k], pairs.second[k]);
    t = (1.0 / std::sqrt(3.0)) * t;
    return maybe_sym(t, symmetry_basis);
}

ComplexMatrix homo_flip_flop(Sym lambda, bool symmetry_basis) {
    const PairList pairs;
    const ComplexMatrix sp = sigma_plus(), sm = sigma_minus();
    ComplexMatrix t = ComplexMatrix::zero(kLevels);
    for (int k = 0; k < 3; ++k) {
        const int i = pairs.first[k], j = pairs.second[k];
        ComplexMatrix ff = site_op(i, sp) * site_op(j, sm) + site_op(i, sm) * site_op(j, sp);
        t = t + op_weight(lambda, k + 1) * ff;
    }
    t = (1.0 / std::sqrt(3.0)) * t;
    return maybe_sym(t, symmetry_basis);
}

} // namespace methyl
