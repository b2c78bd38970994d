#include "doctest.h"

#include <stdexcept>

#include "methylspin/spinalg.hpp"
#include "support.hpp"

using namespace methyl;

TEST_CASE("kron identity and diagonal expansion") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK(max_abs_diff(kron(i2, i2), ComplexMatrix::identity(4)) == 0.0);

    const ComplexMatrix zi = kron(pauli_z(), i2);
    for (int i = 0; i < 4; ++i) {
        const double expected = i < 2 ? 1.0 : -1.0;
        CHECK(zi.at(i, i) == cplx(expected, 0.0));
    }
}

TEST_CASE("kron of ladder operators has a single entry at (1, 2)") {
    const ComplexMatrix m = kron(sigma_plus(), sigma_minus());
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            CHECK(m.at(r, c) == (r == 1 && c == 2 ? cplx(1.0) : cplx(0.0)));
}

TEST_CASE("kron is associative on integer matrices") {
    testing::Rng rng(11);
    for (int rep = 0; rep < 10; ++rep) {
        const ComplexMatrix a = rng.integer_matrix(2, -3, 3);
        const ComplexMatrix b = rng.integer_matrix(2, -3, 3);
        const ComplexMatrix c = rng.integer_matrix(2, -3, 3);
        CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) == 0.0);
    }
}

TEST_CASE("embed_single places the operator at the requested site") {
    // site 1 is the most significant bit of the product index
    const ComplexMatrix z1 = embed_single(pauli_z(), 1, 3);
    CHECK(z1.at(0, 0) == cplx(1.0)); // |up up up>
    const ComplexMatrix z3 = embed_single(pauli_z(), 3, 3);
    CHECK(z3.at(1, 1) == cplx(-1.0)); // |up up down>

    CHECK_THROWS_AS(embed_single(pauli_z(), 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(embed_single(pauli_z(), 4, 3), std::invalid_argument);
}

TEST_CASE("total z spin of three spins has the ladder spectrum") {
    ComplexMatrix sz = ComplexMatrix::zero(8);
    for (int site = 1; site <= 3; ++site) sz = sz + embed_single(spin_z(), site, 3);
    const auto eig = testing::hermitian_eigenvalues(sz);
    const double expected[8] = {-1.5, -0.5, -0.5, -0.5, 0.5, 0.5, 0.5, 1.5};
    for (int i = 0; i < 8; ++i) CHECK(eig[i] == doctest::Approx(expected[i]).epsilon(1e-12));
}

TEST_CASE("adjoint basics") {
    CHECK(max_abs_diff(adjoint(ComplexMatrix::identity(4)), ComplexMatrix::identity(4)) == 0.0);
    CHECK(max_abs_diff(adjoint(sigma_plus()), sigma_minus()) == 0.0);

    testing::Rng rng(12);
    for (int rep = 0; rep < 10; ++rep) {
        const ComplexMatrix a = rng.matrix(8, 2.0);
        CHECK(max_abs_diff(adjoint(adjoint(a)), a) == 0.0);
    }
}

TEST_CASE("commutator identities") {
    testing::Rng rng(13);
    const ComplexMatrix x = rng.matrix(4, 1.0);
    CHECK(max_abs(commutator(ComplexMatrix::identity(4), x)) == 0.0);
    CHECK(max_abs(commutator(x, x)) == 0.0);
    CHECK(max_abs_diff(commutator(spin_z(), sigma_plus()), sigma_plus()) < 1e-15);
    CHECK_THROWS_AS(commutator(rng.matrix(2, 1.0), rng.matrix(4, 1.0)), std::invalid_argument);
}

TEST_CASE("Hilbert-Schmidt inner product") {
    const ComplexMatrix half = (1.0 / std::sqrt(2.0)) * ComplexMatrix::identity(2);
    CHECK(std::abs(hs_inner(half, half) - cplx(1.0)) < 1e-15);
    CHECK_THROWS_AS(hs_inner(ComplexMatrix::identity(2), ComplexMatrix::identity(4)),
                    std::invalid_argument);

    testing::Rng rng(14);
    for (int rep = 0; rep < 20; ++rep) {
        const ComplexMatrix a = rng.matrix(8, 3.0);
        const cplx v = hs_inner(a, a);
        CHECK(std::abs(v.imag()) < 1e-12 * std::abs(v.real() + 1.0));
        CHECK(v.real() >= -1e-12);
    }
}

TEST_CASE("basis states are normalized") {
    StateVector v(4);
    v.amp[2] = 1.0;
    CHECK(norm(v) == doctest::Approx(1.0).epsilon(1e-12));
}
