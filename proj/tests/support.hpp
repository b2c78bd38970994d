// Shared helpers for the test binaries: a deterministic RNG and a dense
// Hermitian eigensolver (cyclic Jacobi), test-only so the library itself
// carries no eigensolver.
#ifndef METHYLSPIN_TESTS_SUPPORT_HPP
#define METHYLSPIN_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "methylspin/spinalg.hpp"

namespace testing {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(eng);
    }
    methyl::cplx complex_uniform(double scale) {
        return {uniform(-scale, scale), uniform(-scale, scale)};
    }
    methyl::ComplexMatrix matrix(int dim, double scale) {
        methyl::ComplexMatrix m(dim);
        for (auto& v : m.a) v = complex_uniform(scale);
        return m;
    }
    methyl::ComplexMatrix hermitian(int dim, double scale) {
        methyl::ComplexMatrix m = matrix(dim, scale);
        return 0.5 * (m + methyl::adjoint(m));
    }
    methyl::ComplexMatrix integer_matrix(int dim, int lo, int hi) {
        methyl::ComplexMatrix m(dim);
        std::uniform_int_distribution<int> d(lo, hi);
        for (auto& v : m.a) v = static_cast<double>(d(eng));
        return m;
    }
};

// Eigenvalues of a Hermitian matrix, ascending. Cyclic Jacobi on the real
// embedding is overkill here; dims <= 16 make the complex Jacobi below fine.
inline std::vector<double> hermitian_eigenvalues(methyl::ComplexMatrix m) {
    const int n = m.dim;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(m.at(p, q)));
        if (off < 1e-14) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const methyl::cplx apq = m.at(p, q);
                if (std::abs(apq) < 1e-18) continue;
                const double app = m.at(p, p).real();
                const double aqq = m.at(q, q).real();
                // phase rotation to make the pivot real, then a Givens rotation
                const methyl::cplx phase = apq / std::abs(apq);
                const double g = std::abs(apq);
                const double theta = 0.5 * std::atan2(2.0 * g, aqq - app);
                const double c = std::cos(theta), s = std::sin(theta);
                // columns
                for (int k = 0; k < n; ++k) {
                    const methyl::cplx mkp = m.at(k, p), mkq = m.at(k, q);
                    m.at(k, p) = c * mkp - s * std::conj(phase) * mkq;
                    m.at(k, q) = s * phase * mkp + c * mkq;
                }
                // rows
                for (int k = 0; k < n; ++k) {
                    const methyl::cplx mpk = m.at(p, k), mqk = m.at(q, k);
                    m.at(p, k) = c * mpk - s * phase * mqk;
                    m.at(q, k) = s * std::conj(phase) * mpk + c * mqk;
                }
            }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = m.at(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

} // namespace testing

#endif
