// Dense complex linear algebra for small spin Hilbert spaces (dim <= 16).
#ifndef METHYLSPIN_SPINALG_HPP
#define METHYLSPIN_SPINALG_HPP

#include <complex>
#include <vector>

namespace methyl {

using cplx = std::complex<double>;

// Square complex matrix, row-major. Values are immutable once built by the
// constructors below; all free functions are pure, so concurrent use on
// shared read-only data is safe.
struct ComplexMatrix {
    int dim = 0;
    std::vector<cplx> a;

    ComplexMatrix() = default;
    explicit ComplexMatrix(int d) : dim(d), a(static_cast<size_t>(d) * d) {}

    cplx& at(int r, int c) { return a[static_cast<size_t>(r) * dim + c]; }
    const cplx& at(int r, int c) const { return a[static_cast<size_t>(r) * dim + c]; }

    static ComplexMatrix zero(int d);
    static ComplexMatrix identity(int d);
};

struct StateVector {
    std::vector<cplx> amp;

    StateVector() = default;
    explicit StateVector(int d) : amp(static_cast<size_t>(d)) {}
    int dim() const { return static_cast<int>(amp.size()); }
};

ComplexMatrix operator+(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix operator*(cplx s, const ComplexMatrix& x);
ComplexMatrix operator*(double s, const ComplexMatrix& x);

// Kronecker product; the first factor is the slow (most significant) index.
ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y);

// I (x) ... (x) op (x) ... (x) I with `op` (2x2) at position `site` in 1..n,
// site 1 most significant. Throws std::invalid_argument on a bad site.
ComplexMatrix embed_single(const ComplexMatrix& op, int site, int n);

ComplexMatrix adjoint(const ComplexMatrix& x);
ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix anticommutator(const ComplexMatrix& x, const ComplexMatrix& y);

// Hilbert-Schmidt inner product Tr[x^dag y].
cplx hs_inner(const ComplexMatrix& x, const ComplexMatrix& y);
cplx trace(const ComplexMatrix& x);

double max_abs(const ComplexMatrix& x);
double max_abs_diff(const ComplexMatrix& x, const ComplexMatrix& y);
bool is_hermitian(const ComplexMatrix& x, double tol);

cplx inner(const StateVector& x, const StateVector& y);
double norm(const StateVector& x);
StateVector apply(const ComplexMatrix& m, const StateVector& v);
ComplexMatrix outer(const StateVector& x, const StateVector& y);

// Single spin-1/2 operators. Basis index 0 = up (aligned with the field).
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix sigma_plus();   // |up><down|
ComplexMatrix sigma_minus();  // |down><up|
ComplexMatrix spin_z();       // sigma_z / 2

} // namespace methyl

#endif
