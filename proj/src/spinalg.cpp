#include "methylspin/spinalg.hpp"

#include <cmath>
#include <stdexcept>

namespace methyl {

ComplexMatrix ComplexMatrix::zero(int d) { return ComplexMatrix(d); }

ComplexMatrix ComplexMatrix::identity(int d) {
    ComplexMatrix m(d);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1.0;
    return m;
}

static void require_same_dim(const ComplexMatrix& x, const ComplexMatrix& y, const char* who) {
    if (x.dim != y.dim)
        throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

ComplexMatrix operator+(const ComplexMatrix& x, const ComplexMatrix& y) {
    require_same_dim(x, y, "operator+");
    ComplexMatrix r(x.dim);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y) {
    require_same_dim(x, y, "operator-");
    ComplexMatrix r(x.dim);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
    require_same_dim(x, y, "operator*");
    const int n = x.dim;
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const cplx xik = x.at(i, k);
            if (xik == cplx{}) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& x) {
    ComplexMatrix r(x.dim);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = s * x.a[i];
    return r;
}

ComplexMatrix operator*(double s, const ComplexMatrix& x) { return cplx(s, 0.0) * x; }

ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y) {
    const int nx = x.dim, ny = y.dim;
    ComplexMatrix r(nx * ny);
    for (int ix = 0; ix < nx; ++ix)
        for (int jx = 0; jx < nx; ++jx) {
            const cplx v = x.at(ix, jx);
            if (v == cplx{}) continue;
            for (int iy = 0; iy < ny; ++iy)
                for (int jy = 0; jy < ny; ++jy)
                    r.at(ix * ny + iy, jx * ny + jy) = v * y.at(iy, jy);
        }
    return r;
}

ComplexMatrix embed_single(const ComplexMatrix& op, int site, int n) {
    if (op.dim != 2) throw std::invalid_argument("embed_single: op must be 2x2");
    if (site < 1 || site > n) throw std::invalid_argument("embed_single: site out of range");
    ComplexMatrix r = ComplexMatrix::identity(1);
    for (int s = 1; s <= n; ++s)
        r = kron(r, s == site ? op : ComplexMatrix::identity(2));
    return r;
}

ComplexMatrix adjoint(const ComplexMatrix& x) {
    ComplexMatrix r(x.dim);
    for (int i = 0; i < x.dim; ++i)
        for (int j = 0; j < x.dim; ++j) r.at(i, j) = std::conj(x.at(j, i));
    return r;
}

ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y) {
    require_same_dim(x, y, "commutator");
    return x * y - y * x;
}

ComplexMatrix anticommutator(const ComplexMatrix& x, const ComplexMatrix& y) {
    require_same_dim(x, y, "anticommutator");
    return x * y + y * x;
}

cplx hs_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
    require_same_dim(x, y, "hs_inner");
    cplx s = 0.0;
    for (size_t i = 0; i < x.a.size(); ++i) s += std::conj(x.a[i]) * y.a[i];
    return s;
}

cplx trace(const ComplexMatrix& x) {
    cplx s = 0.0;
    for (int i = 0; i < x.dim; ++i) s += x.at(i, i);
    return s;
}

double max_abs(const ComplexMatrix& x) {
    double m = 0.0;
    for (const auto& v : x.a) m = std::max(m, std::abs(v));
    return m;
}

double max_abs_diff(const ComplexMatrix& x, const ComplexMatrix& y) {
    require_same_dim(x, y, "max_abs_diff");
    double m = 0.0;
    for (size_t i = 0; i < x.a.size(); ++i) m = std::max(m, std::abs(x.a[i] - y.a[i]));
    return m;
}

bool is_hermitian(const ComplexMatrix& x, double tol) {
    for (int i = 0; i < x.dim; ++i)
        for (int j = i; j < x.dim; ++j)
            if (std::abs(x.at(i, j) - std::conj(x.at(j, i))) > tol) return false;
    return true;
}

cplx inner(const StateVector& x, const StateVector& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("inner: dimension mismatch");
    cplx s = 0.0;
    for (int i = 0; i < x.dim(); ++i) s += std::conj(x.amp[i]) * y.amp[i];
    return s;
}

double norm(const StateVector& x) { return std::sqrt(std::abs(inner(x, x))); }

StateVector apply(const ComplexMatrix& m, const StateVector& v) {
    if (m.dim != v.dim()) throw std::invalid_argument("apply: dimension mismatch");
    StateVector r(v.dim());
    for (int i = 0; i < m.dim; ++i) {
        cplx s = 0.0;
        for (int j = 0; j < m.dim; ++j) s += m.at(i, j) * v.amp[j];
        r.amp[i] = s;
    }
    return r;
}

ComplexMatrix outer(const StateVector& x, const StateVector& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("outer: dimension mismatch");
    ComplexMatrix r(x.dim());
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) r.at(i, j) = x.amp[i] * std::conj(y.amp[j]);
    return r;
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2);
    m.at(0, 1) = 1.0;
    m.at(1, 0) = 1.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2);
    m.at(0, 1) = cplx(0.0, -1.0);
    m.at(1, 0) = cplx(0.0, 1.0);
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2);
    m.at(0, 0) = 1.0;
    m.at(1, 1) = -1.0;
    return m;
}

ComplexMatrix sigma_plus() {
    ComplexMatrix m(2);
    m.at(0, 1) = 1.0;
    return m;
}

ComplexMatrix sigma_minus() {
    ComplexMatrix m(2);
    m.at(1, 0) = 1.0;
    return m;
}

ComplexMatrix spin_z() { return 0.5 * pauli_z(); }

} // namespace methyl
