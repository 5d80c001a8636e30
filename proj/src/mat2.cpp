#include "nullx/mat2.hpp"

#include <cmath>
#include <stdexcept>

namespace nullx {

cplx det2(const ComplexMat2& m) { return m.a11 * m.a22 - m.a12 * m.a21; }

cplx trace(const ComplexMat2& m) { return m.a11 + m.a22; }

ComplexMat2 adjoint(const ComplexMat2& m) {
    return {std::conj(m.a11), std::conj(m.a21), std::conj(m.a12),
            std::conj(m.a22)};
}

ComplexMat2 inverse(const ComplexMat2& m) {
    const cplx d = det2(m);
    if (std::abs(d) < 1e-300) {
        throw std::domain_error("ComplexMat2: singular matrix");
    }
    const cplx inv = 1.0 / d;
    return {inv * m.a22, -inv * m.a12, -inv * m.a21, inv * m.a11};
}

double frobenius_norm(const ComplexMat2& m) {
    return std::sqrt(std::norm(m.a11) + std::norm(m.a12) + std::norm(m.a21) +
                     std::norm(m.a22));
}

bool is_unimodular(const ComplexMat2& m, double tol) {
    return std::abs(det2(m) - 1.0) <= tol;
}

bool is_hermitian(const ComplexMat2& m, double tol) {
    return frobenius_norm(m - adjoint(m)) <= tol;
}

bool is_traceless(const ComplexMat2& m, double tol) {
    return std::abs(trace(m)) <= tol;
}

double lorentz_inner(const ComplexMat2& x, const ComplexMat2& y, double tol) {
    if (!is_hermitian(x, tol) || !is_hermitian(y, tol)) {
        throw std::invalid_argument("lorentz_inner: non-Hermitian argument");
    }
    const cplx v = -(det2(x + y) - det2(x) - det2(y)) / 2.0;
    return v.real();
}

ComplexMat2 project_to_ds(const ComplexMat2& a, double tol) {
    if (!is_unimodular(a, tol)) {
        throw std::invalid_argument("project_to_ds: non-unimodular argument");
    }
    return a * base_point_J() * adjoint(a);
}

ComplexMat2 commutator(const ComplexMat2& a, const ComplexMat2& b) {
    return a * b - b * a;
}

MinkowskiVec minkowski_coords(const ComplexMat2& x, double tol) {
    if (!is_hermitian(x, tol)) {
        throw std::invalid_argument("minkowski_coords: non-Hermitian argument");
    }
    MinkowskiVec v;
    v.x0 = 0.5 * (x.a11.real() + x.a22.real());
    v.x3 = 0.5 * (x.a11.real() - x.a22.real());
    v.x1 = x.a12.real();
    v.x2 = x.a12.imag();
    return v;
}

ComplexMat2 hermitian_from_coords(const MinkowskiVec& v) {
    return {cplx(v.x0 + v.x3, 0.0), cplx(v.x1, v.x2), cplx(v.x1, -v.x2),
            cplx(v.x0 - v.x3, 0.0)};
}

}  // namespace nullx
