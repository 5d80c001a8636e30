#ifndef NULLX_MAT2_HPP
#define NULLX_MAT2_HPP

#include <complex>

namespace nullx {

using cplx = std::complex<double>;

/// Dense 2x2 complex matrix. Frames, Hamiltonians, momenta and Hermitian
/// points of de Sitter 3-space all live here; structural properties
/// (unimodular, Hermitian, traceless) are checked by predicates, never
/// enforced by the type.
struct ComplexMat2 {
    cplx a11{}, a12{}, a21{}, a22{};

    static ComplexMat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static ComplexMat2 zero() { return {}; }
};

inline ComplexMat2 operator+(const ComplexMat2& a, const ComplexMat2& b) {
    return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
}
inline ComplexMat2 operator-(const ComplexMat2& a, const ComplexMat2& b) {
    return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
}
inline ComplexMat2 operator*(const ComplexMat2& a, const ComplexMat2& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}
inline ComplexMat2 operator*(const cplx& c, const ComplexMat2& a) {
    return {c * a.a11, c * a.a12, c * a.a21, c * a.a22};
}
inline ComplexMat2 operator*(double c, const ComplexMat2& a) {
    return cplx(c, 0.0) * a;
}

cplx det2(const ComplexMat2& m);
cplx trace(const ComplexMat2& m);

/// Conjugate transpose.
ComplexMat2 adjoint(const ComplexMat2& m);

/// Inverse by adjugate; throws std::domain_error if the determinant
/// underflows.
ComplexMat2 inverse(const ComplexMat2& m);

double frobenius_norm(const ComplexMat2& m);

/// Default absolute tolerance of the structural predicates. All quantities
/// handled by the library are O(1)-O(1e2) in the supported regimes.
inline constexpr double kStructuralTol = 1e-9;

bool is_unimodular(const ComplexMat2& m, double tol = kStructuralTol);
bool is_hermitian(const ComplexMat2& m, double tol = kStructuralTol);
bool is_traceless(const ComplexMat2& m, double tol = kStructuralTol);

/// Base point J of de Sitter 3-space, det J = -1.
inline ComplexMat2 base_point_J() {
    return {cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0)};
}

/// Lorentz inner product on Hermitian matrices, <X,Y> = -(det(X+Y) - det X
/// - det Y)/2. Throws std::invalid_argument on non-Hermitian input.
double lorentz_inner(const ComplexMat2& x, const ComplexMat2& y,
                     double tol = kStructuralTol);

/// pi : SL(2,C) -> S^3_1, A -> A J A*. Throws std::invalid_argument if A is
/// not unimodular within tol.
ComplexMat2 project_to_ds(const ComplexMat2& a, double tol = kStructuralTol);

ComplexMat2 commutator(const ComplexMat2& a, const ComplexMat2& b);

/// Coordinate chart on Herm(2), signature (-,+,+,+):
///   X = [[x0+x3, x1+i x2], [x1-i x2, x0-x3]].
struct MinkowskiVec {
    double x0{}, x1{}, x2{}, x3{};
};

MinkowskiVec minkowski_coords(const ComplexMat2& x,
                              double tol = kStructuralTol);
ComplexMat2 hermitian_from_coords(const MinkowskiVec& v);

}  // namespace nullx

#endif
