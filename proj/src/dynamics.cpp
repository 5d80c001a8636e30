#include "nullx/dynamics.hpp"

#include <stdexcept>

namespace nullx {

ComplexMat2 hamiltonian_H(double h, const ModelParams& params) {
    const double eps = params.eps;
    return {cplx(0.0), cplx(eps),
            cplx(2.0 * eps * h + params.m / 3.0, 1.0), cplx(0.0)};
}

ComplexMat2 momentum_U(const Jet3& jet, const ModelParams& params) {
    const double eps = params.eps;
    const double m = params.m;
    const cplx i(0.0, 1.0);
    const double h = jet.h, h1 = jet.h1, h2 = jet.h2;
    ComplexMat2 u;
    u.a11 = i * h1;
    u.a12 = 2.0 * i * eps * (h - eps * (m / 3.0 + i));
    u.a21 = 2.0 * (h + 2.0 * eps * m / 3.0) -
            i * eps *
                (h2 - 4.0 * h * h + 2.0 * eps * m * h / 3.0 +
                 2.0 * m * m / 9.0 - 2.0);
    u.a22 = -i * h1;
    return u;
}

ComplexMat2 momentum_U_derivative(const Jet3& jet, const ModelParams& params) {
    const double eps = params.eps;
    const double m = params.m;
    const cplx i(0.0, 1.0);
    const double h = jet.h, h1 = jet.h1, h2 = jet.h2;
    const double h3 = jet.h3();  // 12 h h'
    ComplexMat2 du;
    du.a11 = i * h2;
    du.a12 = 2.0 * i * eps * h1;
    du.a21 = 2.0 * h1 - i * eps * (h3 - 8.0 * h * h1 + 2.0 * eps * m * h1 / 3.0);
    du.a22 = -i * h2;
    return du;
}

double lax_residual(const Potential& p, double s, const ModelParams& params) {
    const Jet3 jet = p.eval(s);
    const ComplexMat2 u = momentum_U(jet, params);
    const ComplexMat2 h = hamiltonian_H(jet.h, params);
    return frobenius_norm(momentum_U_derivative(jet, params) -
                          commutator(u, h));
}

ComplexMat2 momentum_map(const ComplexMat2& a, const ComplexMat2& u,
                         double tol) {
    if (!is_unimodular(a, tol)) {
        throw std::invalid_argument("momentum_map: non-unimodular frame");
    }
    return a * u * inverse(a);
}

MomentumLift lift_to_momentum_space(double k, double k1, double k2,
                                    const ModelParams& params) {
    const double eps = params.eps;
    MomentumLift y;
    y.x1 = -0.5 * eps * k1;
    y.x2 = 0.25 * k2 - 0.5 * eps * (k * k - params.m * k + 2.0);
    y.x3 = 0.5 * eps * (params.m + k);
    y.x4 = 0.0;
    y.x5 = 1.0;
    return y;
}

}  // namespace nullx
