#ifndef NULLX_DYNAMICS_HPP
#define NULLX_DYNAMICS_HPP

#include "nullx/mat2.hpp"
#include "nullx/potentials.hpp"

namespace nullx {

/// Coordinates (x1..x5) of the lift to the momentum space; on the momentum
/// space x5 = 1, x4 = 0 and x3 = (eps/2)(m + k) identically.
struct MomentumLift {
    double x1{}, x2{}, x3{}, x4{}, x5{1.0};
};

/// H(h) = [[0, eps], [2 eps h + m/3 + i, 0]]; equals H(k) = [[0, eps],
/// [k + i, 0]] under k = 2 eps h + m/3. Satisfies H^2 = eps (k + i) Id.
ComplexMat2 hamiltonian_H(double h, const ModelParams& params);

/// The sl(2,C)-valued momentum U(h) of a reduced-curvature jet. Traceless;
/// det U = P(eps(m/3 + i); g2, g3) with the invariants recovered from the
/// jet.
ComplexMat2 momentum_U(const Jet3& jet, const ModelParams& params);

/// Analytic d/ds of momentum_U along the flow, using h''' = 12 h h'.
ComplexMat2 momentum_U_derivative(const Jet3& jet, const ModelParams& params);

/// Frobenius norm of dU/ds - [U, H] at an interior point of the potential.
/// The derivative is assembled analytically, so on an exact potential this
/// is pure roundoff.
double lax_residual(const Potential& p, double s, const ModelParams& params);

/// Momentum map Phi(A, U) = A U A^-1; throws std::invalid_argument for
/// non-unimodular A.
ComplexMat2 momentum_map(const ComplexMat2& a, const ComplexMat2& u,
                         double tol = kStructuralTol);

/// Lift of a curvature jet to the momentum space:
///   x1 = -(eps/2) k', x2 = k''/4 - (eps/2)(k^2 - m k + 2),
///   x3 = (eps/2)(m + k), x4 = 0, x5 = 1.
MomentumLift lift_to_momentum_space(double k, double k1, double k2,
                                    const ModelParams& params);

}  // namespace nullx

#endif
