#ifndef NULLX_CLOSED_FORM_HPP
#define NULLX_CLOSED_FORM_HPP

#include <utility>

#include "nullx/dynamics.hpp"

namespace nullx {

enum class FrameCase {
    CASE_I,           ///< det U != 0
    CASE_II,          ///< det U = 0, (g2,g3) != (0,0)
    CASE_III_FORMAL,  ///< det U = 0 and (g2,g3) = (0,0); unreachable for
                      ///< real m, kept as a formal case only
    HELIX,            ///< constant curvature, frame = exp(s H(k0))
};

const char* to_string(FrameCase tag);

struct ClosedFormCase {
    FrameCase tag{};
    cplx nu{};  ///< sqrt(P(eps(m/3 + i)))
    cplx w{};   ///< inversion point in the wp picture (CASE_I / CASE_II)
    cplx e3{};  ///< the root eps(m/3 + i) of P (CASE_II)
};

/// nu = principal sqrt of P(eps(m/3 + i); g2, g3); +-i nu are the
/// eigenvalues of the momentum U, and nu = h'(w) at the inversion point.
cplx nu(const Invariants& inv, const ModelParams& params);

/// Case selection threshold on |det U| = |P(eps(m/3 + i))|.
bool is_case_two(const Invariants& inv, const ModelParams& params);

ClosedFormCase classify_frame_case(const Potential& p,
                                   const ModelParams& params);

/// The unique point w in the period-parallelogram (wp picture) with
/// wp(w) = eps(m/3 + i) and wp'(w) = nu. Closed-form inversion for the
/// degenerate cases, Newton from grid seeds otherwise. Throws
/// std::runtime_error if the inversion fails its tolerance.
cplx find_w(const Potential& p, const ModelParams& params);

/// Elliptic integral of the third kind along the potential:
/// dphi/ds = nu/(h - eps(m/3+i)) (Case I) or 1/(h - eps(m/3+i)) (Case II),
/// evaluated through the sigma and zeta functions of the lattice.
cplx phi(const Potential& p, double s, const ModelParams& params);

/// Canonical-frame factor M(s) of Case I (det U != 0): Gamma = A M with A
/// constant, det M = 1 and M^-1 M' = H(h).
ComplexMat2 frame_case1(const Potential& p, double s,
                        const ModelParams& params);

/// Canonical-frame factor of Case II (det U = 0, nondegenerate invariants).
ComplexMat2 frame_case2(const Potential& p, double s,
                        const ModelParams& params);

/// Frame of a null helix with constant curvature k0:
/// exp(s H(k0)) = cosh(s lambda) Id + sinh(s lambda)/lambda H(k0), with
/// lambda = sqrt(eps (k0 + i)).
ComplexMat2 helix_frame(double k0, double s, const ModelParams& params);

/// Dispatcher: selects HELIX for constant potentials and CASE_I / CASE_II
/// otherwise; throws std::domain_error for the formal Case III
/// configuration.
std::pair<ClosedFormCase, ComplexMat2> extremal_frame(
    const Potential& p, double s, const ModelParams& params);

}  // namespace nullx

#endif
