#ifndef NULLX_ORACLE_HPP
#define NULLX_ORACLE_HPP

#include <vector>

#include "nullx/closed_form.hpp"

namespace nullx {

/// Fixed-step RK4 configuration on [s0, s1]. The grid is s0 + j*step with
/// the final point clamped to s1; no adaptivity and no renormalization
/// unless requested, so determinant drift stays visible as a diagnostic.
struct IntegratorConfig {
    double s0{};
    double s1{1.0};
    double step{1e-3};
    bool renormalize{false};  ///< divide the frame by sqrt(det) each step
};

/// One sample of a trajectory: the frame, the projected curve point, the
/// curvature data, and |det - 1| of the frame at this s.
struct FrameSample {
    double s{};
    ComplexMat2 gamma;
    MinkowskiVec point;
    Jet3 jet;
    double k{};
    double det_drift{};
};

/// RK4 on Gamma' = Gamma H(k(s)) from Gamma(s0) = gamma0. Aborts with
/// std::runtime_error once |det Gamma - 1| exceeds 1e-4.
std::vector<FrameSample> integrate_frame(const Potential& p,
                                         const ModelParams& params,
                                         const IntegratorConfig& cfg,
                                         const ComplexMat2& gamma0);

/// RK4 on the curvature flow (h, h', h'')' = (h', h'', 12 h h') from the
/// given initial jet. Guards against blowup at |h| > 1e8.
std::vector<Jet3> integrate_reduced_el(const Jet3& jet0,
                                       const IntegratorConfig& cfg);

/// Closed-form trajectory sampled on the cfg grid via extremal_frame.
std::vector<FrameSample> sample_closed_form(const Potential& p,
                                            const ModelParams& params,
                                            const IntegratorConfig& cfg);

struct FrameComparison {
    double max_deviation{};  ///< max_s ||A Gamma_b(s) - Gamma_a(s)||_F
    double transfer_drift{};  ///< max_s ||Gamma_a Gamma_b^-1 - A||_F
};

/// Aligns two trajectories by the transfer matrix A = Gamma_a(s0)
/// Gamma_b(s0)^-1 and reports how far they stay apart. Both inputs must be
/// sampled on the same grid.
FrameComparison compare_frames(const std::vector<FrameSample>& a,
                               const std::vector<FrameSample>& b);

}  // namespace nullx

#endif
