#include "nullx/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace nullx {

namespace {

std::vector<double> grid(const IntegratorConfig& cfg) {
    if (!(cfg.step > 0.0) || !(cfg.s1 > cfg.s0)) {
        throw std::invalid_argument("integrator: need step > 0 and s1 > s0");
    }
    std::vector<double> out;
    const long n = static_cast<long>(std::ceil((cfg.s1 - cfg.s0) / cfg.step -
                                               1e-12));
    out.reserve(n + 1);
    for (long j = 0; j < n; ++j) out.push_back(cfg.s0 + j * cfg.step);
    out.push_back(cfg.s1);
    return out;
}

FrameSample make_sample(double s, const ComplexMat2& gamma, const Jet3& jet,
                        const ModelParams& params) {
    FrameSample smp;
    smp.s = s;
    smp.gamma = gamma;
    smp.jet = jet;
    smp.k = k_from_h(jet.h, params);
    smp.det_drift = std::abs(det2(gamma) - 1.0);
    smp.point = minkowski_coords(project_to_ds(gamma, 1e-3));
    return smp;
}

}  // namespace

std::vector<FrameSample> integrate_frame(const Potential& p,
                                         const ModelParams& params,
                                         const IntegratorConfig& cfg,
                                         const ComplexMat2& gamma0) {
    const auto ss = grid(cfg);
    auto rhs = [&](double s, const ComplexMat2& g) {
        return g * hamiltonian_H(p.eval(s).h, params);
    };

    std::vector<FrameSample> out;
    out.reserve(ss.size());
    ComplexMat2 g = gamma0;
    out.push_back(make_sample(ss[0], g, p.eval(ss[0]), params));
    for (size_t j = 0; j + 1 < ss.size(); ++j) {
        const double s = ss[j];
        const double dt = ss[j + 1] - s;
        const ComplexMat2 k1 = rhs(s, g);
        const ComplexMat2 k2 = rhs(s + dt / 2, g + (dt / 2) * k1);
        const ComplexMat2 k3 = rhs(s + dt / 2, g + (dt / 2) * k2);
        const ComplexMat2 k4 = rhs(s + dt, g + dt * k3);
        g = g + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (cfg.renormalize) {
            g = (1.0 / std::sqrt(det2(g))) * g;
        }
        const double drift = std::abs(det2(g) - 1.0);
        if (drift > 1e-4) {
            throw std::runtime_error(
                "integrate_frame: determinant drift exceeded 1e-4; reduce "
                "the step");
        }
        out.push_back(make_sample(ss[j + 1], g, p.eval(ss[j + 1]), params));
    }
    return out;
}

std::vector<Jet3> integrate_reduced_el(const Jet3& jet0,
                                       const IntegratorConfig& cfg) {
    const auto ss = grid(cfg);
    auto rhs = [](const Jet3& y) {
        return Jet3{y.h1, y.h2, 12.0 * y.h * y.h1};
    };
    auto axpy = [](const Jet3& y, double a, const Jet3& d) {
        return Jet3{y.h + a * d.h, y.h1 + a * d.h1, y.h2 + a * d.h2};
    };

    std::vector<Jet3> out;
    out.reserve(ss.size());
    Jet3 y = jet0;
    out.push_back(y);
    for (size_t j = 0; j + 1 < ss.size(); ++j) {
        const double dt = ss[j + 1] - ss[j];
        const Jet3 k1 = rhs(y);
        const Jet3 k2 = rhs(axpy(y, dt / 2, k1));
        const Jet3 k3 = rhs(axpy(y, dt / 2, k2));
        const Jet3 k4 = rhs(axpy(y, dt, k3));
        y = Jet3{y.h + dt / 6 * (k1.h + 2 * k2.h + 2 * k3.h + k4.h),
                 y.h1 + dt / 6 * (k1.h1 + 2 * k2.h1 + 2 * k3.h1 + k4.h1),
                 y.h2 + dt / 6 * (k1.h2 + 2 * k2.h2 + 2 * k3.h2 + k4.h2)};
        if (std::abs(y.h) > 1e8) {
            throw std::runtime_error(
                "integrate_reduced_el: solution blew up past 1e8");
        }
        out.push_back(y);
    }
    return out;
}

std::vector<FrameSample> sample_closed_form(const Potential& p,
                                            const ModelParams& params,
                                            const IntegratorConfig& cfg) {
    const auto ss = grid(cfg);
    std::vector<FrameSample> out;
    out.reserve(ss.size());
    for (double s : ss) {
        const auto [c, gamma] = extremal_frame(p, s, params);
        out.push_back(make_sample(s, gamma, p.eval(s), params));
    }
    return out;
}

FrameComparison compare_frames(const std::vector<FrameSample>& a,
                               const std::vector<FrameSample>& b) {
    if (a.size() != b.size() || a.empty()) {
        throw std::invalid_argument("compare_frames: grids must match");
    }
    const ComplexMat2 transfer = a[0].gamma * inverse(b[0].gamma);
    FrameComparison cmp;
    // Frames project to the curve through a double cover, so Gamma and
    // -Gamma are the same trajectory; compare modulo that sign.
    for (size_t j = 0; j < a.size(); ++j) {
        const ComplexMat2 aligned = transfer * b[j].gamma;
        cmp.max_deviation =
            std::max(cmp.max_deviation,
                     std::min(frobenius_norm(aligned - a[j].gamma),
                              frobenius_norm(aligned + a[j].gamma)));
        const ComplexMat2 t = a[j].gamma * inverse(b[j].gamma);
        cmp.transfer_drift =
            std::max(cmp.transfer_drift,
                     std::min(frobenius_norm(t - transfer),
                              frobenius_norm(t + transfer)));
    }
    return cmp;
}

}  // namespace nullx
