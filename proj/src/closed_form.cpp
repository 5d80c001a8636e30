#include "nullx/closed_form.hpp"

#include <cmath>
#include <stdexcept>

namespace nullx {

namespace {

cplx lagrange_point(const ModelParams& params) {
    return double(params.eps) * cplx(params.m / 3.0, 1.0);
}

cplx cubic_at(const Invariants& inv, cplx t) {
    return 4.0 * t * t * t - inv.g2 * t - inv.g3;
}

// Evaluate (wp, wp') / zeta / sigma in the wp picture of the potential,
// through its cached lattice when there is one.
std::pair<cplx, cplx> pot_wp(const Potential& p, cplx z) {
    if (auto lat = p.lattice()) return lat->wp(z);
    return wp(z, p.invariants());
}

cplx pot_zeta(const Potential& p, cplx z) {
    if (auto lat = p.lattice()) return lat->zeta(z);
    return zeta(z, p.invariants());
}

cplx pot_sigma(const Potential& p, cplx z) {
    if (auto lat = p.lattice()) return lat->sigma(z);
    return sigma(z, p.invariants());
}

}  // namespace

const char* to_string(FrameCase tag) {
    switch (tag) {
        case FrameCase::CASE_I: return "CASE_I";
        case FrameCase::CASE_II: return "CASE_II";
        case FrameCase::CASE_III_FORMAL: return "CASE_III_FORMAL";
        case FrameCase::HELIX: return "HELIX";
    }
    return "?";
}

cplx nu(const Invariants& inv, const ModelParams& params) {
    return std::sqrt(cubic_at(inv, lagrange_point(params)));
}

bool is_case_two(const Invariants& inv, const ModelParams& params) {
    const double m = std::abs(params.m);
    const double tol = 1e-9 * (1.0 + m * m * m);
    return std::abs(cubic_at(inv, lagrange_point(params))) <= tol;
}

ClosedFormCase classify_frame_case(const Potential& p,
                                   const ModelParams& params) {
    ClosedFormCase c;
    c.nu = nu(p.invariants(), params);
    if (p.is_constant()) {
        c.tag = FrameCase::HELIX;
        return c;
    }
    if (!is_case_two(p.invariants(), params)) {
        c.tag = FrameCase::CASE_I;
        c.w = find_w(p, params);
        return c;
    }
    if (std::max(std::abs(p.invariants().g2), std::abs(p.invariants().g3)) <
        1e-14) {
        c.tag = FrameCase::CASE_III_FORMAL;
        return c;
    }
    c.tag = FrameCase::CASE_II;
    c.e3 = lagrange_point(params);
    c.w = find_w(p, params);
    return c;
}

cplx find_w(const Potential& p, const ModelParams& params) {
    const Invariants& inv = p.invariants();
    const cplx e = lagrange_point(params);
    const cplx target_nu = nu(inv, params);

    auto pick_sign = [&](cplx w) {
        const auto [pv, pd] = pot_wp(p, w);
        (void)pv;
        return (std::abs(pd - target_nu) <= std::abs(pd + target_nu)) ? w : -w;
    };

    cplx w;
    switch (p.potential_case().tag) {
        case CaseTag::RATIONAL:
            w = pick_sign(1.0 / std::sqrt(e));
            break;
        case CaseTag::TANH_DEGEN: {
            // wp(z) = a + 3a / sinh^2(r z)
            const double a = p.potential_case().a;
            const double r = std::sqrt(3.0 * a);
            const cplx sh = std::sqrt(3.0 * a / (e - a));
            w = pick_sign(std::asinh(sh) / r);
            break;
        }
        case CaseTag::TAN_DEGEN: {
            // wp(z) = -c + 3c / sin^2(r z)
            const double c = -p.potential_case().a;
            const double r = std::sqrt(3.0 * c);
            const cplx sn = std::sqrt(3.0 * c / (e + c));
            w = pick_sign(std::asin(sn) / r);
            break;
        }
        default: {
            const auto lat = p.lattice();
            const double w1 = lat->periods().omega1;
            const cplx w3 = lat->periods().omega3;
            if (is_case_two(inv, params)) {
                // wp - e has a double zero at a half-period; select it
                // directly instead of a degenerate Newton search.
                const cplx candidates[] = {cplx(w1), w3, cplx(w1) + w3};
                double best = 1e300;
                for (const cplx& hp : candidates) {
                    const double d = std::abs(lat->wp(hp).first - e);
                    if (d < best) {
                        best = d;
                        w = hp;
                    }
                }
                break;
            }
            // Newton on wp(w) - e from a seed grid over the parallelogram.
            bool found = false;
            constexpr int kGrid = 6;
            for (int i = 0; i < kGrid && !found; ++i) {
                for (int j = 0; j < kGrid && !found; ++j) {
                    cplx z = (i + 0.5) / kGrid * 2.0 * w1 +
                             (j + 0.5) / kGrid * 2.0 * w3;
                    for (int it = 0; it < 60; ++it) {
                        std::pair<cplx, cplx> v;
                        try {
                            v = lat->wp(z);
                        } catch (const std::domain_error&) {
                            break;
                        }
                        const cplx step = (v.first - e) / v.second;
                        z -= step;
                        if (std::abs(step) < 1e-14) {
                            if (std::abs(lat->wp(z).first - e) < 1e-9) {
                                w = z;
                                found = true;
                            }
                            break;
                        }
                    }
                }
            }
            if (!found) {
                throw std::runtime_error("find_w: inversion did not converge");
            }
            w = pick_sign(w);
            // Normalize into the fundamental parallelogram.
            const double w3x = 2.0 * w3.real(), w3y = 2.0 * w3.imag();
            double b = w.imag() / w3y;
            double a = (w.real() - b * w3x) / (2.0 * w1);
            a -= std::floor(a);
            b -= std::floor(b);
            w = a * 2.0 * w1 + b * cplx(w3x, w3y);
            break;
        }
    }

    const auto [pv, pd] = pot_wp(p, w);
    if (std::abs(pv - e) > 1e-9 || std::abs(pd - target_nu) > 1e-8) {
        throw std::runtime_error("find_w: inversion failed its tolerance");
    }
    return w;
}

cplx phi(const Potential& p, double s, const ModelParams& params) {
    const ClosedFormCase c = classify_frame_case(p, params);
    const cplx z = cplx(s, 0.0) + p.wp_shift();
    switch (c.tag) {
        case FrameCase::CASE_I:
            return std::log(pot_sigma(p, z - c.w) / pot_sigma(p, z + c.w)) +
                   2.0 * s * pot_zeta(p, c.w);
        case FrameCase::CASE_II: {
            const cplx e = c.e3;
            const cplx pref =
                1.0 / (p.invariants().g2 / 4.0 -
                       3.0 * cplx(params.m / 3.0, 1.0) *
                           cplx(params.m / 3.0, 1.0));
            return pref * (pot_zeta(p, z + c.w) + e * s);
        }
        case FrameCase::CASE_III_FORMAL:
            return cplx(s * s * s / 3.0, 0.0);
        case FrameCase::HELIX:
            throw std::domain_error("phi: not defined for constant curvature");
    }
    throw std::logic_error("phi: unreachable");
}

ComplexMat2 frame_case1(const Potential& p, double s,
                        const ModelParams& params) {
    if (is_case_two(p.invariants(), params)) {
        throw std::domain_error("frame_case1: det U vanishes, use Case II");
    }
    const double eps = params.eps;
    const cplx e = lagrange_point(params);
    const cplx v = nu(p.invariants(), params);
    const cplx w = find_w(p, params);
    const cplx i(0.0, 1.0);

    const Jet3 jet = p.eval(s);
    const cplx r = std::sqrt(jet.h - e);
    const cplx z = cplx(s, 0.0) + p.wp_shift();
    const cplx ph =
        std::log(pot_sigma(p, z - w) / pot_sigma(p, z + w)) +
        2.0 * s * pot_zeta(p, w);
    const cplx ep = std::exp(ph / 2.0);
    const cplx pref = 1.0 / std::sqrt(4.0 * eps * v);

    // Columns are eigenvectors of U scaled by e^{+-phi/2}; the residual
    // test M^-1 M' = H(h) is the arbiter of the sign conventions.
    ComplexMat2 m;
    m.a11 = pref * ep * i * (jet.h1 + v) / r;
    m.a12 = pref * ep * 2.0 * i * eps * r;
    m.a21 = pref / ep * (-i) * (jet.h1 - v) / r;
    m.a22 = pref / ep * (-2.0) * i * eps * r;
    return m;
}

ComplexMat2 frame_case2(const Potential& p, double s,
                        const ModelParams& params) {
    if (!is_case_two(p.invariants(), params)) {
        throw std::domain_error("frame_case2: det U != 0, use Case I");
    }
    if (std::max(std::abs(p.invariants().g2), std::abs(p.invariants().g3)) <
        1e-14) {
        throw std::domain_error(
            "frame_case2: formal Case III configuration is not integrable "
            "here");
    }
    const double eps = params.eps;
    const cplx e = lagrange_point(params);
    const cplx i(0.0, 1.0);

    const Jet3 jet = p.eval(s);
    const cplx r = std::sqrt(jet.h - e);
    const cplx ph = phi(p, s, params);
    const cplx pref = 1.0 / std::sqrt(-2.0 * i * eps);

    const ComplexMat2 left{1.0 / r, -ph / (2.0 * i), cplx(0.0), cplx(1.0)};
    const ComplexMat2 right{cplx(1.0), cplx(0.0), -i * jet.h1 / r,
                            -2.0 * i * eps * r};
    return pref * (left * right);
}

ComplexMat2 helix_frame(double k0, double s, const ModelParams& params) {
    const cplx lambda = std::sqrt(double(params.eps) * cplx(k0, 1.0));
    const ComplexMat2 h = hamiltonian_H(h_from_k(k0, params), params);
    const cplx ch = std::cosh(s * lambda);
    const cplx sh = std::sinh(s * lambda) / lambda;
    return ch * ComplexMat2::identity() + sh * h;
}

std::pair<ClosedFormCase, ComplexMat2> extremal_frame(
    const Potential& p, double s, const ModelParams& params) {
    const ClosedFormCase c = classify_frame_case(p, params);
    switch (c.tag) {
        case FrameCase::HELIX: {
            const double k0 = k_from_h(p.eval(s).h, params);
            return {c, helix_frame(k0, s, params)};
        }
        case FrameCase::CASE_I:
            return {c, frame_case1(p, s, params)};
        case FrameCase::CASE_II:
            return {c, frame_case2(p, s, params)};
        case FrameCase::CASE_III_FORMAL:
            throw std::domain_error(
                "extremal_frame: formal Case III is not dispatchable");
    }
    throw std::logic_error("extremal_frame: unreachable");
}

}  // namespace nullx
