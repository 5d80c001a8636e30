#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "nullx/closed_form.hpp"

using namespace nullx;

namespace {
const ModelParams kM0E1{0.0, 1};

// Finite-difference M'(s), 5-point stencil.
ComplexMat2 frame_derivative(const Potential& p, double s,
                             const ModelParams& params, double d = 1e-3) {
    auto m = [&](double ss) { return extremal_frame(p, ss, params).second; };
    return (1.0 / (12.0 * d)) * ((-1.0) * m(s + 2 * d) + 8.0 * m(s + d) -
                                 8.0 * m(s - d) + m(s - 2 * d));
}

double frame_equation_residual(const Potential& p, double s,
                               const ModelParams& params) {
    const ComplexMat2 m = extremal_frame(p, s, params).second;
    const ComplexMat2 md = frame_derivative(p, s, params);
    return frobenius_norm(inverse(m) * md -
                          hamiltonian_H(p.eval(s).h, params));
}
}  // namespace

TEST_CASE("nu at frozen configurations") {
    // (0,0), m=0, eps=+1: nu = sqrt(-4i) = sqrt(2) (1 - i).
    const cplx v = nu({0, 0}, kM0E1);
    CHECK(std::abs(v - std::sqrt(2.0) * cplx(1, -1)) < 1e-14);
    // (-4,0), m=0: P(i) = -4i + 4i = 0, the degenerate-momentum case.
    CHECK(is_case_two({-4, 0}, kM0E1));
    CHECK_FALSE(is_case_two({0, 0}, kM0E1));
    CHECK_FALSE(is_case_two({4, 0}, kM0E1));
}

TEST_CASE("inversion point for the rational potential") {
    const Potential p({0, 0});
    const cplx w = find_w(p, kM0E1);
    // wp = s^-2 = i at w = exp(-i pi/4).
    CHECK(std::abs(w - std::exp(cplx(0, -std::numbers::pi / 4))) < 1e-12);
}

TEST_CASE("inversion point satisfies its defining equations everywhere") {
    for (const Invariants inv :
         {Invariants{0, 0}, {12, -8}, {4, 0}, {0, 4}, {5, -2}}) {
        for (const ModelParams params :
             {ModelParams{0.0, 1}, {1.0, -1}, {-0.5, 1}}) {
            const Potential p(inv);
            const cplx w = find_w(p, params);
            const cplx e = double(params.eps) * cplx(params.m / 3.0, 1.0);
            const auto [pv, pd] =
                p.lattice() ? p.lattice()->wp(w) : wp(w, inv);
            CHECK(std::abs(pv - e) < 1e-9);
            CHECK(std::abs(pd - nu(inv, params)) < 1e-8);
        }
    }
}

TEST_CASE("rational third-kind integral has its elementary closed form") {
    const Potential p({0, 0});
    const cplx w = find_w(p, kM0E1);
    for (double s : {0.5, 1.0, 1.7, 2.6}) {
        const cplx expect = std::log((s - w) / (s + w)) + 2.0 * s / w;
        CHECK(std::abs(phi(p, s, kM0E1) - expect) < 1e-12);
    }
}

TEST_CASE("third-kind integral differentiates to its integrand") {
    const double d = 1e-3;
    for (const Invariants inv : {Invariants{0, 0}, {12, -8}, {-4, 0}}) {
        const Potential p(inv);
        const ClosedFormCase c = classify_frame_case(p, kM0E1);
        const double base = (inv.g2 < 0) ? 2.0 : 0.9;  // pole-free spots
        for (double s : {base, base + 0.3}) {
            const cplx fd = (-phi(p, s + 2 * d, kM0E1) +
                             8.0 * phi(p, s + d, kM0E1) -
                             8.0 * phi(p, s - d, kM0E1) +
                             phi(p, s - 2 * d, kM0E1)) /
                            (12.0 * d);
            const cplx e = cplx(0.0, 1.0);
            const cplx integrand = (c.tag == FrameCase::CASE_I)
                                       ? c.nu / (p.eval(s).h - e)
                                       : 1.0 / (p.eval(s).h - e);
            CHECK(std::abs(fd - integrand) < 1e-6);
        }
    }
}

TEST_CASE("nondegenerate-momentum frame solves the frame equation") {
    for (const Invariants inv : {Invariants{0, 0}, {12, -8}, {4, 0}}) {
        const Potential p(inv);
        for (double s : {0.7, 1.1, 1.6}) {
            const auto [c, m] = extremal_frame(p, s, kM0E1);
            CHECK(c.tag == FrameCase::CASE_I);
            CHECK(std::abs(det2(m) - 1.0) < 1e-8);
            CHECK(frame_equation_residual(p, s, kM0E1) < 1e-6);
        }
    }
}

TEST_CASE("degenerate-momentum frame solves the frame equation") {
    const Potential p({-4, 0});
    for (double s : {1.2, 1.9, 2.5}) {
        const auto [c, m] = extremal_frame(p, s, kM0E1);
        CHECK(c.tag == FrameCase::CASE_II);
        CHECK(std::abs(det2(m) - 1.0) < 1e-8);
        CHECK(frame_equation_residual(p, s, kM0E1) < 1e-6);
    }
}

TEST_CASE("helix frame is a one-parameter subgroup") {
    for (double k0 : {0.0, 1.0, -2.0}) {
        for (const ModelParams params : {ModelParams{0.0, 1}, {0.5, -1}}) {
            const ComplexMat2 a = helix_frame(k0, 0.4, params);
            const ComplexMat2 b = helix_frame(k0, 0.9, params);
            const ComplexMat2 ab = helix_frame(k0, 1.3, params);
            CHECK(frobenius_norm(a * b - ab) < 1e-10);
            CHECK(std::abs(det2(a) - 1.0) < 1e-12);
            CHECK(frobenius_norm(helix_frame(k0, 0.0, params) -
                                 ComplexMat2::identity()) < 1e-14);
            // Gamma' = Gamma H(k0) at s = 0.
            const double d = 1e-4;
            const ComplexMat2 fd =
                (1.0 / (2.0 * d)) *
                (helix_frame(k0, d, params) - helix_frame(k0, -d, params));
            CHECK(frobenius_norm(
                      fd - hamiltonian_H(h_from_k(k0, params), params)) <
                  1e-7);
        }
    }
}

TEST_CASE("dispatcher selects the right construction") {
    CHECK(classify_frame_case(Potential({0, 0}), kM0E1).tag ==
          FrameCase::CASE_I);
    CHECK(classify_frame_case(Potential({-4, 0}), kM0E1).tag ==
          FrameCase::CASE_II);
    CHECK(classify_frame_case(Potential::constant(1.0), kM0E1).tag ==
          FrameCase::HELIX);
    CHECK_THROWS_AS((void)frame_case2(Potential({0, 0}), 1.0, kM0E1),
                    std::domain_error);
    CHECK_THROWS_AS((void)frame_case1(Potential({-4, 0}), 1.5, kM0E1),
                    std::domain_error);
}
