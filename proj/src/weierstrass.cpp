#include "nullx/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace nullx {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool nearly_zero_invariants(const Invariants& inv) {
    return std::max(std::abs(inv.g2), std::abs(inv.g3)) < 1e-14;
}

bool degenerate_discriminant(const Invariants& inv) {
    const double scale =
        27.0 * inv.g3 * inv.g3 + std::abs(inv.g2 * inv.g2 * inv.g2);
    return std::abs(discriminant(inv)) <= 1e-12 * scale;
}

}  // namespace

double discriminant(const Invariants& inv) {
    return 27.0 * inv.g3 * inv.g3 - inv.g2 * inv.g2 * inv.g2;
}

std::array<cplx, 3> cubic_roots(const Invariants& inv) {
    // Monic form t^3 + p t + q shares the roots of 4t^3 - g2 t - g3.
    const double p = -inv.g2 / 4.0;
    const double q = -inv.g3 / 4.0;
    if (p == 0.0 && q == 0.0) {
        return {cplx(0), cplx(0), cplx(0)};
    }
    const double disc = -4.0 * p * p * p - 27.0 * q * q;
    std::array<cplx, 3> roots;
    if (disc >= 0.0 && p < 0.0) {
        // Three real roots, trigonometric form.
        const double rad = 2.0 * std::sqrt(-p / 3.0);
        double arg = 3.0 * q / (2.0 * p) * std::sqrt(-3.0 / p);
        arg = std::clamp(arg, -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        std::array<double, 3> r;
        for (int k = 0; k < 3; ++k) {
            r[k] = rad * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0);
        }
        std::sort(r.begin(), r.end(), std::greater<>());
        for (int k = 0; k < 3; ++k) roots[k] = cplx(r[k]);
    } else {
        // One real root by Cardano, complex pair by deflation.
        const double s = std::sqrt(std::max(q * q / 4.0 + p * p * p / 27.0, 0.0));
        double r0 = std::cbrt(-q / 2.0 + s) + std::cbrt(-q / 2.0 - s);
        // One Newton polish for the real root.
        for (int it = 0; it < 2; ++it) {
            const double f = r0 * r0 * r0 + p * r0 + q;
            const double fp = 3.0 * r0 * r0 + p;
            if (std::abs(fp) > 1e-12) r0 -= f / fp;
        }
        const double disc_q = r0 * r0 - 4.0 * (p + r0 * r0);
        if (disc_q >= 0.0) {
            // Repeated/real pair (borderline discriminant).
            const double sq = std::sqrt(disc_q);
            std::array<double, 3> r = {r0, (-r0 + sq) / 2.0, (-r0 - sq) / 2.0};
            std::sort(r.begin(), r.end(), std::greater<>());
            for (int k = 0; k < 3; ++k) roots[k] = cplx(r[k]);
        } else {
            const double beta = std::sqrt(-disc_q) / 2.0;
            roots = {cplx(r0), cplx(-r0 / 2.0, beta), cplx(-r0 / 2.0, -beta)};
        }
    }
    return roots;
}

cplx carlson_rf(cplx x, cplx y, cplx z) {
    cplx mu;
    for (int it = 0; it < 200; ++it) {
        const cplx sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        const cplx lam = sx * sy + sy * sz + sz * sx;
        x = (x + lam) / 4.0;
        y = (y + lam) / 4.0;
        z = (z + lam) / 4.0;
        mu = (x + y + z) / 3.0;
        const double spread = std::max(
            {std::abs(x - mu), std::abs(y - mu), std::abs(z - mu)});
        if (spread < 1e-17 * std::abs(mu)) break;
    }
    const cplx X = 1.0 - x / mu, Y = 1.0 - y / mu, Z = 1.0 - z / mu;
    const cplx e2 = X * Y - Z * Z;
    const cplx e3 = X * Y * Z;
    return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 -
            3.0 * e2 * e3 / 44.0) /
           std::sqrt(mu);
}

bool HalfPeriods::omega1_finite() const { return std::isfinite(omega1); }
bool HalfPeriods::omega3_finite() const { return std::isfinite(omega3.imag()); }

HalfPeriods half_periods(const Invariants& inv) {
    HalfPeriods hp;
    if (nearly_zero_invariants(inv)) {
        hp.omega1 = kInf;
        hp.omega3 = cplx(0.0, kInf);
        return hp;
    }
    const double delta = discriminant(inv);
    if (degenerate_discriminant(inv)) {
        // Double root at a, g3 = -8a^3.
        const double a = -std::cbrt(inv.g3 / 8.0);
        if (inv.g3 > 0.0) {
            const double c = -a;  // a < 0 here
            hp.omega1 = std::numbers::pi / (2.0 * std::sqrt(3.0 * c));
            hp.omega3 = cplx(0.0, kInf);
        } else {
            hp.omega1 = kInf;
            hp.omega3 = cplx(0.0, std::numbers::pi / (2.0 * std::sqrt(3.0 * a)));
        }
        return hp;
    }
    const auto e = cubic_roots(inv);
    if (delta < 0.0) {
        // Rectangular lattice, three real roots e1 > e2 > e3.
        const double e1 = e[0].real(), e2 = e[1].real(), e3 = e[2].real();
        hp.omega1 = carlson_rf(0.0, e1 - e2, e1 - e3).real();
        hp.omega3 = cplx(0.0, carlson_rf(0.0, e1 - e3, e2 - e3).real());
        hp.nu = hp.omega3.imag() / hp.omega1;
    } else {
        // Rhombic lattice, real root c and a conjugate pair.
        const cplx c = e[0];
        const cplx ec = e[1];
        const double w1 = carlson_rf(0.0, c - ec, c - std::conj(ec)).real();
        const double j = carlson_rf(0.0, ec - c, std::conj(ec) - c).real();
        hp.omega1 = w1;
        hp.omega3 = cplx(w1, j) / 2.0;
        hp.nu = j / w1;
    }
    return hp;
}

Lattice::Lattice(const Invariants& inv) : inv_(inv) {
    if (nearly_zero_invariants(inv) || degenerate_discriminant(inv)) {
        throw std::invalid_argument(
            "Lattice: degenerate invariants, use the closed-form dispatchers");
    }
    hp_ = half_periods(inv);
    const cplx p1(2.0 * hp_.omega1, 0.0);
    const cplx p3 = 2.0 * hp_.omega3;
    min_period_ = std::min({std::abs(p1), std::abs(p3), std::abs(p3 - p1),
                            std::abs(p3 + p1)});
    series_radius_ = 0.25 * min_period_;

    c_[2] = inv.g2 / 20.0;
    c_[3] = inv.g3 / 28.0;
    for (std::size_t k = 4; k < c_.size(); ++k) {
        double acc = 0.0;
        for (std::size_t m = 2; m + 2 <= k; ++m) acc += c_[m] * c_[k - m];
        c_[k] = 3.0 / ((2.0 * k + 1.0) * (k - 3.0)) * acc;
    }

    eta1_ = eval_unreduced(cplx(hp_.omega1, 0.0)).zeta;
    // Legendre relation eta1 w3 - eta3 w1 = i pi / 2.
    eta3_ = (eta1_ * hp_.omega3 - cplx(0.0, std::numbers::pi / 2.0)) /
            hp_.omega1;
}

cplx Lattice::reduce(cplx z, long& m, long& n) const {
    // Solve z = a (2 w1) + b (2 w3) over the reals.
    const double w1x = 2.0 * hp_.omega1;
    const double w3x = 2.0 * hp_.omega3.real();
    const double w3y = 2.0 * hp_.omega3.imag();
    const double b = z.imag() / w3y;
    const double a = (z.real() - b * w3x) / w1x;
    const long m0 = std::lround(a), n0 = std::lround(b);
    cplx best = z;
    double best_abs = kInf;
    for (long dm = -1; dm <= 1; ++dm) {
        for (long dn = -1; dn <= 1; ++dn) {
            const cplx zr = z - double(m0 + dm) * cplx(w1x, 0.0) -
                            double(n0 + dn) * cplx(w3x, w3y);
            if (std::abs(zr) < best_abs) {
                best_abs = std::abs(zr);
                best = zr;
                m = m0 + dm;
                n = n0 + dn;
            }
        }
    }
    return best;
}

double Lattice::lattice_distance(cplx z) const {
    long m, n;
    return std::abs(reduce(z, m, n));
}

Lattice::Eval Lattice::eval_series(cplx z) const {
    const cplx z2 = z * z;
    cplx p = 1.0 / z2;
    cplx pd = -2.0 / (z2 * z);
    cplx zt = 1.0 / z;
    cplx ls = 0.0;  // log(sigma(z)/z)
    cplx pow_even = z2;        // z^(2k-2) for k = 2
    for (std::size_t k = 2; k < c_.size(); ++k) {
        const double ck = c_[k];
        p += ck * pow_even;
        pd += (2.0 * k - 2.0) * ck * pow_even / z;
        zt -= ck * pow_even * z / (2.0 * k - 1.0);
        ls -= ck * pow_even * z2 / (2.0 * k * (2.0 * k - 1.0));
        pow_even *= z2;
    }
    return {p, pd, zt, z * std::exp(ls)};
}

Lattice::Eval Lattice::eval_unreduced(cplx z) const {
    int halvings = 0;
    cplx u = z;
    while (std::abs(u) > series_radius_ && halvings < 60) {
        u /= 2.0;
        ++halvings;
    }
    Eval e = eval_series(u);
    const double g2 = inv_.g2;
    for (int i = 0; i < halvings; ++i) {
        const cplx p2 = 6.0 * e.p * e.p - g2 / 2.0;      // wp''
        const cplx lam = p2 / (2.0 * e.pd);
        const cplx lamd = 6.0 * e.p - p2 * p2 / (2.0 * e.pd * e.pd);
        const cplx np = lam * lam - 2.0 * e.p;
        const cplx npd = lam * lamd - e.pd;
        const cplx nzt = 2.0 * e.zeta + lam;
        const cplx nsg = -(e.sigma * e.sigma) * (e.sigma * e.sigma) * e.pd;
        e = {np, npd, nzt, nsg};
    }
    return e;
}

Lattice::Eval Lattice::eval(cplx z, double pole_guard) const {
    long m = 0, n = 0;
    const cplx zr = reduce(z, m, n);
    if (std::abs(zr) < pole_guard) {
        throw std::domain_error("Lattice::eval: argument within pole guard");
    }
    Eval e = eval_unreduced(zr);
    if (m != 0 || n != 0) {
        const cplx shift = 2.0 * (double(m) * eta1_ + double(n) * eta3_);
        const cplx l = double(m) * cplx(2.0 * hp_.omega1, 0.0) +
                       double(n) * 2.0 * hp_.omega3;
        const double sign = ((m + n + m * n) % 2 == 0) ? 1.0 : -1.0;
        e.zeta += shift;
        e.sigma = sign * std::exp(shift * (zr + l / 2.0)) * e.sigma;
    }
    return e;
}

std::pair<cplx, cplx> Lattice::wp(cplx z, double pole_guard) const {
    const Eval e = eval(z, pole_guard);
    return {e.p, e.pd};
}

cplx Lattice::zeta(cplx z, double pole_guard) const {
    return eval(z, pole_guard).zeta;
}

cplx Lattice::sigma(cplx z) const {
    long m = 0, n = 0;
    if (std::abs(reduce(z, m, n)) < 1e-14) return 0.0;
    return eval(z, 1e-14).sigma;
}

namespace {

// Degenerate closed forms. For g3 = -8a^3 < 0 (a > 0):
//   wp(z) = a + 3a / sinh^2(r z),   r = sqrt(3a),
// for g3 > 0 (a < 0, c = -a):
//   wp(z) = -c + 3c / sin^2(r z),   r = sqrt(3c).

struct DegenerateForms {
    enum Kind { kRational, kHyperbolic, kTrigonometric } kind;
    double a{};  // double root of the cubic (0 for rational)
    double r{};  // sqrt(3|a|)
};

DegenerateForms degenerate_forms(const Invariants& inv) {
    if (nearly_zero_invariants(inv)) {
        return {DegenerateForms::kRational, 0.0, 0.0};
    }
    const double a = -std::cbrt(inv.g3 / 8.0);
    if (inv.g3 < 0.0) {
        return {DegenerateForms::kHyperbolic, a, std::sqrt(3.0 * a)};
    }
    return {DegenerateForms::kTrigonometric, a, std::sqrt(-3.0 * a)};
}

double degenerate_pole_distance(const DegenerateForms& f, cplx z) {
    switch (f.kind) {
        case DegenerateForms::kRational:
            return std::abs(z);
        case DegenerateForms::kHyperbolic: {
            // Poles at z = k pi i / r.
            const cplx u = f.r * z;
            const double dy = std::remainder(u.imag(), std::numbers::pi);
            return std::hypot(u.real(), dy) / f.r;
        }
        case DegenerateForms::kTrigonometric: {
            // Poles at z = k pi / r.
            const cplx u = f.r * z;
            const double dx = std::remainder(u.real(), std::numbers::pi);
            return std::hypot(dx, u.imag()) / f.r;
        }
    }
    return 0.0;
}

}  // namespace

std::pair<cplx, cplx> wp(cplx z, const Invariants& inv, double pole_guard) {
    if (nearly_zero_invariants(inv) || degenerate_discriminant(inv)) {
        const DegenerateForms f = degenerate_forms(inv);
        if (degenerate_pole_distance(f, z) < pole_guard) {
            throw std::domain_error("wp: argument within pole guard");
        }
        switch (f.kind) {
            case DegenerateForms::kRational:
                return {1.0 / (z * z), -2.0 / (z * z * z)};
            case DegenerateForms::kHyperbolic: {
                const cplx s = std::sinh(f.r * z);
                const cplx c = std::cosh(f.r * z);
                return {f.a + 3.0 * f.a / (s * s),
                        -6.0 * f.a * f.r * c / (s * s * s)};
            }
            case DegenerateForms::kTrigonometric: {
                const double cc = -f.a;
                const cplx s = std::sin(f.r * z);
                const cplx c = std::cos(f.r * z);
                return {-cc + 3.0 * cc / (s * s),
                        -6.0 * cc * f.r * c / (s * s * s)};
            }
        }
    }
    return Lattice(inv).wp(z, pole_guard);
}

cplx zeta(cplx z, const Invariants& inv, double pole_guard) {
    if (nearly_zero_invariants(inv) || degenerate_discriminant(inv)) {
        const DegenerateForms f = degenerate_forms(inv);
        if (degenerate_pole_distance(f, z) < pole_guard) {
            throw std::domain_error("zeta: argument within pole guard");
        }
        switch (f.kind) {
            case DegenerateForms::kRational:
                return 1.0 / z;
            case DegenerateForms::kHyperbolic:
                return -f.a * z + f.r / std::tanh(f.r * z);
            case DegenerateForms::kTrigonometric:
                return -f.a * z + f.r / std::tan(f.r * z);
        }
    }
    return Lattice(inv).zeta(z, pole_guard);
}

cplx sigma(cplx z, const Invariants& inv) {
    if (nearly_zero_invariants(inv) || degenerate_discriminant(inv)) {
        const DegenerateForms f = degenerate_forms(inv);
        switch (f.kind) {
            case DegenerateForms::kRational:
                return z;
            case DegenerateForms::kHyperbolic:
                return std::sinh(f.r * z) / f.r *
                       std::exp(-f.a * z * z / 2.0);
            case DegenerateForms::kTrigonometric:
                return std::sin(f.r * z) / f.r *
                       std::exp(-f.a * z * z / 2.0);
        }
    }
    return Lattice(inv).sigma(z);
}

}  // namespace nullx
