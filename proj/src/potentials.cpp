#include "nullx/potentials.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace nullx {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

bool invariants_zero(const Invariants& inv) {
    return std::max(std::abs(inv.g2), std::abs(inv.g3)) < 1e-14;
}

bool discriminant_zero(const Invariants& inv) {
    const double scale =
        27.0 * inv.g3 * inv.g3 + std::abs(inv.g2 * inv.g2 * inv.g2);
    return std::abs(discriminant(inv)) <= 1e-12 * scale;
}
}  // namespace

double k_from_h(double h, const ModelParams& params) {
    return 2.0 * params.eps * h + params.m / 3.0;
}

double h_from_k(double k, const ModelParams& params) {
    return 0.5 * params.eps * (k - params.m / 3.0);
}

const char* to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::WP_NEG_DISC: return "WP_NEG_DISC";
        case CaseTag::WP3_NEG_DISC: return "WP3_NEG_DISC";
        case CaseTag::WP_POS_DISC: return "WP_POS_DISC";
        case CaseTag::TAN_DEGEN: return "TAN_DEGEN";
        case CaseTag::TANH_DEGEN: return "TANH_DEGEN";
        case CaseTag::RATIONAL: return "RATIONAL";
    }
    return "?";
}

PotentialCase classify(const Invariants& inv, Branch branch) {
    const bool neg_disc = !discriminant_zero(inv) && discriminant(inv) < 0.0;
    if (branch == Branch::WP3 && !neg_disc) {
        throw std::invalid_argument(
            "classify: the wp3 branch is real-valued only for negative "
            "discriminant");
    }
    PotentialCase c;
    if (invariants_zero(inv)) {
        c.tag = CaseTag::RATIONAL;
        c.domain_lo = 0.0;
        c.domain_hi = kInf;
        return c;
    }
    if (discriminant_zero(inv)) {
        c.a = -std::cbrt(inv.g3 / 8.0);
        if (inv.g3 > 0.0) {
            c.tag = CaseTag::TAN_DEGEN;
            const double half = std::numbers::pi / std::sqrt(-12.0 * c.a);
            c.domain_lo = -half;
            c.domain_hi = half;
        } else {
            c.tag = CaseTag::TANH_DEGEN;
            c.domain_lo = -kInf;
            c.domain_hi = kInf;
        }
        return c;
    }
    const HalfPeriods hp = half_periods(inv);
    if (neg_disc) {
        if (branch == Branch::WP) {
            c.tag = CaseTag::WP_NEG_DISC;
            c.domain_lo = 0.0;
            c.domain_hi = 2.0 * hp.omega1;
        } else {
            c.tag = CaseTag::WP3_NEG_DISC;
            c.domain_lo = -kInf;
            c.domain_hi = kInf;
        }
    } else {
        c.tag = CaseTag::WP_POS_DISC;
        c.domain_lo = 0.0;
        c.domain_hi = 2.0 * hp.omega1;
    }
    return c;
}

Invariants invariants_from_jet(const Jet3& jet) {
    Invariants inv;
    inv.g2 = 12.0 * jet.h * jet.h - 2.0 * jet.h2;
    inv.g3 = 4.0 * jet.h * jet.h * jet.h - inv.g2 * jet.h - jet.h1 * jet.h1;
    return inv;
}

Potential::Potential(const Invariants& inv, Branch branch) : inv_(inv) {
    case_ = classify(inv, branch);
    periods_ = half_periods(inv);
    switch (case_.tag) {
        case CaseTag::RATIONAL:
            break;
        case CaseTag::TANH_DEGEN:
            shift_ = periods_.omega3;
            break;
        case CaseTag::TAN_DEGEN:
            shift_ = cplx(periods_.omega1, 0.0);
            break;
        case CaseTag::WP3_NEG_DISC:
            lattice_ = std::make_shared<Lattice>(inv);
            shift_ = periods_.omega3;
            break;
        case CaseTag::WP_NEG_DISC:
        case CaseTag::WP_POS_DISC:
            lattice_ = std::make_shared<Lattice>(inv);
            break;
    }
}

Potential Potential::constant(double h0) {
    Potential p;
    p.inv_ = {12.0 * h0 * h0, -8.0 * h0 * h0 * h0};
    p.periods_ = half_periods(p.inv_);
    p.case_.tag = invariants_zero(p.inv_)
                      ? CaseTag::RATIONAL
                      : (p.inv_.g3 > 0.0 ? CaseTag::TAN_DEGEN
                                         : CaseTag::TANH_DEGEN);
    p.case_.a = h0;
    p.case_.domain_lo = -kInf;
    p.case_.domain_hi = kInf;
    p.constant_ = true;
    p.const_h_ = h0;
    return p;
}

Jet3 Potential::eval(double s, double pole_guard) const {
    if (constant_) {
        return {const_h_, 0.0, 0.0};
    }
    if (!(s > case_.domain_lo && s < case_.domain_hi)) {
        throw std::domain_error("Potential::eval: s outside the domain");
    }
    Jet3 jet;
    switch (case_.tag) {
        case CaseTag::RATIONAL: {
            if (s < pole_guard) {
                throw std::domain_error("Potential::eval: pole guard at s=0");
            }
            jet.h = 1.0 / (s * s);
            jet.h1 = -2.0 / (s * s * s);
            break;
        }
        case CaseTag::TANH_DEGEN: {
            const double a = case_.a;
            const double r = std::sqrt(3.0 * a);
            const double t = std::tanh(r * s);
            const double sech2 = 1.0 - t * t;
            jet.h = 3.0 * a * t * t - 2.0 * a;
            jet.h1 = 6.0 * a * r * t * sech2;
            break;
        }
        case CaseTag::TAN_DEGEN: {
            const double c = -case_.a;
            const double r = std::sqrt(3.0 * c);
            if (std::min(s - case_.domain_lo, case_.domain_hi - s) <
                pole_guard) {
                throw std::domain_error(
                    "Potential::eval: pole guard at the interval endpoint");
            }
            const double t = std::tan(r * s);
            const double sec2 = 1.0 + t * t;
            jet.h = 3.0 * c * t * t + 2.0 * c;
            jet.h1 = 6.0 * c * r * t * sec2;
            break;
        }
        default: {
            if (case_.tag != CaseTag::WP3_NEG_DISC &&
                std::min(s - case_.domain_lo, case_.domain_hi - s) <
                    pole_guard) {
                throw std::domain_error(
                    "Potential::eval: pole guard at the interval endpoint");
            }
            const auto [p, pd] = lattice_->wp(cplx(s, 0.0) + shift_);
            jet.h = p.real();
            jet.h1 = pd.real();
            break;
        }
    }
    jet.h2 = 6.0 * jet.h * jet.h - inv_.g2 / 2.0;
    return jet;
}

}  // namespace nullx
