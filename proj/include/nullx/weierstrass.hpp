#ifndef NULLX_WEIERSTRASS_HPP
#define NULLX_WEIERSTRASS_HPP

#include <array>
#include <complex>
#include <utility>

#include "nullx/mat2.hpp"

namespace nullx {

/// Real analytic invariants (g2, g3) of the cubic P(t) = 4t^3 - g2 t - g3.
struct Invariants {
    double g2{}, g3{};
};

/// Discriminant 27 g3^2 - g2^3. Note the sign: this is the negative of the
/// textbook elliptic discriminant g2^3 - 27 g3^2, so three distinct real
/// roots correspond to discriminant < 0 here.
double discriminant(const Invariants& inv);

/// Roots of 4t^3 - g2 t - g3, ordered: real roots descending first, then the
/// complex-conjugate pair with positive imaginary part first. e1+e2+e3 = 0.
std::array<cplx, 3> cubic_roots(const Invariants& inv);

/// Primitive half-periods of the lattice with the given invariants.
/// Degenerate configurations are flagged with infinity markers:
/// omega1 = +inf and/or Im(omega3) = +inf.
struct HalfPeriods {
    double omega1{};  ///< real half-period; +inf marker in degenerate cases
    cplx omega3{};    ///< Im > 0; (0, +inf) marks the i*inf degeneration
    double nu{};      ///< aspect: omega3 = i nu omega1 (rect.) or
                      ///< (1 + i nu) omega1 / 2 (rhombic); 0 when degenerate

    bool omega1_finite() const;
    bool omega3_finite() const;
};

HalfPeriods half_periods(const Invariants& inv);

/// Carlson's symmetric integral R_F by duplication; complex arguments are
/// accepted provided none lies on the negative real axis.
cplx carlson_rf(cplx x, cplx y, cplx z);

/// Default guard radius around lattice points for wp and zeta; roughly the
/// double-precision blowup boundary.
inline constexpr double kPoleGuard = 1e-8;

/// Weierstrass function family for one non-degenerate real lattice
/// (discriminant != 0). Evaluation reduces the argument to the cell around
/// the origin, sums the Laurent series there, and climbs back out with the
/// duplication formulas; sigma and zeta pick up their quasi-periodicity
/// factors from the reduction.
class Lattice {
  public:
    /// Throws std::invalid_argument when the discriminant vanishes (use the
    /// degenerate closed forms via the free functions instead).
    explicit Lattice(const Invariants& inv);

    struct Eval {
        cplx p, pd;     ///< wp(z), wp'(z)
        cplx zeta;
        cplx sigma;
    };

    Eval eval(cplx z, double pole_guard = kPoleGuard) const;
    std::pair<cplx, cplx> wp(cplx z, double pole_guard = kPoleGuard) const;
    cplx zeta(cplx z, double pole_guard = kPoleGuard) const;
    cplx sigma(cplx z) const;

    const Invariants& invariants() const { return inv_; }
    const HalfPeriods& periods() const { return hp_; }
    cplx eta1() const { return eta1_; }
    cplx eta3() const { return eta3_; }

    /// Distance from z to the nearest lattice point.
    double lattice_distance(cplx z) const;

  private:
    cplx reduce(cplx z, long& m, long& n) const;
    Eval eval_unreduced(cplx z) const;
    Eval eval_series(cplx z) const;

    Invariants inv_;
    HalfPeriods hp_;
    cplx eta1_, eta3_;
    std::array<double, 31> c_{};  // Laurent coefficients c_k, k = 2..30
    double series_radius_{};
    double min_period_{};
};

/// wp and wp' for arbitrary real invariants; dispatches to the degenerate
/// trigonometric/hyperbolic/rational closed forms when the discriminant
/// vanishes. Throws std::domain_error within pole_guard of a pole.
std::pair<cplx, cplx> wp(cplx z, const Invariants& inv,
                         double pole_guard = kPoleGuard);
cplx sigma(cplx z, const Invariants& inv);
cplx zeta(cplx z, const Invariants& inv, double pole_guard = kPoleGuard);

}  // namespace nullx

#endif
