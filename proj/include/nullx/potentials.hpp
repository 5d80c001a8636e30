#ifndef NULLX_POTENTIALS_HPP
#define NULLX_POTENTIALS_HPP

#include <memory>

#include "nullx/weierstrass.hpp"

namespace nullx {

/// Lagrange multiplier m and spin sign eps of the action functional.
struct ModelParams {
    double m{};
    int eps{1};  ///< +1 or -1
};

/// Curvature <-> reduced curvature, h = (eps/2)(k - m/3).
double k_from_h(double h, const ModelParams& params);
double h_from_k(double k, const ModelParams& params);

enum class CaseTag {
    WP_NEG_DISC,   ///< h = wp(s), s in (0, 2 omega1), discriminant < 0
    WP3_NEG_DISC,  ///< h = wp(s + omega3), s in R, discriminant < 0
    WP_POS_DISC,   ///< h = wp(s), s in (0, 2 omega1), discriminant > 0
    TAN_DEGEN,     ///< h = -3a tan^2(sqrt(-3a) s) - 2a, bounded interval
    TANH_DEGEN,    ///< h = 3a tanh^2(sqrt(3a) s) - 2a, s in R
    RATIONAL,      ///< h = s^-2, s in (0, +inf)
};

const char* to_string(CaseTag tag);

enum class Branch { AUTO, WP, WP3 };

/// Resolved case of the classification: tag, the parameter a of the
/// degenerate forms (g3 = -8a^3), and the open domain interval.
struct PotentialCase {
    CaseTag tag{};
    double a{};          ///< only meaningful for TAN_DEGEN / TANH_DEGEN
    double domain_lo{};  ///< -inf allowed
    double domain_hi{};  ///< +inf allowed
};

/// Picks the unique case for the given invariants. For discriminant < 0 the
/// branch flag selects between wp on (0, 2 omega1) and the bounded real
/// branch wp(. + omega3) on R; AUTO prefers the bounded branch. Throws
/// std::invalid_argument when branch WP3 is requested and the discriminant
/// is >= 0.
PotentialCase classify(const Invariants& inv, Branch branch = Branch::AUTO);

/// 2-jet of the reduced curvature: (h, h', h''). Along a potential
/// h'' = 6h^2 - g2/2 and h''' = 12 h h'.
struct Jet3 {
    double h{}, h1{}, h2{};
    double h3() const { return 12.0 * h * h1; }
};

/// Recovers the analytic invariants from a jet:
///   g2 = 12 h^2 - 2 h'',  g3 = 4 h^3 - g2 h - (h')^2.
Invariants invariants_from_jet(const Jet3& jet);

/// A classified real solution of (h')^2 = 4h^3 - g2 h - g3, evaluable with
/// its derivatives on the open domain of its case. The representative is
/// fixed with the pole at s = 0 (wp cases) or the minimum at s = 0 (bounded
/// cases). Immutable after construction.
class Potential {
  public:
    explicit Potential(const Invariants& inv, Branch branch = Branch::AUTO);

    /// Constant solution h == h0 of the Euler-Lagrange equation (a null
    /// helix once a frame is attached). Its invariants are the degenerate
    /// pair (12 h0^2, -8 h0^3).
    static Potential constant(double h0);

    /// Throws std::domain_error outside the domain or within pole_guard of
    /// a pole of h.
    Jet3 eval(double s, double pole_guard = 1e-6) const;

    const Invariants& invariants() const { return inv_; }
    const PotentialCase& potential_case() const { return case_; }
    const HalfPeriods& periods() const { return periods_; }
    bool is_constant() const { return constant_; }

    /// Shift delta with h(s) = wp(s + delta) as meromorphic functions; used
    /// by the closed-form integration to move between the potential and the
    /// wp picture.
    cplx wp_shift() const { return shift_; }

    /// Underlying lattice engine; null for degenerate invariants.
    std::shared_ptr<const Lattice> lattice() const { return lattice_; }

  private:
    Potential() = default;

    Invariants inv_{};
    PotentialCase case_{};
    HalfPeriods periods_{};
    cplx shift_{};
    std::shared_ptr<const Lattice> lattice_;
    bool constant_ = false;
    double const_h_ = 0.0;
};

}  // namespace nullx

#endif
