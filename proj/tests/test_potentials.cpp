#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "nullx/potentials.hpp"

using namespace nullx;

namespace {
std::mt19937 rng(7152026);

double sample_point(const Potential& p, double t01) {
    const PotentialCase& c = p.potential_case();
    const double lo = std::isinf(c.domain_lo) ? -1.0 : c.domain_lo;
    const double hi = std::isinf(c.domain_hi) ? lo + 2.0 : c.domain_hi;
    return lo + (hi - lo) * (0.1 + 0.8 * t01);
}
}  // namespace

TEST_CASE("case tags follow the discriminant") {
    CHECK(classify({0, 0}).tag == CaseTag::RATIONAL);
    CHECK(classify({12, -8}).tag == CaseTag::TANH_DEGEN);
    CHECK(classify({12, 8}).tag == CaseTag::TAN_DEGEN);
    CHECK(classify({4, 0}).tag == CaseTag::WP3_NEG_DISC);
    CHECK(classify({4, 0}, Branch::WP).tag == CaseTag::WP_NEG_DISC);
    CHECK(classify({0, 4}).tag == CaseTag::WP_POS_DISC);
    CHECK(classify({-4, 0}).tag == CaseTag::WP_POS_DISC);
    CHECK_THROWS_AS((void)classify({0, 4}, Branch::WP3),
                    std::invalid_argument);
    // Degenerate parameter a with g3 = -8a^3.
    CHECK(classify({12, -8}).a == doctest::Approx(1.0));
    CHECK(classify({12, 8}).a == doctest::Approx(-1.0));
}

TEST_CASE("domains per case") {
    CHECK(classify({0, 0}).domain_lo == 0.0);
    CHECK(std::isinf(classify({0, 0}).domain_hi));
    CHECK(std::isinf(classify({12, -8}).domain_lo));
    const PotentialCase tan_case = classify({12, 8});
    CHECK(tan_case.domain_hi ==
          doctest::Approx(std::numbers::pi / (2.0 * std::sqrt(3.0))));
    const PotentialCase wp_case = classify({4, 0}, Branch::WP);
    CHECK(wp_case.domain_lo == 0.0);
    CHECK(wp_case.domain_hi == doctest::Approx(2.0 * 1.31102877714606));
}

TEST_CASE("curvature <-> reduced curvature is an involution") {
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int t = 0; t < 100; ++t) {
        const ModelParams params{u(rng), (t % 2) ? 1 : -1};
        const double k = u(rng);
        CHECK(k_from_h(h_from_k(k, params), params) ==
              doctest::Approx(k).epsilon(1e-14));
    }
}

TEST_CASE("every case satisfies its first integral and jet relations") {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (const Invariants inv :
         {Invariants{0, 0}, {12, -8}, {12, 8}, {4, 0}, {0, 4}, {5, -2},
          {-4, 0}}) {
        for (Branch b : {Branch::AUTO, Branch::WP}) {
            if (b == Branch::WP && discriminant(inv) >= 0.0) continue;
            const Potential p(inv, b);
            for (int t = 0; t < 60; ++t) {
                const double s = sample_point(p, u(rng));
                Jet3 jet;
                try {
                    jet = p.eval(s);
                } catch (const std::domain_error&) {
                    continue;
                }
                const double scale = 1.0 + std::pow(std::abs(jet.h), 3.0);
                const double fi = jet.h1 * jet.h1 -
                                  (4.0 * std::pow(jet.h, 3.0) -
                                   inv.g2 * jet.h - inv.g3);
                CHECK(std::abs(fi) / scale < 1e-8);
                CHECK(jet.h2 ==
                      doctest::Approx(6.0 * jet.h * jet.h - inv.g2 / 2.0));
                CHECK(jet.h3() == doctest::Approx(12.0 * jet.h * jet.h1));
            }
        }
    }
}

TEST_CASE("third derivative by finite differences of the exact h''") {
    for (const Invariants inv :
         {Invariants{0, 0}, {12, -8}, {4, 0}, {5, -2}}) {
        const Potential p(inv);
        const double d = 1e-3;
        for (double t : {0.25, 0.5, 0.75}) {
            const double s = sample_point(p, t);
            const Jet3 jet = p.eval(s);
            const double h3 =
                (-p.eval(s + 2 * d).h2 + 8.0 * p.eval(s + d).h2 -
                 8.0 * p.eval(s - d).h2 + p.eval(s - 2 * d).h2) /
                (12.0 * d);
            CHECK(std::abs(h3 - jet.h3()) /
                      (1.0 + std::abs(jet.h3())) < 1e-5);
        }
    }
}

TEST_CASE("invariants recovered from any jet on the trajectory") {
    for (const Invariants inv : {Invariants{0, 0}, {12, -8}, {5, -2}}) {
        const Potential p(inv);
        for (double t : {0.2, 0.5, 0.8}) {
            const Invariants got = invariants_from_jet(p.eval(sample_point(p, t)));
            CHECK(got.g2 == doctest::Approx(inv.g2).epsilon(1e-9));
            CHECK(got.g3 == doctest::Approx(inv.g3).epsilon(1e-9));
        }
    }
}

TEST_CASE("representatives are even about their centering point") {
    // Bounded branches are centered at s = 0.
    for (const Invariants inv : {Invariants{12, -8}, {4, 0}}) {
        const Potential p(inv);
        CHECK(p.eval(0.4).h == doctest::Approx(p.eval(-0.4).h));
        CHECK(p.eval(0.4).h1 == doctest::Approx(-p.eval(-0.4).h1));
    }
}

TEST_CASE("domain and pole guards raise") {
    const Potential rational({0, 0});
    CHECK_THROWS_AS((void)rational.eval(-0.5), std::domain_error);
    CHECK_THROWS_AS((void)rational.eval(1e-8), std::domain_error);
    const Potential wp_branch({4, 0}, Branch::WP);
    CHECK_THROWS_AS((void)wp_branch.eval(1e-8), std::domain_error);
    const Potential tan_p({12, 8});
    CHECK_THROWS_AS((void)tan_p.eval(tan_p.potential_case().domain_hi - 1e-9),
                    std::domain_error);
}

TEST_CASE("constant potential evaluates to a frozen jet") {
    const Potential p = Potential::constant(1.5);
    CHECK(p.is_constant());
    const Jet3 jet = p.eval(17.0);
    CHECK(jet.h == 1.5);
    CHECK(jet.h1 == 0.0);
    CHECK(jet.h2 == 0.0);
    CHECK(p.invariants().g2 == doctest::Approx(27.0));
    CHECK(p.invariants().g3 == doctest::Approx(-27.0));
}
