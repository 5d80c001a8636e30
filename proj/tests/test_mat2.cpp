#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "nullx/mat2.hpp"

using namespace nullx;

namespace {
std::mt19937 rng(20260824);

ComplexMat2 random_mat() {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    auto c = [&] { return cplx(u(rng), u(rng)); };
    return {c(), c(), c(), c()};
}

ComplexMat2 random_sl2() {
    // Fix the last entry so the determinant is exactly one.
    ComplexMat2 m = random_mat();
    if (std::abs(m.a11) < 0.1) m.a11 += 1.0;
    m.a22 = (1.0 + m.a12 * m.a21) / m.a11;
    return m;
}
}  // namespace

TEST_CASE("determinant, trace and inverse") {
    for (int t = 0; t < 50; ++t) {
        const ComplexMat2 m = random_sl2();
        CHECK(std::abs(det2(m) - 1.0) < 1e-12);
        const ComplexMat2 p = m * inverse(m);
        CHECK(frobenius_norm(p - ComplexMat2::identity()) < 1e-12);
        CHECK(std::abs(trace(m) - (m.a11 + m.a22)) == 0.0);
    }
    const ComplexMat2 singular{1.0, 2.0, 2.0, 4.0};
    CHECK_THROWS_AS((void)inverse(singular), std::domain_error);
}

TEST_CASE("structural predicates") {
    CHECK(is_unimodular(ComplexMat2::identity()));
    CHECK(is_hermitian(base_point_J()));
    CHECK(is_traceless(base_point_J()));
    CHECK_FALSE(is_unimodular(2.0 * ComplexMat2::identity()));
    CHECK_FALSE(is_hermitian({cplx(0, 1), 0.0, 0.0, 0.0}));
}

TEST_CASE("base point lies on the quadric") {
    CHECK(std::abs(det2(base_point_J()) - cplx(-1.0)) < 1e-15);
    CHECK(lorentz_inner(base_point_J(), base_point_J()) ==
          doctest::Approx(1.0));
}

TEST_CASE("projection lands on the quadric and is equivariant") {
    for (int t = 0; t < 50; ++t) {
        const ComplexMat2 a = random_sl2();
        const ComplexMat2 x = project_to_ds(a);
        CHECK(is_hermitian(x, 1e-10));
        CHECK(lorentz_inner(x, x) == doctest::Approx(1.0).epsilon(1e-9));
        // pi(ab) = a pi(b) a^*
        const ComplexMat2 b = random_sl2();
        const ComplexMat2 lhs = project_to_ds(a * b);
        const ComplexMat2 rhs = a * project_to_ds(b) * adjoint(a);
        CHECK(frobenius_norm(lhs - rhs) < 1e-10);
    }
    CHECK_THROWS_AS((void)project_to_ds(2.0 * ComplexMat2::identity()),
                    std::invalid_argument);
}

TEST_CASE("coordinate chart round-trips and matches the inner product") {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int t = 0; t < 50; ++t) {
        const MinkowskiVec v{u(rng), u(rng), u(rng), u(rng)};
        const ComplexMat2 x = hermitian_from_coords(v);
        CHECK(is_hermitian(x));
        const MinkowskiVec w = minkowski_coords(x);
        CHECK(w.x0 == doctest::Approx(v.x0).epsilon(1e-14));
        CHECK(w.x1 == doctest::Approx(v.x1).epsilon(1e-14));
        CHECK(w.x2 == doctest::Approx(v.x2).epsilon(1e-14));
        CHECK(w.x3 == doctest::Approx(v.x3).epsilon(1e-14));
        // <X,X> = -x0^2 + x1^2 + x2^2 + x3^2
        const double q =
            -v.x0 * v.x0 + v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3;
        CHECK(lorentz_inner(x, x) == doctest::Approx(q).epsilon(1e-12));
    }
    CHECK_THROWS_AS((void)minkowski_coords({cplx(0, 1), 0.0, 0.0, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("commutator is a Lie bracket") {
    const ComplexMat2 a = random_mat(), b = random_mat(), c = random_mat();
    CHECK(frobenius_norm(commutator(a, b) + commutator(b, a)) < 1e-12);
    const ComplexMat2 jacobi = commutator(a, commutator(b, c)) +
                               commutator(b, commutator(c, a)) +
                               commutator(c, commutator(a, b));
    CHECK(frobenius_norm(jacobi) < 1e-11);
    CHECK(std::abs(trace(commutator(a, b))) < 1e-12);
}
