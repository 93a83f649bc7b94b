#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "relqbit/spinor.hpp"
#include "support.hpp"

using namespace relqbit;
using testsupport::near;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

/// Expectation value psi* sigma psi, evaluated from the explicit Pauli
/// matrices; independent check for the Bloch components.
double pauli_expectation(const Mat2& sigma, const WeylSpinor& psi) {
    const WeylSpinor sp = sigma * psi;
    return inner(psi, sp).real();
}

}  // namespace

TEST_CASE("normalize rescales to the unit sphere") {
    const WeylSpinor a = normalize({2.0, 0.0});
    CHECK(near(a.c0, cplx{1.0, 0.0}, 1e-12));
    CHECK(near(a.c1, cplx{0.0, 0.0}, 1e-12));

    const WeylSpinor b = normalize({1.0, 1.0});
    CHECK(near(b.c0, cplx{kInvSqrt2, 0.0}, 1e-12));
    CHECK(near(b.c1, cplx{kInvSqrt2, 0.0}, 1e-12));
    CHECK(near(b.norm_sq(), 1.0, 1e-12));

    CHECK_THROWS_AS(normalize({0.0, 0.0}), std::domain_error);
}

TEST_CASE("normalize keeps the ray: output is a positive multiple") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const WeylSpinor psi = testsupport::random_spinor(rng);
        const WeylSpinor unit = normalize(psi);
        const cplx ratio = psi.c0 != cplx{} ? psi.c0 / unit.c0 : psi.c1 / unit.c1;
        CHECK(ratio.real() > 0.0);
        CHECK(near(ratio.imag(), 0.0, 1e-12 * std::abs(ratio)));
        CHECK(near(unit.norm_sq(), 1.0, 1e-12));
    }
}

TEST_CASE("ray coordinate c0/c1 with the pole at infinity") {
    CHECK(ray_coordinate({1.0, 0.0}).is_infinite());
    CHECK(near(ray_coordinate({0.0, 1.0}).value(), cplx{0.0, 0.0}, 0.0));
    CHECK(near(ray_coordinate({1.0, 1.0}).value(), cplx{1.0, 0.0}, 0.0));
    CHECK_THROWS_AS(ray_coordinate({0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(ExtendedComplex::infinity().value(), std::domain_error);
}

TEST_CASE("ray coordinate and sphere point are scale invariant") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
        const WeylSpinor psi = testsupport::random_spinor(rng);
        cplx lambda = testsupport::random_cplx(rng);
        while (std::abs(lambda) < 1e-3) lambda = testsupport::random_cplx(rng);
        const WeylSpinor scaled = lambda * psi;

        const ExtendedComplex za = ray_coordinate(psi);
        const ExtendedComplex zb = ray_coordinate(scaled);
        REQUIRE(za.is_infinite() == zb.is_infinite());
        if (!za.is_infinite()) CHECK(near(za.value(), zb.value(), 1e-10 * std::abs(za.value())));

        CHECK(near(riemann_point(psi), riemann_point(scaled), 1e-12));
    }
}

TEST_CASE("sphere points of the basis states and the circular state") {
    CHECK(near(riemann_point({1.0, 0.0}), Vec3{0.0, 0.0, 1.0}, 1e-12));
    CHECK(near(riemann_point({0.0, 1.0}), Vec3{0.0, 0.0, -1.0}, 1e-12));

    // (1, i)/sqrt(2) lands on the +y axis.
    const WeylSpinor circ{kInvSqrt2, cplx{0.0, kInvSqrt2}};
    CHECK(near(riemann_point(circ), Vec3{0.0, 1.0, 0.0}, 1e-12));

    // Same point from the Pauli expectation values.
    CHECK(near(pauli_expectation(pauli_x(), circ), 0.0, 1e-12));
    CHECK(near(pauli_expectation(pauli_y(), circ), 1.0, 1e-12));
    CHECK(near(pauli_expectation(pauli_z(), circ), 0.0, 1e-12));
}

TEST_CASE("sphere point is unit length and consistent with the ray coordinate") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 500; ++i) {
        const WeylSpinor psi = testsupport::random_spinor(rng);
        const Vec3 p = riemann_point(psi);
        CHECK(near(p.norm(), 1.0, 1e-12));

        // zeta = (x - iy)/(1 - z) away from the north pole.
        if (p.z < 0.999) {
            const cplx zeta = cplx{p.x, -p.y} / (1.0 - p.z);
            CHECK(near(zeta, ray_coordinate(psi).value(), 1e-9 * (1.0 + std::abs(zeta))));
        }
    }
}

TEST_CASE("extended Bloch vector of reference states") {
    CHECK(near(bloch_extended({1.0, 0.0}), FourVector{1.0, 0.0, 0.0, 1.0}, 1e-12));
    CHECK(near(bloch_extended({kInvSqrt2, kInvSqrt2}), FourVector{1.0, 1.0, 0.0, 0.0}, 1e-12));
    // Quadratic in the amplitudes: doubling the state quadruples the vector.
    CHECK(near(bloch_extended({2.0, 0.0}), FourVector{4.0, 0.0, 0.0, 4.0}, 1e-12));
    CHECK_THROWS_AS(bloch_extended({0.0, 0.0}), std::domain_error);
}

TEST_CASE("extended Bloch vector is null") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 1000; ++i) {
        const FourVector v = bloch_extended(testsupport::random_spinor(rng));
        CHECK(std::abs(v.t * v.t - v.x * v.x - v.y * v.y - v.z * v.z) <=
              1e-10 * std::max(1.0, v.t * v.t));
    }
}

TEST_CASE("V matrix is twice the outer product") {
    CHECK(near(v_matrix({1.0, 0.0}).matrix(), Mat2{2.0, 0.0, 0.0, 0.0}, 1e-12));
    CHECK(near(v_matrix({0.0, 0.0}).matrix(), Mat2{}, 0.0));  // zero input allowed here
    CHECK(near(v_matrix({kInvSqrt2, kInvSqrt2}).matrix(), Mat2{1.0, 1.0, 1.0, 1.0}, 1e-12));
}

TEST_CASE("V matrix is rank deficient: det vanishes") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 500; ++i) {
        const Mat2 v = v_matrix(testsupport::random_spinor(rng)).matrix();
        CHECK(std::abs(v.det()) <= 1e-10 * std::norm(v.trace()) + 1e-14);
    }
}

TEST_CASE("Pauli decomposition of reference matrices") {
    CHECK(near(pauli_decompose(HermitianMatrix2{Mat2::identity()}),
               FourVector{1.0, 0.0, 0.0, 0.0}, 1e-12));
    CHECK(near(pauli_decompose(HermitianMatrix2{pauli_z()}), FourVector{0.0, 0.0, 0.0, 1.0},
               1e-12));
    CHECK(near(pauli_decompose(v_matrix({1.0, 0.0})), FourVector{1.0, 0.0, 0.0, 1.0}, 1e-12));
    CHECK_THROWS_AS(HermitianMatrix2{Mat2{0.0, 1.0, 0.0, 0.0}}, std::invalid_argument);
}

TEST_CASE("Pauli composition of reference vectors") {
    CHECK(near(pauli_compose({1.0, 0.0, 0.0, 0.0}).matrix(), Mat2::identity(), 0.0));
    CHECK(near(pauli_compose({0.0, 1.0, 0.0, 0.0}).matrix(), pauli_x(), 0.0));
    CHECK(near(pauli_compose({1.0, 0.0, 0.0, 1.0}).matrix(), Mat2{2.0, 0.0, 0.0, 0.0}, 0.0));
}

TEST_CASE("compose and decompose invert each other") {
    std::mt19937_64 rng(16);
    for (int i = 0; i < 1000; ++i) {
        const FourVector v = testsupport::random_four_vector(rng);
        CHECK(near(pauli_decompose(pauli_compose(v)), v, 1e-12));

        const HermitianMatrix2 h = testsupport::random_hermitian(rng);
        CHECK(near(pauli_compose(pauli_decompose(h)).matrix(), h.matrix(), 1e-12));
    }
}

TEST_CASE("decomposing the V matrix recovers the extended Bloch vector") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        const WeylSpinor psi = testsupport::random_spinor(rng);
        CHECK(near(pauli_decompose(v_matrix(psi)), bloch_extended(psi), 1e-12));
    }
}

TEST_CASE("Bloch components are the Pauli expectation values") {
    std::mt19937_64 rng(18);
    for (int i = 0; i < 500; ++i) {
        const WeylSpinor psi = testsupport::random_unit_spinor(rng);
        const FourVector v = bloch_extended(psi);
        CHECK(near(v.x, pauli_expectation(pauli_x(), psi), 1e-12));
        CHECK(near(v.y, pauli_expectation(pauli_y(), psi), 1e-12));
        CHECK(near(v.z, pauli_expectation(pauli_z(), psi), 1e-12));
        CHECK(near(v.t, 1.0, 1e-12));
    }
}

TEST_CASE("sphere point is the Bloch vector rescaled by T") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 500; ++i) {
        const WeylSpinor psi = testsupport::random_spinor(rng);
        const FourVector v = bloch_extended(psi);
        const Vec3 p = riemann_point(psi);
        CHECK(near(p, {v.x / v.t, v.y / v.t, v.z / v.t}, 1e-12));
    }
}
