#pragma once

#include <cmath>
#include <random>

#include "relqbit/dirac.hpp"
#include "relqbit/lorentz.hpp"
#include "relqbit/spinor.hpp"

namespace testsupport {

using relqbit::Bispinor;
using relqbit::cplx;
using relqbit::FourVector;
using relqbit::Mat2;
using relqbit::SpinMatrix;
using relqbit::Vec3;
using relqbit::WeylSpinor;

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool near(const cplx& a, const cplx& b, double tol) { return std::abs(a - b) <= tol; }

inline bool near(const FourVector& a, const FourVector& b, double tol) {
    return near(a.t, b.t, tol) && near(a.x, b.x, tol) && near(a.y, b.y, tol) &&
           near(a.z, b.z, tol);
}

inline bool near(const Vec3& a, const Vec3& b, double tol) {
    return near(a.x, b.x, tol) && near(a.y, b.y, tol) && near(a.z, b.z, tol);
}

inline bool near(const Mat2& a, const Mat2& b, double tol) {
    return a.max_abs_diff(b) <= tol;
}

inline cplx random_cplx(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    return {gauss(rng), gauss(rng)};
}

inline WeylSpinor random_spinor(std::mt19937_64& rng) {
    for (;;) {
        const WeylSpinor psi{random_cplx(rng), random_cplx(rng)};
        if (psi.norm_sq() > 1e-6) return psi;
    }
}

inline WeylSpinor random_unit_spinor(std::mt19937_64& rng) {
    return relqbit::normalize(random_spinor(rng));
}

inline Bispinor random_bispinor(std::mt19937_64& rng) {
    return {random_spinor(rng), random_spinor(rng)};
}

inline Vec3 random_axis(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (;;) {
        const Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
        const double n = v.norm();
        if (n > 1e-3) return (1.0 / n) * v;
    }
}

inline FourVector random_four_vector(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    return {gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
}

inline SpinMatrix random_rotation(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    return relqbit::su2_rotation(random_axis(rng), angle(rng));
}

inline SpinMatrix random_boost(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> rapidity(-2.0, 2.0);
    return relqbit::sl2_boost(random_axis(rng), rapidity(rng));
}

/// Random element of SL(2,C) with entries of moderate size.
inline SpinMatrix random_unit_det(std::mt19937_64& rng) {
    for (;;) {
        const Mat2 m{random_cplx(rng), random_cplx(rng), random_cplx(rng), random_cplx(rng)};
        if (std::abs(m.det()) > 0.3) return SpinMatrix::unit_determinant(m);
    }
}

/// Mix of rotations, boosts and generic unit-determinant matrices.
inline SpinMatrix random_spin_matrix(std::mt19937_64& rng) {
    switch (rng() % 3) {
        case 0: return random_rotation(rng);
        case 1: return random_boost(rng);
        default: return random_unit_det(rng);
    }
}

inline relqbit::HermitianMatrix2 random_hermitian(std::mt19937_64& rng) {
    return relqbit::pauli_compose(random_four_vector(rng));
}

}  // namespace testsupport
